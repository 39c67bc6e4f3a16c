// Command-line front end: instance generation, solving, oracle checking and
// benchmark sweeps.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qr/applications.hpp"
#include "qr/instance_io.hpp"
#include "qr/oracle.hpp"
#include "qr/solver.hpp"

namespace {

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

qr::Stepsize parse_method(const std::string& name) {
  if (name == "dim") return qr::Stepsize::DIMINISHING;
  if (name == "exact") return qr::Stepsize::EXACT_LINE_SEARCH;
  throw qr::ValidationError("unknown method '" + name +
                            "' (expected 'dim' or 'exact')");
}

// Seed specs: "1..5" (inclusive range) or "1,2,7".
std::vector<std::uint64_t> parse_seeds(const std::string& spec) {
  std::vector<std::uint64_t> seeds;
  const auto dots = spec.find("..");
  if (dots != std::string::npos) {
    const std::uint64_t lo = std::stoull(spec.substr(0, dots));
    const std::uint64_t hi = std::stoull(spec.substr(dots + 2));
    if (hi < lo) throw qr::ValidationError("empty seed range '" + spec + "'");
    for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    return seeds;
  }
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) seeds.push_back(std::stoull(item));
  }
  if (seeds.empty()) throw qr::ValidationError("no seeds in '" + spec + "'");
  return seeds;
}

int bench_threads(std::size_t jobs) {
  unsigned n = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("QR_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) n = static_cast<unsigned>(v);
  }
  if (n < 1) n = 1;
  return static_cast<int>(std::min<std::size_t>(n, jobs));
}

struct BenchRow {
  int n;
  std::uint64_t seed;
  std::string method;
  double time_s = 0.0;
  int iterations = 0;
  double value = 0.0;
  double gap = 0.0;
  double lower_bound = 0.0;
  double last_gamma = 0.0;
  std::string status = "ok";
};

int run_gen(int n, std::uint64_t seed, double alpha, double beta,
            const std::string& out_path) {
  const qr::QrProblem p = qr::random_instance(n, seed, alpha, beta);
  qr::save_instance(p, out_path);
  std::cout << "wrote " << out_path << " (n=" << n << ", seed=" << seed
            << ")\n";
  return 0;
}

int run_solve(const std::string& path, const std::string& method, double tol,
              int max_iter, const std::string& trace_out) {
  const qr::QrProblem p = qr::load_instance(path);
  qr::SolverConfig config;
  config.stepsize = parse_method(method);
  config.gap_tol = tol;
  config.max_iter = max_iter;
  Timer timer;
  const qr::SolveResult res = qr::solve(p, config);
  const double elapsed = timer.seconds();
  std::cout << std::setprecision(10);
  std::cout << "value        " << res.value_best << "\n";
  std::cout << "lower_bound  " << res.lower_bound_best << "\n";
  std::cout << "gap          " << std::scientific << res.final_gap
            << std::defaultfloat << "\n";
  std::cout << "iterations   " << res.iterations << "\n";
  std::cout << "terminated   "
            << (res.terminated_by == qr::Termination::GAP ? "GAP" : "MAX_ITER")
            << "\n";
  std::cout << "time_s       " << elapsed << "\n";
  if (!trace_out.empty()) {
    qr::save_trace(res, trace_out);
    std::cout << "trace        " << trace_out << " (" << res.trace.size()
              << " rows)\n";
  }
  return 0;
}

int run_bench(const std::vector<int>& n_list, const std::string& seed_spec,
              const std::string& methods_csv, double tol, int max_iter,
              double alpha, double beta, const std::string& out_csv) {
  const std::vector<std::uint64_t> seeds = parse_seeds(seed_spec);
  std::vector<std::string> methods;
  {
    std::stringstream ss(methods_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      parse_method(item);  // validate early
      methods.push_back(item);
    }
  }
  if (methods.empty()) throw qr::ValidationError("no methods given");

  std::vector<BenchRow> rows;
  for (int n : n_list)
    for (std::uint64_t seed : seeds)
      for (const std::string& m : methods)
        rows.push_back(BenchRow{n, seed, m});

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= rows.size()) return;
      BenchRow& row = rows[i];
      try {
        const qr::QrProblem p =
            qr::random_instance(row.n, row.seed, alpha, beta);
        qr::SolverConfig config;
        config.stepsize = parse_method(row.method);
        config.gap_tol = tol;
        config.max_iter = max_iter;
        config.record_trace = false;
        Timer timer;
        const qr::SolveResult res = qr::solve(p, config);
        row.time_s = timer.seconds();
        row.iterations = res.iterations;
        row.value = res.value_best;
        row.gap = res.final_gap;
        row.lower_bound = res.lower_bound_best;
        row.last_gamma = res.last_step_gamma;
      } catch (const std::exception& e) {
        row.status = std::string("error: ") + e.what();
      }
    }
  };
  const int nthreads = bench_threads(rows.size());
  std::vector<std::thread> pool;
  for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();

  std::ofstream out(out_csv);
  if (!out) throw qr::IoError("cannot open '" + out_csv + "' for writing");
  out << std::setprecision(10);
  out << "n,seed,method,time_s,iterations,value,gap,lower_bound,last_gamma,"
         "status\n";
  for (const BenchRow& r : rows) {
    out << r.n << ',' << r.seed << ',' << r.method << ',' << r.time_s << ','
        << r.iterations << ',' << r.value << ',' << std::scientific << r.gap
        << std::defaultfloat << ',' << r.lower_bound << ',' << r.last_gamma
        << ',' << r.status << '\n';
  }
  // Per-n averages over seeds, mirroring the per-dimension summary rows.
  for (int n : n_list) {
    for (const std::string& m : methods) {
      double time_s = 0, value = 0, gap = 0, lb = 0, gamma = 0;
      double iters = 0;
      int count = 0;
      for (const BenchRow& r : rows) {
        if (r.n == n && r.method == m && r.status == "ok") {
          time_s += r.time_s;
          iters += r.iterations;
          value += r.value;
          gap += r.gap;
          lb += r.lower_bound;
          gamma += r.last_gamma;
          ++count;
        }
      }
      if (count == 0) continue;
      out << n << ",avg," << m << ',' << time_s / count << ','
          << iters / count << ',' << value / count << ',' << std::scientific
          << gap / count << std::defaultfloat << ',' << lb / count << ','
          << gamma / count << ",ok\n";
    }
  }
  if (!out) throw qr::IoError("failed writing '" + out_csv + "'");
  std::cout << "wrote " << out_csv << " (" << rows.size()
            << " rows + averages)\n";
  return 0;
}

int run_check(const std::string& path, int num_dirs, std::uint64_t seed,
              int max_iter, int max_n) {
  const qr::QrProblem p = qr::load_instance(path);
  if (p.n > max_n)
    throw qr::OracleDimensionLimit(
        "instance dimension " + std::to_string(p.n) +
        " exceeds the oracle limit " + std::to_string(max_n) +
        " (direction sampling degrades in high dimension)");
  const qr::OracleResult oracle = qr::brute_force(p, num_dirs, seed);
  qr::SolverConfig config;
  config.gap_tol = 1e-8;
  config.max_iter = max_iter;
  const qr::SolveResult res = qr::solve(p, config);

  const double tol = 1e-4 * (1.0 + std::abs(oracle.value));
  const bool pass = res.lower_bound_best - tol <= oracle.value &&
                    oracle.value <= res.value_best + tol;
  std::cout << std::setprecision(10);
  std::cout << "oracle_value  " << oracle.value << "\n";
  std::cout << "solver_value  " << res.value_best << "\n";
  std::cout << "lower_bound   " << res.lower_bound_best << "\n";
  std::cout << "cert_gap      " << res.value_best - res.lower_bound_best
            << "\n";
  std::cout << "verdict       " << (pass ? "PASS" : "FAIL") << "\n";
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Global solver for x'Ax - sqrt(x'Bx) over an elliptic annulus"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random instance file");
  int gen_n = 100;
  std::uint64_t gen_seed = 1;
  double gen_alpha = 1.0, gen_beta = 10.0;
  std::string gen_out = "instance.txt";
  gen->add_option("--n", gen_n, "Dimension (>= 3)")->required();
  gen->add_option("--seed", gen_seed, "RNG seed");
  gen->add_option("--alpha", gen_alpha, "Lower constraint bound");
  gen->add_option("--beta", gen_beta, "Upper constraint bound");
  gen->add_option("--out", gen_out, "Output path");

  // solve
  auto* solve = app.add_subcommand("solve", "Solve an instance file");
  std::string solve_path, solve_method = "exact", solve_trace;
  double solve_tol = 1e-6;
  int solve_max_iter = 2000;
  solve->add_option("instance", solve_path, "Instance file")->required();
  solve->add_option("--method", solve_method, "Stepsize: dim | exact");
  solve->add_option("--tol", solve_tol, "Frank-Wolfe gap tolerance");
  solve->add_option("--max-iter", solve_max_iter, "Iteration limit");
  solve->add_option("--trace", solve_trace,
                    "Write per-iteration CSV (columns "
                    "k,s,t,f,gamma,gap,q_xhat,lower_bound,delta_k)");

  // bench
  auto* bench = app.add_subcommand(
      "bench", "Benchmark sweep over random instances; CSV columns "
               "n,seed,method,time_s,iterations,value,gap,lower_bound,"
               "last_gamma,status, plus per-n 'avg' rows");
  std::vector<int> bench_n{100};
  std::string bench_seeds = "1..5", bench_methods = "dim,exact";
  std::string bench_out = "bench.csv";
  double bench_tol = 1e-6, bench_alpha = 1.0, bench_beta = 10.0;
  int bench_max_iter = 2000;
  bench->add_option("--n", bench_n, "Dimensions (repeat or comma list)")
      ->delimiter(',');
  bench->add_option("--seeds", bench_seeds, "Seeds: 'a..b' or comma list");
  bench->add_option("--methods", bench_methods, "Comma list of dim,exact");
  bench->add_option("--tol", bench_tol, "Gap tolerance");
  bench->add_option("--max-iter", bench_max_iter, "Iteration limit");
  bench->add_option("--alpha", bench_alpha, "Lower constraint bound");
  bench->add_option("--beta", bench_beta, "Upper constraint bound");
  bench->add_option("--out", bench_out, "Output CSV path");

  // check
  auto* check = app.add_subcommand("check", "Compare solver against the "
                                            "brute-force radial oracle");
  std::string check_path;
  int check_dirs = 200000, check_max_iter = 2000, check_max_n = 16;
  std::uint64_t check_seed = 1;
  check->add_option("instance", check_path, "Instance file")->required();
  check->add_option("--num-dirs", check_dirs, "Sampled directions");
  check->add_option("--seed", check_seed, "Oracle RNG seed");
  check->add_option("--max-iter", check_max_iter, "Solver iteration limit");
  check->add_option("--max-n", check_max_n, "Oracle dimension limit");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return run_gen(gen_n, gen_seed, gen_alpha, gen_beta,
                                      gen_out);
    if (solve->parsed())
      return run_solve(solve_path, solve_method, solve_tol, solve_max_iter,
                       solve_trace);
    if (bench->parsed())
      return run_bench(bench_n, bench_seeds, bench_methods, bench_tol,
                       bench_max_iter, bench_alpha, bench_beta, bench_out);
    if (check->parsed())
      return run_check(check_path, check_dirs, check_seed, check_max_iter,
                       check_max_n);
  } catch (const qr::IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
