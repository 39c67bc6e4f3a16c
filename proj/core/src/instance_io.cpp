#include "qr/instance_io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace qr {

namespace {

void write_matrix(std::ostream& out, const char* name, const Matrix& m) {
  out << name << "\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ' ';
      out << m(i, j);
    }
    out << '\n';
  }
}

Matrix read_matrix(std::istream& in, const std::string& expected_name, int n) {
  std::string name;
  if (!(in >> name) || name != expected_name)
    throw IoError("expected matrix '" + expected_name + "', got '" + name +
                  "'");
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(in >> m(i, j)))
        throw IoError("truncated matrix '" + expected_name + "'");
  const double tol = 1e-10 * (1.0 + m.cwiseAbs().maxCoeff());
  if ((m - m.transpose().eval()).cwiseAbs().maxCoeff() > tol)
    throw IoError("matrix '" + expected_name + "' is not symmetric");
  return m;
}

}  // namespace

void save_instance(const QrProblem& p, std::ostream& out) {
  out << std::setprecision(17);
  out << "n " << p.n << "\n";
  out << "alpha " << p.alpha << "\n";
  out << "beta " << p.beta << "\n";
  write_matrix(out, "A", p.A.mat());
  write_matrix(out, "B", p.B.mat());
  write_matrix(out, "C", p.C.mat());
}

void save_instance(const QrProblem& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  save_instance(p, out);
  if (!out) throw IoError("failed writing '" + path + "'");
}

QrProblem load_instance(std::istream& in) {
  std::string key;
  int n = 0;
  double alpha = 0.0, beta = 0.0;
  if (!(in >> key) || key != "n" || !(in >> n))
    throw IoError("expected 'n <dimension>'");
  if (!(in >> key) || key != "alpha" || !(in >> alpha))
    throw IoError("expected 'alpha <value>'");
  if (!(in >> key) || key != "beta" || !(in >> beta))
    throw IoError("expected 'beta <value>'");
  if (n < 1) throw IoError("invalid dimension " + std::to_string(n));
  Matrix A = read_matrix(in, "A", n);
  Matrix B = read_matrix(in, "B", n);
  Matrix C = read_matrix(in, "C", n);
  return validate(SymMatrix(std::move(A)), SymMatrix(std::move(B)),
                  SymMatrix(std::move(C)), alpha, beta);
}

QrProblem load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return load_instance(in);
}

void save_trace(const SolveResult& result, std::ostream& out) {
  out << std::setprecision(17);
  out << "k,s,t,f,gamma,gap,q_xhat,lower_bound,delta_k\n";
  for (const IterationRecord& r : result.trace) {
    out << r.k << ',' << r.s << ',' << r.t << ',' << r.f << ',' << r.gamma
        << ',' << r.gap << ',' << r.q_xhat << ',' << r.lower_bound << ','
        << r.delta_k << '\n';
  }
}

void save_trace(const SolveResult& result, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  save_trace(result, out);
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace qr
