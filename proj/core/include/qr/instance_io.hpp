#pragma once

#include <iosfwd>
#include <string>

#include "qr/problem.hpp"
#include "qr/solver.hpp"

namespace qr {

/// Text instance format:
///
///   n <int>
///   alpha <real>
///   beta <real>
///   A
///   <n*n numbers, row-major>
///   B
///   ...
///   C
///   ...
///
/// Numbers are written with 17 significant digits so a save/load round trip
/// reproduces every entry bitwise. On load, symmetry is checked with
/// absolute tolerance 1e-10 * (1 + max|entry|) and then enforced exactly.
void save_instance(const QrProblem& p, const std::string& path);
void save_instance(const QrProblem& p, std::ostream& out);

QrProblem load_instance(const std::string& path);
QrProblem load_instance(std::istream& in);

/// Writes the per-iteration trace as CSV with header
/// k,s,t,f,gamma,gap,q_xhat,lower_bound,delta_k.
void save_trace(const SolveResult& result, const std::string& path);
void save_trace(const SolveResult& result, std::ostream& out);

}  // namespace qr
