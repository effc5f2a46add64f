#include "burst/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace burst {

namespace {
void check_args(std::int64_t n, Symbol q, int t, int s) {
  if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
  if (s < 1) throw std::invalid_argument("the closed-form ball size needs s >= 1; for s = 0 enumerate the ball instead");
  if (t < 1 || t > n) throw std::invalid_argument("need 1 <= t <= n");
}
}  // namespace

std::int64_t ball_size_formula(std::int64_t n, Symbol q, int t, int s) {
  check_args(n, q, t, s);
  return ipow(q, s - 1) * ((q - 1) * (n - t + 1) + 1);
}

double sphere_packing_redundancy(std::int64_t n, Symbol q, int t, int s) {
  check_args(n, q, t, s);
  return std::log2(static_cast<double>((q - 1) * (n - t + 1) + 1)) + (t - 1) * std::log2(static_cast<double>(q));
}

double code_redundancy(std::int64_t code_size, std::int64_t n, Symbol q) {
  if (code_size < 1) throw std::invalid_argument("redundancy of an empty code is undefined");
  return static_cast<double>(n) * std::log2(static_cast<double>(q)) - std::log2(static_cast<double>(code_size));
}

std::int64_t max_code_size(std::int64_t n, Symbol q, int t, int s) {
  check_args(n, q, t, s);
  return ipow(q, static_cast<int>(n - t + 1)) / ((q - 1) * (n - t + 1) + 1);
}

BoundReport bound_report(std::int64_t n, Symbol q, int t, int s) {
  BoundReport r{n, q, t, s, ball_size_formula(n, q, t, s), max_code_size(n, q, t, s), sphere_packing_redundancy(n, q, t, s)};
  return r;
}

std::string bound_csv_header() { return "n,q,t,s,ball_size,min_redundancy_bits"; }

std::string bound_csv_row(const BoundReport& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%lld,%lld,%d,%d,%lld,%.6f", static_cast<long long>(r.n), static_cast<long long>(r.q), r.t, r.s,
                static_cast<long long>(r.ball_size), r.min_redundancy_bits);
  return buf;
}

}  // namespace burst
