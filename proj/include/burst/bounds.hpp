#pragma once

#include <cstdint>
#include <string>

#include "burst/word.hpp"

namespace burst {

struct BoundReport {
  std::int64_t n = 0;
  Symbol q = 2;
  int t = 0;
  int s = 0;
  std::int64_t ball_size = 0;
  /// floor(q^{n-t+1} / ((q-1)(n-t+1)+1)), the integer part of the packing bound on |C|.
  std::int64_t max_code_size = 0;
  double min_redundancy_bits = 0.0;
};

/// q^{s-1}((q-1)(n-t+1)+1); the s = 0 ball depends on the center and is rejected.
std::int64_t ball_size_formula(std::int64_t n, Symbol q, int t, int s);
/// log2((q-1)(n-t+1)+1) + (t-1) log2 q.
double sphere_packing_redundancy(std::int64_t n, Symbol q, int t, int s);
/// n log2 q - log2 |C|.
double code_redundancy(std::int64_t code_size, std::int64_t n, Symbol q);
std::int64_t max_code_size(std::int64_t n, Symbol q, int t, int s);

BoundReport bound_report(std::int64_t n, Symbol q, int t, int s);
std::string bound_csv_header();
std::string bound_csv_row(const BoundReport& r);

}  // namespace burst
