#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "burst/word.hpp"

namespace burst {

/// (2,2)-burst code: row sums of the 2-row array mod 2q, and
/// WVT = VT(row 1) + (2q-1) VT(row 2) mod q(q-1)(n-1)+1.
struct C22Params {
  std::int64_t n = 0;
  Symbol q = 2;
  std::int64_t a1 = 0, a2 = 0, a3 = 0;

  std::int64_t modulus() const { return q * (q - 1) * (n - 1) + 1; }
  auto operator<=>(const C22Params&) const = default;
};

/// (t,t)-burst code: the (t-1)-lift lies in a (2,2) code over q^{t-1}.
struct CttParams {
  std::int64_t n = 0;
  Symbol q = 2;
  int t = 2;
  C22Params inner;
  auto operator<=>(const CttParams&) const = default;
};

/// Binary P-bounded (t,t-1)-burst code with k = floor(t^2/2) array rows.
struct BinaryBurstParams {
  std::int64_t n = 0;
  std::int64_t P = 0;
  int t = 1;
  std::int64_t a1 = 0;  // VT mod tP
  std::int64_t a2 = 0;  // Sum mod 2t
  std::vector<Symbol> b;        // row sums of A_k(x) mod 2
  std::vector<Symbol> c;        // row sums of A_k(marker of x) mod t
  std::vector<Symbol> c_prime;  // row sums of A_k(marker of complement) mod t

  int k() const { return t * t / 2; }
  bool bounded() const { return P < n; }
  auto operator<=>(const BinaryBurstParams&) const = default;
};

/// q-ary (t,t-1)-burst code, optionally P-bounded (P = n means unbounded).
struct QaryBurstParams {
  std::int64_t n = 0;
  Symbol q = 2;
  int t = 1;
  std::int64_t P = 0;
  BinaryBurstParams signature;  // (t+1, t) code on the signature
  std::vector<Symbol> beta;     // count of symbol v (v = 1..q-1) mod 2t
  std::vector<std::vector<Symbol>> gamma;        // 2t blocks, left contexts
  std::vector<std::vector<Symbol>> gamma_prime;  // 2t blocks, right contexts

  bool bounded() const { return P < n; }
  auto operator<=>(const QaryBurstParams&) const = default;
};

/// (t,s)-burst code for t > s: the (t-s)-lift lies in a q^{t-s}-ary (t',t'-1) code.
struct LiftedBurstParams {
  std::int64_t n = 0;
  Symbol q = 2;
  int t = 1;
  int s = 0;
  std::int64_t P = 0;
  QaryBurstParams inner;

  int d() const { return t - s; }
  int inner_t() const { return (t + d() - 1) / d() + 1; }
  bool bounded() const { return P < n; }
  auto operator<=>(const LiftedBurstParams&) const = default;
};

using CodeInstance = std::variant<C22Params, CttParams, BinaryBurstParams, QaryBurstParams, LiftedBurstParams>;

/// Window lengths of the inner codes.
std::int64_t signature_window(std::int64_t n, std::int64_t P);
std::int64_t lifted_window(std::int64_t n, int t, int s, std::int64_t P);

C22Params c22_class_of(const Word& x);
bool member_c22(const Word& x, const C22Params& p);
Word decode_c22(const Word& z, const C22Params& p);

CttParams ctt_class_of(const Word& x, int t);
bool member_ctt(const Word& x, const CttParams& p);
Word decode_ctt(const Word& z, const CttParams& p);

BinaryBurstParams bin_tt1_class_of(const Word& x, int t, std::int64_t P);
bool member_bin_tt1(const Word& x, const BinaryBurstParams& p);
/// Exhaustive search over (position, replacement block) inside the window.
Word decode_bin_tt1(const Word& z, const BinaryBurstParams& p, std::optional<Interval> window = std::nullopt);

QaryBurstParams qary_tt1_class_of(const Word& x, int t, std::int64_t P);
bool member_qary_tt1(const Word& x, const QaryBurstParams& p);
/// Staged decoder: signature first, then segment contexts, then symbol counts.
Word decode_qary_tt1(const Word& z, const QaryBurstParams& p, std::optional<Interval> window = std::nullopt);

LiftedBurstParams cts_class_of(const Word& x, int t, int s, std::int64_t P);
bool member_cts(const Word& x, const LiftedBurstParams& p);
Word decode_cts(const Word& z, const LiftedBurstParams& p, std::optional<Interval> window = std::nullopt);

/// Tries every (position, replacement block) that could have produced z from a
/// length-n word by a (t,s)-burst inside the window and keeps the accepted
/// candidates. Bursts longer than n are clamped to n. Exactly one survivor
/// is returned; none raises DecodeFailure, two raise InvariantViolation.
Word decode_by_search(const Word& z, std::int64_t n, int t, int s, const std::function<bool(const Word&)>& accept,
                      std::optional<Interval> window = std::nullopt);

bool member(const Word& x, const CodeInstance& code);
Word decode(const Word& z, const CodeInstance& code, std::optional<Interval> window = std::nullopt);

/// Burst type (t,s) the instance corrects.
std::pair<int, int> burst_type(const CodeInstance& code);
std::int64_t code_length(const CodeInstance& code);
Symbol code_alphabet(const CodeInstance& code);

/// log2 of the number of parameter classes; the best class has at most this much redundancy.
double log2_class_count(const CodeInstance& code);
/// log n + 4 log q + 2.
double c22_redundancy_claim(std::int64_t n, Symbol q);
/// log n + 4(t-1) log q + 2 - log(t-1).
double ctt_redundancy_claim(std::int64_t n, Symbol q, int t);

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 22;

/// Throws std::length_error when q^n exceeds the cap.
std::uint64_t checked_space_size(std::size_t n, Symbol q, std::uint64_t cap);

template <class Params>
struct SearchResult {
  Params params;
  std::int64_t size = 0;
  std::int64_t classes = 0;
};

/// Groups Σ_q^n by class and returns the largest class; ties go to the smallest parameters.
template <class Params, class Classify>
SearchResult<Params> param_search(std::size_t n, Symbol q, Classify&& classify, std::uint64_t cap = kDefaultEnumerationCap) {
  const std::uint64_t total = checked_space_size(n, q, cap);
  std::map<Params, std::int64_t> counts;
  for (std::uint64_t idx = 0; idx < total; ++idx) ++counts[classify(unpack(idx, q, n))];
  SearchResult<Params> best;
  for (const auto& [params, count] : counts) {
    if (count > best.size) best = {params, count, 0};
  }
  best.classes = static_cast<std::int64_t>(counts.size());
  return best;
}

}  // namespace burst
