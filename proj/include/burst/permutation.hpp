#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "burst/codes.hpp"

namespace burst {

/// A permutation of 1..n.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::int64_t> values);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return values_.size(); }
  /// 1-based.
  std::int64_t operator()(std::size_t i) const { return values_.at(i - 1); }
  const std::vector<std::int64_t>& values() const { return values_; }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::int64_t> values_;
};

/// Relative-order pattern of u; equal entries are ordered by index.
Permutation prj(std::span<const std::int64_t> u);

std::uint64_t factorial(int n);
/// Lexicographic rank in [1, n!].
std::uint64_t lex_rank(const Permutation& sigma);
Permutation lex_unrank(std::uint64_t rank, std::size_t n);

/// Ranks of Prj of every window of length t+1, stored 0-based over the alphabet (t+1)!.
Word overlapping_ranks(std::span<const std::int64_t> u, int t);
Word overlapping_ranks(const Permutation& sigma, int t);

/// Removes sigma_i .. sigma_{i+t-1} without renumbering the remaining values.
std::vector<std::int64_t> apply_stable_burst_deletion(const Permutation& sigma, std::int64_t i, int t);

/// t-BSD code: the ranking sequence lies in a (2t,t)-burst code over (t+1)!.
struct TbsdParams {
  std::int64_t n = 0;
  int t = 1;
  LiftedBurstParams ranks;
  auto operator<=>(const TbsdParams&) const = default;
};

TbsdParams tbsd_class_of(const Permutation& sigma, int t, std::int64_t P = 0);
bool member_tbsd(const Permutation& sigma, const TbsdParams& p);
Permutation decode_tbsd(std::span<const std::int64_t> z, const TbsdParams& p, std::optional<Interval> rank_window = std::nullopt);

/// Rebuilds sigma from a t-BSD descendant z and the ranking sequence of sigma.
/// Positions left to right, orderings of the missing values lexicographic.
Permutation reconstruct_from_ranks(std::span<const std::int64_t> z, std::size_t n, int t, const Word& ranks);

/// <=t-BSD code: one P_i-bounded (2i,i) code on the (i+1)-ranking sequence per i.
struct LeqTbsdParams {
  std::int64_t n = 0;
  int t = 1;
  std::int64_t P = 0;
  std::vector<TbsdParams> inner;  // inner[i-1] handles an i-BSD
  auto operator<=>(const LeqTbsdParams&) const = default;
};

LeqTbsdParams leq_tbsd_class_of(const Permutation& sigma, int t, std::int64_t P);
bool member_leq_tbsd(const Permutation& sigma, const LeqTbsdParams& p);
/// `window` is the locator's interval on sigma (length at most P).
Permutation decode_leq_tbsd(std::span<const std::int64_t> z, const LeqTbsdParams& p, Interval window);

std::string format_permutation(std::span<const std::int64_t> values);
std::vector<std::int64_t> parse_permutation(std::string_view text);

}  // namespace burst
