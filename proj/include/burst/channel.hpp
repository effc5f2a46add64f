#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "burst/word.hpp"

namespace burst {

/// Deletes t symbols starting at pos and inserts `inserted` in their place.
struct BurstEvent {
  std::int64_t pos = 1;
  int t = 0;
  std::vector<Symbol> inserted;

  int s() const { return static_cast<int>(inserted.size()); }
  auto operator<=>(const BurstEvent&) const = default;
};

/// Largest admissible burst position for a length-n word: n-t+1, or n+1 for pure insertion.
std::int64_t last_burst_position(std::size_t n, int t);

Word apply_burst(const Word& x, const BurstEvent& e);
bool is_exact_burst(const Word& x, const BurstEvent& e);

/// Calls f(event) for every (t,s)-burst on a length-n word over Σ_q, positions ascending,
/// inserted blocks in lexicographic order.
void for_each_burst_event(std::size_t n, Symbol q, int t, int s, const std::function<void(const BurstEvent&)>& f);

/// Packed-index view of every burst outcome of x (with multiplicity). The
/// callback receives the lexicographic index of the output word in Σ_q^{n-t+s}.
/// Used by the exhaustive counters where materializing Words is too slow.
template <class F>
void for_each_burst_outcome_packed(const Word& x, int t, int s, F&& f) {
  const auto n = static_cast<std::int64_t>(x.size());
  const auto q = static_cast<std::uint64_t>(x.q());
  const std::int64_t last = last_burst_position(x.size(), t);
  std::vector<std::uint64_t> prefix(static_cast<std::size_t>(n + 2), 0);
  for (std::int64_t i = 1; i <= n; ++i) prefix[static_cast<std::size_t>(i)] = prefix[static_cast<std::size_t>(i - 1)] * q + static_cast<std::uint64_t>(x.at(i));
  // suffix[k] = pack(x_k..x_n); suffix_scale[k] = q^(n-k+1)
  std::vector<std::uint64_t> suffix(static_cast<std::size_t>(n + 2), 0), suffix_scale(static_cast<std::size_t>(n + 2), 1);
  for (std::int64_t k = n; k >= 1; --k) {
    suffix_scale[static_cast<std::size_t>(k)] = suffix_scale[static_cast<std::size_t>(k + 1)] * q;
    suffix[static_cast<std::size_t>(k)] = static_cast<std::uint64_t>(x.at(k)) * suffix_scale[static_cast<std::size_t>(k + 1)] + suffix[static_cast<std::size_t>(k + 1)];
  }
  std::uint64_t qs = 1;
  for (int i = 0; i < s; ++i) qs *= q;
  for (std::int64_t i = 1; i <= last; ++i) {
    const auto k = static_cast<std::size_t>(std::min(i + t, n + 1));
    const std::uint64_t head = prefix[static_cast<std::size_t>(i - 1)] * qs;
    const std::uint64_t scale = suffix_scale[k];
    const std::uint64_t tail = suffix[k];
    for (std::uint64_t y = 0; y < qs; ++y) f((head + y) * scale + tail);
  }
}

/// Packed-index view of the partition cells: f(cell, index) for every member of
/// B(x,cell), cell in [1, n-t+2], built from the cell definitions (not from bursts).
template <class F>
void for_each_partition_member_packed(const Word& x, int t, int s, F&& f) {
  const auto n = static_cast<std::int64_t>(x.size());
  const auto q = static_cast<std::uint64_t>(x.q());
  const std::int64_t cells = last_burst_position(x.size(), t) + 1;
  std::uint64_t free_blocks = 1;
  for (int i = 1; i < s; ++i) free_blocks *= q;
  std::uint64_t prefix = 0;
  for (std::int64_t i = 1; i < cells; ++i) {
    // suffix x_{i+t}..x_n packed, and its scale q^{n-i-t+1}
    std::uint64_t tail = 0, scale = 1;
    for (std::int64_t k = i + t; k <= n; ++k) {
      tail = tail * q + static_cast<std::uint64_t>(x.at(k));
      scale *= q;
    }
    const auto xi = static_cast<std::uint64_t>(x.at(i));
    for (std::uint64_t first = 0; first < q; ++first) {
      if (first == xi) continue;
      for (std::uint64_t b = 0; b < free_blocks; ++b) f(i, ((prefix * q + first) * free_blocks + b) * scale + tail);
    }
    prefix = prefix * q + xi;
  }
  // prefix now packs x_1..x_{n-t+1}
  for (std::uint64_t b = 0; b < free_blocks; ++b) f(cells, prefix * free_blocks + b);
}

/// The deduplicated (t,s)-burst ball, sorted lexicographically.
std::vector<Word> ball(const Word& x, int t, int s);

/// True iff z is reachable from x by one (t,s)-burst. O(n) prefix/suffix test.
bool in_ball(const Word& x, const Word& z, int t, int s);

/// Cells B(x,1..n-t+2) built straight from their defining constraints (s >= 1).
std::vector<std::vector<Word>> ball_partition(const Word& x, int t, int s);

/// Index (1-based) of the partition cell containing y, or 0 if y is outside the ball.
std::int64_t partition_cell_of(const Word& x, const Word& y, int t, int s);

/// Reverses x_[i, i+len-1].
Word apply_inversion(const Word& x, std::int64_t i, std::int64_t len);
/// Type-A absorption: delete x_i and saturate-add it into x_{i+1}.
Word apply_absorption_A(const Word& x, std::int64_t i);
/// Type-B absorption: lower x_i to new_val and saturate-add the difference into x_{i+1}.
Word apply_absorption_B(const Word& x, std::int64_t i, Symbol new_val);
/// Deletes x_{window_start + o} for every offset o (offsets within [0, t-1]).
Word apply_localized_deletions(const Word& x, std::int64_t window_start, int t, const std::vector<int>& offsets);

}  // namespace burst
