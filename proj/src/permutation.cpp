#include "burst/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <stdexcept>

namespace burst {

Permutation::Permutation(std::vector<std::int64_t> values) : values_(std::move(values)) {
  std::vector<bool> seen(values_.size() + 1, false);
  for (std::int64_t v : values_) {
    if (v < 1 || v > static_cast<std::int64_t>(values_.size()) || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(values_.size()));
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::int64_t> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation prj(std::span<const std::int64_t> u) {
  if (u.empty()) throw std::invalid_argument("prj of an empty sequence");
  std::vector<std::size_t> order(u.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return u[a] < u[b]; });
  std::vector<std::int64_t> out(u.size());
  for (std::size_t r = 0; r < order.size(); ++r) out[order[r]] = static_cast<std::int64_t>(r + 1);
  return Permutation(std::move(out));
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("factorial argument outside [0, 20]");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t lex_rank(const Permutation& sigma) {
  const std::size_t n = sigma.size();
  std::vector<bool> used(n + 1, false);
  std::uint64_t rank = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::int64_t v = sigma(i);
    std::uint64_t smaller = 0;
    for (std::int64_t w = 1; w < v; ++w)
      if (!used[static_cast<std::size_t>(w)]) ++smaller;
    rank += smaller * factorial(static_cast<int>(n - i));
    used[static_cast<std::size_t>(v)] = true;
  }
  return rank + 1;
}

Permutation lex_unrank(std::uint64_t rank, std::size_t n) {
  if (rank < 1 || rank > factorial(static_cast<int>(n))) throw std::invalid_argument("rank outside [1, n!]");
  std::vector<std::int64_t> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<std::int64_t> out;
  std::uint64_t r = rank - 1;
  for (std::size_t i = n; i >= 1; --i) {
    const std::uint64_t f = factorial(static_cast<int>(i - 1));
    const auto idx = static_cast<std::ptrdiff_t>(r / f);
    r %= f;
    out.push_back(pool[static_cast<std::size_t>(idx)]);
    pool.erase(pool.begin() + idx);
  }
  return Permutation(std::move(out));
}

Word overlapping_ranks(std::span<const std::int64_t> u, int t) {
  if (t < 0 || u.size() <= static_cast<std::size_t>(t)) throw std::invalid_argument("ranking sequence needs length > t");
  const std::size_t len = u.size() - static_cast<std::size_t>(t);
  std::vector<Symbol> out(len);
  for (std::size_t i = 0; i < len; ++i) out[i] = static_cast<Symbol>(lex_rank(prj(u.subspan(i, static_cast<std::size_t>(t) + 1))) - 1);
  return Word(static_cast<Symbol>(factorial(t + 1)), std::move(out));
}

Word overlapping_ranks(const Permutation& sigma, int t) { return overlapping_ranks(std::span<const std::int64_t>(sigma.values()), t); }

std::vector<std::int64_t> apply_stable_burst_deletion(const Permutation& sigma, std::int64_t i, int t) {
  const auto n = static_cast<std::int64_t>(sigma.size());
  if (t < 0 || i < 1 || i + t - 1 > n) throw std::invalid_argument("stable burst deletion outside the permutation");
  std::vector<std::int64_t> out(sigma.values().begin(), sigma.values().begin() + (i - 1));
  out.insert(out.end(), sigma.values().begin() + (i - 1 + t), sigma.values().end());
  return out;
}

TbsdParams tbsd_class_of(const Permutation& sigma, int t, std::int64_t P) {
  const auto n = static_cast<std::int64_t>(sigma.size());
  const Word r = overlapping_ranks(sigma, t);
  const std::int64_t len = static_cast<std::int64_t>(r.size());
  const std::int64_t window = (P <= 0 || P > len) ? len : P;
  return TbsdParams{n, t, cts_class_of(r, 2 * t, t, window)};
}

bool member_tbsd(const Permutation& sigma, const TbsdParams& p) {
  if (static_cast<std::int64_t>(sigma.size()) != p.n) throw std::invalid_argument("member_tbsd: length mismatch");
  return member_cts(overlapping_ranks(sigma, p.t), p.ranks);
}

Permutation reconstruct_from_ranks(std::span<const std::int64_t> z, std::size_t n, int t, const Word& ranks) {
  if (z.size() + static_cast<std::size_t>(t) != n) throw DecodeFailure("reconstruct: received length is not n - t");
  std::vector<bool> present(n + 1, false);
  for (std::int64_t v : z) {
    if (v < 1 || v > static_cast<std::int64_t>(n) || present[static_cast<std::size_t>(v)]) throw DecodeFailure("reconstruct: received values are not distinct values of 1..n");
    present[static_cast<std::size_t>(v)] = true;
  }
  std::vector<std::int64_t> missing;
  for (std::size_t v = 1; v <= n; ++v)
    if (!present[v]) missing.push_back(static_cast<std::int64_t>(v));
  std::set<std::vector<std::int64_t>> found;
  std::vector<std::int64_t> cand(n);
  for (std::size_t pos = 0; pos + missing.size() <= n; ++pos) {
    std::vector<std::int64_t> block = missing;
    do {
      std::copy(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(pos), cand.begin());
      std::copy(block.begin(), block.end(), cand.begin() + static_cast<std::ptrdiff_t>(pos));
      std::copy(z.begin() + static_cast<std::ptrdiff_t>(pos), z.end(), cand.begin() + static_cast<std::ptrdiff_t>(pos + block.size()));
      if (overlapping_ranks(cand, t) == ranks) found.insert(cand);
    } while (std::next_permutation(block.begin(), block.end()));
  }
  if (found.empty()) throw DecodeFailure("reconstruct: no permutation has the recovered ranking sequence");
  if (found.size() > 1) throw InvariantViolation("reconstruct: two permutations share a descendant and a ranking sequence");
  return Permutation(*found.begin());
}

Permutation decode_tbsd(std::span<const std::int64_t> z, const TbsdParams& p, std::optional<Interval> rank_window) {
  const std::int64_t i = p.n - static_cast<std::int64_t>(z.size());
  if (i != p.t) throw DecodeFailure("decode_tbsd: received length is not n - t");
  const Word rz = overlapping_ranks(z, p.t);
  const Word rx = decode_cts(rz, p.ranks, rank_window);
  return reconstruct_from_ranks(z, static_cast<std::size_t>(p.n), p.t, rx);
}

LeqTbsdParams leq_tbsd_class_of(const Permutation& sigma, int t, std::int64_t P) {
  LeqTbsdParams p{static_cast<std::int64_t>(sigma.size()), t, P, {}};
  for (int i = 1; i <= t; ++i) p.inner.push_back(tbsd_class_of(sigma, i, P + i));
  return p;
}

bool member_leq_tbsd(const Permutation& sigma, const LeqTbsdParams& p) {
  return std::all_of(p.inner.begin(), p.inner.end(), [&](const TbsdParams& c) { return member_tbsd(sigma, c); });
}

Permutation decode_leq_tbsd(std::span<const std::int64_t> z, const LeqTbsdParams& p, Interval window) {
  const std::int64_t i = p.n - static_cast<std::int64_t>(z.size());
  if (i == 0) return Permutation(std::vector<std::int64_t>(z.begin(), z.end()));
  if (i < 0 || i > p.t) throw DecodeFailure("decode_leq_tbsd: received length is not n - i for any i in [0, t]");
  if (window.length() > p.P || window.lo < 1 || window.hi > p.n) throw DecodeFailure("decode_leq_tbsd: locator window is invalid");
  // errors at [w, w+P-1] on sigma touch ranking windows [w-i, w+P-1]
  const std::int64_t len = p.n - i;
  const Interval rank_window{std::max<std::int64_t>(1, window.lo - i), std::min(len, window.hi)};
  return decode_tbsd(z, p.inner[static_cast<std::size_t>(i - 1)], rank_window);
}

std::string format_permutation(std::span<const std::int64_t> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(values[i]);
  }
  return out;
}

std::vector<std::int64_t> parse_permutation(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (!text.empty() && pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const auto field = text.substr(pos, comma - pos);
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) throw std::invalid_argument("malformed permutation field '" + std::string(field) + "'");
    out.push_back(v);
    pos = comma + 1;
  }
  return out;
}

}  // namespace burst
