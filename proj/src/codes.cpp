#include "burst/codes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <string>

#include "burst/channel.hpp"

namespace burst {

namespace {

std::int64_t mod(std::int64_t v, std::int64_t m) { return ((v % m) + m) % m; }

void require_length(const Word& x, std::int64_t n, const char* what) {
  if (static_cast<std::int64_t>(x.size()) != n) {
    throw std::invalid_argument(std::string(what) + ": expected length " + std::to_string(n) + ", got " + std::to_string(x.size()));
  }
}

void require_alphabet(const Word& x, Symbol q, const char* what) {
  if (x.q() != q) throw std::invalid_argument(std::string(what) + ": alphabet mismatch");
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

}  // namespace

std::int64_t signature_window(std::int64_t n, std::int64_t P) { return P >= n ? n : std::min(P + 1, n); }

std::int64_t lifted_window(std::int64_t n, int t, int s, std::int64_t P) {
  const int d = t - s;
  const std::int64_t cols = ceil_div(n, d);
  return P >= n ? cols : std::min(ceil_div(P, d) + 1, cols);
}

// ---------------------------------------------------------------------------
// (2,2)

C22Params c22_class_of(const Word& x) {
  C22Params p;
  p.n = static_cast<std::int64_t>(x.size());
  p.q = x.q();
  const Word r1 = array_row(x, 2, 1), r2 = array_row(x, 2, 2);
  p.a1 = mod(sum_weight(r1), 2 * p.q);
  p.a2 = mod(sum_weight(r2), 2 * p.q);
  p.a3 = mod(vt_syndrome(r1) + (2 * p.q - 1) * vt_syndrome(r2), p.modulus());
  return p;
}

bool member_c22(const Word& x, const C22Params& p) {
  require_length(x, p.n, "member_c22");
  require_alphabet(x, p.q, "member_c22");
  return c22_class_of(x) == p;
}

namespace {

// Applies the correction for one candidate representative of Δ; nullopt if it is inconsistent.
std::optional<Word> c22_correct(const Word& z, const C22Params& p, std::int64_t d1, std::int64_t d2, std::int64_t delta) {
  const std::int64_t n = p.n, q = p.q;
  std::vector<Symbol> y = z.data();
  if (d2 == 0) {
    if (delta % d1 != 0) return std::nullopt;
    const std::int64_t j = delta / d1;
    if (j < 1 || 2 * j - 1 > n) return std::nullopt;
    y[static_cast<std::size_t>(2 * j - 2)] -= d1;
  } else if (d1 == 0) {
    // both parities of i hit the same row-2 cell; correct that cell directly
    const std::int64_t w = (2 * q - 1) * d2;
    if (delta % w != 0) return std::nullopt;
    const std::int64_t j = delta / w;
    if (j < 1 || 2 * j > n) return std::nullopt;
    y[static_cast<std::size_t>(2 * j - 1)] -= d2;
  } else {
    const std::int64_t den = d1 + (2 * q - 1) * d2;
    std::vector<std::int64_t> cands;
    if ((2 * delta) % den == 0) {
      const std::int64_t i = 2 * delta / den - 1;
      if (i >= 1 && i <= n - 1 && i % 2 == 1) cands.push_back(i);
    }
    if ((2 * (delta - d1)) % den == 0) {
      const std::int64_t i = 2 * (delta - d1) / den;
      if (i >= 1 && i <= n - 1 && i % 2 == 0) cands.push_back(i);
    }
    if (cands.size() != 1) return std::nullopt;
    for (std::int64_t pos : {cands[0], cands[0] + 1}) y[static_cast<std::size_t>(pos - 1)] -= (pos % 2 == 1) ? d1 : d2;
  }
  for (Symbol v : y)
    if (v < 0 || v >= q) return std::nullopt;
  Word out(q, std::move(y));
  if (c22_class_of(out) != p) return std::nullopt;
  return out;
}

}  // namespace

Word decode_c22(const Word& z, const C22Params& p) {
  if (static_cast<std::int64_t>(z.size()) != p.n || z.q() != p.q) throw DecodeFailure("decode_c22: received word has the wrong length or alphabet");
  const std::int64_t q = p.q, M = p.modulus();
  auto centered = [q](std::int64_t v) {
    v = mod(v, 2 * q);
    return v >= q ? v - 2 * q : v;
  };
  const Word r1 = array_row(z, 2, 1), r2 = array_row(z, 2, 2);
  const std::int64_t d1 = centered(sum_weight(r1) - p.a1);
  const std::int64_t d2 = centered(sum_weight(r2) - p.a2);
  if (d1 == 0 && d2 == 0) {
    if (c22_class_of(z) != p) throw DecodeFailure("decode_c22: row sums agree but the weighted syndrome does not");
    return z;
  }
  const std::int64_t r = mod(vt_syndrome(r1) + (2 * q - 1) * vt_syndrome(r2) - p.a3, M);
  const bool nonnegative = d2 > 0 || (d2 == 0 && d1 >= 0);
  // |Δ| can reach q(q-1)n when the burst touches the last column, which is
  // more than one modulus away from zero, so every sign-consistent lift is tried.
  const std::int64_t bound = q * (q - 1) * p.n;
  std::set<Word> solutions;
  for (std::int64_t k = -(bound / M) - 2; k <= bound / M + 2; ++k) {
    const std::int64_t delta = r + k * M;
    if ((delta >= 0) != nonnegative || std::llabs(delta) > bound) continue;
    if (auto x = c22_correct(z, p, d1, d2, delta)) solutions.insert(*x);
  }
  if (solutions.empty()) throw DecodeFailure("decode_c22: no codeword within one (2,2)-burst");
  if (solutions.size() > 1) throw InvariantViolation("decode_c22: two codewords explain the received word");
  return *solutions.begin();
}

// ---------------------------------------------------------------------------
// (t,t) via lifting

CttParams ctt_class_of(const Word& x, int t) {
  if (t < 2) throw std::invalid_argument("ctt needs t >= 2");
  return CttParams{static_cast<std::int64_t>(x.size()), x.q(), t, c22_class_of(lift(x, t - 1))};
}

bool member_ctt(const Word& x, const CttParams& p) {
  require_length(x, p.n, "member_ctt");
  require_alphabet(x, p.q, "member_ctt");
  return ctt_class_of(x, p.t) == p;
}

namespace {
Word unlift_checked(const Word& y, int d, Symbol q, std::int64_t n) {
  try {
    return unlift(y, d, q, static_cast<std::size_t>(n));
  } catch (const std::invalid_argument&) {
    throw DecodeFailure("decoded word has a nonzero padded tail");
  }
}
}  // namespace

Word decode_ctt(const Word& z, const CttParams& p) {
  if (static_cast<std::int64_t>(z.size()) != p.n || z.q() != p.q) throw DecodeFailure("decode_ctt: received word has the wrong length or alphabet");
  const Word y = decode_c22(lift(z, p.t - 1), p.inner);
  return unlift_checked(y, p.t - 1, p.q, p.n);
}

// ---------------------------------------------------------------------------
// binary (t,t-1)

BinaryBurstParams bin_tt1_class_of(const Word& x, int t, std::int64_t P) {
  if (x.q() != 2) throw std::invalid_argument("bin_tt1 needs a binary word");
  const auto n = static_cast<std::int64_t>(x.size());
  if (t < 1) throw std::invalid_argument("bin_tt1 needs t >= 1");
  if (P < 1 || P > n) throw std::invalid_argument("bin_tt1 needs 1 <= P <= n");
  BinaryBurstParams p;
  p.n = n;
  p.P = P;
  p.t = t;
  p.a1 = mod(vt_syndrome(x), t * P);
  p.a2 = mod(sum_weight(x), 2 * t);
  const int k = p.k();
  p.b = array_row_sums(x.symbols(), k, 2);
  const auto ones = marker(x);
  const auto zeros = marker(complement(x));
  p.c = array_row_sums(ones, k, t);
  p.c_prime = array_row_sums(zeros, k, t);
  return p;
}

bool member_bin_tt1(const Word& x, const BinaryBurstParams& p) {
  require_length(x, p.n, "member_bin_tt1");
  require_alphabet(x, 2, "member_bin_tt1");
  return bin_tt1_class_of(x, p.t, p.P) == p;
}

Word decode_bin_tt1(const Word& z, const BinaryBurstParams& p, std::optional<Interval> window) {
  const std::int64_t n = p.n;
  const int t = p.t;
  if (static_cast<std::int64_t>(z.size()) != n - 1 || z.q() != 2) throw DecodeFailure("decode_bin_tt1: received word has the wrong length or alphabet");
  const Interval w = window.value_or(Interval{1, n});
  std::set<Word> survivors;
  const std::int64_t first = std::max<std::int64_t>(1, w.lo);
  const std::int64_t last = std::min(n - t + 1, w.hi - t + 1);
  const Symbol blocks = ipow(2, t);
  std::vector<Symbol> cand(static_cast<std::size_t>(n));
  for (std::int64_t i = first; i <= last; ++i) {
    for (Symbol b = 0; b < blocks; ++b) {
      for (std::int64_t k = 1; k < i; ++k) cand[static_cast<std::size_t>(k - 1)] = z.at(k);
      for (int k = 0; k < t; ++k) cand[static_cast<std::size_t>(i - 1 + k)] = (b >> (t - 1 - k)) & 1;
      for (std::int64_t k = i + t; k <= n; ++k) cand[static_cast<std::size_t>(k - 1)] = z.at(k - 1);
      Word x(2, cand);
      if (bin_tt1_class_of(x, t, p.P) == p) survivors.insert(std::move(x));
    }
  }
  if (survivors.empty()) throw DecodeFailure("decode_bin_tt1: no codeword within one burst in the window");
  if (survivors.size() > 1) {
    throw InvariantViolation("decode_bin_tt1: two codewords " + format_word(*survivors.begin()) + " and " + format_word(*std::next(survivors.begin())) +
                             " share the received word " + format_word(z));
  }
  return *survivors.begin();
}

// ---------------------------------------------------------------------------
// q-ary (t,t-1)

namespace {

std::vector<std::vector<Symbol>> context_sums(const Word& x, const SegmentStarts& s, int t, Side side) {
  const auto m = s.segment_count();
  std::vector<std::vector<Symbol>> out(static_cast<std::size_t>(2 * t), std::vector<Symbol>(static_cast<std::size_t>(t - 1), 0));
  for (std::size_t j = 1; j <= static_cast<std::size_t>(2 * t); ++j) {
    for (std::size_t jj = j; jj <= m; jj += static_cast<std::size_t>(2 * t)) {
      const Word c = segment_context(x, s, jj, t, side);
      for (std::size_t k = 0; k < c.size(); ++k) out[j - 1][k] += c.data()[k];
    }
    for (auto& v : out[j - 1]) v = mod(v, x.q());
  }
  return out;
}

}  // namespace

QaryBurstParams qary_tt1_class_of(const Word& x, int t, std::int64_t P) {
  const auto n = static_cast<std::int64_t>(x.size());
  if (t < 1) throw std::invalid_argument("qary_tt1 needs t >= 1");
  if (n < 1) throw std::invalid_argument("qary_tt1 needs a nonempty word");
  if (P < 1 || P > n) throw std::invalid_argument("qary_tt1 needs 1 <= P <= n");
  QaryBurstParams p;
  p.n = n;
  p.q = x.q();
  p.t = t;
  p.P = P;
  p.signature = bin_tt1_class_of(signature(x), t + 1, signature_window(n, P));
  p.beta.assign(static_cast<std::size_t>(x.q() - 1), 0);
  for (Symbol v : x.data())
    if (v > 0) ++p.beta[static_cast<std::size_t>(v - 1)];
  for (auto& v : p.beta) v = mod(v, 2 * t);
  const SegmentStarts s = segment_starts(x);
  p.gamma = context_sums(x, s, t, Side::left);
  p.gamma_prime = context_sums(x, s, t, Side::right);
  return p;
}

bool member_qary_tt1(const Word& x, const QaryBurstParams& p) {
  require_length(x, p.n, "member_qary_tt1");
  require_alphabet(x, p.q, "member_qary_tt1");
  return qary_tt1_class_of(x, p.t, p.P) == p;
}

Word decode_qary_tt1(const Word& z, const QaryBurstParams& p, std::optional<Interval> window) {
  const std::int64_t n = p.n;
  const Symbol q = p.q;
  const int t = p.t;
  if (static_cast<std::int64_t>(z.size()) != n - 1 || z.q() != q) throw DecodeFailure("decode_qary_tt1: received word has the wrong length or alphabet");
  if (n < 2) throw DecodeFailure("decode_qary_tt1: length too small");
  // the signature stage needs room for a (t+1)-burst; shorter words are searched directly
  if (t + 1 > n) return decode_by_search(z, n, t, t - 1, [&](const Word& x) { return member_qary_tt1(x, p); });

  // Stage 1: the signature suffers a (t+1,t)-burst inside the window widened by one.
  std::optional<Interval> sig_window;
  if (window && p.bounded()) {
    std::int64_t lo = window->lo, hi = window->lo + p.P;
    if (hi > n) {
      lo = std::max<std::int64_t>(1, n - p.P);
      hi = n;
    }
    sig_window = Interval{lo, hi};
  }
  const Word ax = decode_bin_tt1(signature(z), p.signature, sig_window);
  const Word az = signature(z);

  // Stage 2: segment structure of x and the segment holding the leftmost signature change.
  const SegmentStarts S = segment_starts_from_signature(ax);
  const std::size_t m = S.segment_count();
  std::int64_t first_diff = n;
  for (std::int64_t k = 1; k <= n - 1; ++k) {
    if (ax.at(k) != az.at(k)) {
      first_diff = k;
      break;
    }
  }
  std::size_t ell = 1;
  while (!(S[ell] < first_diff && first_diff <= S[ell + 1])) ++ell;
  const std::int64_t left = S[ell] - t + 1, right = S[ell + 1] + t - 1;

  constexpr Symbol unknown = -1;
  std::vector<Symbol> x(static_cast<std::size_t>(n + 1), unknown);  // 1-based
  for (std::int64_t k = 1; k <= n; ++k) {
    if (k < left) x[static_cast<std::size_t>(k)] = z.at(k);
    else if (k > right) x[static_cast<std::size_t>(k)] = z.at(k - 1);
  }
  auto known = [&](std::int64_t k) -> Symbol {
    if (k < 1 || k > n) return 0;
    const Symbol v = x[static_cast<std::size_t>(k)];
    if (v == unknown) throw DecodeFailure("decode_qary_tt1: context of another segment overlaps the damaged region");
    return v;
  };

  // Stage 3: contexts of segment ell from the same-class context sums.
  const std::size_t cls = (ell - 1) % static_cast<std::size_t>(2 * t) + 1;
  for (Side side : {Side::left, Side::right}) {
    std::vector<Symbol> acc = (side == Side::left ? p.gamma : p.gamma_prime)[cls - 1];
    for (std::size_t jj = cls; jj <= m; jj += static_cast<std::size_t>(2 * t)) {
      if (jj == ell) continue;
      const std::int64_t base = side == Side::left ? S[jj] - t + 1 : S[jj + 1] + 1;
      for (int k = 0; k < t - 1; ++k) acc[static_cast<std::size_t>(k)] -= known(base + k);
    }
    const std::int64_t base = side == Side::left ? S[ell] - t + 1 : S[ell + 1] + 1;
    for (int k = 0; k < t - 1; ++k) {
      const Symbol v = mod(acc[static_cast<std::size_t>(k)], q);
      const std::int64_t pos = base + k;
      if (pos >= 1 && pos <= n) x[static_cast<std::size_t>(pos)] = v;
      else if (v != 0) throw DecodeFailure("decode_qary_tt1: context outside the word must be zero");
    }
  }

  // Stage 4: the damaged monotone segment from symbol counts.
  std::vector<std::int64_t> zcount(static_cast<std::size_t>(q), 0), count(static_cast<std::size_t>(q), 0);
  for (Symbol v : z.data()) ++zcount[static_cast<std::size_t>(v)];
  std::int64_t nonzero = 0;
  for (Symbol v = 1; v < q; ++v) {
    std::int64_t d = mod(zcount[static_cast<std::size_t>(v)] - p.beta[static_cast<std::size_t>(v - 1)], 2 * t);
    if (d >= t) d -= 2 * t;
    count[static_cast<std::size_t>(v)] = zcount[static_cast<std::size_t>(v)] - d;
    nonzero += count[static_cast<std::size_t>(v)];
  }
  count[0] = n - nonzero;
  const std::int64_t lo = std::max<std::int64_t>(S[ell], 1), hi = S[ell + 1];
  for (std::int64_t k = 1; k <= n; ++k) {
    if (k >= lo && k <= hi) continue;
    --count[static_cast<std::size_t>(known(k))];
  }
  std::vector<Symbol> segment;
  for (Symbol v = 0; v < q; ++v) {
    if (count[static_cast<std::size_t>(v)] < 0) throw DecodeFailure("decode_qary_tt1: symbol counts are inconsistent");
    segment.insert(segment.end(), static_cast<std::size_t>(count[static_cast<std::size_t>(v)]), v);
  }
  if (static_cast<std::int64_t>(segment.size()) != hi - lo + 1) throw DecodeFailure("decode_qary_tt1: symbol counts are inconsistent");
  if (ax.at(hi) == 0) std::reverse(segment.begin(), segment.end());
  for (std::int64_t k = lo; k <= hi; ++k) x[static_cast<std::size_t>(k)] = segment[static_cast<std::size_t>(k - lo)];

  Word out(q, std::vector<Symbol>(x.begin() + 1, x.end()));
  if (!member_qary_tt1(out, p) || !in_ball(out, z, t, t - 1)) throw DecodeFailure("decode_qary_tt1: reconstruction is not a codeword");
  return out;
}

// ---------------------------------------------------------------------------
// (t,s) via lifting

LiftedBurstParams cts_class_of(const Word& x, int t, int s, std::int64_t P) {
  if (s < 0 || t <= s) throw std::invalid_argument("cts needs t > s >= 0");
  const auto n = static_cast<std::int64_t>(x.size());
  if (P < 1 || P > n) throw std::invalid_argument("cts needs 1 <= P <= n");
  LiftedBurstParams p;
  p.n = n;
  p.q = x.q();
  p.t = t;
  p.s = s;
  p.P = P;
  const Word y = lift(x, p.d());
  p.inner = qary_tt1_class_of(y, p.inner_t(), lifted_window(n, t, s, P));
  return p;
}

bool member_cts(const Word& x, const LiftedBurstParams& p) {
  require_length(x, p.n, "member_cts");
  require_alphabet(x, p.q, "member_cts");
  return cts_class_of(x, p.t, p.s, p.P) == p;
}

Word decode_cts(const Word& z, const LiftedBurstParams& p, std::optional<Interval> window) {
  const int d = p.d();
  if (static_cast<std::int64_t>(z.size()) != p.n - d || z.q() != p.q) throw DecodeFailure("decode_cts: received word has the wrong length or alphabet");
  const std::int64_t cols = p.inner.n;
  std::optional<Interval> inner_window;
  if (window && p.inner.bounded()) {
    const std::int64_t len = p.inner.P;
    std::int64_t start = (window->lo - 1) / d + 1;
    if (start + len - 1 > cols) start = std::max<std::int64_t>(1, cols - len + 1);
    inner_window = Interval{start, start + len - 1};
  }
  if (p.inner_t() + 1 > cols) {
    // the lifted code is too short for the staged decoder; search over the
    // same columns but at alphabet q instead of q^d
    std::optional<Interval> outer;
    if (inner_window) outer = Interval{(inner_window->lo - 1) * d + 1, std::min(p.n, inner_window->hi * d)};
    return decode_by_search(z, p.n, p.t, p.s, [&](const Word& x) { return member_cts(x, p); }, outer);
  }
  const Word y = decode_qary_tt1(lift(z, d), p.inner, inner_window);
  return unlift_checked(y, d, p.q, p.n);
}

// ---------------------------------------------------------------------------

Word decode_by_search(const Word& z, std::int64_t n, int t, int s, const std::function<bool(const Word&)>& accept, std::optional<Interval> window) {
  const Symbol q = z.q();
  if (t > n) {
    // a burst longer than the word leaves only n - t + s received symbols
    s -= t - static_cast<int>(n);
    t = static_cast<int>(n);
  }
  if (static_cast<std::int64_t>(z.size()) != n - t + s || s < 0) throw DecodeFailure("decode_by_search: received word has the wrong length");
  const Interval w = window.value_or(Interval{1, n});
  const std::int64_t first = std::max<std::int64_t>(1, w.lo);
  const std::int64_t last = std::min(last_burst_position(static_cast<std::size_t>(n), t), t == 0 ? w.hi + 1 : w.hi - t + 1);
  const Symbol blocks = ipow(q, t);
  std::set<Word> survivors;
  std::vector<Symbol> cand(static_cast<std::size_t>(n));
  for (std::int64_t i = first; i <= last; ++i) {
    for (Symbol b = 0; b < blocks; ++b) {
      for (std::int64_t k = 1; k < i; ++k) cand[static_cast<std::size_t>(k - 1)] = z.at(k);
      Symbol v = b;
      for (int k = t - 1; k >= 0; --k) {
        cand[static_cast<std::size_t>(i - 1 + k)] = v % q;
        v /= q;
      }
      for (std::int64_t k = i + t; k <= n; ++k) cand[static_cast<std::size_t>(k - 1)] = z.at(k - t + s);
      Word x(q, cand);
      if (accept(x)) survivors.insert(std::move(x));
    }
  }
  if (survivors.empty()) throw DecodeFailure("decode_by_search: no accepted word within one burst");
  if (survivors.size() > 1) {
    throw InvariantViolation("decode_by_search: " + format_word(*survivors.begin()) + " and " + format_word(*std::next(survivors.begin())) +
                             " both explain " + format_word(z));
  }
  return *survivors.begin();
}

// ---------------------------------------------------------------------------

bool member(const Word& x, const CodeInstance& code) {
  return std::visit(
      [&](const auto& p) -> bool {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, C22Params>) return member_c22(x, p);
        else if constexpr (std::is_same_v<T, CttParams>) return member_ctt(x, p);
        else if constexpr (std::is_same_v<T, BinaryBurstParams>) return member_bin_tt1(x, p);
        else if constexpr (std::is_same_v<T, QaryBurstParams>) return member_qary_tt1(x, p);
        else return member_cts(x, p);
      },
      code);
}

Word decode(const Word& z, const CodeInstance& code, std::optional<Interval> window) {
  return std::visit(
      [&](const auto& p) -> Word {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, C22Params>) return decode_c22(z, p);
        else if constexpr (std::is_same_v<T, CttParams>) return decode_ctt(z, p);
        else if constexpr (std::is_same_v<T, BinaryBurstParams>) return decode_bin_tt1(z, p, window);
        else if constexpr (std::is_same_v<T, QaryBurstParams>) return decode_qary_tt1(z, p, window);
        else return decode_cts(z, p, window);
      },
      code);
}

std::pair<int, int> burst_type(const CodeInstance& code) {
  return std::visit(
      [](const auto& p) -> std::pair<int, int> {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, C22Params>) return {2, 2};
        else if constexpr (std::is_same_v<T, CttParams>) return {p.t, p.t};
        else if constexpr (std::is_same_v<T, LiftedBurstParams>) return {p.t, p.s};
        else return {p.t, p.t - 1};
      },
      code);
}

std::int64_t code_length(const CodeInstance& code) {
  return std::visit([](const auto& p) { return p.n; }, code);
}

Symbol code_alphabet(const CodeInstance& code) {
  return std::visit(
      [](const auto& p) -> Symbol {
        if constexpr (std::is_same_v<std::decay_t<decltype(p)>, BinaryBurstParams>) return 2;
        else return p.q;
      },
      code);
}

namespace {
double log2_classes(const C22Params& p) { return std::log2(static_cast<double>(4 * p.q * p.q)) + std::log2(static_cast<double>(p.modulus())); }
double log2_classes(const BinaryBurstParams& p) {
  const double t = p.t;
  return std::log2(t * static_cast<double>(p.P)) + std::log2(2 * t) + p.k() * (1 + 2 * std::log2(t));
}
double log2_classes(const QaryBurstParams& p) {
  return log2_classes(p.signature) + static_cast<double>(p.q - 1) * std::log2(2.0 * p.t) +
         2.0 * (2 * p.t) * (p.t - 1) * std::log2(static_cast<double>(p.q));
}
}  // namespace

double log2_class_count(const CodeInstance& code) {
  return std::visit(
      [](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, CttParams> || std::is_same_v<T, LiftedBurstParams>) return log2_classes(p.inner);
        else return log2_classes(p);
      },
      code);
}

double c22_redundancy_claim(std::int64_t n, Symbol q) { return std::log2(static_cast<double>(n)) + 4 * std::log2(static_cast<double>(q)) + 2; }

double ctt_redundancy_claim(std::int64_t n, Symbol q, int t) {
  return std::log2(static_cast<double>(n)) + 4.0 * (t - 1) * std::log2(static_cast<double>(q)) + 2 - std::log2(static_cast<double>(t - 1));
}

std::uint64_t checked_space_size(std::size_t n, Symbol q, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= static_cast<std::uint64_t>(q);
    if (total > cap) {
      throw std::length_error("word space " + std::to_string(q) + "^" + std::to_string(n) + " exceeds the enumeration cap of " + std::to_string(cap) +
                              " words; lower n or raise the cap");
    }
  }
  return total;
}

}  // namespace burst
