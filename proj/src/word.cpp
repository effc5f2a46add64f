#include "burst/word.hpp"

#include <charconv>
#include <limits>
#include <numeric>

namespace burst {

Word::Word(Symbol q, std::vector<Symbol> symbols) : q_(q), symbols_(std::move(symbols)) {
  if (q_ < 2) throw std::invalid_argument("alphabet size must be at least 2");
  for (Symbol v : symbols_) {
    if (v < 0 || v >= q_) throw std::invalid_argument("symbol " + std::to_string(v) + " outside alphabet of size " + std::to_string(q_));
  }
}

Word Word::zeros(Symbol q, std::size_t n) { return Word(q, std::vector<Symbol>(n, 0)); }

Word Word::slice(std::int64_t first, std::int64_t last) const {
  std::vector<Symbol> out;
  for (std::int64_t i = first; i <= last; ++i) out.push_back(at(i));
  return Word(q_, std::move(out));
}

std::int64_t sum_weight(const Word& x) {
  return std::accumulate(x.data().begin(), x.data().end(), std::int64_t{0});
}

std::int64_t vt_syndrome(std::span<const std::int64_t> values) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < values.size(); ++i) acc += static_cast<std::int64_t>(i + 1) * values[i];
  return acc;
}

std::int64_t vt_syndrome(const Word& x) { return vt_syndrome(x.symbols()); }

Word array_row(const Word& x, int t, int i) {
  if (t < 1 || i < 1 || i > t) throw std::invalid_argument("array_row: row index out of range");
  std::vector<Symbol> row;
  for (std::size_t pos = static_cast<std::size_t>(i); pos <= x.size(); pos += static_cast<std::size_t>(t)) {
    row.push_back(x.data()[pos - 1]);
  }
  return Word(x.q(), std::move(row));
}

std::vector<Symbol> array_row_sums(std::span<const std::int64_t> values, int k, std::int64_t modulus) {
  std::vector<Symbol> sums(static_cast<std::size_t>(k), 0);
  if (k == 0) return sums;
  for (std::size_t i = 0; i < values.size(); ++i) sums[i % static_cast<std::size_t>(k)] += values[i];
  for (auto& s : sums) s = ((s % modulus) + modulus) % modulus;
  return sums;
}

Symbol ipow(Symbol base, int exp) {
  Symbol r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > std::numeric_limits<Symbol>::max() / base) throw std::overflow_error("ipow overflow");
    r *= base;
  }
  return r;
}

Word lift(const Word& x, int d) {
  if (d < 1) throw std::invalid_argument("lift: d must be positive");
  const Symbol q = x.q();
  const std::size_t n = x.size();
  const std::size_t cols = (n + static_cast<std::size_t>(d) - 1) / static_cast<std::size_t>(d);
  std::vector<Symbol> out(cols, 0);
  for (std::size_t j = 0; j < cols; ++j) {
    Symbol weight = 1;
    for (int i = 0; i < d; ++i) {
      out[j] += weight * x.at(static_cast<std::int64_t>(j) * d + i + 1);
      weight *= q;
    }
  }
  return Word(ipow(q, d), std::move(out));
}

Word unlift(const Word& y, int d, Symbol q, std::size_t n) {
  if (d < 1) throw std::invalid_argument("unlift: d must be positive");
  if (y.q() != ipow(q, d)) throw std::invalid_argument("unlift: alphabet is not q^d");
  const std::size_t cols = (n + static_cast<std::size_t>(d) - 1) / static_cast<std::size_t>(d);
  if (y.size() != cols) throw std::invalid_argument("unlift: length does not match ceil(n/d)");
  std::vector<Symbol> out;
  out.reserve(n);
  for (std::size_t j = 0; j < cols; ++j) {
    Symbol v = y.data()[j];
    const std::size_t width = std::min<std::size_t>(static_cast<std::size_t>(d), n - j * static_cast<std::size_t>(d));
    for (std::size_t i = 0; i < width; ++i) {
      out.push_back(v % q);
      v /= q;
    }
    if (v != 0) throw std::invalid_argument("unlift: final column encodes symbols beyond length n");
  }
  return Word(q, std::move(out));
}

Word signature(const Word& x) {
  if (x.empty()) throw std::invalid_argument("signature of empty word");
  std::vector<Symbol> a(x.size(), 1);
  for (std::size_t i = 1; i < x.size(); ++i) a[i] = x.data()[i] >= x.data()[i - 1] ? 1 : 0;
  return Word(2, std::move(a));
}

SegmentStarts segment_starts(const Word& x) {
  if (x.empty()) throw std::invalid_argument("segment_starts of empty word");
  const auto n = static_cast<std::int64_t>(x.size());
  SegmentStarts s;
  s.starts.push_back(0);
  // (0, x) indexed 0..n; the first step is always nondecreasing since x_0 = 0.
  bool nondecreasing = true;
  for (std::int64_t k = 1; k <= n; ++k) {
    const bool step_up = x.at(k) >= x.at(k - 1);
    if (step_up != nondecreasing) {
      s.starts.push_back(k - 1);
      nondecreasing = step_up;
    }
  }
  s.starts.push_back(n);
  return s;
}

Word signature_from_starts(const SegmentStarts& s) {
  std::vector<Symbol> a;
  Symbol bit = 1;
  for (std::size_t j = 1; j < s.starts.size(); ++j) {
    for (std::int64_t r = s.starts[j - 1]; r < s.starts[j]; ++r) a.push_back(bit);
    bit = 1 - bit;
  }
  return Word(2, std::move(a));
}

SegmentStarts segment_starts_from_signature(const Word& alpha) {
  if (alpha.empty()) throw std::invalid_argument("segment starts of an empty signature");
  SegmentStarts s;
  s.starts.push_back(0);
  const auto n = static_cast<std::int64_t>(alpha.size());
  for (std::int64_t k = 1; k < n; ++k)
    if (alpha.at(k + 1) != alpha.at(k)) s.starts.push_back(k);
  s.starts.push_back(n);
  return s;
}

Word segment_context(const Word& x, const SegmentStarts& s, std::size_t j, int t, Side side) {
  if (j < 1 || j > s.segment_count()) throw std::invalid_argument("segment_context: segment index out of range");
  if (side == Side::left) {
    const std::int64_t start = s[j];
    return x.slice(start - t + 1, start - 1);
  }
  const std::int64_t end = s[j + 1];
  return x.slice(end + 1, end + t - 1);
}

Word segment_context(const Word& x, std::size_t j, int t, Side side) {
  return segment_context(x, segment_starts(x), j, t, side);
}

namespace {
void require_binary(const Word& x, const char* what) {
  if (x.q() != 2) throw std::invalid_argument(std::string(what) + ": binary word required");
}
}  // namespace

std::vector<std::int64_t> marker(const Word& x) {
  require_binary(x, "marker");
  std::vector<std::int64_t> pos;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x.data()[i] == 1) pos.push_back(static_cast<std::int64_t>(i + 1));
  return pos;
}

Word complement(const Word& x) {
  require_binary(x, "complement");
  std::vector<Symbol> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = 1 - x.data()[i];
  return Word(2, std::move(out));
}

Word indicator(const Word& x) {
  std::vector<Symbol> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x.data()[i] % 2;
  return Word(2, std::move(out));
}

Word pad_to_multiple(const Word& x, int d) {
  if (d < 1) throw std::invalid_argument("pad_to_multiple: d must be positive");
  std::vector<Symbol> out = x.data();
  while (out.size() % static_cast<std::size_t>(d) != 0) out.push_back(0);
  return Word(x.q(), std::move(out));
}

std::string format_word(const Word& x) {
  std::string out;
  if (x.q() <= 10) {
    for (Symbol v : x.data()) out.push_back(static_cast<char>('0' + v));
    return out;
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(x.data()[i]);
  }
  return out;
}

Word parse_word(std::string_view text, Symbol q) {
  std::vector<Symbol> out;
  if (q <= 10 && text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("malformed word: unexpected character '" + std::string(1, c) + "'");
      out.push_back(c - '0');
    }
    return Word(q, std::move(out));
  }
  std::size_t pos = 0;
  while (pos <= text.size() && !text.empty()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    Symbol v = 0;
    auto field = text.substr(pos, comma - pos);
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
      throw std::invalid_argument("malformed word: bad field '" + std::string(field) + "'");
    }
    out.push_back(v);
    pos = comma + 1;
  }
  return Word(q, std::move(out));
}

std::uint64_t pack(const Word& x) {
  std::uint64_t idx = 0;
  const auto q = static_cast<std::uint64_t>(x.q());
  for (Symbol v : x.data()) {
    if (idx > (std::numeric_limits<std::uint64_t>::max() - static_cast<std::uint64_t>(v)) / q) throw std::overflow_error("pack overflow");
    idx = idx * q + static_cast<std::uint64_t>(v);
  }
  return idx;
}

Word unpack(std::uint64_t index, Symbol q, std::size_t n) {
  std::vector<Symbol> out(n);
  for (std::size_t i = n; i-- > 0;) {
    out[i] = static_cast<Symbol>(index % static_cast<std::uint64_t>(q));
    index /= static_cast<std::uint64_t>(q);
  }
  return Word(q, std::move(out));
}

}  // namespace burst
