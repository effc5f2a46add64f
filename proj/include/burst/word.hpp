#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace burst {

using Symbol = std::int64_t;

/// Thrown when a decoder finds no codeword consistent with the received word.
class DecodeFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an exhaustive search finds two survivors where the code
/// construction guarantees at most one.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Closed 1-based interval [lo, hi] of coordinates.
struct Interval {
  std::int64_t lo = 1;
  std::int64_t hi = 0;

  std::int64_t length() const { return hi >= lo ? hi - lo + 1 : 0; }
  bool contains(std::int64_t i) const { return lo <= i && i <= hi; }
  bool contains(const Interval& other) const {
    return other.length() == 0 || (lo <= other.lo && other.hi <= hi);
  }
  auto operator<=>(const Interval&) const = default;
};

/// A finite word over the alphabet {0, ..., q-1}.
///
/// Coordinates are 1-based at the API level. Reads outside [1, n] through
/// at() return 0, which is the padding convention every syndrome relies on.
class Word {
 public:
  Word() = default;
  Word(Symbol q, std::vector<Symbol> symbols);

  static Word zeros(Symbol q, std::size_t n);

  Symbol q() const { return q_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }

  /// 1-based read with zero padding outside [1, n].
  Symbol at(std::int64_t i) const {
    return (i >= 1 && i <= static_cast<std::int64_t>(symbols_.size())) ? symbols_[static_cast<std::size_t>(i - 1)] : 0;
  }

  std::span<const Symbol> symbols() const { return symbols_; }
  const std::vector<Symbol>& data() const { return symbols_; }

  /// Substring x_[first, last] (1-based, inclusive); out-of-range coordinates read as 0.
  Word slice(std::int64_t first, std::int64_t last) const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  Symbol q_ = 2;
  std::vector<Symbol> symbols_;
};

/// Maximal monotone segment starts of (0, x): S_1 = 0 < S_2 < ... < S_{m+1} = n.
struct SegmentStarts {
  std::vector<std::int64_t> starts;

  std::size_t segment_count() const { return starts.empty() ? 0 : starts.size() - 1; }
  /// 1-based access S(x)_j.
  std::int64_t operator[](std::size_t j) const { return starts.at(j - 1); }
  bool operator==(const SegmentStarts&) const = default;
};

enum class Side { left, right };

std::int64_t sum_weight(const Word& x);
std::int64_t vt_syndrome(const Word& x);
std::int64_t vt_syndrome(std::span<const std::int64_t> values);

/// Row i (1-based) of the t-row column-major array layout: x_i, x_{t+i}, ...
Word array_row(const Word& x, int t, int i);

/// Row sums of the k-row array layout of an integer sequence, reduced mod `modulus`.
std::vector<Symbol> array_row_sums(std::span<const std::int64_t> values, int k, std::int64_t modulus);

/// Integer representation of the d-symbol columns; alphabet becomes q^d.
Word lift(const Word& x, int d);
/// Inverse of lift for a word of original length n over alphabet q.
Word unlift(const Word& y, int d, Symbol q, std::size_t n);

Word signature(const Word& x);
SegmentStarts segment_starts(const Word& x);
/// Rebuilds the signature from segment run lengths.
Word signature_from_starts(const SegmentStarts& s);
/// Segment starts read off a signature alone (a new segment starts wherever the bit flips).
SegmentStarts segment_starts_from_signature(const Word& alpha);
/// The (t-1)-symbol context to the left or right of segment j.
Word segment_context(const Word& x, const SegmentStarts& s, std::size_t j, int t, Side side);
Word segment_context(const Word& x, std::size_t j, int t, Side side);

/// Coordinates of the ones of a binary word.
std::vector<std::int64_t> marker(const Word& x);
Word complement(const Word& x);
Word indicator(const Word& x);
Word pad_to_multiple(const Word& x, int d);

/// Integer power with overflow check.
Symbol ipow(Symbol base, int exp);

/// Compact digit string for q <= 10, comma-separated otherwise.
std::string format_word(const Word& x);
/// Parses either representation; q is always supplied by the caller.
Word parse_word(std::string_view text, Symbol q);

/// Lexicographic index of x in Σ_q^n (x_1 most significant).
std::uint64_t pack(const Word& x);
Word unpack(std::uint64_t index, Symbol q, std::size_t n);

}  // namespace burst
