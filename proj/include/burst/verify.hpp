#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "burst/channel.hpp"
#include "burst/codes.hpp"
#include "json.hpp"

namespace burst {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::int64_t cases = 0;
  std::string counterexample;  // empty when pass
};

struct VerificationReport {
  std::string family;
  std::int64_t n = 0;
  Symbol q = 2;
  int t = 0, s = 0;
  std::int64_t P = 0;
  std::int64_t code_size = 0;
  std::optional<double> redundancy_bits;
  std::optional<double> bound_bits;  // sphere-packing lower bound
  std::optional<double> claim_bits;  // pigeonhole upper bound
  std::vector<CheckResult> checks;
  double wall_time = 0.0;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
  }
  nlohmann::json to_json() const;
  std::string to_csv() const;
};

/// Words of Σ_q^n accepted by `member`, in lexicographic order.
std::vector<Word> enumerate_code(const std::function<bool(const Word&)>& member, std::size_t n, Symbol q, std::uint64_t cap = kDefaultEnumerationCap);

/// Pairwise disjointness of the (t,s)-balls; the witness is the smallest shared word.
CheckResult check_disjoint_balls(const std::vector<Word>& code, int t, int s);
/// Same, but balls only contain bursts inside a common length-P window.
CheckResult check_bounded_disjoint(const std::vector<Word>& code, int t, int s, std::int64_t P);
/// The (s,t) balls of a (t,s) code.
CheckResult dual_burst_check(const std::vector<Word>& code, int t, int s, std::int64_t P = 0);

/// Checks every class of Σ_q^n at once: no two words of the same class share a
/// (t,s)-ball element (inside a common window when P < n).
template <class Classify>
CheckResult check_class_disjointness(std::size_t n, Symbol q, int t, int s, std::int64_t P, Classify&& classify, std::uint64_t cap = kDefaultEnumerationCap);

struct Trial {
  Word received;
  std::optional<Interval> window;
  BurstEvent event;
};

/// Every (t,s)-burst of x, paired with every length-P window covering it when P < n.
std::vector<Trial> burst_trials(const Word& x, int t, int s, std::int64_t P);

using Decoder = std::function<Word(const Word&, const std::optional<Interval>&)>;
using TrialSource = std::function<std::vector<Trial>(const Word&)>;

/// Passes iff decode(trial) == x for every x in `code` and every trial of x.
/// Decoder exceptions count as failures and are reported in the witness.
CheckResult roundtrip(const std::string& name, const std::vector<Word>& code, const TrialSource& trials, const Decoder& decoder);

/// Number of InvariantViolation signals seen by the last roundtrip in this thread.
std::int64_t last_invariant_violations();

/// Largest class of a family; "family" is one of c22, ctt, bin_tt1, qary_tt1, cts.
struct BestInstance {
  CodeInstance code;
  std::int64_t size = 0;
  std::int64_t classes = 0;
};
BestInstance best_instance(const std::string& family, std::int64_t n, Symbol q, int t, int s, std::int64_t P, std::uint64_t cap = kDefaultEnumerationCap);
std::string family_name(const CodeInstance& code);

/// Redundancy bounds for an instance of the given size. The lower bound is only
/// reported for unbounded codes with s >= 1.
void fill_redundancy(VerificationReport& r, const CodeInstance& code, std::int64_t size);

/// Enumerate, check disjointness (and the dual), round-trip every burst.
VerificationReport verify_instance(const CodeInstance& code, std::uint64_t cap = kDefaultEnumerationCap);

struct TableRow {
  std::int64_t n = 0;
  std::int64_t best_size = 0;
  double redundancy = 0.0;
  std::optional<double> bound;
  double claim = 0.0;
};
std::vector<TableRow> redundancy_table(const std::string& family, const std::vector<std::int64_t>& ns, Symbol q, int t, int s,
                                       std::uint64_t cap = kDefaultEnumerationCap);
std::string redundancy_csv(const std::vector<TableRow>& rows);

/// t-BSD permutation code on S_n: the rank-sequence burst containment and
/// distinct-parent checks over all of S_n, then a decode roundtrip on the largest class.
VerificationReport verify_tbsd(std::int64_t n, int t);

/// Every center of Σ_q^n: enumerated ball size against the closed form.
CheckResult check_ball_sizes(Symbol q, std::size_t n, int t, int s);
/// Every center: cells pairwise disjoint, contained in the ball, covering it, with the stated sizes.
CheckResult check_ball_partition(Symbol q, std::size_t n, int t, int s);

// ---------------------------------------------------------------------------

template <class Classify>
CheckResult check_class_disjointness(std::size_t n, Symbol q, int t, int s, std::int64_t P, Classify&& classify, std::uint64_t cap) {
  CheckResult res{"class ball disjointness (t=" + std::to_string(t) + ",s=" + std::to_string(s) + ")"};
  const std::uint64_t total = checked_space_size(n, q, cap);
  using Key = std::decay_t<decltype(classify(std::declval<const Word&>()))>;
  std::map<Key, std::uint32_t> ids;
  const bool bounded = P > 0 && P < static_cast<std::int64_t>(n);
  // (class id, window start, received index, word index)
  std::vector<std::tuple<std::uint32_t, std::int64_t, std::uint64_t, std::uint64_t>> rows;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const Word x = unpack(idx, q, n);
    const auto [it, inserted] = ids.emplace(classify(x), static_cast<std::uint32_t>(ids.size()));
    const std::uint32_t id = it->second;
    if (!bounded) {
      for_each_burst_outcome_packed(x, t, s, [&](std::uint64_t z) { rows.emplace_back(id, 0, z, idx); });
      continue;
    }
    for (const Trial& tr : burst_trials(x, t, s, P)) rows.emplace_back(id, tr.window->lo, pack(tr.received), idx);
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  res.cases = static_cast<std::int64_t>(rows.size());
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const auto& a = rows[k - 1];
    const auto& b = rows[k];
    if (std::get<0>(a) == std::get<0>(b) && std::get<1>(a) == std::get<1>(b) && std::get<2>(a) == std::get<2>(b)) {
      res.pass = false;
      res.counterexample = format_word(unpack(std::get<3>(a), q, n)) + " and " + format_word(unpack(std::get<3>(b), q, n)) + " share " +
                           format_word(unpack(std::get<2>(a), q, n - static_cast<std::size_t>(t) + static_cast<std::size_t>(s)));
      break;
    }
  }
  return res;
}

}  // namespace burst
