// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "burst/applications.hpp"
#include "burst/bounds.hpp"
#include "burst/channel.hpp"
#include "burst/codes.hpp"
#include "burst/permutation.hpp"
#include "burst/verify.hpp"

using namespace burst;

namespace {

constexpr double kTol = 1e-9;

struct Outcome {
  bool pass = true;
  std::string detail;
  std::int64_t cases = 0;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
  void absorb(const CheckResult& c) {
    cases += c.cases;
    if (!c.pass) fail(c.name + ": " + c.counterexample);
  }
};

// Runs one criterion and prints its line. budget_s is the runtime target in seconds.
bool criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (o.pass && secs > budget_s) o.fail("took " + std::to_string(secs) + " s, budget " + std::to_string(budget_s) + " s");
  std::printf("criterion %2d %-4s %s | cases %lld | %.1f s%s%s\n", id, o.pass ? "PASS" : "FAIL", title, static_cast<long long>(o.cases), secs,
              o.detail.empty() ? "" : " | ", o.detail.c_str());
  std::fflush(stdout);
  return o.pass;
}

// Every word of Σ_q^n against its own class: ball disjointness within every class and
// a decode roundtrip for every (word, burst, window).
template <class Classify, class Dec>
void every_class(Outcome& o, std::size_t n, Symbol q, int t, int s, std::int64_t P, Classify&& classify, Dec&& dec) {
  o.absorb(check_class_disjointness(n, q, t, s, P, classify));
  const std::uint64_t total = checked_space_size(n, q, kDefaultEnumerationCap);
  CheckResult rt{"roundtrip over every class"};
  for (std::uint64_t idx = 0; idx < total && rt.pass; ++idx) {
    const Word x = unpack(idx, q, n);
    const auto p = classify(x);
    const auto one = roundtrip("roundtrip", {x}, [&](const Word& y) { return burst_trials(y, t, s, P); },
                               [&](const Word& z, const std::optional<Interval>& w) { return dec(z, p, w); });
    rt.cases += one.cases;
    if (!one.pass) {
      rt.pass = false;
      rt.counterexample = one.counterexample;
    }
  }
  o.absorb(rt);
}

std::vector<Word> code_of(const CodeInstance& c) {
  return enumerate_code([&](const Word& x) { return member(x, c); }, static_cast<std::size_t>(code_length(c)), code_alphabet(c));
}

// Best-class instance check: disjointness (windowed when bounded), roundtrip, no double survivors.
void best_class(Outcome& o, const std::string& family, std::int64_t n, Symbol q, int t, int s, std::int64_t P, std::vector<CodeInstance>* keep = nullptr) {
  const BestInstance best = best_instance(family, n, q, t, s, P);
  const auto code = code_of(best.code);
  const bool bounded = P < n;
  o.absorb(bounded ? check_bounded_disjoint(code, t, s, P) : check_disjoint_balls(code, t, s));
  o.absorb(roundtrip(family + " n=" + std::to_string(n) + " P=" + std::to_string(P), code, [&](const Word& x) { return burst_trials(x, t, s, bounded ? P : 0); },
                     [&](const Word& z, const std::optional<Interval>& w) { return decode(z, best.code, w); }));
  if (last_invariant_violations() != 0) o.fail(family + ": two-survivor signal fired " + std::to_string(last_invariant_violations()) + " times");
  if (keep) keep->push_back(best.code);
}

std::vector<Permutation> all_perms(std::size_t n) {
  std::vector<std::int64_t> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

template <class Params>
std::vector<Permutation> largest_class(const std::vector<Permutation>& perms, const std::function<Params(const Permutation&)>& classify, Params& chosen) {
  std::map<Params, std::vector<Permutation>> classes;
  for (const auto& s : perms) classes[classify(s)].push_back(s);
  auto it = std::max_element(classes.begin(), classes.end(), [](const auto& a, const auto& b) { return a.second.size() < b.second.size(); });
  chosen = it->first;
  return it->second;
}

}  // namespace

int main() {
  bool all = true;
  // instances verified by criteria 3-7, reused by the redundancy and duality checks
  std::vector<CodeInstance> verified;

  all &= criterion(1, "ball size equals q^(s-1)((q-1)(n-t+1)+1) for every center", 60, [] {
    Outcome o;
    for (Symbol q = 2; q <= 4; ++q)
      for (int t = 1; t <= 3; ++t)
        for (std::size_t n = static_cast<std::size_t>(t); n <= 9; ++n)
          for (int s = 1; s <= 3; ++s) o.absorb(check_ball_sizes(q, n, t, s));
    return o;
  });

  all &= criterion(2, "ball partition cells disjoint, covering, sized (q-1)q^(s-1) and q^(s-1)", 60, [] {
    Outcome o;
    for (Symbol q = 2; q <= 4; ++q)
      for (int t = 1; t <= 3; ++t)
        for (std::size_t n = static_cast<std::size_t>(t); n <= 9; ++n)
          for (int s = 1; s <= 3; ++s) o.absorb(check_ball_partition(q, n, t, s));
    return o;
  });

  all &= criterion(3, "(2,2) code: every class ball-disjoint, decode_c22 roundtrips", 300, [&] {
    Outcome o;
    for (auto [n, q] : std::vector<std::pair<std::size_t, Symbol>>{{6, 2}, {8, 2}, {4, 3}, {6, 3}}) {
      every_class(o, n, q, 2, 2, 0, [](const Word& x) { return c22_class_of(x); }, [](const Word& z, const C22Params& p, const auto&) { return decode_c22(z, p); });
      verified.push_back(best_instance("c22", static_cast<std::int64_t>(n), q, 2, 2, static_cast<std::int64_t>(n)).code);
    }
    return o;
  });

  all &= criterion(4, "(t,t) lifting: q=2 t=3 n=8, every class, all (3,3)-bursts", 300, [&] {
    Outcome o;
    every_class(o, 8, 2, 3, 3, 0, [](const Word& x) { return ctt_class_of(x, 3); }, [](const Word& z, const CttParams& p, const auto&) { return decode_ctt(z, p); });
    verified.push_back(best_instance("ctt", 8, 2, 3, 3, 8).code);
    return o;
  });

  all &= criterion(5, "binary (t,t-1): t=2 n=10, t=3 n=12, P=n and P=2t+2", 600, [&] {
    Outcome o;
    for (auto [n, t] : std::vector<std::pair<std::int64_t, int>>{{10, 2}, {12, 3}}) {
      best_class(o, "bin_tt1", n, 2, t, t - 1, n, &verified);
      best_class(o, "bin_tt1", n, 2, t, t - 1, 2 * t + 2, &verified);
    }
    return o;
  });

  all &= criterion(6, "q-ary (t,t-1): q=3 t=2 n=9 every class, and the worked decode", 600, [&] {
    Outcome o;
    every_class(o, 9, 3, 2, 1, 0, [](const Word& x) { return qary_tt1_class_of(x, 2, 9); },
                [](const Word& z, const QaryBurstParams& p, const auto& w) { return decode_qary_tt1(z, p, w); });
    verified.push_back(best_instance("qary_tt1", 9, 3, 2, 1, 9).code);
    const Word x = parse_word("132434412132", 5);
    const Word z = parse_word("13243432132", 5);
    const auto p = qary_tt1_class_of(x, 2, 12);
    ++o.cases;
    if (p.gamma[0][0] != 1 || p.gamma_prime[0][0] != 0) o.fail("worked example: class-1 context residues are not (1, 0)");
    if (decode_qary_tt1(z, p) != x) o.fail("worked example: decode did not return 132434412132");
    return o;
  });

  all &= criterion(7, "general (t,s): (2,0) and (3,1), q=2 n=12, every class", 600, [&] {
    Outcome o;
    for (auto [t, s] : std::vector<std::pair<int, int>>{{2, 0}, {3, 1}}) {
      every_class(o, 12, 2, t, s, 0, [t = t, s = s](const Word& x) { return cts_class_of(x, t, s, 12); },
                  [](const Word& z, const LiftedBurstParams& p, const auto& w) { return decode_cts(z, p, w); });
      verified.push_back(best_instance("cts", 12, 2, t, s, 12).code);
    }
    return o;
  });

  all &= criterion(8, "redundancy: sphere packing <= r(C) <= pigeonhole claim (+1e-9)", 600, [&] {
    Outcome o;
    for (const auto& c : verified) {
      const auto [t, s] = burst_type(c);
      const std::int64_t n = code_length(c);
      const bool bounded = std::visit([&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, C22Params> || std::is_same_v<T, CttParams>) return false;
        else return p.P < n;
      }, c);
      if (s < 1 || bounded) continue;
      VerificationReport r;
      const auto size = static_cast<std::int64_t>(code_of(c).size());
      fill_redundancy(r, c, size);
      ++o.cases;
      const std::string tag = family_name(c) + " n=" + std::to_string(n) + " t=" + std::to_string(t) + " s=" + std::to_string(s);
      if (size > max_code_size(n, code_alphabet(c), t, s)) o.fail(tag + ": size above the packing bound");
      if (*r.redundancy_bits < *r.bound_bits - kTol) o.fail(tag + ": redundancy below the sphere-packing bound");
      if (*r.redundancy_bits > *r.claim_bits + kTol) o.fail(tag + ": redundancy above the claim " + std::to_string(*r.claim_bits));
    }
    return o;
  });

  all &= criterion(9, "applications: inversion, absorption A/B, <=t burst and localized deletions", 600, [] {
    Outcome o;
    const std::size_t n = 8;
    const Symbol q = 4;
    const std::uint64_t total = ipow(q, static_cast<int>(n));
    CheckResult inv{"inversion"}, absA{"absorption A"}, absB{"absorption B"};
    auto note = [](CheckResult& c, const Word& x, const std::string& what) {
      if (!c.pass) return;
      c.pass = false;
      c.counterexample = "x=" + format_word(x) + " " + what;
    };
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      const Word x = unpack(idx, q, n);
      for (int t = 2; t <= 4; ++t) {
        const auto p = ctt_class_of(x, t);
        for (std::int64_t len = 2; len <= t; ++len)
          for (std::int64_t i = 1; i + len - 1 <= static_cast<std::int64_t>(n); ++i) {
            ++inv.cases;
            try {
              if (decode_inversion(apply_inversion(x, i, len), p) != x) note(inv, x, "inversion at " + std::to_string(i));
            } catch (const std::exception& e) {
              note(inv, x, e.what());
            }
          }
      }
      const auto pa = cts_class_of(x, 2, 1, static_cast<std::int64_t>(n));
      const auto pb = c22_class_of(x);
      for (std::int64_t i = 1; i <= static_cast<std::int64_t>(n); ++i) {
        ++absA.cases;
        try {
          if (decode_absorption_A(apply_absorption_A(x, i), pa) != x) note(absA, x, "absorption A at " + std::to_string(i));
        } catch (const std::exception& e) {
          note(absA, x, e.what());
        }
        for (Symbol v = 0; v < x.at(i); ++v) {
          ++absB.cases;
          try {
            if (decode_absorption_B(apply_absorption_B(x, i, v), pb) != x) note(absB, x, "absorption B at " + std::to_string(i));
          } catch (const std::exception& e) {
            note(absB, x, e.what());
          }
        }
      }
    }
    o.absorb(inv);
    o.absorb(absA);
    o.absorb(absB);

    // deletions: q=2, t=3, n=12, every word under its own class
    const int t = 3;
    const std::size_t m = 12;
    const std::int64_t genie_P = 2 * t;
    const TrivialLocator trivial;
    CheckResult leq{"<=t burst deletion"}, loc{"localized deletion"};
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << m); ++idx) {
      const Word x = unpack(idx, 2, m);
      const auto leq_full = leq_burst_del_class_of(x, t, static_cast<std::int64_t>(m));
      const auto leq_win = leq_burst_del_class_of(x, t, genie_P);
      const auto loc_full = localized_class_of(x, t, static_cast<std::int64_t>(m));
      const auto loc_win = localized_class_of(x, t, genie_P);
      for (int i = 1; i <= t; ++i)
        for (std::int64_t pos = 1; pos + i - 1 <= static_cast<std::int64_t>(m); ++pos) {
          const Word z = apply_burst(x, {pos, i, {}});
          const GenieLocator genie({pos, pos + i - 1}, genie_P);
          leq.cases += 2;
          try {
            if (decode_leq_burst_del(z, leq_full, trivial) != x) note(leq, x, "trivial locator, deletion at " + std::to_string(pos));
            if (decode_leq_burst_del(z, leq_win, genie) != x) note(leq, x, "genie locator, deletion at " + std::to_string(pos));
          } catch (const std::exception& e) {
            note(leq, x, e.what());
          }
        }
      for (std::int64_t start = 1; start + t - 1 <= static_cast<std::int64_t>(m); ++start)
        for (int mask = 1; mask < (1 << t); ++mask) {
          std::vector<int> offsets;
          for (int k = 0; k < t; ++k)
            if (mask >> k & 1) offsets.push_back(k);
          const Word z = apply_localized_deletions(x, start, t, offsets);
          const GenieLocator genie({start, start + t - 1}, genie_P);
          loc.cases += 2;
          try {
            if (decode_localized(z, loc_full, trivial) != x) note(loc, x, "trivial locator, window " + std::to_string(start));
            if (decode_localized(z, loc_win, genie) != x) note(loc, x, "genie locator, window " + std::to_string(start));
          } catch (const std::exception& e) {
            note(loc, x, e.what());
          }
        }
    }
    o.absorb(leq);
    o.absorb(loc);
    return o;
  });

  all &= criterion(10, "permutations: rank-burst containment, distinct rank sequences, t-BSD and <=t-BSD decoding", 600, [] {
    Outcome o;
    for (std::size_t n = 3; n <= 7; ++n)
      for (int t = 1; t <= 2; ++t) {
        if (n < static_cast<std::size_t>(2 * t + 1)) continue;
        // descendant -> (parents, their rank sequences); distinct parents need distinct sequences
        std::map<std::vector<std::int64_t>, std::pair<std::set<Permutation>, std::set<Word>>> family;
        for (const auto& s : all_perms(n)) {
          const Word r = overlapping_ranks(s, t);
          const int del = std::min<int>(2 * t, static_cast<int>(r.size()));
          for (std::int64_t i = 1; i + t - 1 <= static_cast<std::int64_t>(n); ++i) {
            const auto z = apply_stable_burst_deletion(s, i, t);
            ++o.cases;
            if (!in_ball(r, overlapping_ranks(z, t), del, del - t)) o.fail("rank burst: " + format_permutation(s.values()) + " at " + std::to_string(i));
            auto& [parents, ranks] = family[z];
            parents.insert(s);
            ranks.insert(r);
          }
        }
        for (const auto& [z, f] : family) {
          ++o.cases;
          if (f.first.size() != f.second.size()) o.fail("two parents of " + format_permutation(z) + " share a rank sequence");
        }
      }

    for (std::size_t n = 5; n <= 8; ++n)
      for (int t = 1; t <= 2; ++t) {
        if (n < static_cast<std::size_t>(2 * t + 1)) continue;
        const auto perms = all_perms(n);
        TbsdParams p;
        const auto code = largest_class<TbsdParams>(perms, [t](const Permutation& s) { return tbsd_class_of(s, t); }, p);
        for (const auto& s : code)
          for (std::int64_t i = 1; i + t - 1 <= static_cast<std::int64_t>(n); ++i) {
            ++o.cases;
            try {
              if (decode_tbsd(apply_stable_burst_deletion(s, i, t), p) != s) o.fail("t-BSD: " + format_permutation(s.values()));
            } catch (const std::exception& e) {
              o.fail("t-BSD: " + format_permutation(s.values()) + ": " + e.what());
            }
          }
        if (t != 2) continue;
        // <=t-BSD with a genie window of length P and with the whole word
        for (std::int64_t P : {std::int64_t{3}, static_cast<std::int64_t>(n)}) {
          LeqTbsdParams lp;
          const auto lcode = largest_class<LeqTbsdParams>(perms, [&](const Permutation& s) { return leq_tbsd_class_of(s, t, P); }, lp);
          for (const auto& s : lcode)
            for (int i = 1; i <= t; ++i)
              for (std::int64_t pos = 1; pos + i - 1 <= static_cast<std::int64_t>(n); ++pos) {
                const std::int64_t lo = std::max<std::int64_t>(1, std::min<std::int64_t>(pos, static_cast<std::int64_t>(n) - P + 1));
                ++o.cases;
                try {
                  if (decode_leq_tbsd(apply_stable_burst_deletion(s, pos, i), lp, {lo, lo + P - 1}) != s) o.fail("<=t-BSD: " + format_permutation(s.values()));
                } catch (const std::exception& e) {
                  o.fail("<=t-BSD: " + format_permutation(s.values()) + ": " + e.what());
                }
              }
        }
      }
    return o;
  });

  all &= criterion(11, "duality: every verified (t,s) instance with t != s passes (s,t) disjointness", 600, [&] {
    Outcome o;
    for (const auto& c : verified) {
      const auto [t, s] = burst_type(c);
      if (t == s) continue;
      const std::int64_t n = code_length(c);
      const std::int64_t P = std::visit([&](const auto& p) -> std::int64_t {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, C22Params> || std::is_same_v<T, CttParams>) return n;
        else return p.P;
      }, c);
      o.absorb(dual_burst_check(code_of(c), t, s, P < n ? P : 0));
    }
    return o;
  });

  std::printf("acceptance %s\n", all ? "PASS" : "FAIL");
  return all ? 0 : 1;
}
