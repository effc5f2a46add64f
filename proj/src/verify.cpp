#include "burst/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>

#include "burst/bounds.hpp"
#include "burst/permutation.hpp"

namespace burst {

std::vector<Word> enumerate_code(const std::function<bool(const Word&)>& member, std::size_t n, Symbol q, std::uint64_t cap) {
  const std::uint64_t total = checked_space_size(n, q, cap);
  std::vector<Word> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    Word x = unpack(idx, q, n);
    if (member(x)) out.push_back(std::move(x));
  }
  return out;
}

namespace {

std::string witness(const Word& x, const Word& y, const Word& z) {
  return format_word(x) + " and " + format_word(y) + " share " + format_word(z);
}

// Sorted (received, window start, codeword index) rows; a repeated (received,
// window) pair from two codewords is an intersection.
CheckResult disjoint_rows(std::string name, const std::vector<Word>& code, const std::function<void(const Word&, const std::function<void(Word, std::int64_t)>&)>& emit) {
  CheckResult res{std::move(name)};
  std::vector<std::tuple<Word, std::int64_t, std::size_t>> rows;
  for (std::size_t k = 0; k < code.size(); ++k) emit(code[k], [&](Word z, std::int64_t w) { rows.emplace_back(std::move(z), w, k); });
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  res.cases = static_cast<std::int64_t>(rows.size());
  for (std::size_t k = 1; k < rows.size(); ++k) {
    const auto& [za, wa, ia] = rows[k - 1];
    const auto& [zb, wb, ib] = rows[k];
    if (za == zb && wa == wb) {
      res.pass = false;
      res.counterexample = witness(code[ia], code[ib], za);
      break;
    }
  }
  return res;
}

}  // namespace

CheckResult check_disjoint_balls(const std::vector<Word>& code, int t, int s) {
  return disjoint_rows("ball disjointness (t=" + std::to_string(t) + ",s=" + std::to_string(s) + ")", code, [&](const Word& x, const auto& add) {
    for (Word& z : ball(x, t, s)) add(std::move(z), 0);
  });
}

CheckResult check_bounded_disjoint(const std::vector<Word>& code, int t, int s, std::int64_t P) {
  return disjoint_rows("bounded ball disjointness (t=" + std::to_string(t) + ",s=" + std::to_string(s) + ",P=" + std::to_string(P) + ")", code,
                       [&](const Word& x, const auto& add) {
                         for (Trial& tr : burst_trials(x, t, s, P)) add(std::move(tr.received), tr.window ? tr.window->lo : 0);
                       });
}

CheckResult dual_burst_check(const std::vector<Word>& code, int t, int s, std::int64_t P) {
  CheckResult r = (P > 0 && !code.empty() && P < static_cast<std::int64_t>(code.front().size())) ? check_bounded_disjoint(code, s, t, P) : check_disjoint_balls(code, s, t);
  r.name = "dual " + r.name;
  return r;
}

std::vector<Trial> burst_trials(const Word& x, int t, int s, std::int64_t P) {
  const auto n = static_cast<std::int64_t>(x.size());
  std::vector<Trial> out;
  const bool bounded = P > 0 && P < n;
  for_each_burst_event(x.size(), x.q(), t, s, [&](const BurstEvent& e) {
    Word z = apply_burst(x, e);
    if (!bounded) {
      out.push_back({std::move(z), std::nullopt, e});
      return;
    }
    const std::int64_t span_hi = e.pos + std::max(t, 1) - 1;
    for (std::int64_t w = std::max<std::int64_t>(1, span_hi - P + 1); w <= std::min(e.pos, n - P + 1); ++w) out.push_back({z, Interval{w, w + P - 1}, e});
  });
  return out;
}

namespace {
thread_local std::int64_t invariant_violations = 0;

std::string describe(const BurstEvent& e) {
  std::string ins;
  for (Symbol v : e.inserted) ins += (ins.empty() ? "" : ",") + std::to_string(v);
  return "{pos " + std::to_string(e.pos) + ", t " + std::to_string(e.t) + ", ins [" + ins + "]}";
}
}  // namespace

std::int64_t last_invariant_violations() { return invariant_violations; }

CheckResult roundtrip(const std::string& name, const std::vector<Word>& code, const TrialSource& trials, const Decoder& decoder) {
  CheckResult res{name};
  invariant_violations = 0;
  for (const Word& x : code) {
    for (const Trial& tr : trials(x)) {
      ++res.cases;
      std::string problem;
      try {
        const Word got = decoder(tr.received, tr.window);
        if (got != x) problem = "decoded " + format_word(got);
      } catch (const InvariantViolation& e) {
        ++invariant_violations;
        problem = std::string("invariant violation: ") + e.what();
      } catch (const std::exception& e) {
        problem = std::string("decoder error: ") + e.what();
      }
      if (!problem.empty() && res.pass) {
        res.pass = false;
        res.counterexample = "x=" + format_word(x) + " event=" + describe(tr.event) + " z=" + format_word(tr.received) +
                             (tr.window ? " window=[" + std::to_string(tr.window->lo) + "," + std::to_string(tr.window->hi) + "]" : "") + ": " + problem;
      }
    }
  }
  return res;
}

std::string family_name(const CodeInstance& code) {
  static const char* names[] = {"c22", "ctt", "bin_tt1", "qary_tt1", "cts"};
  return names[code.index()];
}

BestInstance best_instance(const std::string& family, std::int64_t n, Symbol q, int t, int s, std::int64_t P, std::uint64_t cap) {
  const auto len = static_cast<std::size_t>(n);
  if (P <= 0 || P > n) P = n;
  auto pack_result = [](auto r) { return BestInstance{CodeInstance{r.params}, r.size, r.classes}; };
  if (family == "c22") return pack_result(param_search<C22Params>(len, q, [](const Word& x) { return c22_class_of(x); }, cap));
  if (family == "ctt") return pack_result(param_search<CttParams>(len, q, [t](const Word& x) { return ctt_class_of(x, t); }, cap));
  if (family == "bin_tt1") {
    if (q != 2) throw std::invalid_argument("bin_tt1 is binary; use q = 2");
    return pack_result(param_search<BinaryBurstParams>(len, q, [t, P](const Word& x) { return bin_tt1_class_of(x, t, P); }, cap));
  }
  if (family == "qary_tt1") return pack_result(param_search<QaryBurstParams>(len, q, [t, P](const Word& x) { return qary_tt1_class_of(x, t, P); }, cap));
  if (family == "cts") return pack_result(param_search<LiftedBurstParams>(len, q, [t, s, P](const Word& x) { return cts_class_of(x, t, s, P); }, cap));
  throw std::invalid_argument("unknown family '" + family + "' (expected c22, ctt, bin_tt1, qary_tt1 or cts)");
}

namespace {
std::int64_t window_of(const CodeInstance& code) {
  return std::visit(
      [](const auto& p) -> std::int64_t {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, C22Params> || std::is_same_v<T, CttParams>) return p.n;
        else return p.P;
      },
      code);
}
}  // namespace

void fill_redundancy(VerificationReport& r, const CodeInstance& code, std::int64_t size) {
  const auto [t, s] = burst_type(code);
  const std::int64_t n = code_length(code);
  const Symbol q = code_alphabet(code);
  r.redundancy_bits = size > 0 ? std::optional<double>(code_redundancy(size, n, q)) : std::nullopt;
  const bool bounded = window_of(code) < n;
  r.bound_bits = (s >= 1 && !bounded) ? std::optional<double>(sphere_packing_redundancy(n, q, t, s)) : std::nullopt;
  if (std::holds_alternative<C22Params>(code)) r.claim_bits = c22_redundancy_claim(n, q);
  else if (std::holds_alternative<CttParams>(code)) r.claim_bits = ctt_redundancy_claim(n, q, t);
  else r.claim_bits = log2_class_count(code);
}

VerificationReport verify_instance(const CodeInstance& code, std::uint64_t cap) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.family = family_name(code);
  r.n = code_length(code);
  r.q = code_alphabet(code);
  std::tie(r.t, r.s) = burst_type(code);
  r.P = window_of(code);
  const auto words = enumerate_code([&](const Word& x) { return member(x, code); }, static_cast<std::size_t>(r.n), r.q, cap);
  r.code_size = static_cast<std::int64_t>(words.size());
  fill_redundancy(r, code, r.code_size);
  const bool bounded = r.P < r.n;
  r.checks.push_back(bounded ? check_bounded_disjoint(words, r.t, r.s, r.P) : check_disjoint_balls(words, r.t, r.s));
  if (r.t != r.s) r.checks.push_back(dual_burst_check(words, r.t, r.s, bounded ? r.P : 0));
  const int t = r.t, s = r.s;
  const std::int64_t P = r.P;
  r.checks.push_back(roundtrip("decode roundtrip", words, [&](const Word& x) { return burst_trials(x, t, s, bounded ? P : 0); },
                               [&](const Word& z, const std::optional<Interval>& w) { return decode(z, code, w); }));
  if (r.redundancy_bits && r.bound_bits) {
    CheckResult c{"redundancy at least the sphere-packing bound", *r.redundancy_bits >= *r.bound_bits - 1e-9, 1};
    if (!c.pass) c.counterexample = std::to_string(*r.redundancy_bits) + " < " + std::to_string(*r.bound_bits);
    r.checks.push_back(c);
  }
  if (r.redundancy_bits && r.claim_bits) {
    CheckResult c{"redundancy at most the pigeonhole bound", *r.redundancy_bits <= *r.claim_bits + 1e-9, 1};
    if (!c.pass) c.counterexample = std::to_string(*r.redundancy_bits) + " > " + std::to_string(*r.claim_bits);
    r.checks.push_back(c);
  }
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["family"] = family;
  j["n"] = n;
  j["q"] = q;
  j["t"] = t;
  j["s"] = s;
  j["P"] = P;
  j["code_size"] = code_size;
  j["redundancy_bits"] = redundancy_bits ? nlohmann::json(*redundancy_bits) : nlohmann::json(nullptr);
  j["bound_bits"] = bound_bits ? nlohmann::json(*bound_bits) : nlohmann::json(nullptr);
  j["claim_bits"] = claim_bits ? nlohmann::json(*claim_bits) : nlohmann::json(nullptr);
  j["pass"] = passed();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json cj{{"name", c.name}, {"pass", c.pass}, {"cases", c.cases}};
    if (!c.pass) cj["counterexample"] = c.counterexample;
    j["checks"].push_back(cj);
  }
  j["wall_time"] = wall_time;
  return j;
}

std::string VerificationReport::to_csv() const {
  std::ostringstream out;
  out << "family,n,q,t,s,P,check,pass,cases,counterexample\n";
  for (const auto& c : checks) {
    out << family << ',' << n << ',' << q << ',' << t << ',' << s << ',' << P << ",\"" << c.name << "\"," << (c.pass ? "true" : "false") << ',' << c.cases << ",\""
        << c.counterexample << "\"\n";
  }
  return out.str();
}

std::vector<TableRow> redundancy_table(const std::string& family, const std::vector<std::int64_t>& ns, Symbol q, int t, int s, std::uint64_t cap) {
  if (ns.empty()) throw std::invalid_argument("redundancy_table needs at least one length");
  std::vector<TableRow> rows;
  for (std::int64_t n : ns) {
    const BestInstance best = best_instance(family, n, q, t, s, n, cap);
    VerificationReport r;
    fill_redundancy(r, best.code, best.size);
    rows.push_back({n, best.size, *r.redundancy_bits, r.bound_bits, *r.claim_bits});
  }
  return rows;
}

std::string redundancy_csv(const std::vector<TableRow>& rows) {
  std::string out = "n,best_size,redundancy_bits,sphere_packing_bits,claim_bits,gap_bits\n";
  char buf[256];
  for (const auto& r : rows) {
    if (r.bound) {
      std::snprintf(buf, sizeof buf, "%lld,%lld,%.6f,%.6f,%.6f,%.6f\n", static_cast<long long>(r.n), static_cast<long long>(r.best_size), r.redundancy, *r.bound, r.claim,
                    r.redundancy - *r.bound);
    } else {
      std::snprintf(buf, sizeof buf, "%lld,%lld,%.6f,,%.6f,\n", static_cast<long long>(r.n), static_cast<long long>(r.best_size), r.redundancy, r.claim);
    }
    out += buf;
  }
  return out;
}

CheckResult check_ball_sizes(Symbol q, std::size_t n, int t, int s) {
  CheckResult res{"ball size q=" + std::to_string(q) + " n=" + std::to_string(n) + " t=" + std::to_string(t) + " s=" + std::to_string(s)};
  const std::uint64_t total = checked_space_size(n, q, std::uint64_t{1} << 40);
  const std::uint64_t out_space = checked_space_size(n - static_cast<std::size_t>(t) + static_cast<std::size_t>(s), q, std::uint64_t{1} << 40);
  const std::int64_t expected = ball_size_formula(static_cast<std::int64_t>(n), q, t, s);
  std::vector<std::uint32_t> stamp(out_space, 0);
  std::uint32_t gen = 0;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const Word x = unpack(idx, q, n);
    ++gen;
    std::int64_t distinct = 0;
    for_each_burst_outcome_packed(x, t, s, [&](std::uint64_t z) {
      if (stamp[z] != gen) {
        stamp[z] = gen;
        ++distinct;
      }
    });
    ++res.cases;
    if (distinct != expected) {
      res.pass = false;
      res.counterexample = "center " + format_word(x) + ": " + std::to_string(distinct) + " != " + std::to_string(expected);
      break;
    }
  }
  return res;
}

CheckResult check_ball_partition(Symbol q, std::size_t n, int t, int s) {
  CheckResult res{"ball partition q=" + std::to_string(q) + " n=" + std::to_string(n) + " t=" + std::to_string(t) + " s=" + std::to_string(s)};
  const std::uint64_t total = checked_space_size(n, q, std::uint64_t{1} << 40);
  const std::uint64_t out_space = checked_space_size(n - static_cast<std::size_t>(t) + static_cast<std::size_t>(s), q, std::uint64_t{1} << 40);
  const std::int64_t cells = static_cast<std::int64_t>(n) - t + 2;
  const std::int64_t big = (q - 1) * ipow(q, s - 1), small = ipow(q, s - 1);
  std::vector<std::uint32_t> in_ball_stamp(out_space, 0), in_cell_stamp(out_space, 0);
  std::vector<std::int64_t> cell_size(static_cast<std::size_t>(cells + 1));
  std::uint32_t gen = 0;
  for (std::uint64_t idx = 0; idx < total && res.pass; ++idx) {
    const Word x = unpack(idx, q, n);
    ++gen;
    std::int64_t ball_count = 0;
    for_each_burst_outcome_packed(x, t, s, [&](std::uint64_t z) {
      if (in_ball_stamp[z] != gen) {
        in_ball_stamp[z] = gen;
        ++ball_count;
      }
    });
    std::fill(cell_size.begin(), cell_size.end(), 0);
    std::string problem;
    for_each_partition_member_packed(x, t, s, [&](std::int64_t cell, std::uint64_t y) {
      ++cell_size[static_cast<std::size_t>(cell)];
      if (!problem.empty()) return;
      if (in_ball_stamp[y] != gen) problem = "cell " + std::to_string(cell) + " member outside the ball";
      else if (in_cell_stamp[y] == gen) problem = "cells overlap (cell " + std::to_string(cell) + ")";
      in_cell_stamp[y] = gen;
    });
    std::int64_t covered = 0;
    for (std::int64_t c = 1; c <= cells && problem.empty(); ++c) {
      const std::int64_t want = c < cells ? big : small;
      if (cell_size[static_cast<std::size_t>(c)] != want) problem = "cell " + std::to_string(c) + " has size " + std::to_string(cell_size[static_cast<std::size_t>(c)]);
      covered += cell_size[static_cast<std::size_t>(c)];
    }
    if (problem.empty() && covered != ball_count) problem = "cells cover " + std::to_string(covered) + " of " + std::to_string(ball_count) + " ball words";
    ++res.cases;
    if (!problem.empty()) {
      res.pass = false;
      res.counterexample = "center " + format_word(x) + ": " + problem;
    }
  }
  return res;
}

VerificationReport verify_tbsd(std::int64_t n, int t) {
  if (t < 1 || n < 2 * t + 1 || n > 10) throw std::invalid_argument("verify tbsd needs 1 <= t and 2t+1 <= n <= 10");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r;
  r.family = "tbsd";
  r.n = n;
  r.q = static_cast<Symbol>(factorial(t + 1));
  r.t = 2 * t;
  r.s = t;
  r.P = n;
  std::vector<std::int64_t> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> perms;
  do perms.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));

  CheckResult contained{"descendant rank sequences lie in the (2t,t) ball"};
  CheckResult distinct{"parents of a common descendant have distinct rank sequences"};
  std::map<std::vector<std::int64_t>, std::pair<std::set<Permutation>, std::set<Word>>> family;
  std::map<TbsdParams, std::vector<Permutation>> classes;
  for (const auto& sigma : perms) {
    const Word ranks = overlapping_ranks(sigma, t);
    classes[tbsd_class_of(sigma, t)].push_back(sigma);
    const int del = std::min<int>(2 * t, static_cast<int>(ranks.size()));
    for (std::int64_t i = 1; i + t - 1 <= n; ++i) {
      const auto z = apply_stable_burst_deletion(sigma, i, t);
      ++contained.cases;
      if (contained.pass && !in_ball(ranks, overlapping_ranks(z, t), del, del - t)) {
        contained.pass = false;
        contained.counterexample = "sigma=" + format_permutation(sigma.values()) + " position " + std::to_string(i);
      }
      auto& [parents, seqs] = family[z];
      parents.insert(sigma);
      seqs.insert(ranks);
    }
  }
  for (const auto& [z, f] : family) {
    ++distinct.cases;
    if (distinct.pass && f.first.size() != f.second.size()) {
      distinct.pass = false;
      distinct.counterexample = "descendant " + format_permutation(z);
    }
  }
  const auto best = std::max_element(classes.begin(), classes.end(), [](const auto& a, const auto& b) { return a.second.size() < b.second.size(); });
  CheckResult rt{"decode roundtrip"};
  invariant_violations = 0;
  for (const auto& sigma : best->second) {
    for (std::int64_t i = 1; i + t - 1 <= n; ++i) {
      ++rt.cases;
      std::string problem;
      try {
        const Permutation got = decode_tbsd(apply_stable_burst_deletion(sigma, i, t), best->first);
        if (got != sigma) problem = "decoded " + format_permutation(got.values());
      } catch (const InvariantViolation& e) {
        ++invariant_violations;
        problem = e.what();
      } catch (const std::exception& e) {
        problem = e.what();
      }
      if (!problem.empty() && rt.pass) {
        rt.pass = false;
        rt.counterexample = "sigma=" + format_permutation(sigma.values()) + " position " + std::to_string(i) + ": " + problem;
      }
    }
  }
  r.code_size = static_cast<std::int64_t>(best->second.size());
  r.redundancy_bits = std::log2(static_cast<double>(factorial(static_cast<int>(n)))) - std::log2(static_cast<double>(r.code_size));
  r.checks = {contained, distinct, rt};
  r.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace burst
