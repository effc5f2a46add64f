#include "burst/verify.hpp"

#include "burst/bounds.hpp"
#include "doctest.h"

using namespace burst;

namespace {
Word w(const char* s, Symbol q = 2) { return parse_word(s, q); }
}  // namespace

TEST_CASE("enumerate_code") {
  CHECK(enumerate_code([](const Word&) { return true; }, 3, 2).size() == 8);
  CHECK(enumerate_code([](const Word&) { return false; }, 3, 2).empty());
  const auto code = enumerate_code([](const Word& x) { return member_c22(x, C22Params{6, 2, 0, 0, 0}); }, 6, 2);
  CHECK(code.size() == 1);
  CHECK(std::is_sorted(code.begin(), code.end()));
  CHECK_THROWS_AS(enumerate_code([](const Word&) { return true; }, 23, 2), std::length_error);
}

TEST_CASE("disjointness checks") {
  CHECK(check_disjoint_balls({w("01101")}, 2, 2).pass);
  const auto full = enumerate_code([](const Word&) { return true; }, 5, 2);
  const auto r = check_disjoint_balls(full, 2, 2);
  CHECK_FALSE(r.pass);
  CHECK(r.counterexample.find("share") != std::string::npos);
  const auto best = best_instance("c22", 8, 2, 2, 2, 8);
  const auto code = enumerate_code([&](const Word& x) { return member(x, best.code); }, 8, 2);
  CHECK(check_disjoint_balls(code, 2, 2).pass);
  CHECK(dual_burst_check(code, 2, 2).pass);
}

TEST_CASE("dual check on (2,1) and (3,1) instances") {
  const auto b21 = best_instance("bin_tt1", 10, 2, 2, 1, 10);
  const auto c21 = enumerate_code([&](const Word& x) { return member(x, b21.code); }, 10, 2);
  CHECK(dual_burst_check(c21, 2, 1).pass);
  const auto b31 = best_instance("cts", 10, 2, 3, 1, 10);
  const auto c31 = enumerate_code([&](const Word& x) { return member(x, b31.code); }, 10, 2);
  CHECK(dual_burst_check(c31, 3, 1).pass);
}

TEST_CASE("class disjointness agrees with per-class checks") {
  const auto classify = [](const Word& x) { return c22_class_of(x); };
  CHECK(check_class_disjointness(8, 2, 2, 2, 0, classify).pass);
  // with a single class the full space collides
  CHECK_FALSE(check_class_disjointness(5, 2, 2, 2, 0, [](const Word&) { return 0; }).pass);
}

TEST_CASE("burst trials") {
  const Word x = w("0110");
  CHECK(burst_trials(x, 2, 1, 0).size() == 3 * 2);
  // P=3: a burst at position 1 only fits window [1,3]; at 2, windows [1,3] and [2,4]
  const auto bounded = burst_trials(x, 2, 1, 3);
  CHECK(bounded.size() == (1 + 2 + 1) * 2);
  for (const auto& tr : bounded) {
    REQUIRE(tr.window);
    CHECK(tr.window->length() == 3);
    CHECK(tr.window->lo <= tr.event.pos);
    CHECK(tr.event.pos + tr.event.t - 1 <= tr.window->hi);
  }
}

TEST_CASE("roundtrip harness reports a broken decoder") {
  const std::vector<Word> code{w("0000"), w("1111")};
  const auto trials = [](const Word& x) { return burst_trials(x, 1, 1, 0); };
  const auto broken = roundtrip("broken", code, trials, [](const Word& z, const auto&) { return z; });
  CHECK_FALSE(broken.pass);
  CHECK(broken.counterexample.find("x=0000") == 0);
  const auto throwing = roundtrip("throwing", code, trials, [](const Word&, const auto&) -> Word { throw InvariantViolation("two survivors"); });
  CHECK_FALSE(throwing.pass);
  CHECK(last_invariant_violations() == throwing.cases);
  const auto majority = roundtrip("majority", code, trials, [](const Word& z, const auto&) { return sum_weight(z) >= 2 ? w("1111") : w("0000"); });
  CHECK(majority.pass);
  CHECK(last_invariant_violations() == 0);
}

TEST_CASE("verify_instance") {
  const auto best = best_instance("c22", 8, 2, 2, 2, 8);
  CHECK(best.size == 4);
  const auto rep = verify_instance(best.code);
  CHECK(rep.passed());
  CHECK(rep.code_size == 4);
  REQUIRE(rep.bound_bits);
  CHECK(*rep.bound_bits == doctest::Approx(sphere_packing_redundancy(8, 2, 2, 2)));
  CHECK(*rep.redundancy_bits == doctest::Approx(6.0));
  const auto j = rep.to_json();
  CHECK(j["pass"] == true);
  CHECK(j["family"] == "c22");
  CHECK(rep.to_csv().rfind("family,n,q,t,s,P,check,pass,cases,counterexample\n", 0) == 0);
  // bounded instances get no sphere-packing bound
  const auto bounded = verify_instance(best_instance("bin_tt1", 10, 2, 2, 1, 6).code);
  CHECK(bounded.passed());
  CHECK_FALSE(bounded.bound_bits);
  CHECK_THROWS_AS(best_instance("hamming", 8, 2, 2, 2, 8), std::invalid_argument);
}

TEST_CASE("redundancy table") {
  const auto rows = redundancy_table("c22", {6, 8, 10}, 2, 2, 2);
  REQUIRE(rows.size() == 3);
  for (const auto& r : rows) {
    REQUIRE(r.bound);
    CHECK(r.redundancy >= *r.bound - 1e-9);
    CHECK(r.redundancy <= r.claim + 1e-9);
  }
  CHECK(*rows[1].bound >= *rows[0].bound);
  const std::string csv = redundancy_csv(rows);
  CHECK(csv.rfind("n,best_size,redundancy_bits,sphere_packing_bits,claim_bits,gap_bits\n", 0) == 0);
  CHECK_THROWS_AS(redundancy_table("c22", {}, 2, 2, 2), std::invalid_argument);
  const auto t1 = redundancy_table("bin_tt1", {8}, 2, 1, 0);
  CHECK_FALSE(t1[0].bound);
}

TEST_CASE("ball sweeps") {
  CHECK(check_ball_sizes(3, 5, 2, 2).pass);
  CHECK(check_ball_partition(3, 5, 2, 2).pass);
  CHECK(check_ball_partition(2, 4, 4, 1).pass);
}
