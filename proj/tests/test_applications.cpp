#include "burst/applications.hpp"

#include "burst/channel.hpp"
#include "burst/verify.hpp"
#include "doctest.h"

using namespace burst;

namespace {
Word w(const char* s, Symbol q = 2) { return parse_word(s, q); }
}  // namespace

TEST_CASE("locators") {
  const TrivialLocator trivial;
  CHECK(trivial.locate(w("0101"), 6) == Interval{1, 6});
  const GenieLocator genie({9, 10}, 4);
  CHECK(genie.locate(w("0"), 10) == Interval{7, 10});
  CHECK(GenieLocator({2, 3}, 4).locate(w("0"), 10) == Interval{2, 5});
  CHECK(GenieLocator({2, 3}, 12).locate(w("0"), 10) == Interval{1, 10});
  CHECK_THROWS_AS(GenieLocator({2, 7}, 4).locate(w("0"), 10), std::invalid_argument);
  CHECK(make_locator("trivial")->name() == "trivial");
  CHECK(make_locator("genie", {1, 1}, 3)->name() == "genie");
  CHECK_THROWS_AS(make_locator("oracle"), std::invalid_argument);
}

TEST_CASE("inversion example") {
  const Word x = w("012301230123", 4);
  const auto p = ctt_class_of(x, 4);
  CHECK(decode_inversion(apply_inversion(x, 1, 4), p) == x);
  CHECK(decode_inversion(x, p) == x);
}

TEST_CASE("absorption examples") {
  const Word x = w("01231113", 4);
  const auto pa = cts_class_of(x, 2, 1, 8);
  CHECK(decode_absorption_A(w("0123123", 4), pa) == x);
  CHECK(decode_absorption_A(apply_absorption_A(x, 8), pa) == x);
  CHECK_THROWS_AS(decode_absorption_A(w("0123123", 4), cts_class_of(x, 3, 1, 8)), std::invalid_argument);
  const Word y = w("01231312", 4);
  const auto pb = c22_class_of(y);
  for (Symbol v = 0; v < 3; ++v) CHECK(decode_absorption_B(apply_absorption_B(y, 4, v), pb) == y);
}

TEST_CASE("burst deletions up to t, q=2, t=3, n=12") {
  const std::size_t n = 12;
  const int t = 3;
  for (std::int64_t P : {std::int64_t{12}, std::int64_t{6}}) {
    CAPTURE(P);
    const TrivialLocator trivial;
    const auto best = param_search<LeqBurstDeletionParams>(n, 2, [&](const Word& x) { return leq_burst_del_class_of(x, t, P); });
    const auto code = enumerate_code([&](const Word& x) { return member_leq_burst_del(x, best.params, trivial); }, n, 2);
    REQUIRE(!code.empty());
    std::int64_t cases = 0;
    for (const Word& x : code) {
      CHECK(decode_leq_burst_del(x, best.params, trivial) == x);
      for (int i = 1; i <= t; ++i)
        for (std::int64_t pos = 1; pos + i - 1 <= static_cast<std::int64_t>(n); ++pos) {
          const Word z = apply_burst(x, {pos, i, {}});
          const GenieLocator genie({pos, pos + i - 1}, P);
          REQUIRE(decode_leq_burst_del(z, best.params, genie) == x);
          if (P == static_cast<std::int64_t>(n)) REQUIRE(decode_leq_burst_del(z, best.params, trivial) == x);
          ++cases;
        }
    }
    CHECK(cases > 0);
  }
}

TEST_CASE("localized deletions, q=2, t=3, n=12") {
  const std::size_t n = 12;
  const int t = 3;
  for (std::int64_t P : {std::int64_t{12}, std::int64_t{6}}) {
    CAPTURE(P);
    const TrivialLocator trivial;
    const auto best = param_search<LocalizedDeletionParams>(n, 2, [&](const Word& x) { return localized_class_of(x, t, P); });
    const auto code = enumerate_code([&](const Word& x) { return member_localized(x, best.params, trivial); }, n, 2);
    REQUIRE(!code.empty());
    for (const Word& x : code)
      for (std::int64_t start = 1; start + t - 1 <= static_cast<std::int64_t>(n); ++start)
        for (int mask = 1; mask < (1 << t); ++mask) {
          std::vector<int> offsets;
          for (int o = 0; o < t; ++o)
            if (mask >> o & 1) offsets.push_back(o);
          const Word z = apply_localized_deletions(x, start, t, offsets);
          const GenieLocator genie({start, start + t - 1}, P);
          REQUIRE(decode_localized(z, best.params, genie) == x);
          if (P == static_cast<std::int64_t>(n)) REQUIRE(decode_localized(z, best.params, trivial) == x);
        }
  }
}

TEST_CASE("length inference") {
  const Word x = w("000000000000");
  const auto p = leq_burst_del_class_of(x, 3, 12);
  const TrivialLocator trivial;
  CHECK(decode_leq_burst_del(w("0000000000"), p, trivial) == x);
  CHECK_THROWS_AS(decode_leq_burst_del(w("00000000"), p, trivial), DecodeFailure);
  const auto bounded = leq_burst_del_class_of(x, 3, 6);
  // the trivial window is longer than P
  CHECK_THROWS_AS(decode_leq_burst_del(w("0000000000"), bounded, trivial), DecodeFailure);
}
