#include "burst/io.hpp"

#include <cstdio>
#include <fstream>

#include "doctest.h"

using namespace burst;

TEST_CASE("event json") {
  const BurstEvent e{3, 2, {1, 0}};
  const auto j = event_to_json(e);
  CHECK(j.dump() == R"({"ins":[1,0],"pos":3,"t":2})");
  CHECK(event_from_json(j) == e);
  CHECK_THROWS(event_from_json(nlohmann::json{{"pos", 1}}));
}

TEST_CASE("instance json round trip") {
  const Word x = parse_word("132434412132", 5);
  const std::vector<CodeInstance> codes{
      c22_class_of(parse_word("01101100", 2)),
      ctt_class_of(parse_word("01101100", 2), 3),
      bin_tt1_class_of(parse_word("0110110010", 2), 3, 8),
      qary_tt1_class_of(x, 2, 12),
      qary_tt1_class_of(x, 2, 7),
      cts_class_of(parse_word("011011001011", 2), 3, 1, 12),
  };
  for (const auto& c : codes) {
    const auto j = instance_to_json(c);
    CAPTURE(j.dump());
    CHECK(instance_from_json(j) == c);
  }
  const auto j = instance_to_json(codes[3]);
  CHECK(j["family"] == "qary_tt1");
  CHECK(j["residues"]["gamma"].size() == 4);
  CHECK(j["residues"]["gamma"][0] == 1);
}

TEST_CASE("instance json errors") {
  CHECK_THROWS(instance_from_json(nlohmann::json{{"family", "hamming"}}));
  auto j = instance_to_json(qary_tt1_class_of(parse_word("1324", 5), 2, 4));
  j["residues"]["beta"] = std::vector<int>{0};
  CHECK_THROWS_AS(instance_from_json(j), std::invalid_argument);
  CHECK_THROWS(read_instance_file("/nonexistent/instance.json"));
}

TEST_CASE("instance file") {
  const std::string path = "io_test_instance.json";
  const CodeInstance c = c22_class_of(parse_word("0110", 2));
  {
    std::ofstream out(path);
    out << instance_to_json(c).dump(2);
  }
  CHECK(read_instance_file(path) == c);
  std::remove(path.c_str());
}
