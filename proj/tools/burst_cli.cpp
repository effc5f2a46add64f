// burst: command-line front end for the burst-correcting code library.
// Exit codes: 0 ok, 1 domain failure (decode or verification failed), 2 usage.
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "burst/bounds.hpp"
#include "burst/channel.hpp"
#include "burst/codes.hpp"
#include "burst/io.hpp"
#include "burst/verify.hpp"

using namespace burst;

namespace {

constexpr int kOk = 0, kDomain = 1, kUsage = 2;

// Thrown for bad arguments that CLI11 cannot see (malformed words, cap refusals).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Word word_arg(const std::string& text, Symbol q, const char* what) {
  try {
    return parse_word(text, q);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

std::optional<Interval> window_arg(const std::vector<std::int64_t>& w) {
  if (w.empty()) return std::nullopt;
  if (w.size() != 2 || w[0] < 1 || w[1] < w[0]) throw UsageError("--window takes lo,hi with 1 <= lo <= hi");
  return Interval{w[0], w[1]};
}

void print_report(const VerificationReport& r, const std::string& format) {
  if (format == "json") {
    std::cout << r.to_json().dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << r.to_csv();
  } else {
    std::printf("%s n=%lld q=%lld t=%d s=%d P=%lld: %lld codewords\n", r.family.c_str(), static_cast<long long>(r.n), static_cast<long long>(r.q), r.t, r.s,
                static_cast<long long>(r.P), static_cast<long long>(r.code_size));
    if (r.redundancy_bits) std::printf("  redundancy %.6f bits", *r.redundancy_bits);
    if (r.bound_bits) std::printf(", sphere packing %.6f", *r.bound_bits);
    if (r.claim_bits) std::printf(", pigeonhole %.6f", *r.claim_bits);
    std::printf("\n");
    for (const auto& c : r.checks) {
      std::printf("  %s %s (%lld cases)%s%s\n", c.pass ? "pass" : "FAIL", c.name.c_str(), static_cast<long long>(c.cases), c.pass ? "" : ": ", c.counterexample.c_str());
    }
    std::printf("%s in %.2f s\n", r.passed() ? "PASS" : "FAIL", r.wall_time);
  }
}

std::vector<std::int64_t> parse_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string field;
  while (std::getline(in, field, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(field, &used));
      if (used != field.size()) throw std::invalid_argument(field);
    } catch (const std::exception&) {
      throw UsageError("malformed length list '" + text + "'");
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Burst insertion/deletion codes"};
  app.require_subcommand(1);
  std::uint64_t cap = kDefaultEnumerationCap;
  app.add_option("--cap", cap, "largest word space q^n to enumerate")->capture_default_str();

  // ball
  auto* ball_cmd = app.add_subcommand("ball", "ball size by formula and by enumeration");
  Symbol bq = 2;
  std::int64_t bn = 0;
  int bt = 1, bs = 1;
  bool list = false;
  std::string center, contains;
  ball_cmd->add_option("--q", bq, "alphabet size")->required();
  ball_cmd->add_option("--n", bn, "word length")->required();
  ball_cmd->add_option("--t", bt, "deleted symbols")->required();
  ball_cmd->add_option("--s", bs, "inserted symbols")->required();
  ball_cmd->add_flag("--list", list, "print the ball members");
  ball_cmd->add_option("--center", center, "center word (default all zeros)");
  ball_cmd->add_option("--contains", contains, "print whether this word is in the ball");

  // decode
  auto* dec_cmd = app.add_subcommand("decode", "decode a received word with a code instance");
  std::string instance_path, received;
  std::vector<std::int64_t> window;
  dec_cmd->add_option("--instance", instance_path, "code instance JSON file")->required()->check(CLI::ExistingFile);
  dec_cmd->add_option("--word", received, "received word")->required();
  dec_cmd->add_option("--window", window, "lo,hi interval holding the burst")->delimiter(',');

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "exhaustive verification of one instance");
  std::string family, vinstance, format = "text";
  std::int64_t vn = 0, vP = 0;
  Symbol vq = 2;
  int vt = 2, vs = -1;
  bool best = false;
  ver_cmd->add_option("--instance", vinstance, "code instance JSON file")->check(CLI::ExistingFile);
  ver_cmd->add_option("--family", family, "c22, ctt, bin_tt1, qary_tt1, cts or tbsd");
  ver_cmd->add_option("--n", vn, "word length");
  ver_cmd->add_option("--q", vq, "alphabet size");
  ver_cmd->add_option("--t", vt, "burst length");
  ver_cmd->add_option("--s", vs, "inserted symbols (defaults to the family's)");
  ver_cmd->add_option("--P", vP, "window length (default n)");
  ver_cmd->add_flag("--best", best, "verify the largest parameter class (the default for --family)");
  ver_cmd->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

  // table
  auto* tab_cmd = app.add_subcommand("table", "redundancy of the best instance against the bounds, as CSV");
  std::string tfamily, tns;
  Symbol tq = 2;
  int tt = 2, ts = -1;
  tab_cmd->add_option("--family", tfamily, "c22, ctt, bin_tt1, qary_tt1 or cts")->required();
  tab_cmd->add_option("--q", tq, "alphabet size");
  tab_cmd->add_option("--t", tt, "burst length");
  tab_cmd->add_option("--s", ts, "inserted symbols (defaults to the family's)");
  tab_cmd->add_option("--n", tns, "comma-separated lengths")->required();

  // search
  auto* search_cmd = app.add_subcommand("search", "largest parameter class, printed as an instance file");
  std::string sfamily;
  std::int64_t sn = 0, sP = 0;
  Symbol sq = 2;
  int st = 2, ss = -1;
  search_cmd->add_option("--family", sfamily, "c22, ctt, bin_tt1, qary_tt1 or cts")->required();
  search_cmd->add_option("--n", sn, "word length")->required();
  search_cmd->add_option("--q", sq, "alphabet size");
  search_cmd->add_option("--t", st, "burst length");
  search_cmd->add_option("--s", ss, "inserted symbols (defaults to the family's)");
  search_cmd->add_option("--P", sP, "window length (default n)");

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "apply a burst to a word");
  std::string sim_word, event_json;
  Symbol simq = 2;
  int simt = 1, sims = 0;
  std::int64_t simpos = 0;
  std::vector<Symbol> ins;
  std::uint64_t seed = 1;
  bool random_event = false;
  sim_cmd->add_option("--word", sim_word, "input word")->required();
  sim_cmd->add_option("--q", simq, "alphabet size");
  sim_cmd->add_option("--event", event_json, R"(event as JSON, e.g. {"pos":2,"t":2,"ins":[1]})");
  sim_cmd->add_option("--pos", simpos, "burst position");
  sim_cmd->add_option("--t", simt, "deleted symbols");
  sim_cmd->add_option("--ins", ins, "inserted symbols")->delimiter(',');
  sim_cmd->add_flag("--random", random_event, "draw a uniform (t,s)-burst");
  sim_cmd->add_option("--s", sims, "inserted symbols for --random");
  sim_cmd->add_option("--seed", seed, "seed for --random")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  // families whose s is fixed by t
  auto default_s = [](const std::string& fam, int t, int s) {
    if (s >= 0) return s;
    if (fam == "c22" || fam == "ctt") return t;
    if (fam == "bin_tt1" || fam == "qary_tt1" || fam == "tbsd") return t - 1;
    throw UsageError("--s is required for family " + fam);
  };
  auto guarded = [&](auto&& f) -> int {
    try {
      return f();
    } catch (const std::length_error& e) {
      std::cerr << "refusing: " << e.what() << " (see --cap)\n";
      return kUsage;
    }
  };

  try {
    if (*ball_cmd) {
      if (bn < 1 || bt < 0 || bs < 0 || bt > bn || bq < 2) throw UsageError("need q >= 2, n >= 1 and 0 <= t <= n, s >= 0");
      const Word x = center.empty() ? Word(bq, std::vector<Symbol>(static_cast<std::size_t>(bn), 0)) : word_arg(center, bq, "--center");
      if (static_cast<std::int64_t>(x.size()) != bn) throw UsageError("--center must have length n");
      if (!contains.empty()) {
        const Word z = word_arg(contains, bq, "--contains");
        std::cout << (in_ball(x, z, bt, bs) ? "true" : "false") << "\n";
        return kOk;
      }
      const auto members = ball(x, bt, bs);
      if (bt >= 1 && bs >= 1) {
        const std::int64_t formula = ball_size_formula(bn, bq, bt, bs);
        if (formula != static_cast<std::int64_t>(members.size())) {
          std::cerr << "formula " << formula << " disagrees with enumeration " << members.size() << "\n";
          return kDomain;
        }
      }
      std::cout << members.size() << "\n";
      if (list)
        for (const Word& y : members) std::cout << format_word(y) << "\n";
      return kOk;
    }

    if (*dec_cmd) {
      const CodeInstance code = read_instance_file(instance_path);
      const Word z = word_arg(received, code_alphabet(code), "--word");
      try {
        std::cout << format_word(decode(z, code, window_arg(window))) << "\n";
        return kOk;
      } catch (const DecodeFailure& e) {
        std::cerr << "decode failure: " << e.what() << "\n";
        return kDomain;
      }
    }

    if (*ver_cmd) {
      return guarded([&] {
        VerificationReport r;
        if (!vinstance.empty()) {
          r = verify_instance(read_instance_file(vinstance), cap);
        } else {
          if (family.empty() || vn < 1) throw UsageError("verify needs --instance, or --family with --n");
          if (family == "tbsd") {
            r = verify_tbsd(vn, vt);
          } else {
            const int s = default_s(family, vt, vs);
            const BestInstance b = best_instance(family, vn, vq, vt, s, vP > 0 ? vP : vn, cap);
            r = verify_instance(b.code, cap);
          }
        }
        print_report(r, format);
        return r.passed() ? kOk : kDomain;
      });
    }

    if (*tab_cmd) {
      return guarded([&] {
        const auto ns = parse_list(tns);
        if (ns.empty()) throw UsageError("--n needs at least one length");
        std::cout << redundancy_csv(redundancy_table(tfamily, ns, tq, tt, default_s(tfamily, tt, ts), cap));
        return kOk;
      });
    }

    if (*search_cmd) {
      return guarded([&] {
        const BestInstance b = best_instance(sfamily, sn, sq, st, default_s(sfamily, st, ss), sP > 0 ? sP : sn, cap);
        nlohmann::json j = instance_to_json(b.code);
        j["size"] = b.size;
        j["classes"] = b.classes;
        std::cout << j.dump(2) << "\n";
        return kOk;
      });
    }

    if (*sim_cmd) {
      const Word x = word_arg(sim_word, simq, "--word");
      BurstEvent e;
      if (!event_json.empty()) {
        try {
          e = event_from_json(nlohmann::json::parse(event_json));
        } catch (const nlohmann::json::exception& err) {
          throw UsageError(std::string("--event: ") + err.what());
        }
      } else if (random_event) {
        std::mt19937_64 rng(seed);
        const std::int64_t last = last_burst_position(x.size(), simt);
        e.t = simt;
        e.pos = std::uniform_int_distribution<std::int64_t>(1, last)(rng);
        std::uniform_int_distribution<Symbol> sym(0, simq - 1);
        for (int k = 0; k < sims; ++k) e.inserted.push_back(sym(rng));
        std::cout << "# seed " << seed << " event " << event_to_json(e).dump() << "\n";
      } else {
        if (simpos < 1) throw UsageError("simulate needs --event, --random, or --pos with --t and --ins");
        e = {simpos, simt, ins};
      }
      std::cout << format_word(apply_burst(x, e)) << "\n";
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDomain;
  }
  return kUsage;
}
