#include "burst/io.hpp"

#include <fstream>

namespace burst {

using nlohmann::json;

json event_to_json(const BurstEvent& e) { return json{{"pos", e.pos}, {"t", e.t}, {"ins", e.inserted}}; }

BurstEvent event_from_json(const json& j) {
  BurstEvent e;
  e.pos = j.at("pos").get<std::int64_t>();
  e.t = j.at("t").get<int>();
  e.inserted = j.at("ins").get<std::vector<Symbol>>();
  return e;
}

namespace {

std::vector<Symbol> flatten(const std::vector<std::vector<Symbol>>& blocks) {
  std::vector<Symbol> out;
  for (const auto& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::vector<std::vector<Symbol>> unflatten(const std::vector<Symbol>& flat, int blocks, int width) {
  if (static_cast<int>(flat.size()) != blocks * width) throw std::invalid_argument("context residues must hold " + std::to_string(blocks * width) + " symbols");
  std::vector<std::vector<Symbol>> out(static_cast<std::size_t>(blocks));
  for (int j = 0; j < blocks; ++j) out[static_cast<std::size_t>(j)].assign(flat.begin() + j * width, flat.begin() + (j + 1) * width);
  return out;
}

json qary_residues(const QaryBurstParams& p) {
  return json{{"a1", p.signature.a1}, {"a2", p.signature.a2}, {"b", p.signature.b}, {"c", p.signature.c}, {"c_prime", p.signature.c_prime},
              {"beta", p.beta},       {"gamma", flatten(p.gamma)}, {"gamma_prime", flatten(p.gamma_prime)}};
}

QaryBurstParams qary_from(std::int64_t n, Symbol q, int t, std::int64_t P, const json& r) {
  QaryBurstParams p;
  p.n = n;
  p.q = q;
  p.t = t;
  p.P = P;
  p.signature.n = n;
  p.signature.t = t + 1;
  p.signature.P = signature_window(n, P);
  p.signature.a1 = r.at("a1").get<std::int64_t>();
  p.signature.a2 = r.at("a2").get<std::int64_t>();
  p.signature.b = r.at("b").get<std::vector<Symbol>>();
  p.signature.c = r.at("c").get<std::vector<Symbol>>();
  p.signature.c_prime = r.at("c_prime").get<std::vector<Symbol>>();
  p.beta = r.at("beta").get<std::vector<Symbol>>();
  p.gamma = unflatten(r.at("gamma").get<std::vector<Symbol>>(), 2 * t, t - 1);
  p.gamma_prime = unflatten(r.at("gamma_prime").get<std::vector<Symbol>>(), 2 * t, t - 1);
  if (static_cast<Symbol>(p.beta.size()) != q - 1) throw std::invalid_argument("beta must hold q-1 residues");
  const auto k = static_cast<std::size_t>(p.signature.k());
  if (p.signature.b.size() != k || p.signature.c.size() != k || p.signature.c_prime.size() != k) throw std::invalid_argument("b, c, c_prime must each hold floor((t+1)^2/2) residues");
  return p;
}

}  // namespace

json instance_to_json(const CodeInstance& code) {
  return std::visit(
      [](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, C22Params>) {
          return json{{"family", "c22"}, {"n", p.n}, {"q", p.q}, {"t", 2}, {"s", 2}, {"P", p.n}, {"residues", {{"a1", p.a1}, {"a2", p.a2}, {"a3", p.a3}}}};
        } else if constexpr (std::is_same_v<T, CttParams>) {
          return json{{"family", "ctt"}, {"n", p.n}, {"q", p.q}, {"t", p.t}, {"s", p.t}, {"P", p.n},
                      {"residues", {{"a1", p.inner.a1}, {"a2", p.inner.a2}, {"a3", p.inner.a3}}}};
        } else if constexpr (std::is_same_v<T, BinaryBurstParams>) {
          return json{{"family", "bin_tt1"}, {"n", p.n}, {"q", 2}, {"t", p.t}, {"s", p.t - 1}, {"P", p.P},
                      {"residues", {{"a1", p.a1}, {"a2", p.a2}, {"b", p.b}, {"c", p.c}, {"c_prime", p.c_prime}}}};
        } else if constexpr (std::is_same_v<T, QaryBurstParams>) {
          return json{{"family", "qary_tt1"}, {"n", p.n}, {"q", p.q}, {"t", p.t}, {"s", p.t - 1}, {"P", p.P}, {"residues", qary_residues(p)}};
        } else {
          return json{{"family", "cts"}, {"n", p.n}, {"q", p.q}, {"t", p.t}, {"s", p.s}, {"P", p.P}, {"residues", qary_residues(p.inner)}};
        }
      },
      code);
}

CodeInstance instance_from_json(const json& j) {
  const std::string family = j.at("family").get<std::string>();
  const auto n = j.at("n").get<std::int64_t>();
  const Symbol q = j.value("q", Symbol{2});
  const int t = j.value("t", 2);
  const int s = j.value("s", t);
  const std::int64_t P = j.value("P", n);
  const json& r = j.at("residues");
  if (n < 1) throw std::invalid_argument("instance length must be positive");
  if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
  if (P < 1 || P > n) throw std::invalid_argument("P must lie in [1, n]");
  if (family == "c22") return C22Params{n, q, r.at("a1").get<std::int64_t>(), r.at("a2").get<std::int64_t>(), r.at("a3").get<std::int64_t>()};
  if (family == "ctt") {
    if (t < 2) throw std::invalid_argument("ctt needs t >= 2");
    const std::int64_t cols = (n + t - 2) / (t - 1);
    return CttParams{n, q, t, C22Params{cols, ipow(q, t - 1), r.at("a1").get<std::int64_t>(), r.at("a2").get<std::int64_t>(), r.at("a3").get<std::int64_t>()}};
  }
  if (family == "bin_tt1") {
    BinaryBurstParams p;
    p.n = n;
    p.P = P;
    p.t = t;
    p.a1 = r.at("a1").get<std::int64_t>();
    p.a2 = r.at("a2").get<std::int64_t>();
    p.b = r.at("b").get<std::vector<Symbol>>();
    p.c = r.at("c").get<std::vector<Symbol>>();
    p.c_prime = r.at("c_prime").get<std::vector<Symbol>>();
    const auto k = static_cast<std::size_t>(p.k());
    if (p.b.size() != k || p.c.size() != k || p.c_prime.size() != k) throw std::invalid_argument("b, c, c_prime must each hold floor(t^2/2) residues");
    return p;
  }
  if (family == "qary_tt1") return qary_from(n, q, t, P, r);
  if (family == "cts") {
    if (s < 0 || s >= t) throw std::invalid_argument("cts needs t > s >= 0");
    LiftedBurstParams p;
    p.n = n;
    p.q = q;
    p.t = t;
    p.s = s;
    p.P = P;
    const std::int64_t cols = (n + p.d() - 1) / p.d();
    p.inner = qary_from(cols, ipow(q, p.d()), p.inner_t(), lifted_window(n, t, s, P), r);
    return p;
  }
  throw std::invalid_argument("unknown family '" + family + "'");
}

CodeInstance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open instance file " + path);
  return instance_from_json(json::parse(in));
}

}  // namespace burst
