// SPDX-License-Identifier: Apache-2.0

// Presentation descriptors:
//
//   {
//     "name": "dual",
//     "generators": [{"name": "alpha", "parity": "odd", "invertible": false, "rank": 0}, ...],
//     "exchange_rules": [
//       {"left": "c", "right": "b", "lambda": "(1)/(1)",
//        "correction": [{"coefficient": "(q^2 - 1)/(q)", "monomial": "alpha*delta"}]}
//     ]
//   }
//
// Coefficients use the qfield text rendering; monomials are rank-ordered
// products "g", "g^k" joined by '*'.

#include "glq/superalgebra.hpp"

#include <json.hpp>

#include <algorithm>

namespace glq {

namespace {

using nlohmann::json;

Monomial parse_monomial(const PresentationBuilder& b, const std::string& text) {
  Monomial m(b.generators().size(), 0);
  if (text == "1" || text.empty()) return m;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('*', start);
    if (end == std::string::npos) end = text.size();
    std::string factor = text.substr(start, end - start);
    factor.erase(std::remove(factor.begin(), factor.end(), ' '), factor.end());
    int exp = 1;
    if (auto caret = factor.find('^'); caret != std::string::npos) {
      exp = std::stoi(factor.substr(caret + 1));
      factor = factor.substr(0, caret);
    }
    bool found = false;
    for (const auto& g : b.generators())
      if (g.name == factor) {
        m[static_cast<std::size_t>(g.rank)] += exp;
        found = true;
      }
    if (!found) throw AlgebraError("descriptor names unknown generator '" + factor + "'");
    start = end + 1;
  }
  return m;
}

}  // namespace

std::string dump_presentation(const Presentation& p) {
  json j;
  j["name"] = p.name();
  j["generators"] = json::array();
  for (const auto& g : p.generators())
    j["generators"].push_back({{"name", g.name},
                               {"parity", std::string(to_string(g.parity))},
                               {"invertible", g.invertible},
                               {"rank", g.rank}});
  j["exchange_rules"] = json::array();
  for (const auto& r : p.rules()) {
    if (r.derived) continue;
    json corr = json::array();
    for (const auto& [m, c] : r.correction) {
      std::string mono = format_monomial(p, m);
      corr.push_back({{"coefficient", c.str()}, {"monomial", mono.empty() ? "1" : mono}});
    }
    j["exchange_rules"].push_back({{"left", p.generator(r.left.gen).name},
                                   {"right", p.generator(r.right.gen).name},
                                   {"lambda", r.lambda.str()},
                                   {"correction", corr}});
  }
  return j.dump(2);
}

Algebra load_presentation(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw AlgebraError(std::string("presentation descriptor: ") + e.what());
  }
  try {
    PresentationBuilder b(j.value("name", std::string("custom")));
    auto gens = j.at("generators");
    std::sort(gens.begin(), gens.end(), [](const json& x, const json& y) {
      return x.value("rank", 0) < y.value("rank", 0);
    });
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const auto& g = gens[i];
      if (g.contains("rank") && g.at("rank").get<std::size_t>() != i)
        throw AlgebraError("presentation descriptor: generator ranks must be 0..n-1");
      const std::string parity = g.at("parity").get<std::string>();
      if (parity != "even" && parity != "odd")
        throw AlgebraError("presentation descriptor: parity must be even or odd");
      b.generator(g.at("name").get<std::string>(), parity == "odd" ? Parity::odd : Parity::even,
                  g.value("invertible", false));
    }
    for (const auto& r : j.at("exchange_rules")) {
      Terms corr;
      for (const auto& t : r.value("correction", json::array())) {
        QRational c = parse_qrational(t.at("coefficient").get<std::string>());
        Monomial m = parse_monomial(b, t.at("monomial").get<std::string>());
        if (!c.is_zero()) corr[m] += c;
      }
      b.exchange(r.at("left").get<std::string>(), r.at("right").get<std::string>(),
                 parse_qrational(r.at("lambda").get<std::string>()), std::move(corr));
    }
    return b.build();
  } catch (const json::exception& e) {
    throw AlgebraError(std::string("presentation descriptor: ") + e.what());
  }
}

}  // namespace glq
