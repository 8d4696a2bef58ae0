// qweb: exact symbolic engine for affine webs of type Q.
// Copyright (C) 2026 the qweb developers.  Licensed under the MIT license.

#include "qweb_cli/json_io.hpp"

#include <stdexcept>

namespace qweb::cli {

Json to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_string()) throw std::invalid_argument("scalar must be a string");
  return Scalar::parse(j.get<std::string>());
}

Json to_json(const ElementaryCFD& c) {
  Json legs = Json::array();
  for (const auto& [ij, d] : c.decor())
    legs.push_back({{"row", ij.first + 1}, {"col", ij.second + 1}, {"nu", d.nu}, {"eta", d.eta}});
  return {{"matrix", c.matrix()}, {"legs", legs}};
}

ElementaryCFD cfd_from_json(const Json& j) {
  auto a = j.at("matrix").get<IntMatrix>();
  std::map<std::pair<int, int>, LegDecor> decor;
  if (j.contains("legs"))
    for (const auto& l : j.at("legs")) {
      LegDecor d{l.value("nu", Partition{}), l.value("eta", Partition{})};
      if (!decor.emplace(std::pair{l.at("row").get<int>() - 1, l.at("col").get<int>() - 1}, d).second)
        throw std::invalid_argument("leg listed twice");
    }
  return ElementaryCFD(std::move(a), std::move(decor));
}

Json to_json(const NormalMorphism& m) {
  Json terms = Json::array();
  for (const auto& [c, v] : m.terms()) {
    Json t = to_json(c);
    t["degree"] = c.degree();
    t["coeff"] = to_json(v);
    terms.push_back(std::move(t));
  }
  return {{"source", m.src()}, {"target", m.tgt()}, {"degree", m.degree()}, {"terms", terms}};
}

NormalMorphism normal_from_json(const Json& j) {
  NormalMorphism m(j.at("source").get<Composition>(), j.at("target").get<Composition>());
  for (const auto& t : j.at("terms")) {
    ElementaryCFD c = cfd_from_json(t);
    if (c.source() != m.src() || c.target() != m.tgt())
      throw std::invalid_argument("term boundary differs from the morphism's");
    m.add(c, scalar_from_json(t.at("coeff")));
  }
  return m;
}

Json to_json(const SuperLinearMap& m) {
  Json entries = Json::array();
  const auto& cols = m.columns();
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, v] : cols[c]) entries.push_back(Json::array({r, c, v.str()}));
  auto par = m.parity();
  return {{"n", m.n()},
          {"source_factors", m.source_factors()},
          {"target_factors", m.target_factors()},
          {"rows", m.rows()},
          {"cols", m.cols()},
          {"parity", par ? Json(*par) : Json(nullptr)},
          {"entries", entries}};
}

Json to_json(const PBWMonomial& m) { return {{"w", m.w}, {"c", m.c}, {"x", m.x}}; }

Json to_json(const SergeevElement& u) {
  Json terms = Json::array();
  for (const auto& [m, v] : u.terms()) {
    Json t = to_json(m);
    t["coeff"] = to_json(v);
    terms.push_back(std::move(t));
  }
  return {{"n", u.n()}, {"str", u.str()}, {"terms", terms}};
}

Json error_json(const std::string& kind, const std::string& message,
                std::optional<std::pair<int, int>> where) {
  Json e = {{"kind", kind}, {"message", message}};
  if (where) {
    e["line"] = where->first;
    e["column"] = where->second;
  }
  return {{"error", e}};
}

}  // namespace qweb::cli
