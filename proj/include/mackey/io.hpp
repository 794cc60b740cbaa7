#pragma once

// JSON serialization (schema "mackey-witt/1") and monoid input parsing.

#include "mackey/cycmonoid.hpp"
#include "mackey/geomfix.hpp"

#include "json.hpp"

#include <string>

namespace mackey::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* schema = "mackey-witt/1";

inline Json integer(const Int& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

inline Json vector(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(integer(x));
  return a;
}

inline Json matrix(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(vector(m.row(i)));
  return a;
}

inline Json group(const FgAbGroup& g) {
  Json f = Json::array();
  for (const auto& d : g.invariant_factors()) f.push_back(integer(d));
  return Json{{"invariant_factors", f}, {"rank", g.free_rank()}};
}

/// The canonical presentation: levels by divisor, then res, tr and weyl.
inline Json mackey_functor(const MackeyFunctor& input) {
  MackeyFunctor m = input.is_canonical() ? input : input.canonicalized();
  Json levels = Json::object(), res = Json::object(), tr = Json::object(), weyl = Json::object();
  for (long d : m.divisors()) {
    levels[std::to_string(d)] = group(m.level(d));
    weyl[std::to_string(d)] = matrix(m.weyl(d));
  }
  for (auto [d, e] : m.edges()) {
    res[std::to_string(e) + "->" + std::to_string(d)] = matrix(m.res_step(e, d));
    tr[std::to_string(d) + "->" + std::to_string(e)] = matrix(m.tr_step(d, e));
  }
  return Json{{"n", m.n()}, {"levels", levels}, {"res", res}, {"tr", tr}, {"weyl", weyl}};
}

/// The presentation as stored, for chain groups whose coordinates matter.
inline Json presentation(const MackeyFunctor& m) {
  Json levels = Json::object(), res = Json::object(), tr = Json::object(), weyl = Json::object();
  for (long d : m.divisors()) {
    levels[std::to_string(d)] = Json{{"generators", m.gens(d)}, {"relations", matrix(m.level(d).relations())}};
    weyl[std::to_string(d)] = matrix(m.weyl(d));
  }
  for (auto [d, e] : m.edges()) {
    res[std::to_string(e) + "->" + std::to_string(d)] = matrix(m.res_step(e, d));
    tr[std::to_string(d) + "->" + std::to_string(e)] = matrix(m.tr_step(d, e));
  }
  return Json{{"n", m.n()}, {"levels", levels}, {"res", res}, {"tr", tr}, {"weyl", weyl}};
}

inline Json witt_vector(const WittVector& w) {
  Json comps = Json::object();
  const auto& s = w.truncation().elements();
  for (std::size_t i = 0; i < s.size(); ++i) comps[std::to_string(s[i])] = integer(w.components()[i]);
  return comps;
}

inline Json tower(const TrTower& t) {
  Json stages = Json::array(), maps = Json::array();
  long n = 1;
  for (const auto& g : t.stages) {
    stages.push_back(Json{{"n", n}, {"group", group(g)}});
    n *= t.p;
  }
  for (const auto& m : t.maps) maps.push_back(matrix(m));
  return Json{{"stages", stages}, {"maps", maps}, {"limit", Json{{"description", t.limit}, {"precision", t.precision}}}};
}

inline Json report(const AxiomReport& r) {
  Json f = Json::array();
  for (const auto& s : r.failures) f.push_back(s);
  return Json{{"ok", r.ok()}, {"checks", r.checks}, {"failures", f}};
}

/// {"elements": [...], "zero": name, "one": name, "table": [[name]],
/// "action": [name]} where action lists the image of each element.
inline PointedGMonoid monoid(const Json& j, long n) {
  auto fail = [](const std::string& why) -> void { throw InvalidArgument("monoid input: " + why); };
  if (!j.is_object()) fail("expected an object");
  for (const char* key : {"elements", "zero", "one", "table", "action"})
    if (!j.contains(key)) fail(std::string("missing \"") + key + "\"");
  PointedGMonoid m;
  m.n = n;
  if (!j["elements"].is_array() || j["elements"].empty()) fail("\"elements\" must be a non-empty array");
  std::map<std::string, std::size_t> index;
  for (const auto& e : j["elements"]) {
    if (!e.is_string()) fail("element names must be strings");
    std::string s = e.get<std::string>();
    if (index.count(s)) fail("duplicate element " + s);
    index[s] = m.names.size();
    m.names.push_back(s);
  }
  auto lookup = [&](const Json& e) -> std::size_t {
    if (!e.is_string() || !index.count(e.get<std::string>())) fail("unknown element " + e.dump());
    return index.at(e.get<std::string>());
  };
  m.zero = lookup(j["zero"]);
  m.one = lookup(j["one"]);
  const std::size_t s = m.names.size();
  if (!j["table"].is_array() || j["table"].size() != s) fail("\"table\" must have one row per element");
  for (const auto& row : j["table"]) {
    if (!row.is_array() || row.size() != s) fail("\"table\" rows must have one entry per element");
    m.table.emplace_back();
    for (const auto& e : row) m.table.back().push_back(lookup(e));
  }
  if (!j["action"].is_array() || j["action"].size() != s) fail("\"action\" must list one image per element");
  for (const auto& e : j["action"]) m.action.push_back(lookup(e));
  AxiomReport rep = check_monoid(m);
  if (!rep.ok()) fail("axiom fails: " + rep.failures.front());
  return m;
}

}  // namespace mackey::io
