#include "jroots/json_io.hpp"

#include "jroots/errors.hpp"

namespace jroots {

using nlohmann::json;

json to_json(const LatticeVector& v) {
  return {{"k", v.params().k()}, {"n", v.params().n()}, {"x", v.values()}};
}

LatticeVector lattice_vector_from_json(const json& j) {
  try {
    return LatticeVector(SystemParams(j.at("k").get<int>(), j.at("n").get<int>()),
                         j.at("x").get<std::vector<Coord>>());
  } catch (const json::exception& e) {
    throw ContractError(std::string("malformed lattice vector JSON: ") + e.what());
  }
}

json to_json(const RootCoefficients& c) {
  return {{"k", c.params.k()}, {"n", c.params.n()}, {"m_beta", c.m_beta}, {"m", c.m}};
}

RootCoefficients root_coefficients_from_json(const json& j) {
  try {
    RootCoefficients c{SystemParams(j.at("k").get<int>(), j.at("n").get<int>()), j.at("m_beta").get<Coord>(),
                       j.at("m").get<std::vector<Coord>>()};
    if (c.m.size() != static_cast<std::size_t>(c.params.n() - 1))
      throw ContractError("expected n-1 simple-root coefficients");
    return c;
  } catch (const json::exception& e) {
    throw ContractError(std::string("malformed root coefficient JSON: ") + e.what());
  }
}

json to_json(const ReductionTrace& t) {
  json steps = json::array();
  for (const ReductionStep& s : t.steps)
    steps.push_back({{"sorted", s.sorted.values()}, {"r", s.r}, {"degree", s.degree_after}});
  return {{"steps", steps}, {"terminal", to_string(t.terminal)}};
}

json to_json(const Classification& c) {
  json out{{"kind", to_string(c.kind)}};
  out["degree"] = c.degree ? json(*c.degree) : json(nullptr);
  out["q"] = c.q_value ? json(*c.q_value) : json(nullptr);
  out["trace"] = c.trace ? to_json(*c.trace) : json(nullptr);
  return out;
}

json to_json(const OrbitClass& o) {
  json signature = json::array();
  for (const auto& [value, mult] : o.multiset_signature) signature.push_back({value, mult});
  return {{"representative", o.representative.values()},
          {"degree", o.degree},
          {"kind", to_string(o.kind)},
          {"orbit_size", to_string(o.orbit_size)},
          {"signature", signature}};
}

json to_json(const GenericOrbit& g) {
  return {{"core", g.core},
          {"offset", g.offset},
          {"degree", g.degree},
          {"kind", to_string(g.kind)},
          {"pattern", g.pattern()}};
}

json to_json(const Profile& p) { return {{"rows", p.rows()}}; }

Profile profile_from_json(const SystemParams& params, const json& j) {
  try {
    return Profile(params, j.at("rows").get<std::vector<std::vector<int>>>());
  } catch (const json::exception& e) {
    throw ContractError(std::string("malformed profile JSON: ") + e.what());
  }
}

json rationals_to_json(const std::vector<Rational>& v) {
  json out = json::array();
  for (const Rational& r : v) out.push_back(to_string(r));
  return out;
}

json to_json(const WeightVector& w) {
  return {{"k", w.params.k()},
          {"n", w.params.n()},
          {"coords", rationals_to_json(w.coords)},
          {"root_coeffs", rationals_to_json(w.root_coeffs)}};
}

json to_json(const ManinVector& m) { return {{"a", m.a}, {"b", m.b}}; }

}  // namespace jroots
