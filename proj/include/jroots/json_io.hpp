#pragma once

#include <json.hpp>

#include "jroots/classify.hpp"
#include "jroots/cluster.hpp"
#include "jroots/enumerate.hpp"
#include "jroots/families.hpp"
#include "jroots/lattice.hpp"

namespace jroots {

/// {"k":int,"n":int,"x":[int,...]}
nlohmann::json to_json(const LatticeVector& v);
LatticeVector lattice_vector_from_json(const nlohmann::json& j);

/// {"k":int,"n":int,"m_beta":int,"m":[int,...]}
nlohmann::json to_json(const RootCoefficients& c);
RootCoefficients root_coefficients_from_json(const nlohmann::json& j);

/// {"steps":[{"sorted":[...],"r":int,"degree":int}],"terminal":"real|almost|sign-change"}
nlohmann::json to_json(const ReductionTrace& t);
nlohmann::json to_json(const Classification& c);

nlohmann::json to_json(const OrbitClass& o);
nlohmann::json to_json(const GenericOrbit& g);

/// {"rows":[[int,...],...]}
nlohmann::json to_json(const Profile& p);
Profile profile_from_json(const SystemParams& params, const nlohmann::json& j);

/// Rationals as "p/q" strings.
nlohmann::json to_json(const WeightVector& w);
nlohmann::json rationals_to_json(const std::vector<Rational>& v);

nlohmann::json to_json(const ManinVector& m);

}  // namespace jroots
