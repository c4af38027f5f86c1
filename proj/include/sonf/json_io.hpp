#ifndef SONF_JSON_IO_HPP
#define SONF_JSON_IO_HPP

#include <string>
#include <utility>

#include <json.hpp>

#include "sonf/coset_geometry.hpp"
#include "sonf/hecke_gl.hpp"
#include "sonf/labels.hpp"
#include "sonf/level_raising.hpp"
#include "sonf/qlaurent.hpp"
#include "sonf/so_jacquet.hpp"
#include "sonf/so_params.hpp"

namespace sonf {

using Json = nlohmann::ordered_json;

Json to_json(const HalfInt& h);
Json to_json(const QLaurent& q);
Json to_json(const SupercuspidalLabel& l);
Json to_json(const Segment& s);
Json to_json(const SegmentProduct& p);
Json to_json(const DiscreteLParameter& phi);
Json to_json(const ConstructionResult& c);
Json to_json(const ReductionNode& node);
Json to_json(const MuUrTerm& term);
Json to_json(const RatMatrix& m);
Json to_json(const DistinctnessReport& r);
Json to_json(const LevelRaisingState& st);

HalfInt halfint_from_json(const Json& j);
SupercuspidalLabel label_from_json(const Json& j);
Segment segment_from_json(const Json& j);

// Parses {"n":..., "summands":[{"label":..., "kappa":..., "epsilon"?:...}]};
// optional per-summand epsilon signs land in `signs`.
DiscreteLParameter parameter_from_json(const Json& j, SuppliedSigns* signs = nullptr);

std::vector<InverseLFactor> inverse_l_factors_from_json(const Json& j);

}  // namespace sonf

#endif
