#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "indexcap/capacity.hpp"
#include "indexcap/census.hpp"
#include "indexcap/coloring.hpp"
#include "indexcap/problem.hpp"

// JSON shapes written by the command-line tool. Vertices and nodes are
// 1-indexed everywhere; rationals are "p/q" strings.

namespace indexcap {

inline constexpr const char* kSchema = "indexcap/1";

nlohmann::json node_list(NodeSet nodes);
nlohmann::json vertex_list(const Bitset& set);

nlohmann::json to_json(const Problem& p);
nlohmann::json to_json(const InteractionClass& c);
nlohmann::json to_json(const ColoringWitness& w);
nlohmann::json to_json(const FractionalWitness& w);
nlohmann::json to_json(const RatePoint& point);
nlohmann::json to_json(const RateRegion& region);
nlohmann::json to_json(const BroadcastRates& rates);
nlohmann::json to_json(const CensusReport& report);

/// Reads the to_json(RateRegion) shape, or a full CLI document holding it
/// under "region". Throws InputError.
RateRegion region_from_json(const nlohmann::json& j);

/// Header "t_1,...,t_n,kind,chromatic,R_1,...,R_n".
std::string rate_points_csv(const std::vector<RatePoint>& points);
/// Header "canonical,tag".
std::string census_csv(const std::vector<std::uint64_t>& masks, int n,
                       const std::vector<InteractionClass>& classes);

}  // namespace indexcap
