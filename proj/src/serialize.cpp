#include "indexcap/serialize.hpp"

#include <sstream>

#include "indexcap/error.hpp"

namespace indexcap {

using nlohmann::json;

namespace {

json rational_list(const std::vector<Rat>& values) {
  json out = json::array();
  for (const Rat& v : values) out.push_back(to_pq_string(v));
  return out;
}

Rat rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_number_float()) return parse_rational(j.dump());
  throw InputError("expected a rational, got " + j.dump());
}

}  // namespace

json node_list(NodeSet nodes) {
  json out = json::array();
  for (int i = 0; i < kMaxNodes; ++i) {
    if (nodes & node_bit(i)) out.push_back(i + 1);
  }
  return out;
}

json vertex_list(const Bitset& set) {
  json out = json::array();
  set.for_each([&](std::size_t v) { out.push_back(v + 1); });
  return out;
}

json to_json(const Problem& p) {
  json sets = json::array();
  for (int j = 0; j < p.size(); ++j) sets.push_back(node_list(p.side_info(j)));
  json edges = json::array();
  for (auto [from, to] : p.edges()) edges.push_back({from + 1, to + 1});
  return {{"n", p.size()}, {"side_info", sets}, {"edges", edges}};
}

json to_json(const InteractionClass& c) {
  json out = {{"tag", std::string(to_string(c.tag))}};
  if (c.partition) {
    out["partition"] = {{"left", node_list(c.partition->left)},
                        {"right", node_list(c.partition->right)}};
  }
  if (c.degraded) {
    out["degraded"] = {{"message", c.degraded->message + 1},
                       {"receiver", c.degraded->receiver + 1}};
  }
  return out;
}

json to_json(const ColoringWitness& w) {
  json coloring = json::object();
  for (std::size_t v = 0; v < w.assignment.size(); ++v) {
    coloring[std::to_string(v + 1)] = w.assignment[v] + 1;
  }
  return {{"chi", w.colors_used}, {"coloring", coloring}};
}

json to_json(const FractionalWitness& w) {
  json sets = json::array();
  for (const auto& [set, weight] : w.weights) {
    sets.push_back({{"set", vertex_list(set)}, {"weight", to_pq_string(weight)}});
  }
  return {{"chi_f", to_pq_string(w.value)},
          {"witness", sets},
          {"fractional_clique", rational_list(w.vertex_weights)}};
}

json to_json(const RatePoint& point) {
  json out = {{"t", point.t}, {"kind", std::string(to_string(point.kind))}};
  if (boost::multiprecision::denominator(point.chromatic) == 1) {
    out["chi"] = boost::multiprecision::numerator(point.chromatic).convert_to<long long>();
  } else {
    out["chi"] = to_pq_string(point.chromatic);
  }
  if (point.unbounded()) {
    out["unbounded"] = true;
    out["rates"] = nullptr;
    out["rates_decimal"] = nullptr;
  } else {
    out["unbounded"] = false;
    out["rates"] = rational_list(point.rates());
    out["rates_decimal"] = point.rates_decimal();
  }
  return out;
}

json to_json(const RateRegion& region) {
  json gens = json::array();
  for (const auto& g : region.generators()) gens.push_back(rational_list(g));
  return {{"dimension", region.dimension()}, {"generators", gens}};
}

json to_json(const BroadcastRates& rates) {
  json steps = json::array();
  for (const auto& s : rates.steps) {
    steps.push_back({{"t", s.t}, {"chi_f", to_pq_string(s.chi_f)}, {"beta", s.beta_decimal}});
  }
  return {{"steps", steps}, {"non_increasing", rates.non_increasing}};
}

json to_json(const CensusReport& report) {
  json counts = json::object();
  for (const auto& [tag, count] : report.class_counts) counts[std::string(to_string(tag))] = count;
  const auto irreducible = report.class_counts.count(InteractionTag::Irreducible)
                               ? report.class_counts.at(InteractionTag::Irreducible)
                               : 0;
  json out = {{"n", report.n},
              {"mode", std::string(to_string(report.mode))},
              {"total", report.total_classes},
              {"class_counts", counts},
              {"reducible", report.total_classes - irreducible},
              {"reducible_fraction", to_pq_string(report.reducible_fraction)},
              {"reducible_fraction_decimal", to_decimal(report.reducible_fraction, 6)}};
  if (report.fully_decomposed) out["fully_decomposed"] = *report.fully_decomposed;
  return out;
}

RateRegion region_from_json(const json& j) {
  try {
    const json& r = j.contains("region") ? j.at("region") : j;
    const int dimension = r.at("dimension").get<int>();
    std::vector<std::vector<Rat>> gens;
    for (const json& g : r.at("generators")) {
      std::vector<Rat> point;
      for (const json& x : g) point.push_back(rational_from_json(x));
      gens.push_back(std::move(point));
    }
    return RateRegion(dimension, std::move(gens));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed region JSON: ") + e.what());
  }
}

std::string rate_points_csv(const std::vector<RatePoint>& points) {
  std::ostringstream os;
  const std::size_t n = points.empty() ? 0 : points.front().t.size();
  for (std::size_t j = 0; j < n; ++j) os << "t_" << j + 1 << ',';
  os << "kind,chromatic";
  for (std::size_t j = 0; j < n; ++j) os << ",R_" << j + 1;
  os << '\n';
  for (const auto& p : points) {
    for (int tj : p.t) os << tj << ',';
    os << to_string(p.kind) << ',' << to_pq_string(p.chromatic);
    if (p.unbounded()) {
      for (std::size_t j = 0; j < n; ++j) os << ",inf";
    } else {
      for (const auto& r : p.rates_decimal()) os << ',' << r;
    }
    os << '\n';
  }
  return os.str();
}

std::string census_csv(const std::vector<std::uint64_t>& masks, int n,
                       const std::vector<InteractionClass>& classes) {
  std::ostringstream os;
  os << "canonical,tag\n";
  for (std::size_t k = 0; k < masks.size(); ++k) {
    os << CanonicalForm{n, masks[k]}.to_string() << ',' << to_string(classes[k].tag) << '\n';
  }
  return os.str();
}

}  // namespace indexcap
