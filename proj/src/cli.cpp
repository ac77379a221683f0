#include "indexcap/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "indexcap/capacity.hpp"
#include "indexcap/census.hpp"
#include "indexcap/coloring.hpp"
#include "indexcap/confusion.hpp"
#include "indexcap/error.hpp"
#include "indexcap/parallel.hpp"
#include "indexcap/serialize.hpp"
#include "indexcap/ugraph.hpp"

namespace indexcap {

using nlohmann::json;

namespace {

struct Options {
  std::string format = "json";
  std::size_t max_vertices = SolverLimits{}.max_vertices;
  std::optional<double> timeout_secs;
  std::size_t mis_cap = SolverLimits{}.mis_cap;
  unsigned threads = 0;
  std::optional<std::uint64_t> seed;

  std::string problem;
  std::string graph;
  std::string t;
  std::string kind = "log-chi-f";
  int budget = 3;
  int t_max = 3;
  int n = 0;
  int b = 1;
  std::string method = "colgen";
  std::string op;
  std::vector<std::string> regions;
  std::string point;
  bool prune = false;
  std::string mode = "one-shot";
  std::string strategy;
  std::string checkpoint;
  std::string csv;

  SolverLimits limits() const {
    SolverLimits l;
    l.max_vertices = max_vertices;
    l.mis_cap = mis_cap;
    l.timeout_secs = timeout_secs;
    return l;
  }
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os || !(os << text)) throw InputError("cannot write " + path);
}

Problem load_problem(const Options& o) {
  if (o.problem.empty()) throw InputError("--problem is required");
  return parse_problem(read_file(o.problem));
}

// The graph named by --graph, or the confusion graph of --problem at --t.
UGraph load_graph(const Options& o) {
  if (!o.graph.empty() && !o.problem.empty()) {
    throw InputError("give either --graph or --problem, not both");
  }
  const SolverLimits limits = o.limits();
  if (!o.graph.empty()) {
    UGraph g = parse_dimacs(read_file(o.graph));
    if (g.size() > limits.max_vertices) {
      throw BudgetError("graph has " + std::to_string(g.size()) +
                        " vertices, above the budget of " +
                        std::to_string(limits.max_vertices));
    }
    return g;
  }
  if (o.t.empty()) throw InputError("--t is required with --problem");
  return build_confusion_graph(load_problem(o), parse_lengths(o.t), limits);
}

std::vector<Rat> parse_point(const std::string& text) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

void flatten(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      flatten(value, prefix.empty() ? key : prefix + "." + key, out);
    }
    return;
  }
  if (j.is_array() && std::all_of(j.begin(), j.end(), [](const json& x) {
        return x.is_primitive();
      })) {
    out << prefix << ':';
    for (const auto& x : j) out << ' ' << (x.is_string() ? x.get<std::string>() : x.dump());
    out << '\n';
    return;
  }
  if (j.is_array()) {
    for (std::size_t k = 0; k < j.size(); ++k) {
      flatten(j[k], prefix + "[" + std::to_string(k + 1) + "]", out);
    }
    return;
  }
  out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
}

void emit(const Options& o, json body, std::ostream& out) {
  if (o.format == "text") {
    body.erase("schema");
    flatten(body, "", out);
    return;
  }
  nlohmann::ordered_json doc;
  doc["schema"] = kSchema;
  for (auto& [key, value] : body.items()) doc[key] = value;
  out << doc.dump(2) << '\n';
}

json cmd_info(const Options& o) {
  const Problem p = load_problem(o);
  const auto scc = strongly_connected_components(p);
  json comps = json::array();
  const int count = scc.empty() ? 0 : *std::max_element(scc.begin(), scc.end()) + 1;
  for (int c = 0; c < count; ++c) {
    NodeSet nodes = 0;
    for (int v = 0; v < p.size(); ++v) {
      if (scc[v] == c) nodes |= node_bit(v);
    }
    comps.push_back(node_list(nodes));
  }
  json body = {{"problem", to_json(p)},
               {"num_edges", p.num_edges()},
               {"strongly_connected_components", comps}};
  if (p.size() <= kDefaultCanonicalLimit) body["canonical"] = canonical_form(p).to_string();
  return body;
}

void cmd_reduce(const Options& o, std::ostream& out) {
  const Problem p = load_problem(o);
  const std::string op = o.op.empty() ? "degraded" : o.op;
  Problem q = p;
  if (op == "degraded") {
    q = degraded_reduce(p);
  } else if (op == "acyclic") {
    q = remove_acyclic_edges(p);
  } else if (op == "both") {
    q = degraded_reduce(remove_acyclic_edges(p));
  } else {
    throw InputError("--op for reduce must be degraded, acyclic, or both");
  }
  if (o.format == "text") {
    out << format_problem(q);
    return;
  }
  emit(o, {{"op", op}, {"problem", to_json(q)}, {"removed_edges", p.num_edges() - q.num_edges()}},
       out);
}

void cmd_confusion(const Options& o, std::ostream& out) {
  if (o.t.empty()) throw InputError("--t is required");
  const UGraph g = build_confusion_graph(load_problem(o), parse_lengths(o.t), o.limits());
  if (o.format == "text") {
    out << to_dimacs(g);
    return;
  }
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  emit(o, {{"vertices", g.size()}, {"num_edges", g.num_edges()}, {"edges", edges}}, out);
}

json cmd_chi(const Options& o) {
  const UGraph g = load_graph(o);
  if (o.b < 1) throw InputError("--b must be at least 1");
  if (o.b > 1) {
    return {{"b", o.b}, {"chi_b", b_fold_chromatic(g, o.b, o.limits())}};
  }
  return to_json(chromatic_number(g, o.limits()));
}

json cmd_chif(const Options& o) {
  FractionalMethod method;
  if (o.method == "colgen") {
    method = FractionalMethod::ColumnGeneration;
  } else if (o.method == "direct") {
    method = FractionalMethod::Direct;
  } else {
    throw InputError("--method must be colgen or direct");
  }
  const UGraph g = load_graph(o);
  return to_json(fractional_chromatic(g, method, o.limits()));
}

json cmd_point(const Options& o) {
  if (o.t.empty()) throw InputError("--t is required");
  return to_json(achievable_point(load_problem(o), parse_lengths(o.t),
                                  parse_denom_kind(o.kind), o.limits()));
}

json cmd_region(const Options& o) {
  const Problem p = load_problem(o);
  const DenomKind kind = parse_denom_kind(o.kind);
  CapacityOptions options{o.limits(), o.threads};
  const auto points = enumerate_points(p, o.budget, kind, options);
  if (!o.csv.empty()) write_file(o.csv, rate_points_csv(points));
  std::vector<std::vector<Rat>> gens;
  json pts = json::array();
  for (const auto& point : points) {
    pts.push_back(to_json(point));
    if (!point.unbounded()) gens.push_back(point.rates());
  }
  const RateRegion region(p.size(), std::move(gens));
  return {{"budget", o.budget},
          {"kind", std::string(to_string(kind))},
          {"points", pts},
          {"region", to_json(region)}};
}

json cmd_broadcast(const Options& o) {
  return to_json(broadcast_rate_upper(load_problem(o), o.t_max, o.limits()));
}

json cmd_compose(const Options& o) {
  if (o.regions.size() != 2) throw InputError("compose needs exactly two --region files");
  auto load = [](const std::string& path) {
    try {
      return region_from_json(json::parse(read_file(path)));
    } catch (const json::parse_error& e) {
      throw InputError(path + ": " + e.what());
    }
  };
  const RateRegion r1 = load(o.regions[0]);
  const RateRegion r2 = load(o.regions[1]);
  RateRegion r = o.op == "timeshare" ? compose_timeshare(r1, r2)
                 : o.op == "product" ? compose_product(r1, r2, o.limits())
                                     : throw InputError("--op must be timeshare or product");
  if (o.prune) r = prune_redundant(r);
  json body = {{"op", o.op}, {"region", to_json(r)}};
  if (!o.point.empty()) body["contains"] = region_contains(r, parse_point(o.point));
  return body;
}

json cmd_classify(const Options& o) {
  const Problem p = load_problem(o);
  json body = {{"classification", to_json(classify_interaction(p))}};
  const Decomposition d = decompose(p);
  body["fully_decomposed"] = d.fully_decomposed;
  body["largest_irreducible"] = d.largest_irreducible;
  return body;
}

json cmd_census(const Options& o) {
  CensusOptions options;
  options.threads = o.threads;
  if (o.strategy == "dedup") {
    options.strategy = EnumerationStrategy::Dedup;
  } else if (o.strategy == "orderly") {
    options.strategy = EnumerationStrategy::Orderly;
  } else if (!o.strategy.empty()) {
    throw InputError("--strategy must be dedup or orderly");
  }
  if (!o.checkpoint.empty()) options.checkpoint = o.checkpoint;
  const CensusMode mode = parse_census_mode(o.mode);
  const CensusReport report = run_census(o.n, mode, options);
  if (!o.csv.empty()) {
    CensusOptions reuse = options;
    const auto masks = canonical_masks(o.n, reuse);
    std::vector<Problem> problems;
    for (auto m : masks) problems.push_back(problem_from_mask(o.n, m));
    write_file(o.csv, census_csv(masks, o.n, classify_all(problems, o.threads)));
  }
  return to_json(report);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Index coding capacity via confusion graphs", "indexcap"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-vertices", o.max_vertices, "Vertex budget for dense graphs")
      ->check(CLI::PositiveNumber);
  app.add_option("--timeout-secs", o.timeout_secs, "Wall-clock limit for solvers")
      ->check(CLI::PositiveNumber);
  app.add_option("--mis-cap", o.mis_cap, "Cap on enumerated maximal independent sets")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", o.threads, "Worker threads (default: INDEXCAP_THREADS or cores)");
  app.add_option("--seed", o.seed, "Seed for randomized paths");

  auto* info = app.add_subcommand("info", "Summarize a problem");
  auto* reduce = app.add_subcommand("reduce", "Remove degraded or acyclic side information");
  auto* confusion = app.add_subcommand("confusion", "Build the confusion graph");
  auto* chi = app.add_subcommand("chi", "Chromatic number with a witness coloring");
  auto* chif = app.add_subcommand("chif", "Fractional chromatic number with a witness");
  auto* point = app.add_subcommand("point", "Rate point for one length tuple");
  auto* region = app.add_subcommand("region", "Inner bound of the capacity region");
  auto* broadcast = app.add_subcommand("broadcast", "Broadcast rate upper bounds");
  auto* compose = app.add_subcommand("compose", "Compose two rate regions");
  auto* classify = app.add_subcommand("classify", "Classify a problem's interaction");
  auto* census = app.add_subcommand("census", "Classify every problem on n nodes");

  for (auto* sub : {info, reduce, confusion, point, region, broadcast, classify}) {
    sub->add_option("--problem", o.problem, "Problem file (.icp)")->required();
  }
  for (auto* sub : {chi, chif}) {
    sub->add_option("--problem", o.problem, "Problem file (.icp)");
    sub->add_option("--graph", o.graph, "DIMACS graph file");
    sub->add_option("--t", o.t, "Message lengths, e.g. 1,1,1");
  }
  for (auto* sub : {confusion, point}) {
    sub->add_option("--t", o.t, "Message lengths, e.g. 1,1,1")->required();
  }
  for (auto* sub : {point, region}) {
    sub->add_option("--kind", o.kind, "ceil-log-chi, log-chi, or log-chi-f");
  }
  reduce->add_option("--op", o.op, "degraded, acyclic, or both");
  chi->add_option("--b", o.b, "Colors per vertex (b-fold coloring)");
  chif->add_option("--method", o.method, "colgen or direct");
  region->add_option("--budget", o.budget, "Largest total message length")
      ->check(CLI::Range(1, 62));
  region->add_option("--csv", o.csv, "Also write rate points as CSV");
  broadcast->add_option("--t-max", o.t_max, "Largest uniform length")->check(CLI::Range(1, 62));
  compose->add_option("--op", o.op, "timeshare or product")
      ->required()
      ->check(CLI::IsMember({"timeshare", "product"}));
  compose->add_option("--region", o.regions, "Region JSON file (give twice)")->required();
  compose->add_option("--point", o.point, "Also test membership of p/q,...");
  compose->add_flag("--prune", o.prune, "Drop redundant generators");
  census->add_option("--n", o.n, "Number of nodes")->required();
  census->add_option("--mode", o.mode, "one-shot or recursive-fixpoint");
  census->add_option("--strategy", o.strategy, "dedup or orderly");
  census->add_option("--checkpoint", o.checkpoint, "Canonical mask checkpoint file");
  census->add_option("--csv", o.csv, "Also write per-class tags as CSV");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "indexcap: " << e.what() << '\n';
    return kExitInputError;
  }
  if (o.threads == 0) o.threads = default_threads();

  try {
    if (info->parsed()) emit(o, cmd_info(o), out);
    if (reduce->parsed()) cmd_reduce(o, out);
    if (confusion->parsed()) cmd_confusion(o, out);
    if (chi->parsed()) emit(o, cmd_chi(o), out);
    if (chif->parsed()) emit(o, cmd_chif(o), out);
    if (point->parsed()) emit(o, cmd_point(o), out);
    if (region->parsed()) emit(o, cmd_region(o), out);
    if (broadcast->parsed()) emit(o, cmd_broadcast(o), out);
    if (compose->parsed()) emit(o, cmd_compose(o), out);
    if (classify->parsed()) emit(o, cmd_classify(o), out);
    if (census->parsed()) emit(o, cmd_census(o), out);
  } catch (const BudgetError& e) {
    err << "indexcap: budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const TimeoutError& e) {
    err << "indexcap: timed out: " << e.what() << '\n';
    return kExitBudget;
  } catch (const InputError& e) {
    err << "indexcap: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "indexcap: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}

}  // namespace indexcap
