#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "thickness/bounds.hpp"
#include "thickness/constructions.hpp"
#include "thickness/document.hpp"
#include "thickness/pipeline.hpp"
#include "thickness/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // invalid / exhausted
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;

double default_budget_seconds() {
  const char* env = std::getenv("THICKNESS_LAB_BUDGET_SECONDS");
  if (!env) return 60.0;
  try {
    size_t pos = 0;
    std::string text(env);
    double value = std::stod(text, &pos);
    if (pos == text.size() && value > 0) return value;
  } catch (const std::exception&) {
  }
  std::cerr << "warning: ignoring invalid THICKNESS_LAB_BUDGET_SECONDS\n";
  return 60.0;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw thickness::DocumentError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw thickness::DocumentError("cannot write " + path);
  out << content;
}

struct BudgetFlags {
  double max_seconds = default_budget_seconds();
  std::uint64_t max_nodes = 0;
  int check_interval = 0;

  void attach(CLI::App* cmd) {
    cmd->add_option("--max-seconds", max_seconds, "time budget in seconds");
    cmd->add_option("--max-nodes", max_nodes, "search node budget (0 = unlimited)");
    cmd->add_option("--check-interval", check_interval,
                    "edges between incremental planarity checks (0 = auto)");
  }

  thickness::SearchBudget budget() const {
    thickness::SearchBudget b;
    b.max_seconds = max_seconds;
    if (max_nodes > 0) b.max_nodes = max_nodes;
    b.planarity_check_interval = check_interval;
    return b;
  }
};

int run_product(int n, int m, const std::string& out) {
  thickness::Document doc = thickness::to_document(thickness::product_graph(n, m));
  doc.metadata = {{"family", "complete_path_product"}, {"n", n}, {"m", m}};
  write_output(out, thickness::serialize_document(doc));
  return kExitOk;
}

int run_bounds(int n, int m, bool json) {
  using namespace thickness;
  int plb = product_lower_bound(n, m);
  int ub = upper_bound_via_containment(n, m);
  ThicknessBound bound = product_thickness(n, m);
  if (json) {
    nlohmann::json j;
    j["n"] = n;
    j["m"] = m;
    j["product_lower_bound"] = plb;
    j["containment_upper_bound"] = ub;
    j["thickness"] = {{"lo", bound.lo},
                      {"hi", bound.hi},
                      {"exact", bound.exact()},
                      {"provenance", provenance_name(bound.provenance)}};
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "K_" << n << " x P_" << m << "\n";
  std::cout << "product lower bound: " << plb << "\n";
  std::cout << "containment upper bound: " << ub << "\n";
  if (bound.exact()) {
    std::cout << "thickness: " << bound.lo << " (exact; " << provenance_name(bound.provenance)
              << ")\n";
  } else {
    std::cout << "thickness: open, in [" << bound.lo << ", " << bound.hi << "] ("
              << provenance_name(bound.provenance) << ")\n";
  }
  return kExitOk;
}

struct ConstructArgs {
  int n = 0, m = 0, pages = 0;
  bool search_bases = false;  // default mode; flag kept for explicitness
  std::string end_base_file, end_hub;
  std::string mid_base_file, mid_hubs;
  std::string out;
  BudgetFlags flags;
};

/// User-supplied bases: chain them directly instead of searching.
int run_construct_from_bases(const ConstructArgs& args) {
  using namespace thickness;
  ChainSpec spec;
  spec.n = args.n;
  spec.m = args.m;
  spec.end_base = document_decomposition(parse_document(read_input(args.end_base_file)));
  spec.end_hub = parse_label(args.end_hub);
  if (!args.mid_base_file.empty()) {
    spec.mid_base = document_decomposition(parse_document(read_input(args.mid_base_file)));
    auto comma = args.mid_hubs.find(',');
    if (comma == std::string::npos) {
      std::cerr << "construct: --mid-hubs expects two labels separated by a comma\n";
      return kExitUsage;
    }
    spec.mid_hubs = VertexPair{parse_label(args.mid_hubs.substr(0, comma)),
                               parse_label(args.mid_hubs.substr(comma + 1))};
  }
  Decomposition product = contract_chain(chain_decomposition(spec));
  Document doc = to_document(product);
  doc.metadata = {{"family", "complete_path_product"},
                  {"n", args.n},
                  {"m", args.m},
                  {"pages", product.page_count()},
                  {"construction", "chain_user_bases"}};
  std::cerr << "constructed " << product.page_count() << "-page decomposition of K_"
            << args.n << " x P_" << args.m << " from the supplied bases\n";
  write_output(args.out, serialize_document(doc));
  return kExitOk;
}

int run_construct(const ConstructArgs& args) {
  using namespace thickness;
  if (!args.end_base_file.empty()) return run_construct_from_bases(args);
  PipelineOptions options;
  options.budget = args.flags.budget();
  options.page_count = args.pages;
  PipelineResult result;
  try {
    result = construct_product_decomposition(args.n, args.m, options);
  } catch (const PipelineError& e) {
    std::cerr << "construct failed: " << e.what() << "\n";
    return e.status == SearchStatus::inconclusive ? kExitInconclusive : kExitNegative;
  }
  Document doc = to_document(result.decomposition);
  doc.metadata = {{"family", "complete_path_product"},
                  {"n", args.n},
                  {"m", args.m},
                  {"pages", result.decomposition.page_count()},
                  {"construction", args.m == 1   ? "direct_search"
                                   : args.m == 2 ? "mirror_double"
                                   : result.used_fallback ? "chain_alignment_fallback"
                                                          : "chain_hub_symmetric"}};
  std::cerr << "constructed " << result.decomposition.page_count()
            << "-page decomposition of K_" << args.n << " x P_" << args.m << " (rejected "
            << result.rejected_bases << " bases, " << result.nodes << " nodes, "
            << result.seconds << " s)\n";
  write_output(args.out, serialize_document(doc));
  return kExitOk;
}

int run_verify(const std::string& file, bool json) {
  using namespace thickness;
  Document doc = parse_document(read_input(file));
  Decomposition dec = document_decomposition(doc);
  VerificationReport report = verify(dec);

  if (json) {
    nlohmann::json j;
    j["valid"] = report.valid();
    j["partition_ok"] = report.partition_ok;
    j["coverage_ok"] = report.coverage_ok;
    nlohmann::json planar = nlohmann::json::array();
    for (const auto& v : report.page_verdicts) planar.push_back(v.planar);
    j["pages_planar"] = planar;
    nlohmann::json witnesses = nlohmann::json::array();
    for (size_t p = 0; p < report.page_verdicts.size(); ++p) {
      const auto& verdict = report.page_verdicts[p];
      if (verdict.planar || !verdict.kuratowski) continue;
      nlohmann::json edges = nlohmann::json::array();
      for (const auto& [a, b] : *verdict.kuratowski)
        edges.push_back(nlohmann::json::array({a.str(), b.str()}));
      witnesses.push_back({{"page", p + 1}, {"kuratowski", edges}});
    }
    j["witnesses"] = witnesses;
    j["pairing_ok"] = report.pairing_ok ? nlohmann::json(*report.pairing_ok)
                                        : nlohmann::json(nullptr);
    j["detail"] = report.detail;
    std::cout << j.dump(2) << "\n";
    return report.valid() ? kExitOk : kExitNegative;
  }

  std::cout << "host: " << dec.host().vertex_count() << " vertices, "
            << dec.host().edge_count() << " edges; pages: " << dec.page_count() << "\n";
  std::cout << "partition: " << (report.partition_ok ? "ok" : "FAILED") << "\n";
  std::cout << "coverage: " << (report.coverage_ok ? "ok" : "FAILED") << "\n";
  for (size_t p = 0; p < report.page_verdicts.size(); ++p) {
    std::cout << "page " << p + 1 << ": "
              << (report.page_verdicts[p].planar ? "planar" : "NOT planar") << "\n";
    const auto& verdict = report.page_verdicts[p];
    if (!verdict.planar && verdict.kuratowski && !verdict.kuratowski->empty()) {
      std::cout << "  kuratowski witness:";
      for (const auto& [a, b] : *verdict.kuratowski) std::cout << " " << a.str() << "-" << b.str();
      std::cout << "\n";
    }
  }
  if (report.pairing_ok)
    std::cout << "pairing: " << (*report.pairing_ok ? "ok" : "FAILED") << "\n";
  if (report.valid()) {
    std::cout << "valid\n";
    return kExitOk;
  }
  std::cout << "invalid: " << report.detail << "\n";
  return kExitNegative;
}

struct SearchArgs {
  std::string graph_file;
  int n = 0, m = 0;
  int k = 0;
  bool exact = false;
  std::string hub_symmetric;
  std::vector<std::string> pins;
  std::string out;
  BudgetFlags flags;
};

int run_search(const SearchArgs& args) {
  using namespace thickness;
  Graph host;
  if (!args.graph_file.empty()) {
    host = parse_document(read_input(args.graph_file)).host;
  } else if (args.n > 0 && args.m > 0) {
    host = product_graph(args.n, args.m);
  } else {
    std::cerr << "search: need --graph FILE or both -n and -m\n";
    return kExitUsage;
  }

  if (args.exact) {
    ExactThicknessResult result = exact_thickness(host, args.flags.budget());
    if (result.exact())
      std::cout << "thickness: " << result.bound.lo << " (exact; " << result.nodes
                << " nodes, " << result.seconds << " s)\n";
    else
      std::cout << "thickness in [" << result.bound.lo << ", " << result.bound.hi << "] ("
                << result.nodes << " nodes, " << result.seconds << " s)\n";
    if (!args.out.empty() && result.certificate)
      write_output(args.out, serialize_document(to_document(*result.certificate)));
    return result.exact() ? kExitOk : kExitInconclusive;
  }

  if (args.k < 1) {
    std::cerr << "search: need -k PAGES or --exact\n";
    return kExitUsage;
  }
  SearchConstraint constraint;
  if (!args.hub_symmetric.empty()) {
    auto comma = args.hub_symmetric.find(',');
    if (comma == std::string::npos) {
      std::cerr << "search: --hub-symmetric expects two labels separated by a comma\n";
      return kExitUsage;
    }
    constraint.hub_symmetric = VertexPair{parse_label(args.hub_symmetric.substr(0, comma)),
                                          parse_label(args.hub_symmetric.substr(comma + 1))};
  }
  for (const auto& pin : args.pins) {
    auto eq = pin.rfind('=');
    auto comma = pin.find(',');
    if (eq == std::string::npos || comma == std::string::npos || comma > eq) {
      std::cerr << "search: --pin expects LABEL,LABEL=PAGE\n";
      return kExitUsage;
    }
    int page = 0;
    try {
      page = std::stoi(pin.substr(eq + 1));
    } catch (const std::exception&) {
      std::cerr << "search: bad page in --pin\n";
      return kExitUsage;
    }
    if (page < 1) {
      std::cerr << "search: --pin pages are 1-based\n";
      return kExitUsage;
    }
    constraint.pinned.push_back({make_edge(parse_label(pin.substr(0, comma)),
                                           parse_label(pin.substr(comma + 1, eq - comma - 1))),
                                 page - 1});
  }

  SearchResult result = find_decomposition(host, args.k, constraint, args.flags.budget());
  std::cout << search_status_name(result.status);
  if (result.status == SearchStatus::found)
    std::cout << ": " << args.k << "-page decomposition";
  else if (result.status == SearchStatus::exhausted)
    std::cout << ": no " << args.k << "-page decomposition satisfies the constraints";
  else
    std::cout << ": budget exceeded";
  std::cout << " (" << result.nodes << " nodes, " << result.seconds << " s)\n";
  if (result.certificate && !args.out.empty())
    write_output(args.out, serialize_document(to_document(*result.certificate)));
  switch (result.status) {
    case SearchStatus::found: return kExitOk;
    case SearchStatus::exhausted: return kExitNegative;
    case SearchStatus::inconclusive: return kExitInconclusive;
  }
  return kExitNegative;
}

int run_export_dot(const std::string& file, const std::string& out) {
  thickness::Document doc = thickness::parse_document(read_input(file));
  write_output(out, thickness::to_dot(doc));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"planar decompositions and thickness results for K_n x P_m"};
  app.require_subcommand(1);

  auto* product = app.add_subcommand("product", "emit the product graph as a document");
  int pn = 0, pm = 0;
  std::string product_out;
  product->add_option("-n", pn, "complete graph order")->required()->check(CLI::PositiveNumber);
  product->add_option("-m", pm, "path vertex count")->required()->check(CLI::PositiveNumber);
  product->add_option("-o,--output", product_out, "output file (default stdout)");

  auto* bounds = app.add_subcommand("bounds", "closed-form thickness bounds");
  int bn = 0, bm = 0;
  bool bounds_json = false;
  bounds->add_option("-n", bn, "complete graph order")->required()->check(CLI::PositiveNumber);
  bounds->add_option("-m", bm, "path vertex count")->required()->check(CLI::PositiveNumber);
  bounds->add_flag("--json", bounds_json, "machine-readable output");

  auto* construct = app.add_subcommand("construct", "build a verified decomposition");
  ConstructArgs construct_args;
  construct->add_option("-n", construct_args.n, "complete graph order")
      ->required()
      ->check(CLI::PositiveNumber);
  construct->add_option("-m", construct_args.m, "path vertex count")
      ->required()
      ->check(CLI::PositiveNumber);
  construct->add_option("-k,--pages", construct_args.pages,
                        "page count to aim for (default: from bounds)");
  construct->add_flag("--search-bases", construct_args.search_bases,
                      "find base decompositions by search (default when no files given)");
  auto* end_base_opt =
      construct->add_option("--end-base", construct_args.end_base_file,
                            "end-block base decomposition document (skips the search)");
  construct->add_option("--end-hub", construct_args.end_hub,
                        "designated hub vertex of the end base")
      ->needs(end_base_opt);
  auto* mid_base_opt =
      construct->add_option("--mid-base", construct_args.mid_base_file,
                            "middle-block base decomposition document (m >= 3)");
  construct->add_option("--mid-hubs", construct_args.mid_hubs,
                        "the two hub vertices of the middle base: LABEL,LABEL")
      ->needs(mid_base_opt);
  end_base_opt->excludes("--search-bases");
  construct->add_option("-o,--output", construct_args.out, "output file (default stdout)");
  construct_args.flags.attach(construct);

  auto* verify_cmd = app.add_subcommand("verify", "check a decomposition document");
  std::string verify_file;
  bool verify_json = false;
  verify_cmd->add_option("file", verify_file, "document file ('-' for stdin)")->required();
  verify_cmd->add_flag("--json", verify_json, "machine-readable output");

  auto* search = app.add_subcommand("search", "backtracking decomposition search");
  SearchArgs search_args;
  search->add_option("--graph", search_args.graph_file, "host graph document");
  search->add_option("-n", search_args.n, "complete graph order (with -m)");
  search->add_option("-m", search_args.m, "path vertex count (with -n)");
  search->add_option("-k,--pages", search_args.k, "page count to search for");
  search->add_flag("--exact", search_args.exact, "iterate k upward until exact");
  search->add_option("--hub-symmetric", search_args.hub_symmetric,
                     "pair hub edges at these two vertices: LABEL,LABEL");
  search->add_option("--pin", search_args.pins, "force an edge onto a page: LABEL,LABEL=PAGE");
  search->add_option("-o,--output", search_args.out, "write the certificate document here");
  bool deterministic = false;
  search->add_flag("--deterministic", deterministic,
                   "certificate-stable sequential order (this build always searches "
                   "sequentially, so the flag is accepted and already in effect)");
  search_args.flags.attach(search);

  auto* export_dot = app.add_subcommand("export-dot", "render a document as Graphviz");
  std::string dot_file, dot_out;
  export_dot->add_option("file", dot_file, "document file ('-' for stdin)")->required();
  export_dot->add_option("-o,--output", dot_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (product->parsed()) return run_product(pn, pm, product_out);
    if (bounds->parsed()) return run_bounds(bn, bm, bounds_json);
    if (construct->parsed()) {
      if (!construct_args.end_base_file.empty() && construct_args.end_hub.empty()) {
        std::cerr << "construct: --end-base requires --end-hub\n";
        return kExitUsage;
      }
      if (construct_args.m >= 3 && !construct_args.end_base_file.empty() &&
          construct_args.mid_base_file.empty()) {
        std::cerr << "construct: m >= 3 with user bases requires --mid-base and --mid-hubs\n";
        return kExitUsage;
      }
      if (!construct_args.mid_base_file.empty() && construct_args.mid_hubs.empty()) {
        std::cerr << "construct: --mid-base requires --mid-hubs\n";
        return kExitUsage;
      }
      return run_construct(construct_args);
    }
    if (verify_cmd->parsed()) return run_verify(verify_file, verify_json);
    if (search->parsed()) return run_search(search_args);
    if (export_dot->parsed()) return run_export_dot(dot_file, dot_out);
  } catch (const thickness::DocumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNegative;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNegative;
  }
  return kExitUsage;
}
