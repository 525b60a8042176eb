// Command-line front door: build witnesses, verify certificates, compute
// automorphism groups, factorize graphs, run the theorem sweep.
//
// Exit codes: 0 success/PASS, 1 verification FAIL, 2 usage or input error,
// 3 inconclusive search, 4 resource bound exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bicay/aut.hpp"
#include "bicay/cartesian.hpp"
#include "bicay/catalog.hpp"
#include "bicay/constructions.hpp"
#include "bicay/errors.hpp"
#include "bicay/graph.hpp"
#include "bicay/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;
constexpr int kExitResource = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bicay::validation_error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw bicay::validation_error("cannot open output file: " + path);
  out << content;
}

std::string strip(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// A graph argument is a named construction (GP83, Qn:<k>, or the Cayley
// graph of an exceptional group E4..E7), a file path (graph6 line or edge
// list), or a literal graph6 string.
bicay::Graph load_graph(const std::string& arg) {
  if (arg == "GP83") return bicay::moebius_kantor().graph;
  if (arg.rfind("Qn:", 0) == 0) return bicay::hypercube(std::stoi(arg.substr(3))).graph;
  if (arg == "E4" || arg == "E5" || arg == "E6" || arg == "E7") {
    bicay::ClassEConstruction ce = bicay::class_e_connection_set(arg);
    return bicay::cayley_graph(ce.group.table, ce.connection_set);
  }
  std::string text = arg;
  if (std::filesystem::exists(arg)) text = read_file(arg);
  std::string t = strip(text);
  if (t.rfind("n ", 0) == 0) return bicay::parse_edge_list(t);
  return bicay::graph6_decode(t);
}

// A group argument is a catalog/family name or a group file
// ("degree <m>" then one generator image list per line).
bicay::CatalogEntry load_group(const std::string& arg, int max_order) {
  if (std::filesystem::exists(arg)) {
    std::istringstream in(read_file(arg));
    std::string keyword;
    int degree = 0;
    if (!(in >> keyword >> degree) || keyword != "degree" || degree <= 0)
      throw bicay::parse_error("group file must start with 'degree <m>'", 0);
    std::string line;
    std::getline(in, line);
    std::vector<bicay::Permutation> gens;
    while (std::getline(in, line)) {
      line = strip(line);
      if (line.empty()) continue;
      bicay::Permutation p = bicay::Permutation::parse(line);
      if (p.degree() != degree) throw bicay::parse_error("generator degree mismatch", 0);
      gens.push_back(std::move(p));
    }
    if (gens.empty()) throw bicay::parse_error("group file has no generators", 0);
    bicay::GeneratedGroup gen = bicay::group_from_generators(gens, max_order);
    bicay::CatalogEntry e;
    e.name = arg;
    e.table = std::move(gen.table);
    e.generators = std::move(gens);
    return e;
  }
  auto entry = bicay::find_group(arg);
  if (!entry) throw bicay::validation_error("unknown group name: " + arg);
  if (entry->table.order() > max_order)
    throw bicay::resource_error("group order exceeds --max-order");
  return *entry;
}

std::string perm_group_text(const bicay::PermGroup& pg) {
  std::ostringstream out;
  out << "degree " << pg.degree() << "\n";
  for (const auto& g : pg.generators()) out << g.to_string() << "\n";
  out << "order " << pg.order() << "\n";
  return out.str();
}

int run(int argc, char** argv) {
  CLI::App app{"normal bi-Cayley graph toolkit"};
  app.require_subcommand(1);
  app.footer(
      "Exit codes: 0 success/PASS, 1 FAIL, 2 usage error, 3 inconclusive search,\n"
      "4 resource bound exceeded.");

  std::string group_arg, cert_path, graph_arg, out_path, graph_out;
  std::vector<std::string> product_args;
  int max_order_build = 64;
  int max_order_sweep = 16;
  int max_order_catalog = 16;
  std::uint64_t budget = 2000000;

  auto* build = app.add_subcommand("build", "construct and certify a witness for a group");
  build->add_option("--group", group_arg, "catalog name or group file")->required();
  build->add_option("--out", out_path, "certificate output path (default stdout)");
  build->add_option("--graph-out", graph_out, "also write the witness graph6 here");
  build->add_option("--max-order", max_order_build, "group order bound (default 64)");
  build->add_option("--budget", budget, "search budget in candidate sets");

  auto* verify = app.add_subcommand("verify", "recompute and check a certificate");
  verify->add_option("--cert", cert_path, "certificate file")->required();

  const char* graph_help = "graph6 string, graph file, GP83, Qn:<k>, or E4..E7";
  auto* aut = app.add_subcommand("aut", "print automorphism generators and order");
  aut->add_option("--graph", graph_arg, graph_help)->required();

  auto* factor = app.add_subcommand("factor", "Cartesian prime factorization report");
  factor->add_option("--graph", graph_arg, graph_help)->required();

  auto* product = app.add_subcommand("product", "graph6 of the Cartesian product a [] b");
  product->add_option("--graphs", product_args, "two graphs")->expected(2);

  auto* sweep = app.add_subcommand("sweep", "certify every catalog group up to an order");
  sweep->add_option("--max-order", max_order_sweep, "order bound (default 16)");
  sweep->add_option("--budget", budget, "search budget in candidate sets");

  auto* catalog = app.add_subcommand("catalog", "list catalog groups");
  catalog->add_option("--max-order", max_order_catalog, "order bound (default 16)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  bicay::SearchBudget search_budget{budget};

  if (build->parsed()) {
    bicay::CatalogEntry entry = load_group(group_arg, max_order_build);
    bicay::WitnessResult w =
        bicay::construct_normal_bicayley(entry.table, entry.name, search_budget);
    write_output(out_path, bicay::write_certificate(w.certificate));
    if (!graph_out.empty()) write_output(graph_out, w.certificate.graph6 + "\n");
    return kExitOk;
  }

  if (verify->parsed()) {
    bicay::Certificate cert = bicay::parse_certificate(read_file(cert_path));
    bicay::Graph g = bicay::graph6_decode(cert.graph6);
    bicay::PermGroup br(g.vertex_count(), cert.br_generators);
    bicay::VerifyOutcome outcome = bicay::verify_certificate(g, br, cert);
    for (const char* field :
         {"group-order", "graph-order", "graph6", "semiregular", "orbit-count", "aut-order",
          "br-normal", "vertex-transitive", "connected"}) {
      bool bad = false;
      for (const auto& m : outcome.mismatches) bad = bad || m == field;
      std::cout << (bad ? "FAIL " : "PASS ") << field << "\n";
    }
    return outcome.ok ? kExitOk : kExitFail;
  }

  if (aut->parsed()) {
    bicay::Graph g = load_graph(graph_arg);
    std::cout << perm_group_text(bicay::automorphism_group(g));
    return kExitOk;
  }

  if (factor->parsed()) {
    bicay::Graph g = load_graph(graph_arg);
    std::cout << bicay::write_decomposition_report(bicay::prime_factorization(g));
    return kExitOk;
  }

  if (product->parsed()) {
    bicay::Graph a = load_graph(product_args[0]);
    bicay::Graph b = load_graph(product_args[1]);
    std::cout << bicay::graph6_encode(bicay::cartesian_product(a, b)) << "\n";
    return kExitOk;
  }

  if (sweep->parsed()) {
    auto rows = bicay::theorem_sweep(max_order_sweep, search_budget);
    std::cout << "group\torder\tvertices\taut-order\tbranch\n";
    for (const auto& r : rows) {
      std::cout << r.name << "\t" << r.order << "\t" << r.graph_order << "\t" << r.aut_order
                << "\t" << r.branch << "\n";
      std::cerr << r.name << "\t" << r.millis << " ms\n";
    }
    return kExitOk;
  }

  if (catalog->parsed()) {
    for (const auto* e : bicay::catalog_small_groups(max_order_catalog))
      std::cout << e->name << "\t" << e->table.order() << "\n";
    return kExitOk;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const bicay::inconclusive_error& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kExitInconclusive;
  } catch (const bicay::resource_error& e) {
    std::cerr << "resource bound: " << e.what() << "\n";
    return kExitResource;
  } catch (const bicay::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bicay::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
