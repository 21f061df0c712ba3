// Command-line front end for the pyramidal-tours-with-step-backs library.
//
// Exit codes: 0 success, 2 usage or input error, 3 internal contract
// violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "psb/adjacency.hpp"
#include "psb/edge_multiset.hpp"
#include "psb/errors.hpp"
#include "psb/oracle.hpp"
#include "psb/skeleton.hpp"
#include "psb/solver.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

int oracle_guard() {
  if (const char* env = std::getenv("PSB_MAX_ORACLE_N")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end && *end == '\0' && parsed >= 3) return static_cast<int>(parsed);
    std::cerr << "psb: ignoring malformed PSB_MAX_ORACLE_N='" << env << "'\n";
  }
  return psb::kDefaultOracleMaxN;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw psb::ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_json(const std::string& compact, bool pretty) {
  if (!pretty) {
    std::cout << compact << "\n";
    return;
  }
  std::cout << nlohmann::json::parse(compact).dump(2) << "\n";
}

struct AdjacencyArgs {
  std::string x, y;
  int n = 0;
  std::string method = "linear";
};

int run_adjacency(const AdjacencyArgs& args, bool pretty) {
  const psb::TourEncoding ex = psb::parse_encoding(args.x, args.n);
  const psb::TourEncoding ey = psb::parse_encoding(args.y, args.n);

  psb::AdjacencyVerdict verdict;
  if (args.method == "oracle") {
    const int guard = oracle_guard();
    if (args.n > guard) {
      std::cerr << "psb: --method oracle is an exponential search; n=" << args.n
                << " exceeds the guard " << guard << " (override with PSB_MAX_ORACLE_N)\n";
      return kExitInput;
    }
    const psb::Tour tx = psb::decode(ex);
    const psb::Tour ty = psb::decode(ey);
    if (tx == ty) throw psb::IdenticalTours("adjacency test needs two distinct tours");
    const auto pairs = psb::complementary_pairs(tx, ty, guard);
    verdict.adjacent = pairs.empty();
    nlohmann::json j;
    j["adjacent"] = verdict.adjacent;
    if (!pairs.empty()) {
      j["z"] = psb::tour_sequence(pairs.front().first);
      j["t"] = psb::tour_sequence(pairs.front().second);
    }
    print_json(j.dump(), pretty);
    return kExitOk;
  }
  if (args.method == "exhaustive")
    verdict = psb::test_nonadjacent_exhaustive(ex, ey);
  else if (args.method == "linear")
    verdict = psb::test_nonadjacent_linear(ex, ey);
  else {
    std::cerr << "psb: unknown adjacency method '" << args.method << "'\n";
    return kExitInput;
  }
  print_json(psb::verdict_to_json(verdict), pretty);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pyramidal tours with step-backs: encodings, polytope vertex adjacency, skeletons, solver"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");

  std::string tour_text;
  auto* cmd_encode = app.add_subcommand("encode", "tour sequence -> order-mark tokens");
  cmd_encode->add_option("--tour", tour_text, "comma-separated visit sequence, e.g. 1,2,5,4,7,8,6,3")
      ->required();

  std::string enc_text;
  int enc_n = 0;
  auto* cmd_decode = app.add_subcommand("decode", "order-mark tokens -> tour sequence");
  cmd_decode->add_option("--enc", enc_text, "tokens over {1,0,1e,1b,0b,0e}")->required();
  cmd_decode->add_option("--n", enc_n, "city count")->required();

  std::string validate_tour_text;
  auto* cmd_validate = app.add_subcommand("validate", "classify peaks and check pyramidality");
  cmd_validate->add_option("--tour", validate_tour_text, "comma-separated visit sequence")->required();

  int enum_n = 0;
  bool count_only = false;
  auto* cmd_enumerate = app.add_subcommand("enumerate", "stream every encoding of size n");
  cmd_enumerate->add_option("--n", enum_n, "city count")->required();
  cmd_enumerate->add_flag("--count-only", count_only, "print only the number of encodings");

  AdjacencyArgs adj;
  auto* cmd_adjacency = app.add_subcommand("adjacency", "vertex adjacency test for two encodings");
  cmd_adjacency->add_option("--x", adj.x, "first encoding tokens")->required();
  cmd_adjacency->add_option("--y", adj.y, "second encoding tokens")->required();
  cmd_adjacency->add_option("--n", adj.n, "city count")->required();
  cmd_adjacency->add_option("--method", adj.method, "linear | exhaustive | oracle")
      ->default_val("linear");

  int skel_n = 0, skel_cap = 9, skel_threads = 0;
  bool skel_parallel = false;
  std::string skel_format = "json";
  auto* cmd_skeleton = app.add_subcommand("skeleton", "build the 1-skeleton and export it");
  cmd_skeleton->add_option("--n", skel_n, "city count")->required();
  cmd_skeleton->add_option("--format", skel_format, "dot | csv | json")->default_val("json");
  cmd_skeleton->add_option("--cap", skel_cap, "size guard")->default_val(9);
  cmd_skeleton->add_flag("--parallel", skel_parallel, "evaluate vertex pairs across threads");
  cmd_skeleton->add_option("--threads", skel_threads, "worker count, 0 = hardware");
  bool skel_stats = false;
  cmd_skeleton->add_flag("--stats", skel_stats, "print graph statistics instead of the graph");

  std::string costs_path;
  std::string solve_method = "dp";
  auto* cmd_solve = app.add_subcommand("solve", "minimum-cost tour for a cost matrix file");
  cmd_solve->add_option("--costs", costs_path, "matrix file: first line n, then n rows (or JSON)")
      ->required();
  cmd_solve->add_option("--method", solve_method, "dp | brute")->default_val("dp");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }

  try {
    if (cmd_encode->parsed()) {
      std::cout << psb::format_encoding(psb::encode(psb::parse_tour(tour_text))) << "\n";
    } else if (cmd_decode->parsed()) {
      std::cout << psb::format_tour(psb::decode(psb::parse_encoding(enc_text, enc_n))) << "\n";
    } else if (cmd_validate->parsed()) {
      const psb::Tour t = psb::parse_tour(validate_tour_text);
      nlohmann::json j;
      j["n"] = t.n;
      j["psb"] = psb::is_psb(t);
      auto& peaks = j["peaks"] = nlohmann::json::array();
      for (const psb::Peak& p : psb::classify_peaks(t))
        peaks.push_back({{"city", p.city}, {"kind", psb::peak_kind_name(p.kind)}});
      print_json(j.dump(), pretty);
    } else if (cmd_enumerate->parsed()) {
      if (count_only) {
        std::cout << psb::count_encodings(enum_n) << "\n";
      } else {
        psb::EncodingEnumerator it(enum_n);
        while (auto e = it.next()) std::cout << psb::format_encoding(*e) << "\n";
      }
    } else if (cmd_adjacency->parsed()) {
      return run_adjacency(adj, pretty);
    } else if (cmd_skeleton->parsed()) {
      psb::SkeletonOptions opts;
      opts.cap = skel_cap;
      opts.parallel = skel_parallel;
      opts.threads = skel_threads;
      const psb::SkeletonGraph g = psb::build_skeleton(skel_n, opts);
      if (skel_stats) {
        const psb::GraphStats st = psb::graph_stats(g);
        nlohmann::json j;
        j["vertex_count"] = st.vertex_count;
        j["edge_count"] = st.edge_count;
        j["min_degree"] = st.min_degree;
        j["max_degree"] = st.max_degree;
        j["connected"] = st.connected;
        if (st.connected)
          j["diameter"] = st.diameter;
        else
          j["diameter"] = nullptr;
        j["clique_number"] = st.clique_number;
        print_json(j.dump(), pretty);
      } else {
        std::cout << psb::export_graph(g, psb::graph_format_from_name(skel_format));
      }
    } else if (cmd_solve->parsed()) {
      const std::string text = read_file(costs_path);
      const auto first = text.find_first_not_of(" \t\r\n");
      const psb::CostMatrix m = (first != std::string::npos && text[first] == '{')
                                    ? psb::CostMatrix::from_json(text)
                                    : psb::CostMatrix::from_text(text);
      psb::SolveResult result;
      if (solve_method == "dp") {
        result = psb::solve_dp(m);
      } else if (solve_method == "brute") {
        result = psb::solve_bruteforce(m);
      } else {
        std::cerr << "psb: unknown solve method '" << solve_method << "'\n";
        return kExitInput;
      }
      nlohmann::json j;
      j["cost"] = result.cost;
      j["tour"] = psb::tour_sequence(result.tour);
      j["encoding"] = psb::format_encoding(result.encoding);
      j["method"] = solve_method;
      print_json(j.dump(), pretty);
    }
  } catch (const psb::WitnessAssemblyFailure& e) {
    std::cerr << "psb: internal contract violation: " << e.what() << "\n";
    return kExitInternal;
  } catch (const psb::Error& e) {
    std::cerr << "psb: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
