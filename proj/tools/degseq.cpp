// degseq: command-line front end for the degree-sequence library.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "degseq/coloring.hpp"
#include "degseq/connect.hpp"
#include "degseq/construct.hpp"
#include "degseq/error.hpp"
#include "degseq/graph_io.hpp"
#include "degseq/oracle.hpp"
#include "degseq/sequence.hpp"
#include "degseq/verify.hpp"

using json = nlohmann::ordered_json;
using namespace degseq;

namespace {

constexpr const char* kSchema = "degseq-forge/1";

enum Exit { kOk = 0, kNegative = 1, kInputError = 2, kBudget = 3, kAnomaly = 4 };

struct RunConfig {
  std::uint64_t seed = 1;
  int max_n = 0;
  double timeout_s = 0;
  std::string format = "json";
};

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotGraphic:
    case ErrorKind::CriterionFails:
      return kNegative;
    case ErrorKind::OracleTooLarge:
      return kBudget;
    default:
      return is_anomaly(k) ? kAnomaly : kInputError;
  }
}

std::vector<std::vector<int>> read_sequences(const std::string& path) {
  if (path == "-") return parse_sequences(std::cin);
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  return parse_sequences(in);
}

Graph read_graph(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return decode_graph_auto(ss.str());
  }
  return read_graph_file(path);
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

OracleBudget budget_from(const RunConfig& cfg) {
  OracleBudget b;
  if (cfg.max_n > 0) b.max_n = cfg.max_n;
  if (cfg.max_n > 0) b.coloring_max_n = std::max(cfg.max_n, b.coloring_max_n);
  b.max_seconds = cfg.timeout_s;
  b.seed = cfg.seed;
  return b;
}

ConstructOptions construct_from(const RunConfig& cfg) {
  ConstructOptions o;
  o.seed = cfg.seed;
  if (cfg.max_n > 0) o.oracle_max_n = cfg.max_n;
  return o;
}

json seq_json(const DegreeSequence& pi) { return json(pi.vector()); }

json coloring_json(const EquitableColoring& f) {
  json a = json::array();
  for (int c : f.assignment) a.push_back(c + 1);
  return a;
}

json certificates_json(const std::vector<Certificate>& cs) {
  json a = json::array();
  for (const auto& c : cs) a.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return a;
}

void emit_text(const json& j, const std::string& prefix = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it->is_object()) {
      emit_text(*it, key);
    } else if (it->is_array() && !it->empty() && it->front().is_object()) {
      for (std::size_t i = 0; i < it->size(); ++i) emit_text((*it)[i], key + "[" + std::to_string(i) + "]");
    } else if (it->is_string()) {
      std::cout << key << ": " << it->get<std::string>() << '\n';
    } else {
      std::cout << key << ": " << it->dump() << '\n';
    }
  }
}

void emit(const RunConfig& cfg, json body) {
  json j{{"schema", kSchema}};
  for (auto it = body.begin(); it != body.end(); ++it) j[it.key()] = *it;
  if (cfg.format == "text") {
    emit_text(j);
    std::cout << '\n';
  } else {
    std::cout << j.dump() << '\n';
  }
}

int cmd_check_graphic(const RunConfig& cfg, const std::string& path) {
  int code = kOk;
  for (const auto& raw : read_sequences(path)) {
    const DegreeSequence pi = normalize(raw);
    const auto prof = profile(pi);
    json gamma = nullptr;
    if (prof.gamma_min) gamma = *prof.gamma_min;
    const bool g = is_graphic(pi);
    if (!g) code = kNegative;
    emit(cfg, {{"sequence", seq_json(pi)}, {"graphic", g}, {"m", prof.m}, {"gamma_min", gamma}});
  }
  return code;
}

int cmd_kfactor_cond(const RunConfig& cfg, const std::string& path, int k) {
  int code = kOk;
  for (const auto& raw : read_sequences(path)) {
    const DegreeSequence pi = normalize(raw);
    const auto c = kfactor_condition(pi, {k});
    json kp = nullptr;
    if (c.holds) kp = max_even_k(pi, k);
    if (!c.holds) code = kNegative;
    emit(cfg, {{"sequence", seq_json(pi)},
               {"k", k},
               {"applicable", c.applicable},
               {"holds", c.holds},
               {"index", c.index},
               {"lhs", c.lhs},
               {"rhs", c.rhs},
               {"k_prime", kp}});
  }
  return code;
}

json result_json(const RealizationResult& r) {
  json j{{"graph6", encode_graph6(r.graph)}, {"edges", r.graph.edge_count()}};
  if (r.factors && r.factors->factor_count() > 0) {
    json fs = json::array();
    for (int i = 0; i < r.factors->factor_count(); ++i)
      fs.push_back({{"k", r.factors->factor_degree(i)}, {"graph6", encode_graph6(r.factors->factor(i))}});
    j["factors"] = fs;
  }
  if (r.coloring) j["coloring"] = coloring_json(*r.coloring);
  j["certificates"] = certificates_json(r.certificates);
  j["provenance"] = r.provenance;
  return j;
}

int cmd_realize(const RunConfig& cfg, const std::string& path, std::optional<int> k) {
  int code = kOk;
  for (const auto& raw : read_sequences(path)) {
    const DegreeSequence pi = normalize(raw);
    json body{{"sequence", seq_json(pi)}};
    try {
      if (k) {
        const auto r = thm3_construct(pi, {*k}, construct_from(cfg));
        const json rj = result_json(r);
        for (auto it = rj.begin(); it != rj.end(); ++it) body[it.key()] = *it;
      } else {
        const Graph g = havel_hakimi(pi);
        body["graph6"] = encode_graph6(g);
        body["edges"] = g.edge_count();
        const bool ok = g.degrees() == pi.vector();
        body["certificates"] = json::array({{{"name", "degree_sequence"}, {"passed", ok}, {"detail", "Havel-Hakimi"}}});
      }
    } catch (const Error& e) {
      const int c = exit_code_for(e.kind());
      if (c != kNegative) throw;
      code = kNegative;
      body["graph6"] = nullptr;
      body["reason"] = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    }
    emit(cfg, body);
  }
  return code;
}

int cmd_color(const RunConfig& cfg, const std::string& path, int c, bool exact) {
  const Graph g = read_graph(path);
  std::optional<EquitableColoring> f;
  std::string method;
  if (exact) {
    ExactColoringOptions o;
    o.max_n = cfg.max_n > 0 ? cfg.max_n : o.max_n;
    f = equitable_exact(g, c, o);
    method = "exact";
  } else {
    if (c < g.max_degree() + 1)
      throw Error(ErrorKind::InvalidInput, "c must be at least max degree + 1 without --exact");
    f = hs_coloring(g, c, cfg.seed);
    method = "constructive";
  }
  if (!f) {
    emit(cfg, {{"colors", c}, {"method", method}, {"coloring", "NONE"}});
    return kNegative;
  }
  emit(cfg, {{"colors", c}, {"method", method}, {"coloring", coloring_json(*f)}, {"class_sizes", f->class_sizes()}});
  return kOk;
}

int cmd_connectify(const RunConfig& cfg, const std::string& path, const std::string& z0_path,
                   const std::string& coloring_arg) {
  const Graph g0 = read_graph(path);
  const Graph z0 = read_graph(z0_path);
  const std::string text = std::filesystem::exists(coloring_arg) ? slurp(coloring_arg) : coloring_arg;
  const EquitableColoring f = coloring_from_json(text);
  const auto r = connectify(g0, z0, f);
  emit(cfg, {{"graph6", encode_graph6(r.graph)},
             {"lambda_before", r.lambda_before},
             {"lambda_after", r.lambda_after},
             {"target", r.target.target},
             {"steps", r.steps.size()}});
  return kOk;
}

int cmd_verify(const RunConfig& cfg, int theorem, const std::string& sweep) {
  SweepParams p = parse_sweep(sweep);
  if (p.seed == 0) p.seed = cfg.seed;
  const auto rep = theorem_sweep(theorem, p);
  if (cfg.format == "text") {
    std::cout << "theorem " << theorem << " sweep: " << (rep.passed ? "PASS" : "FAIL") << "  checked=" << rep.checked
              << " failures=" << rep.failures << "  (" << rep.detail << ")\n";
    for (const auto& s : rep.failure_samples) std::cout << "  " << s << '\n';
  } else {
    emit(cfg, {{"theorem", theorem},
               {"passed", rep.passed},
               {"checked", rep.checked},
               {"failures", rep.failures},
               {"detail", rep.detail},
               {"failure_samples", rep.failure_samples}});
  }
  return rep.passed ? kOk : kAnomaly;
}

int cmd_oracle_enumerate(const RunConfig& cfg, const std::string& path, std::size_t limit) {
  int code = kOk;
  for (const auto& raw : read_sequences(path)) {
    const DegreeSequence pi = normalize(raw);
    json graphs = json::array();
    const auto count = enumerate_realizations(
        pi,
        [&](const Graph& g) {
          if (graphs.size() < limit) graphs.push_back(encode_graph6(g));
          return true;
        },
        budget_from(cfg));
    if (count == 0) code = kNegative;
    emit(cfg, {{"sequence", seq_json(pi)}, {"count", count}, {"graphs", graphs}});
  }
  return code;
}

int cmd_oracle_kfactor(const RunConfig& cfg, const std::string& path, int k) {
  const Graph g = read_graph(path);
  const auto f = find_k_factor(g, k, budget_from(cfg));
  json factor = nullptr;
  if (f) factor = encode_graph6(*f);
  emit(cfg, {{"k", k}, {"has_k_factor", f.has_value()}, {"factor", factor}});
  return f ? kOk : kNegative;
}

int cmd_oracle_equitable(const RunConfig& cfg, const std::string& path, std::optional<int> c) {
  const Graph g = read_graph(path);
  const auto b = budget_from(cfg);
  if (!c) {
    emit(cfg, {{"min_equitable_colors", min_equitable_colors(g, b)}});
    return kOk;
  }
  ExactColoringOptions o;
  o.max_n = b.coloring_max_n;
  const auto f = equitable_exact(g, *c, o);
  if (!f) {
    emit(cfg, {{"colors", *c}, {"coloring", "NONE"}});
    return kNegative;
  }
  emit(cfg, {{"colors", *c}, {"coloring", coloring_json(*f)}});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degree sequences, k-factors and equitable colourings"};
  app.require_subcommand(1);
  RunConfig cfg;
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--max-n", cfg.max_n, "Oracle vertex cap (0 = built-in defaults)");
  app.add_option("--timeout-s", cfg.timeout_s, "Wall-clock cap per oracle query in seconds");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  std::string seqfile, graphfile, z0file, coloring, sweep = "";
  int k = 0, c = 0, theorem = 0;
  bool exact = false;
  std::size_t limit = 50;

  auto* check = app.add_subcommand("check-graphic", "Graphicality, strong index and colour bound per line");
  check->add_option("seqfile", seqfile, "Sequence file ('-' for stdin)")->required();

  auto* kcond = app.add_subcommand("kfactor-cond", "Evaluate the k-factor criterion per line");
  kcond->add_option("seqfile", seqfile)->required();
  kcond->add_option("--k", k)->required();

  auto* realize = app.add_subcommand("realize", "Realize each sequence, with a k-factor when --k is given");
  realize->add_option("seqfile", seqfile)->required();
  auto* realize_k = realize->add_option("--k", k);

  auto* color = app.add_subcommand("color", "Equitable c-colouring of a graph");
  color->add_option("graphfile", graphfile)->required();
  color->add_option("--c", c)->required();
  color->add_flag("--exact", exact, "Exhaustive search (small graphs)");

  auto* conn = app.add_subcommand("connectify", "Raise edge connectivity by colour-preserving swaps");
  conn->add_option("graphfile", graphfile)->required();
  conn->add_option("--z0", z0file, "Graph file with the swappable edges")->required();
  conn->add_option("--coloring", coloring, "Colouring as a JSON file or inline JSON")->required();

  auto* verify = app.add_subcommand("verify-theorem", "Run a small-instance sweep");
  verify->add_option("theorem", theorem)->required()->check(CLI::Range(1, 4));
  verify->add_option("--sweep", sweep, "e.g. n<=7,k<=2,count=50");

  auto* oracle = app.add_subcommand("oracle", "Brute-force oracles");
  oracle->require_subcommand(1);
  auto* enumerate = oracle->add_subcommand("enumerate", "All labeled realizations");
  enumerate->add_option("seqfile", seqfile)->required();
  enumerate->add_option("--limit", limit, "Graphs listed per sequence")->capture_default_str();
  auto* kfactor = oracle->add_subcommand("kfactor", "Exact k-factor decision");
  kfactor->add_option("graphfile", graphfile)->required();
  kfactor->add_option("--k", k)->required();
  auto* equitable = oracle->add_subcommand("equitable", "Exact equitable colourability");
  equitable->add_option("graphfile", graphfile)->required();
  auto* equitable_c = equitable->add_option("--c", c, "Colour count; omitted = least feasible");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (*check) return cmd_check_graphic(cfg, seqfile);
    if (*kcond) return cmd_kfactor_cond(cfg, seqfile, k);
    if (*realize) return cmd_realize(cfg, seqfile, *realize_k ? std::optional<int>(k) : std::nullopt);
    if (*color) return cmd_color(cfg, graphfile, c, exact);
    if (*conn) return cmd_connectify(cfg, graphfile, z0file, coloring);
    if (*verify) return cmd_verify(cfg, theorem, sweep);
    if (*enumerate) return cmd_oracle_enumerate(cfg, seqfile, limit);
    if (*kfactor) return cmd_oracle_kfactor(cfg, graphfile, k);
    if (*equitable) return cmd_oracle_equitable(cfg, graphfile, *equitable_c ? std::optional<int>(c) : std::nullopt);
  } catch (const Error& e) {
    json err{{"schema", kSchema}, {"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
    std::cout << err.dump() << '\n';
    std::cerr << "degseq: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "degseq: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
