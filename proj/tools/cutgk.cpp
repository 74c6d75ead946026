// cutgk: command-line front end for the group-spec DSL and the lemma lab.
//
// Every command prints one JSON document on stdout (and to --json <path> when
// given). Output is byte-identical for identical invocations unless --timing
// is passed. Exit status: 0 on success, 1 when a check reports FAIL or error,
// 2 on any other failure, with {"error", "message", "line", "column"} printed.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cutgk/arith.hpp"
#include "cutgk/constructors.hpp"
#include "cutgk/lemma_lab.hpp"
#include "cutgk/spec_parser.hpp"
#include "cutgk/structure.hpp"

using nlohmann::json;
using namespace cutgk;

namespace {

struct Globals {
  std::size_t bound = kDefaultElementBound;
  std::uint64_t seed = kDefaultIsoSeed;
  std::string json_path;
  bool timing = false;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const json& j, const Globals& g, bool to_stdout = true) {
  const std::string text = j.dump(2) + "\n";
  if (to_stdout) std::cout << text;
  if (!g.json_path.empty()) {
    std::ofstream out(g.json_path, std::ios::binary);
    if (!out) throw IoError("cannot write " + g.json_path);
    out << text;
  }
}

json error_json(std::string_view kind, const std::string& message, std::optional<SourcePos> pos = {}) {
  json j = {{"error", kind}, {"message", message}, {"line", nullptr}, {"column", nullptr}};
  if (pos) {
    j["line"] = pos->line;
    j["column"] = pos->column;
  }
  return j;
}

int status_exit(CheckStatus s) {
  return s == CheckStatus::fail || s == CheckStatus::error ? 1 : 0;
}

int cmd_gk(const Globals& g, const std::string& text, bool dot) {
  const auto spec = parse_spec(text);
  const auto G = construct(spec, g.bound);
  const auto gk = gk_graph(G);
  json j = {{"spec", to_string(spec)}, {"order", G.order()}};
  j.update(gk.to_json());
  if (dot) {
    std::cout << gk.to_dot();
    emit(j, g, false);
  } else {
    emit(j, g);
  }
  return 0;
}

int cmd_classify(const Globals& g, const std::string& text) {
  const auto spec = parse_spec(text);
  const auto G = construct(spec, g.bound);
  const auto sc = solvability_class(G);
  const auto rat = group_rationality(G);
  json j = {{"spec", to_string(spec)},
            {"order", G.order()},
            {"class_count", G.classes().size()},
            {"solvable", sc.is_solvable},
            {"nilpotent", sc.is_nilpotent},
            {"fitting_length", nullptr},
            {"rational", rat.is_rational_group},
            {"cut", rat.is_cut},
            {"frobenius", nullptr},
            {"gk", gk_graph(G).to_json()}};
  if (sc.fitting_length) j["fitting_length"] = *sc.fitting_length;
  if (const auto fr = frobenius_decomposition(G)) {
    j["frobenius"] = {{"kernel_order", fr->kernel.order()}, {"complement_order", fr->complement.order()}};
  }
  emit(j, g);
  return 0;
}

int cmd_rationality(const Globals& g, const std::string& text, const std::string& word) {
  const auto spec = parse_spec(text);
  const auto G = construct(spec, g.bound);
  const ElemId x = G.evaluate_word(word);
  const auto v = element_rationality(G, x);
  json j = {{"spec", to_string(spec)},
            {"element", G.word_string(x)},
            {"element_order", G.element_order(x)},
            {"is_real", v.is_real},
            {"is_rational", v.is_rational},
            {"is_inverse_semi_rational", v.is_inverse_semi_rational},
            {"normalizer_index", v.normalizer_index},
            {"aut_order", v.aut_order}};
  emit(j, g);
  return 0;
}

LabBounds lab_bounds(const Globals& g) {
  LabBounds b;
  b.element_bound = g.bound;
  return b;
}

int cmd_verify(const Globals& g, const std::string& lemma_id, const std::string& instance_path) {
  json raw = json::parse(read_file(instance_path));
  if (raw.is_object() && !raw.contains("lemma_id")) raw["lemma_id"] = lemma_id;
  const auto inst = LemmaInstance::from_json(raw);
  if (inst.lemma_id != lemma_id) {
    raise(ErrorKind::InvalidArgument,
          "instance names lemma " + inst.lemma_id + " but " + lemma_id + " was requested");
  }
  auto report = check_lemma(inst, LemmaRegistry::standard(), lab_bounds(g), g.seed);
  if (!g.timing) report.runtime_ms = 0;
  emit(report.to_json(), g);
  return status_exit(report.status);
}

std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string id; std::getline(ss, id, ',');) {
    const auto b = id.find_first_not_of(' ');
    const auto e = id.find_last_not_of(' ');
    if (b != std::string::npos) out.push_back(id.substr(b, e - b + 1));
  }
  return out;
}

int cmd_catalog(const Globals& g, const std::string& file, const std::string& lemmas, unsigned threads) {
  const auto catalog = file.empty() ? default_catalog() : parse_catalog(read_file(file));
  CatalogOptions opt;
  if (lemmas != "all") {
    opt.lemma_ids = split_ids(lemmas);
    for (const auto& id : opt.lemma_ids) LemmaRegistry::standard().find(id);
  }
  opt.bounds = lab_bounds(g);
  opt.seed = g.seed;
  opt.threads = threads;
  opt.reproducible = !g.timing;
  const auto run = run_catalog(catalog, opt);
  emit(run.to_json(), g);
  std::cerr << "pass " << run.summary.pass << ", hypothesis_not_met " << run.summary.hypothesis_not_met
            << ", FAIL " << run.summary.fail << ", error " << run.summary.error << "\n";
  return run.ok() ? 0 : 1;
}

int cmd_explicit(const Globals& g) {
  auto report = explicit_computations();
  if (!g.timing) report.runtime_ms = 0;
  emit(report.to_json(), g);
  return status_exit(report.status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite permutation groups, prime graphs and cut-group lemma checks"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--bound", g.bound, "Element bound for group enumeration")->capture_default_str();
  app.add_option("--seed", g.seed, "Seed for randomized isomorphism tests")->capture_default_str();
  app.add_option("--json", g.json_path, "Also write the JSON output to this path");
  app.add_flag("--timing", g.timing, "Include wall-clock runtimes (output is no longer reproducible)");

  std::string spec_text, element, lemma_id, instance, file, lemmas = "all";
  bool dot = false;
  unsigned threads = 0;

  auto* gk = app.add_subcommand("gk", "Prime graph of a group");
  gk->add_option("spec", spec_text, "Group spec")->required();
  gk->add_flag("--dot", dot, "Print Graphviz DOT instead of JSON");

  auto* classify = app.add_subcommand("classify", "Order, solvability, Fitting length, rational and cut verdicts");
  classify->add_option("spec", spec_text, "Group spec")->required();

  auto* rationality = app.add_subcommand("rationality", "Rationality verdict of one element");
  rationality->add_option("spec", spec_text, "Group spec")->required();
  rationality->add_option("--element", element, "Generator word, e.g. g0*g1^-1")->required();

  auto* verify = app.add_subcommand("verify", "Check one lemma instance");
  verify->add_option("lemma-id", lemma_id, "Lemma id")->required();
  verify->add_option("--instance", instance, "Instance JSON file")->required();

  auto* catalog = app.add_subcommand("catalog", "Run lemmas over a catalog of group specs");
  catalog->add_option("--file", file, "Catalog file, one spec per line (default: built-in)");
  catalog->add_option("--lemmas", lemmas, "all, or comma-separated lemma ids")->capture_default_str();
  catalog->add_option("--threads", threads, "Worker threads (0: hardware concurrency)");

  auto* expl = app.add_subcommand("explicit", "The 6x6 matrix computation over F_5");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cout << error_json("UsageError", e.what()).dump(2) << "\n";
    return 2;
  }

  try {
    if (*gk) return cmd_gk(g, spec_text, dot);
    if (*classify) return cmd_classify(g, spec_text);
    if (*rationality) return cmd_rationality(g, spec_text, element);
    if (*verify) return cmd_verify(g, lemma_id, instance);
    if (*catalog) return cmd_catalog(g, file, lemmas, threads);
    if (*expl) return cmd_explicit(g);
  } catch (const Error& e) {
    std::cout << error_json(to_string(e.kind()), e.what(), e.position()).dump(2) << "\n";
  } catch (const json::exception& e) {
    std::cout << error_json("InvalidJson", e.what()).dump(2) << "\n";
  } catch (const IoError& e) {
    std::cout << error_json("IoError", e.what()).dump(2) << "\n";
  } catch (const std::exception& e) {
    std::cout << error_json("InternalError", e.what()).dump(2) << "\n";
  }
  return 2;
}
