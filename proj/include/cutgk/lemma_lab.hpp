#pragma once

// Machine-checkable instances of the structural lemmas about cut groups, a
// catalog runner over group specs, and the explicit matrix computations.
//
// Every check is three-valued: the hypothesis is decided first, and only
// instances meeting it count as a pass. A failing conclusion produces a
// counterexample that names its subject spec, parameters and witnesses by
// generator words, so it can be re-verified without any other state.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "cutgk/arith.hpp"
#include "cutgk/constructors.hpp"
#include "cutgk/fpmod.hpp"
#include "cutgk/structure.hpp"

namespace cutgk {

enum class CheckStatus { pass, hypothesis_not_met, fail, error };

/// "pass", "hypothesis_not_met", "FAIL", "error".
std::string_view to_string(CheckStatus s);

/// Size limits under which hypotheses are decided. Instances above a limit
/// are reported as hypothesis_not_met with an "outside search bounds" detail.
struct LabBounds {
  std::size_t element_bound = kDefaultElementBound;
  /// Normal abelian subgroup scan for L-2.1.
  std::size_t fed_order_bound = 2000;
  /// Minimal-normal-subgroup quotient scan for L-3.3.
  std::size_t quotient_scan_bound = 20000;
  /// Subgroup-lattice searches over modules (L-2.4, L-2.6).
  std::size_t module_search_order_bound = 200;
  /// Vectors spun while searching submodules.
  std::size_t vector_scan_bound = 4096;
  /// Pair scans over q-elements (L-2.8).
  std::size_t pair_scan_order_bound = 5000;
  /// Degree of permutation modules used for L-2.2.
  std::size_t module_degree_bound = 256;

  nlohmann::json to_json() const;
};

struct LemmaInstance {
  std::string lemma_id;
  GroupSpec subject;
  /// Optional narrowing, e.g. {"p": 3} or {"element": "g0*g1"}.
  nlohmann::json params = nlohmann::json::object();

  /// {"lemma_id": ..., "subject": "<spec>", "params": {...}}
  static LemmaInstance from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

struct SubjectFingerprint {
  std::string spec;
  std::size_t order = 0;
  std::size_t class_count = 0;
  GkGraph gk;

  nlohmann::json to_json() const;
};

struct CheckReport {
  std::string lemma_id;
  SubjectFingerprint subject;
  CheckStatus status = CheckStatus::hypothesis_not_met;
  std::string detail;
  std::optional<nlohmann::json> counterexample;
  /// Extra computed data (explicit computations, witness checks).
  std::optional<nlohmann::json> data;
  double runtime_ms = 0;

  nlohmann::json to_json() const;
};

/// Per-instance state with lazily computed invariants of the subject group.
class LemmaContext {
 public:
  LemmaContext(GroupSpec spec, FiniteGroup G, nlohmann::json params, LabBounds bounds,
               std::uint64_t seed);

  const GroupSpec& spec() const noexcept { return spec_; }
  const FiniteGroup& group() const noexcept { return G_; }
  const nlohmann::json& params() const noexcept { return params_; }
  const LabBounds& bounds() const noexcept { return bounds_; }
  std::uint64_t seed() const noexcept { return seed_; }

  const std::vector<std::uint64_t>& primes();
  const std::set<std::uint64_t>& spectrum();
  const GkGraph& gk();
  const GroupRationality& rationality();
  bool is_cut() { return rationality().is_cut; }
  bool is_solvable();
  const Subgroup& fitting();
  const Subgroup& sylow(std::uint64_t p);
  /// True when some element order is divisible by n.
  bool has_order_multiple(std::uint64_t n);
  /// Class representatives (excluding the identity) whose order is a power of p.
  std::vector<ElemId> p_element_reps(std::uint64_t p);
  /// Normal subgroups of G, cached.
  const std::vector<Subgroup>& normal_subgroups();

  /// Restricts a prime loop to params["p"] when present.
  bool prime_selected(std::uint64_t p, const char* key = "p") const;
  /// Restricts element loops to params["element"] when present.
  std::optional<ElemId> selected_element() const;

 private:
  GroupSpec spec_;
  FiniteGroup G_;
  nlohmann::json params_;
  LabBounds bounds_;
  std::uint64_t seed_;
  std::optional<std::vector<std::uint64_t>> primes_;
  std::optional<std::set<std::uint64_t>> spectrum_;
  std::optional<GkGraph> gk_;
  std::optional<GroupRationality> rat_;
  std::optional<SolvabilityClass> solv_;
  std::optional<Subgroup> fitting_;
  std::map<std::uint64_t, Subgroup> sylow_;
  std::optional<std::vector<Subgroup>> normals_;
};

/// Result of one lemma predicate evaluation.
struct LemmaOutcome {
  CheckStatus status = CheckStatus::hypothesis_not_met;
  std::string detail;
  /// Witness data; the runner adds lemma_id, subject and params.
  std::optional<nlohmann::json> witness;

  static LemmaOutcome pass(std::string detail) { return {CheckStatus::pass, std::move(detail), {}}; }
  static LemmaOutcome not_met(std::string detail) {
    return {CheckStatus::hypothesis_not_met, std::move(detail), {}};
  }
  static LemmaOutcome fail(std::string detail, nlohmann::json witness) {
    return {CheckStatus::fail, std::move(detail), std::move(witness)};
  }
};

struct LemmaDef {
  std::string id;
  /// One-line description of hypothesis and conclusion as checked.
  std::string summary;
  std::function<LemmaOutcome(LemmaContext&)> check;
};

class LemmaRegistry {
 public:
  /// Every lemma id in registration order.
  static const LemmaRegistry& standard();

  void add(LemmaDef def);
  bool contains(const std::string& id) const { return index_.count(id) != 0; }
  /// Throws UnknownLemma.
  const LemmaDef& find(const std::string& id) const;
  std::vector<std::string> ids() const;

 private:
  std::vector<LemmaDef> defs_;
  std::map<std::string, std::size_t> index_;
};

/// Builds the subject and evaluates one lemma. Throws UnknownLemma or
/// BoundExceeded.
CheckReport check_lemma(const LemmaInstance& inst, const LemmaRegistry& registry = LemmaRegistry::standard(),
                        const LabBounds& bounds = {}, std::uint64_t seed = kDefaultIsoSeed);

/// Evaluates `def` on an already constructed subject.
CheckReport check_lemma(const LemmaDef& def, LemmaContext& ctx);

struct RecheckResult {
  bool confirmed = false;
  std::string detail;
};

/// Rebuilds the subject named in a counterexample, re-evaluates its lemma with
/// the recorded parameters and confirms the failure and its witness words.
RecheckResult recheck_counterexample(const nlohmann::json& counterexample,
                                     const LemmaRegistry& registry = LemmaRegistry::standard(),
                                     const LabBounds& bounds = {});

// --- catalog ---------------------------------------------------------------------

/// At least 100 specs of order at most 20000.
const std::vector<GroupSpec>& default_catalog();

/// One spec per line; blank lines and '#' comments are skipped. Throws
/// SyntaxError/SemanticError annotated with the line number.
std::vector<GroupSpec> parse_catalog(std::string_view text);

struct CatalogOptions {
  /// Empty means every registered lemma.
  std::vector<std::string> lemma_ids;
  LabBounds bounds;
  std::uint64_t seed = kDefaultIsoSeed;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
  /// Zero every runtime so reports are byte-identical across runs.
  bool reproducible = false;
};

struct CatalogSummary {
  std::size_t pass = 0;
  std::size_t hypothesis_not_met = 0;
  std::size_t fail = 0;
  std::size_t error = 0;

  nlohmann::json to_json() const;
};

struct CatalogRun {
  std::string run_id;
  std::vector<CheckReport> reports;  // catalog order, then registry order
  CatalogSummary summary;
  nlohmann::json bounds;
  std::uint64_t seed = 0;

  bool ok() const { return summary.fail == 0 && summary.error == 0; }
  nlohmann::json to_json() const;
};

/// Evaluates every (group, lemma) pair. Groups run concurrently; reports are
/// merged in catalog order. Construction errors are recorded per instance.
CatalogRun run_catalog(const std::vector<GroupSpec>& catalog, const CatalogOptions& options = {},
                       const LemmaRegistry& registry = LemmaRegistry::standard());

// --- special checks ----------------------------------------------------------------

/// Q8 wr K acting on F_5^(2n) by blocks, compared with MM wr K. With
/// `negative_p` the analogous F_p block action must fail the eigenvector
/// property instead. K must act on n points. Throws BoundExceeded.
CheckReport vs2_witness_check(std::size_t n, const FiniteGroup& K,
                              std::optional<unsigned> negative_p = std::nullopt,
                              std::size_t element_bound = kDefaultElementBound);

struct RealizabilityWitness {
  std::string spec;
  bool solvable = false;
  bool cut = false;
  bool rational = false;
};

struct RealizabilityScan {
  /// All catalog groups grouped by GK graph (keyed by its JSON text).
  std::map<std::string, std::vector<RealizabilityWitness>> by_graph;
  /// Named graphs with a solvable cut witness.
  std::map<std::string, std::vector<std::string>> named_witnesses;
  /// Non-empty when main lacks a witness or (s)/(t) has one.
  std::vector<std::string> violations;
  std::vector<std::string> errors;

  nlohmann::json to_json() const;
};

RealizabilityScan gk_realizability_scan(const std::vector<GroupSpec>& catalog,
                                        std::size_t element_bound = kDefaultElementBound);

struct RationalityAgreement {
  std::size_t groups = 0;
  std::size_t classes = 0;
  std::vector<std::string> mismatches;
};

/// Class-based against index-based verdicts for every class representative
/// of every catalog group with |G| <= order_bound.
RationalityAgreement rationality_agreement(const std::vector<GroupSpec>& catalog,
                                           std::size_t order_bound = kIndexCrossCheckBound);

/// The 6x6 matrices over F_5: order of <A, U^-1 A U>, the inequality suite
/// and the printed first row of A.
CheckReport explicit_computations();

}  // namespace cutgk
