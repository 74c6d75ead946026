#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cutgk/lemma_lab.hpp"
#include "cutgk/spec_parser.hpp"

using namespace cutgk;
using json = nlohmann::json;

namespace {

CheckReport run(const std::string& id, const std::string& spec, json params = json::object()) {
  return check_lemma(LemmaInstance{id, parse_spec(spec), std::move(params)});
}

const std::vector<std::string> kAllIds = {
    "L-2.1-FED",          "L-2.2-FrobFaithful", "L-2.3-FabSylow",     "L-2.4-HAbelCic",
    "L-2.5-GSylowp",      "L-2.6-InducedFPF",   "L-2.7-Fittingp",     "L-2.8-auxpq",
    "T-2.9-VS2",          "L-3.1-CutOrders(1)", "L-3.1-CutOrders(2)", "L-3.1-CutOrders(3)",
    "L-3.1-CutOrders(4)", "L-3.1-CutOrders(5)", "L-3.1-CutOrders(6)", "L-3.2-G2Q8(1)",
    "L-3.2-G2Q8(2)",      "L-3.2-G2Q8(3)",      "L-3.3-V5or7",        "L-3.4-G2C2or21",
    "L-3.5-S3EA",         "L-3.6-ratS2"};

/// A deliberately false statement: every group of even order has an element of order 4.
LemmaRegistry registry_with_false_lemma() {
  LemmaRegistry reg;
  reg.add({"X-even-has-4", "even order => element of order 4", [](LemmaContext& c) {
             const auto& G = c.group();
             if (G.order() % 2 != 0) return LemmaOutcome::not_met("odd order");
             for (ElemId x = 0; x < G.order(); ++x)
               if (G.element_order(x) == 4) return LemmaOutcome::pass("found");
             ElemId inv = 0;
             for (ElemId x = 1; x < G.order() && !inv; ++x)
               if (G.element_order(x) == 2) inv = x;
             return LemmaOutcome::fail("no element of order 4",
                                       {{"predicate", "no_order_4"}, {"elements", {{"t", G.word_string(inv)}}}});
           }});
  return reg;
}

}  // namespace

TEST(Registry, ContainsEveryLemmaIdOnce) {
  const auto ids = LemmaRegistry::standard().ids();
  EXPECT_EQ(ids, kAllIds);
  EXPECT_THROW(LemmaRegistry::standard().find("L-9.9-Nope"), Error);
  try {
    LemmaRegistry::standard().find("L-9.9-Nope");
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownLemma);
  }
}

TEST(Registry, DuplicateIdRejected) {
  LemmaRegistry reg;
  reg.add({"A", "", [](LemmaContext&) { return LemmaOutcome::pass(""); }});
  EXPECT_THROW(reg.add({"A", "", [](LemmaContext&) { return LemmaOutcome::pass(""); }}), Error);
}

TEST(Lemmas, SylowOfOrderPInA4) {
  const auto r = run("L-2.5-GSylowp", "Alt(4)", {{"p", 3}});
  EXPECT_EQ(r.status, CheckStatus::pass) << r.detail;
  EXPECT_EQ(r.subject.order, 12u);
  EXPECT_EQ(r.subject.class_count, 4u);
}

TEST(Lemmas, FittingWitnessInSym4) {
  const auto r = run("L-2.7-Fittingp", "Sym(4)", {{"p", 3}});
  EXPECT_EQ(r.status, CheckStatus::pass) << r.detail;
}

TEST(Lemmas, CutOrdersOneOnMM) {
  const auto r = run("L-3.1-CutOrders(1)", "MM", {{"p", 5}});
  EXPECT_EQ(r.status, CheckStatus::pass) << r.detail;
  EXPECT_EQ(r.subject.order, 200u);
}

TEST(Lemmas, FabSylowOnMM) {
  EXPECT_EQ(run("L-2.3-FabSylow", "MM").status, CheckStatus::pass);
  // Q8 x C3 has elements of order 12 = 4p.
  EXPECT_EQ(run("L-2.3-FabSylow", "DP(Quat(8),Cyc(3))").status, CheckStatus::hypothesis_not_met);
}

TEST(Lemmas, InducedModuleOnMM) {
  EXPECT_EQ(run("L-2.6-InducedFPF", "MM").status, CheckStatus::pass);
}

TEST(Lemmas, FrobeniusFaithfulModules) {
  EXPECT_EQ(run("L-2.2-FrobFaithful", "Sym(3)", {{"p", 5}}).status, CheckStatus::pass);
  EXPECT_EQ(run("L-2.2-FrobFaithful", "MM").status, CheckStatus::pass);
  EXPECT_EQ(run("L-2.2-FrobFaithful", "Sym(4)").status, CheckStatus::hypothesis_not_met);
}

TEST(Lemmas, FormTwoGroupsAreCut) {
  for (const char* spec : {"SD(Cyc(5),Cyc(4),pow=2)", "SD(Cyc(15),Cyc(4),pow=2)",
                           "SD(EA(3,2),SD(Cyc(5),Cyc(4),pow=2),mats=[[[1,0],[0,1]],[[2,0],[0,2]]])"}) {
    EXPECT_EQ(run("L-3.5-S3EA", spec).status, CheckStatus::pass) << spec;
  }
}

TEST(Lemmas, RationalTwoGroupDecomposition) {
  EXPECT_EQ(run("L-3.6-ratS2", "SD(Cyc(7),Cyc(3),pow=2)").status, CheckStatus::pass);
  EXPECT_EQ(run("L-3.6-ratS2", "DP(Quat(8),SD(Cyc(7),Cyc(3),pow=2))").status, CheckStatus::pass);
}

TEST(Lemmas, MainWitnessMeetsQuotientCondition) {
  const auto r = run("L-3.3-V5or7", "W4200");
  EXPECT_EQ(r.status, CheckStatus::pass) << r.detail;
  EXPECT_NE(r.detail.find("minimal normal"), std::string::npos);
}

TEST(Lemmas, A5MeetsNoCutHypothesis) {
  const auto A5 = std::vector<GroupSpec>{parse_spec("Alt(5)")};
  CatalogOptions opt;
  for (const auto& id : kAllIds)
    if (id.rfind("L-3.", 0) == 0) opt.lemma_ids.push_back(id);
  const auto out = run_catalog(A5, opt);
  ASSERT_EQ(out.reports.size(), opt.lemma_ids.size());
  for (const auto& r : out.reports) EXPECT_EQ(r.status, CheckStatus::hypothesis_not_met) << r.lemma_id;
}

TEST(Lemmas, UnknownLemmaInInstance) {
  EXPECT_THROW(run("L-0-None", "Cyc(2)"), Error);
}

TEST(Lemmas, InstanceJsonRoundTrip) {
  const json j = {{"lemma_id", "L-2.7-Fittingp"}, {"subject", "Sym( 4 )"}, {"params", {{"p", 3}}}};
  const auto inst = LemmaInstance::from_json(j);
  EXPECT_EQ(inst.subject, GroupSpec::sym(4));
  EXPECT_EQ(inst.to_json()["subject"], "Sym(4)");
  EXPECT_THROW(LemmaInstance::from_json(json{{"subject", "MM"}}), Error);
}

TEST(Counterexamples, FalseLemmaFailsAndRechecks) {
  const auto reg = registry_with_false_lemma();
  const auto r = check_lemma(LemmaInstance{"X-even-has-4", parse_spec("Sym(3)")}, reg);
  ASSERT_EQ(r.status, CheckStatus::fail);
  ASSERT_TRUE(r.counterexample);
  // Serialize, re-read and recheck from the JSON alone.
  const json cex = json::parse(r.counterexample->dump());
  EXPECT_EQ(cex["subject"], "Sym(3)");
  const auto again = recheck_counterexample(cex, reg);
  EXPECT_TRUE(again.confirmed) << again.detail;

  json tampered = cex;
  tampered["elements"]["t"] = "g7";
  EXPECT_FALSE(recheck_counterexample(tampered, reg).confirmed);

  json wrong_subject = cex;
  wrong_subject["subject"] = "Cyc(4)";
  EXPECT_FALSE(recheck_counterexample(wrong_subject, reg).confirmed);
}

TEST(Counterexamples, FailingCatalogRunIsReported) {
  const auto reg = registry_with_false_lemma();
  const std::vector<GroupSpec> cat = {parse_spec("Cyc(4)"), parse_spec("Sym(3)"), parse_spec("Cyc(3)")};
  const auto out = run_catalog(cat, {}, reg);
  EXPECT_EQ(out.summary.pass, 1u);
  EXPECT_EQ(out.summary.fail, 1u);
  EXPECT_EQ(out.summary.hypothesis_not_met, 1u);
  EXPECT_FALSE(out.ok());
  EXPECT_EQ(out.reports[1].to_json()["status"], "FAIL");
}

TEST(Catalog, DefaultCatalogShape) {
  const auto& cat = default_catalog();
  EXPECT_GE(cat.size(), 100u);
  for (const auto& s : cat) EXPECT_LE(construct(s).order(), 20000u) << to_string(s);
}

TEST(Catalog, DataFileMatchesBuiltin) {
  std::ifstream in(CUTGK_SOURCE_DIR "/data/default_catalog.txt");
  ASSERT_TRUE(in);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(parse_catalog(ss.str()), default_catalog());
}

TEST(Catalog, ParseErrorsNameTheLine) {
  try {
    parse_catalog("Cyc(3)\n# comment\nDP(MM\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SyntaxError);
    ASSERT_TRUE(e.position());
    EXPECT_EQ(e.position()->line, 3u);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(Catalog, EmptyCatalog) {
  const auto out = run_catalog({});
  EXPECT_TRUE(out.reports.empty());
  EXPECT_EQ(out.summary.to_json(), (json{{"pass", 0}, {"hypothesis_not_met", 0}, {"FAIL", 0}, {"error", 0}}));
  EXPECT_TRUE(out.ok());
}

TEST(Catalog, ConstructionErrorsAreRecorded) {
  GroupSpec bad = GroupSpec::sd_pow(GroupSpec::cyc(6), GroupSpec::cyc(2), 2);  // 2 is not a unit mod 6
  CatalogOptions opt;
  opt.lemma_ids = {"L-2.7-Fittingp"};
  const auto out = run_catalog({bad, GroupSpec::sym(4)}, opt);
  ASSERT_EQ(out.reports.size(), 2u);
  EXPECT_EQ(out.reports[0].status, CheckStatus::error);
  EXPECT_EQ(out.reports[1].status, CheckStatus::pass);
  EXPECT_EQ(out.summary.error, 1u);
}

TEST(Catalog, FullRunGate) {
  CatalogOptions opt;
  opt.reproducible = true;
  const auto out = run_catalog(default_catalog(), opt);
  EXPECT_EQ(out.summary.fail, 0u);
  EXPECT_EQ(out.summary.error, 0u);
  std::set<std::string> passed;
  for (const auto& r : out.reports) {
    if (r.status == CheckStatus::pass) passed.insert(r.lemma_id);
    if (r.status == CheckStatus::fail) ADD_FAILURE() << r.to_json().dump();
  }
  for (const char* id : {"L-2.2-FrobFaithful", "L-2.3-FabSylow", "L-2.5-GSylowp", "L-2.6-InducedFPF",
                         "L-2.7-Fittingp", "L-2.8-auxpq", "L-3.1-CutOrders(1)", "L-3.1-CutOrders(2)",
                         "L-3.1-CutOrders(4)", "L-3.5-S3EA", "L-3.6-ratS2"}) {
    EXPECT_TRUE(passed.count(id)) << id;
  }
  EXPECT_EQ(out.reports.size(), default_catalog().size() * kAllIds.size());
}

TEST(Catalog, DeterministicAcrossThreadCounts) {
  std::vector<GroupSpec> cat(default_catalog().begin(), default_catalog().begin() + 40);
  CatalogOptions a, b;
  a.reproducible = b.reproducible = true;
  a.threads = 1;
  b.threads = 4;
  EXPECT_EQ(run_catalog(cat, a).to_json().dump(), run_catalog(cat, b).to_json().dump());
  CatalogOptions c = a;
  c.seed = 7;
  EXPECT_NE(run_catalog(cat, a).run_id, run_catalog(cat, c).run_id);
}

TEST(SpecialChecks, VS2Witnesses) {
  const auto trivial = FiniteGroup::from_generators({}, 1);
  const auto one = vs2_witness_check(1, trivial);
  EXPECT_EQ(one.status, CheckStatus::pass) << one.detail;
  EXPECT_EQ((*one.data)["semidirect"]["order"], 200);
  EXPECT_EQ((*one.data)["semidirect"]["rational"], true);
  EXPECT_EQ((*one.data)["semidirect"]["gk"], (json{{"edges", json::array()}, {"vertices", {2, 5}}}));

  const auto neg = vs2_witness_check(1, trivial, 7u);
  EXPECT_EQ(neg.status, CheckStatus::pass);
  EXPECT_EQ((*neg.data)["eigenvector_property"], false);
  EXPECT_TRUE(neg.data->contains("witness_vector"));
  EXPECT_THROW(vs2_witness_check(2, trivial), Error);
}

TEST(SpecialChecks, VS2WreathOfDegreeTwo) {
  const auto r = vs2_witness_check(2, construct(GroupSpec::sym(2)));
  EXPECT_EQ(r.status, CheckStatus::pass) << r.detail;
  EXPECT_EQ((*r.data)["semidirect"]["order"], 80000);
  EXPECT_EQ((*r.data)["eigenvector_property"], true);
}

TEST(SpecialChecks, RealizabilityScan) {
  const auto scan = gk_realizability_scan(default_catalog());
  EXPECT_TRUE(scan.violations.empty());
  EXPECT_TRUE(scan.errors.empty());
  const auto& main = scan.named_witnesses.at("main");
  EXPECT_NE(std::find(main.begin(), main.end(), "W4200"), main.end());
  EXPECT_TRUE(scan.named_witnesses.at("s").empty());
  EXPECT_TRUE(scan.named_witnesses.at("t").empty());
}

TEST(SpecialChecks, Sym9WitnessesTButIsNotSolvable) {
  const auto scan = gk_realizability_scan({GroupSpec::sym(9)});
  EXPECT_TRUE(scan.named_witnesses.at("t").empty());
  const auto key = named_graph("t").to_json().dump();
  ASSERT_EQ(scan.by_graph.count(key), 1u);
  const auto& w = scan.by_graph.at(key).front();
  EXPECT_TRUE(w.rational);
  EXPECT_FALSE(w.solvable);
  const auto j = scan.to_json();
  EXPECT_EQ(j["by_graph"][key][0]["flags"], (json{"rational", "cut", "not solvable"}));
}

TEST(SpecialChecks, ExplicitComputations) {
  const auto r = explicit_computations();
  EXPECT_EQ(r.status, CheckStatus::pass);
  EXPECT_EQ((*r.data)["matrix_group_order"], 252);
  EXPECT_EQ((*r.data)["powers_of_two_below"], (json{1, 2, 4}));
  EXPECT_EQ((*r.data)["A_first_row"], (json{2, 0, 0, 0, 0, 0}));
}

TEST(SpecialChecks, RationalityAgreementOnCatalog) {
  const auto agree = rationality_agreement(default_catalog());
  EXPECT_TRUE(agree.mismatches.empty());
  EXPECT_EQ(agree.groups, default_catalog().size());
  EXPECT_GT(agree.classes, 1000u);
}
