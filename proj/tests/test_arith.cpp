#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "cutgk/arith.hpp"
#include "cutgk/constructors.hpp"
#include "cutgk/fpmod.hpp"
#include "cutgk/numtheory.hpp"
#include "cutgk/structure.hpp"

using namespace cutgk;

namespace {

GroupSpec c7c3() { return GroupSpec::sd_pow(GroupSpec::cyc(7), GroupSpec::cyc(3), 2); }

// Orders of a direct product: lcms of pairs from the factor spectra.
std::set<std::uint64_t> lcm_closure(const std::set<std::uint64_t>& a, const std::set<std::uint64_t>& b) {
  std::set<std::uint64_t> out;
  for (auto x : a)
    for (auto y : b) out.insert(std::lcm(x, y));
  return out;
}

}  // namespace

TEST(OrderSpectrum, Examples) {
  EXPECT_EQ(order_spectrum(construct(GroupSpec::cyc(6))), (std::set<std::uint64_t>{1, 2, 3, 6}));
  EXPECT_EQ(order_spectrum(construct(GroupSpec::quat(8))), (std::set<std::uint64_t>{1, 2, 4}));
  const auto W = construct(GroupSpec::w4200());
  const auto oracle = lcm_closure({1, 2, 4, 5}, {1, 3, 7});
  EXPECT_EQ(oracle, (std::set<std::uint64_t>{1, 2, 3, 4, 5, 6, 7, 12, 14, 15, 28, 35}));
  EXPECT_EQ(order_spectrum(W), oracle);
  EXPECT_EQ(order_spectrum(W), order_spectrum(W.whole()));
}

TEST(GkGraph, Examples) {
  EXPECT_EQ(gk_graph(construct(GroupSpec::w4200())), named_graph("main"));
  EXPECT_EQ(gk_graph(construct(GroupSpec::sym(9))), named_graph("t"));
  auto c7 = gk_graph(construct(GroupSpec::cyc(7)));
  EXPECT_EQ(c7.vertices, (std::set<std::uint64_t>{7}));
  EXPECT_TRUE(c7.edges.empty());
}

TEST(GkGraph, NamedGraphs) {
  EXPECT_EQ(named_graph("main").edges.size(), 4u);
  EXPECT_EQ(named_graph("u").edges.size(), 5u);
  EXPECT_NE(named_graph("s"), named_graph("t"));
  try {
    named_graph("w");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownGraphId);
  }
  for (const auto& id : named_graph_ids()) {
    const auto g = named_graph(id);
    for (auto [p, q] : g.edges) {
      EXPECT_TRUE(g.vertices.count(p) && g.vertices.count(q));
      EXPECT_LT(p, q);
    }
  }
}

TEST(GkGraph, Serialization) {
  auto g = named_graph("main");
  EXPECT_EQ(g.to_json().dump(), R"({"edges":[[2,3],[2,7],[3,5],[5,7]],"vertices":[2,3,5,7]})");
  EXPECT_NE(g.to_dot().find("5 -- 7"), std::string::npos);
  EXPECT_THROW(GkGraph::from_edges({2, 4}, {}), Error);
}

TEST(GkGraph, DirectProductJoinsPrimes) {
  for (auto [a, b] : {std::pair{GroupSpec::sym(3), GroupSpec::cyc(5)},
                      std::pair{GroupSpec::mm(), c7c3()},
                      std::pair{GroupSpec::alt(4), GroupSpec::dih(10)}}) {
    const auto A = construct(a), B = construct(b);
    const auto g = gk_graph(construct(GroupSpec::dp(a, b)));
    for (auto p : prime_divisors(A.whole()))
      for (auto q : prime_divisors(B.whole()))
        if (p != q) {
          EXPECT_TRUE(g.has_edge(p, q));
        }
  }
}

TEST(Rationality, ElementExamples) {
  auto Q8 = construct(GroupSpec::quat(8));
  EXPECT_TRUE(element_rationality(Q8, FiniteGroup::kIdentity).is_rational);
  auto vi = element_rationality(Q8, Q8.generators()[0]);
  EXPECT_TRUE(vi.is_rational);
  EXPECT_EQ(vi.normalizer_index, 2u);
  EXPECT_EQ(vi.aut_order, 2u);
  auto G = construct(c7c3());
  const ElemId a = sylow(G, 7).generators().front();
  auto va = element_rationality(G, a);
  EXPECT_TRUE(va.is_inverse_semi_rational);
  EXPECT_FALSE(va.is_rational);
  EXPECT_FALSE(va.is_real);
  EXPECT_EQ(va.normalizer_index, 3u);
  EXPECT_EQ(va.aut_order, 6u);
  EXPECT_THROW(element_rationality(Q8, Permutation::identity(3)), Error);
}

TEST(Rationality, GroupExamples) {
  auto mm = group_rationality(construct(GroupSpec::mm()));
  EXPECT_TRUE(mm.is_rational_group);
  EXPECT_TRUE(mm.is_cut);
  auto f21 = group_rationality(construct(c7c3()));
  EXPECT_TRUE(f21.is_cut);
  EXPECT_FALSE(f21.is_rational_group);
  auto c5 = group_rationality(construct(GroupSpec::cyc(5)));
  EXPECT_FALSE(c5.is_cut);
  EXPECT_FALSE(c5.is_rational_group);
}

TEST(Rationality, SymmetricGroupsAreRational) {
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(group_rationality(construct(GroupSpec::sym(n))).is_rational_group) << n;
}

TEST(Rationality, Sym9ByCycleTypeOracle) {
  // Powers coprime to the order keep the cycle type, and cycle type is the
  // conjugacy invariant in Sym(n); so every class must be rational.
  auto S9 = construct(GroupSpec::sym(9));
  const auto& P = S9.classes();
  for (std::size_t c = 0; c < P.size(); ++c) {
    const ElemId g = P.representative(c);
    const auto n = S9.element_order(g);
    for (std::uint64_t k = 1; k < n; ++k) {
      if (std::gcd(k, n) != 1) continue;
      EXPECT_EQ(S9.element(S9.pow(g, static_cast<long long>(k))).cycle_type(), S9.element(g).cycle_type());
    }
    EXPECT_TRUE(element_rationality_by_classes(S9, g).is_rational);
  }
  EXPECT_TRUE(group_rationality(S9).is_rational_group);
}

TEST(Rationality, ClassAndIndexMethodsAgree) {
  for (auto spec : {GroupSpec::sym(5), GroupSpec::mm(), c7c3(), GroupSpec::quat(16), GroupSpec::dih(18),
                    GroupSpec::cyc(12), GroupSpec::alt(5), GroupSpec::w4200()}) {
    auto G = construct(spec);
    const auto& P = G.classes();
    for (std::size_t c = 0; c < P.size(); ++c) {
      const ElemId g = P.representative(c);
      auto a = element_rationality_by_classes(G, g);
      auto b = element_rationality_by_index(G, g);
      EXPECT_EQ(a.is_rational, b.is_rational) << to_string(spec);
      EXPECT_EQ(a.is_inverse_semi_rational, b.is_inverse_semi_rational) << to_string(spec);
      EXPECT_EQ(a.is_real, b.is_real) << to_string(spec);
      EXPECT_EQ(a.is_rational, a.is_inverse_semi_rational && a.is_real);
    }
  }
}

TEST(Rationality, PredicatesAreClassInvariant) {
  for (auto spec : {GroupSpec::mm(), c7c3(), GroupSpec::sym(4)}) {
    auto G = construct(spec);
    for (const auto& cls : G.classes().classes) {
      const auto v = element_rationality_by_classes(G, cls.front());
      for (ElemId x : cls) EXPECT_EQ(element_rationality_by_classes(G, x), v);
    }
  }
}

TEST(Rationality, EigenvectorPropertyMatchesRationalTranslations) {
  // v g = alpha v for all alpha exactly when every translation is rational in V x| G.
  std::vector<ModuleAction> modules;
  modules.push_back(ModuleAction::certify(construct(GroupSpec::quat(8)), 5,
                                          {FpMatrix::from_rows(5, {{0, 4}, {1, 0}}),
                                           FpMatrix::from_rows(5, {{2, 0}, {0, 3}})}));
  modules.push_back(ModuleAction::certify(construct(GroupSpec::cyc(2)), 5, {FpMatrix::from_rows(5, {{4}})}));
  modules.push_back(ModuleAction::certify(construct(GroupSpec::cyc(4)), 5, {FpMatrix::from_rows(5, {{2}})}));
  modules.push_back(permutation_module(construct(GroupSpec::sym(3)), 5));
  modules.push_back(ModuleAction::certify(construct(GroupSpec::cyc(6)), 7, {FpMatrix::from_rows(7, {{3}})}));
  for (const auto& M : modules) {
    const auto S = semidirect_perm_group(M).group;
    const std::size_t nv = static_cast<std::size_t>(std::pow(M.p(), M.dim()));
    bool all_rational = true;
    for (ElemId g = 0; g < S.order(); ++g) {
      const auto img = S.images(g);
      // A translation moves 0 to w and acts as x -> x + w.
      const auto w = vector_from_index(img[0], M.p(), M.dim());
      bool translation = true;
      for (std::size_t x = 0; x < nv && translation; ++x) {
        auto v = vector_from_index(x, M.p(), M.dim());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<Residue>((v[i] + w[i]) % M.p());
        translation = img[x] == vector_index(v, M.p());
      }
      for (std::size_t k = nv; k < S.degree() && translation; ++k) translation = img[k] == k;
      if (translation) all_rational = all_rational && element_rationality_by_classes(S, g).is_rational;
    }
    EXPECT_EQ(has_eigenvector_property(M).holds, all_rational);
  }
}
