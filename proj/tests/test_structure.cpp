#include <gtest/gtest.h>

#include <random>

#include "cutgk/constructors.hpp"
#include "cutgk/numtheory.hpp"
#include "cutgk/structure.hpp"

using namespace cutgk;

namespace {

FiniteGroup C7C3() { return construct(GroupSpec::sd_pow(GroupSpec::cyc(7), GroupSpec::cyc(3), 2)); }

std::vector<ElemId> brute_normalizer(const FiniteGroup& G, const Subgroup& H) {
  std::vector<ElemId> out;
  for (ElemId g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (ElemId h : H.elements()) ok = ok && H.contains(G.conj(h, g));
    if (ok) out.push_back(g);
  }
  return out;
}

std::vector<ElemId> brute_centralizer(const FiniteGroup& G, const std::vector<ElemId>& A) {
  std::vector<ElemId> out;
  for (ElemId g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (ElemId a : A) ok = ok && G.mul(a, g) == G.mul(g, a);
    if (ok) out.push_back(g);
  }
  return out;
}

std::vector<GroupSpec> small_specs() {
  return {GroupSpec::sym(3),  GroupSpec::sym(4),  GroupSpec::quat(8), GroupSpec::dih(10),
          GroupSpec::alt(4),  GroupSpec::mm(),    GroupSpec::cyc(12), GroupSpec::ea(2, 3),
          GroupSpec::sd_pow(GroupSpec::cyc(7), GroupSpec::cyc(3), 2),
          GroupSpec::dp(GroupSpec::quat(8), GroupSpec::cyc(3)),
          GroupSpec::wr(GroupSpec::cyc(2), GroupSpec::cyc(2))};
}

}  // namespace

TEST(Structure, ElementOrder) {
  auto S9 = construct(GroupSpec::sym(9));
  EXPECT_EQ(element_order(S9, Permutation::identity(9)), 1u);
  EXPECT_EQ(element_order(S9, Permutation::from_cycles(9, {{0, 1, 2, 3, 4, 5, 6, 7, 8}})), 9u);
  EXPECT_EQ(element_order(S9, Permutation::from_cycles(9, {{0, 1, 2, 3, 4}, {5, 6, 7}})), 15u);
  auto S3 = construct(GroupSpec::sym(3));
  EXPECT_THROW(element_order(S3, Permutation::from_cycles(4, {{0, 3}})), Error);
}

TEST(Structure, ElementPart) {
  auto S8 = construct(GroupSpec::sym(8));
  auto g = Permutation::from_cycles(8, {{0, 1, 2, 3, 4}, {5, 6, 7}});
  auto g3 = element_part(S8, g, {3});
  EXPECT_EQ(g3.order(), 3u);
  EXPECT_EQ(g3, g.pow(10));
  auto h = Permutation::from_cycles(8, {{0, 1, 2, 3, 4, 5, 6, 7}});
  EXPECT_EQ(element_part(S8, h, {2}), h);
  auto S7 = construct(GroupSpec::sym(7));
  auto c7 = Permutation::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}});
  EXPECT_TRUE(element_part(S7, c7, {2, 3}).is_identity());
}

TEST(Structure, ElementPartProperty) {
  for (auto spec : {GroupSpec::sym(6), GroupSpec::w4200()}) {
    auto G = construct(spec);
    for (ElemId g = 0; g < G.order(); g += 7) {
      const auto primes = nt::prime_divisors(G.element_order(g));
      nt::PrimeSet pi, rest;
      for (std::size_t i = 0; i < primes.size(); ++i) (i % 2 ? rest : pi).insert(primes[i]);
      const ElemId a = element_part(G, g, pi), b = element_part(G, g, rest);
      EXPECT_EQ(G.mul(a, b), g);
      EXPECT_TRUE(G.commute(a, b));
      EXPECT_TRUE(nt::is_pi_number(G.element_order(a), pi));
      EXPECT_TRUE(nt::is_pi_number(G.element_order(b), rest));
    }
  }
}

TEST(Structure, Centralizer) {
  auto Q8 = construct(GroupSpec::quat(8));
  const ElemId i = Q8.generator_id(0);
  std::vector<ElemId> A{i};
  EXPECT_EQ(centralizer(Q8.whole(), A).order(), 4u);
  std::vector<ElemId> e{FiniteGroup::kIdentity};
  EXPECT_TRUE(centralizer(Q8.whole(), e).is_whole());
  auto S3 = construct(GroupSpec::sym(3));
  std::vector<Permutation> c{Permutation::from_cycles(3, {{0, 1, 2}})};
  EXPECT_EQ(centralizer(S3, c).order(), 3u);
}

TEST(Structure, Normalizer) {
  auto S4 = construct(GroupSpec::sym(4));
  const ElemId c4 = S4.index_of(Permutation::from_cycles(4, {{0, 1, 2, 3}}));
  std::vector<ElemId> g{c4};
  EXPECT_EQ(normalizer(S4, Subgroup::generated(S4, g)).order(), 8u);
  EXPECT_TRUE(normalizer(S4, S4.whole()).is_whole());
  auto MM = construct(GroupSpec::mm());
  EXPECT_TRUE(normalizer(MM, sylow(MM, 5)).is_whole());
}

TEST(Structure, BruteNormalizerCentralizerOracle) {
  std::mt19937 rng(11);
  for (const auto& spec : small_specs()) {
    auto G = construct(spec);
    ASSERT_LE(G.order(), 200u);
    for (int t = 0; t < 6; ++t) {
      std::vector<ElemId> gens{static_cast<ElemId>(rng() % G.order())};
      if (t % 2) gens.push_back(static_cast<ElemId>(rng() % G.order()));
      auto H = Subgroup::generated(G, gens);
      EXPECT_EQ(normalizer(G.whole(), H).elements(), brute_normalizer(G, H)) << to_string(spec);
      EXPECT_EQ(centralizer(G.whole(), gens).elements(), brute_centralizer(G, gens)) << to_string(spec);
    }
  }
}

TEST(Structure, CharacteristicSubgroups) {
  auto Q8 = construct(GroupSpec::quat(8));
  EXPECT_EQ(center(Q8.whole()).order(), 2u);
  auto S4 = construct(GroupSpec::sym(4));
  auto D = derived_subgroup(S4.whole());
  EXPECT_EQ(D.order(), 12u);
  EXPECT_EQ(D, characteristic_subgroup(S4, {CharKind::derived, 0}));
  auto MM = construct(GroupSpec::mm());
  auto F = fitting_subgroup(MM.whole());
  EXPECT_EQ(F.order(), 25u);
  EXPECT_TRUE(is_elementary_abelian(F));
  EXPECT_EQ(frattini_p(Q8.whole(), 2).order(), 2u);
  EXPECT_EQ(omega(construct(GroupSpec::cyc(12)).whole(), 2).order(), 2u);
  EXPECT_THROW(characteristic_subgroup(S4, {CharKind::frattini_p, 2}), Error);
  EXPECT_THROW(characteristic_subgroup(S4, {CharKind::socle_abelian, 0}), Error);
  EXPECT_EQ(socle_abelian(construct(GroupSpec::cyc(12)).whole()).order(), 6u);
}

TEST(Structure, CoreAndFittingProperties) {
  for (const auto& spec : small_specs()) {
    auto G = construct(spec);
    auto F = fitting_subgroup(G.whole());
    EXPECT_TRUE(is_normal(F, G.whole()));
    EXPECT_TRUE(solvability_class(F).is_nilpotent);
    for (auto p : prime_divisors(G.whole())) {
      auto O = p_core(G.whole(), p);
      EXPECT_TRUE(is_normal(O, G.whole()));
      EXPECT_TRUE(O.is_subset_of(F));
      auto P = sylow(G, p);
      for (ElemId g = 0; g < G.order(); ++g) EXPECT_TRUE(O.is_subset_of(conjugate(P, g)));
    }
  }
}

TEST(Structure, Series) {
  auto S4 = construct(GroupSpec::sym(4));
  auto fs = series(S4, SeriesKind::fitting);
  ASSERT_TRUE(fs.fitting_length.has_value());
  EXPECT_EQ(*fs.fitting_length, 3u);
  std::vector<std::size_t> orders;
  for (const auto& t : fs.terms) orders.push_back(t.order());
  EXPECT_EQ(orders, (std::vector<std::size_t>{1, 4, 12, 24}));

  auto Q8 = construct(GroupSpec::quat(8));
  orders.clear();
  for (const auto& t : series(Q8, SeriesKind::lower_central).terms) orders.push_back(t.order());
  EXPECT_EQ(orders, (std::vector<std::size_t>{8, 2, 1}));

  auto C6 = construct(GroupSpec::cyc(6));
  orders.clear();
  for (const auto& t : series(C6, SeriesKind::upper_central).terms) orders.push_back(t.order());
  EXPECT_EQ(orders, (std::vector<std::size_t>{1, 6}));
}

TEST(Structure, Sylow) {
  EXPECT_EQ(sylow(construct(GroupSpec::sym(4)), 2).order(), 8u);
  auto MM = construct(GroupSpec::mm());
  auto P5 = sylow(MM, 5);
  EXPECT_EQ(P5.order(), 25u);
  EXPECT_TRUE(is_normal(P5, MM.whole()));
  EXPECT_TRUE(is_elementary_abelian(P5));
  EXPECT_EQ(sylow(C7C3(), 3).order(), 3u);
  EXPECT_TRUE(sylow(MM, 3).is_trivial());
  for (const auto& spec : small_specs()) {
    auto G = construct(spec);
    for (auto p : prime_divisors(G.whole())) EXPECT_EQ(sylow(G, p).order(), nt::p_part(G.order(), p));
  }
}

TEST(Structure, Hall) {
  auto C6 = construct(GroupSpec::cyc(6));
  EXPECT_TRUE(hall(C6, {2, 3})->is_whole());
  auto W = construct(GroupSpec::w4200());
  auto H37 = hall(W, {3, 7});
  ASSERT_TRUE(H37);
  EXPECT_EQ(H37->order(), 21u);
  auto H25 = hall(W, {2, 5});
  ASSERT_TRUE(H25);
  EXPECT_EQ(H25->order(), 200u);
  // Alt(5) has no subgroup of order 15.
  EXPECT_FALSE(hall(construct(GroupSpec::alt(5)), {3, 5}).has_value());
  auto S7 = construct(GroupSpec::sym(7));
  EXPECT_THROW(hall(S7, {2, 3}), Error);
}

TEST(Structure, SolvabilityClass) {
  auto q = solvability_class(construct(GroupSpec::quat(8)));
  EXPECT_TRUE(q.is_nilpotent);
  EXPECT_TRUE(q.is_solvable);
  EXPECT_EQ(q.fitting_length, 1u);
  auto s = solvability_class(construct(GroupSpec::sym(4)));
  EXPECT_FALSE(s.is_nilpotent);
  EXPECT_TRUE(s.is_solvable);
  EXPECT_EQ(s.fitting_length, 3u);
  EXPECT_FALSE(solvability_class(construct(GroupSpec::alt(5))).is_solvable);
}

TEST(Structure, Frobenius) {
  auto MM = construct(GroupSpec::mm());
  auto fd = frobenius_decomposition(MM);
  ASSERT_TRUE(fd);
  EXPECT_EQ(fd->kernel.order(), 25u);
  EXPECT_TRUE(is_quaternion8(fd->complement));
  auto S3 = frobenius_decomposition(construct(GroupSpec::sym(3)));
  ASSERT_TRUE(S3);
  EXPECT_EQ(S3->kernel.order(), 3u);
  EXPECT_EQ(S3->complement.order(), 2u);
  EXPECT_FALSE(frobenius_decomposition(construct(GroupSpec::quat(8))));
  for (const auto& spec : small_specs()) {
    auto G = construct(spec);
    auto d = frobenius_decomposition(G);
    if (!d) continue;
    EXPECT_TRUE(is_normal(d->kernel, G.whole()));
    EXPECT_TRUE(intersection(d->kernel, d->complement).is_trivial());
    EXPECT_EQ(d->kernel.order() * d->complement.order(), G.order());
    for (ElemId h : d->complement.elements()) {
      if (h == 0) continue;
      std::vector<ElemId> one{h};
      EXPECT_TRUE(intersection(centralizer(G.whole(), one), d->kernel).is_trivial());
    }
  }
}

TEST(Structure, Quotients) {
  auto S4 = construct(GroupSpec::sym(4));
  auto V = fitting_subgroup(S4.whole());
  auto Q = quotient_group(S4.whole(), V);
  EXPECT_EQ(Q.order(), 6u);
  EXPECT_EQ(quotient_order_spectrum(S4.whole(), V), (std::set<std::uint64_t>{1, 2, 3}));
  auto mins = minimal_normal_subgroups(S4.whole());
  ASSERT_EQ(mins.size(), 1u);
  EXPECT_EQ(mins.front().order(), 4u);
}
