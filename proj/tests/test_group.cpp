#include <gtest/gtest.h>

#include <set>

#include "cutgk/constructors.hpp"
#include "cutgk/error.hpp"
#include "cutgk/group.hpp"
#include "cutgk/numtheory.hpp"
#include "cutgk/structure.hpp"

using namespace cutgk;

TEST(Group, ClosureOrders) {
  auto c3 = FiniteGroup::from_generators({Permutation::from_cycles(3, {{0, 1, 2}})}, 3);
  EXPECT_EQ(c3.order(), 3u);
  auto klein = FiniteGroup::from_generators(
      {Permutation::from_cycles(4, {{0, 1}, {2, 3}}), Permutation::from_cycles(4, {{0, 2}, {1, 3}})}, 4);
  EXPECT_EQ(klein.order(), 4u);
  EXPECT_TRUE(is_abelian(klein.whole()));
  EXPECT_FALSE(is_cyclic(klein.whole()));
}

TEST(Group, Sym9OrderAndClasses) {
  auto S9 = construct(GroupSpec::sym(9));
  EXPECT_EQ(S9.order(), nt::factorial(9));
  EXPECT_EQ(S9.classes().size(), 30u);  // p(9)
}

TEST(Group, BoundAndDegreeErrors) {
  try {
    construct(GroupSpec::sym(7), 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundExceeded);
  }
  try {
    FiniteGroup::from_generators({Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})}, 5, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ClosureExceedsBound);
  }
  EXPECT_THROW(FiniteGroup::from_generators({Permutation::identity(3)}, 4), Error);
}

TEST(Group, TrivialGroup) {
  auto T = FiniteGroup::from_generators({}, 3);
  EXPECT_EQ(T.order(), 1u);
  EXPECT_EQ(T.classes().size(), 1u);
  EXPECT_TRUE(sylow(T, 2).is_trivial());
}

TEST(Group, WordTableReproducesElements) {
  auto G = construct(GroupSpec::sym(5));
  for (ElemId e = 0; e < G.order(); ++e) {
    EXPECT_EQ(G.evaluate_word(G.word_string(e)), e);
  }
  auto a = G.evaluate_word("g0*g1^-1*g1^3");
  EXPECT_EQ(a, G.mul(G.generator_id(0), G.pow(G.generator_id(1), 2)));
  EXPECT_EQ(G.evaluate_word("1"), FiniteGroup::kIdentity);
  try {
    G.evaluate_word("g0*h1");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SyntaxError);
  }
}

TEST(Group, ClassPartitionInvariants) {
  for (auto spec : {GroupSpec::sym(4), GroupSpec::quat(16), GroupSpec::mm(), GroupSpec::alt(5),
                    GroupSpec::dih(12)}) {
    auto G = construct(spec);
    const auto& P = G.classes();
    std::size_t total = 0;
    for (std::size_t c = 0; c < P.size(); ++c) {
      const auto& cls = P.classes[c];
      total += cls.size();
      EXPECT_EQ(G.order() % cls.size(), 0u);
      const ElemId g = cls.front();
      std::vector<ElemId> one{g};
      EXPECT_EQ(centralizer(G.whole(), one).order() * cls.size(), G.order());
      for (ElemId x : cls)
        for (std::size_t s = 0; s < G.generator_count(); ++s)
          EXPECT_EQ(G.class_of(G.conj(x, G.generator_id(s))), c);
      if (c > 0) {
        EXPECT_LT(P.classes[c - 1].front(), cls.front());
      }
    }
    EXPECT_EQ(total, G.order()) << to_string(spec);
  }
}

TEST(Group, ClassSizes) {
  auto S3 = construct(GroupSpec::sym(3));
  std::multiset<std::size_t> s3;
  for (const auto& c : S3.classes().classes) s3.insert(c.size());
  EXPECT_EQ(s3, (std::multiset<std::size_t>{1, 2, 3}));
  auto Q8 = construct(GroupSpec::quat(8));
  std::multiset<std::size_t> q8;
  for (const auto& c : Q8.classes().classes) q8.insert(c.size());
  EXPECT_EQ(q8, (std::multiset<std::size_t>{1, 1, 2, 2, 2}));
}

TEST(Group, SubgroupLagrange) {
  auto G = construct(GroupSpec::sym(4));
  for (const auto& H : all_subgroups(G.whole())) {
    EXPECT_EQ(G.order() % H.order(), 0u);
  }
  EXPECT_EQ(all_subgroups(G.whole()).size(), 30u);
}
