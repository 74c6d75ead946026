#include <gtest/gtest.h>

#include <random>

#include "cutgk/error.hpp"
#include "cutgk/permutation.hpp"

using namespace cutgk;

namespace {

Permutation random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

}  // namespace

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation(std::vector<Point>{0, 0, 1}), Error);
  EXPECT_THROW(Permutation(std::vector<Point>{0, 3}), Error);
}

TEST(Permutation, RightActionComposition) {
  // (0 1) then (1 2): 0 -> 1 -> 2.
  auto a = Permutation::from_cycles(3, {{0, 1}});
  auto b = Permutation::from_cycles(3, {{1, 2}});
  EXPECT_EQ((a * b)[0], 2);
  EXPECT_EQ((a * b).to_string(), "(0 2 1)");
}

TEST(Permutation, DegreeMismatch) {
  try {
    (void)(Permutation::identity(3) * Permutation::identity(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeMismatch);
  }
}

TEST(Permutation, OrderIsLcmOfCycleLengths) {
  auto g = Permutation::from_cycles(8, {{0, 1, 2, 3, 4}, {5, 6, 7}});
  EXPECT_EQ(g.order(), 15u);
  EXPECT_EQ(Permutation::identity(5).order(), 1u);
  EXPECT_EQ(g.cycle_type(), (std::vector<std::size_t>{5, 3}));
  EXPECT_EQ(Permutation::identity(2).to_string(), "()");
}

TEST(Permutation, GroupAxiomsOnRandomPerms) {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    auto a = random_perm(9, rng), b = random_perm(9, rng), c = random_perm(9, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a * a.inverse()).is_identity());
    EXPECT_TRUE((a.inverse() * a).is_identity());
    EXPECT_TRUE(a.pow(static_cast<long long>(a.order())).is_identity());
    EXPECT_EQ(a.pow(-1), a.inverse());
  }
}
