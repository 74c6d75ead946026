#include <random>

#include <gtest/gtest.h>

#include "cutgk/arith.hpp"
#include "cutgk/spec_parser.hpp"

using namespace cutgk;

namespace cutgk {
void PrintTo(const GroupSpec& s, std::ostream* os) { *os << to_string(s); }
}  // namespace cutgk

namespace {

SourcePos error_position(const std::string& text, ErrorKind expected) {
  try {
    parse_spec(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), expected) << text << ": " << e.what();
    return e.position().value_or(SourcePos{0, 0});
  }
  ADD_FAILURE() << "no error for " << text;
  return {0, 0};
}

/// Random well-formed specs; sizes are irrelevant since nothing is constructed.
class SpecGenerator {
 public:
  explicit SpecGenerator(unsigned seed) : rng_(seed) {}

  GroupSpec expr(int depth) {
    const int pick = uniform(0, depth > 0 ? 10 : 7);
    switch (pick) {
      case 0: return GroupSpec::cyc(uniform(1, 50));
      case 1: return GroupSpec::dih(2 * uniform(1, 30));
      case 2: return GroupSpec::quat(8 << uniform(0, 3));
      case 3: return GroupSpec::sym(uniform(1, 9));
      case 4: return GroupSpec::alt(uniform(1, 9));
      case 5: return GroupSpec::ea(prime(), uniform(1, 4));
      case 6: return GroupSpec::mm();
      case 7: return GroupSpec::w4200();
      case 8: return GroupSpec::dp(expr(depth - 1), expr(depth - 1));
      case 9: return GroupSpec::wr(expr(depth - 1), expr(depth - 1));
      default: return sd(depth);
    }
  }

 private:
  std::mt19937 rng_;

  long long uniform(long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(rng_); }
  long long prime() {
    static const long long ps[] = {2, 3, 5, 7, 11, 13};
    return ps[uniform(0, 5)];
  }

  GroupSpec sd(int depth) {
    GroupSpec H = expr(depth - 1);
    if (uniform(0, 1) == 0) return GroupSpec::sd_pow(GroupSpec::cyc(uniform(1, 40)), H, uniform(-20, 20));
    const long long p = prime(), k = uniform(1, 3);
    std::vector<std::vector<std::vector<long long>>> mats(uniform(0, 3));
    for (auto& m : mats) {
      m.assign(k, std::vector<long long>(k));
      for (auto& row : m)
        for (auto& x : row) x = uniform(-3, 2 * p);
    }
    return GroupSpec::sd_mats(GroupSpec::ea(p, k), H, mats);
  }
};

/// Inserts random whitespace (including newlines) between characters that
/// are not inside a number or an identifier.
std::string scatter_whitespace(const std::string& s, std::mt19937& rng) {
  static const char* ws[] = {"", "", "", " ", "  ", "\n", "\t"};
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    out.push_back(s[i]);
    const bool word = std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '-';
    const bool next_word = i + 1 < s.size() && std::isalnum(static_cast<unsigned char>(s[i + 1]));
    if (word && next_word) continue;
    out += ws[std::uniform_int_distribution<int>(0, 6)(rng)];
  }
  return out;
}

}  // namespace

TEST(Parser, MainWitnessExpression) {
  const auto spec = parse_spec("DP(MM, SD(Cyc(7),Cyc(3),pow=2))");
  EXPECT_EQ(spec.kind, SpecKind::DP);
  const auto G = construct(spec);
  const auto W = construct(GroupSpec::w4200());
  EXPECT_EQ(G.order(), 4200u);
  EXPECT_EQ(gk_graph(G), gk_graph(W));
  EXPECT_EQ(G.classes().size(), W.classes().size());
  EXPECT_EQ(gk_graph(G), named_graph("main"));
}

TEST(Parser, Atoms) {
  EXPECT_EQ(parse_spec("Sym(9)"), GroupSpec::sym(9));
  EXPECT_EQ(parse_spec("  EA( 5 , 2 )\n"), GroupSpec::ea(5, 2));
  EXPECT_EQ(parse_spec("MM"), GroupSpec::mm());
  EXPECT_EQ(parse_spec("W4200"), GroupSpec::w4200());
}

TEST(Parser, Actions) {
  const auto mm = parse_spec("SD(EA(5,2), Quat(8), mats=[[[0,4],[1,0]], [[2,0],[0,3]]])");
  ASSERT_TRUE(mm.action);
  EXPECT_EQ(mm.action->kind, SdAction::Kind::Mats);
  EXPECT_EQ(construct(mm).order(), 200u);
  const auto neg = parse_spec("SD(Cyc(7),Cyc(2),pow=-1)");
  EXPECT_EQ(neg.action->power, -1);
  EXPECT_EQ(construct(neg).order(), 14u);
  const auto empty = parse_spec("SD(EA(2,1),Sym(1),mats=[])");
  EXPECT_TRUE(empty.action->matrices.empty());
}

TEST(Parser, SyntaxErrorPositions) {
  // End of input reports the column one past the last character.
  auto p = error_position("DP(MM", ErrorKind::SyntaxError);
  EXPECT_EQ(p.line, 1u);
  EXPECT_EQ(p.column, 6u);
  p = error_position("DP(MM,\n  Foo(3))", ErrorKind::SyntaxError);
  EXPECT_EQ(p.line, 2u);
  EXPECT_EQ(p.column, 3u);
  p = error_position("Cyc(x)", ErrorKind::SyntaxError);
  EXPECT_EQ(p.column, 5u);
  p = error_position("Cyc(3))", ErrorKind::SyntaxError);
  EXPECT_EQ(p.column, 7u);
  p = error_position("SD(Cyc(3),Cyc(2),rot=2)", ErrorKind::SyntaxError);
  EXPECT_EQ(p.column, 22u);
  error_position("", ErrorKind::SyntaxError);
  error_position("Cyc(99999999999999999999)", ErrorKind::SyntaxError);
}

TEST(Parser, SemanticErrorsCarrySpans) {
  auto p = error_position("SD(Sym(3),Cyc(2),pow=1)", ErrorKind::SemanticError);
  EXPECT_EQ(p.column, 4u);
  p = error_position("DP(Cyc(2),\nDih(5))", ErrorKind::SemanticError);
  EXPECT_EQ(p.line, 2u);
  EXPECT_EQ(p.column, 1u);
  error_position("Quat(12)", ErrorKind::SemanticError);
  error_position("EA(4,2)", ErrorKind::SemanticError);
  error_position("SD(EA(3,2),Cyc(2),mats=[[[1,0]]])", ErrorKind::SemanticError);
}

TEST(Parser, SpansCoverNodes) {
  const auto s = parse_spec("DP(Cyc(2), Sym(3))");
  EXPECT_EQ(s.span.begin.column, 1u);
  EXPECT_EQ(s.span.end.column, 19u);
  EXPECT_EQ(s.children[1].span.begin.column, 12u);
  EXPECT_EQ(s.children[1].span.end.column, 18u);
}

TEST(Parser, RoundTripOnRandomCorpus) {
  SpecGenerator gen(20240613);
  std::mt19937 ws_rng(7);
  for (int i = 0; i < 1000; ++i) {
    const GroupSpec s = gen.expr(3);
    const std::string text = to_string(s);
    const GroupSpec back = parse_spec(text);
    ASSERT_EQ(back, s) << text;
    ASSERT_EQ(to_string(back), text);
    ASSERT_EQ(parse_spec(scatter_whitespace(text, ws_rng)), s) << text;
  }
}
