#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cutgk/error.hpp"
#include "cutgk/group.hpp"

namespace cutgk {

enum class SpecKind { Cyc, Dih, Quat, Sym, Alt, EA, MM, W4200, DP, SD, Wr };

std::string_view spec_kind_name(SpecKind kind);

struct SourceSpan {
  SourcePos begin;
  SourcePos end;
};

/// How H acts on V in SD(V, H, action).
struct SdAction {
  enum class Kind { Pow, Mats };
  Kind kind = Kind::Pow;
  long long power = 1;
  /// One square matrix per generator of H, entries taken mod p.
  std::vector<std::vector<std::vector<long long>>> matrices;

  friend bool operator==(const SdAction&, const SdAction&) = default;
};

/// Expression tree naming a permutation group. Atoms carry their integer
/// parameters; Dih(m) takes the group order m.
struct GroupSpec {
  SpecKind kind = SpecKind::Cyc;
  std::vector<long long> params;
  std::vector<GroupSpec> children;
  std::optional<SdAction> action;
  /// Source location when parsed; ignored by ==.
  SourceSpan span{};

  friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
    return a.kind == b.kind && a.params == b.params && a.children == b.children &&
           a.action == b.action;
  }

  static GroupSpec atom(SpecKind kind, std::vector<long long> params = {});
  static GroupSpec cyc(long long n) { return atom(SpecKind::Cyc, {n}); }
  static GroupSpec dih(long long m) { return atom(SpecKind::Dih, {m}); }
  static GroupSpec quat(long long m) { return atom(SpecKind::Quat, {m}); }
  static GroupSpec sym(long long n) { return atom(SpecKind::Sym, {n}); }
  static GroupSpec alt(long long n) { return atom(SpecKind::Alt, {n}); }
  static GroupSpec ea(long long p, long long k) { return atom(SpecKind::EA, {p, k}); }
  static GroupSpec mm() { return atom(SpecKind::MM); }
  static GroupSpec w4200() { return atom(SpecKind::W4200); }
  static GroupSpec dp(GroupSpec a, GroupSpec b);
  static GroupSpec wr(GroupSpec a, GroupSpec b);
  static GroupSpec sd_pow(GroupSpec v, GroupSpec h, long long r);
  static GroupSpec sd_mats(GroupSpec v, GroupSpec h,
                           std::vector<std::vector<std::vector<long long>>> mats);
};

/// Canonical text form, without whitespace; parses back to an equal tree.
std::string to_string(const GroupSpec& spec);

/// Arity and parameter-range checks. Throws SemanticError positioned at the
/// offending node's span.
void validate(const GroupSpec& spec);

/// Builds the group. Throws SemanticError, InvalidAction (action not a
/// homomorphism) or BoundExceeded.
FiniteGroup construct(const GroupSpec& spec, std::size_t element_bound = kDefaultElementBound);

/// A wr B on deg(A)*deg(B) points, point b*deg(A)+a. A copy of A's generators
/// sits on the least block of each B-orbit; B permutes the blocks.
FiniteGroup wreath_product(const FiniteGroup& A, const FiniteGroup& B,
                           std::size_t element_bound = kDefaultElementBound);

/// Checks that generator images extend to a homomorphism by replaying the
/// Cayley graph: image(x) * image(s) must equal image(x s) for every element x
/// and generator s. Returns the image of every element, or throws
/// InvalidAction naming the first failing edge.
template <class Image, class Mul>
std::vector<Image> certify_hom(const FiniteGroup& G, const std::vector<Image>& gen_images,
                               const Image& identity, Mul mul) {
  if (gen_images.size() != G.generator_count()) {
    raise(ErrorKind::InvalidAction, "wrong number of generator images");
  }
  std::vector<Image> img(G.order(), identity);
  for (ElemId e = 1; e < G.order(); ++e) {
    img[e] = mul(img[G.word_parent(e)], gen_images[G.word_generator(e)]);
  }
  for (ElemId e = 0; e < G.order(); ++e) {
    for (std::size_t s = 0; s < gen_images.size(); ++s) {
      if (!(mul(img[e], gen_images[s]) == img[G.right_mul_generator(e, s)])) {
        raise(ErrorKind::InvalidAction, "generator images violate a relation at " +
                                            G.word_string(e) + "*g" + std::to_string(s));
      }
    }
  }
  return img;
}

}  // namespace cutgk
