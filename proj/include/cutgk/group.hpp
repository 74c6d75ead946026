#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cutgk/permutation.hpp"

namespace cutgk {

/// Index of an element inside its group's enumeration (0 is the identity).
using ElemId = std::uint32_t;

inline constexpr std::size_t kDefaultElementBound = 500000;

/// Conjugacy classes, ordered by their least element in enumeration order.
struct ClassPartition {
  std::vector<std::vector<ElemId>> classes;  // each sorted ascending
  std::vector<std::uint32_t> class_of;       // element -> class id

  std::size_t size() const noexcept { return classes.size(); }
  ElemId representative(std::size_t c) const { return classes[c].front(); }
};

namespace detail {
struct GroupData;
}

class Subgroup;

/// A fully enumerated permutation group.
///
/// Elements are listed breadth-first from the identity, trying generators in
/// the order given; every element records the BFS edge that reached it, which
/// gives one generator word per element (the word table). Copies share the
/// immutable enumeration and the lazily built caches.
class FiniteGroup {
 public:
  static constexpr ElemId kIdentity = 0;

  /// Closure of `gens` on `degree` points. Throws DegreeMismatch or
  /// ClosureExceedsBound. An empty generator list yields the trivial group.
  static FiniteGroup from_generators(std::vector<Permutation> gens, std::size_t degree,
                                     std::size_t element_bound = kDefaultElementBound);

  std::size_t degree() const noexcept;
  std::size_t order() const noexcept;
  std::size_t element_bound() const noexcept;

  const std::vector<Permutation>& generators() const noexcept;
  std::size_t generator_count() const noexcept;
  ElemId generator_id(std::size_t i) const;
  std::vector<ElemId> generator_ids() const;

  Permutation element(ElemId id) const;
  std::span<const Point> images(ElemId id) const;

  std::optional<ElemId> find(std::span<const Point> images) const;
  std::optional<ElemId> find(const Permutation& p) const;
  /// Throws NotAMember.
  ElemId index_of(const Permutation& p) const;
  bool contains(const Permutation& p) const { return find(p).has_value(); }

  ElemId mul(ElemId a, ElemId b) const;
  ElemId inv(ElemId a) const;
  ElemId pow(ElemId a, long long k) const;
  /// g^-1 x g
  ElemId conj(ElemId x, ElemId g) const;
  /// x^-1 y^-1 x y
  ElemId comm(ElemId x, ElemId y) const;
  bool commute(ElemId a, ElemId b) const;
  std::uint64_t element_order(ElemId a) const;

  ElemId right_mul_generator(ElemId a, std::size_t gen) const;

  // Word table.
  ElemId word_parent(ElemId a) const;
  std::size_t word_generator(ElemId a) const;
  std::vector<std::size_t> word(ElemId a) const;
  /// "g0*g1*g1", or "1" for the identity.
  std::string word_string(ElemId a) const;
  /// Parses words such as "g0*g1^-1*g2^3" (also "1" or "e"). Throws SyntaxError.
  ElemId evaluate_word(std::string_view word) const;

  const ClassPartition& classes() const;
  std::size_t class_of(ElemId a) const;

  Subgroup whole() const;
  Subgroup trivial() const;

  bool same_as(const FiniteGroup& other) const noexcept { return data_ == other.data_; }

 private:
  explicit FiniteGroup(std::shared_ptr<detail::GroupData> data) : data_(std::move(data)) {}
  std::shared_ptr<detail::GroupData> data_;
};

/// A subgroup stored as a subset of its parent's enumeration.
class Subgroup {
 public:
  /// Closure of `gens` inside `parent`.
  static Subgroup generated(const FiniteGroup& parent, std::span<const ElemId> gens);
  /// `elements` must form a subgroup (else NotASubgroup); a small generating
  /// set is picked greedily in enumeration order.
  static Subgroup from_elements(const FiniteGroup& parent, std::vector<ElemId> elements);

  const FiniteGroup& parent() const noexcept { return parent_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(ElemId a) const { return a < member_.size() && member_[a]; }
  const std::vector<ElemId>& elements() const noexcept { return elements_; }
  const std::vector<ElemId>& generators() const noexcept { return gens_; }
  std::vector<Permutation> generator_permutations() const;

  bool is_trivial() const noexcept { return elements_.size() == 1; }
  bool is_whole() const noexcept { return elements_.size() == parent_.order(); }
  bool is_subset_of(const Subgroup& other) const;

  /// Re-enumerates this subgroup as a group in its own right.
  FiniteGroup as_group(std::size_t element_bound = kDefaultElementBound) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.parent_.same_as(b.parent_) && a.elements_ == b.elements_;
  }

 private:
  Subgroup(FiniteGroup parent) : parent_(std::move(parent)) {}
  FiniteGroup parent_;
  std::vector<ElemId> elements_;  // ascending
  std::vector<bool> member_;
  std::vector<ElemId> gens_;

  friend class FiniteGroup;
};

}  // namespace cutgk
