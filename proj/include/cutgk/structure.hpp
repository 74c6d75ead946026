#pragma once

// Subgroup machinery over enumerated groups: centralizers, normalizers,
// characteristic subgroups, series, Sylow/Hall search and Frobenius structure.
// Every operation takes the ambient group as a Subgroup so the same code
// serves G and its subgroups; FiniteGroup overloads use G.whole().

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "cutgk/group.hpp"
#include "cutgk/numtheory.hpp"

namespace cutgk {

inline constexpr std::size_t kDefaultHallBound = 5000;

// --- elements ---------------------------------------------------------------

/// Throws NotAMember when g is not in G.
std::uint64_t element_order(const FiniteGroup& G, const Permutation& g);

/// The pi-part of g: the power g^k with k = 1 mod |g|_pi and k = 0 mod |g|_pi'.
ElemId element_part(const FiniteGroup& G, ElemId g, const nt::PrimeSet& pi);
Permutation element_part(const FiniteGroup& G, const Permutation& g, const nt::PrimeSet& pi);

/// Primes dividing |H|.
std::vector<std::uint64_t> prime_divisors(const Subgroup& H);

// --- basic predicates -------------------------------------------------------

bool is_abelian(const Subgroup& H);
bool is_cyclic(const Subgroup& H);
bool is_normal(const Subgroup& N, const Subgroup& in);
std::uint64_t exponent(const Subgroup& H);
bool is_p_group(const Subgroup& H, std::uint64_t p);
bool is_elementary_abelian(const Subgroup& H);
/// Order 8, non-abelian, exactly one involution.
bool is_quaternion8(const Subgroup& H);

// --- subgroup constructions --------------------------------------------------

Subgroup join(const Subgroup& A, const Subgroup& B);
Subgroup intersection(const Subgroup& A, const Subgroup& B);
/// Smallest normal subgroup of `in` containing `gens`.
Subgroup normal_closure(const Subgroup& in, std::span<const ElemId> gens);
/// H^g = g^-1 H g.
Subgroup conjugate(const Subgroup& H, ElemId g);

/// Elements of `in` commuting with every element of A. Throws NotAMember.
Subgroup centralizer(const Subgroup& in, std::span<const ElemId> A);
Subgroup centralizer(const FiniteGroup& G, std::span<const Permutation> A);
/// Throws NotASubgroup when H is not contained in `in`.
Subgroup normalizer(const Subgroup& in, const Subgroup& H);
Subgroup normalizer(const FiniteGroup& G, const Subgroup& H);

Subgroup center(const Subgroup& H);
Subgroup derived_subgroup(const Subgroup& H);
/// [A, B] for A, B normal in `in`.
Subgroup commutator_subgroup(const Subgroup& in, const Subgroup& A, const Subgroup& B);
Subgroup p_core(const Subgroup& H, std::uint64_t p);
Subgroup fitting_subgroup(const Subgroup& H);
/// Omega_1 for a p-group or an abelian group. Throws KindPreconditionViolated.
Subgroup omega(const Subgroup& H, std::uint64_t p);
/// P' P^p for a p-group. Throws KindPreconditionViolated.
Subgroup frattini_p(const Subgroup& H, std::uint64_t p);
/// Elements of square-free order of an abelian group. Throws KindPreconditionViolated.
Subgroup socle_abelian(const Subgroup& H);
/// Largest normal subgroup of `in` contained in H.
Subgroup core(const Subgroup& in, const Subgroup& H);

enum class CharKind { center, derived, fitting, p_core, omega_p, frattini_p, socle_abelian };

struct CharacteristicSpec {
  CharKind kind;
  std::uint64_t p = 0;
};

Subgroup characteristic_subgroup(const Subgroup& H, CharacteristicSpec spec);
Subgroup characteristic_subgroup(const FiniteGroup& G, CharacteristicSpec spec);

// --- Sylow / Hall -----------------------------------------------------------

/// Grows a p-subgroup from a p-element of maximal order through normalizers.
/// Returns the trivial subgroup when p does not divide |H|.
Subgroup sylow(const Subgroup& H, std::uint64_t p);
Subgroup sylow(const FiniteGroup& G, std::uint64_t p);

/// Hall pi-subgroup by seeded then exhaustive search over Sylow conjugates.
/// Returns nullopt (NotFound) when the search space is exhausted; throws
/// BoundExceeded when |H| > hall_bound and the seed fails.
std::optional<Subgroup> hall(const Subgroup& H, const nt::PrimeSet& pi,
                             std::size_t hall_bound = kDefaultHallBound);
std::optional<Subgroup> hall(const FiniteGroup& G, const nt::PrimeSet& pi,
                             std::size_t hall_bound = kDefaultHallBound);

// --- series -------------------------------------------------------------------

enum class SeriesKind { derived, lower_central, upper_central, fitting };

struct SeriesResult {
  std::vector<Subgroup> terms;
  /// Only for the Fitting series, and only when it reaches the whole group.
  std::optional<std::size_t> fitting_length;
};

SeriesResult series(const Subgroup& H, SeriesKind kind);
SeriesResult series(const FiniteGroup& G, SeriesKind kind);

struct SolvabilityClass {
  bool is_nilpotent = false;
  bool is_solvable = false;
  std::optional<std::size_t> fitting_length;
};

SolvabilityClass solvability_class(const Subgroup& H);
SolvabilityClass solvability_class(const FiniteGroup& G);

// --- Frobenius --------------------------------------------------------------

struct FrobeniusDecomposition {
  Subgroup kernel;
  Subgroup complement;
};

std::optional<FrobeniusDecomposition> frobenius_decomposition(const Subgroup& H);
std::optional<FrobeniusDecomposition> frobenius_decomposition(const FiniteGroup& G);

// --- quotients and normal subgroups ------------------------------------------

/// Order of gN in H/N.
std::uint64_t quotient_element_order(const FiniteGroup& G, ElemId g, const Subgroup& N);

/// The set of element orders of H/N (N normal in H).
std::set<std::uint64_t> quotient_order_spectrum(const Subgroup& H, const Subgroup& N);

/// H/N as a permutation group on the right cosets of N. Throws BoundExceeded
/// when [H:N]^2 exceeds `entry_bound`.
FiniteGroup quotient_group(const Subgroup& H, const Subgroup& N,
                           std::size_t entry_bound = 25'000'000);

/// Minimal normal subgroups: minimal members among normal closures of
/// prime-order elements.
std::vector<Subgroup> minimal_normal_subgroups(const Subgroup& H);

/// Normal subgroups generated by unions of at most `max_classes` conjugacy
/// classes of H whose elements satisfy `keep`. Deduplicated, ascending order.
template <typename Pred>
std::vector<Subgroup> class_generated_normal_subgroups(const Subgroup& H,
                                                       std::size_t max_classes, Pred keep);

/// Every normal subgroup of H: joins of normal closures of single classes.
/// Ascending by order. Throws BoundExceeded past `max_subgroups`.
std::vector<Subgroup> normal_subgroups(const Subgroup& H, std::size_t max_subgroups = 2000);

/// All subgroups of H, built from cyclic subgroups by repeated joins.
/// Throws BoundExceeded when more than `max_subgroups` are found.
std::vector<Subgroup> all_subgroups(const Subgroup& H, std::size_t max_subgroups = 4000);

/// Conjugacy classes of H (computed on H itself, ids are parent ids).
std::vector<std::vector<ElemId>> classes_within(const Subgroup& H);

}  // namespace cutgk

#include "cutgk/detail/structure_impl.hpp"
