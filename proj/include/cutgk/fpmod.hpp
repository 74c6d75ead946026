#pragma once

// Matrix actions of enumerated groups over prime fields. Vectors are rows and
// groups act on the right: v * (gh) = (v * g) * h.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cutgk/group.hpp"

namespace cutgk {

using Residue = std::uint16_t;
using FpVector = std::vector<Residue>;

inline constexpr std::size_t kDefaultVectorScanBound = 1'000'000;
inline constexpr std::size_t kDefaultLinearSolveBound = 4096;
inline constexpr std::size_t kDefaultModuleEntryBound = 50'000'000;
inline constexpr std::size_t kDefaultIsoTrialBudget = 2000;
inline constexpr std::uint64_t kDefaultIsoSeed = 20240613;

class FpMatrix {
 public:
  FpMatrix() = default;
  /// Zero matrix. Throws InvalidArgument unless p is a prime below 2^15.
  FpMatrix(unsigned p, std::size_t d);
  static FpMatrix identity(unsigned p, std::size_t d);
  static FpMatrix scalar(unsigned p, std::size_t d, long long alpha);
  /// Entries are reduced mod p (negative values allowed).
  static FpMatrix from_rows(unsigned p, const std::vector<std::vector<long long>>& rows);

  unsigned p() const noexcept { return p_; }
  std::size_t dim() const noexcept { return d_; }
  Residue operator()(std::size_t i, std::size_t j) const { return a_[i * d_ + j]; }
  void set(std::size_t i, std::size_t j, long long value);
  std::span<const Residue> data() const noexcept { return a_; }
  std::vector<std::vector<long long>> rows() const;

  FpMatrix operator*(const FpMatrix& other) const;
  FpMatrix operator+(const FpMatrix& other) const;
  FpMatrix operator-(const FpMatrix& other) const;
  FpMatrix scaled(long long alpha) const;
  FpMatrix transpose() const;
  /// Throws SingularMatrix.
  FpMatrix inverse() const;
  std::size_t rank() const;
  bool is_invertible() const { return rank() == d_; }
  bool is_identity() const;
  std::string to_string() const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  unsigned p_ = 2;
  std::size_t d_ = 0;
  std::vector<Residue> a_;
};

struct FpMatrixHash {
  std::size_t operator()(const FpMatrix& m) const noexcept;
};

FpVector vec_mul(std::span<const Residue> v, const FpMatrix& m);

/// A subspace held by its reduced row echelon basis (canonical per subspace).
class Subspace {
 public:
  Subspace(unsigned p, std::size_t ambient_dim) : p_(p), n_(ambient_dim) {}
  static Subspace span_of(unsigned p, std::size_t ambient_dim, const std::vector<FpVector>& vs);
  static Subspace full(unsigned p, std::size_t ambient_dim);

  unsigned p() const noexcept { return p_; }
  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  const std::vector<FpVector>& basis() const noexcept { return basis_; }
  bool contains(std::span<const Residue> v) const;
  /// Adds v; returns false when v was already in the span.
  bool insert(std::span<const Residue> v);
  /// Coordinates of v in the echelon basis; v must lie in the subspace.
  std::vector<Residue> coordinates(std::span<const Residue> v) const;
  bool is_subspace_of(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.basis_ == b.basis_;
  }

 private:
  void reduce(FpVector& v) const;
  unsigned p_;
  std::size_t n_;
  std::vector<FpVector> basis_;
  std::vector<std::size_t> pivots_;
};

/// Basis of {x : x M = 0} (row vectors).
std::vector<FpVector> left_kernel(const FpMatrix& m);
/// Basis of {x : C x = 0} for a rows x ncols system.
std::vector<FpVector> right_kernel(const std::vector<FpVector>& rows, std::size_t ncols, unsigned p);

// --- module actions -----------------------------------------------------------

/// A certified homomorphism from an enumerated group into GL(d, p).
class ModuleAction {
 public:
  /// Replays the closure: every element gets the matrix product along its
  /// word, and every Cayley-graph edge x -> x*s must satisfy
  /// M(x) M(s) = M(xs). Throws NotAHomomorphism, SingularMatrix,
  /// InvalidArgument (arity/dimension) or BoundExceeded (|G| d^2 > entry_bound).
  static ModuleAction certify(FiniteGroup group, unsigned p, std::vector<FpMatrix> gen_matrices,
                              std::size_t entry_bound = kDefaultModuleEntryBound);
  /// Same, with the dimension given explicitly (needed when there are no generators).
  static ModuleAction certify(FiniteGroup group, unsigned p, std::size_t dim,
                              std::vector<FpMatrix> gen_matrices,
                              std::size_t entry_bound = kDefaultModuleEntryBound);

  const FiniteGroup& group() const noexcept { return group_; }
  unsigned p() const noexcept { return p_; }
  std::size_t dim() const noexcept { return d_; }
  bool certified() const noexcept { return true; }
  const std::vector<FpMatrix>& generator_matrices() const noexcept { return gens_; }
  const FpMatrix& matrix(ElemId g) const;
  /// Throws NotAMember.
  const FpMatrix& matrix(const Permutation& g) const;

  Subgroup kernel() const;
  bool is_faithful() const { return kernel().is_trivial(); }

 private:
  ModuleAction() = default;
  FiniteGroup group_ = FiniteGroup::from_generators({}, 1);
  unsigned p_ = 2;
  std::size_t d_ = 0;
  std::vector<FpMatrix> gens_;
  std::vector<FpMatrix> all_;
};

/// V_g(alpha) = {v : v g = alpha v}.
Subspace eigenspace(const ModuleAction& M, ElemId g, long long alpha);

struct EigenvectorPropertyResult {
  bool holds = false;
  std::optional<FpVector> witness_vector;
  std::optional<Residue> witness_alpha;
};

/// For every nonzero v and alpha in [1, p) looks for g with v g = alpha v.
/// Throws BoundExceeded when p^d > vector_scan_bound.
EigenvectorPropertyResult has_eigenvector_property(
    const ModuleAction& M, std::size_t vector_scan_bound = kDefaultVectorScanBound);

/// Smallest submodule containing v.
Subspace spin(const ModuleAction& M, std::span<const Residue> v);
/// Minimal nonzero submodules, found by spinning every line. Canonical order.
std::vector<Subspace> minimal_submodules(const ModuleAction& M,
                                         std::size_t vector_scan_bound = kDefaultVectorScanBound);
bool is_irreducible(const ModuleAction& M,
                    std::size_t vector_scan_bound = kDefaultVectorScanBound);
/// The action on an invariant subspace, in its echelon basis.
ModuleAction submodule_action(const ModuleAction& M, const Subspace& S);

struct SubmoduleAnalysis {
  bool is_irreducible = false;
  std::vector<Subspace> minimal_submodules;
  bool is_homogeneous = false;
};

/// Throws CharacteristicDividesOrder when p divides |G| and BoundExceeded
/// past the vector scan bound.
SubmoduleAnalysis submodule_analysis(const ModuleAction& M,
                                     std::size_t vector_scan_bound = kDefaultVectorScanBound);

/// Intertwiners X (d1 x d2, row-major) with M1(g) X = X M2(g) for every generator g.
struct HomSpace {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<FpVector> basis;

  std::size_t dim() const noexcept { return basis.size(); }
};

HomSpace hom_space(const ModuleAction& M1, const ModuleAction& M2,
                                std::size_t linear_solve_bound = kDefaultLinearSolveBound);

struct IsomorphismResult {
  bool isomorphic = false;
  /// "dimension", "zero_hom", "exhaustive", "random" or "random_budget".
  std::string method;
  std::uint64_t seed = 0;
  std::optional<FpMatrix> witness;
};

IsomorphismResult are_isomorphic(const ModuleAction& M1, const ModuleAction& M2,
                                 std::uint64_t seed = kDefaultIsoSeed,
                                 std::size_t trial_budget = kDefaultIsoTrialBudget,
                                 std::size_t linear_solve_bound = kDefaultLinearSolveBound);

/// Right transversal of H in G: least coset representatives in enumeration order.
std::vector<ElemId> right_transversal(const Subgroup& H);

/// Induces W (a module for H.as_group()) up to H.parent(). Throws NotASubgroup
/// when W's group is not H, BoundExceeded past `dim_bound`.
ModuleAction induce(const ModuleAction& W, const Subgroup& H, std::size_t dim_bound = 1024);

/// Restriction to H <= M.group(); the result acts through H.as_group().
ModuleAction restrict(const ModuleAction& M, const Subgroup& H);

struct SemidirectResult {
  FiniteGroup group;
  /// True when the action is not faithful and the group's own points were
  /// added to keep the permutation representation faithful.
  bool fallback_used = false;
};

/// V x| G on the p^d vectors via v -> v M(g) + w. Throws BoundExceeded.
SemidirectResult semidirect_perm_group(const ModuleAction& M,
                                       std::size_t element_bound = kDefaultElementBound);

/// Order of the matrix group generated by `mats`. Throws SingularMatrix or
/// BoundExceeded.
std::uint64_t matrix_group_order(const std::vector<FpMatrix>& mats,
                                 std::size_t element_bound = kDefaultElementBound);

// --- module builders ------------------------------------------------------------

/// Permutation module on the group's points.
ModuleAction permutation_module(const FiniteGroup& G, unsigned p);
ModuleAction direct_sum(const ModuleAction& A, const ModuleAction& B);

/// An elementary abelian normal p-subgroup V viewed as a module for S (which
/// must normalize V) acting by conjugation.
struct ConjugationModule {
  ModuleAction action;
  std::vector<ElemId> basis;  // elements of V in the parent group
};

ConjugationModule conjugation_module(const Subgroup& V, const Subgroup& S);

/// Encodes/decodes vectors of F_p^d as integers, last coordinate least significant.
std::uint64_t vector_index(std::span<const Residue> v, unsigned p);
FpVector vector_from_index(std::uint64_t index, unsigned p, std::size_t d);

}  // namespace cutgk
