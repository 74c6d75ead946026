#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cutgk/group.hpp"

namespace cutgk {

std::set<std::uint64_t> order_spectrum(const FiniteGroup& G);
std::set<std::uint64_t> order_spectrum(const Subgroup& H);

/// Prime graph: vertices are the primes dividing element orders, with an
/// edge p-q whenever some element order is divisible by pq.
struct GkGraph {
  std::set<std::uint64_t> vertices;
  std::set<std::pair<std::uint64_t, std::uint64_t>> edges;  // p < q

  static GkGraph from_spectrum(const std::set<std::uint64_t>& orders);
  /// Throws InvalidArgument unless endpoints are vertices and all vertices prime.
  static GkGraph from_edges(std::set<std::uint64_t> vertices,
                            const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges);

  bool has_edge(std::uint64_t p, std::uint64_t q) const;
  /// {"vertices":[...],"edges":[[p,q],...]} with sorted entries.
  nlohmann::json to_json() const;
  std::string to_dot(std::string_view name = "gk") const;

  friend bool operator==(const GkGraph&, const GkGraph&) = default;
};

GkGraph gk_graph(const FiniteGroup& G);
GkGraph gk_graph(const Subgroup& H);

/// Named graphs on {2,3,5,7}: "s", "t", "u", "v" and "main". Throws UnknownGraphId.
GkGraph named_graph(std::string_view id);
const std::vector<std::string>& named_graph_ids();

struct RationalityVerdict {
  bool is_real = false;
  bool is_rational = false;
  bool is_inverse_semi_rational = false;
  /// |N_G(<g>) : C_G(g)| and |Aut(<g>)|; the index is 0 when not computed.
  std::uint64_t normalizer_index = 0;
  std::uint64_t aut_order = 0;

  friend bool operator==(const RationalityVerdict&, const RationalityVerdict&) = default;
};

inline constexpr std::size_t kIndexCrossCheckBound = 20000;

/// Class-based verdict: g^k for k coprime to |g| is compared against the
/// classes of g and g^-1. For |G| <= 20000 the index-based verdict is also
/// computed and must agree (InvalidArgument otherwise).
RationalityVerdict element_rationality(const FiniteGroup& G, ElemId g);
/// Throws NotAMember.
RationalityVerdict element_rationality(const FiniteGroup& G, const Permutation& g);

/// Only the class-based predicates; normalizer_index stays 0.
RationalityVerdict element_rationality_by_classes(const FiniteGroup& G, ElemId g);
/// Predicates from [N_G(<g>) : C_G(g)] against |Aut(<g>)| and an explicit
/// search of N_G(<g>) for an element inverting g.
RationalityVerdict element_rationality_by_index(const FiniteGroup& G, ElemId g);

struct GroupRationality {
  bool is_rational_group = false;
  bool is_cut = false;
  /// Class representatives witnessing failure, if any.
  std::vector<ElemId> irrational_classes;
  std::vector<ElemId> non_cut_classes;
};

GroupRationality group_rationality(const FiniteGroup& G);

}  // namespace cutgk
