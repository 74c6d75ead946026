#include "cutgk/arith.hpp"

#include <map>
#include <numeric>
#include <sstream>

#include "cutgk/error.hpp"
#include "cutgk/numtheory.hpp"
#include "cutgk/structure.hpp"

namespace cutgk {

std::set<std::uint64_t> order_spectrum(const FiniteGroup& G) {
  std::set<std::uint64_t> out;
  const auto& P = G.classes();
  for (std::size_t c = 0; c < P.size(); ++c) out.insert(G.element_order(P.representative(c)));
  return out;
}

std::set<std::uint64_t> order_spectrum(const Subgroup& H) {
  std::set<std::uint64_t> out;
  for (ElemId g : H.elements()) out.insert(H.parent().element_order(g));
  return out;
}

GkGraph GkGraph::from_spectrum(const std::set<std::uint64_t>& orders) {
  GkGraph g;
  for (auto n : orders) {
    const auto ps = nt::prime_divisors(n);
    for (std::size_t i = 0; i < ps.size(); ++i) {
      g.vertices.insert(ps[i]);
      for (std::size_t j = i + 1; j < ps.size(); ++j) g.edges.emplace(ps[i], ps[j]);
    }
  }
  return g;
}

GkGraph GkGraph::from_edges(std::set<std::uint64_t> vertices,
                            const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges) {
  GkGraph g;
  for (auto v : vertices)
    if (!nt::is_prime(v)) raise(ErrorKind::InvalidArgument, "vertex " + std::to_string(v) + " is not prime");
  g.vertices = std::move(vertices);
  for (auto [p, q] : edges) {
    if (p == q || !g.vertices.count(p) || !g.vertices.count(q)) {
      raise(ErrorKind::InvalidArgument, "bad edge " + std::to_string(p) + "-" + std::to_string(q));
    }
    g.edges.emplace(std::min(p, q), std::max(p, q));
  }
  return g;
}

bool GkGraph::has_edge(std::uint64_t p, std::uint64_t q) const {
  return edges.count({std::min(p, q), std::max(p, q)}) > 0;
}

nlohmann::json GkGraph::to_json() const {
  nlohmann::json e = nlohmann::json::array();
  for (auto [p, q] : edges) e.push_back({p, q});
  return {{"vertices", vertices}, {"edges", e}};
}

std::string GkGraph::to_dot(std::string_view name) const {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (auto v : vertices) out << "  " << v << ";\n";
  for (auto [p, q] : edges) out << "  " << p << " -- " << q << ";\n";
  out << "}\n";
  return out.str();
}

GkGraph gk_graph(const FiniteGroup& G) { return GkGraph::from_spectrum(order_spectrum(G)); }
GkGraph gk_graph(const Subgroup& H) { return GkGraph::from_spectrum(order_spectrum(H)); }

namespace {

const std::map<std::string, std::vector<std::pair<std::uint64_t, std::uint64_t>>, std::less<>>& graph_table() {
  static const std::map<std::string, std::vector<std::pair<std::uint64_t, std::uint64_t>>, std::less<>> table{
      {"s", {{2, 3}, {2, 7}, {3, 5}, {3, 7}}},
      {"t", {{2, 3}, {2, 5}, {2, 7}, {3, 5}}},
      {"u", {{2, 3}, {2, 7}, {3, 5}, {3, 7}, {5, 7}}},
      {"v", {{2, 3}, {2, 5}, {2, 7}, {3, 5}, {3, 7}}},
      {"main", {{2, 3}, {2, 7}, {3, 5}, {5, 7}}},
  };
  return table;
}

}  // namespace

GkGraph named_graph(std::string_view id) {
  const auto& t = graph_table();
  auto it = t.find(id);
  if (it == t.end()) raise(ErrorKind::UnknownGraphId, "unknown graph id '" + std::string(id) + "'");
  return GkGraph::from_edges({2, 3, 5, 7}, it->second);
}

const std::vector<std::string>& named_graph_ids() {
  static const std::vector<std::string> ids{"s", "t", "u", "v", "main"};
  return ids;
}

RationalityVerdict element_rationality_by_classes(const FiniteGroup& G, ElemId g) {
  const std::uint64_t n = G.element_order(g);
  const auto c = G.class_of(g);
  const auto ci = G.class_of(G.inv(g));
  RationalityVerdict v;
  v.aut_order = nt::euler_phi(n);
  v.is_real = c == ci;
  v.is_rational = true;
  v.is_inverse_semi_rational = true;
  ElemId x = g;
  for (std::uint64_t k = 2; k < n; ++k) {
    x = G.mul(x, g);
    if (std::gcd(k, n) != 1) continue;
    const auto ck = G.class_of(x);
    if (ck != c) v.is_rational = false;
    if (ck != c && ck != ci) {
      v.is_inverse_semi_rational = false;
      break;
    }
  }
  return v;
}

RationalityVerdict element_rationality_by_index(const FiniteGroup& G, ElemId g) {
  const std::uint64_t n = G.element_order(g);
  const std::vector<ElemId> one{g};
  const auto C = centralizer(G.whole(), one);
  const auto N = normalizer(G.whole(), Subgroup::generated(G, one));
  RationalityVerdict v;
  v.aut_order = nt::euler_phi(n);
  v.normalizer_index = N.order() / C.order();
  const ElemId gi = G.inv(g);
  v.is_real = gi == g;
  for (std::size_t i = 0; i < N.elements().size() && !v.is_real; ++i) v.is_real = G.conj(g, N.elements()[i]) == gi;
  v.is_rational = v.normalizer_index == v.aut_order;
  v.is_inverse_semi_rational = v.is_rational || (!v.is_real && 2 * v.normalizer_index == v.aut_order);
  return v;
}

RationalityVerdict element_rationality(const FiniteGroup& G, ElemId g) {
  auto v = element_rationality_by_classes(G, g);
  if (G.order() <= kIndexCrossCheckBound) {
    const auto w = element_rationality_by_index(G, g);
    if (w.is_real != v.is_real || w.is_rational != v.is_rational ||
        w.is_inverse_semi_rational != v.is_inverse_semi_rational) {
      raise(ErrorKind::InvalidArgument, "class-based and index-based rationality disagree at " + G.word_string(g));
    }
    v.normalizer_index = w.normalizer_index;
  }
  return v;
}

RationalityVerdict element_rationality(const FiniteGroup& G, const Permutation& g) {
  return element_rationality(G, G.index_of(g));
}

GroupRationality group_rationality(const FiniteGroup& G) {
  GroupRationality r;
  const auto& P = G.classes();
  for (std::size_t c = 0; c < P.size(); ++c) {
    const ElemId g = P.representative(c);
    const auto v = element_rationality_by_classes(G, g);
    if (!v.is_rational) r.irrational_classes.push_back(g);
    if (!v.is_inverse_semi_rational) r.non_cut_classes.push_back(g);
  }
  r.is_rational_group = r.irrational_classes.empty();
  r.is_cut = r.non_cut_classes.empty();
  return r;
}

}  // namespace cutgk
