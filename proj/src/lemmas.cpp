// Hypothesis and conclusion predicates for the lemma registry.

#include <algorithm>
#include <cmath>

#include "cutgk/fpmod.hpp"
#include "cutgk/lemma_lab.hpp"

namespace cutgk {

namespace {

using json = nlohmann::json;
using Outcome = LemmaOutcome;

std::string outside(const std::string& what) { return "outside search bounds: " + what; }

json words(const FiniteGroup& G, const std::vector<ElemId>& es) {
  json out = json::array();
  for (ElemId e : es) out.push_back(G.word_string(e));
  return out;
}

json subgroup_words(const Subgroup& S) { return words(S.parent(), S.generators()); }

/// Generator words in G of a subgroup living in a re-enumerated group Hg.
json lifted_words(const FiniteGroup& G, const FiniteGroup& Hg, const std::vector<ElemId>& es) {
  json out = json::array();
  for (ElemId e : es) out.push_back(G.word_string(G.index_of(Hg.element(e))));
  return out;
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) {
    if (r > (std::uint64_t{1} << 40)) return r;  // large enough to fail any bound
    r *= b;
  }
  return r;
}

unsigned smallest_coprime_prime(std::uint64_t n) {
  for (unsigned p = 2;; ++p)
    if (nt::is_prime(p) && n % p != 0) return p;
}

unsigned chosen_prime(const LemmaContext& c) {
  if (c.params().contains("p")) return c.params()["p"].get<unsigned>();
  return smallest_coprime_prime(c.group().order());
}

bool gk_within(const GkGraph& g, std::set<std::uint64_t> vertices,
               std::set<std::pair<std::uint64_t, std::uint64_t>> edges) {
  for (auto v : g.vertices)
    if (!vertices.count(v)) return false;
  for (const auto& e : g.edges)
    if (!edges.count(e)) return false;
  return true;
}

/// Vectors of F_p^d with first nonzero coordinate 1, in index order.
template <class Visit>
void for_each_line(unsigned p, std::size_t d, Visit visit) {
  const std::uint64_t total = ipow(p, d);
  for (std::uint64_t i = 1; i < total; ++i) {
    FpVector v = vector_from_index(i, p, d);
    auto lead = std::find_if(v.begin(), v.end(), [](Residue r) { return r != 0; });
    if (*lead != 1) continue;
    if (!visit(v)) return;
  }
}

// --- L-2.1 -----------------------------------------------------------------------

bool sylows_cyclic_or_extraspecial(const Subgroup& E) {
  for (auto q : prime_divisors(E)) {
    Subgroup P = sylow(E, q);
    if (is_cyclic(P) && P.order() == q) continue;
    Subgroup Z = center(P);
    if (Z.order() != q || !(derived_subgroup(P) == Z) || !(frattini_p(P, q) == Z)) return false;
    const auto e = exponent(P);
    if (e != q && e != 4) return false;
  }
  return true;
}

bool has_cyclic_u(const FiniteGroup& G, const Subgroup& D) {
  if (is_cyclic(D)) return true;
  if (D.order() % 2 != 0) return false;
  for (ElemId g : D.elements()) {
    if (G.element_order(g) * 2 != D.order()) continue;
    Subgroup U = Subgroup::generated(G, std::span<const ElemId>(&g, 1));
    if (is_normal(U, G.whole()) && centralizer(D, std::span<const ElemId>(&g, 1)) == U) return true;
  }
  return false;
}

Outcome check_fed(LemmaContext& c) {
  const auto& G = c.group();
  if (!c.is_solvable()) return Outcome::not_met("G is not solvable");
  if (G.order() > c.bounds().fed_order_bound) return Outcome::not_met(outside("|G| above the normal abelian scan bound"));
  // A non-cyclic normal abelian subgroup contains some C_p x C_p = <x, y>,
  // and the normal closure of {x, y} stays inside it.
  for (const auto& cls : G.classes().classes) {
    const ElemId x = cls.front();
    const auto ox = G.element_order(x);
    if (!nt::is_prime(ox)) continue;
    const Subgroup X = Subgroup::generated(G, std::span<const ElemId>(&x, 1));
    for (ElemId y = 1; y < G.order(); ++y) {
      if (G.element_order(y) != ox || X.contains(y) || !G.commute(x, y)) continue;
      const ElemId pair[2] = {x, y};
      if (is_abelian(normal_closure(G.whole(), pair))) {
        return Outcome::not_met("non-cyclic normal abelian subgroup generated by the classes of " +
                                G.word_string(x) + " and " + G.word_string(y));
      }
    }
  }
  const Subgroup& F = c.fitting();
  const Subgroup Z = socle_abelian(center(F));
  const Subgroup A = centralizer(G.whole(), Z.generators());
  for (const auto& E : c.normal_subgroups()) {
    if (!Z.is_subset_of(E) || !E.is_subset_of(F)) continue;
    const Subgroup D = centralizer(G.whole(), E.generators());
    if (!D.is_subset_of(F) || !(intersection(E, D) == Z) || !(join(E, D) == F)) continue;
    if (!F.is_subset_of(A)) continue;
    bool centralizes_exactly_f = true;
    for (ElemId a : A.elements()) {
      bool cen = true;
      for (ElemId e : E.generators()) cen = cen && Z.contains(G.comm(e, a));
      if (cen != F.contains(a)) {
        centralizes_exactly_f = false;
        break;
      }
    }
    if (!centralizes_exactly_f || !sylows_cyclic_or_extraspecial(E) || !has_cyclic_u(G, D)) continue;
    return Outcome::pass("E of order " + std::to_string(E.order()) + ", D of order " + std::to_string(D.order()));
  }
  return Outcome::fail("no normal E, D satisfy the decomposition",
                       {{"predicate", "no_decomposition"},
                        {"subgroups", {{"F", subgroup_words(F)}, {"Z", subgroup_words(Z)}}}});
}

// --- L-2.2 -----------------------------------------------------------------------

Outcome check_frobenius_faithful(LemmaContext& c) {
  const auto& G = c.group();
  const auto fd = frobenius_decomposition(G);
  if (!fd) return Outcome::not_met("not a Frobenius group");
  const unsigned p = chosen_prime(c);
  if (!nt::is_prime(p) || G.order() % p == 0) return Outcome::not_met("characteristic divides |G|");
  if (G.degree() > c.bounds().module_degree_bound) return Outcome::not_met(outside("permutation module degree"));

  std::vector<std::pair<std::string, ModuleAction>> modules;
  const auto PM = permutation_module(G, p);
  modules.emplace_back("permutation", PM);
  const std::size_t n = G.degree();
  if (n >= 3 && n % p != 0) {
    std::vector<FpVector> basis;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      FpVector v(n, 0);
      v[i] = 1;
      v[n - 1] = static_cast<Residue>(p - 1);
      basis.push_back(v);
    }
    auto aug = submodule_action(PM, Subspace::span_of(p, n, basis));
    if (aug.is_faithful()) modules.emplace_back("augmentation", std::move(aug));
  }
  std::size_t checked = 0;
  for (const auto& [name, M] : modules) {
    std::set<std::size_t> seen;
    for (ElemId x : fd->complement.elements()) {
      if (x == FiniteGroup::kIdentity || !seen.insert(G.class_of(x)).second) continue;
      ++checked;
      if (eigenspace(M, x, 1).dim() == 0) {
        return Outcome::fail("complement element acts fixed-point-freely",
                             {{"predicate", "fixed_point_free"},
                              {"module", name},
                              {"p", p},
                              {"elements", {{"x", G.word_string(x)}}}});
      }
    }
  }
  return Outcome::pass(std::to_string(checked) + " complement classes over F_" + std::to_string(p) + " in " +
                       std::to_string(modules.size()) + " faithful modules");
}

// --- L-2.3 -----------------------------------------------------------------------

Outcome check_fab_sylow(LemmaContext& c) {
  const auto& G = c.group();
  const auto& primes = c.primes();
  if (primes.size() != 2 || primes[0] != 2) return Outcome::not_met("pi(G) is not {2, p}");
  const std::uint64_t p = primes[1];
  if (!is_quaternion8(c.sylow(2))) return Outcome::not_met("Sylow 2-subgroup is not Q8");
  if (c.has_order_multiple(4 * p)) return Outcome::not_met("elements of order 4p exist");
  for (ElemId x : c.p_element_reps(p))
    if (!element_rationality_by_classes(G, x).is_real) return Outcome::not_met("a p-element is not real");

  const Subgroup& F = c.fitting();
  if (F.order() != nt::p_part(G.order(), p) || !is_p_group(F, p) || !is_abelian(F)) {
    return Outcome::fail("F(G) is not an abelian Sylow p-subgroup",
                         {{"predicate", "fitting_not_abelian_sylow"}, {"subgroups", {{"F", subgroup_words(F)}}}});
  }
  for (ElemId x = 1; x < G.order(); ++x) {
    if (G.element_order(x) != 2) continue;
    for (ElemId a : F.generators()) {
      if (G.conj(a, x) != G.inv(a)) {
        return Outcome::fail("an involution does not invert F(G)",
                             {{"predicate", "involution_not_inverting"},
                              {"elements", {{"x", G.word_string(x)}, {"a", G.word_string(a)}}}});
      }
    }
  }
  return Outcome::pass("F(G) abelian Sylow " + std::to_string(p) + "-subgroup inverted by involutions");
}

// --- L-2.4 -----------------------------------------------------------------------

Outcome check_h_abel_cic(LemmaContext& c) {
  const auto& G = c.group();
  const auto& b = c.bounds();
  if (G.order() > b.module_search_order_bound) return Outcome::not_met(outside("|G| above the module search bound"));
  const unsigned p = chosen_prime(c);
  if (!nt::is_prime(p) || G.order() % p == 0) return Outcome::not_met("characteristic divides |G|");
  if (ipow(p, G.degree()) > b.vector_scan_bound) return Outcome::not_met(outside("permutation module too large to split"));

  const auto PM = permutation_module(G, p);
  const auto mins = minimal_submodules(PM, b.vector_scan_bound);
  const auto subs = all_subgroups(G.whole());
  std::size_t instances = 0, normals_checked = 0;
  for (std::size_t vi = 0; vi < mins.size(); ++vi) {
    const auto V = submodule_action(PM, mins[vi]);
    const std::size_t d = V.dim();
    std::vector<Subgroup> found;
    for (const auto& H : subs) {
      const std::size_t idx = G.order() / H.order();
      if (d % idx != 0) continue;
      if (std::any_of(found.begin(), found.end(), [&](const Subgroup& f) { return f.is_subset_of(H); })) continue;
      const auto R = restrict(V, H);
      std::vector<Subspace> tried;
      std::optional<ModuleAction> W;
      for_each_line(p, d, [&](const FpVector& v) {
        Subspace S = spin(R, v);
        if (S.dim() != d / idx || std::find(tried.begin(), tried.end(), S) != tried.end()) return true;
        tried.push_back(S);
        auto WM = submodule_action(R, S);
        if (are_isomorphic(induce(WM, H), V, c.seed()).isomorphic) {
          W = std::move(WM);
          return false;
        }
        return true;
      });
      if (!W) continue;
      found.push_back(H);
      ++instances;
      const FiniteGroup& Hg = W->group();
      const Subgroup K = W->kernel();
      for (const auto& N : normal_subgroups(Hg.whole())) {
        if (!K.is_subset_of(N)) continue;
        ++normals_checked;
        json witness = {{"p", p},
                        {"module", vi},
                        {"subgroups", {{"H", subgroup_words(H)}, {"N", lifted_words(G, Hg, N.generators())}}}};
        if (!submodule_analysis(restrict(*W, N), b.vector_scan_bound).is_homogeneous) {
          witness["predicate"] = "not_homogeneous";
          return Outcome::fail("W restricted to N is not homogeneous", witness);
        }
        bool abelian_mod_k = true;
        for (ElemId x : N.generators())
          for (ElemId y : N.generators()) abelian_mod_k = abelian_mod_k && K.contains(Hg.comm(x, y));
        if (!abelian_mod_k) continue;
        const std::size_t target = N.order() / K.order();
        const bool cyclic = std::any_of(N.elements().begin(), N.elements().end(), [&](ElemId x) {
          return quotient_element_order(Hg, x, K) == target;
        });
        if (!cyclic) {
          witness["predicate"] = "abelian_not_cyclic";
          return Outcome::fail("abelian N/C_H(W) is not cyclic", witness);
        }
      }
    }
  }
  if (instances == 0) return Outcome::not_met("no irreducible module induced from a minimal subgroup found");
  return Outcome::pass(std::to_string(instances) + " (V, H, W) instances, " + std::to_string(normals_checked) +
                       " normal subgroups over F_" + std::to_string(p));
}

// --- L-2.5 -----------------------------------------------------------------------

Outcome check_g_sylow_p(LemmaContext& c) {
  const auto& G = c.group();
  const Subgroup D = derived_subgroup(G.whole());
  if (D.is_whole()) return Outcome::not_met("G is perfect");
  std::size_t met = 0;
  for (auto p : c.primes()) {
    if (!c.prime_selected(p) || nt::p_part(G.order(), p) != p) continue;
    std::vector<ElemId> reps;
    for (const auto& cls : G.classes().classes)
      if (G.element_order(cls.front()) == p) reps.push_back(cls.front());
    if (!normal_closure(G.whole(), reps).is_whole()) continue;
    ++met;
    for (ElemId a : reps) {
      json witness = {{"p", p}, {"elements", {{"a", G.word_string(a)}}}};
      if (D.order() % p == 0 || D.order() * p != G.order()) {
        witness["predicate"] = "not_split";
        return Outcome::fail("G is not G' x| <a> with G' a p'-group", witness);
      }
      std::vector<ElemId> bs;
      for (ElemId x = 0; x < G.order(); ++x)
        if (G.element_order(x) % p != 0 && G.element_order(G.mul(a, x)) == p) bs.push_back(x);
      if (!(Subgroup::generated(G, bs) == D)) {
        witness["predicate"] = "derived_not_generated";
        return Outcome::fail("G' differs from <b : p does not divide |b|, |ab| = p>", witness);
      }
      if (is_abelian(D)) {
        for (ElemId d : D.elements()) {
          if (d != FiniteGroup::kIdentity && G.conj(d, a) == d) {
            witness["predicate"] = "fixed_point";
            witness["elements"]["d"] = G.word_string(d);
            return Outcome::fail("a centralizes a non-trivial element of G'", witness);
          }
        }
      }
    }
  }
  if (met == 0) return Outcome::not_met("no prime p with a Sylow of order p generating G");
  return Outcome::pass(std::to_string(met) + " primes checked");
}

// --- L-2.6 -----------------------------------------------------------------------

Outcome check_induced_fpf(LemmaContext& c) {
  const auto& G = c.group();
  const auto& b = c.bounds();
  std::size_t instances = 0;
  std::string skipped;
  for (auto p : c.primes()) {
    if (!c.prime_selected(p)) continue;
    const Subgroup& V = c.sylow(p);
    if (!is_normal(V, G.whole()) || !is_elementary_abelian(V)) continue;
    if (V.order() == G.order()) continue;
    std::vector<std::uint64_t> qs;
    nt::PrimeSet others;
    for (auto q : c.primes())
      if (q != p) {
        others.insert(q);
        if (!c.has_order_multiple(p * q) && c.prime_selected(q, "q")) qs.push_back(q);
      }
    if (qs.empty()) continue;
    const auto S = hall(G, others);
    if (!S) continue;
    std::size_t d = 0;
    for (std::size_t m = V.order(); m > 1; m /= p) ++d;
    if (S->order() > b.module_search_order_bound || ipow(p, d) > b.vector_scan_bound) {
      skipped = outside("module search for p = " + std::to_string(p));
      continue;
    }
    const auto cm = conjugation_module(V, *S);
    const auto& M = cm.action;
    const FiniteGroup& Sg = M.group();
    for (const auto& H : all_subgroups(Sg.whole())) {
      if (H.is_whole()) continue;
      const std::size_t idx = Sg.order() / H.order();
      if (d % idx != 0) continue;
      const auto R = restrict(M, H);
      const auto T = right_transversal(H);
      std::vector<Subspace> tried;
      bool induced = false;
      for_each_line(static_cast<unsigned>(p), d, [&](const FpVector& v) {
        Subspace W = spin(R, v);
        if (W.dim() != d / idx || std::find(tried.begin(), tried.end(), W) != tried.end()) return true;
        tried.push_back(W);
        Subspace sum(static_cast<unsigned>(p), d);
        for (ElemId t : T)
          for (const auto& w : W.basis()) sum.insert(vec_mul(w, M.matrix(t)));
        induced = sum.dim() == d;
        return !induced;
      });
      if (!induced) continue;
      ++instances;
      for (auto q : qs) {
        for (ElemId s = 1; s < Sg.order(); ++s) {
          if (Sg.element_order(s) != q || H.contains(s)) continue;
          return Outcome::fail("an element of order q lies outside H",
                               {{"predicate", "q_element_outside"},
                                {"p", p},
                                {"q", q},
                                {"subgroups", {{"H", lifted_words(G, Sg, H.generators())}}},
                                {"elements", {{"s", G.word_string(G.index_of(Sg.element(s)))}}}});
        }
      }
    }
  }
  if (instances == 0) return Outcome::not_met(skipped.empty() ? "no V = Ind_H^S(W) decomposition found" : skipped);
  return Outcome::pass(std::to_string(instances) + " induced decompositions");
}

// --- L-2.7, L-2.8 ------------------------------------------------------------------

Outcome check_fitting_p(LemmaContext& c) {
  const auto& G = c.group();
  if (!c.is_solvable()) return Outcome::not_met("G is not solvable");
  const Subgroup& F = c.fitting();
  std::size_t met = 0;
  for (const auto& cls : G.classes().classes) {
    const ElemId b = cls.front();
    const auto p = G.element_order(b);
    if (!nt::is_prime(p) || F.order() % p == 0 || !c.prime_selected(p)) continue;
    ++met;
    const bool found = std::any_of(F.elements().begin(), F.elements().end(), [&](ElemId x) {
      return x != FiniteGroup::kIdentity && G.element_order(G.mul(b, x)) == p;
    });
    if (!found) {
      return Outcome::fail("no x in F(G) with |bx| = p",
                           {{"predicate", "no_x"}, {"p", p}, {"elements", {{"b", G.word_string(b)}}}});
    }
  }
  if (met == 0) return Outcome::not_met("no prime-order element of order coprime to |F(G)|");
  return Outcome::pass(std::to_string(met) + " classes of b checked");
}

Outcome check_aux_pq(LemmaContext& c) {
  const auto& G = c.group();
  const auto& primes = c.primes();
  if (primes.size() != 2) return Outcome::not_met("G is not a {p,q}-group");
  if (G.order() > c.bounds().pair_scan_order_bound) return Outcome::not_met(outside("|G| above the pair scan bound"));
  std::size_t met = 0;
  for (int side = 0; side < 2; ++side) {
    const auto p = primes[side], q = primes[1 - side];
    if (nt::p_part(G.order(), p) != p || !c.prime_selected(p)) continue;
    std::vector<ElemId> qel;
    for (ElemId x = 0; x < G.order(); ++x)
      if (nt::is_prime_power(G.element_order(x), q)) qel.push_back(x);
    for (const auto& cls : G.classes().classes) {
      const ElemId b = cls.front();
      if (G.element_order(b) != p) continue;
      std::vector<ElemId> X;
      for (ElemId x : qel)
        if (G.element_order(G.mul(b, x)) == p) X.push_back(x);
      if (X.size() < 2) continue;  // needs some y != 1
      ++met;
      for (ElemId x : X)
        for (ElemId y : X) {
          if (y == FiniteGroup::kIdentity) continue;
          if (G.commute(G.mul(b, x), y)) {
            return Outcome::fail("bx commutes with y",
                                 {{"predicate", "bx_commutes_y"},
                                  {"p", p},
                                  {"elements", {{"b", G.word_string(b)}, {"x", G.word_string(x)}, {"y", G.word_string(y)}}}});
          }
        }
    }
  }
  if (met == 0) return Outcome::not_met("no Sylow of prime order with q-elements y != 1, |by| = p");
  return Outcome::pass(std::to_string(met) + " choices of b checked");
}

// --- T-2.9 (catalog side) --------------------------------------------------------

Outcome check_vs2(LemmaContext& c) {
  const auto& G = c.group();
  const auto& primes = c.primes();
  if (primes.size() != 2 || primes[0] != 2 || primes[1] < 5) return Outcome::not_met("|G| is not 2^a p^b with p >= 5");
  const auto p = primes[1];
  const Subgroup& V = c.sylow(p);
  if (!is_normal(V, G.whole()) || !is_elementary_abelian(V)) return Outcome::not_met("no normal elementary abelian Sylow p");
  const Subgroup& P = c.sylow(2);
  std::size_t d = 0;
  for (std::size_t m = V.order(); m > 1; m /= p) ++d;
  if (ipow(p, d) > kDefaultVectorScanBound) return Outcome::not_met(outside("eigenvector scan"));
  const auto cm = conjugation_module(V, P);
  if (!cm.action.is_faithful()) return Outcome::not_met("module not faithful");
  if (!group_rationality(cm.action.group()).is_rational_group) return Outcome::not_met("2-group not rational");
  if (!has_eigenvector_property(cm.action).holds) return Outcome::not_met("no eigenvector property");
  const std::size_t n = d / 2;
  std::uint64_t k = P.order();
  bool ok = p == 5 && d % 2 == 0;
  for (std::size_t i = 0; ok && i < n; ++i) {
    ok = k % 8 == 0;
    k /= 8;
  }
  ok = ok && nt::p_part(nt::factorial(static_cast<unsigned>(n)), 2) % k == 0;
  if (!ok) {
    return Outcome::fail("module fingerprint differs from Q8 wr K on F_5^(2n)",
                         {{"predicate", "fingerprint"}, {"p", p}, {"dim", d}, {"two_group_order", P.order()}});
  }
  return Outcome::pass("p = 5, dim " + std::to_string(d) + ", |G_2| = 8^" + std::to_string(n) + " * " +
                       std::to_string(k));
}

// --- L-3.1 -----------------------------------------------------------------------

using PairCheck = std::function<std::optional<Outcome>(LemmaContext&, std::uint64_t p, std::uint64_t q)>;

/// Runs `check` over ordered pairs of distinct primes of a cut group. The
/// callback returns nullopt when the pair misses the hypothesis, a pass when
/// the conclusion holds, and a failure otherwise.
Outcome over_cut_pairs(LemmaContext& c, const PairCheck& check) {
  if (!c.is_cut()) return Outcome::not_met("G is not cut");
  const auto& primes = c.primes();
  if (primes.size() < 2) return Outcome::not_met("fewer than two prime divisors");
  std::size_t met = 0;
  for (auto p : primes)
    for (auto q : primes) {
      if (p == q || !c.prime_selected(p) || !c.prime_selected(q, "q")) continue;
      auto r = check(c, p, q);
      if (!r) continue;
      if (r->status == CheckStatus::fail) return *r;
      ++met;
    }
  if (met == 0) return Outcome::not_met("no prime pair meets the hypothesis");
  return Outcome::pass(std::to_string(met) + " prime pairs checked");
}

json pq(std::uint64_t p, std::uint64_t q) { return {{"p", p}, {"q", q}}; }

Outcome cut_orders_1(LemmaContext& c) {
  return over_cut_pairs(c, [](LemmaContext& c, std::uint64_t p, std::uint64_t q) -> std::optional<Outcome> {
    if (p % 4 != 1) return std::nullopt;
    for (ElemId g : c.p_element_reps(p)) {
      if (!element_rationality_by_classes(c.group(), g).is_rational) {
        json w = pq(p, q);
        w["predicate"] = "p_element_not_rational";
        w["elements"] = {{"g", c.group().word_string(g)}};
        return Outcome::fail("a p-element is not rational", w);
      }
    }
    return Outcome::pass("");
  });
}

Outcome cut_orders_2(LemmaContext& c) {
  return over_cut_pairs(c, [](LemmaContext& c, std::uint64_t p, std::uint64_t q) -> std::optional<Outcome> {
    const Subgroup& P = c.sylow(p);
    if (!is_abelian(P)) return std::nullopt;
    const auto e = exponent(P);
    if (p % e == 0 || 4 % e == 0) return Outcome::pass("");
    json w = pq(p, q);
    w["predicate"] = "exponent";
    w["exponent"] = e;
    return Outcome::fail("abelian Sylow p-subgroup has exponent dividing neither p nor 4", w);
  });
}

Outcome cut_orders_3(LemmaContext& c) {
  return over_cut_pairs(c, [](LemmaContext& c, std::uint64_t p, std::uint64_t q) -> std::optional<Outcome> {
    if (!is_normal(c.sylow(p), c.group().whole()) || c.has_order_multiple(p * q)) return std::nullopt;
    const Subgroup& Q = c.sylow(q);
    if (is_quaternion8(Q) || (is_cyclic(Q) && (q % Q.order() == 0 || 4 % Q.order() == 0))) return Outcome::pass("");
    json w = pq(p, q);
    w["predicate"] = "sylow_q_shape";
    w["subgroups"] = {{"Q", subgroup_words(Q)}};
    return Outcome::fail("Sylow q-subgroup is neither Q8 nor cyclic of order dividing q or 4", w);
  });
}

Outcome cut_orders_4(LemmaContext& c) {
  return over_cut_pairs(c, [](LemmaContext& c, std::uint64_t p, std::uint64_t q) -> std::optional<Outcome> {
    if (q != 2 || !is_cyclic(c.sylow(2))) return std::nullopt;
    if (!c.has_order_multiple(4 * p)) return Outcome::pass("");
    json w = pq(p, q);
    w["predicate"] = "order_4p";
    return Outcome::fail("element of order 4p with cyclic Sylow 2-subgroup", w);
  });
}

Outcome cut_orders_5(LemmaContext& c) {
  return over_cut_pairs(c, [](LemmaContext& c, std::uint64_t p, std::uint64_t q) -> std::optional<Outcome> {
    if (q != 2 || p % 4 != 1) return std::nullopt;
    const Subgroup& Q = c.sylow(2);
    if (!is_cyclic(Q) && !is_quaternion8(Q)) return std::nullopt;
    if (!c.has_order_multiple(2 * p)) return Outcome::pass("");
    json w = pq(p, q);
    w["predicate"] = "order_2p";
    return Outcome::fail("element of order 2p", w);
  });
}

Outcome cut_orders_6(LemmaContext& c) {
  return over_cut_pairs(c, [](LemmaContext& c, std::uint64_t p, std::uint64_t q) -> std::optional<Outcome> {
    if (p != 3 || !is_cyclic(c.sylow(3))) return std::nullopt;
    (void)q;
    if (!c.has_order_multiple(21)) return Outcome::pass("");
    json w = pq(p, q);
    w["predicate"] = "order_21";
    return Outcome::fail("element of order 21 with cyclic Sylow 3-subgroup", w);
  });
}

// --- L-3.2 -----------------------------------------------------------------------

std::optional<Outcome> q8_cut_hypothesis(LemmaContext& c) {
  if (!c.is_cut()) return Outcome::not_met("G is not cut");
  if (!is_quaternion8(c.sylow(2))) return Outcome::not_met("Sylow 2-subgroup is not Q8");
  return std::nullopt;
}

Outcome g2q8_1(LemmaContext& c) {
  if (auto r = q8_cut_hypothesis(c)) return *r;
  const auto& G = c.group();
  std::size_t met = 0;
  for (const auto& cls : G.classes().classes) {
    const ElemId a = cls.front();
    const auto n = G.element_order(a);
    if (n % 4 != 0) continue;
    const auto primes = nt::prime_divisors(n / 4);
    if (primes.size() != 1 || primes[0] == 2) continue;
    const auto p = primes[0];
    ++met;
    const ElemId ap = element_part(G, a, {p});
    const Subgroup N = normalizer(G.whole(), Subgroup::generated(G, std::span<const ElemId>(&a, 1)));
    for (ElemId x : N.elements()) {
      if (!nt::is_prime_power(G.element_order(x), 2) || G.commute(x, ap)) continue;
      return Outcome::fail("a 2-element of N(<a>) does not commute with a_p",
                           {{"predicate", "no_commute"}, {"elements", {{"a", G.word_string(a)}, {"x", G.word_string(x)}}}});
    }
  }
  if (met == 0) return Outcome::not_met("no element of order 4p^n");
  return Outcome::pass(std::to_string(met) + " classes of order 4p^n");
}

Outcome g2q8_2(LemmaContext& c) {
  if (auto r = q8_cut_hypothesis(c)) return *r;
  for (std::uint64_t bad : {105, 84})
    if (c.spectrum().count(bad))
      return Outcome::fail("forbidden element order", {{"predicate", "order"}, {"order", bad}});
  return Outcome::pass("no elements of order 105 or 84");
}

Outcome g2q8_3(LemmaContext& c) {
  if (auto r = q8_cut_hypothesis(c)) return *r;
  const auto& G = c.group();
  const Subgroup& Q = c.sylow(2);
  std::size_t met = 0;
  for (const auto& V : c.normal_subgroups()) {
    if (V.is_trivial()) continue;
    const auto ps = prime_divisors(V);
    if (ps.size() != 1 || ps[0] == 2 || !c.prime_selected(ps[0])) continue;
    ++met;
    const auto C = centralizer(Q, V.generators());
    if (C.order() != 1 && C.order() != Q.order()) {
      return Outcome::fail("C_{G_2}(V) is a proper non-trivial subgroup",
                           {{"predicate", "centralizer"}, {"subgroups", {{"V", subgroup_words(V)}, {"C", subgroup_words(C)}}}});
    }
  }
  (void)G;
  if (met == 0) return Outcome::not_met("no normal subgroup of odd prime power order");
  return Outcome::pass(std::to_string(met) + " normal p-subgroups");
}

// --- L-3.3 ... L-3.6 ---------------------------------------------------------------

Outcome v5or7(LemmaContext& c) {
  const auto& G = c.group();
  if (!c.is_solvable()) return Outcome::not_met("G is not solvable");
  if (!c.is_cut()) return Outcome::not_met("G is not cut");
  if (c.gk().edges.size() != 4) return Outcome::not_met("GK graph does not have four edges");
  if (G.order() > c.bounds().quotient_scan_bound) return Outcome::not_met(outside("quotient scan"));
  // GK(G/N) is a subgraph of GK(G/M) for M <= N, so minimal normal subgroups decide
  // the quotient condition for every non-trivial N.
  for (const auto& M : minimal_normal_subgroups(G.whole()))
    if (GkGraph::from_spectrum(quotient_order_spectrum(G.whole(), M)) == c.gk())
      return Outcome::not_met("a quotient by a minimal normal subgroup keeps the GK graph");
  std::size_t met = 0;
  for (const auto& V : c.normal_subgroups()) {
    if (V.is_trivial()) continue;
    const auto ps = prime_divisors(V);
    if (ps.size() != 1) continue;
    const auto p = ps[0];
    ++met;
    if ((p != 5 && p != 7) || !is_elementary_abelian(V) || V.order() != nt::p_part(G.order(), p)) {
      return Outcome::fail("normal p-subgroup is not an elementary abelian Sylow 5- or 7-subgroup",
                           {{"predicate", "normal_p_subgroup"}, {"p", p}, {"subgroups", {{"V", subgroup_words(V)}}}});
    }
  }
  if (met == 0) return Outcome::not_met("no non-trivial normal p-subgroup");
  return Outcome::pass(std::to_string(met) +
                       " normal p-subgroups; quotient condition read over minimal normal subgroups (equivalent to all N)");
}

Outcome g2c2or21(LemmaContext& c) {
  if (!c.is_solvable()) return Outcome::not_met("G is not solvable");
  if (!c.is_cut()) return Outcome::not_met("G is not cut");
  if (c.primes() != std::vector<std::uint64_t>{2, 3, 7}) return Outcome::not_met("pi(G) is not {2,3,7}");
  if (!is_cyclic(c.sylow(2)) || !is_cyclic(c.sylow(7))) return Outcome::not_met("G_2 or G_7 not cyclic");
  if (c.sylow(2).order() == 2 || !c.has_order_multiple(21)) return Outcome::pass("G_2 = C2 or no elements of order 21");
  return Outcome::fail("G_2 is not C2 and G has elements of order 21", {{"predicate", "order_21"}});
}

std::optional<json> form2_decomposition(LemmaContext& c) {
  const auto& G = c.group();
  const auto n = G.order();
  if (n % 20 != 0) return std::nullopt;
  auto m = n / 20;
  if (m % 2 == 0 || m % 5 == 0 || !nt::is_prime_power(m, 3)) return std::nullopt;
  const Subgroup& P5 = c.sylow(5);
  if (P5.order() != 5 || !is_normal(P5, G.whole())) return std::nullopt;
  const ElemId a = P5.generators().front();
  const Subgroup& C = c.sylow(3);
  if (m > 1 && (!is_normal(C, G.whole()) || !is_elementary_abelian(C))) return std::nullopt;
  for (ElemId x : C.generators())
    if (!G.commute(a, x)) return std::nullopt;
  for (ElemId b = 1; b < n; ++b) {
    if (G.element_order(b) != 4 || G.conj(a, b) != G.pow(a, 2)) continue;
    bool inverts = true;
    for (ElemId x : C.generators()) inverts = inverts && G.conj(x, b) == G.inv(x);
    if (inverts) return json{{"a", G.word_string(a)}, {"b", G.word_string(b)}, {"C", subgroup_words(C)}};
  }
  return std::nullopt;
}

Outcome s3ea(LemmaContext& c) {
  const auto& G = c.group();
  const bool cond1 = c.is_solvable() && c.is_cut() && nt::p_part(G.order(), 5) == 5 &&
                     is_normal(c.sylow(5), G.whole()) &&
                     gk_within(c.gk(), {2, 3, 5}, {{2, 3}, {3, 5}});
  const auto cond2 = form2_decomposition(c);
  if (cond1 && cond2) return Outcome::pass("decomposition a, b, C found");
  if (!cond1 && !cond2) return Outcome::not_met("neither the cut condition nor the decomposition holds");
  if (cond1) return Outcome::fail("cut group without the (<a> x C) x| <b> decomposition", {{"predicate", "no_decomposition"}});
  return Outcome::fail("(<a> x C) x| <b> group fails the cut/GK condition",
                       {{"predicate", "decomposition_not_cut"}, {"elements", *cond2}});
}

Outcome rat_s2(LemmaContext& c) {
  const auto& G = c.group();
  if (!c.is_solvable()) return Outcome::not_met("G is not solvable");
  if (!c.is_cut()) return Outcome::not_met("G is not cut");
  if (nt::p_part(G.order(), 7) != 7 || !is_normal(c.sylow(7), G.whole())) return Outcome::not_met("no normal Sylow of order 7");
  if (!gk_within(c.gk(), {2, 3, 7}, {{2, 3}, {2, 7}})) return Outcome::not_met("GK graph not inside 3-2-7");
  auto failure = [&](const std::string& why) {
    return Outcome::fail("no <a> x| (<b> x Q) decomposition: " + why, {{"predicate", "no_decomposition"}});
  };
  if (nt::p_part(G.order(), 3) != 3) return failure("|G|_3 != 3");
  const ElemId a = c.sylow(7).generators().front();
  const auto H = hall(G, {2, 3});
  if (!H) return failure("no Hall {2,3}-subgroup");
  const Subgroup Q = sylow(*H, 2);
  if (!is_normal(Q, *H)) return failure("Sylow 2 of the complement is not normal");
  for (ElemId b : H->elements()) {
    if (G.element_order(b) != 3 || G.conj(a, b) != G.pow(a, 2)) continue;
    bool central = true;
    for (ElemId x : Q.generators()) central = central && G.commute(b, x);
    if (!central) continue;
    if (!group_rationality(Q.as_group()).is_rational_group) {
      return Outcome::fail("Q is not a rational 2-group", {{"predicate", "q_not_rational"}, {"subgroups", {{"Q", subgroup_words(Q)}}}});
    }
    return Outcome::pass("a = " + G.word_string(a) + ", b = " + G.word_string(b) + ", |Q| = " + std::to_string(Q.order()));
  }
  return failure("no b of order 3 with a^b = a^2 centralizing Q");
}

}  // namespace

const LemmaRegistry& LemmaRegistry::standard() {
  static const LemmaRegistry reg = [] {
    LemmaRegistry r;
    r.add({"L-2.1-FED", "solvable, normal abelian subgroups cyclic => F = ED decomposition", check_fed});
    r.add({"L-2.2-FrobFaithful", "Frobenius, faithful coprime module => complement elements fix a vector",
           check_frobenius_faithful});
    r.add({"L-2.3-FabSylow", "pi = {2,p}, G_2 = Q8, no 4p, p-elements real => F(G) abelian Sylow p inverted by involutions",
           check_fab_sylow});
    r.add({"L-2.4-HAbelCic", "V = W^G with H minimal => W_N homogeneous, cyclic when abelian", check_h_abel_cic});
    r.add({"L-2.5-GSylowp", "non-perfect, generated by p-elements, Sylow of order p => G = G' x| <a> etc.",
           check_g_sylow_p});
    r.add({"L-2.6-InducedFPF", "V x| S without pq elements, V = Ind_H^S W => H holds all q-elements of S",
           check_induced_fpf});
    r.add({"L-2.7-Fittingp", "solvable, |b| = p coprime to |F(G)| => some x in F(G)\\1 with |bx| = p", check_fitting_p});
    r.add({"L-2.8-auxpq", "{p,q}-group, Sylow <b> of order p, |bx| = |by| = p => bx, y do not commute", check_aux_pq});
    r.add({"T-2.9-VS2", "rational 2-group with faithful eigenvector-property module, p >= 5 => p = 5, Q8 wr K shape",
           check_vs2});
    r.add({"L-3.1-CutOrders(1)", "cut, p = 1 mod 4 => p-elements rational", cut_orders_1});
    r.add({"L-3.1-CutOrders(2)", "cut, G_p abelian => exp(G_p) divides p or 4", cut_orders_2});
    r.add({"L-3.1-CutOrders(3)", "cut, G_p normal, no pq elements => G_q is Q8 or cyclic of order | q or 4", cut_orders_3});
    r.add({"L-3.1-CutOrders(4)", "cut, G_2 cyclic => no elements of order 4p", cut_orders_4});
    r.add({"L-3.1-CutOrders(5)", "cut, p = 1 mod 4, G_2 cyclic or Q8 => no elements of order 2p", cut_orders_5});
    r.add({"L-3.1-CutOrders(6)", "cut, G_3 cyclic => no elements of order 21", cut_orders_6});
    r.add({"L-3.2-G2Q8(1)", "cut, G_2 = Q8, |a| = 4p^n => 2-elements of N(<a>) commute with a_p", g2q8_1});
    r.add({"L-3.2-G2Q8(2)", "cut, G_2 = Q8 => no elements of order 105 or 84", g2q8_2});
    r.add({"L-3.2-G2Q8(3)", "cut, G_2 = Q8, V normal odd p-subgroup => C_{G_2}(V) is 1 or G_2", g2q8_3});
    r.add({"L-3.3-V5or7", "solvable cut, four GK edges, quotients change GK => normal p-subgroups are elementary abelian Sylow, p in {5,7}",
           v5or7});
    r.add({"L-3.4-G2C2or21", "solvable cut, pi = {2,3,7}, G_2, G_7 cyclic => G_2 = C2 or no elements of order 21", g2c2or21});
    r.add({"L-3.5-S3EA", "solvable cut, normal Sylow of order 5, GK inside 2-3-5 <=> (<a> x C) x| <b>", s3ea});
    r.add({"L-3.6-ratS2", "solvable cut, normal Sylow of order 7, GK inside 3-2-7 => <a> x| (<b> x Q), Q rational", rat_s2});
    return r;
  }();
  return reg;
}

}  // namespace cutgk
