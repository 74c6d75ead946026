#include "cutgk/structure.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <numeric>

#include "cutgk/error.hpp"

namespace cutgk {

namespace {

Subgroup filtered(const Subgroup& in, const std::function<bool(ElemId)>& keep) {
  std::vector<ElemId> out;
  for (ElemId e : in.elements())
    if (keep(e)) out.push_back(e);
  return Subgroup::from_elements(in.parent(), std::move(out));
}

void check_same_parent(const Subgroup& a, const Subgroup& b) {
  if (!a.parent().same_as(b.parent()))
    raise(ErrorKind::InvalidArgument, "subgroups belong to different groups");
}

}  // namespace

// --- elements ---------------------------------------------------------------

std::uint64_t element_order(const FiniteGroup& G, const Permutation& g) {
  return G.element_order(G.index_of(g));
}

ElemId element_part(const FiniteGroup& G, ElemId g, const nt::PrimeSet& pi) {
  const std::uint64_t n = G.element_order(g);
  const std::uint64_t m = nt::pi_part(n, pi);
  if (m == 1) return FiniteGroup::kIdentity;
  if (m == n) return g;
  const std::uint64_t rest = n / m;
  const auto k = static_cast<long long>(
      rest * static_cast<std::uint64_t>(nt::inverse_mod(static_cast<std::int64_t>(rest),
                                                        static_cast<std::int64_t>(m))) %
      n);
  return G.pow(g, k);
}

Permutation element_part(const FiniteGroup& G, const Permutation& g, const nt::PrimeSet& pi) {
  return G.element(element_part(G, G.index_of(g), pi));
}

std::vector<std::uint64_t> prime_divisors(const Subgroup& H) {
  return nt::prime_divisors(H.order());
}

// --- predicates ---------------------------------------------------------------

bool is_abelian(const Subgroup& H) {
  const auto& gens = H.generators();
  const auto& G = H.parent();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!G.commute(gens[i], gens[j])) return false;
  return true;
}

bool is_cyclic(const Subgroup& H) {
  for (ElemId e : H.elements())
    if (H.parent().element_order(e) == H.order()) return true;
  return false;
}

bool is_normal(const Subgroup& N, const Subgroup& in) {
  check_same_parent(N, in);
  if (!N.is_subset_of(in)) return false;
  const auto& G = N.parent();
  for (ElemId x : N.generators())
    for (ElemId s : in.generators())
      if (!N.contains(G.conj(x, s))) return false;
  return true;
}

std::uint64_t exponent(const Subgroup& H) {
  std::uint64_t e = 1;
  for (ElemId x : H.elements()) e = std::lcm(e, H.parent().element_order(x));
  return e;
}

bool is_p_group(const Subgroup& H, std::uint64_t p) { return nt::is_prime_power(H.order(), p); }

bool is_elementary_abelian(const Subgroup& H) {
  if (H.is_trivial()) return true;
  const auto primes = nt::prime_divisors(H.order());
  if (primes.size() != 1 || !is_abelian(H)) return false;
  return exponent(H) == primes.front();
}

bool is_quaternion8(const Subgroup& H) {
  if (H.order() != 8 || is_abelian(H)) return false;
  std::size_t involutions = 0;
  for (ElemId x : H.elements())
    if (H.parent().element_order(x) == 2) ++involutions;
  return involutions == 1;
}

// --- constructions ------------------------------------------------------------

Subgroup join(const Subgroup& A, const Subgroup& B) {
  check_same_parent(A, B);
  if (A.is_subset_of(B)) return B;
  if (B.is_subset_of(A)) return A;
  std::vector<ElemId> gens = A.generators();
  gens.insert(gens.end(), B.generators().begin(), B.generators().end());
  return Subgroup::generated(A.parent(), gens);
}

Subgroup intersection(const Subgroup& A, const Subgroup& B) {
  check_same_parent(A, B);
  return filtered(A, [&](ElemId e) { return B.contains(e); });
}

Subgroup normal_closure(const Subgroup& in, std::span<const ElemId> gens) {
  const auto& G = in.parent();
  std::vector<ElemId> current(gens.begin(), gens.end());
  Subgroup N = Subgroup::generated(G, current);
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < N.generators().size() && !grew; ++i) {
      for (ElemId s : in.generators()) {
        ElemId y = G.conj(N.generators()[i], s);
        if (!N.contains(y)) {
          current = N.generators();
          current.push_back(y);
          N = Subgroup::generated(G, current);
          grew = true;
          break;
        }
      }
    }
  }
  return N;
}

Subgroup conjugate(const Subgroup& H, ElemId g) {
  std::vector<ElemId> gens;
  for (ElemId x : H.generators()) gens.push_back(H.parent().conj(x, g));
  return Subgroup::generated(H.parent(), gens);
}

Subgroup centralizer(const Subgroup& in, std::span<const ElemId> A) {
  const auto& G = in.parent();
  for (ElemId a : A)
    if (a >= G.order()) raise(ErrorKind::NotAMember, "centralized element not in group");
  return filtered(in, [&](ElemId g) {
    for (ElemId a : A)
      if (!G.commute(a, g)) return false;
    return true;
  });
}

Subgroup centralizer(const FiniteGroup& G, std::span<const Permutation> A) {
  std::vector<ElemId> ids;
  for (const auto& a : A) ids.push_back(G.index_of(a));
  return centralizer(G.whole(), ids);
}

Subgroup normalizer(const Subgroup& in, const Subgroup& H) {
  check_same_parent(in, H);
  if (!H.is_subset_of(in)) raise(ErrorKind::NotASubgroup, "H is not contained in the ambient group");
  const auto& G = in.parent();
  return filtered(in, [&](ElemId g) {
    for (ElemId x : H.generators())
      if (!H.contains(G.conj(x, g))) return false;
    return true;
  });
}

Subgroup normalizer(const FiniteGroup& G, const Subgroup& H) { return normalizer(G.whole(), H); }

Subgroup center(const Subgroup& H) { return centralizer(H, H.generators()); }

Subgroup derived_subgroup(const Subgroup& H) {
  return commutator_subgroup(H, H, H);
}

Subgroup commutator_subgroup(const Subgroup& in, const Subgroup& A, const Subgroup& B) {
  const auto& G = in.parent();
  std::vector<ElemId> comms;
  for (ElemId a : A.generators())
    for (ElemId b : B.generators()) {
      ElemId c = G.comm(a, b);
      if (c != FiniteGroup::kIdentity) comms.push_back(c);
    }
  return normal_closure(in, comms);
}

Subgroup core(const Subgroup& in, const Subgroup& H) {
  check_same_parent(in, H);
  const auto& G = in.parent();
  std::vector<ElemId> current = H.elements();
  std::vector<bool> member(G.order(), false);
  for (ElemId e : current) member[e] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<ElemId> next;
    for (ElemId x : current) {
      bool stays = true;
      for (ElemId s : in.generators())
        if (!member[G.conj(x, s)]) {
          stays = false;
          break;
        }
      if (stays) next.push_back(x);
    }
    if (next.size() != current.size()) {
      changed = true;
      std::fill(member.begin(), member.end(), false);
      for (ElemId e : next) member[e] = true;
      current = std::move(next);
    }
  }
  return Subgroup::from_elements(G, std::move(current));
}

Subgroup p_core(const Subgroup& H, std::uint64_t p) { return core(H, sylow(H, p)); }

Subgroup fitting_subgroup(const Subgroup& H) {
  Subgroup F = H.parent().trivial();
  for (auto p : prime_divisors(H)) F = join(F, p_core(H, p));
  return F;
}

Subgroup omega(const Subgroup& H, std::uint64_t p) {
  if (!is_p_group(H, p) && !is_abelian(H))
    raise(ErrorKind::KindPreconditionViolated, "omega_p needs a p-group or an abelian group");
  std::vector<ElemId> gens;
  for (ElemId x : H.elements())
    if (H.parent().element_order(x) == p) gens.push_back(x);
  return Subgroup::generated(H.parent(), gens);
}

Subgroup frattini_p(const Subgroup& H, std::uint64_t p) {
  if (!is_p_group(H, p))
    raise(ErrorKind::KindPreconditionViolated, "frattini_p needs a p-group");
  const auto& G = H.parent();
  std::vector<ElemId> gens = derived_subgroup(H).generators();
  for (ElemId x : H.elements()) {
    ElemId y = G.pow(x, static_cast<long long>(p));
    if (y != FiniteGroup::kIdentity) gens.push_back(y);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return Subgroup::generated(G, gens);
}

Subgroup socle_abelian(const Subgroup& H) {
  if (!is_abelian(H)) raise(ErrorKind::KindPreconditionViolated, "socle_abelian needs an abelian group");
  return filtered(H, [&](ElemId x) {
    const std::uint64_t n = H.parent().element_order(x);
    for (auto q : nt::prime_divisors(n))
      if ((n / q) % q == 0) return false;
    return true;
  });
}

Subgroup characteristic_subgroup(const Subgroup& H, CharacteristicSpec spec) {
  auto need_prime = [&] {
    if (!nt::is_prime(spec.p))
      raise(ErrorKind::KindPreconditionViolated, "this kind needs a prime parameter");
  };
  switch (spec.kind) {
    case CharKind::center: return center(H);
    case CharKind::derived: return derived_subgroup(H);
    case CharKind::fitting: return fitting_subgroup(H);
    case CharKind::p_core: need_prime(); return p_core(H, spec.p);
    case CharKind::omega_p: need_prime(); return omega(H, spec.p);
    case CharKind::frattini_p: need_prime(); return frattini_p(H, spec.p);
    case CharKind::socle_abelian: return socle_abelian(H);
  }
  raise(ErrorKind::InvalidArgument, "unknown characteristic subgroup kind");
}

Subgroup characteristic_subgroup(const FiniteGroup& G, CharacteristicSpec spec) {
  return characteristic_subgroup(G.whole(), spec);
}

// --- Sylow / Hall -------------------------------------------------------------

Subgroup sylow(const Subgroup& H, std::uint64_t p) {
  const auto& G = H.parent();
  const std::uint64_t target = nt::p_part(H.order(), p);
  if (target == 1) return G.trivial();
  auto is_p_elem = [&](ElemId x) { return nt::is_prime_power(G.element_order(x), p); };
  ElemId seed = FiniteGroup::kIdentity;
  std::uint64_t best = 1;
  for (ElemId x : H.elements()) {
    const std::uint64_t o = G.element_order(x);
    if (o > best && nt::is_prime_power(o, p)) {
      best = o;
      seed = x;
    }
  }
  Subgroup P = Subgroup::generated(G, std::span<const ElemId>(&seed, 1));
  while (P.order() < target) {
    Subgroup N = normalizer(H, P);
    std::optional<ElemId> ext;
    for (ElemId y : N.elements())
      if (!P.contains(y) && is_p_elem(y)) {
        ext = y;
        break;
      }
    if (!ext) raise(ErrorKind::NotFound, "Sylow growth stalled");
    std::vector<ElemId> gens = P.generators();
    gens.push_back(*ext);
    P = Subgroup::generated(G, gens);
  }
  return P;
}

Subgroup sylow(const FiniteGroup& G, std::uint64_t p) { return sylow(G.whole(), p); }

namespace {

std::vector<Subgroup> conjugates_of(const Subgroup& in, const Subgroup& P) {
  std::map<std::vector<ElemId>, Subgroup> seen;
  std::vector<Subgroup> out;
  const Subgroup N = normalizer(in, P);
  std::vector<bool> covered(in.parent().order(), false);
  // One conjugate per right coset N g.
  for (ElemId g : in.elements()) {
    if (covered[g]) continue;
    for (ElemId n : N.elements()) covered[in.parent().mul(n, g)] = true;
    Subgroup C = conjugate(P, g);
    if (seen.emplace(C.elements(), C).second) out.push_back(C);
  }
  return out;
}

bool hall_search(const Subgroup& in, const std::vector<std::vector<Subgroup>>& sylows,
                 std::size_t level, const Subgroup& current, std::uint64_t current_target,
                 const std::vector<std::uint64_t>& parts, std::optional<Subgroup>& out) {
  if (level == sylows.size()) {
    out = current;
    return true;
  }
  const std::uint64_t target = current_target * parts[level];
  for (const auto& P : sylows[level]) {
    Subgroup J = join(current, P);
    if (J.order() == target && hall_search(in, sylows, level + 1, J, target, parts, out))
      return true;
  }
  return false;
}

}  // namespace

std::optional<Subgroup> hall(const Subgroup& H, const nt::PrimeSet& pi, std::size_t hall_bound) {
  const auto& G = H.parent();
  std::vector<std::uint64_t> primes;
  for (auto p : prime_divisors(H))
    if (pi.count(p)) primes.push_back(p);
  const std::uint64_t target = nt::pi_part(H.order(), nt::PrimeSet(primes.begin(), primes.end()));
  if (target == 1) return G.trivial();
  if (target == H.order()) return H;

  Subgroup seed = G.trivial();
  for (auto p : primes) seed = join(seed, sylow(H, p));
  if (seed.order() == target) return seed;
  if (H.order() > hall_bound)
    raise(ErrorKind::BoundExceeded, "exhaustive Hall search needs |G| <= " +
                                        std::to_string(hall_bound));

  std::vector<std::vector<Subgroup>> sylows;
  std::vector<std::uint64_t> parts;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    Subgroup P = sylow(H, primes[i]);
    parts.push_back(P.order());
    if (i == 0)
      sylows.push_back({P});
    else
      sylows.push_back(conjugates_of(H, P));
  }
  std::optional<Subgroup> out;
  hall_search(H, sylows, 1, sylows[0][0], parts[0], parts, out);
  return out;
}

std::optional<Subgroup> hall(const FiniteGroup& G, const nt::PrimeSet& pi, std::size_t hall_bound) {
  return hall(G.whole(), pi, hall_bound);
}

// --- series -------------------------------------------------------------------

SeriesResult series(const Subgroup& H, SeriesKind kind) {
  const auto& G = H.parent();
  SeriesResult result;
  switch (kind) {
    case SeriesKind::derived: {
      result.terms.push_back(H);
      while (true) {
        Subgroup next = derived_subgroup(result.terms.back());
        if (next.order() == result.terms.back().order()) break;
        result.terms.push_back(next);
      }
      break;
    }
    case SeriesKind::lower_central: {
      result.terms.push_back(H);
      while (true) {
        Subgroup next = commutator_subgroup(H, result.terms.back(), H);
        if (next.order() == result.terms.back().order()) break;
        result.terms.push_back(next);
      }
      break;
    }
    case SeriesKind::upper_central: {
      result.terms.push_back(G.trivial());
      while (true) {
        const Subgroup& Z = result.terms.back();
        Subgroup next = filtered(H, [&](ElemId g) {
          for (ElemId s : H.generators())
            if (!Z.contains(G.comm(g, s))) return false;
          return true;
        });
        if (next.order() == Z.order()) break;
        result.terms.push_back(next);
      }
      break;
    }
    case SeriesKind::fitting: {
      result.terms.push_back(G.trivial());
      const auto primes = prime_divisors(H);
      std::vector<Subgroup> sylows;
      for (auto p : primes) sylows.push_back(sylow(H, p));
      while (result.terms.back().order() < H.order()) {
        const Subgroup& F = result.terms.back();
        Subgroup next = F;
        for (const auto& P : sylows) next = join(next, core(H, join(P, F)));
        if (next.order() == F.order()) break;
        result.terms.push_back(next);
      }
      if (result.terms.back().order() == H.order()) result.fitting_length = result.terms.size() - 1;
      break;
    }
  }
  return result;
}

SeriesResult series(const FiniteGroup& G, SeriesKind kind) { return series(G.whole(), kind); }

SolvabilityClass solvability_class(const Subgroup& H) {
  SolvabilityClass c;
  c.is_solvable = series(H, SeriesKind::derived).terms.back().is_trivial();
  c.is_nilpotent = series(H, SeriesKind::lower_central).terms.back().is_trivial();
  if (c.is_solvable) c.fitting_length = series(H, SeriesKind::fitting).fitting_length;
  return c;
}

SolvabilityClass solvability_class(const FiniteGroup& G) { return solvability_class(G.whole()); }

// --- Frobenius ------------------------------------------------------------------

std::optional<FrobeniusDecomposition> frobenius_decomposition(const Subgroup& H) {
  const auto& G = H.parent();
  const auto primes = prime_divisors(H);
  if (primes.size() < 2) return std::nullopt;
  const std::size_t n = primes.size();
  for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << n); ++mask) {
    nt::PrimeSet pi, rest;
    for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1U ? pi : rest).insert(primes[i]);
    // Kernel candidate: all pi'-elements.
    std::vector<ElemId> kernel_elems;
    for (ElemId x : H.elements())
      if (nt::is_pi_number(G.element_order(x), rest)) kernel_elems.push_back(x);
    if (kernel_elems.size() != nt::pi_part(H.order(), rest)) continue;
    Subgroup K = Subgroup::generated(G, kernel_elems);
    if (K.order() != kernel_elems.size()) continue;

    std::optional<Subgroup> comp;
    try {
      comp = hall(H, pi);
    } catch (const Error&) {
      continue;
    }
    if (!comp) continue;
    const Subgroup& C = *comp;

    // Malnormality: the conjugates over right coset representatives of C must
    // cover exactly [H:C](|C|-1) non-identity elements.
    std::vector<bool> covered(G.order(), false), coset_seen(G.order(), false);
    std::size_t marked = 0, cosets = 0;
    for (ElemId g : H.elements()) {
      if (coset_seen[g]) continue;
      ++cosets;
      for (ElemId c : C.elements()) coset_seen[G.mul(c, g)] = true;
      for (ElemId c : C.elements()) {
        if (c == FiniteGroup::kIdentity) continue;
        ElemId y = G.conj(c, g);
        if (!covered[y]) {
          covered[y] = true;
          ++marked;
        }
      }
    }
    if (marked != cosets * (C.order() - 1)) continue;

    std::vector<ElemId> frob_kernel;
    for (ElemId x : H.elements())
      if (!covered[x]) frob_kernel.push_back(x);
    Subgroup FK = Subgroup::from_elements(G, frob_kernel);
    if (!is_normal(FK, H) || FK.order() * C.order() != H.order()) continue;
    return FrobeniusDecomposition{FK, C};
  }
  return std::nullopt;
}

std::optional<FrobeniusDecomposition> frobenius_decomposition(const FiniteGroup& G) {
  return frobenius_decomposition(G.whole());
}

// --- quotients --------------------------------------------------------------------

std::uint64_t quotient_element_order(const FiniteGroup& G, ElemId g, const Subgroup& N) {
  std::uint64_t k = 1;
  ElemId x = g;
  while (!N.contains(x)) {
    x = G.mul(x, g);
    ++k;
  }
  return k;
}

std::set<std::uint64_t> quotient_order_spectrum(const Subgroup& H, const Subgroup& N) {
  std::set<std::uint64_t> out;
  std::vector<bool> done(H.parent().order(), false);
  for (ElemId x : H.elements()) {
    if (done[x]) continue;
    // All of xN shares one quotient order.
    for (ElemId n : N.elements()) done[H.parent().mul(x, n)] = true;
    out.insert(quotient_element_order(H.parent(), x, N));
  }
  return out;
}

FiniteGroup quotient_group(const Subgroup& H, const Subgroup& N, std::size_t entry_bound) {
  const auto& G = H.parent();
  if (!is_normal(N, H)) raise(ErrorKind::NotASubgroup, "quotient needs a normal subgroup");
  const std::size_t index = H.order() / N.order();
  if (index * index > entry_bound || index > kMaxDegree)
    raise(ErrorKind::BoundExceeded, "quotient too large for the coset action");
  constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> coset(G.order(), kUnset);
  std::vector<ElemId> reps;
  for (ElemId x : H.elements()) {
    if (coset[x] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (ElemId n : N.elements()) coset[G.mul(n, x)] = id;
  }
  std::vector<Permutation> gens;
  for (ElemId s : H.generators()) {
    std::vector<Point> img(index);
    for (std::size_t c = 0; c < index; ++c) img[c] = static_cast<Point>(coset[G.mul(reps[c], s)]);
    gens.emplace_back(std::move(img));
  }
  return FiniteGroup::from_generators(std::move(gens), std::max<std::size_t>(index, 1));
}

std::vector<Subgroup> minimal_normal_subgroups(const Subgroup& H) {
  const auto& G = H.parent();
  std::vector<Subgroup> candidates;
  for (const auto& cls : classes_within(H)) {
    ElemId r = cls.front();
    if (r == FiniteGroup::kIdentity || !nt::is_prime(G.element_order(r))) continue;
    Subgroup N = normal_closure(H, std::span<const ElemId>(&r, 1));
    if (std::none_of(candidates.begin(), candidates.end(),
                     [&](const Subgroup& M) { return M == N; }))
      candidates.push_back(N);
  }
  std::vector<Subgroup> out;
  for (const auto& N : candidates) {
    bool minimal = true;
    for (const auto& M : candidates)
      if (M.order() < N.order() && M.is_subset_of(N)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(N);
  }
  return out;
}

std::vector<Subgroup> all_subgroups(const Subgroup& H, std::size_t max_subgroups) {
  const auto& G = H.parent();
  std::map<std::vector<ElemId>, Subgroup> found;
  std::vector<Subgroup> cyclic;
  for (ElemId x : H.elements()) {
    Subgroup C = Subgroup::generated(G, std::span<const ElemId>(&x, 1));
    if (found.emplace(C.elements(), C).second) cyclic.push_back(C);
  }
  std::vector<Subgroup> queue = cyclic;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& C : cyclic) {
      if (C.is_subset_of(queue[i])) continue;
      Subgroup J = join(queue[i], C);
      if (found.emplace(J.elements(), J).second) {
        queue.push_back(J);
        if (found.size() > max_subgroups)
          raise(ErrorKind::BoundExceeded, "subgroup enumeration exceeds bound");
      }
    }
  }
  std::vector<Subgroup> out;
  for (auto& [key, S] : found) out.push_back(S);
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

std::vector<Subgroup> normal_subgroups(const Subgroup& H, std::size_t max_subgroups) {
  std::map<std::vector<ElemId>, Subgroup> found;
  found.emplace(std::vector<ElemId>{FiniteGroup::kIdentity}, H.parent().trivial());
  std::vector<Subgroup> atoms;
  for (const auto& cls : classes_within(H)) {
    if (cls.front() == FiniteGroup::kIdentity) continue;
    Subgroup N = normal_closure(H, std::span<const ElemId>(&cls.front(), 1));
    if (found.emplace(N.elements(), N).second) atoms.push_back(N);
  }
  std::vector<Subgroup> queue = atoms;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& A : atoms) {
      if (A.is_subset_of(queue[i])) continue;
      Subgroup J = join(queue[i], A);
      if (found.emplace(J.elements(), J).second) {
        queue.push_back(J);
        if (found.size() > max_subgroups)
          raise(ErrorKind::BoundExceeded, "normal subgroup enumeration exceeds bound");
      }
    }
  }
  std::vector<Subgroup> out;
  for (auto& [key, S] : found) out.push_back(S);
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

std::vector<std::vector<ElemId>> classes_within(const Subgroup& H) {
  const auto& G = H.parent();
  if (H.is_whole()) return G.classes().classes;
  std::vector<bool> seen(G.order(), false);
  std::vector<std::vector<ElemId>> out;
  for (ElemId x : H.elements()) {
    if (seen[x]) continue;
    std::vector<ElemId> orbit{x};
    seen[x] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (ElemId s : H.generators()) {
        ElemId y = G.conj(orbit[i], s);
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace cutgk
