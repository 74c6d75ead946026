#include "cutgk/constructors.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "cutgk/fpmod.hpp"
#include "cutgk/numtheory.hpp"

namespace cutgk {

std::string_view spec_kind_name(SpecKind kind) {
  switch (kind) {
    case SpecKind::Cyc: return "Cyc";
    case SpecKind::Dih: return "Dih";
    case SpecKind::Quat: return "Quat";
    case SpecKind::Sym: return "Sym";
    case SpecKind::Alt: return "Alt";
    case SpecKind::EA: return "EA";
    case SpecKind::MM: return "MM";
    case SpecKind::W4200: return "W4200";
    case SpecKind::DP: return "DP";
    case SpecKind::SD: return "SD";
    case SpecKind::Wr: return "Wr";
  }
  return "?";
}

GroupSpec GroupSpec::atom(SpecKind kind, std::vector<long long> params) {
  GroupSpec s;
  s.kind = kind;
  s.params = std::move(params);
  return s;
}

GroupSpec GroupSpec::dp(GroupSpec a, GroupSpec b) {
  GroupSpec s;
  s.kind = SpecKind::DP;
  s.children = {std::move(a), std::move(b)};
  return s;
}

GroupSpec GroupSpec::wr(GroupSpec a, GroupSpec b) {
  GroupSpec s;
  s.kind = SpecKind::Wr;
  s.children = {std::move(a), std::move(b)};
  return s;
}

GroupSpec GroupSpec::sd_pow(GroupSpec v, GroupSpec h, long long r) {
  GroupSpec s;
  s.kind = SpecKind::SD;
  s.children = {std::move(v), std::move(h)};
  s.action = SdAction{SdAction::Kind::Pow, r, {}};
  return s;
}

GroupSpec GroupSpec::sd_mats(GroupSpec v, GroupSpec h,
                             std::vector<std::vector<std::vector<long long>>> mats) {
  GroupSpec s;
  s.kind = SpecKind::SD;
  s.children = {std::move(v), std::move(h)};
  s.action = SdAction{SdAction::Kind::Mats, 1, std::move(mats)};
  return s;
}

namespace {

void print(std::ostringstream& out, const GroupSpec& s) {
  out << spec_kind_name(s.kind);
  if (s.kind == SpecKind::MM || s.kind == SpecKind::W4200) return;
  out << '(';
  for (std::size_t i = 0; i < s.params.size(); ++i) out << (i ? "," : "") << s.params[i];
  for (std::size_t i = 0; i < s.children.size(); ++i) {
    if (i) out << ',';
    print(out, s.children[i]);
  }
  if (s.action) {
    if (s.action->kind == SdAction::Kind::Pow) {
      out << ",pow=" << s.action->power;
    } else {
      out << ",mats=[";
      for (std::size_t m = 0; m < s.action->matrices.size(); ++m) {
        out << (m ? ",[" : "[");
        const auto& rows = s.action->matrices[m];
        for (std::size_t i = 0; i < rows.size(); ++i) {
          out << (i ? ",[" : "[");
          for (std::size_t j = 0; j < rows[i].size(); ++j) out << (j ? "," : "") << rows[i][j];
          out << ']';
        }
        out << ']';
      }
      out << ']';
    }
  }
  out << ')';
}

[[noreturn]] void semantic(const GroupSpec& s, const std::string& msg) {
  throw Error(ErrorKind::SemanticError, msg, s.span.begin);
}

std::size_t expected_params(SpecKind k) {
  switch (k) {
    case SpecKind::EA: return 2;
    case SpecKind::MM:
    case SpecKind::W4200:
    case SpecKind::DP:
    case SpecKind::SD:
    case SpecKind::Wr: return 0;
    default: return 1;
  }
}

std::size_t expected_children(SpecKind k) {
  switch (k) {
    case SpecKind::DP:
    case SpecKind::SD:
    case SpecKind::Wr: return 2;
    default: return 0;
  }
}

}  // namespace

std::string to_string(const GroupSpec& spec) {
  std::ostringstream out;
  print(out, spec);
  return out.str();
}

void validate(const GroupSpec& s) {
  for (const auto& c : s.children) validate(c);
  const auto name = std::string(spec_kind_name(s.kind));
  if (s.params.size() != expected_params(s.kind) || s.children.size() != expected_children(s.kind)) {
    semantic(s, name + ": wrong number of arguments");
  }
  if (s.action.has_value() != (s.kind == SpecKind::SD)) semantic(s, name + ": misplaced action");
  const long long n = s.params.empty() ? 0 : s.params[0];
  switch (s.kind) {
    case SpecKind::Cyc:
    case SpecKind::Sym:
    case SpecKind::Alt:
      if (n < 1 || n > 65535) semantic(s, name + " needs 1 <= n <= 65535");
      break;
    case SpecKind::Dih:
      if (n < 2 || n % 2 != 0 || n / 2 > 65535) semantic(s, "Dih needs an even order >= 2");
      break;
    case SpecKind::Quat:
      if (n < 8 || (n & (n - 1)) != 0 || n > 65535) semantic(s, "Quat needs order 2^k with k >= 3");
      break;
    case SpecKind::EA:
      if (n < 2 || n > 65535 || !nt::is_prime(static_cast<std::uint64_t>(n))) semantic(s, "EA needs a prime p");
      if (s.params[1] < 1 || n * s.params[1] > 65535) semantic(s, "EA needs k >= 1 and p*k <= 65535");
      break;
    case SpecKind::SD: {
      const auto& V = s.children[0];
      const bool base_ok =
          V.kind == SpecKind::EA ||
          (V.kind == SpecKind::Cyc);
      if (!base_ok) semantic(V, "SD base must be Cyc(n) or EA(p,k)");
      if (s.action->kind == SdAction::Kind::Mats) {
        long long dim = V.kind == SpecKind::EA ? V.params.at(1) : 1;
        if (V.kind == SpecKind::Cyc && !V.params.empty() &&
            !nt::is_prime(static_cast<std::uint64_t>(std::max(V.params[0], 0LL)))) {
          semantic(V, "matrix actions need Cyc(p) with p prime or EA(p,k)");
        }
        for (const auto& m : s.action->matrices) {
          if (static_cast<long long>(m.size()) != dim) semantic(s, "matrix size must match the module rank");
          for (const auto& row : m)
            if (static_cast<long long>(row.size()) != dim) semantic(s, "matrices must be square");
        }
      }
      break;
    }
    default:
      break;
  }
}

namespace {

using Images = std::vector<Point>;

Permutation from_images(Images img) { return Permutation(std::move(img)); }

Permutation cycle_on(std::size_t degree, std::size_t start, std::size_t len) {
  Images img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (std::size_t i = 0; i < len; ++i) img[start + i] = static_cast<Point>(start + (i + 1) % len);
  return from_images(std::move(img));
}

struct Built {
  std::vector<Permutation> gens;
  std::size_t degree;
};

void check_order(double expected, std::size_t bound) {
  if (expected > static_cast<double>(bound)) {
    raise(ErrorKind::BoundExceeded, "group order " + std::to_string(static_cast<long double>(expected)) +
                                        " exceeds the element bound " + std::to_string(bound));
  }
}

FiniteGroup close(Built b, std::size_t bound) {
  try {
    return FiniteGroup::from_generators(std::move(b.gens), b.degree, bound);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ClosureExceedsBound) raise(ErrorKind::BoundExceeded, e.what());
    throw;
  }
}

Built atom_generators(const GroupSpec& s) {
  const long long n = s.params.empty() ? 0 : s.params[0];
  switch (s.kind) {
    case SpecKind::Cyc:
      return {{cycle_on(n, 0, n)}, static_cast<std::size_t>(n)};
    case SpecKind::Dih: {
      const long long h = n / 2;
      if (h == 1) return {{cycle_on(2, 0, 2)}, 2};
      if (h == 2) {
        return {{Permutation::from_cycles(4, {{0, 1}, {2, 3}}),
                 Permutation::from_cycles(4, {{0, 2}, {1, 3}})},
                4};
      }
      Images refl(h);
      for (long long i = 0; i < h; ++i) refl[i] = static_cast<Point>((h - i) % h);
      return {{cycle_on(h, 0, h), from_images(std::move(refl))}, static_cast<std::size_t>(h)};
    }
    case SpecKind::Quat: {
      // Right regular action on x^a y^b (point a + h b), with x^h = 1,
      // y^2 = x^(h/2) and x y = y x^-1.
      const long long h = n / 2;
      auto point = [h](long long a, long long b) { return static_cast<Point>(((a % h + h) % h) + h * b); };
      Images x(n), y(n);
      for (long long a = 0; a < h; ++a) {
        x[point(a, 0)] = point(a + 1, 0);
        x[point(a, 1)] = point(a - 1, 1);  // x^a y x = x^(a-1) y
        y[point(a, 0)] = point(a, 1);
        y[point(a, 1)] = point(a + h / 2, 0);
      }
      return {{from_images(std::move(x)), from_images(std::move(y))}, static_cast<std::size_t>(n)};
    }
    case SpecKind::Sym:
      if (n == 1) return {{}, 1};
      if (n == 2) return {{cycle_on(2, 0, 2)}, 2};
      return {{cycle_on(n, 0, 2), cycle_on(n, 0, n)}, static_cast<std::size_t>(n)};
    case SpecKind::Alt:
      if (n <= 2) return {{}, static_cast<std::size_t>(n)};
      if (n == 3) return {{cycle_on(3, 0, 3)}, 3};
      if (n % 2 == 1) return {{cycle_on(n, 0, 3), cycle_on(n, 0, n)}, static_cast<std::size_t>(n)};
      return {{cycle_on(n, 0, 3), cycle_on(n, 1, n - 1)}, static_cast<std::size_t>(n)};
    case SpecKind::EA: {
      const long long p = s.params[0], k = s.params[1];
      Built b{{}, static_cast<std::size_t>(p * k)};
      for (long long i = 0; i < k; ++i) b.gens.push_back(cycle_on(p * k, i * p, p));
      return b;
    }
    default:
      break;
  }
  raise(ErrorKind::SemanticError, "not an atom");
}

double atom_order(const GroupSpec& s) {
  const long long n = s.params.empty() ? 0 : s.params[0];
  switch (s.kind) {
    case SpecKind::Cyc:
    case SpecKind::Dih:
    case SpecKind::Quat: return static_cast<double>(n);
    case SpecKind::Sym:
    case SpecKind::Alt: {
      double f = 1;
      for (long long i = 2; i <= n && f < 1e300; ++i) f *= static_cast<double>(i);
      return s.kind == SpecKind::Alt && n >= 2 ? f / 2 : f;
    }
    case SpecKind::EA: return std::pow(static_cast<double>(s.params[0]), static_cast<double>(s.params[1]));
    default: return 0;
  }
}

FiniteGroup build(const GroupSpec& s, std::size_t bound);

// Extends each generator of `A` on `deg_a` points to a larger point set at `offset`.
Permutation embed(const Permutation& g, std::size_t offset, std::size_t degree) {
  Images img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (std::size_t i = 0; i < g.degree(); ++i) img[offset + i] = static_cast<Point>(offset + g[i]);
  return from_images(std::move(img));
}

FiniteGroup build_dp(const GroupSpec& s, std::size_t bound) {
  const auto A = build(s.children[0], bound);
  const auto B = build(s.children[1], bound);
  check_order(static_cast<double>(A.order()) * static_cast<double>(B.order()), bound);
  const std::size_t degree = A.degree() + B.degree();
  if (degree > 65535) raise(ErrorKind::BoundExceeded, "degree exceeds 65535");
  Built b{{}, degree};
  for (const auto& g : A.generators()) b.gens.push_back(embed(g, 0, degree));
  for (const auto& g : B.generators()) b.gens.push_back(embed(g, A.degree(), degree));
  auto G = close(std::move(b), bound);
  if (G.order() != A.order() * B.order()) raise(ErrorKind::InvalidAction, "direct product has the wrong order");
  return G;
}

FiniteGroup build_wr(const GroupSpec& s, std::size_t bound) {
  return wreath_product(build(s.children[0], bound), build(s.children[1], bound), bound);
}

// SD(Cyc(n), H, pow=r) as affine maps x -> r^w x + t on Z/n.
FiniteGroup build_sd_cyclic(const GroupSpec& s, const FiniteGroup& H, std::size_t bound) {
  const long long n = s.children[0].params[0];
  const long long r = ((s.action->power % n) + n) % n;
  if (std::gcd(r, n) != 1) {
    raise(ErrorKind::InvalidAction, "pow=" + std::to_string(s.action->power) + " is not a unit mod " +
                                        std::to_string(n));
  }
  const std::vector<long long> gen_images(H.generator_count(), r);
  const auto img = certify_hom<long long>(H, gen_images, 1 % n,
                                          [n](long long a, long long b) { return a * b % n; });
  bool faithful = true;
  for (ElemId e = 1; e < H.order(); ++e) faithful = faithful && img[e] != 1 % n;
  const std::size_t extra = faithful ? 0 : H.degree();
  const std::size_t degree = static_cast<std::size_t>(n) + extra;
  if (degree > 65535) raise(ErrorKind::BoundExceeded, "degree exceeds 65535");
  Built b{{}, degree};
  {
    Images t(degree);
    std::iota(t.begin(), t.end(), Point{0});
    for (long long x = 0; x < n; ++x) t[x] = static_cast<Point>((x + 1) % n);
    b.gens.push_back(from_images(std::move(t)));
  }
  for (const auto& g : H.generators()) {
    Images m(degree);
    for (long long x = 0; x < n; ++x) m[x] = static_cast<Point>(x * r % n);
    for (std::size_t k = 0; k < extra; ++k) m[n + k] = static_cast<Point>(n + g[k]);
    b.gens.push_back(from_images(std::move(m)));
  }
  auto G = close(std::move(b), bound);
  if (G.order() != static_cast<std::size_t>(n) * H.order()) {
    raise(ErrorKind::InvalidAction, "semidirect product has the wrong order");
  }
  return G;
}

FiniteGroup build_sd(const GroupSpec& s, std::size_t bound) {
  const auto& V = s.children[0];
  const auto H = build(s.children[1], bound);
  check_order(atom_order(V) * static_cast<double>(H.order()), bound);
  if (V.kind == SpecKind::Cyc && s.action->kind == SdAction::Kind::Pow) return build_sd_cyclic(s, H, bound);
  const unsigned p = static_cast<unsigned>(V.params[0]);
  const std::size_t d = V.kind == SpecKind::EA ? static_cast<std::size_t>(V.params[1]) : 1;
  std::vector<FpMatrix> mats;
  if (s.action->kind == SdAction::Kind::Pow) {
    mats.assign(H.generator_count(), FpMatrix::scalar(p, d, s.action->power));
  } else {
    if (s.action->matrices.size() != H.generator_count()) {
      raise(ErrorKind::InvalidAction, "expected " + std::to_string(H.generator_count()) +
                                          " matrices, one per generator of H");
    }
    for (const auto& m : s.action->matrices) mats.push_back(FpMatrix::from_rows(p, m));
  }
  try {
    auto M = ModuleAction::certify(H, p, d, std::move(mats));
    return semidirect_perm_group(M, bound).group;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotAHomomorphism || e.kind() == ErrorKind::SingularMatrix) {
      raise(ErrorKind::InvalidAction, e.what());
    }
    if (e.kind() == ErrorKind::ClosureExceedsBound) raise(ErrorKind::BoundExceeded, e.what());
    throw;
  }
}

FiniteGroup build(const GroupSpec& s, std::size_t bound) {
  switch (s.kind) {
    case SpecKind::MM:
      return build(GroupSpec::sd_mats(GroupSpec::ea(5, 2), GroupSpec::quat(8),
                                      {{{0, 4}, {1, 0}}, {{2, 0}, {0, 3}}}),
                   bound);
    case SpecKind::W4200:
      return build(GroupSpec::dp(GroupSpec::mm(),
                                 GroupSpec::sd_pow(GroupSpec::cyc(7), GroupSpec::cyc(3), 2)),
                   bound);
    case SpecKind::DP: return build_dp(s, bound);
    case SpecKind::Wr: return build_wr(s, bound);
    case SpecKind::SD: return build_sd(s, bound);
    default:
      check_order(atom_order(s), bound);
      return close(atom_generators(s), bound);
  }
}

}  // namespace

FiniteGroup wreath_product(const FiniteGroup& A, const FiniteGroup& B, std::size_t bound) {
  const std::size_t m = A.degree(), n = B.degree(), degree = m * n;
  check_order(std::pow(static_cast<double>(A.order()), static_cast<double>(n)) * static_cast<double>(B.order()),
              bound);
  if (degree > 65535) raise(ErrorKind::BoundExceeded, "degree exceeds 65535");
  // Point b*m + a: block b (a point of B), inner point a.
  Built out{{}, degree};
  std::vector<bool> seen(n, false);
  for (std::size_t b0 = 0; b0 < n; ++b0) {
    if (seen[b0]) continue;
    std::vector<std::size_t> orbit{b0};
    seen[b0] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const auto& g : B.generators())
        if (!seen[g[orbit[i]]]) {
          seen[g[orbit[i]]] = true;
          orbit.push_back(g[orbit[i]]);
        }
    for (const auto& g : A.generators()) out.gens.push_back(embed(g, b0 * m, degree));
  }
  for (const auto& g : B.generators()) {
    Images img(degree);
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t a = 0; a < m; ++a) img[b * m + a] = static_cast<Point>(g[b] * m + a);
    out.gens.push_back(from_images(std::move(img)));
  }
  auto G = close(std::move(out), bound);
  double expect = std::pow(static_cast<double>(A.order()), static_cast<double>(n)) * static_cast<double>(B.order());
  if (static_cast<double>(G.order()) != expect) raise(ErrorKind::InvalidAction, "wreath product has the wrong order");
  return G;
}

FiniteGroup construct(const GroupSpec& spec, std::size_t element_bound) {
  validate(spec);
  return build(spec, element_bound);
}

}  // namespace cutgk
