#include "cutgk/fpmod.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <sstream>
#include <unordered_set>

#include "cutgk/error.hpp"
#include "cutgk/numtheory.hpp"

namespace cutgk {

namespace {

Residue reduce(long long x, unsigned p) {
  long long r = x % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<Residue>(r);
}

Residue inv_mod(Residue a, unsigned p) {
  return static_cast<Residue>(nt::inverse_mod(a, p));
}

void check_prime(unsigned p) {
  if (p >= (1u << 15) || !nt::is_prime(p)) {
    raise(ErrorKind::InvalidArgument, "field characteristic must be a prime below 32768, got " +
                                          std::to_string(p));
  }
}

void check_same_field(const FpMatrix& a, const FpMatrix& b) {
  if (a.p() != b.p() || a.dim() != b.dim()) {
    raise(ErrorKind::InvalidArgument, "matrix shape or field mismatch");
  }
}

// Reduced row echelon form in place, pivoting only in the first ncols
// columns; returns pivot columns.
std::vector<std::size_t> rref(std::vector<FpVector>& rows, std::size_t ncols, unsigned p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Residue inv = inv_mod(rows[r][c], p);
    for (auto& x : rows[r]) x = static_cast<Residue>(x * inv % p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const unsigned f = rows[i][c];
      for (std::size_t k = 0; k < rows[i].size(); ++k) {
        rows[i][k] = static_cast<Residue>((rows[i][k] + (p - f) * rows[r][k]) % p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

// --- FpMatrix -------------------------------------------------------------------

FpMatrix::FpMatrix(unsigned p, std::size_t d) : p_(p), d_(d), a_(d * d, 0) { check_prime(p); }

FpMatrix FpMatrix::identity(unsigned p, std::size_t d) { return scalar(p, d, 1); }

FpMatrix FpMatrix::scalar(unsigned p, std::size_t d, long long alpha) {
  FpMatrix m(p, d);
  for (std::size_t i = 0; i < d; ++i) m.set(i, i, alpha);
  return m;
}

FpMatrix FpMatrix::from_rows(unsigned p, const std::vector<std::vector<long long>>& rows) {
  FpMatrix m(p, rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      raise(ErrorKind::InvalidArgument, "matrix must be square");
    }
    for (std::size_t j = 0; j < rows.size(); ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

void FpMatrix::set(std::size_t i, std::size_t j, long long value) {
  a_[i * d_ + j] = reduce(value, p_);
}

std::vector<std::vector<long long>> FpMatrix::rows() const {
  std::vector<std::vector<long long>> out(d_, std::vector<long long>(d_));
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < d_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  check_same_field(*this, o);
  FpMatrix r(p_, d_);
  std::vector<std::uint64_t> acc(d_);
  for (std::size_t i = 0; i < d_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < d_; ++k) {
      const std::uint64_t x = a_[i * d_ + k];
      if (x == 0) continue;
      const Residue* row = &o.a_[k * d_];
      for (std::size_t j = 0; j < d_; ++j) acc[j] += x * row[j];
    }
    for (std::size_t j = 0; j < d_; ++j) r.a_[i * d_ + j] = static_cast<Residue>(acc[j] % p_);
  }
  return r;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  check_same_field(*this, o);
  FpMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = static_cast<Residue>((a_[i] + o.a_[i]) % p_);
  return r;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
  check_same_field(*this, o);
  FpMatrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i)
    r.a_[i] = static_cast<Residue>((a_[i] + p_ - o.a_[i]) % p_);
  return r;
}

FpMatrix FpMatrix::scaled(long long alpha) const {
  FpMatrix r = *this;
  const std::uint64_t s = reduce(alpha, p_);
  for (auto& x : r.a_) x = static_cast<Residue>(x * s % p_);
  return r;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix r(p_, d_);
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < d_; ++j) r.a_[j * d_ + i] = a_[i * d_ + j];
  return r;
}

FpMatrix FpMatrix::inverse() const {
  std::vector<FpVector> rows(d_, FpVector(2 * d_, 0));
  for (std::size_t i = 0; i < d_; ++i) {
    for (std::size_t j = 0; j < d_; ++j) rows[i][j] = (*this)(i, j);
    rows[i][d_ + i] = 1;
  }
  auto piv = rref(rows, d_, p_);
  if (piv.size() != d_) raise(ErrorKind::SingularMatrix, "matrix is singular:\n" + to_string());
  FpMatrix r(p_, d_);
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < d_; ++j) r.a_[i * d_ + j] = rows[i][d_ + j];
  return r;
}

std::size_t FpMatrix::rank() const {
  std::vector<FpVector> rows(d_);
  for (std::size_t i = 0; i < d_; ++i) rows[i].assign(a_.begin() + i * d_, a_.begin() + (i + 1) * d_);
  return rref(rows, d_, p_).size();
}

bool FpMatrix::is_identity() const {
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < d_; ++j)
      if (a_[i * d_ + j] != (i == j ? 1 : 0)) return false;
  return true;
}

std::string FpMatrix::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < d_; ++i) {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < d_; ++j) out << (j ? "," : "") << (*this)(i, j);
    out << ']';
  }
  out << ']';
  return out.str();
}

std::size_t FpMatrixHash::operator()(const FpMatrix& m) const noexcept {
  std::uint64_t h = 1469598103934665603ULL ^ m.p();
  for (Residue x : m.data()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

FpVector vec_mul(std::span<const Residue> v, const FpMatrix& m) {
  if (v.size() != m.dim()) raise(ErrorKind::InvalidArgument, "vector length mismatch");
  const std::size_t d = m.dim();
  std::vector<std::uint64_t> acc(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (v[i] == 0) continue;
    const std::uint64_t x = v[i];
    for (std::size_t j = 0; j < d; ++j) acc[j] += x * m(i, j);
  }
  FpVector out(d);
  for (std::size_t j = 0; j < d; ++j) out[j] = static_cast<Residue>(acc[j] % m.p());
  return out;
}

// --- Subspace -------------------------------------------------------------------

Subspace Subspace::span_of(unsigned p, std::size_t n, const std::vector<FpVector>& vs) {
  Subspace s(p, n);
  for (const auto& v : vs) s.insert(v);
  return s;
}

Subspace Subspace::full(unsigned p, std::size_t n) {
  Subspace s(p, n);
  for (std::size_t i = 0; i < n; ++i) {
    FpVector e(n, 0);
    e[i] = 1;
    s.insert(e);
  }
  return s;
}

void Subspace::reduce(FpVector& v) const {
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const std::size_t c = pivots_[i];
    if (v[c] == 0) continue;
    const unsigned f = v[c];
    for (std::size_t k = 0; k < n_; ++k) v[k] = static_cast<Residue>((v[k] + (p_ - f) * basis_[i][k]) % p_);
  }
}

bool Subspace::contains(std::span<const Residue> v) const {
  FpVector w(v.begin(), v.end());
  reduce(w);
  return std::all_of(w.begin(), w.end(), [](Residue x) { return x == 0; });
}

bool Subspace::insert(std::span<const Residue> v) {
  if (v.size() != n_) raise(ErrorKind::InvalidArgument, "vector length mismatch");
  FpVector w(v.begin(), v.end());
  reduce(w);
  auto lead = std::find_if(w.begin(), w.end(), [](Residue x) { return x != 0; });
  if (lead == w.end()) return false;
  const std::size_t c = static_cast<std::size_t>(lead - w.begin());
  const Residue inv = inv_mod(*lead, p_);
  for (auto& x : w) x = static_cast<Residue>(x * inv % p_);
  for (auto& b : basis_) {
    if (b[c] == 0) continue;
    const unsigned f = b[c];
    for (std::size_t k = 0; k < n_; ++k) b[k] = static_cast<Residue>((b[k] + (p_ - f) * w[k]) % p_);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), c) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, c);
  basis_.insert(basis_.begin() + pos, std::move(w));
  return true;
}

std::vector<Residue> Subspace::coordinates(std::span<const Residue> v) const {
  std::vector<Residue> out(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) out[i] = v[pivots_[i]];
  return out;
}

bool Subspace::is_subspace_of(const Subspace& other) const {
  return std::all_of(basis_.begin(), basis_.end(),
                     [&](const FpVector& b) { return other.contains(b); });
}

std::vector<FpVector> right_kernel(const std::vector<FpVector>& rows_in, std::size_t ncols,
                                   unsigned p) {
  std::vector<FpVector> rows = rows_in;
  auto piv = rref(rows, ncols, p);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<FpVector> out;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    FpVector x(ncols, 0);
    x[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = reduce(-static_cast<long long>(rows[i][f]), p);
    out.push_back(std::move(x));
  }
  return out;
}

std::vector<FpVector> left_kernel(const FpMatrix& m) {
  const auto t = m.transpose();
  std::vector<FpVector> rows(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    rows[i].assign(t.data().begin() + i * m.dim(), t.data().begin() + (i + 1) * m.dim());
  }
  return right_kernel(rows, m.dim(), m.p());
}

std::uint64_t vector_index(std::span<const Residue> v, unsigned p) {
  std::uint64_t idx = 0;
  for (Residue x : v) idx = idx * p + x;
  return idx;
}

FpVector vector_from_index(std::uint64_t index, unsigned p, std::size_t d) {
  FpVector v(d, 0);
  for (std::size_t i = d; i-- > 0;) {
    v[i] = static_cast<Residue>(index % p);
    index /= p;
  }
  return v;
}

namespace {

std::uint64_t checked_power(unsigned p, std::size_t d, std::size_t bound, const char* what) {
  std::uint64_t n = 1;
  for (std::size_t i = 0; i < d; ++i) {
    n *= p;
    if (n > bound) {
      raise(ErrorKind::BoundExceeded, std::string(what) + ": p^d exceeds the bound " +
                                          std::to_string(bound));
    }
  }
  return n;
}

// Nonzero vectors whose first nonzero coordinate is 1, in index order.
template <class F>
void for_each_line(unsigned p, std::size_t d, std::size_t bound, F&& f) {
  const std::uint64_t total = checked_power(p, d, bound, "vector scan");
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    FpVector v = vector_from_index(idx, p, d);
    auto lead = std::find_if(v.begin(), v.end(), [](Residue x) { return x != 0; });
    if (*lead != 1) continue;
    if (!f(v)) return;
  }
}

}  // namespace

// --- ModuleAction ---------------------------------------------------------------

ModuleAction ModuleAction::certify(FiniteGroup group, unsigned p, std::vector<FpMatrix> gens,
                                   std::size_t entry_bound) {
  const std::size_t d = gens.empty() ? 0 : gens.front().dim();
  return certify(std::move(group), p, d, std::move(gens), entry_bound);
}

ModuleAction ModuleAction::certify(FiniteGroup group, unsigned p, std::size_t d,
                                   std::vector<FpMatrix> gens, std::size_t entry_bound) {
  check_prime(p);
  if (gens.size() != group.generator_count()) {
    raise(ErrorKind::InvalidArgument, "expected " + std::to_string(group.generator_count()) +
                                          " generator matrices, got " + std::to_string(gens.size()));
  }
  for (const auto& m : gens) {
    if (m.p() != p || m.dim() != d) {
      raise(ErrorKind::InvalidArgument, "generator matrices differ in size or field");
    }
    if (!m.is_invertible()) raise(ErrorKind::SingularMatrix, "generator matrix " + m.to_string() + " is singular");
  }
  if (static_cast<double>(group.order()) * static_cast<double>(d * d) > static_cast<double>(entry_bound)) {
    raise(ErrorKind::BoundExceeded, "module storage |G| d^2 exceeds " + std::to_string(entry_bound));
  }
  ModuleAction m;
  m.group_ = std::move(group);
  m.p_ = p;
  m.d_ = d;
  m.gens_ = std::move(gens);
  const auto& G = m.group_;
  m.all_.resize(G.order());
  m.all_[0] = FpMatrix::identity(p, d);
  for (ElemId e = 1; e < G.order(); ++e) {
    m.all_[e] = m.all_[G.word_parent(e)] * m.gens_[G.word_generator(e)];
  }
  for (ElemId e = 0; e < G.order(); ++e) {
    for (std::size_t s = 0; s < m.gens_.size(); ++s) {
      const ElemId t = G.right_mul_generator(e, s);
      if (m.all_[e] * m.gens_[s] != m.all_[t]) {
        raise(ErrorKind::NotAHomomorphism,
              "relation fails at element " + G.word_string(e) + " times g" + std::to_string(s) +
                  ": M(" + G.word_string(e) + ")*M(g" + std::to_string(s) + ") = " +
                  (m.all_[e] * m.gens_[s]).to_string() + " but M(" + G.word_string(t) +
                  ") = " + m.all_[t].to_string());
      }
    }
  }
  return m;
}

const FpMatrix& ModuleAction::matrix(ElemId g) const { return all_.at(g); }

const FpMatrix& ModuleAction::matrix(const Permutation& g) const { return all_[group_.index_of(g)]; }

Subgroup ModuleAction::kernel() const {
  std::vector<ElemId> ker;
  for (ElemId e = 0; e < all_.size(); ++e)
    if (all_[e].is_identity()) ker.push_back(e);
  return Subgroup::from_elements(group_, std::move(ker));
}

Subspace eigenspace(const ModuleAction& M, ElemId g, long long alpha) {
  const auto& mg = M.matrix(g);
  auto basis = left_kernel(mg - FpMatrix::scalar(M.p(), M.dim(), alpha));
  return Subspace::span_of(M.p(), M.dim(), basis);
}

EigenvectorPropertyResult has_eigenvector_property(const ModuleAction& M,
                                                   std::size_t vector_scan_bound) {
  const unsigned p = M.p();
  const std::size_t d = M.dim();
  const std::uint64_t total = checked_power(p, d, vector_scan_bound, "eigenvector property");
  const auto& G = M.group();
  EigenvectorPropertyResult res;
  res.holds = true;
  std::vector<bool> hit(p);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    const FpVector v = vector_from_index(idx, p, d);
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;
    const Residue lead_inv = inv_mod(v[lead], p);
    std::fill(hit.begin(), hit.end(), false);
    std::size_t count = 0;
    for (ElemId g = 0; g < G.order() && count < p - 1; ++g) {
      const FpVector w = vec_mul(v, M.matrix(g));
      const Residue alpha = static_cast<Residue>(w[lead] * lead_inv % p);
      if (alpha == 0 || hit[alpha]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < d && ok; ++k) ok = w[k] == alpha * v[k] % p;
      if (ok) {
        hit[alpha] = true;
        ++count;
      }
    }
    if (count < p - 1) {
      res.holds = false;
      res.witness_vector = v;
      for (Residue a = 1; a < p; ++a) {
        if (!hit[a]) {
          res.witness_alpha = a;
          break;
        }
      }
      return res;
    }
  }
  return res;
}

Subspace spin(const ModuleAction& M, std::span<const Residue> v) {
  Subspace S(M.p(), M.dim());
  std::deque<FpVector> queue;
  if (S.insert(v)) queue.emplace_back(v.begin(), v.end());
  while (!queue.empty()) {
    FpVector w = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : M.generator_matrices()) {
      FpVector x = vec_mul(w, g);
      if (S.insert(x)) queue.push_back(std::move(x));
    }
  }
  return S;
}

std::vector<Subspace> minimal_submodules(const ModuleAction& M, std::size_t bound) {
  std::map<std::vector<FpVector>, Subspace> found;
  for_each_line(M.p(), M.dim(), bound, [&](const FpVector& v) {
    Subspace S = spin(M, v);
    found.try_emplace(S.basis(), std::move(S));
    return true;
  });
  std::vector<Subspace> all;
  for (auto& [k, s] : found) all.push_back(std::move(s));
  std::stable_sort(all.begin(), all.end(),
                   [](const Subspace& a, const Subspace& b) { return a.dim() < b.dim(); });
  std::vector<Subspace> minimal;
  for (const auto& s : all) {
    bool has_smaller = std::any_of(minimal.begin(), minimal.end(),
                                   [&](const Subspace& m) { return m.is_subspace_of(s); });
    if (!has_smaller) minimal.push_back(s);
  }
  return minimal;
}

bool is_irreducible(const ModuleAction& M, std::size_t bound) {
  if (M.dim() == 0) return false;
  bool irreducible = true;
  for_each_line(M.p(), M.dim(), bound, [&](const FpVector& v) {
    if (spin(M, v).dim() != M.dim()) irreducible = false;
    return irreducible;
  });
  return irreducible;
}

ModuleAction submodule_action(const ModuleAction& M, const Subspace& S) {
  std::vector<FpMatrix> gens;
  for (const auto& g : M.generator_matrices()) {
    FpMatrix r(M.p(), S.dim());
    for (std::size_t i = 0; i < S.dim(); ++i) {
      const FpVector w = vec_mul(S.basis()[i], g);
      if (!S.contains(w)) raise(ErrorKind::InvalidArgument, "subspace is not invariant");
      const auto c = S.coordinates(w);
      for (std::size_t j = 0; j < S.dim(); ++j) r.set(i, j, c[j]);
    }
    gens.push_back(std::move(r));
  }
  return ModuleAction::certify(M.group(), M.p(), S.dim(), std::move(gens));
}

SubmoduleAnalysis submodule_analysis(const ModuleAction& M, std::size_t bound) {
  if (M.group().order() % M.p() == 0) {
    raise(ErrorKind::CharacteristicDividesOrder,
          "p = " + std::to_string(M.p()) + " divides |G| = " + std::to_string(M.group().order()));
  }
  SubmoduleAnalysis res;
  res.minimal_submodules = minimal_submodules(M, bound);
  res.is_irreducible = M.dim() > 0 && res.minimal_submodules.size() == 1 &&
                       res.minimal_submodules.front().dim() == M.dim();
  res.is_homogeneous = true;
  if (res.minimal_submodules.size() > 1) {
    const auto first = submodule_action(M, res.minimal_submodules.front());
    for (std::size_t i = 1; i < res.minimal_submodules.size() && res.is_homogeneous; ++i) {
      res.is_homogeneous =
          are_isomorphic(first, submodule_action(M, res.minimal_submodules[i])).isomorphic;
    }
  }
  return res;
}

namespace {

void check_same_group(const ModuleAction& a, const ModuleAction& b) {
  if (a.p() != b.p()) raise(ErrorKind::InvalidArgument, "modules over different fields");
  if (!a.group().same_as(b.group()) && a.group().generators() != b.group().generators()) {
    raise(ErrorKind::InvalidArgument, "modules for different groups");
  }
}

}  // namespace

HomSpace hom_space(const ModuleAction& M1, const ModuleAction& M2, std::size_t bound) {
  check_same_group(M1, M2);
  const std::size_t d1 = M1.dim(), d2 = M2.dim(), n = d1 * d2;
  const unsigned p = M1.p();
  if (n > bound) {
    raise(ErrorKind::BoundExceeded, "hom space system has " + std::to_string(n) + " unknowns");
  }
  std::vector<FpVector> eqs;
  for (std::size_t s = 0; s < M1.generator_matrices().size(); ++s) {
    const auto& A = M1.generator_matrices()[s];
    const auto& B = M2.generator_matrices()[s];
    for (std::size_t i = 0; i < d1; ++i) {
      for (std::size_t j = 0; j < d2; ++j) {
        FpVector row(n, 0);
        for (std::size_t k = 0; k < d1; ++k) row[k * d2 + j] = static_cast<Residue>((row[k * d2 + j] + A(i, k)) % p);
        for (std::size_t l = 0; l < d2; ++l)
          row[i * d2 + l] = static_cast<Residue>((row[i * d2 + l] + p - B(l, j)) % p);
        eqs.push_back(std::move(row));
      }
    }
  }
  return {d1, d2, right_kernel(eqs, n, p)};
}

IsomorphismResult are_isomorphic(const ModuleAction& M1, const ModuleAction& M2,
                                 std::uint64_t seed, std::size_t budget, std::size_t bound) {
  IsomorphismResult res;
  res.seed = seed;
  check_same_group(M1, M2);
  if (M1.dim() != M2.dim()) {
    res.method = "dimension";
    return res;
  }
  if (M1.dim() == 0) {
    res.isomorphic = true;
    res.method = "dimension";
    return res;
  }
  const auto basis = hom_space(M1, M2, bound).basis;
  if (basis.empty()) {
    res.method = "zero_hom";
    return res;
  }
  const unsigned p = M1.p();
  const std::size_t k = basis.size();
  auto combine = [&](const std::vector<Residue>& c) {
    const std::size_t d = M1.dim();
    FpMatrix X(p, d);
    for (std::size_t e = 0; e < d * d; ++e) {
      std::uint64_t acc = 0;
      for (std::size_t i = 0; i < k; ++i) acc += static_cast<std::uint64_t>(c[i]) * basis[i][e];
      X.set(e / d, e % d, static_cast<long long>(acc % p));
    }
    return X;
  };
  std::uint64_t total = 1;
  bool exhaustive = true;
  for (std::size_t i = 0; i < k && exhaustive; ++i) {
    total *= p;
    if (total > kDefaultVectorScanBound) exhaustive = false;
  }
  if (exhaustive) {
    res.method = "exhaustive";
    for (std::uint64_t idx = 1; idx < total; ++idx) {
      auto X = combine(vector_from_index(idx, p, k));
      if (X.is_invertible()) {
        res.isomorphic = true;
        res.witness = std::move(X);
        return res;
      }
    }
    return res;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<unsigned> dist(0, p - 1);
  for (std::size_t t = 0; t < budget; ++t) {
    std::vector<Residue> c(k);
    for (auto& x : c) x = static_cast<Residue>(dist(rng));
    auto X = combine(c);
    if (X.is_invertible()) {
      res.isomorphic = true;
      res.method = "random";
      res.witness = std::move(X);
      return res;
    }
  }
  res.method = "random_budget";
  return res;
}

std::vector<ElemId> right_transversal(const Subgroup& H) {
  const auto& G = H.parent();
  std::vector<bool> seen(G.order(), false);
  std::vector<ElemId> reps;
  for (ElemId g = 0; g < G.order(); ++g) {
    if (seen[g]) continue;
    reps.push_back(g);
    for (ElemId h : H.elements()) seen[G.mul(h, g)] = true;
  }
  return reps;
}

ModuleAction induce(const ModuleAction& W, const Subgroup& H, std::size_t dim_bound) {
  const auto& G = H.parent();
  const auto& WG = W.group();
  if (WG.order() != H.order() || WG.degree() != G.degree()) {
    raise(ErrorKind::NotASubgroup, "module group does not match the subgroup");
  }
  for (const auto& g : WG.generators()) {
    auto id = G.find(g);
    if (!id || !H.contains(*id)) raise(ErrorKind::NotASubgroup, "module group does not match the subgroup");
  }
  const auto T = right_transversal(H);
  const std::size_t d = W.dim(), n = T.size(), D = n * d;
  if (D > dim_bound) raise(ErrorKind::BoundExceeded, "induced dimension " + std::to_string(D) + " exceeds bound");
  std::vector<std::size_t> coset_of(G.order());
  for (std::size_t i = 0; i < n; ++i)
    for (ElemId h : H.elements()) coset_of[G.mul(h, T[i])] = i;
  std::vector<FpMatrix> gens;
  for (std::size_t s = 0; s < G.generator_count(); ++s) {
    FpMatrix R(W.p(), D);
    for (std::size_t i = 0; i < n; ++i) {
      const ElemId ts = G.right_mul_generator(T[i], s);
      const std::size_t j = coset_of[ts];
      const ElemId h = G.mul(ts, G.inv(T[j]));
      const auto& B = W.matrix(G.element(h));
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) R.set(i * d + a, j * d + b, B(a, b));
    }
    gens.push_back(std::move(R));
  }
  return ModuleAction::certify(G, W.p(), D, std::move(gens));
}

ModuleAction restrict(const ModuleAction& M, const Subgroup& H) {
  if (!H.parent().same_as(M.group())) raise(ErrorKind::NotASubgroup, "subgroup of a different group");
  std::vector<FpMatrix> gens;
  for (ElemId g : H.generators()) gens.push_back(M.matrix(g));
  return ModuleAction::certify(H.as_group(), M.p(), M.dim(), std::move(gens));
}

SemidirectResult semidirect_perm_group(const ModuleAction& M, std::size_t element_bound) {
  const unsigned p = M.p();
  const std::size_t d = M.dim();
  const std::uint64_t nv = checked_power(p, d, 65535, "semidirect product");
  const bool faithful = M.is_faithful();
  const std::size_t extra = faithful ? 0 : M.group().degree();
  const std::size_t degree = nv + extra;
  if (degree > 65535) raise(ErrorKind::BoundExceeded, "semidirect product degree exceeds 65535");
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Point> img(degree);
    for (std::uint64_t x = 0; x < nv; ++x) {
      FpVector v = vector_from_index(x, p, d);
      v[i] = static_cast<Residue>((v[i] + 1) % p);
      img[x] = static_cast<Point>(vector_index(v, p));
    }
    for (std::size_t k = 0; k < extra; ++k) img[nv + k] = static_cast<Point>(nv + k);
    gens.emplace_back(std::move(img));
  }
  for (std::size_t s = 0; s < M.generator_matrices().size(); ++s) {
    std::vector<Point> img(degree);
    for (std::uint64_t x = 0; x < nv; ++x) {
      img[x] = static_cast<Point>(vector_index(vec_mul(vector_from_index(x, p, d), M.generator_matrices()[s]), p));
    }
    const auto& g = M.group().generators()[s];
    for (std::size_t k = 0; k < extra; ++k) img[nv + k] = static_cast<Point>(nv + g[static_cast<Point>(k)]);
    gens.emplace_back(std::move(img));
  }
  auto G = FiniteGroup::from_generators(std::move(gens), degree, element_bound);
  if (G.order() != nv * M.group().order()) {
    raise(ErrorKind::InvalidAction, "semidirect product has unexpected order " + std::to_string(G.order()));
  }
  return {std::move(G), !faithful};
}

std::uint64_t matrix_group_order(const std::vector<FpMatrix>& mats, std::size_t element_bound) {
  if (mats.empty()) return 1;
  for (const auto& m : mats) {
    check_same_field(m, mats.front());
    if (!m.is_invertible()) raise(ErrorKind::SingularMatrix, "matrix " + m.to_string() + " is singular");
  }
  std::unordered_set<FpMatrix, FpMatrixHash> seen;
  std::vector<FpMatrix> queue{FpMatrix::identity(mats.front().p(), mats.front().dim())};
  seen.insert(queue.front());
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : mats) {
      FpMatrix x = queue[i] * g;
      if (seen.insert(x).second) {
        if (seen.size() > element_bound) {
          raise(ErrorKind::BoundExceeded, "matrix group exceeds " + std::to_string(element_bound) + " elements");
        }
        queue.push_back(std::move(x));
      }
    }
  }
  return seen.size();
}

ModuleAction permutation_module(const FiniteGroup& G, unsigned p) {
  std::vector<FpMatrix> gens;
  for (const auto& g : G.generators()) {
    FpMatrix m(p, G.degree());
    for (std::size_t i = 0; i < G.degree(); ++i) m.set(i, g[static_cast<Point>(i)], 1);
    gens.push_back(std::move(m));
  }
  return ModuleAction::certify(G, p, G.degree(), std::move(gens));
}

ModuleAction direct_sum(const ModuleAction& A, const ModuleAction& B) {
  check_same_group(A, B);
  const std::size_t a = A.dim(), b = B.dim();
  std::vector<FpMatrix> gens;
  for (std::size_t s = 0; s < A.generator_matrices().size(); ++s) {
    FpMatrix m(A.p(), a + b);
    const auto& X = A.generator_matrices()[s];
    const auto& Y = B.generator_matrices()[s];
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < a; ++j) m.set(i, j, X(i, j));
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < b; ++j) m.set(a + i, a + j, Y(i, j));
    gens.push_back(std::move(m));
  }
  return ModuleAction::certify(A.group(), A.p(), a + b, std::move(gens));
}

ConjugationModule conjugation_module(const Subgroup& V, const Subgroup& S) {
  const auto& G = V.parent();
  if (!S.parent().same_as(G)) raise(ErrorKind::NotASubgroup, "subgroups of different groups");
  unsigned p = 2;
  if (!V.is_trivial()) {
    const auto primes = nt::prime_divisors(V.order());
    if (primes.size() != 1) raise(ErrorKind::KindPreconditionViolated, "V is not a p-group");
    p = static_cast<unsigned>(primes.front());
  }
  for (ElemId v : V.elements()) {
    if (G.element_order(v) > p) raise(ErrorKind::KindPreconditionViolated, "V is not elementary abelian");
    for (ElemId w : V.generators())
      if (!G.commute(v, w)) raise(ErrorKind::KindPreconditionViolated, "V is not abelian");
  }
  // Greedy basis; coordinates of every element recorded as the span grows.
  std::vector<ElemId> basis;
  std::map<ElemId, std::vector<unsigned>> coords{{FiniteGroup::kIdentity, {}}};
  for (ElemId v : V.elements()) {
    if (coords.count(v)) continue;
    basis.push_back(v);
    std::vector<std::pair<ElemId, std::vector<unsigned>>> added;
    for (auto& [e, c] : coords) {
      ElemId x = e;
      for (unsigned k = 1; k < p; ++k) {
        x = G.mul(x, v);
        auto cc = c;
        cc.resize(basis.size(), 0);
        cc.back() = k;
        added.emplace_back(x, std::move(cc));
      }
    }
    for (auto& [e, c] : coords) c.resize(basis.size(), 0);
    for (auto& [e, c] : added) coords.emplace(e, std::move(c));
  }
  const std::size_t d = basis.size();
  for (ElemId s : S.generators())
    for (ElemId b : basis)
      if (!V.contains(G.conj(b, s))) raise(ErrorKind::KindPreconditionViolated, "S does not normalize V");
  std::vector<FpMatrix> gens;
  for (ElemId s : S.generators()) {
    FpMatrix m(p, d);
    for (std::size_t i = 0; i < d; ++i) {
      const auto& c = coords.at(G.conj(basis[i], s));
      for (std::size_t j = 0; j < d; ++j) m.set(i, j, c[j]);
    }
    gens.push_back(std::move(m));
  }
  return {ModuleAction::certify(S.as_group(), p, d, std::move(gens)), std::move(basis)};
}

}  // namespace cutgk
