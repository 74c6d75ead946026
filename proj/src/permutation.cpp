#include "cutgk/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cutgk/error.hpp"

namespace cutgk {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.size() > kMaxDegree) raise(ErrorKind::InvalidArgument, "degree too large");
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      raise(ErrorKind::InvalidArgument, "image array is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree > kMaxDegree) raise(ErrorKind::InvalidArgument, "degree too large");
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), Point{0});
  return p;
}

Permutation Permutation::from_cycles(
    std::size_t degree, std::initializer_list<std::initializer_list<std::size_t>> cycles) {
  std::vector<std::vector<std::size_t>> cs;
  for (const auto& c : cycles) cs.emplace_back(c);
  return from_cycles(degree, cs);
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<std::size_t>>& cycles) {
  Permutation p = identity(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      std::size_t x = cycle[i];
      std::size_t y = cycle[(i + 1) % cycle.size()];
      if (x >= degree || y >= degree || used[x])
        raise(ErrorKind::InvalidArgument, "cycles are not disjoint or out of range");
      used[x] = true;
      p.images_[x] = static_cast<Point>(y);
    }
  }
  return p;
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (other.degree() != degree()) raise(ErrorKind::DegreeMismatch, "degree mismatch in product");
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) r.images_[x] = other.images_[images_[x]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x) r.images_[images_[x]] = static_cast<Point>(x);
  return r;
}

Permutation Permutation::pow(long long k) const {
  Permutation r;
  r.images_.resize(images_.size());
  for (const auto& cycle : cycles()) {
    const long long len = static_cast<long long>(cycle.size());
    const long long shift = ((k % len) + len) % len;
    for (long long i = 0; i < len; ++i) r.images_[cycle[i]] = cycle[(i + shift) % len];
  }
  return r;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (std::size_t len : cycle_type()) result = std::lcm(result, static_cast<std::uint64_t>(len));
  return result;
}

bool Permutation::is_identity() const {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x) return false;
  return true;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Point> cycle;
    for (std::size_t x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      cycle.push_back(static_cast<Point>(x));
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lens;
  for (const auto& c : cycles()) lens.push_back(c.size());
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (const auto& c : cycles()) {
    if (c.size() < 2) continue;
    any = true;
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
    os << ')';
  }
  if (!any) os << "()";
  return os.str();
}

std::uint64_t hash_images(std::span<const Point> images) noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point x : images) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h ^ (h >> 29);
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  return static_cast<std::size_t>(hash_images(p.images()));
}

}  // namespace cutgk
