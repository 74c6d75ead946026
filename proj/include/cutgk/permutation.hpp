#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cutgk {

using Point = std::uint16_t;
inline constexpr std::size_t kMaxDegree = 65535;

/// A bijection of {0, ..., degree-1}, stored by its image array.
///
/// Products follow the right-action convention used throughout the library:
/// `(g * h)` applies `g` first, so `x^(gh) = (x^g)^h`.
class Permutation {
 public:
  Permutation() = default;

  /// Throws InvalidArgument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds a permutation from disjoint cycles, e.g. {{0,1,2},{3,4}}.
  static Permutation from_cycles(
      std::size_t degree, std::initializer_list<std::initializer_list<std::size_t>> cycles);
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<std::size_t>>& cycles);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t x) const { return images_[x]; }
  std::span<const Point> images() const noexcept { return images_; }

  Permutation operator*(const Permutation& other) const;
  Permutation inverse() const;
  Permutation pow(long long k) const;

  /// lcm of the cycle lengths.
  std::uint64_t order() const;
  bool is_identity() const;

  std::vector<std::vector<Point>> cycles() const;
  /// Cycle lengths in non-increasing order, fixed points included.
  std::vector<std::size_t> cycle_type() const;

  /// Cycle notation with 0-based points; "()" for the identity.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// FNV-style hash over an image array; shared by the element index.
std::uint64_t hash_images(std::span<const Point> images) noexcept;

}  // namespace cutgk
