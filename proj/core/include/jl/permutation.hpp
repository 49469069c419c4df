#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace jl {

/// Largest supported permutation degree; images are stored one byte per point.
inline constexpr std::size_t kMaxDegree = 255;

using Point = std::uint32_t;
using Cycle = std::vector<Point>;

/// A bijection of {0, ..., degree-1} stored as a fixed-width image array.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);

  static Permutation from_images(std::span<const Point> images);
  static Permutation from_cycles(std::size_t degree, std::span<const Cycle> cycles);
  static Permutation cycle(std::size_t degree, std::initializer_list<Point> points);
  /// Parses cycle notation such as "(0 1 2)(3 4)"; "()" is the identity.
  static Permutation parse(std::size_t degree, std::string_view text);

  std::size_t degree() const noexcept { return degree_; }
  Point operator()(Point i) const noexcept { return img_[i]; }

  Permutation inverse() const;
  bool is_identity() const noexcept;
  std::optional<Point> smallest_moved_point() const noexcept;
  std::uint64_t order() const;
  std::vector<Cycle> cycles() const;
  std::string to_string() const;
  std::size_t hash() const noexcept;

  /// Copy acting on points [offset, offset+degree) of a set of size `degree`.
  Permutation shifted(std::size_t new_degree, std::size_t offset) const;
  /// Restriction to points [offset, offset+size); the block must be invariant.
  Permutation restricted(std::size_t offset, std::size_t size) const;
  /// Disjoint-union action: `a` on the first block, `b` on the second.
  static Permutation direct_sum(const Permutation& a, const Permutation& b);

  friend bool operator==(const Permutation& a, const Permutation& b) noexcept;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) noexcept;

 private:
  std::array<std::uint8_t, kMaxDegree> img_{};
  std::uint16_t degree_ = 0;

  friend Permutation compose(const Permutation& p, const Permutation& q);
  friend bool commute(const Permutation& a, const Permutation& b) noexcept;
};

/// (p ∘ q)(i) = p(q(i)). Throws DegreeMismatch.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }
bool commute(const Permutation& a, const Permutation& b) noexcept;
/// g x g^-1
Permutation conjugate(const Permutation& g, const Permutation& x);
Permutation power(const Permutation& p, std::int64_t k);
/// a^-1 b^-1 a b
Permutation commutator(const Permutation& a, const Permutation& b);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept { return p.hash(); }
};

}  // namespace jl
