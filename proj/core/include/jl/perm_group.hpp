#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "jl/permutation.hpp"

namespace jl {

/// One level of a stabilizer chain: the basic orbit of `base` under the
/// pointwise stabilizer of the earlier base points, with a transversal.
struct ChainLevel {
  Point base = 0;
  std::vector<Permutation> generators;
  std::vector<Point> orbit;
  std::vector<int> slot;                // point -> index into orbit / reps, or -1
  std::vector<Permutation> reps;        // reps[k] maps base to orbit[k]
  std::vector<Permutation> reps_inv;
};

/// A finite permutation group given by generators. The base and strong
/// generating set is built eagerly with a deterministic Schreier-Sims (new
/// base points are always the smallest moved point), so a constructed group
/// is immutable and safe to share between threads.
class PermGroup {
 public:
  explicit PermGroup(std::vector<Permutation> generators);
  static PermGroup trivial(std::size_t degree);

  const std::vector<Permutation>& generators() const noexcept { return gens_; }
  std::size_t degree() const noexcept { return degree_; }
  std::uint64_t order() const noexcept { return order_; }
  const std::vector<ChainLevel>& chain() const noexcept { return chain_; }
  std::vector<Point> base() const;
  Permutation identity() const { return Permutation(degree_); }

  /// Throws DegreeMismatch.
  bool contains(const Permutation& p) const;
  bool contains_all(std::span<const Permutation> ps) const;
  bool is_subgroup_of(const PermGroup& other) const;
  bool is_abelian() const;
  bool is_trivial() const noexcept { return order_ == 1; }

  struct SiftResult {
    Permutation residue;
    std::size_t level;  // == chain().size() when every level was passed
  };
  SiftResult sift(Permutation p, std::size_t from_level = 0) const;

  /// Visits every element in chain order: u_0 ∘ u_1 ∘ ... with the identity first.
  template <class F>
  void for_each_element(F&& f) const {
    Permutation acc = identity();
    visit(0, acc, f);
  }
  /// Throws CapExceeded when order() > cap.
  std::vector<Permutation> elements(std::uint64_t cap) const;
  Permutation random_element(std::mt19937_64& rng) const;

  friend bool operator==(const PermGroup& a, const PermGroup& b);

 private:
  template <class F>
  void visit(std::size_t level, const Permutation& acc, F& f) const {
    if (level == chain_.size()) {
      f(acc);
      return;
    }
    for (const Permutation& u : chain_[level].reps) visit(level + 1, compose(acc, u), f);
  }

  void build();

  std::vector<Permutation> gens_;
  std::size_t degree_ = 0;
  std::vector<ChainLevel> chain_;
  std::uint64_t order_ = 1;
};

}  // namespace jl
