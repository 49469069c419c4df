#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "jl/perm_group.hpp"

namespace jl {

/// Bitset over the element ids of a parent group.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : words_((universe + 63) / 64, 0) {}

  void insert(std::uint32_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool contains(std::uint32_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool subset_of(const ElementSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  ElementSet operator&(const ElementSet& o) const {
    ElementSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  std::vector<std::uint32_t> ids() const {
    std::vector<std::uint32_t> out;
    for (std::size_t w = 0; w < words_.size(); ++w)
      for (std::uint64_t bits = words_[w]; bits; bits &= bits - 1)
        out.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits)));
    return out;
  }
  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : words_) h = (h ^ w) * 0x100000001b3ull + (h >> 29);
    return static_cast<std::size_t>(h);
  }
  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

/// The elements of a group listed in chain order (identity = id 0) with a
/// reverse lookup. Requires |G| <= cap.
class ElementIndex {
 public:
  ElementIndex(const PermGroup& g, std::uint64_t cap);

  const PermGroup& group() const noexcept { return group_; }
  std::size_t size() const noexcept { return elems_.size(); }
  const Permutation& element(std::uint32_t id) const { return elems_[id]; }
  const std::vector<Permutation>& elements() const noexcept { return elems_; }
  /// Throws when p is not in the group.
  std::uint32_t id(const Permutation& p) const;
  std::vector<Permutation> to_permutations(const std::vector<std::uint32_t>& ids) const;

 private:
  PermGroup group_;
  std::vector<Permutation> elems_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> ids_;
};

/// ElementIndex plus a full Cayley table.
class ElementTable : public ElementIndex {
 public:
  ElementTable(const PermGroup& g, std::uint64_t cap);

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return mul_[static_cast<std::size_t>(a) * size() + b];
  }
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  /// g x g^-1
  std::uint32_t conj(std::uint32_t g, std::uint32_t x) const { return mul(mul(g, x), inv(g)); }
  bool commute(std::uint32_t a, std::uint32_t b) const { return mul(a, b) == mul(b, a); }
  std::vector<std::uint32_t> generator_ids() const;

 private:
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint32_t> inv_;
};

}  // namespace jl
