#pragma once

// Brute-force reference implementation. Shares nothing with the engine except
// the Permutation type used to hand over generators.

#include <cstdint>
#include <set>
#include <vector>

#include "jl/perm_group.hpp"

namespace oracle {

using Perm = std::vector<std::uint8_t>;

struct Group {
  std::vector<Perm> elements;  // sorted
  std::vector<std::vector<std::uint32_t>> mul;
  std::uint32_t identity = 0;
  std::size_t size() const { return elements.size(); }
  std::uint32_t index(const Perm& p) const;
};

Perm images(const jl::Permutation& p);
Group close(const std::vector<Perm>& gens, std::size_t degree);
Group close(const jl::PermGroup& g);

using Bits = std::vector<std::uint64_t>;

struct Subgroup {
  Bits bits;
  std::vector<std::uint32_t> members;
  bool abelian = false;
  std::size_t order() const { return members.size(); }
};

/// Every subgroup, found as closures of H ∪ {g} starting from the trivial group.
std::vector<Subgroup> subgroups(const Group& g);

/// Elements as permutations, for comparison with other enumerations.
std::set<std::set<Perm>> as_sets(const Group& g, const std::vector<Subgroup>& subs);

struct Constants {
  std::uint64_t nu = 1, abar = 1, J = 1, Jbar = 1;
  std::size_t subgroup_count = 0, class_count = 0;
  std::uint64_t cd_max_measure = 0;
  std::size_t cd_members = 0;
};

/// No shortcuts: every subgroup, every abelian subgroup inside it, normality
/// checked against every element.
Constants constants(const Group& g);

bool is_normal_in(const Group& g, const Subgroup& k, const Subgroup& h);
std::size_t centralizer_order(const Group& g, const Subgroup& h);

}  // namespace oracle
