#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "jl/element_table.hpp"
#include "jl/limits.hpp"
#include "jl/perm_group.hpp"

namespace jl {

struct SubgroupRecord {
  std::uint32_t id = 0;
  std::vector<std::uint32_t> elements;    // sorted ids in the parent's enumeration
  ElementSet members;
  std::uint64_t order = 1;
  std::vector<std::uint32_t> generators;  // generating set found during enumeration
  bool is_abelian = false;
  bool is_normal = false;
};

/// Every subgroup of a small group, sorted by (order, element-id set), with
/// the partition into conjugacy classes. Immutable once built.
class SubgroupLattice {
 public:
  const ElementTable& table() const noexcept { return *table_; }
  const PermGroup& parent() const noexcept { return table_->group(); }
  const std::vector<SubgroupRecord>& records() const noexcept { return records_; }
  const SubgroupRecord& record(std::uint32_t id) const { return records_.at(id); }
  std::size_t size() const noexcept { return records_.size(); }
  std::uint32_t trivial_id() const noexcept { return 0; }
  std::uint32_t full_id() const noexcept { return static_cast<std::uint32_t>(records_.size() - 1); }

  std::optional<std::uint32_t> find(const ElementSet& members) const;
  /// True when record `small` is contained in record `big`.
  bool includes(std::uint32_t big, std::uint32_t small) const;
  std::uint32_t intersection(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t join(std::uint32_t a, std::uint32_t b) const;

  const std::vector<std::vector<std::uint32_t>>& classes() const noexcept { return classes_; }
  std::uint32_t class_of(std::uint32_t id) const { return class_of_.at(id); }

  std::vector<Permutation> generators_of(std::uint32_t id) const;
  PermGroup as_group(std::uint32_t id) const;

 private:
  friend SubgroupLattice all_subgroups(const PermGroup&, const Limits&);

  std::shared_ptr<const ElementTable> table_;
  std::vector<SubgroupRecord> records_;
  std::unordered_map<ElementSet, std::uint32_t, ElementSetHash> by_members_;
  std::vector<std::vector<std::uint32_t>> classes_;
  std::vector<std::uint32_t> class_of_;
};

/// Cyclic subgroups joined breadth-first with cyclic subgroups until closed.
/// Throws CapExceeded ("uncertified") when |G| > limits.order_cap.
SubgroupLattice all_subgroups(const PermGroup& g, const Limits& limits = {});

/// Orbits of the lattice records under conjugation by G.
std::vector<std::vector<std::uint32_t>> subgroup_conjugacy_classes(const SubgroupLattice& lattice);

std::vector<SubgroupRecord> normal_subgroups(const SubgroupLattice& lattice);

struct NormalSubgroupList {
  std::shared_ptr<const ElementIndex> index;
  std::vector<SubgroupRecord> records;  // sorted by (order, element ids)
};
/// Normal subgroups as joins of normal closures of conjugacy class
/// representatives; needs |G| <= element_cap but no lattice.
NormalSubgroupList normal_subgroups(const PermGroup& g, const Limits& limits = {});

/// Conjugacy classes of elements, each sorted, listed by smallest member.
std::vector<std::vector<std::uint32_t>> element_conjugacy_classes(const ElementIndex& index);

struct MinimalNormalSubgroup {
  PermGroup group;
  Permutation class_rep;
  bool is_abelian = false;
};

/// Minimal elements among the normal closures of one element per conjugacy
/// class. Works above the lattice cap (needs |G| <= element_cap).
std::vector<MinimalNormalSubgroup> minimal_normal_subgroups(const PermGroup& g,
                                                            const Limits& limits = {});

struct AbelianWitness {
  std::uint64_t order = 1;
  std::vector<Permutation> generators;
};

/// Largest abelian subgroup, by branch-and-bound over commuting generators.
AbelianWitness max_abelian_subgroup(const PermGroup& g, const Limits& limits = {});
inline std::uint64_t max_abelian_order(const PermGroup& g, const Limits& limits = {}) {
  return max_abelian_subgroup(g, limits).order;
}

}  // namespace jl
