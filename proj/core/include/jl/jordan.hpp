#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jl/limits.hpp"
#include "jl/perm_group.hpp"
#include "jl/subgroups.hpp"

namespace jl {

/// NormalSweep: no lattice, but nu(G) and abar(G) are known. Both are
/// monotone under subgroups ([H : H∩A] <= [G : A]), so J = nu and Jbar = abar.
enum class Method { FullEnumeration, SocleShortcut, NormalSweep, BoundOnly };

const char* to_string(Method m) noexcept;

/// Closed interval of certified values; exact when both ends agree.
struct Bound {
  std::uint64_t lower = 1;
  std::uint64_t upper = 1;
  bool exact() const noexcept { return lower == upper; }
  static Bound of(std::uint64_t v) noexcept { return {v, v}; }
};

struct IndexWitness {
  std::uint64_t index = 1;
  std::vector<Permutation> subgroup;  // generators of the attaining subgroup
};

/// A subgroup H of G together with the abelian subgroup realising its index.
struct ConstantWitness {
  std::vector<Permutation> subgroup;
  std::uint64_t subgroup_order = 1;
  std::vector<Permutation> abelian;
  std::uint64_t abelian_order = 1;
};

struct ShortcutEntry {
  Permutation class_rep;
  std::uint64_t order = 1;
  bool is_abelian = false;
};

struct JordanReport {
  std::string label;
  std::uint64_t order = 1;
  std::size_t degree = 0;
  std::optional<IndexWitness> nu;
  std::optional<IndexWitness> abar;
  Bound J;
  Bound Jbar;
  std::optional<ConstantWitness> J_witness;
  std::optional<ConstantWitness> Jbar_witness;
  Method method = Method::BoundOnly;
  std::vector<ShortcutEntry> minimal_normal;  // socle certificate, when used
  std::optional<std::size_t> subgroup_count;
  std::optional<std::size_t> class_count;
  bool timed_out = false;
  std::vector<std::string> notes;
  double seconds = 0;
};

/// Minimal index of a normal abelian subgroup; exact whenever it returns.
/// Uses the lattice below order_cap, the socle shortcut or the normal
/// subgroup sweep below element_cap, and throws CapExceeded above that.
IndexWitness nu(const PermGroup& g, const Limits& limits = {});
IndexWitness abar_index(const PermGroup& g, const Limits& limits = {});

/// Exact constants from a complete lattice.
struct LatticeConstants {
  ConstantWitness J;
  ConstantWitness Jbar;
  std::uint64_t nu_top = 1;    // nu of the full group
  std::uint64_t abar_top = 1;  // abar of the full group
};
LatticeConstants lattice_constants(const SubgroupLattice& lattice, const Limits& limits = {});

Bound jordan_constant(const PermGroup& g, const Limits& limits = {});
Bound weak_jordan_constant(const PermGroup& g, const Limits& limits = {});

/// Full analysis with method selection. Timeouts and caps degrade the
/// report to bound-only; they are recorded in `notes`, never hidden.
JordanReport analyze(const PermGroup& g, const Limits& limits = {}, std::string label = {});

struct CDEntry {
  std::uint32_t record = 0;
  std::uint64_t order = 1;
  std::uint64_t centralizer_order = 1;
  std::uint64_t measure = 1;
};
struct CDLattice {
  std::uint64_t max_measure = 1;
  std::vector<CDEntry> members;  // sorted by record id
  bool closed = false;           // under intersection and join
  bool minimum_is_normal = false;
};
/// Subgroups maximizing |H|·|C_G(H)|.
CDLattice cd_lattice(const SubgroupLattice& lattice);
CDLattice cd_lattice(const PermGroup& g, const Limits& limits = {});

/// Jbar <= J <= Jbar^2; false when either constant is only bounded.
bool verify_cd_squeeze(const JordanReport& r);

struct MonotonicityCheck {
  std::uint64_t J_small = 1;
  std::uint64_t J_big = 1;
  bool holds = false;
};
/// J(H) <= J(G) for H <= G.
MonotonicityCheck verify_monotonicity(const PermGroup& g, const PermGroup& h,
                                      const Limits& limits = {});
/// J(G/N) <= J(G) for N normal in G.
MonotonicityCheck verify_quotient_monotonicity(const PermGroup& g, const PermGroup& n,
                                               const Limits& limits = {});

struct SerreResult {
  bool holds = true;
  std::optional<Permutation> g;
  std::optional<Permutation> h;
  std::optional<Permutation> conjugate;  // g h g^-1, inside <h> but not h or h^-1
};
/// Every g normalizing <h> conjugates h to h or h^-1.
SerreResult verify_serre_lemma(const PermGroup& g, const Limits& limits = {});

struct EmbeddingSearch {
  bool none = true;
  std::vector<Permutation> images;  // generator images of an embedding when found
};
/// Exhausts generator images (source needs at most two generators).
EmbeddingSearch faithful_hom_search(const PermGroup& source, const PermGroup& target,
                                    const Limits& limits = {});
inline bool no_faithful_hom(const PermGroup& source, const PermGroup& target,
                            const Limits& limits = {}) {
  return faithful_hom_search(source, target, limits).none;
}

}  // namespace jl
