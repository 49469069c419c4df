#pragma once

#include <span>
#include <vector>

#include "jl/homomorphism.hpp"
#include "jl/limits.hpp"
#include "jl/perm_group.hpp"

namespace jl {

/// Subgroup generated greedily from a stream of elements of `degree`.
PermGroup subgroup_from_elements(std::size_t degree, std::span<const Permutation> elements);

/// All x in G commuting with every element of S. Filters the element list
/// when |G| <= element_cap, otherwise runs a pruned backtrack over the chain.
PermGroup centralizer(const PermGroup& g, std::span<const Permutation> s, const Limits& limits = {});
PermGroup center(const PermGroup& g, const Limits& limits = {});
PermGroup normal_closure(const PermGroup& g, std::span<const Permutation> s);
PermGroup derived_subgroup(const PermGroup& g);
bool is_normal(const PermGroup& g, const PermGroup& n);

struct Quotient {
  PermGroup group;
  Homomorphism map;
};

/// Action of G on the cosets of the normal subgroup N.
Quotient quotient(const PermGroup& g, const PermGroup& n, const Limits& limits = {});

PermGroup direct_product(const PermGroup& a, const PermGroup& b);

/// (X × X) ⋊ C2 with the C2 exchanging the two blocks.
PermGroup swap_extension(const PermGroup& x);

/// N ⋊ H where action[i] lists the images of N's generators under the
/// automorphism attached to H's i-th generator. Realized on the elements of N
/// (left translations plus automorphisms); when H does not act faithfully the
/// points of H are appended.
PermGroup semidirect_product(const PermGroup& n, const PermGroup& h,
                             const std::vector<std::vector<Permutation>>& action,
                             std::size_t degree_cap = 64);

/// GL_n(F_p) (or SL_n when `special`) acting on the nonzero vectors of F_p^n.
PermGroup linear_group_model(unsigned n, unsigned p, bool special = false);

}  // namespace jl
