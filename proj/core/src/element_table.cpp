#include "jl/element_table.hpp"

#include "jl/error.hpp"

namespace jl {

ElementIndex::ElementIndex(const PermGroup& g, std::uint64_t cap)
    : group_(g), elems_(g.elements(cap)) {
  ids_.reserve(elems_.size() * 2);
  for (std::size_t i = 0; i < elems_.size(); ++i)
    ids_.emplace(elems_[i], static_cast<std::uint32_t>(i));
}

std::uint32_t ElementIndex::id(const Permutation& p) const {
  auto it = ids_.find(p);
  if (it == ids_.end()) throw Error("element " + p.to_string() + " is not in the group");
  return it->second;
}

std::vector<Permutation> ElementIndex::to_permutations(const std::vector<std::uint32_t>& ids) const {
  std::vector<Permutation> out;
  out.reserve(ids.size());
  for (auto i : ids) out.push_back(elems_[i]);
  return out;
}

ElementTable::ElementTable(const PermGroup& g, std::uint64_t cap) : ElementIndex(g, cap) {
  std::size_t n = size();
  if (n > 65535) throw CapExceeded("Cayley table limited to 65535 elements");
  mul_.resize(n * n);
  inv_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::uint32_t c = id(compose(element(static_cast<std::uint32_t>(a)),
                                   element(static_cast<std::uint32_t>(b))));
      mul_[a * n + b] = static_cast<std::uint16_t>(c);
      if (c == 0) inv_[a] = static_cast<std::uint32_t>(b);
    }
  }
}

std::vector<std::uint32_t> ElementTable::generator_ids() const {
  std::vector<std::uint32_t> out;
  for (const Permutation& g : group().generators()) out.push_back(id(g));
  return out;
}

}  // namespace jl
