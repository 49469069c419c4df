#include "jl/subgroups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "jl/error.hpp"
#include "jl/structure.hpp"

namespace jl {

namespace {

using Ids = std::vector<std::uint32_t>;

struct Candidate {
  Ids elements;  // discovery order
  ElementSet members;
  Ids generators;
};

// <H, c> as a union of left cosets of H: every element k found so far is
// tested for k*c; a miss brings in the whole coset (k*c)H.
Candidate join_with(const ElementTable& t, const Candidate& h, std::uint32_t c) {
  Candidate k;
  k.elements = h.elements;
  k.members = h.members;
  k.generators = h.generators;
  k.generators.push_back(c);
  for (std::size_t i = 0; i < k.elements.size(); ++i) {
    std::uint32_t y = t.mul(k.elements[i], c);
    if (k.members.contains(y)) continue;
    for (std::uint32_t x : h.elements) {
      std::uint32_t z = t.mul(y, x);
      k.members.insert(z);
      k.elements.push_back(z);
    }
  }
  return k;
}

ElementSet closure(const ElementTable& t, const Ids& gens) {
  ElementSet members(t.size());
  Ids queue{0};
  members.insert(0);
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::uint32_t g : gens) {
      std::uint32_t y = t.mul(queue[i], g);
      if (!members.contains(y)) {
        members.insert(y);
        queue.push_back(y);
      }
    }
  return members;
}

bool ids_commute(const ElementTable& t, const Ids& gens) {
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (!t.commute(gens[a], gens[b])) return false;
  return true;
}

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a), b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<std::vector<std::uint32_t>> group_classes(UnionFind& uf, std::size_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<int> slot(n, -1);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint32_t r = uf.find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[r])].push_back(i);
  }
  return out;
}

}  // namespace

SubgroupLattice all_subgroups(const PermGroup& g, const Limits& limits) {
  if (g.order() > limits.order_cap)
    throw CapExceeded("uncertified: |G| = " + std::to_string(g.order()) +
                      " exceeds the subgroup-lattice order cap " +
                      std::to_string(limits.order_cap) +
                      "; use the socle shortcut or bound-only analysis");
  auto table = std::make_shared<const ElementTable>(g, limits.order_cap);
  const ElementTable& t = *table;
  const std::size_t n = t.size();

  std::vector<Candidate> found;
  std::unordered_map<ElementSet, std::uint32_t, ElementSetHash> seen;
  auto admit = [&](Candidate c) -> bool {
    if (seen.count(c.members)) return false;
    seen.emplace(c.members, static_cast<std::uint32_t>(found.size()));
    found.push_back(std::move(c));
    return true;
  };

  Candidate trivial{{0}, ElementSet(n), {}};
  trivial.members.insert(0);
  admit(trivial);

  // Cyclic seeds; the generator kept is the first element met in chain order.
  Ids cyclic_gens;
  for (std::uint32_t x = 1; x < n; ++x) {
    Candidate c = join_with(t, found[0], x);
    if (admit(std::move(c))) cyclic_gens.push_back(x);
  }

  std::uint64_t steps = 0;
  for (std::size_t i = 1; i < found.size(); ++i) {
    for (std::uint32_t c : cyclic_gens) {
      if ((++steps & 0x3ff) == 0) limits.deadline.check("subgroup enumeration");
      if (found[i].members.contains(c)) continue;
      Candidate k = join_with(t, found[i], c);
      admit(std::move(k));
    }
  }

  for (Candidate& c : found) std::sort(c.elements.begin(), c.elements.end());
  std::vector<std::uint32_t> order(found.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (found[a].elements.size() != found[b].elements.size())
      return found[a].elements.size() < found[b].elements.size();
    return found[a].elements < found[b].elements;
  });

  SubgroupLattice lat;
  lat.table_ = table;
  const Ids ggens = t.generator_ids();
  for (std::uint32_t src : order) {
    SubgroupRecord r;
    r.id = static_cast<std::uint32_t>(lat.records_.size());
    r.elements = std::move(found[src].elements);
    r.members = std::move(found[src].members);
    r.order = r.elements.size();
    r.generators = std::move(found[src].generators);
    r.is_abelian = ids_commute(t, r.generators);
    r.is_normal = true;
    for (std::uint32_t x : r.generators)
      for (std::uint32_t h : ggens)
        if (!r.members.contains(t.conj(h, x))) r.is_normal = false;
    lat.by_members_.emplace(r.members, r.id);
    lat.records_.push_back(std::move(r));
  }
  lat.classes_ = subgroup_conjugacy_classes(lat);
  lat.class_of_.assign(lat.records_.size(), 0);
  for (std::uint32_t c = 0; c < lat.classes_.size(); ++c)
    for (std::uint32_t id : lat.classes_[c]) lat.class_of_[id] = c;
  return lat;
}

std::optional<std::uint32_t> SubgroupLattice::find(const ElementSet& members) const {
  auto it = by_members_.find(members);
  if (it == by_members_.end()) return std::nullopt;
  return it->second;
}

bool SubgroupLattice::includes(std::uint32_t big, std::uint32_t small) const {
  return records_.at(small).members.subset_of(records_.at(big).members);
}

std::uint32_t SubgroupLattice::intersection(std::uint32_t a, std::uint32_t b) const {
  auto id = find(records_.at(a).members & records_.at(b).members);
  if (!id) throw Error("lattice is missing an intersection");
  return *id;
}

std::uint32_t SubgroupLattice::join(std::uint32_t a, std::uint32_t b) const {
  Ids gens = records_.at(a).generators;
  const Ids& more = records_.at(b).generators;
  gens.insert(gens.end(), more.begin(), more.end());
  auto id = find(closure(*table_, gens));
  if (!id) throw Error("lattice is missing a join");
  return *id;
}

std::vector<Permutation> SubgroupLattice::generators_of(std::uint32_t id) const {
  return table_->to_permutations(records_.at(id).generators);
}

PermGroup SubgroupLattice::as_group(std::uint32_t id) const {
  auto gens = generators_of(id);
  if (gens.empty()) return PermGroup::trivial(parent().degree());
  return PermGroup(std::move(gens));
}

std::vector<std::vector<std::uint32_t>> subgroup_conjugacy_classes(const SubgroupLattice& lat) {
  const ElementTable& t = lat.table();
  const Ids ggens = t.generator_ids();
  UnionFind uf(lat.size());
  for (const SubgroupRecord& r : lat.records()) {
    for (std::uint32_t h : ggens) {
      ElementSet image(t.size());
      for (std::uint32_t x : r.elements) image.insert(t.conj(h, x));
      auto other = lat.find(image);
      if (!other) throw Error("conjugate subgroup missing from lattice");
      uf.unite(r.id, *other);
    }
  }
  return group_classes(uf, lat.size());
}

std::vector<SubgroupRecord> normal_subgroups(const SubgroupLattice& lattice) {
  std::vector<SubgroupRecord> out;
  for (const SubgroupRecord& r : lattice.records())
    if (r.is_normal) out.push_back(r);
  return out;
}

std::vector<std::vector<std::uint32_t>> element_conjugacy_classes(const ElementIndex& index) {
  UnionFind uf(index.size());
  const auto& gens = index.group().generators();
  for (std::uint32_t x = 0; x < index.size(); ++x)
    for (const Permutation& h : gens) uf.unite(x, index.id(conjugate(h, index.element(x))));
  return group_classes(uf, index.size());
}

namespace {

std::vector<PermGroup> distinct_closures(const PermGroup& g, const ElementIndex& index,
                                         std::vector<Permutation>* reps_out) {
  std::vector<PermGroup> closures;
  for (const auto& cls : element_conjugacy_classes(index)) {
    const Permutation& rep = index.element(cls.front());
    if (rep.is_identity()) continue;
    PermGroup m = normal_closure(g, std::span<const Permutation>(&rep, 1));
    if (std::find(closures.begin(), closures.end(), m) != closures.end()) continue;
    closures.push_back(std::move(m));
    if (reps_out) reps_out->push_back(rep);
  }
  return closures;
}

}  // namespace

NormalSubgroupList normal_subgroups(const PermGroup& g, const Limits& limits) {
  auto index = std::make_shared<const ElementIndex>(g, limits.element_cap);
  std::vector<PermGroup> normals{PermGroup::trivial(g.degree())};
  for (PermGroup& m : distinct_closures(g, *index, nullptr))
    if (std::find(normals.begin(), normals.end(), m) == normals.end()) normals.push_back(m);
  // Close under products N1 N2.
  for (std::size_t i = 0; i < normals.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      limits.deadline.check("normal subgroup joins");
      if (normals[i].is_subgroup_of(normals[j]) || normals[j].is_subgroup_of(normals[i])) continue;
      std::vector<Permutation> gens = normals[i].generators();
      gens.insert(gens.end(), normals[j].generators().begin(), normals[j].generators().end());
      PermGroup k(std::move(gens));
      if (std::find(normals.begin(), normals.end(), k) == normals.end()) normals.push_back(k);
    }
  }
  NormalSubgroupList out;
  out.index = index;
  for (const PermGroup& m : normals) {
    SubgroupRecord r;
    r.members = ElementSet(index->size());
    m.for_each_element([&](const Permutation& x) {
      std::uint32_t id = index->id(x);
      r.elements.push_back(id);
      r.members.insert(id);
    });
    std::sort(r.elements.begin(), r.elements.end());
    r.order = m.order();
    for (const Permutation& x : m.generators())
      if (!x.is_identity()) r.generators.push_back(index->id(x));
    r.is_abelian = m.is_abelian();
    r.is_normal = true;
    out.records.push_back(std::move(r));
  }
  std::sort(out.records.begin(), out.records.end(), [](const auto& a, const auto& b) {
    if (a.order != b.order) return a.order < b.order;
    return a.elements < b.elements;
  });
  for (std::uint32_t i = 0; i < out.records.size(); ++i) out.records[i].id = i;
  return out;
}

std::vector<MinimalNormalSubgroup> minimal_normal_subgroups(const PermGroup& g,
                                                            const Limits& limits) {
  if (g.is_trivial()) return {};
  ElementIndex index(g, limits.element_cap);
  std::vector<Permutation> reps;
  std::vector<PermGroup> closures = distinct_closures(g, index, &reps);
  std::vector<MinimalNormalSubgroup> out;
  for (std::size_t i = 0; i < closures.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < closures.size() && minimal; ++j)
      if (j != i && closures[j].order() < closures[i].order() &&
          closures[j].is_subgroup_of(closures[i]))
        minimal = false;
    if (minimal) out.push_back({closures[i], reps[i], closures[i].is_abelian()});
  }
  return out;
}

namespace {

class AbelianSearch {
 public:
  AbelianSearch(const ElementIndex& index, const Limits& limits)
      : idx_(index), limits_(limits), n_(index.size()) {
    // One representative (smallest id) per cyclic subgroup.
    is_cyclic_rep_.assign(n_, false);
    order_.assign(n_, 1);
    for (std::uint32_t x = 0; x < n_; ++x) {
      const Permutation& p = idx_.element(x);
      std::uint64_t ord = p.order();
      order_[x] = ord;
      std::uint32_t best = x;
      Permutation q = p;
      for (std::uint64_t k = 2; k < ord; ++k) {
        q = compose(q, p);
        if (std::gcd(k, ord) == 1) best = std::min(best, idx_.id(q));
      }
      is_cyclic_rep_[x] = best == x;
    }
  }

  AbelianWitness run() {
    best_.order = 1;
    best_.generators = {idx_.group().identity()};
    Ids all(n_);
    std::iota(all.begin(), all.end(), 0u);
    Ids trivial{0};
    if (check_abelian_bound(trivial, all, {})) return best_;
    for (const auto& cls : element_conjugacy_classes(idx_)) {
      std::uint32_t r = cls.front();
      if (r == 0) continue;
      Ids gens{r};
      Ids a = extend(trivial, r);
      Ids cent = filter(all, r);
      node(a, cent, gens, -1);
    }
    return best_;
  }

 private:
  Ids extend(const Ids& a, std::uint32_t x) const {
    // <A, x> = { a x^k } when x commutes with A.
    Ids out;
    ElementSet mem(n_);
    Permutation pk = idx_.group().identity();
    for (std::uint64_t k = 0; k < order_[x]; ++k) {
      bool fresh = false;
      for (std::uint32_t y : a) {
        std::uint32_t z = idx_.id(compose(idx_.element(y), pk));
        if (!mem.contains(z)) {
          mem.insert(z);
          out.push_back(z);
          fresh = true;
        }
      }
      if (!fresh) break;
      pk = compose(pk, idx_.element(x));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Ids filter(const Ids& cent, std::uint32_t x) const {
    Ids out;
    const Permutation& p = idx_.element(x);
    for (std::uint32_t y : cent)
      if (commute(p, idx_.element(y))) out.push_back(y);
    return out;
  }

  // Returns true (and records) when the centralizer is itself abelian.
  bool check_abelian_bound(const Ids& a, const Ids& cent, const Ids& gens) {
    (void)a;
    Ids reps;
    for (std::uint32_t y : cent)
      if (is_cyclic_rep_[y]) reps.push_back(y);
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j)
        if (!commute(idx_.element(reps[i]), idx_.element(reps[j]))) return false;
    if (cent.size() > best_.order) {
      best_.order = cent.size();
      Ids chosen = gens;
      Ids span = {0};
      for (std::uint32_t g : chosen) span = extend(span, g);
      for (std::uint32_t y : reps) {
        if (span.size() == cent.size()) break;
        if (std::binary_search(span.begin(), span.end(), y)) continue;
        chosen.push_back(y);
        span = extend(span, y);
      }
      if (chosen.empty()) chosen.push_back(0);
      best_.generators = idx_.to_permutations(chosen);
    }
    return true;
  }

  void node(const Ids& a, const Ids& cent, Ids& gens, std::int64_t last) {
    if ((++steps_ & 0xff) == 0) limits_.deadline.check("maximal abelian search");
    if (cent.size() <= best_.order) return;
    if (check_abelian_bound(a, cent, gens)) return;
    if (cent.size() / 2 <= best_.order) return;
    for (std::uint32_t x : cent) {
      if (static_cast<std::int64_t>(x) <= last || !is_cyclic_rep_[x]) continue;
      if (std::binary_search(a.begin(), a.end(), x)) continue;
      Ids next_cent = filter(cent, x);
      if (next_cent.size() <= best_.order) continue;
      gens.push_back(x);
      node(extend(a, x), next_cent, gens, x);
      gens.pop_back();
      if (cent.size() / 2 <= best_.order) return;
    }
  }

  const ElementIndex& idx_;
  const Limits& limits_;
  std::size_t n_;
  std::vector<bool> is_cyclic_rep_;
  std::vector<std::uint64_t> order_;
  AbelianWitness best_;
  std::uint64_t steps_ = 0;
};

}  // namespace

AbelianWitness max_abelian_subgroup(const PermGroup& g, const Limits& limits) {
  if (g.is_abelian()) return {g.order(), g.generators()};
  ElementIndex index(g, limits.element_cap);
  return AbelianSearch(index, limits).run();
}

}  // namespace jl
