#include "jl/jordan.hpp"

#include <algorithm>
#include <chrono>

#include "jl/error.hpp"
#include "jl/homomorphism.hpp"
#include "jl/structure.hpp"

namespace jl {

const char* to_string(Method m) noexcept {
  switch (m) {
    case Method::FullEnumeration: return "full-enumeration";
    case Method::SocleShortcut: return "socle-shortcut";
    case Method::NormalSweep: return "normal-sweep";
    case Method::BoundOnly: return "bound-only";
  }
  return "?";
}

namespace {

std::vector<Permutation> nontrivial_or_identity(std::vector<Permutation> gens,
                                                const PermGroup& g) {
  std::erase_if(gens, [](const Permutation& p) { return p.is_identity(); });
  if (gens.empty()) gens.push_back(g.identity());
  return gens;
}

// Largest record in `cands` (already sorted by descending order, then id)
// contained in h, optionally normal in h.
std::optional<std::uint32_t> largest_inside(const SubgroupLattice& lat, std::uint32_t h,
                                            const std::vector<std::uint32_t>& cands,
                                            bool need_normal) {
  const ElementTable& t = lat.table();
  const SubgroupRecord& H = lat.record(h);
  for (std::uint32_t k : cands) {
    const SubgroupRecord& K = lat.record(k);
    if (K.order > H.order || H.order % K.order != 0) continue;
    if (!K.members.subset_of(H.members)) continue;
    if (need_normal) {
      bool normal = true;
      for (std::uint32_t x : H.generators) {
        for (std::uint32_t y : K.generators)
          if (!K.members.contains(t.conj(x, y))) {
            normal = false;
            break;
          }
        if (!normal) break;
      }
      if (!normal) continue;
    }
    return k;
  }
  return std::nullopt;
}

ConstantWitness make_witness(const SubgroupLattice& lat, std::uint32_t h, std::uint32_t k) {
  const PermGroup& g = lat.parent();
  return {nontrivial_or_identity(lat.generators_of(h), g), lat.record(h).order,
          nontrivial_or_identity(lat.generators_of(k), g), lat.record(k).order};
}

}  // namespace

IndexWitness nu(const PermGroup& g, const Limits& limits) {
  if (g.is_abelian()) return {1, g.generators()};
  if (g.order() > limits.element_cap)
    throw CapExceeded("nu: |G| = " + std::to_string(g.order()) + " exceeds the element cap");
  auto mins = minimal_normal_subgroups(g, limits);
  if (std::none_of(mins.begin(), mins.end(), [](const auto& m) { return m.is_abelian; }))
    return {g.order(), {g.identity()}};
  NormalSubgroupList normals = normal_subgroups(g, limits);
  const SubgroupRecord* best = nullptr;
  for (const SubgroupRecord& r : normals.records)
    if (r.is_abelian && (!best || r.order > best->order)) best = &r;
  return {g.order() / best->order,
          nontrivial_or_identity(normals.index->to_permutations(best->generators), g)};
}

IndexWitness abar_index(const PermGroup& g, const Limits& limits) {
  AbelianWitness a = max_abelian_subgroup(g, limits);
  return {g.order() / a.order, nontrivial_or_identity(a.generators, g)};
}

LatticeConstants lattice_constants(const SubgroupLattice& lat, const Limits& limits) {
  std::vector<std::uint32_t> abelian;
  for (const SubgroupRecord& r : lat.records())
    if (r.is_abelian) abelian.push_back(r.id);
  std::stable_sort(abelian.begin(), abelian.end(), [&](std::uint32_t a, std::uint32_t b) {
    return lat.record(a).order > lat.record(b).order;
  });

  struct ClassValue {
    std::uint64_t nu = 1, abar = 1;
  };
  std::vector<ClassValue> values(lat.classes().size());
  for (std::size_t c = 0; c < lat.classes().size(); ++c) {
    limits.deadline.check("Jordan constant scan");
    std::uint32_t rep = lat.classes()[c].front();
    std::uint64_t order = lat.record(rep).order;
    auto n = largest_inside(lat, rep, abelian, true);
    auto a = largest_inside(lat, rep, abelian, false);
    values[c] = {order / lat.record(*n).order, order / lat.record(*a).order};
  }

  // Attaining subgroup: largest order, then least element-id set, i.e. the
  // smallest record id among the largest attaining classes.
  auto pick = [&](auto field) {
    std::uint64_t best = 0;
    for (const ClassValue& v : values) best = std::max(best, field(v));
    std::optional<std::uint32_t> chosen;
    for (std::size_t c = 0; c < values.size(); ++c) {
      if (field(values[c]) != best) continue;
      std::uint32_t m = *std::min_element(lat.classes()[c].begin(), lat.classes()[c].end());
      if (!chosen || lat.record(m).order > lat.record(*chosen).order ||
          (lat.record(m).order == lat.record(*chosen).order && m < *chosen))
        chosen = m;
    }
    return *chosen;
  };
  std::uint32_t hj = pick([](const ClassValue& v) { return v.nu; });
  std::uint32_t hb = pick([](const ClassValue& v) { return v.abar; });

  LatticeConstants out;
  out.J = make_witness(lat, hj, *largest_inside(lat, hj, abelian, true));
  out.Jbar = make_witness(lat, hb, *largest_inside(lat, hb, abelian, false));
  const ClassValue& top = values[lat.class_of(lat.full_id())];
  out.nu_top = top.nu;
  out.abar_top = top.abar;
  return out;
}

JordanReport analyze(const PermGroup& g, const Limits& limits, std::string label) {
  auto start = std::chrono::steady_clock::now();
  JordanReport r;
  r.label = std::move(label);
  r.order = g.order();
  r.degree = g.degree();
  r.J = {1, r.order};
  r.Jbar = {1, r.order};
  // abar(H) <= abar(G) for H <= G, so Jbar = abar without the lattice.
  auto set_jbar_from_abar = [&] {
    if (!r.abar) {
      r.Jbar.upper = r.J.upper;
      return;
    }
    r.Jbar = Bound::of(r.abar->index);
    r.Jbar_witness = ConstantWitness{g.generators(), r.order, r.abar->subgroup, r.order / r.abar->index};
  };
  auto finish = [&] {
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  };

  if (r.order <= limits.element_cap) {
    try {
      r.abar = abar_index(g, limits);
      r.Jbar.lower = r.abar->index;
    } catch (const Timeout& e) {
      r.timed_out = true;
      r.notes.push_back(e.what());
    }
  } else {
    r.notes.push_back("abar not computed: |G| exceeds the element cap");
  }

  if (r.order <= limits.order_cap && !r.timed_out) {
    try {
      SubgroupLattice lat = all_subgroups(g, limits);
      LatticeConstants lc = lattice_constants(lat, limits);
      r.subgroup_count = lat.size();
      r.class_count = lat.classes().size();
      r.J = Bound::of(lc.J.subgroup_order / lc.J.abelian_order);
      r.Jbar = Bound::of(lc.Jbar.subgroup_order / lc.Jbar.abelian_order);
      r.J_witness = lc.J;
      r.Jbar_witness = lc.Jbar;
      r.method = Method::FullEnumeration;
      // nu(G) comes with its own witness so it is recomputed on the full group.
      std::vector<std::uint32_t> abelian;
      for (const SubgroupRecord& rec : lat.records())
        if (rec.is_abelian && rec.is_normal) abelian.push_back(rec.id);
      std::uint32_t best = abelian.front();
      for (std::uint32_t id : abelian)
        if (lat.record(id).order > lat.record(best).order) best = id;
      r.nu = IndexWitness{r.order / lat.record(best).order,
                          nontrivial_or_identity(lat.generators_of(best), g)};
      return finish();
    } catch (const Timeout& e) {
      r.timed_out = true;
      r.notes.push_back(e.what());
    }
  } else if (r.order > limits.order_cap) {
    r.notes.push_back("subgroup lattice skipped: |G| exceeds the order cap");
  }

  if (r.order <= limits.element_cap && !r.timed_out) {
    try {
      auto mins = minimal_normal_subgroups(g, limits);
      for (const auto& m : mins) r.minimal_normal.push_back({m.class_rep, m.group.order(), m.is_abelian});
      bool socle = !mins.empty() &&
                   std::none_of(mins.begin(), mins.end(), [](const auto& m) { return m.is_abelian; });
      if (socle) {
        r.nu = IndexWitness{r.order, {g.identity()}};
        r.J = Bound::of(r.order);
        r.J_witness = ConstantWitness{g.generators(), r.order, {g.identity()}, 1};
        r.method = Method::SocleShortcut;
        set_jbar_from_abar();
        return finish();
      }
      r.nu = nu(g, limits);
      r.J.lower = r.nu->index;
      if (r.abar) {
        r.J = Bound::of(r.nu->index);
        r.J_witness = ConstantWitness{g.generators(), r.order, r.nu->subgroup, r.order / r.nu->index};
        r.method = Method::NormalSweep;
        set_jbar_from_abar();
        return finish();
      }
    } catch (const Timeout& e) {
      r.timed_out = true;
      r.notes.push_back(e.what());
    }
  } else if (r.order > limits.element_cap) {
    r.notes.push_back("nu not computed: |G| exceeds the element cap");
  }
  r.Jbar.upper = r.J.upper;
  r.method = Method::BoundOnly;
  return finish();
}

Bound jordan_constant(const PermGroup& g, const Limits& limits) { return analyze(g, limits).J; }

Bound weak_jordan_constant(const PermGroup& g, const Limits& limits) {
  return analyze(g, limits).Jbar;
}

CDLattice cd_lattice(const SubgroupLattice& lat) {
  const ElementTable& t = lat.table();
  const std::size_t n = t.size();
  std::vector<ElementSet> cent(n, ElementSet(n));
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a; b < n; ++b)
      if (t.commute(a, b)) {
        cent[a].insert(b);
        cent[b].insert(a);
      }

  CDLattice out;
  out.max_measure = 0;
  for (const SubgroupRecord& r : lat.records()) {
    ElementSet c = cent[0];
    for (std::uint32_t x : r.generators) c = c & cent[x];
    std::uint64_t co = c.size();
    std::uint64_t m = r.order * co;
    if (m > out.max_measure) {
      out.max_measure = m;
      out.members.clear();
    }
    if (m == out.max_measure) out.members.push_back({r.id, r.order, co, m});
  }

  std::vector<bool> in(lat.size(), false);
  for (const CDEntry& e : out.members) in[e.record] = true;
  out.closed = true;
  for (const CDEntry& a : out.members)
    for (const CDEntry& b : out.members)
      if (!in[lat.intersection(a.record, b.record)] || !in[lat.join(a.record, b.record)])
        out.closed = false;
  auto smallest = std::min_element(out.members.begin(), out.members.end(),
                                   [](const CDEntry& a, const CDEntry& b) { return a.order < b.order; });
  out.minimum_is_normal = lat.record(smallest->record).is_normal;
  return out;
}

CDLattice cd_lattice(const PermGroup& g, const Limits& limits) {
  return cd_lattice(all_subgroups(g, limits));
}

bool verify_cd_squeeze(const JordanReport& r) {
  if (!r.J.exact() || !r.Jbar.exact()) return false;
  return r.Jbar.lower <= r.J.lower && r.J.lower <= r.Jbar.lower * r.Jbar.lower;
}

namespace {

std::uint64_t exact_J(const PermGroup& g, const Limits& limits) {
  Bound b = jordan_constant(g, limits);
  if (!b.exact()) throw CapExceeded("Jordan constant not certifiable within the caps");
  return b.lower;
}

}  // namespace

MonotonicityCheck verify_monotonicity(const PermGroup& g, const PermGroup& h, const Limits& limits) {
  if (!h.is_subgroup_of(g)) throw Error("monotonicity: H is not a subgroup of G");
  MonotonicityCheck m{exact_J(h, limits), exact_J(g, limits), false};
  m.holds = m.J_small <= m.J_big;
  return m;
}

MonotonicityCheck verify_quotient_monotonicity(const PermGroup& g, const PermGroup& n,
                                               const Limits& limits) {
  Quotient q = quotient(g, n, limits);
  MonotonicityCheck m{exact_J(q.group, limits), exact_J(g, limits), false};
  m.holds = m.J_small <= m.J_big;
  return m;
}

SerreResult verify_serre_lemma(const PermGroup& g, const Limits& limits) {
  ElementIndex idx(g, limits.element_cap);
  const std::size_t n = idx.size();
  for (std::uint32_t hi = 0; hi < n; ++hi) {
    limits.deadline.check("Serre lemma scan");
    const Permutation& h = idx.element(hi);
    ElementSet powers(n);
    for (Permutation p = h;; p = compose(p, h)) {
      powers.insert(idx.id(p));
      if (p.is_identity()) break;
    }
    Permutation hinv = h.inverse();
    for (std::uint32_t gi = 0; gi < n; ++gi) {
      Permutation c = conjugate(idx.element(gi), h);
      if (!powers.contains(idx.id(c))) continue;
      if (c == h || c == hinv) continue;
      return {false, idx.element(gi), h, c};
    }
  }
  return {};
}

EmbeddingSearch faithful_hom_search(const PermGroup& source, const PermGroup& target,
                                    const Limits& limits) {
  if (target.order() % source.order() != 0) return {};
  const auto& gens = source.generators();
  if (gens.size() > 2) throw Error("faithful_hom_search needs a source with at most two generators");
  ElementIndex idx(target, limits.element_cap);
  auto with_order = [&](std::uint64_t ord) {
    std::vector<Permutation> out;
    for (const Permutation& x : idx.elements())
      if (x.order() == ord) out.push_back(x);
    return out;
  };
  auto first = with_order(gens[0].order());
  auto second = gens.size() > 1 ? with_order(gens[1].order()) : std::vector<Permutation>{};
  for (const Permutation& a : first) {
    limits.deadline.check("embedding search");
    if (gens.size() == 1) {
      std::vector<Permutation> im{a};
      if (is_homomorphism(source, im) && PermGroup(im).order() == source.order())
        return {false, im};
      continue;
    }
    for (const Permutation& b : second) {
      std::vector<Permutation> im{a, b};
      if (PermGroup(im).order() != source.order()) continue;
      if (is_homomorphism(source, im)) return {false, im};
    }
  }
  return {};
}

}  // namespace jl
