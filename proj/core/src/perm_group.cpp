#include "jl/perm_group.hpp"

#include <algorithm>

#include "jl/error.hpp"

namespace jl {

namespace {

void compute_orbit(ChainLevel& lvl, std::size_t degree) {
  lvl.orbit.assign(1, lvl.base);
  lvl.slot.assign(degree, -1);
  lvl.reps.assign(1, Permutation(degree));
  lvl.reps_inv.assign(1, Permutation(degree));
  lvl.slot[lvl.base] = 0;
  for (std::size_t k = 0; k < lvl.orbit.size(); ++k) {
    for (const Permutation& s : lvl.generators) {
      Point img = s(lvl.orbit[k]);
      if (lvl.slot[img] >= 0) continue;
      lvl.slot[img] = static_cast<int>(lvl.orbit.size());
      lvl.orbit.push_back(img);
      Permutation rep = compose(s, lvl.reps[k]);
      lvl.reps_inv.push_back(rep.inverse());
      lvl.reps.push_back(std::move(rep));
    }
  }
}

bool fixes_all(const Permutation& p, const std::vector<ChainLevel>& chain, std::size_t upto) {
  for (std::size_t i = 0; i < upto; ++i)
    if (p(chain[i].base) != chain[i].base) return false;
  return true;
}

}  // namespace

PermGroup::PermGroup(std::vector<Permutation> generators) : gens_(std::move(generators)) {
  if (gens_.empty()) throw Error("a group needs at least one generator");
  degree_ = gens_.front().degree();
  if (degree_ == 0) throw Error("degree must be positive");
  for (const Permutation& g : gens_)
    if (g.degree() != degree_) throw DegreeMismatch("generators have different degrees");
  build();
}

PermGroup PermGroup::trivial(std::size_t degree) { return PermGroup({Permutation(degree)}); }

void PermGroup::build() {
  std::vector<Permutation> strong;
  for (const Permutation& g : gens_)
    if (!g.is_identity() && std::find(strong.begin(), strong.end(), g) == strong.end())
      strong.push_back(g);

  for (const Permutation& g : strong) {
    if (fixes_all(g, chain_, chain_.size())) {
      ChainLevel lvl;
      lvl.base = *g.smallest_moved_point();
      chain_.push_back(std::move(lvl));
    }
  }
  for (std::size_t i = 0; i < chain_.size(); ++i) {
    for (const Permutation& g : strong)
      if (fixes_all(g, chain_, i)) chain_[i].generators.push_back(g);
    compute_orbit(chain_[i], degree_);
  }

  // Classic Schreier-Sims: verify each level top-down, descending into the
  // level where a non-sifting Schreier generator got stuck.
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(chain_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    ChainLevel& lvl = chain_[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < lvl.orbit.size() && !restarted; ++k) {
      for (std::size_t s = 0; s < lvl.generators.size(); ++s) {
        const Permutation& gen = lvl.generators[s];
        Point beta = lvl.orbit[k];
        const Permutation& target_inv = lvl.reps_inv[lvl.slot[gen(beta)]];
        Permutation schreier = compose(target_inv, compose(gen, lvl.reps[k]));
        if (schreier.is_identity()) continue;
        auto [h, j] = sift(std::move(schreier), static_cast<std::size_t>(i) + 1);
        if (h.is_identity()) continue;
        if (j == chain_.size()) {
          ChainLevel fresh;
          fresh.base = *h.smallest_moved_point();
          chain_.push_back(std::move(fresh));
        }
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
          chain_[l].generators.push_back(h);
          compute_orbit(chain_[l], degree_);
        }
        i = static_cast<std::ptrdiff_t>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }

  order_ = 1;
  for (const ChainLevel& lvl : chain_) {
    if (__builtin_mul_overflow(order_, lvl.orbit.size(), &order_))
      throw CapExceeded("group order exceeds 64-bit range");
  }
}

PermGroup::SiftResult PermGroup::sift(Permutation p, std::size_t from_level) const {
  for (std::size_t j = from_level; j < chain_.size(); ++j) {
    const ChainLevel& lvl = chain_[j];
    int slot = lvl.slot.empty() ? -1 : lvl.slot[p(lvl.base)];
    if (slot < 0) return {std::move(p), j};
    if (slot > 0) p = compose(lvl.reps_inv[slot], p);
  }
  return {std::move(p), chain_.size()};
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (const ChainLevel& lvl : chain_) b.push_back(lvl.base);
  return b;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_)
    throw DegreeMismatch("membership test with degree " + std::to_string(p.degree()) +
                         " in a group of degree " + std::to_string(degree_));
  return sift(p).residue.is_identity();
}

bool PermGroup::contains_all(std::span<const Permutation> ps) const {
  return std::all_of(ps.begin(), ps.end(), [&](const Permutation& p) { return contains(p); });
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  return degree_ == other.degree_ && other.order_ % order_ == 0 && other.contains_all(gens_);
}

bool PermGroup::is_abelian() const {
  for (std::size_t a = 0; a < gens_.size(); ++a)
    for (std::size_t b = a + 1; b < gens_.size(); ++b)
      if (!commute(gens_[a], gens_[b])) return false;
  return true;
}

std::vector<Permutation> PermGroup::elements(std::uint64_t cap) const {
  if (order_ > cap)
    throw CapExceeded("uncertified: group of order " + std::to_string(order_) +
                      " exceeds the element cap " + std::to_string(cap));
  std::vector<Permutation> out;
  out.reserve(order_);
  for_each_element([&](const Permutation& p) { out.push_back(p); });
  return out;
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
  Permutation acc = identity();
  for (const ChainLevel& lvl : chain_) {
    std::uniform_int_distribution<std::size_t> pick(0, lvl.reps.size() - 1);
    acc = compose(acc, lvl.reps[pick(rng)]);
  }
  return acc;
}

bool operator==(const PermGroup& a, const PermGroup& b) {
  return a.degree_ == b.degree_ && a.order_ == b.order_ && b.contains_all(a.gens_);
}

}  // namespace jl
