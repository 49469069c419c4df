#include "naive.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <unordered_map>

namespace oracle {

namespace {

Perm compose(const Perm& a, const Perm& b) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

struct BitsHash {
  std::size_t operator()(const Bits& b) const {
    std::size_t h = 1469598103934665603ull;
    for (auto w : b) h = (h ^ w) * 1099511628211ull;
    return h;
  }
};

bool has(const Bits& b, std::uint32_t i) { return (b[i >> 6] >> (i & 63)) & 1; }
void put(Bits& b, std::uint32_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

bool subset(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

std::vector<std::uint32_t> inverses(const Group& g) {
  std::vector<std::uint32_t> inv(g.size());
  for (std::uint32_t a = 0; a < g.size(); ++a)
    for (std::uint32_t b = 0; b < g.size(); ++b)
      if (g.mul[a][b] == g.identity) inv[a] = b;
  return inv;
}

Subgroup generated(const Group& g, const std::vector<std::uint32_t>& gens) {
  Subgroup s;
  s.bits.assign((g.size() + 63) / 64, 0);
  std::deque<std::uint32_t> queue{g.identity};
  put(s.bits, g.identity);
  while (!queue.empty()) {
    std::uint32_t x = queue.front();
    queue.pop_front();
    s.members.push_back(x);
    for (std::uint32_t t : gens) {
      std::uint32_t y = g.mul[x][t];
      if (!has(s.bits, y)) {
        put(s.bits, y);
        queue.push_back(y);
      }
    }
  }
  std::sort(s.members.begin(), s.members.end());
  s.abelian = true;
  for (std::uint32_t a : s.members) {
    for (std::uint32_t b : s.members)
      if (g.mul[a][b] != g.mul[b][a]) {
        s.abelian = false;
        break;
      }
    if (!s.abelian) break;
  }
  return s;
}

}  // namespace

std::uint32_t Group::index(const Perm& p) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), p);
  return static_cast<std::uint32_t>(it - elements.begin());
}

Perm images(const jl::Permutation& p) {
  Perm out(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i) out[i] = static_cast<std::uint8_t>(p(static_cast<jl::Point>(i)));
  return out;
}

Group close(const std::vector<Perm>& gens, std::size_t degree) {
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen{id};
  std::deque<Perm> queue{id};
  while (!queue.empty()) {
    Perm x = queue.front();
    queue.pop_front();
    for (const Perm& s : gens) {
      Perm y = compose(x, s);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  Group g;
  g.elements.assign(seen.begin(), seen.end());
  g.identity = g.index(id);
  g.mul.assign(g.size(), std::vector<std::uint32_t>(g.size()));
  for (std::uint32_t a = 0; a < g.size(); ++a)
    for (std::uint32_t b = 0; b < g.size(); ++b) g.mul[a][b] = g.index(compose(g.elements[a], g.elements[b]));
  return g;
}

Group close(const jl::PermGroup& g) {
  std::vector<Perm> gens;
  for (const jl::Permutation& p : g.generators()) gens.push_back(images(p));
  return close(gens, g.degree());
}

std::vector<Subgroup> subgroups(const Group& g) {
  std::vector<Subgroup> found{generated(g, {})};
  std::vector<std::vector<std::uint32_t>> gens{{}};
  std::unordered_map<Bits, std::size_t, BitsHash> index{{found[0].bits, 0}};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::uint32_t x = 0; x < g.size(); ++x) {
      if (has(found[i].bits, x)) continue;
      std::vector<std::uint32_t> gx = gens[i];
      gx.push_back(x);
      Subgroup k = generated(g, gx);
      if (index.count(k.bits)) continue;
      index.emplace(k.bits, found.size());
      found.push_back(std::move(k));
      gens.push_back(std::move(gx));
    }
  }
  return found;
}

std::set<std::set<Perm>> as_sets(const Group& g, const std::vector<Subgroup>& subs) {
  std::set<std::set<Perm>> out;
  for (const Subgroup& s : subs) {
    std::set<Perm> e;
    for (std::uint32_t m : s.members) e.insert(g.elements[m]);
    out.insert(std::move(e));
  }
  return out;
}

bool is_normal_in(const Group& g, const Subgroup& k, const Subgroup& h) {
  auto inv = inverses(g);
  for (std::uint32_t x : h.members)
    for (std::uint32_t y : k.members)
      if (!has(k.bits, g.mul[g.mul[x][y]][inv[x]])) return false;
  return true;
}

std::size_t centralizer_order(const Group& g, const Subgroup& h) {
  std::size_t n = 0;
  for (std::uint32_t x = 0; x < g.size(); ++x) {
    bool central = true;
    for (std::uint32_t y : h.members)
      if (g.mul[x][y] != g.mul[y][x]) {
        central = false;
        break;
      }
    n += central;
  }
  return n;
}

Constants constants(const Group& g) {
  auto subs = subgroups(g);
  auto inv = inverses(g);
  Constants c;
  c.subgroup_count = subs.size();

  std::vector<const Subgroup*> abelian;
  for (const Subgroup& s : subs)
    if (s.abelian) abelian.push_back(&s);
  std::stable_sort(abelian.begin(), abelian.end(),
                   [](const Subgroup* a, const Subgroup* b) { return a->order() > b->order(); });

  auto normal_in = [&](const Subgroup& k, const Subgroup& h) {
    for (std::uint32_t x : h.members)
      for (std::uint32_t y : k.members)
        if (!has(k.bits, g.mul[g.mul[x][y]][inv[x]])) return false;
    return true;
  };

  for (const Subgroup& h : subs) {
    std::uint64_t nu = 0, abar = 0;
    for (const Subgroup* k : abelian) {
      if (!subset(k->bits, h.bits)) continue;
      if (!abar) abar = h.order() / k->order();
      if (normal_in(*k, h)) {
        nu = h.order() / k->order();
        break;
      }
    }
    c.J = std::max(c.J, nu);
    c.Jbar = std::max(c.Jbar, abar);
    if (h.order() == g.size()) {
      c.nu = nu;
      c.abar = abar;
    }
    std::uint64_t measure = h.order() * centralizer_order(g, h);
    if (measure > c.cd_max_measure) {
      c.cd_max_measure = measure;
      c.cd_members = 0;
    }
    if (measure == c.cd_max_measure) ++c.cd_members;
  }

  std::unordered_map<Bits, std::size_t, BitsHash> id;
  for (std::size_t i = 0; i < subs.size(); ++i) id.emplace(subs[i].bits, i);
  std::vector<bool> done(subs.size(), false);
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (done[i]) continue;
    ++c.class_count;
    for (std::uint32_t x = 0; x < g.size(); ++x) {
      Bits b(subs[i].bits.size(), 0);
      for (std::uint32_t y : subs[i].members) put(b, g.mul[g.mul[x][y]][inv[x]]);
      done[id.at(b)] = true;
    }
  }
  return c;
}

}  // namespace oracle
