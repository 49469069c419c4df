#include "jl/structure.hpp"

#include <algorithm>
#include <unordered_map>

#include "jl/error.hpp"

namespace jl {

PermGroup subgroup_from_elements(std::size_t degree, std::span<const Permutation> elements) {
  std::vector<Permutation> gens;
  PermGroup current = PermGroup::trivial(degree);
  for (const Permutation& x : elements) {
    if (current.contains(x)) continue;
    gens.push_back(x);
    current = PermGroup(gens);
  }
  return current;
}

namespace {

struct Grower {
  std::vector<Permutation> gens;
  PermGroup current;
  explicit Grower(std::size_t degree) : current(PermGroup::trivial(degree)) {}
  void offer(const Permutation& x) {
    if (current.contains(x)) return;
    gens.push_back(x);
    current = PermGroup(gens);
  }
};

bool commutes_with_all(const Permutation& x, std::span<const Permutation> s) {
  return std::all_of(s.begin(), s.end(), [&](const Permutation& y) { return commute(x, y); });
}

// Depth-first over transversal choices. The prefix u_0 ∘ ... ∘ u_{d-1}
// already fixes the images of the first d base points, which lets us reject
// a branch as soon as some s in S maps one known base point onto another
// inconsistently.
class CentralizerSearch {
 public:
  CentralizerSearch(const PermGroup& g, std::span<const Permutation> s, const Limits& limits)
      : g_(g), s_(s), limits_(limits), grower_(g.degree()), base_(g.base()) {}

  PermGroup run() {
    descend(0, g_.identity());
    return grower_.current;
  }

 private:
  bool consistent(std::size_t depth, const Permutation& prefix) const {
    for (const Permutation& s : s_) {
      for (std::size_t i = 0; i < depth; ++i) {
        Point si = s(base_[i]);
        auto it = std::find(base_.begin(), base_.begin() + depth, si);
        if (it == base_.begin() + depth) continue;
        Point gsi = prefix(*it);
        if (gsi != s(prefix(base_[i]))) return false;
      }
    }
    return true;
  }

  void descend(std::size_t depth, const Permutation& prefix) {
    if ((++steps_ & 0xfff) == 0) limits_.deadline.check("centralizer backtrack");
    if (depth == base_.size()) {
      if (commutes_with_all(prefix, s_)) grower_.offer(prefix);
      return;
    }
    for (const Permutation& u : g_.chain()[depth].reps) {
      Permutation next = compose(prefix, u);
      if (consistent(depth + 1, next)) descend(depth + 1, next);
    }
  }

  const PermGroup& g_;
  std::span<const Permutation> s_;
  const Limits& limits_;
  Grower grower_;
  std::vector<Point> base_;
  std::uint64_t steps_ = 0;
};

}  // namespace

PermGroup centralizer(const PermGroup& g, std::span<const Permutation> s, const Limits& limits) {
  for (const Permutation& x : s)
    if (x.degree() != g.degree()) throw DegreeMismatch("centralizing set has the wrong degree");
  if (g.order() <= limits.element_cap) {
    Grower grower(g.degree());
    g.for_each_element([&](const Permutation& x) {
      if (commutes_with_all(x, s)) grower.offer(x);
    });
    return grower.current;
  }
  return CentralizerSearch(g, s, limits).run();
}

PermGroup center(const PermGroup& g, const Limits& limits) {
  return centralizer(g, g.generators(), limits);
}

PermGroup normal_closure(const PermGroup& g, std::span<const Permutation> s) {
  std::vector<Permutation> gens;
  for (const Permutation& x : s)
    if (!x.is_identity()) gens.push_back(x);
  if (gens.empty()) return PermGroup::trivial(g.degree());
  PermGroup n(gens);
  bool grown = true;
  while (grown) {
    grown = false;
    for (std::size_t i = 0; i < gens.size() && !grown; ++i) {
      for (const Permutation& h : g.generators()) {
        Permutation c = conjugate(h, gens[i]);
        if (n.contains(c)) continue;
        gens.push_back(c);
        n = PermGroup(gens);
        grown = true;
        break;
      }
    }
  }
  return n;
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> comms;
  const auto& gens = g.generators();
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) comms.push_back(commutator(gens[a], gens[b]));
  return normal_closure(g, comms);
}

bool is_normal(const PermGroup& g, const PermGroup& n) {
  for (const Permutation& x : n.generators())
    for (const Permutation& h : g.generators())
      if (!n.contains(conjugate(h, x))) return false;
  return true;
}

Quotient quotient(const PermGroup& g, const PermGroup& n, const Limits& limits) {
  if (!n.is_subgroup_of(g)) throw Error("quotient: N is not a subgroup of G");
  if (!is_normal(g, n)) throw Error("quotient: N is not normal in G");
  std::uint64_t index = g.order() / n.order();
  if (index > kMaxDegree)
    throw CapExceeded("quotient: index " + std::to_string(index) + " exceeds the degree limit");
  std::vector<Permutation> elems = g.elements(limits.element_cap);
  std::vector<Permutation> nelems = n.elements(limits.element_cap);
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> coset_of;
  std::vector<Permutation> reps;
  for (const Permutation& x : elems) {
    if (coset_of.count(x)) continue;
    auto id = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (const Permutation& m : nelems) coset_of.emplace(compose(x, m), id);
  }
  std::vector<Permutation> images;
  for (const Permutation& gen : g.generators()) {
    std::vector<Point> img(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) img[c] = coset_of.at(compose(gen, reps[c]));
    images.push_back(Permutation::from_images(img));
  }
  PermGroup q(images);
  Homomorphism map(g, q, images);
  if (q.order() != index) throw Error("quotient: coset action has the wrong order");
  return {std::move(q), std::move(map)};
}

PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  std::vector<Permutation> gens;
  for (const Permutation& x : a.generators())
    gens.push_back(Permutation::direct_sum(x, b.identity()));
  for (const Permutation& y : b.generators())
    gens.push_back(Permutation::direct_sum(a.identity(), y));
  return PermGroup(std::move(gens));
}

PermGroup swap_extension(const PermGroup& x) {
  PermGroup base = direct_product(x, x);
  std::size_t d = x.degree();
  std::vector<Point> img(2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    img[i] = static_cast<Point>(i + d);
    img[i + d] = static_cast<Point>(i);
  }
  std::vector<Permutation> gens = base.generators();
  gens.push_back(Permutation::from_images(img));
  return PermGroup(std::move(gens));
}

PermGroup semidirect_product(const PermGroup& n, const PermGroup& h,
                             const std::vector<std::vector<Permutation>>& action,
                             std::size_t degree_cap) {
  if (action.size() != h.generators().size())
    throw InvalidAction("action must give one automorphism per acting generator");
  if (n.order() > std::min<std::size_t>(degree_cap, kMaxDegree))
    throw CapExceeded("semidirect product: |N| = " + std::to_string(n.order()) +
                      " exceeds the degree cap " + std::to_string(degree_cap));

  std::vector<Permutation> nelems = n.elements(n.order());
  std::unordered_map<Permutation, Point, PermutationHash> id;
  for (std::size_t i = 0; i < nelems.size(); ++i) id.emplace(nelems[i], static_cast<Point>(i));

  std::vector<Permutation> auts;
  for (const auto& images : action) {
    if (images.size() != n.generators().size())
      throw InvalidAction("action lists " + std::to_string(images.size()) +
                          " images for " + std::to_string(n.generators().size()) +
                          " normal generators");
    for (const Permutation& img : images)
      if (!n.contains(img)) throw InvalidAction("action image lies outside the normal subgroup");
    std::vector<Point> on_elems(nelems.size());
    try {
      Homomorphism alpha(n, n, images);
      if (!alpha.is_injective()) throw InvalidAction("action images do not define an automorphism");
      for (std::size_t i = 0; i < nelems.size(); ++i) on_elems[i] = id.at(alpha.apply(nelems[i]));
    } catch (const NotAHomomorphism&) {
      throw InvalidAction("action images do not define an automorphism");
    }
    auts.push_back(Permutation::from_images(on_elems));
  }
  if (!is_homomorphism(h, auts))
    throw InvalidAction("action is not a homomorphism from the acting group");

  std::vector<Permutation> translations;
  for (const Permutation& x : n.generators()) {
    std::vector<Point> img(nelems.size());
    for (std::size_t i = 0; i < nelems.size(); ++i) img[i] = id.at(compose(x, nelems[i]));
    translations.push_back(Permutation::from_images(img));
  }

  std::uint64_t want = n.order() * h.order();
  std::vector<Permutation> gens = translations;
  gens.insert(gens.end(), auts.begin(), auts.end());
  PermGroup natural(gens);
  if (natural.order() == want) return natural;

  std::size_t degree = nelems.size() + h.degree();
  if (degree > std::min<std::size_t>(degree_cap, kMaxDegree))
    throw CapExceeded("semidirect product: unfaithful action needs degree " +
                      std::to_string(degree));
  gens.clear();
  for (const Permutation& t : translations) gens.push_back(Permutation::direct_sum(t, h.identity()));
  for (std::size_t i = 0; i < auts.size(); ++i)
    gens.push_back(Permutation::direct_sum(auts[i], h.generators()[i]));
  PermGroup extended(gens);
  if (extended.order() != want) throw Error("semidirect product has unexpected order");
  return extended;
}

PermGroup linear_group_model(unsigned n, unsigned p, bool special) {
  if (n == 0 || p < 2) throw Error("linear_group_model: bad parameters");
  std::size_t q = 1;
  for (unsigned i = 0; i < n; ++i) q *= p;
  if (q - 1 > kMaxDegree) throw CapExceeded("linear_group_model: too many vectors");
  using Matrix = std::vector<std::vector<unsigned>>;
  auto act = [&](const Matrix& m) {
    std::vector<Point> img(q - 1);
    for (std::size_t v = 1; v < q; ++v) {
      std::vector<unsigned> x(n);
      std::size_t t = v;
      for (unsigned i = 0; i < n; ++i, t /= p) x[i] = t % p;
      std::size_t w = 0, scale = 1;
      for (unsigned i = 0; i < n; ++i, scale *= p) {
        unsigned s = 0;
        for (unsigned j = 0; j < n; ++j) s += m[i][j] * x[j];
        w += (s % p) * scale;
      }
      img[v - 1] = static_cast<Point>(w - 1);
    }
    return Permutation::from_images(img);
  };
  auto identity = [&] {
    Matrix m(n, std::vector<unsigned>(n, 0));
    for (unsigned i = 0; i < n; ++i) m[i][i] = 1;
    return m;
  };
  unsigned primitive = 1;
  for (unsigned a = 2; a < p; ++a) {
    unsigned k = 1, x = a;
    while (x != 1) x = x * a % p, ++k;
    if (k == p - 1) {
      primitive = a;
      break;
    }
  }
  if (p == 2) primitive = 1;
  std::vector<Permutation> gens;
  if (!special) {
    Matrix d = identity();
    d[0][0] = primitive;
    gens.push_back(act(d));
  }
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      if (i == j) continue;
      Matrix e = identity();
      e[i][j] = 1;
      gens.push_back(act(e));
    }
  if (gens.empty()) gens.push_back(act(identity()));
  return PermGroup(std::move(gens));
}

}  // namespace jl
