#include "jl/homomorphism.hpp"

#include "jl/error.hpp"

namespace jl {

namespace {

PermGroup graph_of(const PermGroup& source, std::span<const Permutation> images) {
  if (images.size() != source.generators().size())
    throw NotAHomomorphism("expected one image per source generator");
  std::size_t tdeg = images.front().degree();
  if (source.degree() + tdeg > kMaxDegree)
    throw CapExceeded("graph certificate needs degree " + std::to_string(source.degree() + tdeg));
  std::vector<Permutation> pairs;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i].degree() != tdeg) throw DegreeMismatch("generator images differ in degree");
    pairs.push_back(Permutation::direct_sum(source.generators()[i], images[i]));
  }
  return PermGroup(std::move(pairs));
}

}  // namespace

bool is_homomorphism(const PermGroup& source, std::span<const Permutation> gen_images) {
  return graph_of(source, gen_images).order() == source.order();
}

Homomorphism::Homomorphism(PermGroup source, PermGroup target, std::vector<Permutation> gen_images)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(gen_images)),
      graph_(graph_of(source_, images_)) {
  if (graph_.order() != source_.order())
    throw NotAHomomorphism("generator images do not extend to a homomorphism (graph order " +
                           std::to_string(graph_.order()) + " != " +
                           std::to_string(source_.order()) + ")");
  for (const Permutation& img : images_)
    if (!target_.contains(img)) throw NotAHomomorphism("generator image lies outside the target");
}

Permutation Homomorphism::apply(const Permutation& x) const {
  if (x.degree() != source_.degree()) throw DegreeMismatch("argument is not in the source");
  // Every base point of the graph lies in the source block, so sifting (x, 1)
  // leaves (1, φ(x)^-1).
  Permutation embedded = Permutation::direct_sum(x, target_.identity());
  auto [residue, level] = graph_.sift(std::move(embedded));
  Permutation src = residue.restricted(0, source_.degree());
  if (!src.is_identity()) throw Error("argument is not an element of the source group");
  return residue.restricted(source_.degree(), target_.degree()).inverse();
}

PermGroup Homomorphism::image() const { return PermGroup(images_); }

}  // namespace jl
