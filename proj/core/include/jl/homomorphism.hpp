#pragma once

#include <vector>

#include "jl/perm_group.hpp"

namespace jl {

/// A map source -> target fixed by the images of the source generators.
/// Construction certifies it extends to a homomorphism: the subgroup of
/// source × target generated by the pairs (g_i, image_i) must have order |source|.
class Homomorphism {
 public:
  /// Throws NotAHomomorphism when the certificate fails.
  Homomorphism(PermGroup source, PermGroup target, std::vector<Permutation> gen_images);

  const PermGroup& source() const noexcept { return source_; }
  const PermGroup& target() const noexcept { return target_; }
  const std::vector<Permutation>& gen_images() const noexcept { return images_; }

  Permutation apply(const Permutation& x) const;
  PermGroup image() const;
  std::uint64_t image_order() const { return image().order(); }
  std::uint64_t kernel_order() const { return source_.order() / image_order(); }
  bool is_injective() const { return image_order() == source_.order(); }

 private:
  PermGroup source_;
  PermGroup target_;
  std::vector<Permutation> images_;
  PermGroup graph_;
};

/// True iff the generator assignment extends to a homomorphism (graph closure test).
bool is_homomorphism(const PermGroup& source, std::span<const Permutation> gen_images);

}  // namespace jl
