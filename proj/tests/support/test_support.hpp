#pragma once

#include <memory>
#include <string_view>

#include "jl/catalog.hpp"
#include "jl/dsl.hpp"
#include "jl/permutation.hpp"

#ifndef JL_TEST_DATA
#error "JL_TEST_DATA must point at the data directory"
#endif

namespace jl::test {

inline PermGroup group(std::string_view expr) { return build(parse_expr(expr)); }

inline Permutation perm(std::size_t degree, std::string_view cycles) {
  return Permutation::parse(degree, cycles);
}

inline std::shared_ptr<const Catalog> catalog() {
  static auto c = std::make_shared<const Catalog>(Catalog::load(JL_TEST_DATA "/catalog.json"));
  return c;
}

inline const char* ledger_path() { return JL_TEST_DATA "/ledger.json"; }

}  // namespace jl::test
