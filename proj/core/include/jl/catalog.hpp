#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jl/dsl.hpp"
#include "jl/perm_group.hpp"

namespace jl {

struct ExplicitGenerators {
  std::size_t degree = 1;
  std::vector<std::vector<std::vector<Point>>> cycles;  // one cycle list per generator
};

/// Asserted quantities, each backed by `quote`.
struct Expectations {
  std::optional<std::uint64_t> order, nu, J, Jbar, J_le, Jbar_le;
  std::string quote;
};

struct CatalogEntry {
  std::string label;
  std::optional<std::string> expr;
  std::optional<ExplicitGenerators> generators;
  ActionRegistry actions;
  Expectations expected;
  std::string note;
};

/// Validated catalog with every entry built once. Action ids are shared by
/// all entries, so DSL text may reference any action shipped in the file.
class Catalog {
 public:
  /// Throws SchemaError (with a JSON pointer), or BuildError naming the label.
  static Catalog parse(std::string_view json_text, std::size_t degree_cap = 64);
  static Catalog load(const std::filesystem::path& path, std::size_t degree_cap = 64);

  const std::vector<CatalogEntry>& entries() const noexcept { return entries_; }
  const CatalogEntry* find(std::string_view label) const;
  const PermGroup& group(std::string_view label) const;
  const ActionRegistry& actions() const noexcept { return actions_; }

  /// A catalog label, or else DSL text built against the shipped actions.
  PermGroup resolve(std::string_view label_or_expr, std::size_t degree_cap = 64) const;

 private:
  std::vector<CatalogEntry> entries_;
  std::vector<PermGroup> groups_;
  ActionRegistry actions_;
};

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path);

}  // namespace jl
