#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jl/catalog.hpp"
#include "jl/jordan.hpp"

namespace jl {

enum class Field { C, R, Q, P2R, S2 };
enum class BoundKind { J, Jbar, Exclusion };
enum class Relation { Attains, SatisfiesBound, ExcludedByGeometry };

const char* to_string(Field f) noexcept;
const char* to_string(BoundKind k) noexcept;
const char* to_string(Relation r) noexcept;
Field parse_field(std::string_view s);

/// One branch of the case analysis with the bound it asserts.
struct CaseBound {
  std::string id;
  Field field = Field::C;
  std::string family;  // conic-bundle | del-pezzo | theorem
  std::optional<int> degree;
  std::string variant;
  BoundKind kind = BoundKind::J;
  std::uint64_t value = 1;
  std::string quote;
  std::optional<std::string> witness;
  Relation relation = Relation::SatisfiesBound;
  std::optional<std::string> check;
  std::optional<std::string> excludes;
  std::string note;
};

/// Rows in file order. Throws SchemaError with a JSON pointer.
std::vector<CaseBound> parse_ledger(std::string_view json_text);
std::vector<CaseBound> load_ledger(const std::filesystem::path& path);

enum class PglType { Cyclic, Dihedral, A4, S4, A5 };
PglType parse_pgl_type(std::string_view s);

/// Row of the conic-bundle table for the fiber/base types; over R the
/// exceptional types are rejected.
const CaseBound& conic_bundle_bound(const std::vector<CaseBound>& rows, PglType fiber, PglType base,
                                    Field field, BoundKind kind = BoundKind::J);
/// Row of the del Pezzo table; variant "default" matches the sole variant.
const CaseBound& del_pezzo_bound(const std::vector<CaseBound>& rows, int degree,
                                 std::string_view variant, Field field,
                                 BoundKind kind = BoundKind::J);

struct CheckResult {
  bool passed = false;
  std::string detail;
};

/// Thread-safe cache of Jordan reports for catalog labels.
class Engine {
 public:
  /// `task_seconds` restarts the deadline for every report and check.
  Engine(std::shared_ptr<const Catalog> catalog, Limits limits,
         std::optional<double> task_seconds = std::nullopt);

  const Catalog& catalog() const noexcept { return *catalog_; }
  Limits limits() const;
  const JordanReport& report(const std::string& label);
  /// Analysis of an ad-hoc group, uncached.
  JordanReport analyze_group(const PermGroup& g, const std::string& label) const;
  /// Cached run_check.
  const CheckResult& check(const std::string& name);

 private:
  std::shared_ptr<const Catalog> catalog_;
  Limits limits_;
  std::optional<double> task_seconds_;
  std::mutex mu_;
  std::map<std::string, std::shared_ptr<const JordanReport>> cache_;
  std::map<std::string, std::shared_ptr<const CheckResult>> checks_;
};

/// Named finite-sample checks backing axiom rows. Unknown names throw.
CheckResult run_check(std::string_view name, Engine& engine);
std::vector<std::string> check_names();

bool verify_real_fermat_argument(Engine& engine);

enum class Verdict { Attains, Satisfies, AxiomGeometry, AxiomChecked, Unverified, Failed };
const char* to_string(Verdict v) noexcept;

struct CaseVerdict {
  const CaseBound* row = nullptr;
  Verdict verdict = Verdict::Unverified;
  std::string label;          // "attains", "axiom (checked: serre)", ...
  std::optional<Bound> computed;
  std::string method;
  std::string detail;
  double seconds = 0;
};
CaseVerdict verify_case(const CaseBound& row, Engine& engine);

struct TheoremResult {
  Field field = Field::C;
  std::uint64_t J = 0;
  std::optional<std::uint64_t> Jbar;
  std::string attaining_case;
  std::string witness;
  std::vector<std::string> contributing;  // sorted case ids
  std::string quote;                      // from the theorem rows
  bool matches_expected = false;
  bool complete = false;  // no failed or unverified contributing rows
  std::vector<std::string> problems;
};

/// Rows feeding the aggregate of `field`, after exclusions, in id order.
std::vector<const CaseBound*> contributing_rows(const std::vector<CaseBound>& rows, Field field);

TheoremResult aggregate(Field field, const std::vector<CaseBound>& rows,
                        const std::vector<CaseVerdict>& verdicts);

struct ExpectedTheorem {
  Field field;
  std::uint64_t J;
  std::optional<std::uint64_t> Jbar;
  const char* witness;
};
const std::vector<ExpectedTheorem>& expected_theorems();

/// Max of the complex del Pezzo J-bounds with and without the quadric row.
struct Sensitivity {
  std::uint64_t with_quadric = 0;
  std::uint64_t without_quadric = 0;
};
Sensitivity quadric_sensitivity(const std::vector<CaseBound>& rows);

struct LedgerRun {
  std::vector<CaseVerdict> verdicts;  // sorted by (id, kind)
  std::vector<TheoremResult> theorems;
  bool ok = false;
};
/// Verifies every row relevant to the selected fields on `jobs` threads.
LedgerRun verify_ledger(const std::vector<CaseBound>& rows, Engine& engine,
                        const std::vector<Field>& fields, unsigned jobs = 1);

}  // namespace jl
