#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "jl/jordan.hpp"
#include "jl/ledger.hpp"

namespace jl::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kCapOrTimeout = 2, kBoundOnly = 3 };

enum class Format { Json, Csv, Md };
const char* to_string(Format f) noexcept;
Format parse_format(std::string_view s);

struct RunConfig {
  std::uint64_t order_cap = 1000;
  std::uint64_t element_cap = 20000;
  std::size_t degree_cap = 64;
  double time_budget = 120;  // seconds per task
  Format format = Format::Md;
  std::filesystem::path catalog;
  std::filesystem::path ledger;
  unsigned jobs = 1;
  bool timing = true;

  Limits limits() const;
};

/// Compiled-in defaults, with the data paths pointing at the shipped fixtures.
RunConfig default_config();

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;
EnvLookup process_env();

/// JL_ORDER_CAP, JL_ELEMENT_CAP, JL_DEGREE_CAP, JL_TIME_BUDGET, JL_FORMAT,
/// JL_CATALOG, JL_LEDGER, JL_JOBS. Throws std::invalid_argument on bad values.
RunConfig apply_env(RunConfig config, const EnvLookup& env);

using json = nlohmann::ordered_json;

json bound_json(const Bound& b);
json report_json(const JordanReport& r, bool timing);
json lattice_json(const std::string& label, const SubgroupLattice& lattice);
json cd_json(const std::string& label, const SubgroupLattice& lattice, const CDLattice& cd);
json ledger_json(const LedgerRun& run, bool timing);

/// Exit code implied by a finished report.
int report_exit_code(const JordanReport& r);

/// "J(Cr2(C)) = 7200, attained by swap-A5" and friends.
std::string theorem_line(const TheoremResult& t);

/// Fixed CSV headers, documented in the README.
extern const char* const kReportCsvHeader;
extern const char* const kSubgroupsCsvHeader;
extern const char* const kCdCsvHeader;
extern const char* const kLedgerCsvHeader;

void write_reports(std::ostream& out, Format f, const std::vector<JordanReport>& reports, bool timing);
void write_lattice(std::ostream& out, Format f, const std::string& label, const SubgroupLattice& lattice);
void write_cd(std::ostream& out, Format f, const std::string& label, const SubgroupLattice& lattice,
              const CDLattice& cd);
void write_ledger(std::ostream& out, Format f, const LedgerRun& run, bool timing);

/// Entry point behind the `jl` binary. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const EnvLookup& env = process_env());

}  // namespace jl::cli
