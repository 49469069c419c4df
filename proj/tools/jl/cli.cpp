#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"

#include "cli.hpp"
#include "jl/catalog.hpp"
#include "jl/dsl.hpp"
#include "jl/subgroups.hpp"

#ifndef JL_DATA_DIR
#define JL_DATA_DIR "data"
#endif

namespace jl::cli {

const char* to_string(Format f) noexcept {
  switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Md: return "md";
  }
  return "?";
}

Format parse_format(std::string_view s) {
  for (Format f : {Format::Json, Format::Csv, Format::Md})
    if (s == to_string(f)) return f;
  throw std::invalid_argument("unknown format '" + std::string(s) + "' (expected json, csv or md)");
}

Limits RunConfig::limits() const {
  Limits l;
  l.order_cap = order_cap;
  l.element_cap = element_cap;
  l.degree_cap = degree_cap;
  l.deadline = Deadline::after(std::chrono::duration<double>(time_budget));
  return l;
}

RunConfig default_config() {
  RunConfig c;
  c.catalog = std::filesystem::path(JL_DATA_DIR) / "catalog.json";
  c.ledger = std::filesystem::path(JL_DATA_DIR) / "ledger.json";
  return c;
}

EnvLookup process_env() {
  return [](const std::string& name) -> std::optional<std::string> {
    if (const char* v = std::getenv(name.c_str())) return std::string(v);
    return std::nullopt;
  };
}

namespace {

template <class T>
T positive(const std::string& name, const std::string& text) {
  T v{};
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || end != text.data() + text.size() || v <= 0)
    throw std::invalid_argument(name + " must be a positive number, got '" + text + "'");
  return v;
}

double positive_seconds(const std::string& name, const std::string& text) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !(v > 0))
    throw std::invalid_argument(name + " must be a positive number of seconds, got '" + text + "'");
  return v;
}

}  // namespace

RunConfig apply_env(RunConfig c, const EnvLookup& env) {
  if (auto v = env("JL_ORDER_CAP")) c.order_cap = positive<std::uint64_t>("JL_ORDER_CAP", *v);
  if (auto v = env("JL_ELEMENT_CAP")) c.element_cap = positive<std::uint64_t>("JL_ELEMENT_CAP", *v);
  if (auto v = env("JL_DEGREE_CAP")) c.degree_cap = positive<std::size_t>("JL_DEGREE_CAP", *v);
  if (auto v = env("JL_TIME_BUDGET")) c.time_budget = positive_seconds("JL_TIME_BUDGET", *v);
  if (auto v = env("JL_FORMAT")) c.format = parse_format(*v);
  if (auto v = env("JL_CATALOG")) c.catalog = *v;
  if (auto v = env("JL_LEDGER")) c.ledger = *v;
  if (auto v = env("JL_JOBS")) c.jobs = positive<unsigned>("JL_JOBS", *v);
  return c;
}

namespace {

std::string read_text(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Session {
 public:
  Session(RunConfig config, std::ostream& out, std::ostream& err)
      : config_(std::move(config)), out_(out), err_(err) {}

  int compute(const std::string& expr) {
    return guarded(expr, [&] {
      PermGroup g = resolve(expr);
      JordanReport r = analyze(g, config_.limits(), expr);
      write_reports(out_, config_.format, {r}, config_.timing);
      return report_exit_code(r);
    });
  }

  int subgroups(const std::string& expr) {
    return guarded(expr, [&] {
      SubgroupLattice lat = all_subgroups(resolve(expr), config_.limits());
      write_lattice(out_, config_.format, expr, lat);
      return int(kOk);
    });
  }

  int cd(const std::string& expr) {
    return guarded(expr, [&] {
      SubgroupLattice lat = all_subgroups(resolve(expr), config_.limits());
      write_cd(out_, config_.format, expr, lat, cd_lattice(lat));
      return int(kOk);
    });
  }

  int verify(const std::optional<std::string>& field) {
    return guarded("verify-paper", [&] {
      std::vector<Field> fields;
      if (field) {
        fields.push_back(parse_field(*field));
      } else {
        fields = {Field::C, Field::R, Field::Q, Field::P2R, Field::S2};
      }
      auto catalog = std::make_shared<const Catalog>(Catalog::load(config_.catalog, kMaxDegree));
      auto rows = load_ledger(config_.ledger);
      Limits base = config_.limits();
      base.deadline = Deadline{};
      Engine engine(catalog, base, config_.time_budget);
      LedgerRun run = verify_ledger(rows, engine, fields, config_.jobs);
      write_ledger(out_, config_.format, run, config_.timing);
      if (run.ok) return int(kOk);
      bool unverified = std::any_of(run.verdicts.begin(), run.verdicts.end(),
                                    [](const CaseVerdict& v) { return v.verdict == Verdict::Unverified; });
      return int(unverified ? kCapOrTimeout : kUsage);
    });
  }

  int report(const std::optional<std::string>& file) {
    return guarded(file ? *file : "catalog", [&] {
      std::vector<std::pair<std::string, PermGroup>> groups;
      if (file) {
        const ActionRegistry& actions = catalog() ? catalog()->actions() : ActionRegistry{};
        for (const ExprLine& l : parse_expr_lines(read_text(*file)))
          groups.emplace_back(print(l.expr), build(l.expr, actions, config_.degree_cap));
      } else {
        if (!catalog()) throw Error("no catalog at " + config_.catalog.string());
        for (const CatalogEntry& e : catalog()->entries())
          groups.emplace_back(e.label, catalog()->group(e.label));
      }
      std::vector<JordanReport> reports(groups.size());
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        for (std::size_t i; (i = next++) < groups.size();)
          reports[i] = analyze(groups[i].second, config_.limits(), groups[i].first);
      };
      unsigned n = std::max(1u, std::min<unsigned>(config_.jobs, static_cast<unsigned>(groups.size())));
      std::vector<std::jthread> pool;
      for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
      worker();
      pool.clear();
      write_reports(out_, config_.format, reports, config_.timing);
      int code = kOk;
      for (const JordanReport& r : reports) {
        int c = report_exit_code(r);
        if (c == kCapOrTimeout || (c == kBoundOnly && code == kOk)) code = c;
      }
      return code;
    });
  }

 private:
  const Catalog* catalog() {
    if (!catalog_loaded_) {
      catalog_loaded_ = true;
      if (std::filesystem::exists(config_.catalog))
        catalog_ = std::make_unique<Catalog>(Catalog::load(config_.catalog, kMaxDegree));
    }
    return catalog_.get();
  }

  PermGroup resolve(const std::string& expr) {
    if (const Catalog* c = catalog()) return c->resolve(expr, config_.degree_cap);
    return build(parse_expr(expr), {}, config_.degree_cap);
  }

  template <class F>
  int guarded(const std::string& subject, F&& body) {
    try {
      return body();
    } catch (const CapExceeded& e) {
      return partial(subject, "cap-exceeded", e.what());
    } catch (const Timeout& e) {
      return partial(subject, "timeout", e.what());
    } catch (const std::exception& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    }
  }

  int partial(const std::string& subject, const char* status, const std::string& why) {
    if (config_.format == Format::Json)
      out_ << json{{"label", subject}, {"status", status}, {"error", why}}.dump(2) << "\n";
    err_ << status << ": " << why << "\n";
    return kCapOrTimeout;
  }

  RunConfig config_;
  std::ostream& out_;
  std::ostream& err_;
  bool catalog_loaded_ = false;
  std::unique_ptr<Catalog> catalog_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const EnvLookup& env) {
  RunConfig config;
  try {
    config = apply_env(default_config(), env);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  CLI::App app{"Jordan constants of finite permutation groups", "jl"};
  app.fallthrough();
  app.require_subcommand(1);

  app.add_flag_callback("--json", [&] { config.format = Format::Json; }, "JSON output");
  app.add_flag_callback("--csv", [&] { config.format = Format::Csv; }, "CSV output");
  app.add_flag_callback("--md", [&] { config.format = Format::Md; }, "Markdown output (default)");
  app.add_option("--order-cap", config.order_cap, "largest order for full subgroup enumeration")
      ->check(CLI::PositiveNumber);
  app.add_option("--element-cap", config.element_cap, "largest order for explicit element lists")
      ->check(CLI::PositiveNumber);
  app.add_option("--degree-cap", config.degree_cap, "largest degree of constructed groups")
      ->check(CLI::PositiveNumber);
  app.add_option("--time-budget", config.time_budget, "seconds per task")->check(CLI::PositiveNumber);
  app.add_option("--jobs", config.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--catalog", config.catalog, "catalog JSON");
  app.add_option("--ledger", config.ledger, "ledger JSON");
  app.add_flag_callback("--no-timing", [&] { config.timing = false; }, "omit timings from output");

  std::string expr;
  std::optional<std::string> field;
  std::optional<std::string> file;
  auto* compute = app.add_subcommand("compute", "Jordan constants of a group expression or catalog label");
  compute->add_option("expr", expr, "DSL expression or catalog label")->required();
  auto* subgroups = app.add_subcommand("subgroups", "subgroup lattice summary");
  subgroups->add_option("expr", expr, "DSL expression or catalog label")->required();
  auto* cd = app.add_subcommand("cd-lattice", "Chermak-Delgado lattice");
  cd->add_option("expr", expr, "DSL expression or catalog label")->required();
  auto* verify = app.add_subcommand("verify-paper", "verify the shipped case ledger and aggregate it");
  verify->add_option("--field", field, "C, R, Q, P2R or S2")
      ->check(CLI::IsMember({"C", "R", "Q", "P2R", "S2"}));
  auto* report = app.add_subcommand("report", "reports for a DSL file (one expression per line) or the catalog");
  report->add_option("file", file, "DSL file; the whole catalog when omitted");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Session s(config, out, err);
  if (*compute) return s.compute(expr);
  if (*subgroups) return s.subgroups(expr);
  if (*cd) return s.cd(expr);
  if (*verify) return s.verify(field);
  return s.report(file);
}

}  // namespace jl::cli
