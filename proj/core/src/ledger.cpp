#include "jl/ledger.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "jl/error.hpp"

namespace jl {

const char* to_string(Field f) noexcept {
  switch (f) {
    case Field::C: return "C";
    case Field::R: return "R";
    case Field::Q: return "Q";
    case Field::P2R: return "P2R";
    case Field::S2: return "S2";
  }
  return "?";
}

const char* to_string(BoundKind k) noexcept {
  switch (k) {
    case BoundKind::J: return "J-bound";
    case BoundKind::Jbar: return "Jbar-bound";
    case BoundKind::Exclusion: return "exclusion";
  }
  return "?";
}

const char* to_string(Relation r) noexcept {
  switch (r) {
    case Relation::Attains: return "attains";
    case Relation::SatisfiesBound: return "satisfies-bound";
    case Relation::ExcludedByGeometry: return "excluded-by-geometry";
  }
  return "?";
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Attains: return "attains";
    case Verdict::Satisfies: return "satisfies";
    case Verdict::AxiomGeometry: return "axiom (geometry)";
    case Verdict::AxiomChecked: return "axiom (checked)";
    case Verdict::Unverified: return "unverified";
    case Verdict::Failed: return "FAILED";
  }
  return "?";
}

Field parse_field(std::string_view s) {
  for (Field f : {Field::C, Field::R, Field::Q, Field::P2R, Field::S2})
    if (s == to_string(f)) return f;
  throw Error("unknown field '" + std::string(s) + "' (expected C, R, Q, P2R or S2)");
}

PglType parse_pgl_type(std::string_view s) {
  if (s == "cyclic") return PglType::Cyclic;
  if (s == "dihedral") return PglType::Dihedral;
  if (s == "A4") return PglType::A4;
  if (s == "S4") return PglType::S4;
  if (s == "A5") return PglType::A5;
  throw Error("unknown PGL2 subgroup type '" + std::string(s) + "'");
}

namespace {

using nlohmann::json;

template <class E, std::size_t N>
E enum_at(const json& j, const std::string& ptr, const E (&values)[N]) {
  if (!j.is_string()) throw SchemaError("expected a string", ptr);
  for (E v : values)
    if (j.get_ref<const std::string&>() == to_string(v)) return v;
  throw SchemaError("unexpected value '" + j.get<std::string>() + "'", ptr);
}

std::string str_at(const json& j, const std::string& ptr) {
  if (!j.is_string()) throw SchemaError("expected a string", ptr);
  return j.get<std::string>();
}

std::optional<std::string> opt_str(const json& row, const char* key, const std::string& ptr) {
  if (!row.contains(key) || row[key].is_null()) return std::nullopt;
  return str_at(row[key], ptr + "/" + key);
}

CaseBound parse_row(const json& j, const std::string& ptr) {
  if (!j.is_object()) throw SchemaError("expected an object", ptr);
  static const char* keys[] = {"id", "field", "family", "degree", "variant", "kind", "value",
                               "quote", "witness", "relation", "check", "excludes", "note"};
  for (const auto& [k, v] : j.items())
    if (std::find_if(std::begin(keys), std::end(keys), [&](const char* x) { return k == x; }) ==
        std::end(keys))
      throw SchemaError("unknown key '" + k + "'", ptr + "/" + k);
  for (const char* req : {"id", "field", "family", "kind", "value", "quote", "relation"})
    if (!j.contains(req)) throw SchemaError(std::string("missing '") + req + "'", ptr);

  CaseBound r;
  r.id = str_at(j["id"], ptr + "/id");
  if (r.id.empty()) throw SchemaError("empty id", ptr + "/id");
  static const Field fields[] = {Field::C, Field::R, Field::Q, Field::P2R, Field::S2};
  r.field = enum_at(j["field"], ptr + "/field", fields);
  r.family = str_at(j["family"], ptr + "/family");
  if (r.family != "conic-bundle" && r.family != "del-pezzo" && r.family != "theorem")
    throw SchemaError("family must be conic-bundle, del-pezzo or theorem", ptr + "/family");
  if (j.contains("degree") && !j["degree"].is_null()) {
    if (!j["degree"].is_number_integer() || j["degree"].get<int>() < 1 || j["degree"].get<int>() > 9)
      throw SchemaError("degree must be an integer in 1..9", ptr + "/degree");
    r.degree = j["degree"].get<int>();
  }
  if (r.family == "del-pezzo" && !r.degree) throw SchemaError("del Pezzo rows need a degree", ptr);
  r.variant = opt_str(j, "variant", ptr).value_or("default");
  static const BoundKind kinds[] = {BoundKind::J, BoundKind::Jbar, BoundKind::Exclusion};
  r.kind = enum_at(j["kind"], ptr + "/kind", kinds);
  if (!j["value"].is_number_integer() || j["value"].get<std::int64_t>() < 1)
    throw SchemaError("value must be a positive integer", ptr + "/value");
  r.value = j["value"].get<std::uint64_t>();
  r.quote = str_at(j["quote"], ptr + "/quote");
  if (r.quote.empty()) throw SchemaError("every row needs a quote", ptr + "/quote");
  static const Relation rels[] = {Relation::Attains, Relation::SatisfiesBound,
                                  Relation::ExcludedByGeometry};
  r.relation = enum_at(j["relation"], ptr + "/relation", rels);
  r.witness = opt_str(j, "witness", ptr);
  r.check = opt_str(j, "check", ptr);
  r.excludes = opt_str(j, "excludes", ptr);
  r.note = opt_str(j, "note", ptr).value_or("");
  if ((r.kind == BoundKind::Exclusion) != (r.relation == Relation::ExcludedByGeometry))
    throw SchemaError("exclusion rows and only they use excluded-by-geometry", ptr + "/relation");
  if (r.relation == Relation::Attains && !r.witness)
    throw SchemaError("an attains row needs a witness", ptr + "/witness");
  return r;
}

}  // namespace

std::vector<CaseBound> parse_ledger(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("not valid JSON (") + e.what() + ")", "");
  }
  if (!doc.is_array()) throw SchemaError("expected an array of rows", "");
  std::vector<CaseBound> rows;
  std::set<std::pair<std::string, BoundKind>> seen;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    std::string ptr = "/" + std::to_string(i);
    CaseBound r = parse_row(doc[i], ptr);
    if (!seen.emplace(r.id, r.kind).second)
      throw SchemaError("duplicate row '" + r.id + "' (" + to_string(r.kind) + ")", ptr + "/id");
    rows.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (rows[i].excludes &&
        std::none_of(rows.begin(), rows.end(), [&](const CaseBound& r) { return r.id == *rows[i].excludes; }))
      throw SchemaError("excludes unknown row '" + *rows[i].excludes + "'", "/" + std::to_string(i) + "/excludes");
  return rows;
}

std::vector<CaseBound> load_ledger(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_ledger(ss.str());
}

namespace {

bool exceptional(PglType t) { return t == PglType::A4 || t == PglType::S4 || t == PglType::A5; }

const CaseBound& find_row(const std::vector<CaseBound>& rows, const std::string& id, BoundKind kind) {
  for (const CaseBound& r : rows)
    if (r.id == id && r.kind == kind) return r;
  throw Error("ledger has no row '" + id + "' (" + to_string(kind) + ")");
}

}  // namespace

const CaseBound& conic_bundle_bound(const std::vector<CaseBound>& rows, PglType fiber, PglType base,
                                    Field field, BoundKind kind) {
  const char* branch = exceptional(fiber) ? (exceptional(base) ? "i" : "iii")
                                          : (exceptional(base) ? "ii" : "iv");
  if (field == Field::R) {
    if (exceptional(fiber) || exceptional(base))
      throw Error("over R the fiber and base groups are cyclic or dihedral");
    return find_row(rows, "CB-R-iv", kind);
  }
  if (field != Field::C) throw Error("conic bundle table exists over C and R only");
  return find_row(rows, std::string("CB-C-") + branch, kind);
}

const CaseBound& del_pezzo_bound(const std::vector<CaseBound>& rows, int degree,
                                 std::string_view variant, Field field, BoundKind kind) {
  const CaseBound* hit = nullptr;
  int matches = 0;
  for (const CaseBound& r : rows) {
    if (r.family != "del-pezzo" || r.field != field || r.degree != degree || r.kind != kind) continue;
    if (variant == "default" || r.variant == variant) {
      hit = &r;
      ++matches;
    }
  }
  if (matches == 1) return *hit;
  throw Error("no unique del Pezzo row for degree " + std::to_string(degree) + ", variant '" +
              std::string(variant) + "' over " + to_string(field));
}

Engine::Engine(std::shared_ptr<const Catalog> catalog, Limits limits,
               std::optional<double> task_seconds)
    : catalog_(std::move(catalog)), limits_(limits), task_seconds_(task_seconds) {}

Limits Engine::limits() const {
  Limits l = limits_;
  if (task_seconds_) l.deadline = Deadline::after(std::chrono::duration<double>(*task_seconds_));
  return l;
}

const JordanReport& Engine::report(const std::string& label) {
  {
    std::lock_guard lock(mu_);
    auto it = cache_.find(label);
    if (it != cache_.end()) return *it->second;
  }
  auto r = std::make_shared<const JordanReport>(analyze_group(catalog_->group(label), label));
  std::lock_guard lock(mu_);
  return *cache_.emplace(label, std::move(r)).first->second;
}

JordanReport Engine::analyze_group(const PermGroup& g, const std::string& label) const {
  return analyze(g, limits(), label);
}

const CheckResult& Engine::check(const std::string& name) {
  {
    std::lock_guard lock(mu_);
    auto it = checks_.find(name);
    if (it != checks_.end()) return *it->second;
  }
  auto r = std::make_shared<const CheckResult>(run_check(name, *this));
  std::lock_guard lock(mu_);
  return *checks_.emplace(name, std::move(r)).first->second;
}

CaseVerdict verify_case(const CaseBound& row, Engine& engine) {
  auto start = std::chrono::steady_clock::now();
  CaseVerdict v;
  v.row = &row;
  auto set = [&](Verdict verdict, std::string label) {
    v.verdict = verdict;
    v.label = std::move(label);
  };
  try {
    std::optional<CheckResult> check;
    if (row.check) {
      check = engine.check(*row.check);
      v.detail = *row.check + ": " + check->detail;
    }
    if (row.kind == BoundKind::Exclusion) {
      set(Verdict::AxiomGeometry, "axiom (geometry)");
    } else if (row.witness) {
      const JordanReport& r = engine.report(*row.witness);
      Bound b = row.kind == BoundKind::J ? r.J : r.Jbar;
      v.computed = b;
      v.method = to_string(r.method);
      if (row.relation == Relation::Attains) {
        if (b.exact() && b.lower == row.value) set(Verdict::Attains, "attains");
        else if (b.lower > row.value || b.upper < row.value) set(Verdict::Failed, "FAILED");
        else set(Verdict::Unverified, "unverified");
      } else {
        if (b.upper <= row.value) set(Verdict::Satisfies, "satisfies");
        else if (b.lower > row.value) set(Verdict::Failed, "FAILED");
        else set(Verdict::Unverified, "unverified");
      }
      if (check && !check->passed) set(Verdict::Failed, "FAILED");
    } else if (check) {
      if (check->passed) set(Verdict::AxiomChecked, "axiom (checked: " + *row.check + ")");
      else set(Verdict::Failed, "FAILED");
    } else {
      set(Verdict::AxiomGeometry, "axiom (geometry)");
    }
  } catch (const Error& e) {
    set(Verdict::Unverified, "unverified");
    v.detail = e.what();
  }
  v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return v;
}

std::vector<const CaseBound*> contributing_rows(const std::vector<CaseBound>& rows, Field field) {
  auto wanted = [&](const CaseBound& r) {
    if (r.family == "theorem") return false;
    switch (field) {
      case Field::C: return r.field == Field::C;
      case Field::R: return r.field == Field::R;
      case Field::Q: return r.field == Field::R || r.field == Field::Q;
      case Field::P2R:
      case Field::S2: {
        if (r.field == field) return true;
        if (r.field != Field::R) return false;
        if (r.family == "conic-bundle") return true;
        bool odd = r.degree && *r.degree % 2 == 1;
        return field == Field::P2R ? odd : !odd;
      }
    }
    return false;
  };
  std::set<std::string> excluded;
  for (const CaseBound& r : rows)
    if (wanted(r) && r.excludes) excluded.insert(*r.excludes);
  std::vector<const CaseBound*> out;
  for (const CaseBound& r : rows)
    if (wanted(r) && !excluded.count(r.id)) out.push_back(&r);
  std::sort(out.begin(), out.end(), [](const CaseBound* a, const CaseBound* b) {
    return std::tie(a->id, a->kind) < std::tie(b->id, b->kind);
  });
  return out;
}

const std::vector<ExpectedTheorem>& expected_theorems() {
  static const std::vector<ExpectedTheorem> table = {
      {Field::C, 7200, std::nullopt, "swap-A5"},
      {Field::R, 120, 20, "S5"},
      {Field::Q, 120, 20, "S5"},
      {Field::P2R, 60, 12, "A5"},
      {Field::S2, 60, 12, "A5"},
  };
  return table;
}

TheoremResult aggregate(Field field, const std::vector<CaseBound>& rows,
                        const std::vector<CaseVerdict>& verdicts) {
  TheoremResult t;
  t.field = field;
  auto verdict_of = [&](const CaseBound* r) -> const CaseVerdict* {
    for (const CaseVerdict& v : verdicts)
      if (v.row == r) return &v;
    return nullptr;
  };
  std::optional<std::uint64_t> jbar;
  std::vector<const CaseBound*> contributing = contributing_rows(rows, field);
  for (const CaseBound* r : contributing) {
    if (t.contributing.empty() || t.contributing.back() != r->id) t.contributing.push_back(r->id);
    const CaseVerdict* v = verdict_of(r);
    if (!v) t.problems.push_back(r->id + " was not verified");
    else if (v->verdict == Verdict::Failed || v->verdict == Verdict::Unverified)
      t.problems.push_back(r->id + " (" + to_string(r->kind) + ") is " + v->label);
    if (r->kind == BoundKind::J) t.J = std::max(t.J, r->value);
    if (r->kind == BoundKind::Jbar) jbar = std::max(jbar.value_or(0), r->value);
  }
  t.Jbar = jbar;

  auto attaining = [&](BoundKind kind, std::uint64_t value) -> const CaseBound* {
    for (const CaseBound* r : contributing)
      if (r->kind == kind && r->value == value && r->relation == Relation::Attains) {
        const CaseVerdict* v = verdict_of(r);
        if (v && v->verdict == Verdict::Attains) return r;
      }
    return nullptr;
  };
  const CaseBound* aj = attaining(BoundKind::J, t.J);
  if (aj) {
    t.attaining_case = aj->id;
    t.witness = *aj->witness;
  } else {
    t.problems.push_back("no verified row attains J = " + std::to_string(t.J));
  }
  if (jbar && !attaining(BoundKind::Jbar, *jbar))
    t.problems.push_back("no verified row attains Jbar = " + std::to_string(*jbar));

  for (const CaseBound& r : rows)
    if (r.family == "theorem" && r.field == field) {
      if (!t.quote.empty()) t.quote += " / ";
      t.quote += r.quote;
    }
  t.complete = t.problems.empty();
  for (const ExpectedTheorem& e : expected_theorems())
    if (e.field == field)
      t.matches_expected = e.J == t.J && e.Jbar == t.Jbar && t.witness == e.witness;
  return t;
}

Sensitivity quadric_sensitivity(const std::vector<CaseBound>& rows) {
  Sensitivity s;
  for (const CaseBound& r : rows) {
    if (r.field != Field::C || r.family != "del-pezzo" || r.kind != BoundKind::J) continue;
    s.with_quadric = std::max(s.with_quadric, r.value);
    if (r.id != "dP-C-8-quadric") s.without_quadric = std::max(s.without_quadric, r.value);
  }
  return s;
}

LedgerRun verify_ledger(const std::vector<CaseBound>& rows, Engine& engine,
                        const std::vector<Field>& fields, unsigned jobs) {
  std::set<const CaseBound*> selected;
  for (Field f : fields) {
    for (const CaseBound* r : contributing_rows(rows, f)) selected.insert(r);
    for (const CaseBound& r : rows)
      if (r.family == "theorem" && r.field == f) selected.insert(&r);
    // Exclusion rows stay visible even though their targets drop out.
    for (const CaseBound& r : rows)
      if (r.field == f && r.kind == BoundKind::Exclusion) selected.insert(&r);
  }
  std::vector<const CaseBound*> work(selected.begin(), selected.end());
  std::sort(work.begin(), work.end(), [](const CaseBound* a, const CaseBound* b) {
    return std::tie(a->id, a->kind) < std::tie(b->id, b->kind);
  });

  LedgerRun run;
  run.verdicts.resize(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < work.size();) run.verdicts[i] = verify_case(*work[i], engine);
  };
  unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(work.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  run.ok = true;
  for (Field f : fields) {
    run.theorems.push_back(aggregate(f, rows, run.verdicts));
    const TheoremResult& t = run.theorems.back();
    run.ok = run.ok && t.complete && t.matches_expected;
  }
  for (const CaseVerdict& v : run.verdicts)
    if (v.verdict == Verdict::Failed || v.verdict == Verdict::Unverified) run.ok = false;
  return run;
}

}  // namespace jl
