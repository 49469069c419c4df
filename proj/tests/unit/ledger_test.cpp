#include "doctest.h"

#include <algorithm>
#include <set>

#include "jl/ledger.hpp"
#include "test_support.hpp"

using namespace jl;

namespace {

const std::vector<CaseBound>& rows() {
  static const auto r = load_ledger(test::ledger_path());
  return r;
}

Engine& engine() {
  static Engine e(test::catalog(), Limits{});
  return e;
}

const CaseBound& row(std::string_view id, BoundKind kind = BoundKind::J) {
  for (const CaseBound& r : rows())
    if (r.id == id && r.kind == kind) return r;
  throw Error("missing row " + std::string(id));
}

}  // namespace

TEST_CASE("ledger file shape") {
  std::set<std::pair<std::string, int>> keys;
  for (const CaseBound& r : rows()) {
    CAPTURE(r.id);
    CHECK(keys.insert({r.id, static_cast<int>(r.kind)}).second);
    CHECK_FALSE(r.quote.empty());
    CHECK(r.value >= 1);
    if (r.relation == Relation::Attains) CHECK(r.witness.has_value());
    if (r.excludes) CHECK_NOTHROW(row(*r.excludes));
    if (r.check) {
      auto names = check_names();
      CHECK(std::find(names.begin(), names.end(), *r.check) != names.end());
    }
  }
  CHECK_THROWS_AS(parse_ledger("{}"), SchemaError);
  CHECK_THROWS_AS(parse_ledger(R"([{"id": "x"}])"), SchemaError);
}

TEST_CASE("conic bundle table") {
  CHECK(conic_bundle_bound(rows(), PglType::A5, PglType::A5, Field::C).value == 3600);
  CHECK(conic_bundle_bound(rows(), PglType::A4, PglType::Dihedral, Field::C).value == 7200);
  CHECK(conic_bundle_bound(rows(), PglType::Cyclic, PglType::S4, Field::C).value == 120);
  CHECK(conic_bundle_bound(rows(), PglType::Dihedral, PglType::Dihedral, Field::C).value == 32);
  CHECK(conic_bundle_bound(rows(), PglType::Dihedral, PglType::Dihedral, Field::R).value == 32);
  CHECK(conic_bundle_bound(rows(), PglType::Dihedral, PglType::Cyclic, Field::R, BoundKind::Jbar).value == 8);
  CHECK_THROWS(conic_bundle_bound(rows(), PglType::A5, PglType::Cyclic, Field::R));
  CHECK_THROWS(conic_bundle_bound(rows(), PglType::Cyclic, PglType::S4, Field::R));
  CHECK_THROWS(conic_bundle_bound(rows(), PglType::Cyclic, PglType::Cyclic, Field::Q));
  CHECK(parse_pgl_type("dihedral") == PglType::Dihedral);
  CHECK_THROWS(parse_pgl_type("A6"));
}

TEST_CASE("del Pezzo table") {
  CHECK(del_pezzo_bound(rows(), 9, "default", Field::C).value == 360);
  CHECK(del_pezzo_bound(rows(), 8, "quadric", Field::C).value == 7200);
  CHECK(del_pezzo_bound(rows(), 5, "default", Field::R, BoundKind::Jbar).value == 20);
  CHECK(del_pezzo_bound(rows(), 3, "heis108", Field::R).value == 36);
  CHECK_THROWS(del_pezzo_bound(rows(), 8, "default", Field::C));  // two variants
  CHECK_THROWS(del_pezzo_bound(rows(), 10, "default", Field::C));
}

TEST_CASE("verify_case") {
  CaseVerdict q = verify_case(row("dP-C-8-quadric"), engine());
  CHECK(q.verdict == Verdict::Attains);
  REQUIRE(q.computed);
  CHECK(q.computed->lower == 7200);
  CHECK(q.method == "socle-shortcut");

  CHECK(verify_case(row("dP-R-5", BoundKind::Jbar), engine()).verdict == Verdict::Attains);
  CHECK(verify_case(row("CB-R-i", BoundKind::Exclusion), engine()).verdict == Verdict::AxiomGeometry);
  CHECK(verify_case(row("dP-C-3-other"), engine()).verdict == Verdict::Satisfies);
  CHECK(verify_case(row("CB-C-iii"), engine()).verdict == Verdict::AxiomChecked);

  // Attaining a wrong value fails loudly.
  CaseBound wrong = row("dP-C-5");
  wrong.value = 60;
  CHECK(verify_case(wrong, engine()).verdict == Verdict::Failed);
  CaseBound tight = row("dP-C-3-other");
  tight.value = 20;
  CHECK(verify_case(tight, engine()).verdict == Verdict::Failed);
  CaseBound missing = row("dP-C-5");
  missing.witness = "no-such-group";
  CHECK(verify_case(missing, engine()).verdict == Verdict::Unverified);
}

TEST_CASE("aggregates") {
  LedgerRun run = verify_ledger(rows(), engine(), {Field::C, Field::R, Field::Q, Field::P2R, Field::S2}, 2);
  CHECK(run.ok);
  for (const CaseVerdict& v : run.verdicts) {
    CAPTURE(v.row->id);
    CHECK(v.verdict != Verdict::Failed);
    CHECK(v.verdict != Verdict::Unverified);
  }
  REQUIRE(run.theorems.size() == expected_theorems().size());
  for (std::size_t i = 0; i < run.theorems.size(); ++i) {
    const TheoremResult& t = run.theorems[i];
    const ExpectedTheorem& e = expected_theorems()[i];
    CAPTURE(to_string(t.field));
    CHECK(t.field == e.field);
    CHECK(t.J == e.J);
    CHECK(t.Jbar == e.Jbar);
    CHECK(t.witness == e.witness);
    CHECK(t.matches_expected);
    CHECK(t.complete);
  }

  // Over R the exceptional conic-bundle branches appear only as exclusions.
  for (const CaseBound* r : contributing_rows(rows(), Field::R)) {
    bool exceptional = r->id == "CB-R-i" || r->id == "CB-R-ii" || r->id == "CB-R-iii";
    if (exceptional) CHECK(r->kind == BoundKind::Exclusion);
  }

  // A verdict flipped to failed makes the aggregate incomplete.
  std::vector<CaseVerdict> broken = run.verdicts;
  for (CaseVerdict& v : broken)
    if (v.row->id == "dP-R-5") v.verdict = Verdict::Failed;
  TheoremResult r = aggregate(Field::R, rows(), broken);
  CHECK_FALSE(r.complete);
  CHECK_FALSE(r.problems.empty());
}

TEST_CASE("quadric sensitivity") {
  Sensitivity s = quadric_sensitivity(rows());
  CHECK(s.with_quadric == 7200);
  CHECK(s.without_quadric == 360);
}

TEST_CASE("real Fermat argument") { CHECK(verify_real_fermat_argument(engine())); }
