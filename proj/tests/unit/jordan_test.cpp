#include "doctest.h"

#include "jl/jordan.hpp"
#include "jl/structure.hpp"
#include "test_support.hpp"

using namespace jl;
using test::group;
using test::perm;

TEST_CASE("nu") {
  for (unsigned n : {1u, 2u, 7u, 12u}) CHECK(nu(group("C" + std::to_string(n))).index == 1);
  CHECK(nu(group("S5")).index == 120);
  CHECK(nu(group("S4")).index == 6);
  IndexWitness w = nu(group("(A5 * A5) : C2 [swap]"));
  CHECK(w.index == 7200);
  IndexWitness d = nu(group("D6"));
  CHECK(d.index == 2);
  CHECK(PermGroup(d.subgroup).order() * d.index == 12);
}

TEST_CASE("abar index") {
  CHECK(abar_index(group("S5")).index == 20);
  CHECK(abar_index(group("A5")).index == 12);
  CHECK(abar_index(group("C12")).index == 1);
  IndexWitness w = abar_index(group("S4"));
  PermGroup a(w.subgroup);
  CHECK(a.is_abelian());
  CHECK(a.order() * w.index == 24);
}

TEST_CASE("Jordan constants") {
  CHECK(jordan_constant(group("A5")).lower == 60);
  CHECK(jordan_constant(group("S5")).upper == 120);
  Bound w = jordan_constant(group("(A5 * A5) : C2 [swap]"));
  CHECK(w.exact());
  CHECK(w.lower == 7200);
  CHECK(weak_jordan_constant(group("S5")).lower == 20);
  CHECK(weak_jordan_constant(group("C2 * C2")).upper == 1);
  CHECK(weak_jordan_constant(group("A5")).upper == 12);
  CHECK(jordan_constant(group("S4")).lower == 6);
  CHECK(jordan_constant(group("S3")).lower == 2);
}

TEST_CASE("analyze: method selection") {
  JordanReport s5 = analyze(group("S5"), {}, "S5");
  CHECK(s5.method == Method::FullEnumeration);
  CHECK(s5.J.lower == 120);
  CHECK(s5.Jbar.lower == 20);
  CHECK(*s5.subgroup_count == 156);
  REQUIRE(s5.J_witness);
  CHECK(s5.J_witness->subgroup_order / s5.J_witness->abelian_order == 120);
  REQUIRE(s5.Jbar_witness);
  CHECK(PermGroup(s5.Jbar_witness->abelian).is_abelian());

  JordanReport w = analyze(group("(A5 * A5) : C2 [swap]"));
  CHECK(w.method == Method::SocleShortcut);
  CHECK(w.J.lower == 7200);
  CHECK(w.J.exact());
  CHECK(w.Jbar.exact());
  CHECK(w.Jbar.lower == 288);
  REQUIRE(!w.minimal_normal.empty());
  for (const auto& m : w.minimal_normal) CHECK_FALSE(m.is_abelian);

  JordanReport c2a7 = analyze(group("C2 * A7"));
  CHECK(c2a7.method == Method::NormalSweep);
  CHECK(c2a7.J.lower == 2520);
  CHECK(c2a7.J.exact());
  CHECK(c2a7.Jbar.lower == 210);

  Limits tight;
  tight.element_cap = 100;
  tight.order_cap = 100;
  JordanReport b = analyze(group("S6"), tight);
  CHECK(b.method == Method::BoundOnly);
  CHECK(b.J.lower == 1);
  CHECK(b.J.upper == 720);
  CHECK_FALSE(b.notes.empty());
}

TEST_CASE("analyze: an expired deadline degrades to a flagged report") {
  Limits l;
  l.deadline = Deadline::after(std::chrono::duration<double>(-1));
  JordanReport r = analyze(group("S5"), l);
  CHECK(r.timed_out);
  CHECK_FALSE(r.J.exact());
  CHECK_FALSE(r.notes.empty());
}

TEST_CASE("report invariants") {
  for (const char* e : {"C7", "S3", "D4", "A4", "S4", "A5", "D4 * D4", "Heis(3)", "PSL(2,7)", "S4 * C2"}) {
    CAPTURE(e);
    JordanReport r = analyze(group(e));
    REQUIRE(r.J.exact());
    REQUIRE(r.Jbar.exact());
    CHECK(r.abar->index <= r.nu->index);
    CHECK(r.nu->index <= r.J.lower);
    CHECK(r.J.lower <= r.order);
    CHECK(r.Jbar.lower <= r.J.lower);
    CHECK(PermGroup(r.nu->subgroup).order() * r.nu->index == r.order);
    CHECK(verify_cd_squeeze(r));
  }
}

TEST_CASE("Chermak-Delgado lattice") {
  CDLattice c6 = cd_lattice(group("C6"));
  CHECK(c6.max_measure == 36);
  REQUIRE(c6.members.size() == 1);
  CHECK(c6.members[0].order == 6);

  CDLattice s3 = cd_lattice(group("S3"));
  CHECK(s3.max_measure == 9);
  REQUIRE(s3.members.size() == 1);
  CHECK(s3.members[0].order == 3);

  CDLattice d4 = cd_lattice(group("D4"));
  CHECK(d4.max_measure == 16);
  CHECK(d4.members.size() > 1);

  for (const char* e : {"S3", "D4", "A4", "S4", "D6", "Heis(3)", "D4 * C2", "A5"}) {
    CAPTURE(e);
    PermGroup g = group(e);
    CDLattice cd = cd_lattice(g);
    CHECK(cd.closed);
    CHECK(cd.minimum_is_normal);
    CHECK(cd.max_measure >= center(g).order() * g.order());
  }
}

TEST_CASE("squeeze") {
  CHECK(verify_cd_squeeze(analyze(group("S5"))));
  CHECK(verify_cd_squeeze(analyze(group("C5"))));
  CHECK(verify_cd_squeeze(analyze(group("A5"))));
  JordanReport loose;
  loose.J = {1, 10};
  loose.Jbar = Bound::of(2);
  CHECK_FALSE(verify_cd_squeeze(loose));
}

TEST_CASE("monotonicity") {
  MonotonicityCheck a = verify_monotonicity(group("S5"), group("A5"));
  CHECK(a.holds);
  CHECK(a.J_small == 60);
  CHECK(a.J_big == 120);
  PermGroup s4 = group("S4");
  CHECK(verify_quotient_monotonicity(s4, s4).holds);
  CHECK(verify_quotient_monotonicity(s4, s4).J_small == 1);
  PermGroup v4({perm(4, "(0 1)(2 3)"), perm(4, "(0 2)(1 3)")});
  MonotonicityCheck q = verify_quotient_monotonicity(s4, v4);
  CHECK(q.holds);
  CHECK(q.J_small == 2);
  CHECK(q.J_big == 6);
}

TEST_CASE("Serre lemma") {
  CHECK(verify_serre_lemma(group("S4")).holds);
  CHECK(verify_serre_lemma(group("A5")).holds);
  CHECK(verify_serre_lemma(group("D7")).holds);
  PermGroup c5 = group("C5");
  Permutation x = c5.generators().front();
  PermGroup f20 = semidirect_product(c5, group("C4"), {{x * x}});
  SerreResult r = verify_serre_lemma(f20);
  CHECK_FALSE(r.holds);
  REQUIRE(r.g);
  REQUIRE(r.h);
  REQUIRE(r.conjugate);
  CHECK(*r.conjugate == conjugate(*r.g, *r.h));
  CHECK(*r.conjugate != *r.h);
  CHECK(*r.conjugate != r.h->inverse());
  CHECK(PermGroup({*r.h}).contains(*r.conjugate));
}

TEST_CASE("faithful homomorphism search") {
  PermGroup s4 = group("S4");
  CHECK(no_faithful_hom(s4, linear_group_model(2, 3)));
  CHECK(no_faithful_hom(s4, linear_group_model(1, 3)));
  CHECK_FALSE(no_faithful_hom(s4, s4));
  EmbeddingSearch e = faithful_hom_search(group("C2"), linear_group_model(1, 3));
  CHECK_FALSE(e.none);
  CHECK(e.images.size() == 1);
}
