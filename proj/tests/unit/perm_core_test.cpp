#include "doctest.h"

#include <set>

#include "jl/homomorphism.hpp"
#include "jl/structure.hpp"
#include "test_support.hpp"

using namespace jl;
using test::group;
using test::perm;

namespace {

// Independent element count by closure under right multiplication.
std::size_t closure_size(const PermGroup& g) {
  std::set<Permutation> seen{g.identity()};
  std::vector<Permutation> todo{g.identity()};
  while (!todo.empty()) {
    Permutation x = todo.back();
    todo.pop_back();
    for (const Permutation& s : g.generators())
      if (seen.insert(x * s).second) todo.push_back(x * s);
  }
  return seen.size();
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("compose") {
  Permutation t = perm(2, "(0 1)");
  CHECK((t * t).is_identity());
  CHECK((t * t).degree() == 2);
  Permutation c = perm(3, "(0 1 2)");
  CHECK(c * Permutation(3) == c);
  CHECK(c * c == perm(3, "(0 2 1)"));
  CHECK((c * c.inverse()).is_identity());
  // (p∘q)(i) = p(q(i))
  Permutation p = perm(3, "(0 1)"), q = perm(3, "(1 2)");
  for (Point i = 0; i < 3; ++i) CHECK((p * q)(i) == p(q(i)));
  CHECK_THROWS_AS(compose(perm(2, "(0 1)"), perm(3, "(0 1)")), DegreeMismatch);
}

TEST_CASE("permutation parsing and printing") {
  CHECK(perm(5, "(0 1 2)(3 4)").to_string() == "(0 1 2)(3 4)");
  CHECK(perm(4, "()").is_identity());
  CHECK(perm(4, "()").to_string() == "()");
  CHECK(perm(6, "(0 1 2 3 4 5)").order() == 6);
  CHECK(perm(5, "(0 1)(2 3 4)").order() == 6);
  CHECK_THROWS_AS(perm(3, "(0 3)"), Error);  // range and repeats are semantic errors
  CHECK_THROWS_AS(perm(3, "(0 1 0)"), Error);
  CHECK_THROWS_AS(perm(3, "(0 1"), ParseError);
  std::vector<Point> bad{0, 0, 1};
  CHECK_THROWS(Permutation::from_images(bad));
}

TEST_CASE("group orders") {
  PermGroup s5({perm(5, "(0 1)"), perm(5, "(0 1 2 3 4)")});
  CHECK(s5.order() == 120);
  PermGroup a5({perm(5, "(0 1 2)"), perm(5, "(0 1 2 3 4)")});
  CHECK(a5.order() == 60);
  CHECK(swap_extension(a5).order() == 7200);
  CHECK(swap_extension(a5).degree() == 10);
  CHECK(PermGroup::trivial(4).order() == 1);
  CHECK_THROWS(PermGroup(std::vector<Permutation>{}));
}

TEST_CASE("base points are the smallest moved points") {
  PermGroup g({perm(6, "(2 3 4)"), perm(6, "(4 5)")});
  std::vector<Point> base = g.base();
  REQUIRE(!base.empty());
  CHECK(base.front() == 2);
  for (Point b : base) CHECK(b >= 2);
}

TEST_CASE("chain order matches closure and divides degree!") {
  for (const char* e : {"C6", "D6", "S4", "A5", "E(2,3)", "Heis(3)", "PSL(2,5)", "PSL(2,7)", "D4 * C3"}) {
    CAPTURE(e);
    PermGroup g = group(e);
    CHECK(g.order() == closure_size(g));
    if (g.degree() <= 20) CHECK(factorial(g.degree()) % g.order() == 0);
    for (const Permutation& s : g.generators()) CHECK(g.contains(s));
  }
}

TEST_CASE("contains") {
  PermGroup a5 = group("A5");
  PermGroup s5 = group("S5");
  CHECK(a5.contains(perm(5, "(0 1 2)")));
  CHECK_FALSE(a5.contains(perm(5, "(0 1)")));
  CHECK(s5.contains(perm(5, "(0 1)")));
  CHECK(a5.is_subgroup_of(s5));
  CHECK_FALSE(s5.is_subgroup_of(a5));
  CHECK_THROWS_AS(a5.contains(perm(6, "(0 1 2)")), DegreeMismatch);
}

TEST_CASE("centralizer and center") {
  PermGroup s3 = group("S3");
  std::vector<Permutation> r{perm(3, "(0 1 2)")};
  PermGroup c = centralizer(s3, r);
  CHECK(c.order() == 3);
  CHECK(c.contains(perm(3, "(0 1 2)")));
  std::vector<Permutation> id{s3.identity()};
  CHECK(centralizer(s3, id) == s3);
  std::vector<Permutation> v{perm(5, "(0 1)(2 3)")};
  CHECK(centralizer(group("A5"), v).order() == 4);

  CHECK(center(group("Heis(3)")).order() == 3);
  CHECK(center(group("A5")).is_trivial());
  CHECK(center(group("C6")).order() == 6);
  CHECK(center(group("D4")).order() == 2);
}

TEST_CASE("normal closure") {
  std::vector<Permutation> c3{perm(5, "(0 1 2)")};
  CHECK(normal_closure(group("S5"), c3).order() == 60);
  PermGroup s4 = group("S4");
  std::vector<Permutation> id{s4.identity()};
  CHECK(normal_closure(s4, id).is_trivial());
  PermGroup w = group("(A5 * A5) : C2 [swap]");
  std::vector<Permutation> first{perm(10, "(0 1 2)")};
  CHECK(normal_closure(w, first).order() == 3600);
}

TEST_CASE("derived subgroup") {
  CHECK(derived_subgroup(group("C12")).is_trivial());
  PermGroup d = derived_subgroup(group("S5"));
  CHECK(d.order() == 60);
  CHECK(d == group("A5"));
  CHECK(derived_subgroup(group("D6")).order() == 3);
}

TEST_CASE("quotient") {
  PermGroup s4 = group("S4");
  PermGroup v4({perm(4, "(0 1)(2 3)"), perm(4, "(0 2)(1 3)")});
  Quotient q = quotient(s4, v4);
  CHECK(q.group.order() == 6);
  CHECK_FALSE(q.group.is_abelian());
  CHECK(q.map.kernel_order() == 4);
  CHECK(q.map.image_order() == 6);

  Quotient same = quotient(s4, PermGroup::trivial(4));
  CHECK(same.group.order() == 24);

  PermGroup w = group("(A5 * A5) : C2 [swap]");
  PermGroup base = group("A5 * A5");
  CHECK(quotient(w, base).group.order() == 2);

  PermGroup c2({perm(4, "(0 1)")});
  CHECK_THROWS(quotient(s4, c2));
}

TEST_CASE("direct product") {
  CHECK(direct_product(group("A5"), group("A5")).order() == 3600);
  CHECK(direct_product(group("PSL(2,7)"), group("C2")).order() == 336);
  PermGroup s4 = group("S4");
  CHECK(direct_product(group("C1"), s4).order() == 24);
  CHECK(direct_product(group("C3"), group("C4")).degree() == 7);
}

TEST_CASE("semidirect products") {
  PermGroup c5 = group("C5"), c4 = group("C4");
  Permutation x = c5.generators().front();
  PermGroup f20 = semidirect_product(c5, c4, {{x * x}});
  CHECK(f20.order() == 20);
  CHECK_FALSE(f20.is_abelian());

  // x -> x^2 has order 4 on C5, so C2 cannot act that way.
  CHECK_THROWS_AS(semidirect_product(c5, group("C2"), {{x * x}}), InvalidAction);
  // Not an automorphism.
  CHECK_THROWS_AS(semidirect_product(c5, c4, {{c5.identity()}}), InvalidAction);

  PermGroup heis = group("Heis(3)");
  const auto& hg = heis.generators();
  PermGroup h108 = semidirect_product(heis, c4, {{hg[1], hg[0].inverse()}});
  CHECK(h108.order() == 108);
}

TEST_CASE("homomorphism certificate") {
  PermGroup s3 = group("S3");
  PermGroup c2 = group("C2");
  // sign map
  std::vector<Permutation> sign;
  for (const Permutation& g : s3.generators())
    sign.push_back(g.order() == 2 ? c2.generators().front() : c2.identity());
  Homomorphism h(s3, c2, sign);
  CHECK(h.kernel_order() == 3);
  CHECK(h.image_order() == 2);

  // C4 -> C2 sending the generator to the generator is fine, C3 -> C2 is not.
  CHECK(is_homomorphism(group("C4"), std::vector<Permutation>{c2.generators().front()}));
  CHECK_FALSE(is_homomorphism(group("C3"), std::vector<Permutation>{c2.generators().front()}));
  CHECK_THROWS_AS(Homomorphism(group("C3"), c2, {c2.generators().front()}), NotAHomomorphism);
}

TEST_CASE("linear group models") {
  CHECK(linear_group_model(1, 3).order() == 2);
  CHECK(linear_group_model(2, 3).order() == 48);
  CHECK(linear_group_model(2, 3, true).order() == 24);
  CHECK(linear_group_model(2, 3).degree() == 8);
}
