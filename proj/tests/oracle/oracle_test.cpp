#include "doctest.h"

#include "jl/jordan.hpp"
#include "jl/subgroups.hpp"
#include "naive.hpp"
#include "test_support.hpp"

using namespace jl;

namespace {

std::set<std::set<oracle::Perm>> engine_sets(const SubgroupLattice& lat) {
  std::set<std::set<oracle::Perm>> out;
  for (const SubgroupRecord& r : lat.records()) {
    std::set<oracle::Perm> e;
    for (std::uint32_t id : r.elements) e.insert(oracle::images(lat.table().element(id)));
    out.insert(std::move(e));
  }
  return out;
}

}  // namespace

TEST_CASE("oracle: small hand-checked counts") {
  auto s3 = oracle::constants(oracle::close(test::group("S3")));
  CHECK(s3.subgroup_count == 6);
  CHECK(s3.class_count == 4);
  CHECK(s3.cd_max_measure == 9);
  CHECK(s3.cd_members == 1);
  auto c6 = oracle::constants(oracle::close(test::group("C6")));
  CHECK(c6.subgroup_count == 4);
  CHECK(c6.J == 1);
  auto s4 = oracle::constants(oracle::close(test::group("S4")));
  CHECK(s4.nu == 6);
  CHECK(s4.J == 6);
  CHECK(s4.subgroup_count == 30);
}

TEST_CASE("oracle: S5 and A6 lattices") {
  auto s5 = oracle::close(test::group("S5"));
  auto c = oracle::constants(s5);
  CHECK(c.subgroup_count == 156);
  CHECK(c.class_count == 19);
  CHECK(c.J == 120);
  CHECK(c.Jbar == 20);

  SubgroupLattice lat = all_subgroups(test::group("S5"));
  CHECK(engine_sets(lat) == oracle::as_sets(s5, oracle::subgroups(s5)));

  auto a6 = oracle::constants(oracle::close(test::group("A6")));
  CHECK(a6.subgroup_count == 501);
  CHECK(a6.class_count == 22);
  CHECK(a6.J == 360);
  CHECK(a6.Jbar == 40);
}

TEST_CASE("oracle: engine agrees on every catalog group of order <= 200") {
  auto cat = test::catalog();
  int compared = 0;
  for (const CatalogEntry& e : cat->entries()) {
    const PermGroup& g = cat->group(e.label);
    if (g.order() > 200) continue;
    CAPTURE(e.label);
    oracle::Group og = oracle::close(g);
    REQUIRE(og.size() == g.order());
    oracle::Constants want = oracle::constants(og);
    JordanReport r = analyze(g, {}, e.label);
    REQUIRE(r.method == Method::FullEnumeration);
    CHECK(r.J.lower == want.J);
    CHECK(r.J.upper == want.J);
    CHECK(r.Jbar.lower == want.Jbar);
    CHECK(r.Jbar.upper == want.Jbar);
    CHECK(r.nu->index == want.nu);
    CHECK(r.abar->index == want.abar);
    CHECK(*r.subgroup_count == want.subgroup_count);
    CHECK(*r.class_count == want.class_count);

    SubgroupLattice lat = all_subgroups(g);
    CHECK(engine_sets(lat) == oracle::as_sets(og, oracle::subgroups(og)));
    CDLattice cd = cd_lattice(lat);
    CHECK(cd.max_measure == want.cd_max_measure);
    CHECK(cd.members.size() == want.cd_members);
    ++compared;
  }
  CHECK(compared >= 18);
}
