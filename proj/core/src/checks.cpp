#include <sstream>

#include "jl/error.hpp"
#include "jl/homomorphism.hpp"
#include "jl/ledger.hpp"
#include "jl/structure.hpp"

namespace jl {

namespace {

PermGroup atom(Atom::Kind k, unsigned n) { return build_atom({k, n, 0}); }

std::vector<std::pair<std::string, PermGroup>> cyclic_dihedral(unsigned max_n) {
  std::vector<std::pair<std::string, PermGroup>> out;
  for (unsigned n = 1; n <= max_n; ++n) {
    out.emplace_back("C" + std::to_string(n), atom(Atom::Kind::Cyclic, n));
    out.emplace_back("D" + std::to_string(n), atom(Atom::Kind::Dihedral, n));
  }
  return out;
}

CheckResult serre(Engine& engine) {
  const Limits& lim = engine.limits();
  auto list = cyclic_dihedral(30);
  std::erase_if(list, [](const auto& p) { return p.first == "C1" || p.first == "D1"; });
  list.emplace_back("A4", atom(Atom::Kind::Alt, 4));
  list.emplace_back("S4", atom(Atom::Kind::Sym, 4));
  list.emplace_back("A5", atom(Atom::Kind::Alt, 5));
  for (const auto& [name, g] : list)
    if (!verify_serre_lemma(g, lim).holds) return {false, "fails on " + name};
  SerreResult control = verify_serre_lemma(engine.catalog().group("F20"), lim);
  if (control.holds) return {false, "negative control F20 unexpectedly passes"};
  return {true, std::to_string(list.size()) + " groups pass; F20 fails with g h g^-1 = " +
                    control.conjugate->to_string() + " for h = " + control.h->to_string()};
}

CheckResult o31_list(Engine& engine) {
  const Limits& lim = engine.limits();
  auto list = cyclic_dihedral(12);
  list.emplace_back("A4", atom(Atom::Kind::Alt, 4));
  list.emplace_back("S4", atom(Atom::Kind::Sym, 4));
  list.emplace_back("A5", atom(Atom::Kind::Alt, 5));
  PermGroup c2 = atom(Atom::Kind::Cyclic, 2);
  std::size_t base = list.size();
  for (std::size_t i = 0; i < base; ++i)
    list.emplace_back(list[i].first + "xC2", direct_product(list[i].second, c2));
  std::uint64_t worst_nu = 0, worst_abar = 0;
  for (const auto& [name, g] : list) {
    std::uint64_t n = nu(g, lim).index, a = abar_index(g, lim).index;
    if (n > 60 || a > 12)
      return {false, name + " has nu " + std::to_string(n) + ", abar " + std::to_string(a)};
    worst_nu = std::max(worst_nu, n);
    worst_abar = std::max(worst_abar, a);
  }
  return {true, std::to_string(list.size()) + " groups, max nu " + std::to_string(worst_nu) +
                    ", max abar " + std::to_string(worst_abar)};
}

CheckResult pgl2_real_list(Engine& engine) {
  auto list = cyclic_dihedral(30);
  for (const auto& [name, g] : list) {
    JordanReport r = engine.analyze_group(g, name);
    if (!r.J.exact() || !r.Jbar.exact()) return {false, name + " not certified"};
    if (r.J.lower > 2 || r.Jbar.lower > 2)
      return {false, name + " has J " + std::to_string(r.J.lower)};
  }
  return {true, std::to_string(list.size()) + " cyclic and dihedral groups have J <= 2, Jbar <= 2"};
}

CheckResult real_fermat(Engine& engine) {
  if (!verify_real_fermat_argument(engine)) return {false, "an embedding S4 -> GL_l(F3) exists"};
  return {true, "no faithful S4 -> GL_1(F3) or GL_2(F3); C2 -> GL_1(F3) control embeds"};
}

CheckResult geiser_product(Engine& engine) {
  std::vector<std::pair<std::string, PermGroup>> ks = {
      {"psl27", engine.catalog().group("psl27")},
      {"A5", atom(Atom::Kind::Alt, 5)},
      {"S4", atom(Atom::Kind::Sym, 4)},
  };
  PermGroup c2 = atom(Atom::Kind::Cyclic, 2);
  std::ostringstream detail;
  for (const auto& [name, k] : ks) {
    JordanReport rk = engine.analyze_group(k, name);
    JordanReport rp = engine.analyze_group(direct_product(k, c2), name + "xC2");
    if (!rk.J.exact() || !rp.J.exact()) return {false, name + " not certified"};
    if (rp.J.lower > 2 * rk.J.lower)
      return {false, "J(" + name + " x C2) = " + std::to_string(rp.J.lower) + " > 2 J(" + name + ")"};
    detail << "J(" << name << "xC2)=" << rp.J.lower << " <= 2*" << rk.J.lower << "; ";
  }
  const JordanReport& w = engine.report("psl27xC2");
  if (!w.nu || w.nu->index > 336) return {false, "nu(psl27xC2) above 336"};
  detail << "nu(psl27xC2)=" << w.nu->index;
  return {true, detail.str()};
}

CheckResult torus_d6(Engine& engine) {
  std::ostringstream detail;
  for (int n = 2; n <= 5; ++n) {
    std::string label = "torus-d6-" + std::to_string(n);
    const JordanReport& r = engine.report(label);
    if (!r.J.exact() || r.J.lower > 12)
      return {false, label + " has J " + std::to_string(r.J.lower)};
    detail << label << " J=" << r.J.lower << (n < 5 ? "; " : "");
  }
  return {true, detail.str()};
}

CheckResult cd_squeeze(Engine& engine) {
  std::size_t squeezed = 0, lattices = 0;
  for (const CatalogEntry& e : engine.catalog().entries()) {
    const JordanReport& r = engine.report(e.label);
    if (r.J.exact() && r.Jbar.exact()) {
      if (!verify_cd_squeeze(r)) return {false, "squeeze fails on " + e.label};
      ++squeezed;
    }
    if (r.order <= 200) {
      CDLattice cd = cd_lattice(engine.catalog().group(e.label), engine.limits());
      if (!cd.closed || !cd.minimum_is_normal)
        return {false, "Chermak-Delgado lattice of " + e.label + " is not a normal-based sublattice"};
      ++lattices;
    }
  }
  return {true, "Jbar <= J <= Jbar^2 on " + std::to_string(squeezed) + " groups; " +
                    std::to_string(lattices) + " CD lattices closed with normal minimum"};
}

CheckResult proper_subgroups(Engine& engine) {
  SubgroupLattice lat = all_subgroups(engine.catalog().group("S5"), engine.limits());
  std::uint64_t worst_j = 0, worst_jbar = 0;
  for (const auto& cls : lat.classes()) {
    std::uint32_t rep = cls.front();
    if (rep == lat.full_id()) continue;
    JordanReport r = engine.analyze_group(lat.as_group(rep), "");
    if (!r.J.exact() || !r.Jbar.exact()) return {false, "a proper subgroup was not certified"};
    worst_j = std::max(worst_j, r.J.lower);
    worst_jbar = std::max(worst_jbar, r.Jbar.lower);
  }
  bool ok = worst_j <= 60 && worst_jbar <= 12;
  return {ok, "proper subgroups of S5: max J " + std::to_string(worst_j) + ", max Jbar " +
                  std::to_string(worst_jbar)};
}

using CheckFn = CheckResult (*)(Engine&);
const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> table = {
      {"cd-squeeze", cd_squeeze},       {"geiser-product", geiser_product},
      {"o31-list", o31_list},           {"pgl2-real-list", pgl2_real_list},
      {"proper-subgroups", proper_subgroups}, {"real-fermat", real_fermat},
      {"serre", serre},                 {"torus-d6", torus_d6},
  };
  return table;
}

}  // namespace

std::vector<std::string> check_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

CheckResult run_check(std::string_view name, Engine& engine) {
  for (const auto& [n, fn] : registry())
    if (n == name) return fn(engine);
  throw Error("unknown check '" + std::string(name) + "'");
}

bool verify_real_fermat_argument(Engine& engine) {
  const Limits& lim = engine.limits();
  const PermGroup& s4 = engine.catalog().group("S4");
  bool none1 = no_faithful_hom(s4, linear_group_model(1, 3), lim);
  bool none2 = no_faithful_hom(s4, linear_group_model(2, 3), lim);
  bool control = !no_faithful_hom(atom(Atom::Kind::Cyclic, 2), linear_group_model(1, 3), lim);
  return none1 && none2 && control;
}

}  // namespace jl
