#include <map>
#include <ostream>
#include <sstream>

#include "cli.hpp"

namespace jl::cli {

namespace {

json perms_json(const std::vector<Permutation>& ps) {
  json a = json::array();
  for (const Permutation& p : ps) a.push_back(p.to_string());
  return a;
}

json index_json(const std::optional<IndexWitness>& w) {
  if (!w) return nullptr;
  return json{{"index", w->index}, {"subgroup", perms_json(w->subgroup)}};
}

json witness_json(const std::optional<ConstantWitness>& w) {
  if (!w) return nullptr;
  return json{{"subgroup", perms_json(w->subgroup)},
              {"subgroup_order", w->subgroup_order},
              {"abelian", perms_json(w->abelian)},
              {"abelian_order", w->abelian_order}};
}

std::string status_of(const JordanReport& r) {
  if (r.timed_out) return "timeout";
  if (!r.J.exact()) return "bound-only";
  return r.Jbar.exact() ? "exact" : "partial";
}

std::string bound_text(const Bound& b) {
  if (b.exact()) return std::to_string(b.lower);
  return "[" + std::to_string(b.lower) + ", " + std::to_string(b.upper) + "]";
}

std::string opt_text(const std::optional<IndexWitness>& w) {
  return w ? std::to_string(w->index) : "-";
}

std::string seconds_text(double s) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << s;
  return os.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c == '\n' ? ' ' : c;
  }
  return out;
}

std::string gens_text(const std::vector<Permutation>& ps) {
  if (ps.empty()) return "<>";
  std::string s = "<";
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ps[i].to_string();
  return s + ">";
}

std::string member_name(const SubgroupLattice& lat, std::uint32_t id) {
  const SubgroupRecord& r = lat.record(id);
  if (r.order == 1) return "1";
  if (id == lat.full_id()) return "G";
  for (std::uint32_t e : r.elements)
    if (lat.table().element(e).order() == r.order) return "C" + std::to_string(r.order);
  return "H" + std::to_string(id) + " (order " + std::to_string(r.order) + ")";
}

const char* field_object(Field f) {
  switch (f) {
    case Field::C: return "Cr2(C)";
    case Field::R: return "Cr2(R)";
    case Field::Q: return "Cr2(Q)";
    case Field::P2R: return "Aut(P2(R))";
    case Field::S2: return "Aut(Quad31(R))";
  }
  return "?";
}

bool is_axiom(Verdict v) { return v == Verdict::AxiomGeometry || v == Verdict::AxiomChecked; }

}  // namespace

const char* const kReportCsvHeader =
    "label,order,degree,method,status,J_lower,J_upper,Jbar_lower,Jbar_upper,nu,abar,subgroups,classes,seconds";
const char* const kSubgroupsCsvHeader = "label,order,subgroups,classes";
const char* const kCdCsvHeader = "label,record,name,order,centralizer_order,measure,generators";
const char* const kLedgerCsvHeader =
    "id,field,kind,value,witness,relation,verdict,axiom,computed,method,seconds,quote";

json bound_json(const Bound& b) {
  if (b.exact()) return b.lower;
  return json{{"lower", b.lower}, {"upper", b.upper}};
}

json report_json(const JordanReport& r, bool timing) {
  json j;
  j["label"] = r.label;
  j["order"] = r.order;
  j["degree"] = r.degree;
  j["method"] = to_string(r.method);
  j["status"] = status_of(r);
  j["J"] = bound_json(r.J);
  j["Jbar"] = bound_json(r.Jbar);
  j["nu"] = index_json(r.nu);
  j["abar"] = index_json(r.abar);
  j["J_witness"] = witness_json(r.J_witness);
  j["Jbar_witness"] = witness_json(r.Jbar_witness);
  json mn = json::array();
  for (const ShortcutEntry& e : r.minimal_normal)
    mn.push_back({{"class_rep", e.class_rep.to_string()}, {"order", e.order}, {"is_abelian", e.is_abelian}});
  j["minimal_normal"] = std::move(mn);
  j["subgroup_count"] = r.subgroup_count ? json(*r.subgroup_count) : json(nullptr);
  j["class_count"] = r.class_count ? json(*r.class_count) : json(nullptr);
  j["timed_out"] = r.timed_out;
  j["notes"] = r.notes;
  if (timing) j["seconds"] = r.seconds;
  return j;
}

json lattice_json(const std::string& label, const SubgroupLattice& lat) {
  std::map<std::uint64_t, std::pair<std::size_t, std::size_t>> by_order;
  for (const SubgroupRecord& r : lat.records()) ++by_order[r.order].first;
  json classes = json::array();
  for (const auto& cls : lat.classes()) {
    const SubgroupRecord& rep = lat.record(cls.front());
    ++by_order[rep.order].second;
    classes.push_back({{"order", rep.order},
                       {"size", cls.size()},
                       {"normal", rep.is_normal},
                       {"abelian", rep.is_abelian},
                       {"representative", perms_json(lat.generators_of(rep.id))}});
  }
  json orders = json::array();
  for (const auto& [order, counts] : by_order)
    orders.push_back({{"order", order}, {"subgroups", counts.first}, {"classes", counts.second}});
  return json{{"label", label},
              {"order", lat.parent().order()},
              {"subgroup_count", lat.size()},
              {"class_count", lat.classes().size()},
              {"by_order", std::move(orders)},
              {"classes", std::move(classes)}};
}

json cd_json(const std::string& label, const SubgroupLattice& lat, const CDLattice& cd) {
  json members = json::array();
  for (const CDEntry& e : cd.members)
    members.push_back({{"record", e.record},
                       {"name", member_name(lat, e.record)},
                       {"order", e.order},
                       {"centralizer_order", e.centralizer_order},
                       {"measure", e.measure},
                       {"generators", perms_json(lat.generators_of(e.record))}});
  return json{{"label", label},
              {"order", lat.parent().order()},
              {"max_measure", cd.max_measure},
              {"closed", cd.closed},
              {"minimum_is_normal", cd.minimum_is_normal},
              {"members", std::move(members)}};
}

std::string theorem_line(const TheoremResult& t) {
  std::string obj = field_object(t.field);
  std::string s = "J(" + obj + ") = " + std::to_string(t.J);
  if (t.Jbar) s += ", Jbar(" + obj + ") = " + std::to_string(*t.Jbar);
  s += ", attained by " + (t.witness.empty() ? std::string("?") : t.witness);
  if (!t.matches_expected) s += " (MISMATCH)";
  if (!t.complete) s += " (INCOMPLETE)";
  return s;
}

json ledger_json(const LedgerRun& run, bool timing) {
  json cases = json::array();
  for (const CaseVerdict& v : run.verdicts) {
    const CaseBound& row = *v.row;
    json c;
    c["id"] = row.id;
    c["field"] = to_string(row.field);
    c["kind"] = to_string(row.kind);
    c["value"] = row.value;
    c["witness"] = row.witness ? json(*row.witness) : json(nullptr);
    c["relation"] = to_string(row.relation);
    c["verdict"] = v.label;
    c["axiom"] = is_axiom(v.verdict);
    c["computed"] = v.computed ? bound_json(*v.computed) : json(nullptr);
    c["method"] = v.method;
    c["detail"] = v.detail;
    c["quote"] = row.quote;
    if (timing) c["seconds"] = v.seconds;
    cases.push_back(std::move(c));
  }
  json theorems = json::array();
  for (const TheoremResult& t : run.theorems)
    theorems.push_back({{"field", to_string(t.field)},
                        {"J", t.J},
                        {"Jbar", t.Jbar ? json(*t.Jbar) : json(nullptr)},
                        {"attaining_case", t.attaining_case},
                        {"witness", t.witness},
                        {"contributing", t.contributing},
                        {"quote", t.quote},
                        {"matches_expected", t.matches_expected},
                        {"complete", t.complete},
                        {"problems", t.problems},
                        {"summary", theorem_line(t)}});
  return json{{"cases", std::move(cases)}, {"theorems", std::move(theorems)}, {"ok", run.ok}};
}

int report_exit_code(const JordanReport& r) {
  if (r.timed_out) return kCapOrTimeout;
  if (!r.J.exact()) return kBoundOnly;
  return kOk;
}

void write_reports(std::ostream& out, Format f, const std::vector<JordanReport>& reports, bool timing) {
  switch (f) {
    case Format::Json: {
      if (reports.size() == 1) {
        out << report_json(reports.front(), timing).dump(2) << "\n";
      } else {
        json a = json::array();
        for (const JordanReport& r : reports) a.push_back(report_json(r, timing));
        out << a.dump(2) << "\n";
      }
      return;
    }
    case Format::Csv:
      out << kReportCsvHeader << "\n";
      for (const JordanReport& r : reports) {
        out << csv_field(r.label) << ',' << r.order << ',' << r.degree << ',' << to_string(r.method) << ','
            << status_of(r) << ',' << r.J.lower << ',' << r.J.upper << ',' << r.Jbar.lower << ','
            << r.Jbar.upper << ',' << (r.nu ? std::to_string(r.nu->index) : "") << ','
            << (r.abar ? std::to_string(r.abar->index) : "") << ','
            << (r.subgroup_count ? std::to_string(*r.subgroup_count) : "") << ','
            << (r.class_count ? std::to_string(*r.class_count) : "") << ','
            << (timing ? seconds_text(r.seconds) : "") << "\n";
      }
      return;
    case Format::Md:
      out << "| group | order | method | J | Jbar | nu | abar | subgroups |" << (timing ? " time (s) |" : "")
          << "\n|---|---|---|---|---|---|---|---|" << (timing ? "---|" : "") << "\n";
      for (const JordanReport& r : reports) {
        out << "| " << md_cell(r.label) << " | " << r.order << " | " << to_string(r.method) << " | "
            << bound_text(r.J) << " | " << bound_text(r.Jbar) << " | " << opt_text(r.nu) << " | "
            << opt_text(r.abar) << " | "
            << (r.subgroup_count ? std::to_string(*r.subgroup_count) : "-") << " |";
        if (timing) out << " " << seconds_text(r.seconds) << " |";
        out << "\n";
      }
      for (const JordanReport& r : reports) {
        bool detail = r.J_witness || !r.minimal_normal.empty() || !r.notes.empty();
        if (!detail) continue;
        out << "\n" << r.label << ":\n";
        if (r.J_witness)
          out << "- J witness: H = " << gens_text(r.J_witness->subgroup) << " of order "
              << r.J_witness->subgroup_order << ", normal abelian A = " << gens_text(r.J_witness->abelian)
              << " of order " << r.J_witness->abelian_order << "\n";
        if (r.Jbar_witness)
          out << "- Jbar witness: H = " << gens_text(r.Jbar_witness->subgroup) << " of order "
              << r.Jbar_witness->subgroup_order << ", abelian A = " << gens_text(r.Jbar_witness->abelian)
              << " of order " << r.Jbar_witness->abelian_order << "\n";
        for (const ShortcutEntry& e : r.minimal_normal)
          out << "- minimal normal closure of " << e.class_rep.to_string() << ": order " << e.order
              << (e.is_abelian ? ", abelian" : ", non-abelian") << "\n";
        for (const std::string& n : r.notes) out << "- note: " << n << "\n";
      }
      return;
  }
}

void write_lattice(std::ostream& out, Format f, const std::string& label, const SubgroupLattice& lat) {
  json j = lattice_json(label, lat);
  switch (f) {
    case Format::Json:
      out << j.dump(2) << "\n";
      return;
    case Format::Csv:
      out << kSubgroupsCsvHeader << "\n";
      for (const json& row : j["by_order"])
        out << csv_field(label) << ',' << row["order"] << ',' << row["subgroups"] << ',' << row["classes"]
            << "\n";
      return;
    case Format::Md:
      out << lat.size() << " subgroups in " << lat.classes().size() << " classes\n\n"
          << "| order | subgroups | classes |\n|---|---|---|\n";
      for (const json& row : j["by_order"])
        out << "| " << row["order"] << " | " << row["subgroups"] << " | " << row["classes"] << " |\n";
      return;
  }
}

void write_cd(std::ostream& out, Format f, const std::string& label, const SubgroupLattice& lat,
              const CDLattice& cd) {
  switch (f) {
    case Format::Json:
      out << cd_json(label, lat, cd).dump(2) << "\n";
      return;
    case Format::Csv:
      out << kCdCsvHeader << "\n";
      for (const CDEntry& e : cd.members)
        out << csv_field(label) << ',' << e.record << ',' << csv_field(member_name(lat, e.record)) << ','
            << e.order << ',' << e.centralizer_order << ',' << e.measure << ','
            << csv_field(gens_text(lat.generators_of(e.record))) << "\n";
      return;
    case Format::Md: {
      out << "max measure " << cd.max_measure << ", members: {";
      for (std::size_t i = 0; i < cd.members.size(); ++i)
        out << (i ? ", " : "") << member_name(lat, cd.members[i].record);
      out << "}\n\n| member | order | centralizer | measure | generators |\n|---|---|---|---|---|\n";
      for (const CDEntry& e : cd.members)
        out << "| " << member_name(lat, e.record) << " | " << e.order << " | " << e.centralizer_order << " | "
            << e.measure << " | " << md_cell(gens_text(lat.generators_of(e.record))) << " |\n";
      out << "\nclosed under meet and join: " << (cd.closed ? "yes" : "no")
          << "; minimum normal: " << (cd.minimum_is_normal ? "yes" : "no") << "\n";
      return;
    }
  }
}

void write_ledger(std::ostream& out, Format f, const LedgerRun& run, bool timing) {
  switch (f) {
    case Format::Json:
      out << ledger_json(run, timing).dump(2) << "\n";
      return;
    case Format::Csv:
      out << kLedgerCsvHeader << "\n";
      for (const CaseVerdict& v : run.verdicts) {
        const CaseBound& row = *v.row;
        out << csv_field(row.id) << ',' << to_string(row.field) << ',' << to_string(row.kind) << ','
            << row.value << ',' << (row.witness ? csv_field(*row.witness) : "") << ','
            << to_string(row.relation) << ',' << csv_field(v.label) << ','
            << (is_axiom(v.verdict) ? "yes" : "no") << ','
            << (v.computed ? csv_field(bound_text(*v.computed)) : "") << ',' << v.method << ','
            << (timing ? seconds_text(v.seconds) : "") << ',' << csv_field(row.quote) << "\n";
      }
      return;
    case Format::Md:
      out << "| case | kind | value | quote | witness | verdict | method |" << (timing ? " time (s) |" : "")
          << "\n|---|---|---|---|---|---|---|" << (timing ? "---|" : "") << "\n";
      for (const CaseVerdict& v : run.verdicts) {
        const CaseBound& row = *v.row;
        out << "| " << row.id << " | " << to_string(row.kind) << " | " << row.value << " | "
            << md_cell(row.quote) << " | " << (row.witness ? *row.witness : "-") << " | " << v.label
            << " | " << (v.method.empty() ? "-" : v.method) << " |";
        if (timing) out << " " << seconds_text(v.seconds) << " |";
        out << "\n";
      }
      out << "\n";
      for (const TheoremResult& t : run.theorems) {
        for (const std::string& p : t.problems) out << "problem (" << to_string(t.field) << "): " << p << "\n";
        out << theorem_line(t) << "\n";
      }
      return;
  }
}

}  // namespace jl::cli
