#include "jl/catalog.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "jl/error.hpp"

namespace jl {

namespace {

using nlohmann::json;

std::string child(const std::string& ptr, const std::string& key) { return ptr + "/" + key; }
std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

std::uint64_t positive(const json& j, const std::string& ptr) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 1)
    throw SchemaError("expected a positive integer", ptr);
  return j.get<std::uint64_t>();
}

const std::string& string_at(const json& j, const std::string& ptr) {
  if (!j.is_string()) throw SchemaError("expected a string", ptr);
  return j.get_ref<const std::string&>();
}

void only_keys(const json& j, const std::string& ptr, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : j.items()) {
    bool known = false;
    for (const char* key : keys) known = known || k == key;
    if (!known) throw SchemaError("unknown key '" + k + "'", child(ptr, k));
  }
}

ExplicitGenerators parse_generators(const json& j, const std::string& ptr) {
  if (!j.is_object()) throw SchemaError("expected an object", ptr);
  only_keys(j, ptr, {"degree", "cycles"});
  if (!j.contains("degree")) throw SchemaError("missing 'degree'", ptr);
  if (!j.contains("cycles")) throw SchemaError("missing 'cycles'", ptr);
  ExplicitGenerators g;
  g.degree = positive(j["degree"], child(ptr, "degree"));
  if (g.degree > kMaxDegree) throw SchemaError("degree above 255", child(ptr, "degree"));
  const json& gens = j["cycles"];
  std::string gp = child(ptr, "cycles");
  if (!gens.is_array() || gens.empty()) throw SchemaError("expected a nonempty array", gp);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::string p = child(gp, i);
    if (!gens[i].is_array()) throw SchemaError("expected an array of cycles", p);
    std::vector<std::vector<Point>> cycles;
    for (std::size_t c = 0; c < gens[i].size(); ++c) {
      std::string cp = child(p, c);
      if (!gens[i][c].is_array()) throw SchemaError("expected a cycle", cp);
      std::vector<Point> cyc;
      for (std::size_t k = 0; k < gens[i][c].size(); ++k) {
        const json& x = gens[i][c][k];
        if (!x.is_number_integer() || x.get<std::int64_t>() < 0 ||
            x.get<std::uint64_t>() >= g.degree)
          throw SchemaError("point out of range", child(cp, k));
        cyc.push_back(x.get<Point>());
      }
      cycles.push_back(std::move(cyc));
    }
    g.cycles.push_back(std::move(cycles));
  }
  return g;
}

ActionRegistry parse_actions(const json& j, const std::string& ptr) {
  if (!j.is_object()) throw SchemaError("expected an object", ptr);
  ActionRegistry out;
  for (const auto& [id, table] : j.items()) {
    std::string ap = child(ptr, id);
    if (!table.is_object() || table.empty()) throw SchemaError("expected a nonempty object", ap);
    ActionTable rows(table.size());
    for (const auto& [key, words] : table.items()) {
      std::string rp = child(ap, key);
      std::size_t i = 0;
      if (key.size() < 2 || key[0] != 'h' || (i = std::stoul(key.substr(1))) >= table.size() ||
          key != "h" + std::to_string(i))
        throw SchemaError("acting generators are keyed h0, h1, ...", rp);
      if (!words.is_array()) throw SchemaError("expected an array of words", rp);
      for (std::size_t w = 0; w < words.size(); ++w) rows[i].push_back(string_at(words[w], child(rp, w)));
    }
    out.emplace(id, std::move(rows));
  }
  return out;
}

Expectations parse_expected(const json& j, const std::string& ptr) {
  if (!j.is_object()) throw SchemaError("expected an object", ptr);
  only_keys(j, ptr, {"order", "nu", "J", "Jbar", "J_le", "Jbar_le", "quote"});
  Expectations e;
  auto opt = [&](const char* key, std::optional<std::uint64_t>& slot) {
    if (j.contains(key)) slot = positive(j[key], child(ptr, key));
  };
  opt("order", e.order);
  opt("nu", e.nu);
  opt("J", e.J);
  opt("Jbar", e.Jbar);
  opt("J_le", e.J_le);
  opt("Jbar_le", e.Jbar_le);
  if (j.contains("quote")) e.quote = string_at(j["quote"], child(ptr, "quote"));
  return e;
}

CatalogEntry parse_entry(const json& j, const std::string& ptr) {
  if (!j.is_object()) throw SchemaError("expected an object", ptr);
  only_keys(j, ptr, {"label", "expr", "generators", "actions", "expected", "note"});
  CatalogEntry e;
  if (!j.contains("label")) throw SchemaError("missing 'label'", ptr);
  e.label = string_at(j["label"], child(ptr, "label"));
  if (e.label.empty()) throw SchemaError("empty label", child(ptr, "label"));
  if (j.contains("expr") == j.contains("generators"))
    throw SchemaError("exactly one of 'expr' and 'generators' is required", ptr);
  if (j.contains("expr")) e.expr = string_at(j["expr"], child(ptr, "expr"));
  if (j.contains("generators")) e.generators = parse_generators(j["generators"], child(ptr, "generators"));
  if (j.contains("actions")) e.actions = parse_actions(j["actions"], child(ptr, "actions"));
  if (j.contains("expected")) e.expected = parse_expected(j["expected"], child(ptr, "expected"));
  if (j.contains("note")) e.note = string_at(j["note"], child(ptr, "note"));
  return e;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<CatalogEntry> parse_entries(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("not valid JSON (") + e.what() + ")", "");
  }
  if (!doc.is_array()) throw SchemaError("expected an array of entries", "");
  std::vector<CatalogEntry> out;
  std::set<std::string> labels;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    CatalogEntry e = parse_entry(doc[i], child("", i));
    if (!labels.insert(e.label).second)
      throw SchemaError("duplicate label '" + e.label + "'", child(child("", i), "label"));
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

Catalog Catalog::parse(std::string_view text, std::size_t degree_cap) {
  Catalog c;
  c.entries_ = parse_entries(text);
  for (std::size_t i = 0; i < c.entries_.size(); ++i)
    for (const auto& [id, table] : c.entries_[i].actions) {
      auto [it, fresh] = c.actions_.emplace(id, table);
      if (!fresh && it->second != table)
        throw SchemaError("action '" + id + "' defined twice with different images",
                          "/" + std::to_string(i) + "/actions/" + id);
    }
  for (const CatalogEntry& e : c.entries_) {
    try {
      if (e.expr) {
        c.groups_.push_back(build(parse_expr(*e.expr), c.actions_, degree_cap));
      } else {
        std::vector<Permutation> gens;
        for (const auto& cycles : e.generators->cycles)
          gens.push_back(Permutation::from_cycles(e.generators->degree, cycles));
        c.groups_.push_back(PermGroup(std::move(gens)));
      }
    } catch (const Error& err) {
      throw BuildError("catalog entry '" + e.label + "': " + err.what());
    }
    if (e.expected.order && *e.expected.order != c.groups_.back().order())
      throw BuildError("catalog entry '" + e.label + "': expected order " +
                       std::to_string(*e.expected.order) + ", built order " +
                       std::to_string(c.groups_.back().order()));
  }
  return c;
}

Catalog Catalog::load(const std::filesystem::path& path, std::size_t degree_cap) {
  return parse(read_file(path), degree_cap);
}

const CatalogEntry* Catalog::find(std::string_view label) const {
  for (const CatalogEntry& e : entries_)
    if (e.label == label) return &e;
  return nullptr;
}

const PermGroup& Catalog::group(std::string_view label) const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].label == label) return groups_[i];
  throw Error("no catalog entry '" + std::string(label) + "'");
}

PermGroup Catalog::resolve(std::string_view text, std::size_t degree_cap) const {
  if (find(text)) return group(text);
  return build(parse_expr(text), actions_, degree_cap);
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& path) {
  return Catalog::load(path).entries();
}

}  // namespace jl
