#include "doublelift/serialize.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace dlift {

using json = nlohmann::ordered_json;

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column, std::string path)
    : std::runtime_error(message), line_(line), column_(column), path_(std::move(path)) {}

namespace {

// ---------------------------------------------------------------------------
// Reading

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw ParseError(fmt::format("{}: {}", path.empty() ? "/" : path, what), 0, 0, path);
}

const json& field(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) schema_error(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_error(path, fmt::format("missing field '{}'", key));
  return *it;
}

const json* optional_field(const json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

Id read_id(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() || j.get<std::uint64_t>() >= kNoId) schema_error(path, "expected an identifier");
  return static_cast<Id>(j.get<std::uint64_t>());
}

std::size_t read_count(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() || j.get<std::uint64_t>() >= kNoId) schema_error(path, "expected a count");
  return static_cast<std::size_t>(j.get<std::uint64_t>());
}

const json& read_array(const json& j, const std::string& path) {
  if (!j.is_array()) schema_error(path, "expected an array");
  return j;
}

std::vector<Id> read_ids(const json& j, const std::string& path) {
  std::vector<Id> out;
  for (std::size_t k = 0; k < read_array(j, path).size(); ++k)
    out.push_back(read_id(j[k], fmt::format("{}/{}", path, k)));
  return out;
}

std::vector<std::string> read_names(const json* j, const std::string& path) {
  if (!j) return {};
  std::vector<std::string> out;
  for (std::size_t k = 0; k < read_array(*j, path).size(); ++k) {
    if (!(*j)[k].is_string()) schema_error(fmt::format("{}/{}", path, k), "expected a string");
    out.push_back((*j)[k].get<std::string>());
  }
  return out;
}

/// Fills an n x n table from [lhs, rhs, result] triples; absent pairs stay kNoId.
std::vector<Id> read_triples(const json& j, const std::string& path, std::size_t n) {
  std::vector<Id> table(n * n, kNoId);
  for (std::size_t k = 0; k < read_array(j, path).size(); ++k) {
    const std::string at = fmt::format("{}/{}", path, k);
    const auto t = read_ids(j[k], at);
    if (t.size() != 3) schema_error(at, "expected a triple [lhs, rhs, result]");
    if (t[0] >= n || t[1] >= n) schema_error(at, fmt::format("operand out of range (size {})", n));
    Id& slot = table[pair_index(t[0], t[1], n)];
    if (slot != kNoId) schema_error(at, "duplicate entry");
    slot = t[2];
  }
  return table;
}

std::vector<std::pair<Id, Id>> read_pairs(const json& j, const std::string& path) {
  std::vector<std::pair<Id, Id>> out;
  for (std::size_t k = 0; k < read_array(j, path).size(); ++k) {
    const std::string at = fmt::format("{}/{}", path, k);
    const auto p = read_ids(j[k], at);
    if (p.size() != 2) schema_error(at, "expected a pair");
    out.emplace_back(p[0], p[1]);
  }
  return out;
}

MonoidTable read_monoid(const json& j, const std::string& path) {
  MonoidTable t;
  t.size = read_count(field(j, path, "size"), path + "/size");
  t.unit = read_id(field(j, path, "unit"), path + "/unit");
  t.product = read_triples(field(j, path, "product"), path + "/product", t.size);
  t.names = read_names(optional_field(j, "names"), path + "/names");
  return t;
}

CategoryTable read_category(const json& j, const std::string& path) {
  CategoryTable t;
  t.objects = read_count(field(j, path, "objects"), path + "/objects");
  for (auto [dom, cod] : read_pairs(field(j, path, "morphisms"), path + "/morphisms"))
    t.morphisms.push_back(Arrow{dom, cod});
  t.identity = read_ids(field(j, path, "identity"), path + "/identity");
  t.compose = read_triples(field(j, path, "compose"), path + "/compose", t.morphisms.size());
  if (const json* names = optional_field(j, "names")) {
    if (!names->is_object()) schema_error(path + "/names", "expected an object");
    t.object_names = read_names(optional_field(*names, "objects"), path + "/names/objects");
    t.morphism_names = read_names(optional_field(*names, "morphisms"), path + "/names/morphisms");
  }
  return t;
}

MonoidalTable read_monoidal(const json& j, const std::string& path) {
  MonoidalTable t;
  t.base = read_category(field(j, path, "base"), path + "/base");
  t.unit = read_id(field(j, path, "unit"), path + "/unit");
  t.tensor_objects = read_triples(field(j, path, "tensor_objects"), path + "/tensor_objects", t.base.objects);
  t.tensor_morphisms =
      read_triples(field(j, path, "tensor_morphisms"), path + "/tensor_morphisms", t.base.morphisms.size());
  return t;
}

BicategoryTable read_bicategory(const json& j, const std::string& path) {
  BicategoryTable t;
  t.cells0 = read_count(field(j, path, "cells0"), path + "/cells0");
  for (auto [d, c] : read_pairs(field(j, path, "cells1"), path + "/cells1")) t.cells1.push_back(Cell1{d, c});
  for (auto [d, c] : read_pairs(field(j, path, "cells2"), path + "/cells2")) t.cells2.push_back(Cell2{d, c});
  t.identity1 = read_ids(field(j, path, "identity1"), path + "/identity1");
  t.identity2 = read_ids(field(j, path, "identity2"), path + "/identity2");
  t.vertical = read_triples(field(j, path, "vertical"), path + "/vertical", t.cells2.size());
  t.horizontal1 = read_triples(field(j, path, "horizontal1"), path + "/horizontal1", t.cells1.size());
  t.horizontal2 = read_triples(field(j, path, "horizontal2"), path + "/horizontal2", t.cells2.size());
  if (const json* names = optional_field(j, "names")) {
    if (!names->is_object()) schema_error(path + "/names", "expected an object");
    t.cell0_names = read_names(optional_field(*names, "cells0"), path + "/names/cells0");
    t.cell1_names = read_names(optional_field(*names, "cells1"), path + "/names/cells1");
    t.cell2_names = read_names(optional_field(*names, "cells2"), path + "/names/cells2");
  }
  return t;
}

Functor read_functor(const json& j, const std::string& path) {
  return Functor{read_ids(field(j, path, "objects"), path + "/objects"),
                 read_ids(field(j, path, "morphisms"), path + "/morphisms")};
}

PrecosheafTable read_precosheaf(const json& j, const std::string& path) {
  PrecosheafTable t;
  t.base = read_category(field(j, path, "base"), path + "/base");
  const json& fibers = read_array(field(j, path, "fibers"), path + "/fibers");
  for (std::size_t k = 0; k < fibers.size(); ++k)
    t.fibers.push_back(read_monoidal(fibers[k], fmt::format("{}/fibers/{}", path, k)));
  const json& action = read_array(field(j, path, "action"), path + "/action");
  for (std::size_t k = 0; k < action.size(); ++k)
    t.action.push_back(read_functor(action[k], fmt::format("{}/action/{}", path, k)));
  return t;
}

DoubleCategoryTable read_double(const json& j, const std::string& path) {
  DoubleCategoryTable t;
  t.objects = read_category(field(j, path, "objects"), path + "/objects");
  t.morphisms = read_category(field(j, path, "morphisms"), path + "/morphisms");
  t.source = read_functor(field(j, path, "source"), path + "/source");
  t.target = read_functor(field(j, path, "target"), path + "/target");
  t.identity = read_functor(field(j, path, "identity"), path + "/identity");
  t.horizontal_cells =
      read_triples(field(j, path, "horizontal_cells"), path + "/horizontal_cells", t.morphisms.objects);
  t.horizontal_squares =
      read_triples(field(j, path, "horizontal_squares"), path + "/horizontal_squares", t.morphisms.morphisms.size());
  return t;
}

// ---------------------------------------------------------------------------
// Writing

json ids(const std::vector<Id>& v) {
  json out = json::array();
  for (Id x : v) out.push_back(x);
  return out;
}

json triples(const std::vector<Id>& table, std::size_t n) {
  json out = json::array();
  for (Id x = 0; x < n; ++x)
    for (Id y = 0; y < n; ++y) {
      const std::size_t k = pair_index(x, y, n);
      if (k < table.size() && table[k] != kNoId) out.push_back(json::array({x, y, table[k]}));
    }
  return out;
}

json names(const std::vector<std::string>& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s);
  return out;
}

json write_monoid(const MonoidTable& t) {
  json j;
  j["size"] = t.size;
  j["unit"] = t.unit;
  j["product"] = triples(t.product, t.size);
  if (!t.names.empty()) j["names"] = names(t.names);
  return j;
}

json write_category(const CategoryTable& t) {
  json j;
  j["objects"] = t.objects;
  json arrows = json::array();
  for (const auto& a : t.morphisms) arrows.push_back(json::array({a.dom, a.cod}));
  j["morphisms"] = std::move(arrows);
  j["identity"] = ids(t.identity);
  j["compose"] = triples(t.compose, t.morphisms.size());
  if (!t.object_names.empty() || !t.morphism_names.empty()) {
    json n;
    if (!t.object_names.empty()) n["objects"] = names(t.object_names);
    if (!t.morphism_names.empty()) n["morphisms"] = names(t.morphism_names);
    j["names"] = std::move(n);
  }
  return j;
}

json write_monoidal(const MonoidalTable& t) {
  json j;
  j["base"] = write_category(t.base);
  j["unit"] = t.unit;
  j["tensor_objects"] = triples(t.tensor_objects, t.base.objects);
  j["tensor_morphisms"] = triples(t.tensor_morphisms, t.base.morphisms.size());
  return j;
}

json write_bicategory(const BicategoryTable& t) {
  json j;
  j["cells0"] = t.cells0;
  json c1 = json::array(), c2 = json::array();
  for (const auto& c : t.cells1) c1.push_back(json::array({c.dom0, c.cod0}));
  for (const auto& c : t.cells2) c2.push_back(json::array({c.dom1, c.cod1}));
  j["cells1"] = std::move(c1);
  j["cells2"] = std::move(c2);
  j["identity1"] = ids(t.identity1);
  j["identity2"] = ids(t.identity2);
  j["vertical"] = triples(t.vertical, t.cells2.size());
  j["horizontal1"] = triples(t.horizontal1, t.cells1.size());
  j["horizontal2"] = triples(t.horizontal2, t.cells2.size());
  if (!t.cell0_names.empty() || !t.cell1_names.empty() || !t.cell2_names.empty()) {
    json n;
    if (!t.cell0_names.empty()) n["cells0"] = names(t.cell0_names);
    if (!t.cell1_names.empty()) n["cells1"] = names(t.cell1_names);
    if (!t.cell2_names.empty()) n["cells2"] = names(t.cell2_names);
    j["names"] = std::move(n);
  }
  return j;
}

json write_functor(const Functor& f) {
  json j;
  j["objects"] = ids(f.objects);
  j["morphisms"] = ids(f.morphisms);
  return j;
}

json write_value(const StructureTable& s) {
  json j;
  j["kind"] = kind_name(s);
  json body = std::visit(
      [](const auto& t) -> json {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, MonoidTable>) return write_monoid(t);
        if constexpr (std::is_same_v<T, CategoryTable>) return write_category(t);
        if constexpr (std::is_same_v<T, MonoidalTable>) return write_monoidal(t);
        if constexpr (std::is_same_v<T, BicategoryTable>) return write_bicategory(t);
        if constexpr (std::is_same_v<T, DecoratedTable>) {
          json d;
          d["decoration"] = write_category(t.decoration);
          d["bicategory"] = write_bicategory(t.bicat);
          return d;
        }
        if constexpr (std::is_same_v<T, PrecosheafTable>) {
          json p;
          p["base"] = write_category(t.base);
          json fibers = json::array(), action = json::array();
          for (const auto& f : t.fibers) fibers.push_back(write_monoidal(f));
          for (const auto& f : t.action) action.push_back(write_functor(f));
          p["fibers"] = std::move(fibers);
          p["action"] = std::move(action);
          return p;
        }
        if constexpr (std::is_same_v<T, DoubleCategoryTable>) {
          json d;
          d["objects"] = write_category(t.objects);
          d["morphisms"] = write_category(t.morphisms);
          d["source"] = write_functor(t.source);
          d["target"] = write_functor(t.target);
          d["identity"] = write_functor(t.identity);
          d["horizontal_cells"] = triples(t.horizontal_cells, t.morphisms.objects);
          d["horizontal_squares"] = triples(t.horizontal_squares, t.morphisms.morphisms.size());
          return d;
        }
      },
      s);
  for (auto& [key, value] : body.items()) j[key] = value;
  return j;
}

bool is_flat(const json& j) {
  return std::none_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); });
}

void emit(const json& j, std::size_t indent, std::string& out) {
  const std::string pad(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t k = 0;
    for (const auto& [key, value] : j.items()) {
      out += pad + json(key).dump() + ": ";
      emit(value, indent + 2, out);
      out += ++k < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "}";
  } else if (j.is_array() && is_flat(j)) {
    out += "[";
    for (std::size_t k = 0; k < j.size(); ++k) out += (k ? ", " : "") + j[k].dump();
    out += "]";
  } else if (j.is_array()) {
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out += pad;
      emit(j[k], indent + 2, out);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "]";
  } else {
    out += j.dump();
  }
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t k = 0; k + 1 < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

template <typename T>
const T& expect_kind(const StructureTable& s, const char* kind) {
  if (const T* t = std::get_if<T>(&s)) return *t;
  throw ShapeError(fmt::format("expected a {}, got a {}", kind, kind_name(s)));
}

}  // namespace

StructureTable parse_structure(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    std::string what = e.what();
    if (auto pos = what.find("] "); pos != std::string::npos) what = what.substr(pos + 2);
    throw ParseError(fmt::format("line {}, column {}: {}", line, column, what), line, column, "");
  }
  const json& kind = field(j, "", "kind");
  if (!kind.is_string()) schema_error("/kind", "expected a string");
  const std::string k = kind.get<std::string>();
  if (k == "monoid") return read_monoid(j, "");
  if (k == "category") return read_category(j, "");
  if (k == "monoidal-category") return read_monoidal(j, "");
  if (k == "bicategory") return read_bicategory(j, "");
  if (k == "decorated-bicategory")
    return DecoratedTable{read_category(field(j, "", "decoration"), "/decoration"),
                          read_bicategory(field(j, "", "bicategory"), "/bicategory")};
  if (k == "precosheaf") return read_precosheaf(j, "");
  if (k == "double-category") return read_double(j, "");
  schema_error("/kind", fmt::format("unknown kind '{}'", k));
}

StructureTable read_structure_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("cannot open '{}'", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_structure(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(fmt::format("{}: {}", path, e.what()), e.line(), e.column(), e.path());
  }
}

std::string write_structure(const StructureTable& s) {
  std::string out;
  emit(write_value(s), 0, out);
  return out + "\n";
}

void write_structure_file(const StructureTable& s, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(fmt::format("cannot write '{}'", path));
  out << write_structure(s);
  if (!out) throw IoError(fmt::format("write to '{}' failed", path));
}

const char* kind_name(const StructureTable& s) {
  static constexpr std::array<const char*, 7> names = {
      "monoid", "category", "monoidal-category", "bicategory", "decorated-bicategory", "precosheaf",
      "double-category"};
  return names[s.index()];
}

LawReport check_structure(const StructureTable& s) {
  return std::visit(
      [](const auto& t) -> LawReport {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, DecoratedTable>) {
          LawReport r;
          r.merge(check_laws(t.decoration), "decoration-");
          r.merge(check_laws(t.bicat), "bicategory-");
          r.law("decoration-objects").require(t.decoration.objects == t.bicat.cells0, [&] {
            return fmt::format("{} objects but {} 0-cells", t.decoration.objects, t.bicat.cells0);
          });
          return r;
        } else if constexpr (std::is_same_v<T, PrecosheafTable>) {
          LawReport r;
          r.merge(check_laws(t.base), "base-");
          for (std::size_t k = 0; k < t.fibers.size(); ++k) r.merge(check_laws(t.fibers[k]), fmt::format("fiber{}-", k));
          if (!r.ok()) return r;
          std::vector<StrictMonoidalCategory> fibers;
          for (const auto& f : t.fibers) fibers.emplace_back(f);
          r.merge(check_precosheaf(Category(t.base), fibers, t.action));
          return r;
        } else if constexpr (std::is_same_v<T, DoubleCategoryTable>) {
          return check_double_axioms(t);
        } else {
          return check_laws(t);
        }
      },
      s);
}

StructureTable to_table(const Monoid& m) { return m.table(); }
StructureTable to_table(const Category& c) { return c.table(); }
StructureTable to_table(const StrictMonoidalCategory& c) { return c.table(); }
StructureTable to_table(const StrictBicategory& b) { return b.table(); }
StructureTable to_table(const DecoratedBicategory& d) {
  return DecoratedTable{d.decoration().table(), d.bicat().table()};
}
StructureTable to_table(const Precosheaf& p) {
  PrecosheafTable t{p.base().table(), {}, p.actions()};
  for (const auto& f : p.fibers()) t.fibers.push_back(f.table());
  return t;
}
StructureTable to_table(const DoubleCategory& c) { return c.table(); }

Monoid as_monoid(const StructureTable& s) { return Monoid(expect_kind<MonoidTable>(s, "monoid")); }

DecoratedBicategory as_decorated(const StructureTable& s) {
  const auto& t = expect_kind<DecoratedTable>(s, "decorated-bicategory");
  return DecoratedBicategory(Category(t.decoration), StrictBicategory(t.bicat));
}

Precosheaf as_precosheaf(const StructureTable& s) {
  const auto& t = expect_kind<PrecosheafTable>(s, "precosheaf");
  std::vector<StrictMonoidalCategory> fibers;
  for (const auto& f : t.fibers) fibers.emplace_back(f);
  return Precosheaf(Category(t.base), std::move(fibers), t.action);
}

DoubleCategory as_double_category(const StructureTable& s) {
  return DoubleCategory(expect_kind<DoubleCategoryTable>(s, "double-category"));
}

}  // namespace dlift
