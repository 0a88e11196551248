#include "fdalg/io.hpp"

#include <fstream>
#include <sstream>

namespace fdalg::io {

namespace {

[[noreturn]] void malformed(const std::string& msg) { throw Error(ErrorCode::MalformedInput, msg); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
  return j.at(key);
}

Scalar scalar_from_json(const Json& j, const FieldSpec& field) {
  if (j.is_string()) return parse_scalar(j.get<std::string>(), field);
  if (j.is_number_integer()) return parse_scalar(j.dump(), field);
  malformed("scalar literal must be a string or an integer, got " + j.dump());
}

std::vector<Vec> vec_list(const Json& j, const FieldSpec& field, std::size_t n, std::size_t count, const char* what) {
  if (!j.is_array() || j.size() != count)
    malformed(std::string(what) + " must be a list of " + std::to_string(count) + " coordinate lists");
  std::vector<Vec> out;
  for (const auto& v : j) out.push_back(vec_from_json(v, field, n));
  return out;
}

}  // namespace

Json field_to_json(const FieldSpec& field) {
  switch (field.kind()) {
    case FieldKind::Rationals: return Json{{"kind", "Q"}};
    case FieldKind::PrimeField: return Json{{"kind", "Fp"}, {"p", field.p()}};
    case FieldKind::RationalFunctions: return Json{{"kind", "FpT"}, {"p", field.p()}};
  }
  return {};
}

FieldSpec field_from_json(const Json& j) {
  const Json& kind = member(j, "kind");
  if (!kind.is_string()) malformed("field kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "Q") return FieldSpec::rationals();
  if (k != "Fp" && k != "FpT") malformed("unknown field kind '" + k + "'");
  const Json& p = member(j, "p");
  if (!p.is_number_unsigned()) malformed("field characteristic must be a positive integer");
  const auto value = p.get<std::uint64_t>();
  if (value > 0xffffffffu) throw Error(ErrorCode::InvalidField, "p = " + std::to_string(value) + " is too large");
  const auto p32 = static_cast<std::uint32_t>(value);
  return k == "Fp" ? FieldSpec::prime_field(p32) : FieldSpec::rational_functions(p32);
}

Json vec_to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

Vec vec_from_json(const Json& j, const FieldSpec& field, std::size_t n) {
  if (!j.is_array() || j.size() != n) malformed("expected a list of " + std::to_string(n) + " scalars, got " + j.dump());
  Vec v;
  for (const auto& s : j) v.push_back(scalar_from_json(s, field));
  return v;
}

Json algebra_to_json(const Algebra& a) {
  Json table = Json::array();
  for (const auto& row : a.table()) {
    Json r = Json::array();
    for (const auto& c : row) r.push_back(vec_to_json(c));
    table.push_back(std::move(r));
  }
  Json out{{"field", field_to_json(a.field())}, {"dim", a.dim()}, {"labels", a.labels()}, {"table", std::move(table)}};
  if (!a.tags().construction.empty()) out["construction"] = a.tags().construction;
  if (a.tags().matrix_side) out["matrix_side"] = *a.tags().matrix_side;
  if (a.tags().complement) out["complement"] = subspace_to_json(*a.tags().complement);
  return out;
}

Algebra algebra_from_json(const Json& j) {
  const FieldSpec field = field_from_json(member(j, "field"));
  const Json& dim = member(j, "dim");
  if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0) malformed("dim must be a positive integer");
  const auto n = dim.get<std::size_t>();

  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const Json& l = j.at("labels");
    if (!l.is_array() || l.size() != n) malformed("labels must be a list of " + std::to_string(n) + " strings");
    for (const auto& s : l) {
      if (!s.is_string()) malformed("labels must be strings");
      labels.push_back(s.get<std::string>());
    }
  }

  const Json& t = member(j, "table");
  if (!t.is_array() || t.size() != n) malformed("table must have " + std::to_string(n) + " rows");
  StructureTable table;
  for (const auto& row : t) table.push_back(vec_list(row, field, n, n, "each table row"));

  AlgebraTags tags;
  if (j.contains("matrix_side")) {
    const Json& s = j.at("matrix_side");
    if (!s.is_number_unsigned() || s.get<std::size_t>() * s.get<std::size_t>() != n)
      malformed("matrix_side squared must equal dim");
    const Algebra standard = matrix_algebra(field, s.get<std::size_t>());
    if (standard.table() != table) malformed("matrix_side is set but the table is not the matrix-unit table");
    tags = standard.tags();
  }
  if (j.contains("construction") && j.at("construction").is_string())
    tags.construction = j.at("construction").get<std::string>();
  Algebra plain = Algebra::build(field, table, labels, tags);
  if (!j.contains("complement")) return plain;
  tags.complement = subspace_from_json(j.at("complement"), plain);
  return Algebra::build(field, std::move(table), std::move(labels), std::move(tags));
}

Json map_to_json(const LinMap& m) {
  Json cols = Json::array();
  for (const auto& c : m.columns()) cols.push_back(vec_to_json(c));
  return Json{{"columns", std::move(cols)}};
}

LinMap map_from_json(const Json& j, const Algebra& a) {
  return LinMap::from_columns(a.field(), vec_list(member(j, "columns"), a.field(), a.dim(), a.dim(), "columns"));
}

Json element_to_json(const Element& x) { return Json{{"coords", vec_to_json(x)}}; }

Element element_from_json(const Json& j, const Algebra& a) {
  return vec_from_json(member(j, "coords"), a.field(), a.dim());
}

Json subspace_to_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& b : s.basis()) basis.push_back(vec_to_json(b));
  return Json{{"basis", std::move(basis)}};
}

Subspace subspace_from_json(const Json& j, const Algebra& a) {
  const Json& basis = member(j, "basis");
  if (!basis.is_array()) malformed("basis must be a list of coordinate lists");
  const std::vector<Vec> vs = vec_list(basis, a.field(), a.dim(), basis.size(), "basis");
  return Subspace::span(a.field(), a.dim(), vs);
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    malformed(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) malformed("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace fdalg::io
