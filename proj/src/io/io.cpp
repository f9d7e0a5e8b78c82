#include "leibniz/io.hpp"

#include <fstream>
#include <sstream>

#include "leibniz/error.hpp"

namespace leibniz::io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::size_t index_of(const Json& j, std::size_t bound, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    fail(std::string(what) + " must be a non-negative integer");
  }
  auto i = j.get<std::size_t>();
  if (i >= bound) fail(std::string(what) + " " + std::to_string(i) + " out of range");
  return i;
}

Scalar scalar_of(const Json& j, Field f) {
  if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
  if (j.is_number_integer()) return Scalar(f, j.get<long long>());
  fail("coefficient must be a string or an integer");
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& s : v) out.push_back(s.to_string());
  return out;
}

Vector vector_from_json(const Json& j, Field f, std::size_t n) {
  if (!j.is_array() || j.size() != n) fail("expected a row of length " + std::to_string(n));
  Vector v;
  for (const auto& x : j) v.push_back(scalar_of(x, f));
  return v;
}

Json terms_to_json(const Vector& v) {
  Json terms = Json::array();
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_zero()) terms.push_back({{"basis", k}, {"coeff", v[k].to_string()}});
  }
  return terms;
}

Vector terms_from_json(const Json& j, Field f, std::size_t n) {
  if (!j.is_array()) fail("terms must be an array");
  Vector v = zero_vector(f, n);
  for (const auto& t : j) v[index_of(field_of(t, "basis"), n, "basis index")] += scalar_of(field_of(t, "coeff"), f);
  return v;
}

Json action_to_json(const std::vector<Matrix>& ops) {
  Json out = Json::array();
  for (std::size_t x = 0; x < ops.size(); ++x) {
    for (std::size_t m = 0; m < ops[x].cols(); ++m) {
      Vector c = ops[x].column(m);
      if (is_zero(c)) continue;
      out.push_back({{"x", x}, {"m", m}, {"terms", terms_to_json(c)}});
    }
  }
  return out;
}

std::vector<Matrix> action_from_json(const Json& j, Field f, std::size_t dg, std::size_t dm) {
  std::vector<std::vector<Vector>> cols(dg, std::vector<Vector>(dm, zero_vector(f, dm)));
  if (!j.is_array()) fail("action must be an array");
  for (const auto& e : j) {
    std::size_t x = index_of(field_of(e, "x"), dg, "x index");
    std::size_t m = index_of(field_of(e, "m"), dm, "m index");
    cols[x][m] = add(cols[x][m], terms_from_json(field_of(e, "terms"), f, dm));
  }
  std::vector<Matrix> out;
  for (const auto& c : cols) out.push_back(Matrix::from_columns(f, dm, c));
  return out;
}

}  // namespace

Json field_to_json(Field f) {
  if (f.is_rational()) return "Q";
  return {{"GF", f.characteristic()}};
}

Field field_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
  if (j.is_object() && j.contains("GF") && j.at("GF").is_number_unsigned()) {
    return Field::prime(j.at("GF").get<std::uint64_t>());
  }
  fail("field must be \"Q\" or {\"GF\": p}");
}

Json algebra_to_json(const LeibnizAlgebra& alg) {
  Json brackets = Json::array();
  for (std::size_t i = 0; i < alg.dim(); ++i) {
    for (std::size_t j = 0; j < alg.dim(); ++j) {
      Json terms = terms_to_json(alg.bracket(basis_vector(alg, i), basis_vector(alg, j)));
      if (!terms.empty()) brackets.push_back({{"left", i}, {"right", j}, {"terms", terms}});
    }
  }
  return {{"field", field_to_json(alg.field())}, {"basis", alg.labels()}, {"brackets", brackets}};
}

LeibnizAlgebra algebra_from_json(const Json& j) {
  Field f = j.is_object() && j.contains("field") ? field_from_json(j.at("field")) : Field::rationals();
  const Json& basis = field_of(j, "basis");
  if (!basis.is_array()) fail("basis must be an array of names");
  std::vector<std::string> labels;
  for (const auto& b : basis) {
    if (!b.is_string()) fail("basis names must be strings");
    labels.push_back(b.get<std::string>());
  }
  const std::size_t d = labels.size();
  std::vector<Vector> table(d * d, zero_vector(f, d));
  if (j.contains("brackets")) {
    const Json& brackets = j.at("brackets");
    if (!brackets.is_array()) fail("brackets must be an array");
    for (const auto& b : brackets) {
      std::size_t l = index_of(field_of(b, "left"), d, "left index");
      std::size_t r = index_of(field_of(b, "right"), d, "right index");
      table[l * d + r] = add(table[l * d + r], terms_from_json(field_of(b, "terms"), f, d));
    }
  }
  LeibnizAlgebra alg(f, labels);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) alg.set_bracket(i, k, table[i * d + k]);
  }
  return alg;
}

Json subspace_to_json(const Subspace& s) {
  Json rows = Json::array();
  for (const auto& v : s.basis_vectors()) rows.push_back(vector_to_json(v));
  return {{"span", rows}};
}

Subspace subspace_from_json(const Json& j, Field f, std::size_t ambient) {
  const Json& rows = field_of(j, "span");
  if (!rows.is_array()) fail("span must be an array of rows");
  std::vector<Vector> vs;
  for (const auto& r : rows) vs.push_back(vector_from_json(r, f, ambient));
  return Subspace::span(f, ambient, vs);
}

Json pair_to_json(const Pair& p) { return {{"algebra", algebra_to_json(p.g)}, {"ideal", subspace_to_json(p.n)}}; }

Pair pair_from_json(const Json& j) {
  LeibnizAlgebra g = algebra_from_json(field_of(j, "algebra"));
  return Pair::make(g, subspace_from_json(field_of(j, "ideal"), g.field(), g.dim()));
}

Json crossed_module_to_json(const CrossedModule& cm) {
  Json delta = Json::array();
  for (std::size_t r = 0; r < cm.delta.rows(); ++r) delta.push_back(vector_to_json(cm.delta.dense_row(r)));
  return {{"m", algebra_to_json(cm.m)},
          {"g", algebra_to_json(cm.g)},
          {"delta", delta},
          {"left_action", action_to_json(cm.left)},
          {"right_action", action_to_json(cm.right)}};
}

CrossedModule crossed_module_from_json(const Json& j) {
  CrossedModule cm;
  cm.m = algebra_from_json(field_of(j, "m"));
  cm.g = algebra_from_json(field_of(j, "g"));
  if (cm.m.field() != cm.g.field()) throw Error(ErrorCode::FieldMismatch, "m and g over different fields");
  const Field f = cm.m.field();
  const Json& delta = field_of(j, "delta");
  if (!delta.is_array() || delta.size() != cm.g.dim()) fail("delta needs one row per basis element of g");
  std::vector<Vector> rows;
  for (const auto& r : delta) rows.push_back(vector_from_json(r, f, cm.m.dim()));
  cm.delta = Matrix::from_rows(f, cm.m.dim(), rows);
  cm.left = action_from_json(j.value("left_action", Json::array()), f, cm.g.dim(), cm.m.dim());
  cm.right = action_from_json(j.value("right_action", Json::array()), f, cm.g.dim(), cm.m.dim());
  return cm;
}

namespace {

Json parse_with_origin(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(origin + e.what());
  }
}

}  // namespace

Json parse(const std::string& text) { return parse_with_origin(text, ""); }

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_with_origin(buf.str(), path + ": ");
}

std::string emit(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace leibniz::io
