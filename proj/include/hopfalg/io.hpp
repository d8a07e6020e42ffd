#pragma once

#include "constructions.hpp"
#include "maschke.hpp"

#include <fstream>
#include <sstream>
#include <variant>

namespace hopfalg {

// Any loadable object: a Hopf algebroid or a bare algebra, over Q or GF(p).
using Object = std::variant<HopfAlgebroidData<mpq_class>, HopfAlgebroidData<Fp>, FinAlgebra<mpq_class>, FinAlgebra<Fp>>;

namespace detail {

inline const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw InvalidInput(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InvalidInput(where + ": missing \"" + key + "\"");
  return *it;
}

inline void only_keys(const json& j, std::initializer_list<const char*> keys, const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = it.key() == "comment";
    for (const char* k : keys) known = known || it.key() == k;
    if (!known) throw InvalidInput(where + ": unexpected key \"" + it.key() + "\"");
  }
}

template <class K>
Vec<K> vec_from_json(const Field& f, const json& j, size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n)
    throw InvalidInput(where + ": expected an array of " + std::to_string(n) + " scalars");
  Vec<K> v;
  v.reserve(n);
  for (auto& x : j) v.push_back(Scalar<K>::from_json(f, x));
  return v;
}

}  // namespace detail

template <class K>
Mat<K> mat_from_json(const Field& f, const json& j, size_t rows, size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows)
    throw InvalidInput(where + ": expected " + std::to_string(rows) + " rows of length " + std::to_string(cols));
  Mat<K> m(f, rows, cols);
  for (size_t i = 0; i < rows; ++i) m.set_row(i, detail::vec_from_json<K>(f, j[i], cols, where));
  return m;
}

template <class K>
json algebra_to_json(const FinAlgebra<K>& a) {
  json j;
  j["dim"] = a.dim();
  j["unit"] = vec_to_json(a.one());
  json mult = json::array();
  for (size_t i = 0; i < a.dim(); ++i) {
    json row = json::array();
    for (size_t k = 0; k < a.dim(); ++k) row.push_back(vec_to_json(a.basis_product(i, k)));
    mult.push_back(std::move(row));
  }
  j["mult"] = std::move(mult);
  return j;
}

template <class K>
FinAlgebra<K> algebra_from_json(const Field& f, const json& j, const std::string& where) {
  detail::only_keys(j, {"dim", "unit", "mult", "field"}, where);
  const json& d = detail::member(j, "dim", where);
  if (!d.is_number_unsigned() || d.get<size_t>() == 0) throw InvalidInput(where + ".dim: expected a positive integer");
  size_t n = d.get<size_t>();
  Vec<K> unit = detail::vec_from_json<K>(f, detail::member(j, "unit", where), n, where + ".unit");
  const json& m = detail::member(j, "mult", where);
  if (!m.is_array() || m.size() != n) throw InvalidInput(where + ".mult: expected " + std::to_string(n) + " rows");
  std::vector<std::vector<Vec<K>>> mult(n);
  for (size_t i = 0; i < n; ++i) {
    if (!m[i].is_array() || m[i].size() != n)
      throw InvalidInput(where + ".mult[" + std::to_string(i) + "]: expected " + std::to_string(n) + " entries");
    for (size_t k = 0; k < n; ++k)
      mult[i].push_back(detail::vec_from_json<K>(f, m[i][k], n,
                                                 where + ".mult[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
  }
  return mk_algebra(f, n, mult, unit);
}

template <class K>
json side_to_json(const BialgebroidData<K>& d) {
  json j;
  j["base"] = algebra_to_json(d.B);
  j["s"] = mat_to_json(d.s);
  j["t"] = mat_to_json(d.t);
  j["gamma_lift"] = mat_to_json(d.gamma);
  j["pi"] = mat_to_json(d.pi);
  return j;
}

template <class K>
BialgebroidData<K> side_from_json(const FinAlgebra<K>& A, const json& j, const std::string& where) {
  Field f = A.field();
  detail::only_keys(j, {"base", "s", "t", "gamma_lift", "pi"}, where);
  FinAlgebra<K> B = algebra_from_json<K>(f, detail::member(j, "base", where), where + ".base");
  size_t n = A.dim(), m = B.dim();
  return {A,
          B,
          mat_from_json<K>(f, detail::member(j, "s", where), n, m, where + ".s"),
          mat_from_json<K>(f, detail::member(j, "t", where), n, m, where + ".t"),
          mat_from_json<K>(f, detail::member(j, "gamma_lift", where), n * n, n, where + ".gamma_lift"),
          mat_from_json<K>(f, detail::member(j, "pi", where), m, n, where + ".pi")};
}

template <class K>
json algebroid_to_json(const HopfAlgebroidData<K>& h) {
  json j;
  j["field"] = h.field().name();
  j["total"] = algebra_to_json(h.A());
  j["left"] = side_to_json(h.left);
  j["right"] = side_to_json(h.right);
  j["antipode"] = mat_to_json(h.S);
  return j;
}

// Schema only; the axioms are checked separately so that `check` can report them.
template <class K>
HopfAlgebroidData<K> algebroid_from_json(const Field& f, const json& j) {
  detail::only_keys(j, {"field", "total", "left", "right", "antipode"}, "document");
  FinAlgebra<K> A = algebra_from_json<K>(f, detail::member(j, "total", "document"), "total");
  size_t n = A.dim();
  return {side_from_json(A, detail::member(j, "left", "document"), "left"),
          side_from_json(A, detail::member(j, "right", "document"), "right"),
          mat_from_json<K>(f, detail::member(j, "antipode", "document"), n, n, "antipode")};
}

inline Field field_from_json(const json& j) {
  const json& fj = detail::member(j, "field", "document");
  if (!fj.is_string()) throw InvalidInput("field: expected \"Q\" or \"GF(p)\"");
  return Field::parse(fj.get<std::string>());
}

// A document with "total" is a Hopf algebroid; one with "dim" is an algebra.
inline Object object_from_json(const json& j) {
  Field f = field_from_json(j);
  bool algebroid = j.contains("total");
  if (!algebroid && !j.contains("dim")) throw InvalidInput("document: neither a Hopf algebroid nor an algebra");
  if (f.kind == Field::Rationals) {
    if (algebroid) return algebroid_from_json<mpq_class>(f, j);
    return algebra_from_json<mpq_class>(f, j, "document");
  }
  if (algebroid) return algebroid_from_json<Fp>(f, j);
  return algebra_from_json<Fp>(f, j, "document");
}

inline json object_to_json(const Object& o) {
  return std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, FinAlgebra<mpq_class>> || std::is_same_v<T, FinAlgebra<Fp>>) {
          json j;
          j["field"] = x.field().name();
          json a = algebra_to_json(x);
          for (auto& [k, v] : a.items()) j[k] = v;
          return j;
        } else {
          return algebroid_to_json(x);
        }
      },
      o);
}

// Canonical text: two-space indentation and a trailing newline.
inline std::string canonical_text(const json& j) { return j.dump(2) + "\n"; }

inline json parse_json_text(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(where + ": " + e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Object load_object(const std::string& path) { return object_from_json(parse_json_text(read_file(path), path)); }

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw std::runtime_error("cannot write " + path);
}

// ---------------------------------------------------------------------------
// Catalog

struct UnknownName : InvalidInput {
  using InvalidInput::InvalidInput;
};

inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names = {"lu-ut2-q", "lu-m2-q",     "lu-m2-f5", "lu-dualnumbers-q", "qc2",
                                                 "f5c5",     "sweedler-h4", "ut2-q",    "m2-q"};
  return names;
}

inline Object builtin(const std::string& name) {
  Field Q = Field::rationals(), F5 = Field::prime(5);
  if (name == "lu-ut2-q") return lu_algebroid(upper_triangular2<mpq_class>(Q));
  if (name == "lu-m2-q") return lu_algebroid(matrix_algebra<mpq_class>(Q, 2));
  if (name == "lu-m2-f5") return lu_algebroid(matrix_algebra<Fp>(F5, 2));
  if (name == "lu-dualnumbers-q") return lu_algebroid(dual_numbers<mpq_class>(Q));
  if (name == "qc2") return cyclic_group_hopf<mpq_class>(Q, 2);
  if (name == "f5c5") return cyclic_group_hopf<Fp>(F5, 5);
  if (name == "sweedler-h4") return sweedler_h4<mpq_class>(Q);
  if (name == "ut2-q") return upper_triangular2<mpq_class>(Q);
  if (name == "m2-q") return matrix_algebra<mpq_class>(Q, 2);
  throw UnknownName("unknown example \"" + name + "\"");
}

}  // namespace hopfalg
