#pragma once

#include <wsym/bilinear_form.hpp>
#include <wsym/catalog.hpp>
#include <wsym/homogeneous.hpp>
#include <wsym/lie_algebra.hpp>
#include <wsym/report.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace wsym::io {

/// Rationals are written as "p/q" or "p"; integers are accepted on input.
inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
  throw std::invalid_argument("expected a rational as \"p/q\" string or integer, got " + j.dump());
}

inline json algebra_to_json(const LieAlgebra& g) {
  json brackets = json::array();
  for (const auto& b : g.upper_brackets()) {
    json terms = json::array();
    for (const auto& t : b.terms) terms.push_back({{"k", g.names()[t.k]}, {"coeff", to_string(t.coeff)}});
    brackets.push_back({{"i", g.names()[b.i]}, {"j", g.names()[b.j]}, {"terms", terms}});
  }
  return {{"dim", g.dim()}, {"basis", g.names()}, {"brackets", brackets}};
}

inline LieAlgebra algebra_from_json(const json& j) {
  const auto names = j.at("basis").get<std::vector<std::string>>();
  if (j.at("dim").get<std::size_t>() != names.size()) throw std::invalid_argument("algebra: dim does not match basis length");
  LieAlgebra shell = LieAlgebra::from_brackets(names, {});
  std::vector<BracketSpec> brackets;
  for (const auto& b : j.value("brackets", json::array())) {
    const std::size_t i = shell.index_of(b.at("i").get<std::string>());
    const std::size_t k = shell.index_of(b.at("j").get<std::string>());
    if (i >= k) throw std::invalid_argument("algebra: bracket [" + names[i] + "," + names[k] + "] must list i before j in basis order");
    BracketSpec s{i, k, {}};
    for (const auto& t : b.at("terms")) s.terms.push_back({shell.index_of(t.at("k").get<std::string>()), rational_from_json(t.at("coeff"))});
    brackets.push_back(std::move(s));
  }
  return LieAlgebra::from_brackets(names, brackets);
}

inline json form_to_json(const BilinearForm& f) {
  json gram = json::array();
  for (std::size_t i = 0; i < f.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < f.dim(); ++j) row.push_back(to_string(f.gram()(i, j)));
    gram.push_back(row);
  }
  return {{"dim", f.dim()}, {"gram", gram}};
}

inline BilinearForm form_from_json(const json& j) {
  const std::size_t n = j.at("dim").get<std::size_t>();
  const json& rows = j.at("gram");
  if (rows.size() != n) throw std::invalid_argument("form: gram has wrong number of rows");
  Matrix g(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("form: gram row " + std::to_string(i + 1) + " has wrong length");
    for (std::size_t k = 0; k < n; ++k) g(i, k) = rational_from_json(rows[i][k]);
  }
  return BilinearForm(std::move(g));
}

namespace detail {

inline json frame_to_json(const LieAlgebra& g, const std::vector<Vector>& frame) {
  json out = json::array();
  for (const auto& v : frame) {
    std::optional<std::size_t> unit;
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) {
        ++nonzero;
        if (v[i] == 1) unit = i;
      }
    if (nonzero == 1 && unit) out.push_back(g.names()[*unit]);
    else out.push_back(wsym::detail::vector_json(v));
  }
  return out;
}

/// Each entry is a basis name or a coordinate array.
inline std::vector<Vector> frame_from_json(const LieAlgebra& g, const json& j) {
  std::vector<Vector> frame;
  for (const auto& e : j) {
    if (e.is_string()) {
      frame.push_back(g.basis_vector(e.get<std::string>()));
    } else if (e.is_array()) {
      if (e.size() != g.dim()) throw std::invalid_argument("basis vector has wrong length");
      Vector v;
      for (const auto& x : e) v.push_back(rational_from_json(x));
      frame.push_back(std::move(v));
    } else {
      throw std::invalid_argument("basis entry must be a name or a coordinate array");
    }
  }
  return frame;
}

}  // namespace detail

struct SpaceBundle {
  std::string id;
  ReductiveSpace space;
  std::optional<Subspace> nilradical;
};

inline json space_to_json(const ReductiveSpace& s, const std::optional<Subspace>& nilradical = std::nullopt, const std::string& id = "") {
  json j = {{"algebra", algebra_to_json(s.algebra())},
            {"h_basis", detail::frame_to_json(s.algebra(), s.h_frame())},
            {"m_basis", detail::frame_to_json(s.algebra(), s.m_frame())},
            {"metric", form_to_json(s.metric())}};
  if (nilradical) j["nilradical"] = detail::frame_to_json(s.algebra(), nilradical->basis());
  if (!id.empty()) j["id"] = id;
  return j;
}

inline json catalog_entry_to_json(const CatalogEntry& e) {
  json j = space_to_json(e.space, e.nilradical, e.id);
  json params = json::object();
  for (const auto& [k, v] : e.params) params[k] = to_string(v);
  j["params"] = params;
  j["provenance"] = e.provenance;
  return j;
}

inline SpaceBundle space_from_json(const json& j) {
  LieAlgebra g = algebra_from_json(j.at("algebra"));
  auto h = detail::frame_from_json(g, j.value("h_basis", json::array()));
  auto m = detail::frame_from_json(g, j.at("m_basis"));
  BilinearForm metric = form_from_json(j.at("metric"));
  std::optional<Subspace> nil;
  if (j.contains("nilradical")) nil = Subspace::span(g.dim(), detail::frame_from_json(g, j.at("nilradical")));
  std::string id = j.value("id", std::string("file"));
  return {id, make_reductive_space(std::move(g), std::move(h), std::move(m), std::move(metric)), std::move(nil)};
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in '" + path + "': " + e.what());
  }
}

}  // namespace wsym::io
