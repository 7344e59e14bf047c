#include "deformlab/json_io.hpp"

#include <set>

namespace deformlab {

namespace {

const Json& require_field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key))
    fail(Errc::ParseError, std::string(what) + ": missing field '" + key + "'");
  return j.at(key);
}

Index require_index(const Json& j, Index bound, const char* what) {
  if (!j.is_number_integer()) fail(Errc::ParseError, std::string(what) + ": expected an integer index");
  const long long v = j.get<long long>();
  if (v < 0 || v >= bound) fail(Errc::ParseError, std::string(what) + ": index out of range");
  return static_cast<Index>(v);
}

Rational require_scalar(const Json& j, const char* what) {
  if (!j.is_string()) fail(Errc::ParseError, std::string(what) + ": scalars must be strings like \"p/q\"");
  return Rational::parse(j.get<std::string>());
}

}  // namespace

Json parse_json_text(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(Errc::ParseError, "invalid JSON");
  return j;
}

Algebra algebra_from_json(const Json& j) {
  const long long dim = require_field(j, "dim", "algebra").get<long long>();
  if (dim < 1) fail(Errc::ParseError, "algebra: dim must be positive");
  Algebra alg = make_algebra<Rational>(static_cast<Index>(dim));
  if (j.contains("unity") && !j.at("unity").is_null())
    alg.unity = require_index(j.at("unity"), alg.dim, "algebra unity");

  if (j.contains("entries")) {
    const Json& entries = j.at("entries");
    if (!entries.is_array()) fail(Errc::ParseError, "algebra: entries must be an array");
    std::set<std::tuple<Index, Index, Index>> seen;
    for (const Json& e : entries) {
      const Index i = require_index(require_field(e, "i", "algebra entry"), alg.dim, "algebra entry i");
      const Index jj = require_index(require_field(e, "j", "algebra entry"), alg.dim, "algebra entry j");
      const Index k = require_index(require_field(e, "k", "algebra entry"), alg.dim, "algebra entry k");
      if (!seen.insert({i, jj, k}).second) fail(Errc::ParseError, "algebra: duplicate entry");
      alg.c(i, jj, k) = require_scalar(require_field(e, "c", "algebra entry"), "algebra entry c");
    }
  }
  return alg;
}

Json algebra_to_json(const Algebra& alg) {
  Json j;
  j["dim"] = alg.dim;
  j["unity"] = alg.unity ? Json(*alg.unity) : Json(nullptr);
  Json entries = Json::array();
  for (Index i = 0; i < alg.dim; ++i)
    for (Index jj = 0; jj < alg.dim; ++jj)
      for (Index k = 0; k < alg.dim; ++k)
        if (!alg.c(i, jj, k).is_zero())
          entries.push_back({{"i", i}, {"j", jj}, {"k", k}, {"c", alg.c(i, jj, k).str()}});
  j["entries"] = std::move(entries);
  return j;
}

Cochain cochain_from_json(const Json& j) {
  const long long degree = require_field(j, "degree", "cochain").get<long long>();
  const long long dim = require_field(j, "dim", "cochain").get<long long>();
  if (degree < 1 || dim < 1) fail(Errc::ParseError, "cochain: degree and dim must be positive");
  Cochain c = Cochain::zero(static_cast<int>(degree), static_cast<Index>(dim));
  if (j.contains("entries")) {
    const Json& entries = j.at("entries");
    if (!entries.is_array()) fail(Errc::ParseError, "cochain: entries must be an array");
    std::set<std::pair<Index, Index>> seen;
    for (const Json& e : entries) {
      const Json& idx = require_field(e, "idx", "cochain entry");
      if (!idx.is_array() || static_cast<long long>(idx.size()) != degree)
        fail(Errc::ParseError, "cochain: idx must list one index per input slot");
      std::vector<Index> multi;
      for (const Json& v : idx) multi.push_back(require_index(v, c.dim, "cochain idx"));
      const Index row = encode_multi(multi, c.dim);
      const Index k = require_index(require_field(e, "k", "cochain entry"), c.dim, "cochain entry k");
      if (!seen.insert({row, k}).second) fail(Errc::ParseError, "cochain: duplicate entry");
      c.coeff(row, k) = require_scalar(require_field(e, "c", "cochain entry"), "cochain entry c");
    }
  }
  return c;
}

Json cochain_to_json(const Cochain& c) {
  Json j;
  j["degree"] = c.degree;
  j["dim"] = c.dim;
  Json entries = Json::array();
  for (Index row = 0; row < c.coeff.rows(); ++row)
    for (Index k = 0; k < c.dim; ++k)
      if (!c.coeff(row, k).is_zero())
        entries.push_back(
            {{"idx", decode_multi(row, c.dim, c.degree)}, {"k", k}, {"c", c.coeff(row, k).str()}});
  j["entries"] = std::move(entries);
  return j;
}

FormalDeformation deformation_from_json(const Json& j) {
  FormalDeformation def;
  def.base = algebra_from_json(require_field(j, "base", "deformation"));
  const Json& terms = require_field(j, "terms", "deformation");
  if (!terms.is_array()) fail(Errc::ParseError, "deformation: terms must be an array");
  for (const Json& t : terms) {
    Cochain c = cochain_from_json(t);
    if (c.degree != 2 || c.dim != def.base.dim)
      fail(Errc::ParseError, "deformation: each term must be a 2-cochain of the base dimension");
    def.terms.push_back(std::move(c));
  }
  return def;
}

Json deformation_to_json(const FormalDeformation& def) {
  Json j;
  j["base"] = algebra_to_json(def.base);
  Json terms = Json::array();
  for (const Cochain& t : def.terms) terms.push_back(cochain_to_json(t));
  j["terms"] = std::move(terms);
  return j;
}

FormalIsomorphism isomorphism_from_json(const Json& j) {
  FormalIsomorphism iso;
  const long long dim = require_field(j, "dim", "isomorphism").get<long long>();
  if (dim < 1) fail(Errc::ParseError, "isomorphism: dim must be positive");
  iso.dim = static_cast<Index>(dim);
  const Json& terms = require_field(j, "terms", "isomorphism");
  if (!terms.is_array()) fail(Errc::ParseError, "isomorphism: terms must be an array");
  for (const Json& t : terms) {
    RatMatrix m = matrix_from_json(t);
    if (m.rows() != iso.dim) fail(Errc::ParseError, "isomorphism: term has wrong dimension");
    iso.terms.push_back(std::move(m));
  }
  return iso;
}

Json isomorphism_to_json(const FormalIsomorphism& iso) {
  Json j;
  j["dim"] = iso.dim;
  Json terms = Json::array();
  for (const RatMatrix& m : iso.terms) terms.push_back(matrix_to_json(m));
  j["terms"] = std::move(terms);
  return j;
}

RatMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail(Errc::ParseError, "matrix: expected a nonempty array of rows");
  const Index n = static_cast<Index>(j.size());
  RatMatrix m(n, n);
  for (Index r = 0; r < n; ++r) {
    const Json& row = j.at(static_cast<std::size_t>(r));
    if (!row.is_array() || static_cast<Index>(row.size()) != n)
      fail(Errc::ParseError, "matrix: expected a square row-major matrix");
    for (Index c = 0; c < n; ++c)
      m(r, c) = require_scalar(row.at(static_cast<std::size_t>(c)), "matrix entry");
  }
  return m;
}

Json matrix_to_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

ParamMatrix param_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) fail(Errc::ParseError, "parametric matrix: expected a nonempty array of rows");
  const Index n = static_cast<Index>(j.size());
  ParamMatrix m(n, n);
  for (Index r = 0; r < n; ++r) {
    const Json& row = j.at(static_cast<std::size_t>(r));
    if (!row.is_array() || static_cast<Index>(row.size()) != n)
      fail(Errc::ParseError, "parametric matrix: expected a square row-major matrix");
    for (Index c = 0; c < n; ++c) {
      const Json& entry = row.at(static_cast<std::size_t>(c));
      if (!entry.is_array()) fail(Errc::ParseError, "parametric matrix: entries are coefficient lists");
      std::vector<Rational> coeffs;
      for (const Json& v : entry) coeffs.push_back(require_scalar(v, "parametric matrix coefficient"));
      m(r, c) = Poly(std::move(coeffs));
    }
  }
  return m;
}

Json param_matrix_to_json(const ParamMatrix& m) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) {
      Json coeffs = Json::array();
      for (const Rational& a : m(r, c).coeffs()) coeffs.push_back(a.str());
      row.push_back(std::move(coeffs));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace deformlab
