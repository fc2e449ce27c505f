#include "tck/serialize.hpp"

#include <limits>

#include "tck/error.hpp"

namespace tck {

Json to_json(const mpz_class& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return Json(v.get_si());
  return Json(v.get_str());
}

Json to_json(const Rational& v) {
  if (v.is_integer()) return to_json(v.numerator());
  return Json(v.to_string());
}

Json to_json(const PrimeSupport& s) {
  Json out = Json::array();
  for (const auto& p : s.primes()) out.push_back(to_json(p));
  return out;
}

Json to_json(const IntegerMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const Matrix<Rational>& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(mpz_class(std::to_string(j.get<long long>())));
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw DomainError("expected an integer or a \"p/q\" string, got " + j.dump());
}

mpz_class integer_from_json(const Json& j) {
  Rational r = rational_from_json(j);
  if (!r.is_integer()) throw DomainError("expected an integer, got " + j.dump());
  return r.numerator();
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("invalid JSON: ") + e.what());
  }
}

namespace {

template <class F>
auto rows_of(const Json& j, F&& entry) {
  if (!j.is_array() || j.empty()) throw DomainError("matrix must be a nonempty array of rows");
  using T = decltype(entry(j));
  std::vector<std::vector<T>> rows;
  for (const auto& row : j) {
    if (!row.is_array() || row.empty()) throw DomainError("matrix rows must be nonempty arrays");
    std::vector<T> r;
    for (const auto& x : row) r.push_back(entry(x));
    if (!rows.empty() && r.size() != rows.front().size()) throw DomainError("matrix rows have unequal lengths");
    rows.push_back(std::move(r));
  }
  return rows;
}

Json unwrap(const Json& j) { return j.is_string() ? parse_json_text(j.get<std::string>()) : j; }

std::uint32_t small_uint(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0 ||
      j.get<long long>() > std::numeric_limits<std::uint32_t>::max())
    throw DomainError(std::string(what) + " must be a nonnegative integer");
  return static_cast<std::uint32_t>(j.get<long long>());
}

Code code_of(const Json& j, Encoding enc, std::uint32_t modulus) {
  if (!j.is_array() || j.empty()) throw DomainError("element code must be a nonempty array");
  Code c;
  for (const auto& x : j) {
    if (x.is_array()) {
      if (enc != Encoding::MatMod) throw DomainError("nested element code in a permutation group");
      for (const auto& y : x) c.push_back(small_uint(y, "matrix entry"));
    } else {
      c.push_back(small_uint(x, "code entry"));
    }
  }
  if (enc == Encoding::MatMod)
    for (auto& v : c) v %= modulus;
  return c;
}

}  // namespace

IntegerMatrix integer_matrix_from_json(const Json& raw) {
  return IntegerMatrix::from_rows(rows_of(unwrap(raw), integer_from_json));
}

Matrix<Rational> rational_matrix_from_json(const Json& raw) {
  auto rows = rows_of(unwrap(raw), rational_from_json);
  Matrix<Rational> m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

FiniteGroup group_from_json(const Json& j) {
  if (!j.is_object()) throw DomainError("group descriptor must be an object");
  std::string enc = j.value("encoding", "");
  if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
    throw DomainError("group descriptor needs a nonempty \"generators\" array");
  if (enc == "perm") {
    std::vector<Code> gens;
    for (const auto& g : j["generators"]) gens.push_back(code_of(g, Encoding::Perm, 0));
    return FiniteGroup::permutations(gens.front().size(), gens);
  }
  if (enc == "matmod") {
    if (!j.contains("modulus")) throw DomainError("matmod group needs \"modulus\"");
    std::uint32_t p = small_uint(j["modulus"], "modulus");
    if (p < 2) throw DomainError("modulus must be >= 2");
    std::vector<Code> gens;
    std::size_t dim = 0;
    for (const auto& g : j["generators"]) {
      gens.push_back(code_of(g, Encoding::MatMod, p));
      std::size_t d = g.front().is_array() ? g.size() : 0;
      if (d == 0) {
        if (!j.contains("dimension")) throw DomainError("flat matrix codes need \"dimension\"");
        d = small_uint(j["dimension"], "dimension");
      }
      if (dim != 0 && d != dim) throw DomainError("generators have different dimensions");
      dim = d;
    }
    return FiniteGroup::matrices(p, dim, gens);
  }
  throw DomainError("unknown encoding \"" + enc + "\" (expected perm or matmod)");
}

GroupAutomorphism automorphism_from_json(const FiniteGroup& g, const Json& j) {
  if (!j.is_object() || !j.contains("images") || !j["images"].is_array())
    throw DomainError("automorphism descriptor needs an \"images\" array");
  std::vector<Code> images;
  for (const auto& x : j["images"]) images.push_back(code_of(x, g.encoding(), g.modulus()));
  return GroupAutomorphism::from_generator_codes(g, images);
}

Json code_to_json(const FiniteGroup& g, const Code& c) {
  if (g.encoding() == Encoding::Perm) return Json(c);
  Json out = Json::array();
  std::size_t d = g.dimension();
  for (std::size_t r = 0; r < d; ++r) {
    Json row = Json::array();
    for (std::size_t k = 0; k < d; ++k) row.push_back(c[r * d + k]);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace tck
