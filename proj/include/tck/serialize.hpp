#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tck/finite_group.hpp"
#include "tck/matrix.hpp"
#include "tck/prime_support.hpp"
#include "tck/rational.hpp"
#include "tck/smith.hpp"

namespace tck {

using Json = nlohmann::ordered_json;

// Integers that fit in int64 become JSON numbers, everything else a string.
Json to_json(const mpz_class& v);
Json to_json(const Rational& v);
Json to_json(const PrimeSupport& s);
Json to_json(const IntegerMatrix& m);
Json to_json(const Matrix<Rational>& m);

// Integer or "p/q" string.
Rational rational_from_json(const Json& j);
mpz_class integer_from_json(const Json& j);

// Nested arrays; accepts JSON text or an already parsed value.
IntegerMatrix integer_matrix_from_json(const Json& j);
Matrix<Rational> rational_matrix_from_json(const Json& j);
Json parse_json_text(const std::string& text);

// { "encoding": "perm" | "matmod", "modulus": p, "generators": [...] }.
// Permutations are 0-based image arrays; matrices are row lists (or flat
// row-major lists with "dimension").
FiniteGroup group_from_json(const Json& j);
// { "images": [...] }, one code per generator in the group's format.
GroupAutomorphism automorphism_from_json(const FiniteGroup& g, const Json& j);

Json code_to_json(const FiniteGroup& g, const Code& c);

}  // namespace tck
