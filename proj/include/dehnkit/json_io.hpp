#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dehnkit/catalog.hpp"
#include "dehnkit/fillings.hpp"
#include "dehnkit/funceq.hpp"
#include "dehnkit/groups.hpp"
#include "dehnkit/matrix.hpp"
#include "dehnkit/quadnum.hpp"
#include "dehnkit/rational.hpp"

namespace dehnkit::io {

using json = nlohmann::json;

/// Rationals travel as canonical strings; integers are accepted on input.
json to_json(const Rational& r);
Rational rational_from(const json& j);

/// {"a": "1/2", "b": "0", "D": -2}; a bare string or number is read as a rational.
json to_json(const QuadNum& x);
QuadNum quad_from(const json& j);

/// {"rows": [[...], ...]}.
json to_json(const Mat4& m);
json to_json(const Mat2Q& m);
json to_json(const Mat2K& m);
/// Accepts {"rows": [...]} or a bare array of four rows of four entries.
Mat4 mat4_from(const json& j);
Mat2Q mat2_from(const json& j);

json to_json(const Slope& s);
json to_json(const SlopePair& p);

/// {"degree": n, "coeffs": [...]} listing coefficients from u₁ⁿ down to u₂ⁿ.
json to_json(const HomPoly& f);
json to_json(const HomPair& t);

json to_json(const KVector& k);

/// Reads a JSON document from a file; MalformedInput on I/O or syntax errors.
json read_file(const std::string& path);

/// A list of matrices from {"generators": [...]}, {"elements": [...]} or a bare array.
std::vector<Mat4> matrices_from(const json& j, const char* key);

/// "a,b;c,d" inline 2×2 rational matrix.
Mat2Q parse_mat2(const std::string& s);

}  // namespace dehnkit::io
