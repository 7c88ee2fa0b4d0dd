#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dehnkit/matrix.hpp"
#include "dehnkit/poly.hpp"

namespace dehnkit {

/// Plain Gauss–Jordan inverse; the reference the block formula is checked against.
Mat4 gauss_inverse(const Mat4& m);
/// Schur-complement block inverse around A₁. Throws SingularMatrix / SingularBlock.
Mat4 block_inverse(const Mat4& m);
/// Uses the block formula when A₁ is invertible, elimination otherwise.
Mat4 inverse(const Mat4& m);

Poly char_poly(const Mat4& m);
Poly char_poly(const Mat2Q& m);
Poly min_poly(const Mat4& m);
Poly min_poly(const Mat2Q& m);
Mat4 eval(const Poly& p, const Mat4& m);
Mat2Q eval(const Poly& p, const Mat2Q& m);

/// Exact multiplicative order via cyclotomic factorization of the minimal polynomial.
std::optional<int> finite_order(const Mat4& m);
std::optional<int> finite_order(const Mat2Q& m);

/// (tr A)² − 4 det A.
Rational disc2(const Mat2Q& a);

/// Companion matrix of a monic quadratic x² + c₁x + c₀: [[0, −c₀],[1, −c₁]].
Mat2Q companion(const Poly& p);

struct EvenQuarticSplit {
    enum class Kind { Irreducible, Biquadratic, Symmetric } kind = Kind::Irreducible;
    /// Biquadratic: (x²+m)(x²+n). Symmetric: (x²+mx+n)(x²−mx+n), m > 0.
    Rational m, n;
    std::vector<Poly> factors() const;
    std::string str() const;
};

/// Factor x⁴ + a x² + b over ℚ.
EvenQuarticSplit factor_even_quartic(const Rational& a, const Rational& b);

}  // namespace dehnkit
