#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dehnkit/rational.hpp"

namespace dehnkit {

/// Univariate polynomial over ℚ, coefficients in ascending degree, no trailing zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> ascending);
    static Poly x_pow(int n);
    static Poly constant(const Rational& c);

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back() == Rational(1); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    Poly monic() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& p, const Poly& q);
    friend Poly operator-(const Poly& p, const Poly& q);
    friend Poly operator*(const Poly& p, const Poly& q);
    friend Poly operator*(const Rational& c, const Poly& p);
    friend bool operator==(const Poly& p, const Poly& q) { return p.c_ == q.c_; }

    /// (quotient, remainder); divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    bool divides(const Poly& p) const { return p.divmod(*this).second.is_zero(); }
    Rational eval(const Rational& x) const;

    /// Human form, descending: "x^2-x+1", "x^2+1/2".
    std::string str() const;

private:
    void trim();
    std::vector<Rational> c_;
};

Poly gcd(Poly a, Poly b);  // monic

/// Φ_n for any n ≥ 1.
Poly cyclotomic(int n);
/// Orders whose cyclotomic polynomial has degree ≤ 4.
const std::vector<int>& small_cyclotomic_orders();
/// Factor p into distinct cyclotomics of small order; returns the orders, or none.
std::optional<std::vector<int>> cyclotomic_factorization(const Poly& p);

}  // namespace dehnkit
