#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dehnkit/rational.hpp"

namespace dehnkit {

/// a + b·√D in an imaginary quadratic field; D is kept square-free and negative.
///
/// A value with b = 0 is a plain rational and coerces into any field, so mixing
/// it with another D is fine. Two irrational operands with different D throw
/// FieldMismatch.
class QuadNum {
public:
    QuadNum() = default;
    QuadNum(const Rational& a) : a_(a) {}  // NOLINT(implicit)
    QuadNum(long a) : a_(a) {}             // NOLINT(implicit)
    QuadNum(int a) : a_(static_cast<long>(a)) {}  // NOLINT(implicit)
    QuadNum(const Rational& a, long D);
    QuadNum(const Rational& a, const Rational& b, long D);

    /// √D itself (reduced).
    static QuadNum sqrt_of(long D);
    /// Accepts "sqrt(D)", "a", "a/b", "a+c/d*sqrt(D)", "c*sqrt(D)", "-sqrt(D)".
    static QuadNum parse(std::string_view s);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    long D() const { return D_; }

    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    QuadNum with_field(long D) const;

    QuadNum operator-() const { return QuadNum(-a_, -b_, D_, raw_tag{}); }
    QuadNum& operator+=(const QuadNum& o);
    QuadNum& operator-=(const QuadNum& o);
    QuadNum& operator*=(const QuadNum& o);
    QuadNum& operator/=(const QuadNum& o);
    friend QuadNum operator+(QuadNum x, const QuadNum& y) { return x += y; }
    friend QuadNum operator-(QuadNum x, const QuadNum& y) { return x -= y; }
    friend QuadNum operator*(QuadNum x, const QuadNum& y) { return x *= y; }
    friend QuadNum operator/(QuadNum x, const QuadNum& y) { return x /= y; }

    /// Coercion-aware: equal parts, and the same D whenever b ≠ 0.
    friend bool operator==(const QuadNum& x, const QuadNum& y);

    QuadNum inv() const;
    QuadNum pow(long e) const;

    std::string str() const;

private:
    struct raw_tag {};
    QuadNum(Rational a, Rational b, long D, raw_tag) : a_(std::move(a)), b_(std::move(b)), D_(D) {}
    static long common_field(const QuadNum& x, const QuadNum& y);

    Rational a_;
    Rational b_;
    long D_ = -1;
};

std::ostream& operator<<(std::ostream& os, const QuadNum& x);

QuadNum conj(const QuadNum& x);
/// x·conj(x) = a² − b²D.
Rational norm(const QuadNum& x);
/// The square root in the same field with the canonical sign (b > 0, or b = 0 and a ≥ 0).
std::optional<QuadNum> sqrt_in_field(const QuadNum& x);

struct RootOfUnity {
    QuadNum value;
    int order;
};
/// All roots of unity lying in ℚ(√D), sorted by (order, b).
std::vector<RootOfUnity> roots_of_unity_in_field(long D);
/// Multiplicative order when x is one of the field's roots of unity.
std::optional<int> root_of_unity_order(const QuadNum& x);

}  // namespace dehnkit
