#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "dehnkit/errors.hpp"
#include "dehnkit/quadnum.hpp"
#include "dehnkit/rational.hpp"

namespace dehnkit {

/// 2×2 matrix over ℚ or ℚ(√D). Row-major: {a, b, c, d} = [[a,b],[c,d]].
template <class T>
struct Mat2 {
    std::array<T, 4> e{T(0), T(0), T(0), T(0)};

    Mat2() = default;
    Mat2(T a, T b, T c, T d) : e{std::move(a), std::move(b), std::move(c), std::move(d)} {}
    static Mat2 identity() { return Mat2(T(1), T(0), T(0), T(1)); }
    static Mat2 scalar(const T& s) { return Mat2(s, T(0), T(0), s); }
    static Mat2 diag(const T& x, const T& y) { return Mat2(x, T(0), T(0), y); }

    const T& operator()(int i, int j) const { return e[2 * i + j]; }
    T& operator()(int i, int j) { return e[2 * i + j]; }

    T det() const { return e[0] * e[3] - e[1] * e[2]; }
    T trace() const { return e[0] + e[3]; }
    bool is_zero() const { return e[0] == T(0) && e[1] == T(0) && e[2] == T(0) && e[3] == T(0); }
    bool is_scalar() const { return e[1] == T(0) && e[2] == T(0) && e[0] == e[3]; }
    /// adj(A) = det(A)·A⁻¹.
    Mat2 adjugate() const { return Mat2(e[3], -e[1], -e[2], e[0]); }
    Mat2 inverse() const {
        T d = det();
        if (d == T(0)) raise(ErrorKind::SingularMatrix, "singular 2x2 matrix");
        T k = T(1) / d;
        return k * adjugate();
    }
    Mat2 transpose() const { return Mat2(e[0], e[2], e[1], e[3]); }
    Mat2 pow(long n) const {
        if (n < 0) return inverse().pow(-n);
        Mat2 r = identity(), b = *this;
        while (n > 0) {
            if (n & 1) r = r * b;
            b = b * b;
            n >>= 1;
        }
        return r;
    }

    friend Mat2 operator+(const Mat2& x, const Mat2& y) {
        return Mat2(x.e[0] + y.e[0], x.e[1] + y.e[1], x.e[2] + y.e[2], x.e[3] + y.e[3]);
    }
    friend Mat2 operator-(const Mat2& x, const Mat2& y) {
        return Mat2(x.e[0] - y.e[0], x.e[1] - y.e[1], x.e[2] - y.e[2], x.e[3] - y.e[3]);
    }
    Mat2 operator-() const { return Mat2(-e[0], -e[1], -e[2], -e[3]); }
    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return Mat2(x.e[0] * y.e[0] + x.e[1] * y.e[2], x.e[0] * y.e[1] + x.e[1] * y.e[3],
                    x.e[2] * y.e[0] + x.e[3] * y.e[2], x.e[2] * y.e[1] + x.e[3] * y.e[3]);
    }
    friend Mat2 operator*(const T& k, const Mat2& x) { return Mat2(k * x.e[0], k * x.e[1], k * x.e[2], k * x.e[3]); }
    friend bool operator==(const Mat2& x, const Mat2& y) { return x.e == y.e; }
};

using Mat2Q = Mat2<Rational>;
using Mat2K = Mat2<QuadNum>;

Mat2K to_field(const Mat2Q& m, long D);
Mat2K conj(const Mat2K& m);
std::string to_string(const Mat2Q& m);
std::string to_string(const Mat2K& m);

/// 4×4 rational matrix, row-major.
struct Mat4 {
    std::array<Rational, 16> e{};

    static Mat4 identity();
    static Mat4 scalar(const Rational& s);
    static Mat4 from_blocks(const Mat2Q& a1, const Mat2Q& a2, const Mat2Q& a3, const Mat2Q& a4);
    /// A ⊕ B (block diagonal).
    static Mat4 direct_sum(const Mat2Q& a, const Mat2Q& b);
    /// A ⊕̃ B: A in the upper-right, B in the lower-left.
    static Mat4 anti_sum(const Mat2Q& a, const Mat2Q& b);
    /// ι = diag(1, 1, −1, −1).
    static Mat4 iota();

    const Rational& operator()(int i, int j) const { return e[4 * i + j]; }
    Rational& operator()(int i, int j) { return e[4 * i + j]; }

    /// Blocks numbered 1..4 as [[A₁, A₂],[A₃, A₄]].
    Mat2Q block(int k) const;

    Rational det() const;
    Rational trace() const;
    Mat4 transpose() const;
    Mat4 pow(long n) const;
    bool is_identity() const;
    bool is_scalar() const;

    friend Mat4 operator+(const Mat4& x, const Mat4& y);
    friend Mat4 operator-(const Mat4& x, const Mat4& y);
    Mat4 operator-() const;
    friend Mat4 operator*(const Mat4& x, const Mat4& y);
    friend Mat4 operator*(const Rational& k, const Mat4& x);
    friend bool operator==(const Mat4& x, const Mat4& y) { return x.e == y.e; }

    /// Lexicographic over entries by (numerator, denominator).
    static int cmp_lex(const Mat4& x, const Mat4& y);
    std::size_t hash() const;
    std::string str() const;
};

struct Mat4Hash {
    std::size_t operator()(const Mat4& m) const { return m.hash(); }
};
struct Mat4Less {
    bool operator()(const Mat4& x, const Mat4& y) const { return Mat4::cmp_lex(x, y) < 0; }
};

}  // namespace dehnkit
