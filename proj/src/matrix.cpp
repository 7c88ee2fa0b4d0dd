#include "dehnkit/matrix.hpp"

#include <sstream>

namespace dehnkit {

Mat2K to_field(const Mat2Q& m, long D) {
    return Mat2K(QuadNum(m.e[0], D), QuadNum(m.e[1], D), QuadNum(m.e[2], D), QuadNum(m.e[3], D));
}

Mat2K conj(const Mat2K& m) { return Mat2K(conj(m.e[0]), conj(m.e[1]), conj(m.e[2]), conj(m.e[3])); }

std::string to_string(const Mat2Q& m) {
    return "[[" + m.e[0].str() + "," + m.e[1].str() + "],[" + m.e[2].str() + "," + m.e[3].str() + "]]";
}

std::string to_string(const Mat2K& m) {
    return "[[" + m.e[0].str() + "," + m.e[1].str() + "],[" + m.e[2].str() + "," + m.e[3].str() + "]]";
}

Mat4 Mat4::identity() { return scalar(Rational(1)); }

Mat4 Mat4::scalar(const Rational& s) {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = s;
    return m;
}

Mat4 Mat4::from_blocks(const Mat2Q& a1, const Mat2Q& a2, const Mat2Q& a3, const Mat2Q& a4) {
    Mat4 m;
    const Mat2Q* blocks[4] = {&a1, &a2, &a3, &a4};
    for (int k = 0; k < 4; ++k) {
        int r0 = (k / 2) * 2, c0 = (k % 2) * 2;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m(r0 + i, c0 + j) = (*blocks[k])(i, j);
    }
    return m;
}

Mat4 Mat4::direct_sum(const Mat2Q& a, const Mat2Q& b) { return from_blocks(a, Mat2Q(), Mat2Q(), b); }

Mat4 Mat4::anti_sum(const Mat2Q& a, const Mat2Q& b) { return from_blocks(Mat2Q(), a, b, Mat2Q()); }

Mat4 Mat4::iota() { return direct_sum(Mat2Q::identity(), -Mat2Q::identity()); }

Mat2Q Mat4::block(int k) const {
    int r0 = ((k - 1) / 2) * 2, c0 = ((k - 1) % 2) * 2;
    return Mat2Q((*this)(r0, c0), (*this)(r0, c0 + 1), (*this)(r0 + 1, c0), (*this)(r0 + 1, c0 + 1));
}

Rational Mat4::det() const {
    // Exact Gaussian elimination over ℚ.
    std::array<Rational, 16> a = e;
    Rational d(1);
    for (int c = 0; c < 4; ++c) {
        int p = -1;
        for (int r = c; r < 4; ++r)
            if (!a[4 * r + c].is_zero()) { p = r; break; }
        if (p < 0) return Rational(0);
        if (p != c) {
            for (int j = 0; j < 4; ++j) std::swap(a[4 * p + j], a[4 * c + j]);
            d = -d;
        }
        d *= a[4 * c + c];
        Rational inv = a[4 * c + c].inv();
        for (int r = c + 1; r < 4; ++r) {
            if (a[4 * r + c].is_zero()) continue;
            Rational f = a[4 * r + c] * inv;
            for (int j = c; j < 4; ++j) a[4 * r + j] -= f * a[4 * c + j];
        }
    }
    return d;
}

Rational Mat4::trace() const { return e[0] + e[5] + e[10] + e[15]; }

Mat4 Mat4::transpose() const {
    Mat4 t;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) t(i, j) = (*this)(j, i);
    return t;
}

Mat4 Mat4::pow(long n) const {
    if (n < 0) raise(ErrorKind::PreconditionFailed, "negative power of Mat4; invert first");
    Mat4 r = identity(), b = *this;
    while (n > 0) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

bool Mat4::is_identity() const { return *this == identity(); }

bool Mat4::is_scalar() const { return *this == scalar(e[0]); }

Mat4 operator+(const Mat4& x, const Mat4& y) {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.e[i] = x.e[i] + y.e[i];
    return r;
}

Mat4 operator-(const Mat4& x, const Mat4& y) {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.e[i] = x.e[i] - y.e[i];
    return r;
}

Mat4 Mat4::operator-() const {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.e[i] = -e[i];
    return r;
}

Mat4 operator*(const Mat4& x, const Mat4& y) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const Rational& xik = x(i, k);
            if (xik.is_zero()) continue;
            for (int j = 0; j < 4; ++j)
                if (!y(k, j).is_zero()) r(i, j) += xik * y(k, j);
        }
    return r;
}

Mat4 operator*(const Rational& k, const Mat4& x) {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.e[i] = k * x.e[i];
    return r;
}

int Mat4::cmp_lex(const Mat4& x, const Mat4& y) {
    for (int i = 0; i < 16; ++i) {
        int c = Rational::cmp_tuple(x.e[i], y.e[i]);
        if (c != 0) return c;
    }
    return 0;
}

std::size_t Mat4::hash() const {
    std::size_t h = 1469598103934665603ull;
    for (const auto& r : e) h = (h ^ r.hash()) * 1099511628211ull;
    return h;
}

std::string Mat4::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < 4; ++i) {
        os << (i ? ",[" : "[");
        for (int j = 0; j < 4; ++j) os << (j ? "," : "") << (*this)(i, j);
        os << "]";
    }
    os << "]";
    return os.str();
}

}  // namespace dehnkit
