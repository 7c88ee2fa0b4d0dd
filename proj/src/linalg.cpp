#include "dehnkit/linalg.hpp"

#include <numeric>

namespace dehnkit {

Mat4 gauss_inverse(const Mat4& m) {
    Rational a[4][8];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            a[i][j] = m(i, j);
            a[i][j + 4] = Rational(i == j ? 1 : 0);
        }
    for (int c = 0; c < 4; ++c) {
        int p = -1;
        for (int r = c; r < 4; ++r)
            if (!a[r][c].is_zero()) { p = r; break; }
        if (p < 0) raise(ErrorKind::SingularMatrix, "singular 4x4 matrix");
        if (p != c)
            for (int j = 0; j < 8; ++j) std::swap(a[p][j], a[c][j]);
        Rational inv = a[c][c].inv();
        for (int j = 0; j < 8; ++j) a[c][j] *= inv;
        for (int r = 0; r < 4; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            Rational f = a[r][c];
            for (int j = 0; j < 8; ++j) a[r][j] -= f * a[c][j];
        }
    }
    Mat4 out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out(i, j) = a[i][j + 4];
    return out;
}

Mat4 block_inverse(const Mat4& m) {
    Mat2Q a1 = m.block(1), a2 = m.block(2), a3 = m.block(3), a4 = m.block(4);
    if (a1.det().is_zero()) raise(ErrorKind::SingularBlock, "upper-left block is singular");
    Mat2Q a1i = a1.inverse();
    Mat2Q schur = a4 - a3 * a1i * a2;
    if (schur.det().is_zero()) raise(ErrorKind::SingularMatrix, "singular 4x4 matrix (Schur complement)");
    Mat2Q si = schur.inverse();
    Mat2Q b2 = -(a1i * a2 * si);
    Mat2Q b3 = -(si * a3 * a1i);
    Mat2Q b1 = a1i + a1i * a2 * si * a3 * a1i;
    return Mat4::from_blocks(b1, b2, b3, si);
}

Mat4 inverse(const Mat4& m) {
    if (!m.block(1).det().is_zero()) return block_inverse(m);
    return gauss_inverse(m);
}

namespace {

// Faddeev–LeVerrier: exact over ℚ for any size.
template <class M>
Poly leverrier(const M& a, int n, M (*ident)(), Rational (*tr)(const M&)) {
    std::vector<Rational> c(n + 1);
    c[n] = Rational(1);
    M mk;  // zero
    M I = ident();
    for (int k = 1; k <= n; ++k) {
        mk = a * mk + c[n - k + 1] * I;
        M amk = a * mk;
        c[n - k] = -tr(amk) / Rational(k);
    }
    return Poly(c);
}

Mat4 ident4() { return Mat4::identity(); }
Mat2Q ident2() { return Mat2Q::identity(); }
Rational tr4(const Mat4& m) { return m.trace(); }
Rational tr2(const Mat2Q& m) { return m.trace(); }

// Smallest k with v_k ∈ span(v_0..v_{k-1}); returns coefficients of the dependency.
std::vector<Rational> first_dependency(const std::vector<std::vector<Rational>>& vs, int& k_out) {
    const std::size_t dim = vs[0].size();
    // Echelon rows with a record of which combination of v's they represent.
    std::vector<std::vector<Rational>> rows;
    std::vector<std::vector<Rational>> combos;
    std::vector<std::size_t> pivots;
    for (std::size_t k = 0; k < vs.size(); ++k) {
        std::vector<Rational> r = vs[k];
        std::vector<Rational> comb(vs.size(), Rational(0));
        comb[k] = Rational(1);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Rational& f = r[pivots[i]];
            if (f.is_zero()) continue;
            Rational g = f / rows[i][pivots[i]];
            for (std::size_t j = 0; j < dim; ++j) r[j] -= g * rows[i][j];
            for (std::size_t j = 0; j < vs.size(); ++j) comb[j] -= g * combos[i][j];
        }
        std::size_t p = 0;
        while (p < dim && r[p].is_zero()) ++p;
        if (p == dim) {
            k_out = static_cast<int>(k);
            return comb;  // Σ comb_j v_j = 0 with comb_k = 1
        }
        rows.push_back(std::move(r));
        combos.push_back(std::move(comb));
        pivots.push_back(p);
    }
    k_out = -1;
    return {};
}

template <class M, int N>
Poly krylov_min_poly(const M& m, const M& ident) {
    std::vector<std::vector<Rational>> vs;
    M pw = ident;
    for (int k = 0; k <= N; ++k) {
        vs.emplace_back(pw.e.begin(), pw.e.end());
        pw = pw * m;
    }
    int k = -1;
    auto comb = first_dependency(vs, k);
    comb.resize(k + 1);
    return Poly(comb);
}

}  // namespace

Poly char_poly(const Mat4& m) { return leverrier<Mat4>(m, 4, ident4, tr4); }
Poly char_poly(const Mat2Q& m) { return leverrier<Mat2Q>(m, 2, ident2, tr2); }

Poly min_poly(const Mat4& m) { return krylov_min_poly<Mat4, 4>(m, Mat4::identity()); }
Poly min_poly(const Mat2Q& m) { return krylov_min_poly<Mat2Q, 2>(m, Mat2Q::identity()); }

Mat4 eval(const Poly& p, const Mat4& m) {
    Mat4 acc;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * m + Mat4::scalar(*it);
    return acc;
}

Mat2Q eval(const Poly& p, const Mat2Q& m) {
    Mat2Q acc;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * m + Mat2Q::scalar(*it);
    return acc;
}

namespace {
std::optional<int> order_from(const Poly& mp) {
    auto orders = cyclotomic_factorization(mp);
    if (!orders) return std::nullopt;
    int l = 1;
    for (int o : *orders) l = std::lcm(l, o);
    return l;
}
}  // namespace

std::optional<int> finite_order(const Mat4& m) { return order_from(min_poly(m)); }
std::optional<int> finite_order(const Mat2Q& m) { return order_from(min_poly(m)); }

Rational disc2(const Mat2Q& a) { return a.trace() * a.trace() - Rational(4) * a.det(); }

Mat2Q companion(const Poly& p) {
    if (p.degree() != 2 || !p.is_monic()) raise(ErrorKind::PreconditionFailed, "companion matrix needs a monic quadratic");
    return Mat2Q(Rational(0), -p.coeff(0), Rational(1), -p.coeff(1));
}

std::vector<Poly> EvenQuarticSplit::factors() const {
    switch (kind) {
        case Kind::Biquadratic:
            return {Poly({m, Rational(0), Rational(1)}), Poly({n, Rational(0), Rational(1)})};
        case Kind::Symmetric:
            return {Poly({n, m, Rational(1)}), Poly({n, -m, Rational(1)})};
        case Kind::Irreducible:
            break;
    }
    return {};
}

std::string EvenQuarticSplit::str() const {
    if (kind == Kind::Irreducible) return "irreducible";
    auto f = factors();
    return "(" + f[0].str() + ")(" + f[1].str() + ")";
}

EvenQuarticSplit factor_even_quartic(const Rational& a, const Rational& b) {
    EvenQuarticSplit out;
    Rational s;
    // x⁴ + a x² + b = (x² + m)(x² + n) with m + n = a, mn = b.
    if ((a * a - Rational(4) * b).sqrt_exact(s)) {
        out.kind = EvenQuarticSplit::Kind::Biquadratic;
        out.m = (a + s) / Rational(2);
        out.n = (a - s) / Rational(2);
        return out;
    }
    // (x² + mx + n)(x² − mx + n) = x⁴ + (2n − m²)x² + n².
    Rational n;
    if (b.sqrt_exact(n)) {
        for (const Rational& cand : {n, -n}) {
            Rational m;
            Rational m2 = Rational(2) * cand - a;
            if (m2.sign() > 0 && m2.sqrt_exact(m)) {
                out.kind = EvenQuarticSplit::Kind::Symmetric;
                out.m = m;
                out.n = cand;
                return out;
            }
        }
    }
    return out;
}

}  // namespace dehnkit
