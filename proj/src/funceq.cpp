#include "dehnkit/funceq.hpp"

#include <algorithm>

#include "dehnkit/errors.hpp"

namespace dehnkit {

namespace {

using Row = std::vector<QuadNum>;

// Ascending-in-u₁ product of two homogeneous forms.
std::vector<QuadNum> mul(const std::vector<QuadNum>& a, const std::vector<QuadNum>& b) {
    std::vector<QuadNum> out(a.size() + b.size() - 1, QuadNum(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

std::vector<QuadNum> power(const std::vector<QuadNum>& a, int e) {
    std::vector<QuadNum> out{QuadNum(1)};
    for (int i = 0; i < e; ++i) out = mul(out, a);
    return out;
}

// Reduced row echelon form in place; returns pivot columns. Forward elimination is
// fraction-free (Bareiss); the back pass normalizes pivots to 1.
std::vector<std::size_t> rref(std::vector<Row>& rows, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    QuadNum prev(1);
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c].is_zero()) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        const QuadNum piv = rows[r][c];
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            const QuadNum f = rows[i][c];
            for (std::size_t j = 0; j < ncols; ++j) rows[i][j] = (piv * rows[i][j] - f * rows[r][j]) / prev;
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    for (std::size_t i = r; i-- > 0;) {
        const std::size_t c = pivots[i];
        const QuadNum inv = rows[i][c].inv();
        for (auto& x : rows[i]) x *= inv;
        for (std::size_t k = 0; k < i; ++k) {
            const QuadNum f = rows[k][c];
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < ncols; ++j) rows[k][j] -= f * rows[i][j];
        }
    }
    return pivots;
}

std::vector<Row> nullspace(std::vector<Row> rows, std::size_t ncols) {
    auto pivots = rref(rows, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Row> out;
    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        Row v(ncols, QuadNum(0));
        v[f] = QuadNum(1);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -rows[i][f];
        out.push_back(std::move(v));
    }
    return out;
}

// Raw coordinates: Θ₁ then Θ₂, each from u₁ⁿ down to u₂ⁿ.
std::size_t col(int n, int i, int k) { return static_cast<std::size_t>(i * (n + 1) + (n - k)); }

Row flatten(const HomPair& t) {
    const int n = t[0].degree;
    Row v(2 * (n + 1));
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k <= n; ++k) v[col(n, i, k)] = t[i].coeffs[k];
    return v;
}

HomPair unflatten(const Row& v, int n) {
    HomPair t{HomPoly::zero(n), HomPoly::zero(n)};
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k <= n; ++k) t[i].coeffs[k] = v[col(n, i, k)];
    return t;
}

std::string coef_prefix(const QuadNum& c, bool bare) {
    if (c.is_rational()) {
        if (c == QuadNum(1)) return bare ? "1" : "";
        if (c == QuadNum(-1)) return bare ? "-1" : "-";
        return c.a().str() + (bare ? "" : "*");
    }
    return "(" + c.str() + ")" + (bare ? "" : "*");
}

}  // namespace

bool HomPoly::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const QuadNum& c) { return c.is_zero(); });
}

QuadNum HomPoly::eval(const QuadNum& u1, const QuadNum& u2) const {
    QuadNum s(0);
    for (int k = 0; k <= degree; ++k) s += coeffs[k] * u1.pow(k) * u2.pow(degree - k);
    return s;
}

HomPoly HomPoly::substitute(const Mat2K& S) const {
    const std::vector<QuadNum> first{S(0, 1), S(0, 0)}, second{S(1, 1), S(1, 0)};
    HomPoly out = zero(degree);
    for (int k = 0; k <= degree; ++k) {
        if (coeffs[k].is_zero()) continue;
        auto term = mul(power(first, k), power(second, degree - k));
        for (int m = 0; m <= degree; ++m) out.coeffs[m] += coeffs[k] * term[m];
    }
    return out;
}

HomPoly HomPoly::d_du1() const {
    if (degree == 0) return zero(0);
    HomPoly out = zero(degree - 1);
    for (int k = 1; k <= degree; ++k) out.coeffs[k - 1] = QuadNum(k) * coeffs[k];
    return out;
}

HomPoly HomPoly::d_du2() const {
    if (degree == 0) return zero(0);
    HomPoly out = zero(degree - 1);
    for (int k = 0; k < degree; ++k) out.coeffs[k] = QuadNum(degree - k) * coeffs[k];
    return out;
}

std::string HomPoly::str(const std::string& var) const {
    std::string out;
    for (int k = degree; k >= 0; --k) {
        const QuadNum& c = coeffs[k];
        if (c.is_zero()) continue;
        const int l = degree - k;
        std::string mono;
        auto factor = [&](int idx, int e) {
            if (e == 0) return;
            if (!mono.empty()) mono += "*";
            mono += var + std::to_string(idx) + (e > 1 ? "^" + std::to_string(e) : "");
        };
        factor(1, k);
        factor(2, l);
        std::string term = mono.empty() ? coef_prefix(c, true) : coef_prefix(c, false) + mono;
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out.empty() ? "0" : out;
}

HomPoly operator+(const HomPoly& f, const HomPoly& g) {
    HomPoly out = f;
    for (int k = 0; k <= f.degree; ++k) out.coeffs[k] += g.coeffs[k];
    return out;
}

HomPoly operator*(const QuadNum& c, const HomPoly& f) {
    HomPoly out = f;
    for (auto& x : out.coeffs) x *= c;
    return out;
}

HomPair constraint_residual(const PrimaryMat& P, const HomPair& t) {
    HomPair out;
    for (int i = 0; i < 2; ++i)
        out[i] = t[i].substitute(P.P) + (-P.Pbar(i, 0)) * t[0] + (-P.Pbar(i, 1)) * t[1];
    return out;
}

std::vector<HomPair> constraint_kernel(const PrimaryMat& P, int n, const KernelOptions& opts) {
    if (n > opts.degree_cap)
        raise(ErrorKind::DegreeCap, "degree " + std::to_string(n) + " exceeds cap " + std::to_string(opts.degree_cap));
    if (n < 1 || (!opts.allow_even && (n < 3 || n % 2 == 0)))
        raise(ErrorKind::PreconditionFailed, "degree must be odd and at least 3, got " + std::to_string(n));
    const std::size_t dim = 2 * static_cast<std::size_t>(n + 1);
    std::vector<Row> rows(dim, Row(dim, QuadNum(0)));
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k <= n; ++k) {
            HomPoly e = HomPoly::zero(n);
            e.coeffs[k] = QuadNum(1);
            HomPoly s = e.substitute(P.P);
            const std::size_t c = col(n, i, k);
            for (int m = 0; m <= n; ++m) rows[col(n, i, m)][c] += s.coeffs[m];
            for (int r = 0; r < 2; ++r) rows[col(n, r, k)][c] -= P.Pbar(r, i);
        }
    std::vector<HomPair> basis;
    for (const auto& v : nullspace(std::move(rows), dim)) basis.push_back(unflatten(v, n));
    return canonical_basis(basis);
}

bool identity_holds(const PrimaryMat& P, const HomPair& t) {
    const int n = t[0].degree;
    std::vector<std::pair<QuadNum, QuadNum>> pts{{QuadNum(1), QuadNum(0)}};
    for (int j = 0; j <= n; ++j) pts.emplace_back(QuadNum(j), QuadNum(1));
    for (const auto& [u1, u2] : pts) {
        QuadNum v1 = P.P(0, 0) * u1 + P.P(0, 1) * u2, v2 = P.P(1, 0) * u1 + P.P(1, 1) * u2;
        QuadNum th1 = t[0].eval(u1, u2), th2 = t[1].eval(u1, u2);
        for (int i = 0; i < 2; ++i)
            if (!(t[i].eval(v1, v2) == P.Pbar(i, 0) * th1 + P.Pbar(i, 1) * th2)) return false;
    }
    return true;
}

EigenTransform eigen_transform(const PrimaryMat& P) {
    const QuadNum &w1 = P.P(0, 0), &w2 = P.P(0, 1);
    if (w2.is_zero()) raise(ErrorKind::ZeroOmega2, "omega_2 = 0: the eigenbasis form needs a nonzero upper-right entry");
    EigenData e = eigen2(P.P);
    if (!e.split) raise(ErrorKind::Irreducible, "eigenvalues of P leave Q(sqrt(" + std::to_string(P.D) + ")): discriminant " + e.discriminant.str());
    auto [l1, l2] = *e.split;
    if (l1 == l2) raise(ErrorKind::DegenerateEigen, "repeated eigenvalue " + l1.str());
    EigenTransform T;
    T.D = P.D;
    T.S_lambda = Mat2K(w2, w2, l1 - w1, l2 - w1);
    T.S_zeta = conj(T.S_lambda);
    T.lambdas = {l1, l2};
    T.zetas = {conj(l1), conj(l2)};
    return T;
}

EigenTransform diagonal_transform(const PrimaryMat& P) {
    if (!P.P(0, 1).is_zero() || !P.P(1, 0).is_zero()) raise(ErrorKind::PreconditionFailed, "P is not diagonal");
    EigenTransform T;
    T.D = P.D;
    T.S_lambda = T.S_zeta = Mat2K::identity();
    T.lambdas = {P.P(0, 0), P.P(1, 1)};
    T.zetas = {conj(P.P(0, 0)), conj(P.P(1, 1))};
    return T;
}

HomPair to_eigen(const EigenTransform& T, const HomPair& t) {
    HomPoly g1 = t[0].substitute(T.S_lambda), g2 = t[1].substitute(T.S_lambda);
    Mat2K Zi = T.S_zeta.inverse();
    return {Zi(0, 0) * g1 + Zi(0, 1) * g2, Zi(1, 0) * g1 + Zi(1, 1) * g2};
}

namespace {

std::optional<int> ratio_order(const EigenTransform& T) {
    if (T.lambdas.second.is_zero()) return std::nullopt;
    return root_of_unity_order(T.lambdas.first / T.lambdas.second);
}

}  // namespace

std::vector<StructureReport> structure_classify(const std::vector<HomPair>& basis, const EigenTransform& T) {
    const auto d = ratio_order(T);
    const QuadNum zeta[2] = {T.zetas.first, T.zetas.second};
    std::vector<StructureReport> out;
    for (const auto& t : basis) {
        StructureReport r;
        r.eigen = to_eigen(T, t);
        const int n = r.eigen[0].degree;
        for (int i = 0; i < 2; ++i)
            for (int k = 0; k <= n; ++k) {
                if (r.eigen[i].coeffs[k].is_zero()) continue;
                if (!(T.lambdas.first.pow(k) * T.lambdas.second.pow(n - k) == zeta[i]))
                    raise(ErrorKind::StructureViolation, "coefficient of u~1^" + std::to_string(k) + " u~2^" + std::to_string(n - k) +
                                                             " in g~" + std::to_string(i + 1) + " breaks the exponent law");
                r.exponents[i].push_back(k);
            }
        if (r.exponents[0].empty() && r.exponents[1].empty()) {
            r.form = "zero";
        } else if (!d) {
            for (const auto& ex : r.exponents)
                if (ex.size() > 1) raise(ErrorKind::StructureViolation, "several monomials although lambda1/lambda2 is not a root of unity");
            r.form = "monomial";
        } else {
            for (const auto& ex : r.exponents)
                for (int k : ex)
                    if ((k - ex.front()) % *d != 0) raise(ErrorKind::StructureViolation, "exponents not congruent modulo d");
            r.form = "product";
            r.d = d;
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<HomPair> canonical_basis(const std::vector<HomPair>& span) {
    if (span.empty()) return {};
    const int n = span[0][0].degree;
    std::vector<Row> rows;
    for (const auto& t : span) rows.push_back(flatten(t));
    rref(rows, 2 * (n + 1));
    std::vector<HomPair> out;
    for (const auto& r : rows) out.push_back(unflatten(r, n));
    return out;
}

FilterResult symmetry_filter(const std::vector<HomPair>& basis, const QuadNum& a, const std::optional<EigenTransform>& T) {
    FilterResult res;
    if (T) {
        auto d = ratio_order(*T);
        res.split_forced = !d || *d >= 3;
    }
    if (basis.empty()) {
        if (T) res.split_holds = true;
        return res;
    }
    const int n = basis[0][0].degree;
    const std::size_t dim = 2 * static_cast<std::size_t>(n + 1);
    std::vector<Row> cons;
    for (int k = 0; k <= n; ++k) {
        Row r(dim, QuadNum(0));
        // Θ₁ even in u₂, Θ₂ odd in u₂.
        if ((n - k) % 2 == 1) r[col(n, 0, k)] = QuadNum(1);
        else r[col(n, 1, k)] = QuadNum(1);
        cons.push_back(std::move(r));
    }
    for (int m = 0; m < n; ++m) {
        Row r(dim, QuadNum(0));
        r[col(n, 0, m)] = a * QuadNum(n - m);
        r[col(n, 1, m + 1)] = QuadNum(-(m + 1));
        cons.push_back(std::move(r));
    }
    std::vector<Row> flat;
    for (const auto& t : basis) flat.push_back(flatten(t));
    std::vector<Row> reduced(cons.size(), Row(basis.size(), QuadNum(0)));
    for (std::size_t i = 0; i < cons.size(); ++i)
        for (std::size_t b = 0; b < basis.size(); ++b)
            for (std::size_t j = 0; j < dim; ++j)
                if (!cons[i][j].is_zero()) reduced[i][b] += cons[i][j] * flat[b][j];
    std::vector<HomPair> survivors;
    for (const auto& x : nullspace(std::move(reduced), basis.size())) {
        Row v(dim, QuadNum(0));
        for (std::size_t b = 0; b < basis.size(); ++b)
            for (std::size_t j = 0; j < dim; ++j) v[j] += x[b] * flat[b][j];
        survivors.push_back(unflatten(v, n));
    }
    res.basis = canonical_basis(survivors);

    if (T) {
        const Mat2K Ti = T->S_lambda.inverse();
        const Mat2K& Z = T->S_zeta;
        auto alpha = [&](int j, int r) { return a * Z(0, j) * Ti(r, 1) - Z(1, j) * Ti(r, 0); };
        bool holds = true;
        for (const auto& t : res.basis) {
            HomPair g = to_eigen(*T, t);
            HomPoly first = alpha(0, 0) * g[0].d_du1() + alpha(1, 1) * g[1].d_du2();
            HomPoly second = alpha(0, 1) * g[0].d_du2() + alpha(1, 0) * g[1].d_du1();
            holds = holds && first.is_zero() && second.is_zero();
        }
        res.split_holds = holds;
    }
    return res;
}

}  // namespace dehnkit
