#include "dehnkit/spectral.hpp"

#include <map>
#include <numeric>
#include <vector>

#include "dehnkit/errors.hpp"
#include "dehnkit/poly.hpp"

namespace dehnkit {

PrimaryMat PrimaryMat::of(const Mat2K& p, long D) { return PrimaryMat{p, conj(p), D}; }

bool cusp_relation_check(const Mat2Q& A, const QuadNum& tau) {
    QuadNum lhs = tau * (QuadNum(A(0, 0)) + QuadNum(A(0, 1)) * tau);
    QuadNum rhs = QuadNum(A(1, 0)) + QuadNum(A(1, 1)) * tau;
    return lhs == rhs;
}

std::optional<QuadNum> fixed_cusp_shape(const Mat2Q& A) {
    // bτ² + (a − d)τ − c = 0.
    const Rational &a = A(0, 0), &b = A(0, 1), &c = A(1, 0), &d = A(1, 1);
    if (b.is_zero()) return std::nullopt;
    const Rational disc = (a - d) * (a - d) + Rational(4) * b * c;
    if (disc.sign() >= 0) return std::nullopt;
    const long D = squarefree_part(disc.num() * disc.den());
    auto root = sqrt_in_field(QuadNum(disc, D));
    QuadNum tau = (QuadNum(d - a) + *root) / QuadNum(Rational(2) * b);
    return tau.b().sign() > 0 ? tau : conj(tau);
}

PrimaryMat primary_matrix(const BlockMat& M, const QuadNum& tau1, const QuadNum& tau2) {
    if (tau1.b().sign() <= 0 || tau2.b().sign() <= 0)
        raise(ErrorKind::PreconditionFailed, "cusp shapes need Im tau > 0");
    if (tau1.D() != tau2.D()) raise(ErrorKind::FieldMismatch, "cusp shapes lie in different fields");
    const QuadNum* taus[4] = {&tau1, &tau1, &tau2, &tau2};
    Mat2K P;
    for (int j = 1; j <= 4; ++j) {
        const Mat2Q& A = M.block(j);
        const QuadNum& t = *taus[j - 1];
        if (!cusp_relation_check(A, t))
            raise(ErrorKind::RelationViolation, "block A" + std::to_string(j) + " = " + to_string(A) + " violates the cusp relation for tau = " + t.str());
        P.e[j - 1] = (QuadNum(A(0, 0)) + QuadNum(A(0, 1)) * t).with_field(t.D());
    }
    return PrimaryMat::of(P, tau1.D());
}

EigenData eigen2(const Mat2K& P) {
    EigenData out;
    out.trace = P.trace();
    out.det = P.det();
    out.discriminant = out.trace * out.trace - QuadNum(4) * out.det;
    if (auto s = sqrt_in_field(out.discriminant)) {
        QuadNum half(Rational(1, 2));
        out.split = std::make_pair(half * (out.trace + *s), half * (out.trace - *s));
    }
    return out;
}

namespace {

// ℚ(ζ₁₂₀) as ℚ[x]/Φ₁₂₀, a 32-dimensional ℚ-vector space containing every root of
// unity of degree ≤ 4 and √D for the eight D below.
constexpr int kN = 120;

class CycloField {
public:
    using Elt = std::vector<Rational>;

    CycloField() : phi_(cyclotomic(kN)), dim_(phi_.degree()) {
        for (int k = 0; k < kN; ++k) zeta_pow_.push_back(reduce(Poly::x_pow(k).coeffs()));
        Elt i = zeta(30);
        Elt s3 = add(scale(zeta(40), Rational(2)), one());   // 2ζ₃ + 1 = √−3
        Elt s2m = add(zeta(15), zeta(45));                    // ζ₈ + ζ₈³ = √−2
        Elt s5 = sub(add(zeta(24), zeta(96)), add(zeta(48), zeta(72)));  // Gauss sum = √5
        Elt neg_i = scale(i, Rational(-1));
        Elt r3 = mul(neg_i, s3);   // √3
        Elt r2 = mul(neg_i, s2m);  // √2
        roots_[-1] = i;
        roots_[-2] = s2m;
        roots_[-3] = s3;
        roots_[-5] = mul(i, s5);
        roots_[-6] = mul(i, mul(r2, r3));
        roots_[-10] = mul(i, mul(r2, s5));
        roots_[-15] = mul(i, mul(r3, s5));
        roots_[-30] = mul(i, mul(r2, mul(r3, s5)));
        for (const auto& [D, r] : roots_)
            if (mul(r, r) != constant(Rational(D))) raise(ErrorKind::StructureViolation, "sqrt embedding self-check failed");

        for (int m : small_cyclotomic_orders())
            for (int k = 0; k < m; ++k)
                if (std::gcd(k, m) == 1) units_.push_back({(kN / m) * k % kN, m});
        for (std::size_t a = 0; a < units_.size(); ++a)
            for (std::size_t b = a; b < units_.size(); ++b) {
                Pair p;
                p.sum = add(zeta(units_[a].exp), zeta(units_[b].exp));
                p.prod = zeta((units_[a].exp + units_[b].exp) % kN);
                p.o1 = std::min(units_[a].order, units_[b].order);
                p.o2 = std::max(units_[a].order, units_[b].order);
                pairs_.push_back(std::move(p));
            }
    }

    std::optional<Elt> embed(const QuadNum& x) const {
        if (x.is_rational()) return constant(x.a());
        auto it = roots_.find(x.D());
        if (it == roots_.end()) return std::nullopt;
        return add(constant(x.a()), scale(it->second, x.b()));
    }

    std::optional<std::pair<int, int>> match(const Elt& sum, const Elt& prod) const {
        for (const auto& p : pairs_)
            if (p.sum == sum && p.prod == prod) return std::make_pair(p.o1, p.o2);
        return std::nullopt;
    }

    std::size_t unit_count() const { return units_.size(); }
    std::size_t pair_count() const { return pairs_.size(); }

private:
    struct Unit {
        int exp;
        int order;
    };
    struct Pair {
        Elt sum, prod;
        int o1 = 0, o2 = 0;
    };

    Elt reduce(std::vector<Rational> c) const {
        const auto& ph = phi_.coeffs();
        for (int i = static_cast<int>(c.size()) - 1; i >= dim_; --i) {
            if (c[i].is_zero()) continue;
            Rational f = c[i];
            for (int j = 0; j <= dim_; ++j) c[i - dim_ + j] -= f * ph[j];
        }
        c.resize(dim_, Rational(0));
        return c;
    }
    Elt zeta(int k) const { return zeta_pow_[((k % kN) + kN) % kN]; }
    Elt constant(const Rational& r) const {
        Elt e(dim_, Rational(0));
        e[0] = r;
        return e;
    }
    Elt one() const { return constant(Rational(1)); }
    Elt add(const Elt& x, const Elt& y) const {
        Elt r(dim_);
        for (int i = 0; i < dim_; ++i) r[i] = x[i] + y[i];
        return r;
    }
    Elt sub(const Elt& x, const Elt& y) const {
        Elt r(dim_);
        for (int i = 0; i < dim_; ++i) r[i] = x[i] - y[i];
        return r;
    }
    Elt scale(const Elt& x, const Rational& k) const {
        Elt r(dim_);
        for (int i = 0; i < dim_; ++i) r[i] = x[i] * k;
        return r;
    }
    Elt mul(const Elt& x, const Elt& y) const {
        std::vector<Rational> c(2 * dim_ - 1, Rational(0));
        for (int i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (int j = 0; j < dim_; ++j)
                if (!y[j].is_zero()) c[i + j] += x[i] * y[j];
        }
        return reduce(std::move(c));
    }

    Poly phi_;
    int dim_;
    std::vector<Elt> zeta_pow_;
    std::map<long, Elt> roots_;
    std::vector<Unit> units_;
    std::vector<Pair> pairs_;
};

const CycloField& cyclo() {
    static const CycloField field;
    return field;
}

}  // namespace

std::optional<std::pair<int, int>> quad_roots_of_unity(const QuadNum& trace, const QuadNum& det) {
    const CycloField& F = cyclo();
    auto s = F.embed(trace);
    auto p = F.embed(det);
    if (!s || !p) return std::nullopt;  // irrational outside every field meeting ℚ(ζ₁₂₀)
    if (!trace.is_rational() && !det.is_rational() && trace.D() != det.D())
        raise(ErrorKind::FieldMismatch, "trace and det lie in different fields");
    return F.match(*s, *p);
}

const char* verdict_name(AutVerdict v) {
    switch (v) {
        case AutVerdict::TraceIotaZero: return "TraceIotaZero";
        case AutVerdict::RootsOfUnity: return "RootsOfUnity";
        case AutVerdict::Violation: return "Violation";
        case AutVerdict::NotApplicable: return "NotApplicable";
    }
    return "NotApplicable";
}

AutVerdict aut_necessary_check(const PrimaryMat& pm) {
    const Mat2K& P = pm.P;
    EigenData ed = eigen2(P);
    if (P(0, 1).is_zero() || ed.det.is_zero() || ed.discriminant.is_zero()) return AutVerdict::NotApplicable;
    if ((P(0, 0) - P(1, 1)).is_zero()) return AutVerdict::TraceIotaZero;
    if (quad_roots_of_unity(ed.trace, ed.det)) return AutVerdict::RootsOfUnity;
    return AutVerdict::Violation;
}

bool primary_power_property(const BlockMat& M, const QuadNum& tau1, const QuadNum& tau2, int n) {
    for (int j = 2; j <= 4; ++j)
        if (!(M.block(j) * M.A1 == M.A1 * M.block(j)))
            raise(ErrorKind::PreconditionFailed, "block A" + std::to_string(j) + " does not commute with A1");
    Mat2K lhs = primary_matrix(BlockMat(M.whole.pow(n)), tau1, tau2).P;
    Mat2K rhs = primary_matrix(M, tau1, tau2).P.pow(n);
    return lhs == rhs;
}

}  // namespace dehnkit
