#include "dehnkit/catalog.hpp"

#include <algorithm>

#include "dehnkit/errors.hpp"
#include "dehnkit/linalg.hpp"

namespace dehnkit {

namespace {

Poly P(std::initializer_list<Rational> ascending) { return Poly(std::vector<Rational>(ascending)); }

const Rational kHalf(1, 2), kQuarter(1, 4), kThreeQuarters(3, 4), kThird(1, 3);

Poly lcm(const Poly& a, const Poly& b) { return (a * b).divmod(gcd(a, b)).first.monic(); }

std::vector<CatalogEntry> build_entries() {
    std::vector<CatalogEntry> out;

    // Type I: blocks of determinant 1 and finite order, one quadratic field at most.
    const std::vector<Poly> blocks{P({-1, 1}), P({1, 1}), P({1, 1, 1}), P({1, -1, 1}), P({1, 0, 1})};
    for (const Poly& L : blocks)
        for (const Poly& R : blocks) {
            Poly m = lcm(L, R);
            if (!is_admissible(m)) continue;
            auto fl = L.degree() == 2 ? quadratic_field(L) : std::nullopt;
            auto fr = R.degree() == 2 ? quadratic_field(R) : std::nullopt;
            if (fl && fr && *fl != *fr) continue;
            CatalogEntry e;
            e.type = TypeTag::TypeI;
            e.min_poly = m;
            e.left = L;
            e.right = R;
            e.field_D = fl ? fl : fr;
            e.param_names = {"A1", "A4"};
            e.id = "I/" + m.str() + "/A1:" + L.str() + ",A4:" + R.str();
            out.push_back(std::move(e));
        }

    // Type II.
    auto inverse_form = [&](int sign) {
        CatalogEntry e;
        e.type = TypeTag::TypeII;
        e.min_poly = sign > 0 ? P({-1, 0, 1}) : P({1, 0, 1});
        e.inverse_sign = sign;
        e.param_names = {"A2"};
        e.id = "II/" + e.min_poly.str() + (sign > 0 ? "/A3=A2^-1" : "/A3=-A2^-1");
        out.push_back(std::move(e));
    };
    inverse_form(1);
    inverse_form(-1);
    auto product_form = [&](const Poly& m, const Poly& inner) {
        CatalogEntry e;
        e.type = TypeTag::TypeII;
        e.min_poly = m;
        e.inner = inner;
        e.field_D = quadratic_field(inner);
        e.param_names = {"A2", "A3"};
        e.id = "II/" + m.str() + "/A2A3:" + inner.str();
        out.push_back(std::move(e));
    };
    product_form(P({1, 0, 0, 0, 1}), P({1, 0, 1}));
    product_form(P({1, 0, 1, 0, 1}), P({1, 1, 1}));
    product_form(P({1, 0, -1, 0, 1}), P({1, -1, 1}));

    // Type III: (m_M, m_{A₁}, c₃, p₃, c₄, p₄).
    struct Row {
        Poly m, q;
        Rational c3;
        int p3;
        Rational c4;
        int p4;
    };
    const Rational one(1), three(3);
    const std::vector<Row> rows{
        // m_M = x² + 1
        {P({1, 0, 1}), P({kQuarter, 0, 1}), -kThreeQuarters, 0, -one, 1},
        {P({1, 0, 1}), P({kHalf, 0, 1}), -kHalf, 0, -one, 1},
        {P({1, 0, 1}), P({kThreeQuarters, 0, 1}), -kQuarter, 0, -one, 1},
        // m_M = x² ∓ x + 1
        {P({1, -1, 1}), P({kHalf, -1, 1}), -kHalf, 0, kHalf, -1},
        {P({1, 1, 1}), P({kHalf, 1, 1}), -kHalf, 0, kHalf, -1},
        {P({1, -1, 1}), P({kThreeQuarters, -1, 1}), -kQuarter, 0, kThreeQuarters, -1},
        {P({1, 1, 1}), P({kThreeQuarters, 1, 1}), -kQuarter, 0, kThreeQuarters, -1},
        // m_M = x³ ∓ 1
        {P({-1, 0, 0, 1}), P({kQuarter, -kHalf, 1}), -three, 2, one, 1},
        {P({1, 0, 0, 1}), P({kQuarter, kHalf, 1}), -three, 2, one, 1},
        // m_M = x³ ∓ x² + x ∓ 1
        {P({-1, 1, -1, 1}), P({kHalf, -1, 1}), -one, 2, one, 1},
        {P({1, 1, 1, 1}), P({kHalf, 1, 1}), -one, 2, one, 1},
        // m_M = x³ ∓ 2x² + 2x ∓ 1
        {P({-1, 2, -2, 1}), P({kThreeQuarters, Rational(-3, 2), 1}), -kThird, 2, one, 1},
        {P({1, 2, 2, 1}), P({kThreeQuarters, Rational(3, 2), 1}), -kThird, 2, one, 1},
        // m_M = x⁴ + 1
        {P({1, 0, 0, 0, 1}), P({kHalf, 1, 1}), one, 2, -one, 1},
        {P({1, 0, 0, 0, 1}), P({kHalf, -1, 1}), one, 2, -one, 1},
        {P({1, 0, 0, 0, 1}), P({kHalf, 0, 1}), kHalf, 0, one, 1},
        {P({1, 0, 0, 0, 1}), P({kThreeQuarters, 1, 1}), kQuarter, 0, -kThreeQuarters, -1},
        {P({1, 0, 0, 0, 1}), P({kThreeQuarters, -1, 1}), kQuarter, 0, -kThreeQuarters, -1},
        // m_M = x⁴ + x² + 1
        {P({1, 0, 1, 0, 1}), P({kQuarter, kHalf, 1}), three, 2, -one, 1},
        {P({1, 0, 1, 0, 1}), P({kQuarter, -kHalf, 1}), three, 2, -one, 1},
        {P({1, 0, 1, 0, 1}), P({kThreeQuarters, 0, 1}), kQuarter, 0, one, 1},
        // m_M = x⁴ − x² + 1
        {P({1, 0, -1, 0, 1}), P({kThreeQuarters, Rational(3, 2), 1}), kThird, 2, -one, 1},
        {P({1, 0, -1, 0, 1}), P({kThreeQuarters, Rational(-3, 2), 1}), kThird, 2, -one, 1},
        {P({1, 0, -1, 0, 1}), P({kQuarter, 0, 1}), kThreeQuarters, 0, one, 1},
        {P({1, 0, -1, 0, 1}), P({kHalf, 1, 1}), kHalf, 0, -kHalf, -1},
        {P({1, 0, -1, 0, 1}), P({kHalf, -1, 1}), kHalf, 0, -kHalf, -1},
        // A₁ = ±I/2, det A₂ = 3/4, any field
        {P({-1, 0, 1}), P({-kHalf, 1}), kThreeQuarters, 0, -one, 1},
        {P({-1, 0, 1}), P({kHalf, 1}), kThreeQuarters, 0, -one, 1},
        {P({1, -1, 1}), P({-kHalf, 1}), -kThreeQuarters, 0, one, 1},
        {P({1, 1, 1}), P({kHalf, 1}), -kThreeQuarters, 0, one, 1},
    };
    for (const Row& r : rows) {
        CatalogEntry e;
        e.type = TypeTag::TypeIII;
        e.min_poly = r.m;
        e.inner = r.q;
        e.c3 = r.c3;
        e.p3 = r.p3;
        e.c4 = r.c4;
        e.p4 = r.p4;
        e.field_D = r.q.degree() == 2 ? quadratic_field(r.q) : std::nullopt;
        e.param_names = {"A1", "A2"};
        e.id = "III/" + r.m.str() + "/A1:" + r.q.str();
        out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), [](const CatalogEntry& a, const CatalogEntry& b) { return a.id < b.id; });
    return out;
}

const Mat2Q& need(const Params& p, const std::string& name, const std::string& id) {
    auto it = p.find(name);
    if (it == p.end()) raise(ErrorKind::ConstraintViolation, id + ": missing parameter " + name);
    return it->second;
}

[[noreturn]] void violated(const std::string& id, const std::string& what) {
    raise(ErrorKind::ConstraintViolation, id + ": " + what);
}

Mat2Q random_invertible(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    for (;;) {
        Mat2Q r(Rational(d(rng)), Rational(d(rng)), Rational(d(rng)), Rational(d(rng)));
        if (!r.det().is_zero()) return r;
    }
}

Mat2Q random_with_min_poly(const Poly& q, std::mt19937_64& rng) {
    if (q.degree() == 1) return Mat2Q::scalar(-q.coeff(0));
    Mat2Q R = random_invertible(rng);
    return R * companion(q) * R.inverse();
}

Mat2Q random_with_det(const Rational& c, std::mt19937_64& rng) {
    Mat2Q R = random_invertible(rng);
    return R * Mat2Q::diag(Rational(1), c / R.det());
}

}  // namespace

std::string CatalogEntry::describe() const {
    switch (type) {
        case TypeTag::TypeI:
            return "A1 (+) A4 with m_A1 = " + left.str() + ", m_A4 = " + right.str();
        case TypeTag::TypeII:
            if (inverse_sign != 0) return std::string("A2 (+~) ") + (inverse_sign > 0 ? "" : "-") + "A2^-1, det A2 = 1";
            return "A2 (+~) A3 with det A2 = det A3 = 1, m_A2A3 = " + inner.str();
        case TypeTag::TypeIII: {
            auto pw = [](int p) { return p == 0 ? std::string() : (p == 1 ? "A1" : (p == -1 ? "A1^-1" : "A1^" + std::to_string(p))); };
            return "[[A1, A2],[" + c3.str() + "*A2^-1" + pw(p3) + ", " + c4.str() + "*A2^-1" + pw(p4) +
                   "A2]] with m_A1 = " + inner.str() + ", det A2 = 1 - det A1";
        }
        case TypeTag::Untyped:
            break;
    }
    return "";
}

const std::vector<Poly>& candidate_min_polys() {
    static const std::vector<Poly> list{
        P({-1, 1}),           P({1, 1}),           P({-1, 0, 1}),        P({1, 0, 1}),
        P({1, -1, 1}),        P({1, 1, 1}),        P({-1, 0, 0, 1}),     P({1, 0, 0, 1}),
        P({-1, 1, -1, 1}),    P({1, 1, 1, 1}),     P({-1, 2, -2, 1}),    P({1, 2, 2, 1}),
        P({-1, 0, 0, 0, 1}),  P({1, 0, 0, 0, 1}),  P({1, 0, -1, 0, 1}),  P({1, 0, 1, 0, 1}),
        P({1, 1, 1, 1, 1}),   P({1, -1, 1, -1, 1}),
    };
    return list;
}

const std::vector<Poly>& admissible_min_polys() {
    static const std::vector<Poly> list = [] {
        std::vector<Poly> out;
        for (const Poly& p : candidate_min_polys())
            if (!(p == cyclotomic(5)) && !(p == cyclotomic(10))) out.push_back(p);
        return out;
    }();
    return list;
}

bool is_admissible(const Poly& p) {
    const auto& l = admissible_min_polys();
    return std::find(l.begin(), l.end(), p.monic()) != l.end();
}

std::optional<long> quadratic_field(const Poly& q) {
    if (q.degree() != 2) return std::nullopt;
    Poly m = q.monic();
    Rational disc = m.coeff(1) * m.coeff(1) - Rational(4) * m.coeff(0);
    if (disc.is_zero()) return std::nullopt;
    Rational r;
    if (disc.sqrt_exact(r)) return std::nullopt;
    return squarefree_part(disc.num() * disc.den());
}

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = build_entries();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& id) {
    for (const auto& e : catalog_entries())
        if (e.id == id) return e;
    raise(ErrorKind::UnknownTemplate, "unknown catalog template '" + id + "'");
}

BlockMat synthesize(const std::string& entry_id, const Params& params) {
    const CatalogEntry& e = catalog_entry(entry_id);
    const Mat2Q zero;
    switch (e.type) {
        case TypeTag::TypeI: {
            const Mat2Q& A1 = need(params, "A1", e.id);
            const Mat2Q& A4 = need(params, "A4", e.id);
            if (!(min_poly(A1) == e.left)) violated(e.id, "m_A1 must be " + e.left.str() + ", got " + min_poly(A1).str());
            if (!(min_poly(A4) == e.right)) violated(e.id, "m_A4 must be " + e.right.str() + ", got " + min_poly(A4).str());
            return BlockMat(A1, zero, zero, A4);
        }
        case TypeTag::TypeII: {
            const Mat2Q& A2 = need(params, "A2", e.id);
            if (A2.det() != Rational(1)) violated(e.id, "det A2 must be 1, got " + A2.det().str());
            if (e.inverse_sign != 0) return BlockMat(zero, A2, Rational(e.inverse_sign) * A2.inverse(), zero);
            const Mat2Q& A3 = need(params, "A3", e.id);
            if (A3.det() != Rational(1)) violated(e.id, "det A3 must be 1, got " + A3.det().str());
            if (!(min_poly(A2 * A3) == e.inner)) violated(e.id, "m_A2A3 must be " + e.inner.str() + ", got " + min_poly(A2 * A3).str());
            return BlockMat(zero, A2, A3, zero);
        }
        case TypeTag::TypeIII: {
            const Mat2Q& A1 = need(params, "A1", e.id);
            const Mat2Q& A2 = need(params, "A2", e.id);
            if (!(min_poly(A1) == e.inner)) violated(e.id, "m_A1 must be " + e.inner.str() + ", got " + min_poly(A1).str());
            if (A2.det() != Rational(1) - A1.det())
                violated(e.id, "det A2 must be 1 - det A1 = " + (Rational(1) - A1.det()).str() + ", got " + A2.det().str());
            Mat2Q A2i = A2.inverse();
            Mat2Q A3 = e.c3 * (A2i * A1.pow(e.p3));
            Mat2Q A4 = e.c4 * (A2i * A1.pow(e.p4) * A2);
            return BlockMat(A1, A2, A3, A4);
        }
        case TypeTag::Untyped:
            break;
    }
    violated(e.id, "untyped entry");
}

BlockMat synthesize(const std::string& entry_id, const Mat2Q& first, const Mat2Q& second) {
    const CatalogEntry& e = catalog_entry(entry_id);
    Params p;
    p[e.param_names[0]] = first;
    if (e.param_names.size() > 1) p[e.param_names[1]] = second;
    return synthesize(entry_id, p);
}

std::optional<CatalogMatch> match_catalog(const BlockMat& M) {
    TypeTag t = classify_type(M);
    if (t == TypeTag::Untyped) return std::nullopt;
    Poly m = min_poly(M.whole);
    if (!is_admissible(m)) return std::nullopt;

    std::vector<CatalogMatch> hits;
    for (const auto& e : catalog_entries()) {
        if (e.type != t || !(e.min_poly == m)) continue;
        Params p;
        if (t == TypeTag::TypeI) {
            p = {{"A1", M.A1}, {"A4", M.A4}};
        } else if (t == TypeTag::TypeII) {
            p = {{"A2", M.A2}};
            if (e.inverse_sign == 0) p["A3"] = M.A3;
        } else {
            p = {{"A1", M.A1}, {"A2", M.A2}};
        }
        try {
            if (!(synthesize(e.id, p).whole == M.whole)) continue;
        } catch (const Error& err) {
            if (err.kind() != ErrorKind::ConstraintViolation && err.kind() != ErrorKind::SingularMatrix) throw;
            continue;
        }
        CatalogMatch cm;
        cm.entry = &e;
        cm.params = std::move(p);
        cm.field_D = e.field_D;
        hits.push_back(std::move(cm));
    }
    if (hits.empty()) return std::nullopt;
    // Entries are sorted by id, so the first hit is the lexicographically smallest.
    CatalogMatch best = std::move(hits.front());
    for (std::size_t i = 1; i < hits.size(); ++i) best.ambiguous_with.push_back(hits[i].entry->id);
    return best;
}

Params sample_parameters(const CatalogEntry& e, std::mt19937_64& rng) {
    switch (e.type) {
        case TypeTag::TypeI:
            return {{"A1", random_with_min_poly(e.left, rng)}, {"A4", random_with_min_poly(e.right, rng)}};
        case TypeTag::TypeII: {
            Mat2Q A2 = random_with_det(Rational(1), rng);
            if (e.inverse_sign != 0) return {{"A2", A2}};
            Mat2Q B = random_with_min_poly(e.inner, rng);
            return {{"A2", A2}, {"A3", A2.inverse() * B}};
        }
        case TypeTag::TypeIII: {
            Mat2Q A1 = random_with_min_poly(e.inner, rng);
            return {{"A1", A1}, {"A2", random_with_det(Rational(1) - A1.det(), rng)}};
        }
        case TypeTag::Untyped:
            break;
    }
    return {};
}

}  // namespace dehnkit
