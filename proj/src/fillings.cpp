#include "dehnkit/fillings.hpp"

#include <algorithm>
#include <map>

#include "dehnkit/errors.hpp"
#include "dehnkit/linalg.hpp"

namespace dehnkit {

Slope Slope::make(const mpz_class& p, const mpz_class& q) {
    if (p == 0 && q == 0) raise(ErrorKind::MalformedInput, "slope 0/0");
    mpz_class g = gcd(p, q);
    Slope s{p / g, q / g};
    if (s.q < 0 || (s.q == 0 && s.p < 0)) {
        s.p = -s.p;
        s.q = -s.q;
    }
    return s;
}

Slope Slope::parse(std::string_view text) {
    auto bad = [&]() -> Slope { raise(ErrorKind::MalformedInput, "malformed slope: '" + std::string(text) + "'"); };
    std::string s(text);
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    auto slash = s.find('/');
    std::string ps = s.substr(0, slash), qs = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto is_int = [](const std::string& x) {
        std::size_t i = (!x.empty() && (x[0] == '-' || x[0] == '+')) ? 1 : 0;
        return i < x.size() && std::all_of(x.begin() + i, x.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    if (!is_int(ps) || !is_int(qs)) return bad();
    mpz_class p(ps[0] == '+' ? ps.substr(1) : ps), q(qs[0] == '+' ? qs.substr(1) : qs);
    if (p == 0 && q == 0) return bad();
    return make(p, q);
}

std::string Slope::str() const { return p.get_str() + "/" + q.get_str(); }

SlopePair parse_pair(std::string_view s) {
    auto comma = s.find(',');
    if (comma == std::string_view::npos) raise(ErrorKind::MalformedInput, "pair must be 'p1/q1,p2/q2': '" + std::string(s) + "'");
    return {Slope::parse(s.substr(0, comma)), Slope::parse(s.substr(comma + 1))};
}

std::string pair_str(const SlopePair& s) { return "(" + s.first.str() + ", " + s.second.str() + ")"; }

namespace {

// Primitive integer vector proportional to a nonzero rational row.
Slope primitive(const Rational& x, const Rational& y) {
    mpz_class l = lcm(x.den(), y.den());
    return Slope::make(x.num() * (l / x.den()), y.num() * (l / y.den()));
}

}  // namespace

Slope act_slope(const Mat2Q& A, const Slope& s) {
    if (A.det().is_zero()) raise(ErrorKind::SingularMatrix, "slope action by a singular block " + to_string(A));
    // (p q)·adj A is proportional to (p q)·A⁻¹.
    Rational p(s.p, 1), q(s.q, 1);
    return primitive(p * A(1, 1) - q * A(1, 0), q * A(0, 0) - p * A(0, 1));
}

SlopePair PairMap::apply(const SlopePair& s) const {
    if (kind == MapKind::Swap) return {act_slope(B1, s.second), act_slope(B4, s.first)};
    return {act_slope(B1, s.first), act_slope(B4, s.second)};
}

bool PairMap::compatible(const SlopePair& s) const {
    if (type != TypeTag::TypeIII) return true;
    if (B2->det().is_zero() || B3->det().is_zero()) return false;
    return act_slope(B1, s.first) == act_slope(*B2, s.second) && act_slope(B4, s.second) == act_slope(*B3, s.first);
}

PairMap induced_pair_map(const BlockMat& M) {
    PairMap m;
    m.source = M.whole;
    m.type = classify_type(M);
    switch (m.type) {
        case TypeTag::TypeI:
            m.B1 = M.A1;
            m.B4 = M.A4;
            break;
        case TypeTag::TypeII:
            m.kind = MapKind::Swap;
            m.B1 = M.A2;
            m.B4 = M.A3;
            break;
        case TypeTag::TypeIII:
            m.B1 = M.A1;
            m.B4 = M.A4;
            m.B2 = M.A2;
            m.B3 = M.A3;
            break;
        case TypeTag::Untyped:
            raise(ErrorKind::UntypedInput, "matrix is not of Type I, II or III: " + M.whole.str());
    }
    return m;
}

std::string KVector::str() const {
    return "(" + k[0].str() + ", " + k[1].str() + ", " + k[2].str() + ", " + k[3].str() + ")";
}

namespace {

// r with s′·A = r·s, 0 for a zero block; none when not parallel.
std::optional<Rational> ratio(const Slope& dst, const Mat2Q& A, const Slope& src) {
    if (A.is_zero()) return Rational(0);
    Rational p(dst.p, 1), q(dst.q, 1);
    Rational u0 = p * A(0, 0) + q * A(1, 0), u1 = p * A(0, 1) + q * A(1, 1);
    Rational v0(src.p, 1), v1(src.q, 1);
    if (!(u0 * v1 == u1 * v0)) return std::nullopt;
    return v0.is_zero() ? u1 / v1 : u0 / v0;
}

bool unit(const Rational& x) { return x == Rational(1) || x == Rational(-1); }

}  // namespace

std::optional<KVector> k_vector(const BlockMat& M, const SlopePair& src, const SlopePair& dst) {
    auto r1 = ratio(dst.first, M.A1, src.first), r2 = ratio(dst.first, M.A2, src.second);
    auto r3 = ratio(dst.second, M.A3, src.first), r4 = ratio(dst.second, M.A4, src.second);
    if (!r1 || !r2 || !r3 || !r4) return std::nullopt;
    Rational e1 = *r1 + *r2, e2 = *r3 + *r4;
    if (!unit(e1) || !unit(e2)) return std::nullopt;
    return KVector{{e1 * *r1, e1 * *r2, e2 * *r3, e2 * *r4}};
}

WitnessContext WitnessContext::from_designated(const Mat4& M) {
    WitnessContext ctx;
    Mat2Q A1 = M.block(1), A2 = M.block(2);
    if (A1.det().is_zero() || A2.det().is_zero()) return ctx;
    const Mat2Q I = Mat2Q::identity();
    const Rational two(2), half(1, 2);
    Mat2Q A1i = A1.inverse(), A2i = A2.inverse();
    Mat2Q sq1 = two * (A1 * A1), sq4 = two * (A2i * A1 * A1 * A2);
    ctx.families = {
        {"2A1^2 (+) 2A2^-1A1^2A2", {Mat4::direct_sum(sq1, sq4)}},
        {"A1^-1A2 (+~) 1/2A2^-1A1^-1", {Mat4::anti_sum(A1i * A2, half * (A2i * A1i))}},
        {"2A1A2 (+~) A2^-1A1", {Mat4::anti_sum(two * (A1 * A2), A2i * A1)}},
        {"2A1^2 (+) I & I (+) 2A2^-1A1^2A2", {Mat4::direct_sum(sq1, I), Mat4::direct_sum(I, sq4)}},
        {"2A1A2 (+~) 1/2A2^-1A1^-1 & A1^-1A2 (+~) A2^-1A1",
         {Mat4::anti_sum(two * (A1 * A2), half * (A2i * A1i)), Mat4::anti_sum(A1i * A2, A2i * A1)}},
    };
    return ctx;
}

std::vector<std::string> WitnessContext::realized(const SlopePair& src) const {
    std::vector<std::string> out;
    for (const auto& fam : families) {
        bool all = std::all_of(fam.members.begin(), fam.members.end(), [&](const Mat4& W) {
            BlockMat b(W);
            // Witnesses are block-diagonal or block-anti-diagonal by construction.
            PairMap m;
            m.kind = b.A1.is_zero() ? MapKind::Swap : MapKind::Direct;
            m.B1 = m.kind == MapKind::Swap ? b.A2 : b.A1;
            m.B4 = m.kind == MapKind::Swap ? b.A3 : b.A4;
            return k_vector(b, src, m.apply(src)).has_value();
        });
        if (all) out.push_back(fam.name);
    }
    return out;
}

std::vector<MapRecord> admissibility_filter(const std::vector<MapRecord>& maps, const SlopePair& src,
                                            const WitnessContext* ctx) {
    const Rational half(1, 2);
    bool witnessed = ctx && !ctx->realized(src).empty();
    std::vector<MapRecord> out;
    for (const auto& r : maps) {
        if (r.k && r.k->has(half)) continue;
        if (witnessed && r.map.type == TypeTag::TypeIII) {
            BlockMat b(r.map.source);
            if (b.A1.det() == half && b.A2.det() == half && b.A3.det() == half && b.A4.det() == half) continue;
        }
        out.push_back(r);
    }
    std::sort(out.begin(), out.end(), [](const MapRecord& a, const MapRecord& b) { return a.index < b.index; });
    return out;
}

namespace {

// Largest Type I block order N; a block is "even" when A^{N/2} = I.
int type_one_block_period(const GroupSet& G) {
    int N = 1;
    for (const auto& m : G.elements) {
        if (classify_type(m) != TypeTag::TypeI) continue;
        for (int k : {1, 4})
            if (auto o = finite_order(m.block(k))) N = std::max(N, *o);
    }
    return N;
}

bool parity_mismatch(const Mat4& m, int N) {
    if (N % 2 != 0) return false;
    const Mat2Q I = Mat2Q::identity();
    bool e1 = m.block(1).pow(N / 2) == I, e4 = m.block(4).pow(N / 2) == I;
    return e1 != e4;
}

}  // namespace

SymmetryReport symmetry_set(const GroupSet& G, const SlopePair& pair, const SymmetryOptions& opts) {
    SymmetryReport rep;
    rep.source = pair;

    for (const auto& m : G.elements) {
        TypeTag t = classify_type(m);
        if (t != TypeTag::TypeI && t != TypeTag::TypeIII) continue;
        Mat2Q A1 = m.block(1), A4 = m.block(4);
        if (!A1.is_scalar() && !A1.det().is_zero() && act_slope(A1, pair.first) == pair.first)
            raise(ErrorKind::NonGenericPair, "slope " + pair.first.str() + " is fixed by a non-scalar block of " + m.str());
        if (!A4.is_scalar() && !A4.det().is_zero() && act_slope(A4, pair.second) == pair.second)
            raise(ErrorKind::NonGenericPair, "slope " + pair.second.str() + " is fixed by a non-scalar block of " + m.str());
    }

    const int N = opts.c22_nonzero ? type_one_block_period(G) : 1;
    std::vector<MapRecord> records;
    for (std::size_t i = 0; i < G.elements.size(); ++i) {
        const Mat4& m = G.elements[i];
        BlockMat b(m);
        if (classify_type(b) == TypeTag::Untyped) {
            ++rep.untyped;
            continue;
        }
        MapRecord r;
        r.index = i;
        r.map = induced_pair_map(b);
        if (opts.c22_nonzero && r.map.type == TypeTag::TypeI && parity_mismatch(m, N)) {
            ++rep.excluded_parity;
            continue;
        }
        r.image = r.map.apply(pair);
        r.compatible = r.map.compatible(pair);
        r.k = k_vector(b, pair, r.image);
        records.push_back(std::move(r));
    }

    if (opts.apply_filters) {
        std::optional<WitnessContext> ctx;
        if (G.M && classify_type(*G.M) == TypeTag::TypeIII) {
            ctx = WitnessContext::from_designated(*G.M);
            rep.realized_witnesses = ctx->realized(pair);
        }
        std::size_t before = records.size();
        records = admissibility_filter(records, pair, ctx ? &*ctx : nullptr);
        rep.excluded_admissibility = before - records.size();
    }

    for (const auto& r : records) {
        rep.images_with_flagged.insert(r.image);
        if (r.compatible) rep.images.insert(r.image);
    }
    rep.maps = std::move(records);
    return rep;
}

std::optional<int> projective_order(const Mat2Q& s) {
    if (s.det().is_zero()) return std::nullopt;
    Mat2Q x = s;
    for (int n = 1; n <= 12; ++n, x = x * s)
        if (x.is_scalar()) return n;
    return std::nullopt;
}

std::set<SlopePair> dependent_orbit(DependentMode mode, long D, const SlopePair& pair, const Mat2Q& s1,
                                    const Mat2Q& s2) {
    if (D >= 0) raise(ErrorKind::MalformedInput, "field discriminant must be negative");
    const long Dr = squarefree_part(mpz_class(D));
    if (Dr != -3 && Dr != -1) return {pair};
    const int want = Dr == -3 ? 3 : 2;
    for (const Mat2Q* s : {&s1, &s2}) {
        auto o = projective_order(*s);
        if (!o || *o != want)
            raise(ErrorKind::OrderMismatch, "sigma " + to_string(*s) + " must have projective order " + std::to_string(want) +
                                                " for D = " + std::to_string(D));
    }
    std::set<SlopePair> out;
    auto orbit = [](const Mat2Q& s, const Slope& x, int n) {
        std::vector<Slope> v;
        Mat2Q p = Mat2Q::identity();
        for (int i = 0; i < n; ++i, p = p * s) v.push_back(act_slope(p, x));
        return v;
    };
    auto o1 = orbit(s1, pair.first, want), o2 = orbit(s2, pair.second, want);
    if (mode == DependentMode::SGI) {
        for (const auto& a : o1)
            for (const auto& b : o2) out.insert({a, b});
        return out;
    }
    for (int i = 0; i < want; ++i) out.insert({o1[i], o2[i]});
    if (Dr == -1)
        for (int i = 0; i < want; ++i) {
            out.insert({pair.first, o2[i]});
            out.insert({o1[i], pair.second});
        }
    return out;
}

namespace {

bool fixes_tau(const Mat2Q& A, const QuadNum& tau) {
    return (QuadNum(A(0, 1)) * tau * tau + QuadNum(A(0, 0) - A(1, 1)) * tau - QuadNum(A(1, 0))).is_zero();
}

}  // namespace

bool dependent_constraint_check(const Mat2Q& A, const Mat2Q& B, const QuadNum& tau, const PotentialDeg4& pot) {
    if (!(pot.c40 == pot.c04)) raise(ErrorKind::RelationViolation, "potential requires c40 = c04");
    if (!fixes_tau(A, tau)) raise(ErrorKind::RelationViolation, "tau is not a fixed point of A = " + to_string(A));
    if (!fixes_tau(B, tau)) raise(ErrorKind::RelationViolation, "tau is not a fixed point of B = " + to_string(B));
    const QuadNum c40(pot.c40), c22(pot.c22), two(2);
    const QuadNum z = QuadNum(A(0, 0)) + QuadNum(A(0, 1)) * tau;
    const QuadNum w = two * c40 + c22 * z * z;
    bool first = two * c40 * z.pow(3) + c22 * z == (QuadNum(A(1, 1)) - QuadNum(A(0, 1)) * tau) * w;
    bool second = (QuadNum(B(1, 1)) - QuadNum(B(0, 1)) * tau) * w ==
                  (QuadNum(B(0, 0)) + QuadNum(B(0, 1)) * tau).pow(3) * (two * c40 + c22);
    bool third = Rational(1) + A.det() == Rational(2) * B.det();
    return first && second && third;
}

}  // namespace dehnkit
