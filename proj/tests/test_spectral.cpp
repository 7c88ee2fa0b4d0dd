#include <doctest.h>

#include "dehnkit/catalog.hpp"
#include "dehnkit/groups.hpp"
#include "dehnkit/linalg.hpp"
#include "dehnkit/spectral.hpp"
#include "instances.hpp"
#include "support.hpp"

using namespace dehnkit;
using testing_helpers::error_kind;

namespace {

const Rational half(1, 2);
const QuadNum s2 = QuadNum::sqrt_of(-2);

Mat2Q m2(long a, long b, long c, long d) { return Mat2Q(Rational(a), Rational(b), Rational(c), Rational(d)); }

// Exact division of a rational polynomial by a monic quadratic over ℚ(√D).
bool quadratic_divides(const QuadNum& t, const QuadNum& d, const Poly& p) {
    std::vector<QuadNum> r;
    for (const auto& c : p.coeffs()) r.emplace_back(c);
    for (int k = static_cast<int>(r.size()) - 1; k >= 2; --k) {
        QuadNum lead = r[k];
        r[k] = QuadNum(0);
        r[k - 1] += lead * t;
        r[k - 2] -= lead * d;
    }
    return r.size() < 2 ? r.empty() || r[0].is_zero() : r[0].is_zero() && r[1].is_zero();
}

}  // namespace

TEST_CASE("cusp relation on worked blocks") {
    CHECK(cusp_relation_check(Mat2Q(Rational(0), half, Rational(-1), Rational(0)), s2));
    CHECK(cusp_relation_check(Mat2Q::identity(), QuadNum::parse("1/3+2*sqrt(-7)")));
    CHECK_FALSE(cusp_relation_check(m2(1, 0, 0, 2), QuadNum::sqrt_of(-1)));
}

TEST_CASE("fixed cusp shape solves the relation") {
    auto t = fixed_cusp_shape(m2(0, 1, -1, 1));
    REQUIRE(t);
    CHECK(*t == QuadNum::parse("1/2+1/2*sqrt(-3)"));
    CHECK(cusp_relation_check(m2(0, 1, -1, 1), *t));
    CHECK_FALSE(fixed_cusp_shape(Mat2Q::scalar(Rational(3))));
    CHECK_FALSE(fixed_cusp_shape(m2(2, 1, 1, 1)));  // real fixed points
}

TEST_CASE("primary matrices of the two worked Type III examples") {
    const QuadNum h2 = half * s2;
    PrimaryMat PB = primary_matrix(BlockMat(v2788_B()), s2, s2);
    CHECK(PB.P == Mat2K(h2, h2, h2, -h2));
    CHECK(PB.Pbar == conj(PB.P));
    PrimaryMat PM = primary_matrix(BlockMat(v2788_M()), s2, s2);
    CHECK(PM.P == Mat2K(QuadNum(half) + h2, QuadNum(-half), QuadNum(half), QuadNum(half) - h2));
}

TEST_CASE("Type I primary matrix with an order-6 block") {
    const QuadNum tau = QuadNum::parse("1/2+1/2*sqrt(-3)");
    // The block [[0,-1],[1,1]] does not fix this τ (its fixed point is the conjugate
    // side); the transpose [[0,1],[-1,1]] does and yields ω = τ on both blocks.
    const Mat2Q bad = m2(0, -1, 1, 1);
    CHECK(error_kind([&] { primary_matrix(BlockMat(Mat4::direct_sum(bad, bad)), tau, tau); }) ==
          ErrorKind::RelationViolation);
    const Mat2Q good = m2(0, 1, -1, 1);
    PrimaryMat P = primary_matrix(BlockMat(Mat4::direct_sum(good, good)), tau, tau);
    CHECK(P.P == Mat2K::diag(tau, tau));
}

TEST_CASE("primary matrix requires a scalar block when b = 0") {
    CHECK(error_kind([&] { primary_matrix(BlockMat(Mat4::direct_sum(m2(1, 0, 1, 1), Mat2Q::identity())), s2, s2); }) ==
          ErrorKind::RelationViolation);
}

TEST_CASE("eigendata over the field") {
    PrimaryMat PB = primary_matrix(BlockMat(v2788_B()), s2, s2);
    EigenData e = eigen2(PB.P);
    CHECK(e.trace.is_zero());
    CHECK(e.det == QuadNum(1));
    CHECK_FALSE(e.split);  // x² + 1 does not split over ℚ(√−2)

    EigenData f = eigen2(Mat2K(QuadNum(half), QuadNum(1), QuadNum(Rational(3, 4)), QuadNum(-half)));
    REQUIRE(f.split);
    CHECK(((f.split->first == QuadNum(1) && f.split->second == QuadNum(-1)) ||
           (f.split->first == QuadNum(-1) && f.split->second == QuadNum(1))));
}

TEST_CASE("roots-of-unity pairs") {
    auto a = quad_roots_of_unity(QuadNum(0), QuadNum(1));
    REQUIRE(a);
    CHECK(*a == std::pair{4, 4});
    auto b = quad_roots_of_unity(QuadNum::sqrt_of(-1), QuadNum(-1));
    REQUIRE(b);
    CHECK(*b == std::pair{12, 12});
    CHECK_FALSE(quad_roots_of_unity(QuadNum(half), QuadNum(1)));
    auto c = quad_roots_of_unity(QuadNum(1), QuadNum(1));
    REQUIRE(c);
    CHECK(*c == std::pair{6, 6});
}

TEST_CASE("roots-of-unity pairs agree with cyclotomic divisibility") {
    for (long D : {-1L, -3L}) {
        const auto roots = roots_of_unity_in_field(D);
        for (const auto& z1 : roots)
            for (const auto& z2 : roots) {
                const QuadNum t = z1.value + z2.value, d = z1.value * z2.value;
                auto r = quad_roots_of_unity(t, d);
                REQUIRE(r);
                CHECK(r->first <= r->second);
                CHECK(quadratic_divides(t, d, cyclotomic(r->first) * cyclotomic(r->second)));
            }
    }
    // Small non-unit pairs are rejected and fail the divisibility test for every order pair.
    for (long tn = -4; tn <= 4; ++tn)
        for (long dn = -2; dn <= 2; ++dn) {
            QuadNum t(Rational(tn, 2)), d(Rational(dn, 2));
            bool any = false;
            for (int n : small_cyclotomic_orders())
                for (int m : small_cyclotomic_orders())
                    if (quadratic_divides(t, d, cyclotomic(n) * cyclotomic(m))) any = true;
            CHECK(quad_roots_of_unity(t, d).has_value() == any);
        }
}

TEST_CASE("necessary automorphism verdicts") {
    CHECK(aut_necessary_check(primary_matrix(BlockMat(v2788_B()), s2, s2)) == AutVerdict::RootsOfUnity);
    CHECK(aut_necessary_check(primary_matrix(BlockMat(v2788_M()), s2, s2)) == AutVerdict::RootsOfUnity);
    CHECK(aut_necessary_check(PrimaryMat::of(Mat2K(QuadNum(1), QuadNum(1), QuadNum(0), QuadNum(2)), -1)) ==
          AutVerdict::Violation);
    CHECK(std::string(verdict_name(AutVerdict::TraceIotaZero)) == "TraceIotaZero");
}

TEST_CASE("primary matrix of a power is the power of the primary matrix") {
    const BlockMat B(v2788_B());
    for (int n = 1; n <= 6; ++n) CHECK(primary_power_property(B, s2, s2, n));
    // A4 = I − A1 for the worked M, so its blocks commute with A1 as well.
    for (int n = 1; n <= 6; ++n) CHECK(primary_power_property(BlockMat(v2788_M()), s2, s2, n));
    const Mat4 N = *maximal_group(-1, Scenario::sqrt1_III_pair).M;  // A2 = diag(1, 1/2)
    CHECK(error_kind([&] { primary_power_property(BlockMat(N), QuadNum::parse("-1/2+1/2*sqrt(-1)"), QuadNum::parse("-1/2+1/2*sqrt(-1)"), 2); }) ==
          ErrorKind::PreconditionFailed);
}

TEST_CASE("catalog instances sharing a cusp shape never violate the necessary condition") {
    int checked = 0, without = 0;
    for (const auto& e : catalog_entries()) {
        auto M = testing_helpers::commuting_instance(e);
        if (!M) {
            ++without;
            continue;
        }
        const long D = e.field_D ? *e.field_D : -1;
        auto [t1, t2] = testing_helpers::taus_for(*M, D);
        PrimaryMat P = primary_matrix(*M, t1, t2);
        CHECK_MESSAGE(aut_necessary_check(P) != AutVerdict::Violation, e.id);
        ++checked;
    }
    CHECK(checked == static_cast<int>(catalog_entries().size()) - 2);
    // Only the two templates with m_A1 = x² + 1/4 lack one: det A2 = 3/4 is not a norm from ℚ(i).
    CHECK(without == 2);
}

TEST_CASE("canonical group elements never violate the necessary condition") {
    for (auto sc : {Scenario::sqrt2_III, Scenario::sqrt3_III, Scenario::sqrt1_III_pair}) {
        const long D = sc == Scenario::sqrt2_III ? -2 : sc == Scenario::sqrt3_III ? -3 : -1;
        GroupSet G = build_group(D, sc);
        int checked = 0;
        for (const auto& g : G.elements) {
            BlockMat b(g);
            auto t1 = fixed_cusp_shape(b.A1) ? fixed_cusp_shape(b.A1) : fixed_cusp_shape(b.A2);
            auto t2 = fixed_cusp_shape(b.A4) ? fixed_cusp_shape(b.A4) : fixed_cusp_shape(b.A3);
            if (!t1 || !t2 || t1->D() != t2->D()) continue;
            if (error_kind([&] { primary_matrix(b, *t1, *t2); })) continue;
            CHECK(aut_necessary_check(primary_matrix(b, *t1, *t2)) != AutVerdict::Violation);
            ++checked;
        }
        CHECK(checked > 0);
    }
}
