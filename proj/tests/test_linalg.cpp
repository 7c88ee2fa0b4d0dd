#include <doctest.h>

#include "dehnkit/groups.hpp"
#include "dehnkit/linalg.hpp"
#include "oracle.hpp"

using namespace dehnkit;

TEST_CASE("block inverse on worked matrices") {
    CHECK(block_inverse(Mat4::iota()) == Mat4::iota());
    const Mat4 M = v2788_M();
    CHECK(block_inverse(M) == Mat4::identity() - M);  // M² − M + I = 0
    CHECK(gauss_inverse(M) == Mat4::identity() - M);
}

TEST_CASE("block inverse errors") {
    Mat4 anti = Mat4::anti_sum(Mat2Q::identity(), Mat2Q::identity());
    try {
        block_inverse(anti);
        FAIL("expected SingularBlock");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SingularBlock);
    }
    Mat4 sing = Mat4::direct_sum(Mat2Q::identity(), Mat2Q(Rational(1), Rational(2), Rational(2), Rational(4)));
    try {
        block_inverse(sing);
        FAIL("expected SingularMatrix");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SingularMatrix);
    }
    CHECK(inverse(anti) == anti);
}

TEST_CASE("block inverse equals the oracle elimination inverse") {
    std::mt19937_64 rng(41);
    int tested = 0;
    while (tested < 200) {
        Mat4 m = oracle::random_mat4(rng);
        if (m.block(1).det().is_zero() || m.det().is_zero()) continue;
        oracle::M4 ref;
        REQUIRE(oracle::inverse(oracle::m4(m), ref));
        Mat4 b = block_inverse(m);
        CHECK(oracle::same(ref, b));
        CHECK(b == gauss_inverse(m));
        CHECK(m * b == Mat4::identity());
        ++tested;
    }
}

TEST_CASE("minimal polynomials") {
    CHECK(min_poly(v2788_B()).str() == "x^2+1");
    CHECK(min_poly(v2788_M()).str() == "x^2-x+1");
    CHECK(min_poly(Mat4::iota()).str() == "x^2-1");
    CHECK(min_poly(Mat4::identity()).str() == "x-1");
    std::mt19937_64 rng(43);
    for (int i = 0; i < 100; ++i) {
        Mat4 m = oracle::random_mat4(rng);
        Poly mp = min_poly(m), cp = char_poly(m);
        CHECK(mp.is_monic());
        CHECK(eval(mp, m) == Mat4::scalar(Rational(0)));
        CHECK(mp.divides(cp));  // Cayley–Hamilton
        CHECK(eval(cp, m) == Mat4::scalar(Rational(0)));
    }
}

TEST_CASE("finite order") {
    CHECK(finite_order(v2788_M()) == 6);
    CHECK(finite_order(Mat4::iota()) == 2);
    Mat4 shear = Mat4::direct_sum(Mat2Q(Rational(1), Rational(1), Rational(0), Rational(1)), Mat2Q::identity());
    CHECK(!finite_order(shear));
    CHECK(!finite_order(Mat4::scalar(Rational(2))));
    for (const auto& g : build_group(-1, Scenario::sqrt1_III_pair).elements) {
        auto n = finite_order(g);
        REQUIRE(n);
        CHECK(g.pow(*n) == Mat4::identity());
        for (int k = 1; k < *n; ++k) CHECK(!(g.pow(k) == Mat4::identity()));
    }
}

TEST_CASE("discriminant") {
    CHECK(disc2(Mat2Q::identity()) == Rational(0));
    CHECK(disc2(Mat2Q(Rational(0), Rational(1, 2), Rational(-1), Rational(0))) == Rational(-2));
    CHECK(disc2(Mat2Q(Rational(1, 2), Rational(1, 2), Rational(-1), Rational(1, 2))) == Rational(-2));
}

TEST_CASE("even quartic factorization") {
    auto f = factor_even_quartic(Rational(0), Rational(1, 4));
    CHECK(f.kind == EvenQuarticSplit::Kind::Symmetric);
    CHECK(f.m == Rational(1));
    CHECK(f.n == Rational(1, 2));
    auto g = factor_even_quartic(Rational(1), Rational(1));
    CHECK(g.kind == EvenQuarticSplit::Kind::Symmetric);
    CHECK(g.m == Rational(1));
    CHECK(g.n == Rational(1));
    auto h = factor_even_quartic(Rational(0), Rational(-1));
    CHECK(h.kind == EvenQuarticSplit::Kind::Biquadratic);
    CHECK(factor_even_quartic(Rational(0), Rational(1)).kind == EvenQuarticSplit::Kind::Irreducible);  // x⁴+1
    CHECK(factor_even_quartic(Rational(-1), Rational(1)).kind == EvenQuarticSplit::Kind::Irreducible);  // x⁴−x²+1

    std::mt19937_64 rng(47);
    for (int i = 0; i < 300; ++i) {
        Rational a = oracle::random_rational(rng, 6, 4), b = oracle::random_rational(rng, 6, 4);
        auto s = factor_even_quartic(a, b);
        if (s.kind == EvenQuarticSplit::Kind::Irreducible) continue;
        auto fs = s.factors();
        REQUIRE(fs.size() == 2);
        CHECK(fs[0] * fs[1] == Poly({b, Rational(0), a, Rational(0), Rational(1)}));
    }
}

TEST_CASE("companion matrices") {
    Mat2Q c = companion(Poly({Rational(1), Rational(-1), Rational(1)}));
    CHECK(c == Mat2Q(Rational(0), Rational(-1), Rational(1), Rational(1)));
    CHECK(min_poly(c).str() == "x^2-x+1");
    CHECK(finite_order(c) == 6);
}
