#include <doctest.h>

#include "dehnkit/errors.hpp"
#include "dehnkit/poly.hpp"
#include "dehnkit/quadnum.hpp"
#include "oracle.hpp"

using namespace dehnkit;

namespace {

QuadNum random_quad(std::mt19937_64& rng, long D) {
    return QuadNum(oracle::random_rational(rng), oracle::random_rational(rng), D);
}

}  // namespace

TEST_CASE("rational parsing and canonical strings") {
    CHECK(Rational::parse("6/-4").str() == "-3/2");
    CHECK(Rational::parse(" 0/7 ").str() == "0");
    CHECK(Rational::parse("-12").str() == "-12");
    CHECK(Rational(10, 4) == Rational(5, 2));
    CHECK_THROWS_AS(Rational::parse("1/x"), Error);
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    try {
        Rational::parse("abc");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::MalformedInput);
        CHECK(std::string(e.what()).find("malformed rational") != std::string::npos);
    }
    CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
}

TEST_CASE("rational arithmetic agrees with the cpp_rational oracle") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        Rational x = oracle::random_rational(rng, 1000, 97), y = oracle::random_rational(rng, 1000, 97);
        auto X = oracle::q(x), Y = oracle::q(y);
        CHECK(oracle::same(X + Y, x + y));
        CHECK(oracle::same(X * Y, x * y));
        CHECK(oracle::same(X - Y, x - y));
        if (!y.is_zero()) CHECK(oracle::same(X / Y, x / y));
    }
}

TEST_CASE("square-free reduction of the field") {
    QuadNum r = QuadNum::sqrt_of(-8);
    CHECK(r.D() == -2);
    CHECK(r.b() == Rational(2));
    CHECK(QuadNum::parse("sqrt(-12)") == QuadNum(Rational(0), Rational(2), -3));
    CHECK(QuadNum::parse("1/2+3/4*sqrt(-2)") == QuadNum(Rational(1, 2), Rational(3, 4), -2));
    CHECK(QuadNum::parse("-sqrt(-1)") == QuadNum(Rational(0), Rational(-1), -1));
    CHECK(QuadNum::parse("5").is_rational());
    CHECK_THROWS_AS(QuadNum::parse("sqrt(2)+"), Error);
}

TEST_CASE("conjugation") {
    QuadNum x(Rational(1, 2), Rational(3), -2);
    CHECK(conj(x) == QuadNum(Rational(1, 2), Rational(-3), -2));
    CHECK(conj(QuadNum(5)) == QuadNum(5));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        QuadNum a = random_quad(rng, -7), b = random_quad(rng, -7);
        CHECK(conj(a * b) == conj(a) * conj(b));
        CHECK(conj(a + b) == conj(a) + conj(b));
        CHECK(conj(conj(a)) == a);
    }
}

TEST_CASE("norm") {
    CHECK(norm(QuadNum(Rational(1), Rational(1), -1)) == Rational(2));
    CHECK(norm(QuadNum(Rational(0), Rational(1, 2), -3)) == Rational(3, 4));
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        QuadNum a = random_quad(rng, -5), b = random_quad(rng, -5);
        CHECK(norm(a * b) == norm(a) * norm(b));
        CHECK(norm(a).sign() >= 0);
        CHECK((norm(a).is_zero() == a.is_zero()));
    }
}

TEST_CASE("mixed fields") {
    QuadNum i = QuadNum::sqrt_of(-1), s2 = QuadNum::sqrt_of(-2);
    CHECK_THROWS_AS(i + s2, Error);
    try {
        (void)(i * s2);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::FieldMismatch);
    }
    CHECK((QuadNum(3) + s2).D() == -2);
    CHECK(QuadNum(Rational(2), -5) == QuadNum(2));
    CHECK_THROWS_AS(QuadNum(0, -2).inv(), Error);
}

TEST_CASE("square roots in the field") {
    auto r = sqrt_in_field(QuadNum(Rational(-3, 4), -3));
    REQUIRE(r);
    CHECK(*r == QuadNum(Rational(0), Rational(1, 2), -3));
    auto s = sqrt_in_field(QuadNum(Rational(0), Rational(2), -1));
    REQUIRE(s);
    CHECK(*s == QuadNum(Rational(1), Rational(1), -1));
    CHECK(!sqrt_in_field(QuadNum(Rational(2), -1)));
    CHECK(*sqrt_in_field(QuadNum(Rational(9, 4), -2)) == QuadNum(Rational(3, 2)));

    std::mt19937_64 rng(17);
    for (long D : {-1L, -2L, -3L, -7L}) {
        for (int i = 0; i < 200; ++i) {
            QuadNum y = random_quad(rng, D);
            auto root = sqrt_in_field(y * y);
            REQUIRE(root);
            CHECK(*root * *root == y * y);
            CHECK((root->b().sign() > 0 || (root->b().is_zero() && root->a().sign() >= 0)));
        }
    }
}

TEST_CASE("no square root is missed on a bounded grid") {
    // Every x that sqrt_in_field rejects has no root u + v√D with small denominators.
    std::mt19937_64 rng(23);
    for (int t = 0; t < 40; ++t) {
        QuadNum x(oracle::random_rational(rng, 6, 2), oracle::random_rational(rng, 6, 2), -2);
        if (sqrt_in_field(x)) continue;
        oracle::Quad X = oracle::quad(x, -2);
        bool found = false;
        for (int un = -12; un <= 12 && !found; ++un)
            for (int vn = -12; vn <= 12 && !found; ++vn)
                for (int d : {1, 2, 4}) {
                    oracle::Quad u{oracle::Q(un) / d, oracle::Q(vn) / d, -2};
                    oracle::Quad sq = oracle::mul(u, u);
                    if (sq.a == X.a && sq.b == X.b) found = true;
                }
        CHECK(!found);
    }
}

TEST_CASE("field axioms agree with the oracle") {
    std::mt19937_64 rng(29);
    for (long D : {-1L, -2L, -3L, -15L}) {
        for (int i = 0; i < 500; ++i) {
            QuadNum x = random_quad(rng, D), y = random_quad(rng, D), z = random_quad(rng, D);
            auto X = oracle::quad(x, D), Y = oracle::quad(y, D);
            CHECK(oracle::same(oracle::mul(X, Y), x * y));
            CHECK(oracle::same(oracle::add(X, Y), x + y));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            if (!x.is_zero()) {
                CHECK(x * x.inv() == QuadNum(1));
                CHECK(oracle::same(oracle::inv(X), x.inv()));
            }
        }
    }
}

TEST_CASE("roots of unity in the field") {
    auto r3 = roots_of_unity_in_field(-3);
    CHECK(r3.size() == 6);
    auto r1 = roots_of_unity_in_field(-1);
    CHECK(r1.size() == 4);
    CHECK(roots_of_unity_in_field(-2).size() == 2);
    CHECK(roots_of_unity_in_field(-7).size() == 2);
    for (long D : {-1L, -2L, -3L}) {
        for (const auto& u : roots_of_unity_in_field(D)) {
            CHECK(u.value.pow(u.order) == QuadNum(1));
            for (int k = 1; k < u.order; ++k) CHECK(!(u.value.pow(k) == QuadNum(1)));
            CHECK(root_of_unity_order(u.value) == u.order);
        }
    }
    int order6 = 0, order3 = 0;
    for (const auto& u : r3) {
        order6 += u.order == 6;
        order3 += u.order == 3;
    }
    CHECK(order6 == 2);
    CHECK(order3 == 2);
    CHECK(!root_of_unity_order(QuadNum(2)));
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(6).str() == "x^2-x+1");
    CHECK(cyclotomic(12).str() == "x^4-x^2+1");
    CHECK(cyclotomic(5).str() == "x^4+x^3+x^2+x+1");
    auto f = cyclotomic_factorization(Poly({Rational(-1), Rational(1), Rational(-1), Rational(1)}));  // (x−1)(x²+1)
    REQUIRE(f);
    CHECK(*f == std::vector<int>{1, 4});
    CHECK(!cyclotomic_factorization(Poly({Rational(1), Rational(-2), Rational(1)})));  // (x−1)²
}
