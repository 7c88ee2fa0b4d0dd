#include <doctest.h>

#include <cstdlib>

#include "dehnkit/catalog.hpp"
#include "dehnkit/groups.hpp"
#include "dehnkit/linalg.hpp"
#include "support.hpp"

using namespace dehnkit;
using testing_helpers::error_kind;

namespace {

struct Frozen {
    long D;
    Scenario s;
    std::size_t order, t1, t2, t3;
};

// Orders and type censuses of the canonical groups.
const Frozen kFrozen[] = {
    {-3, Scenario::TypeI_only, 36, 36, 0, 0},       {-1, Scenario::TypeI_only, 16, 16, 0, 0},
    {-3, Scenario::TypeI_II, 72, 36, 36, 0},        {-1, Scenario::TypeI_II, 32, 16, 16, 0},
    {-7, Scenario::generic, 8, 4, 4, 0},            {-2, Scenario::sqrt2_III, 48, 4, 4, 40},
    {-3, Scenario::sqrt3_III, 72, 12, 12, 48},      {-1, Scenario::sqrt1_III_pair, 96, 16, 16, 64},
    {-1, Scenario::sqrt1_III_order2, 24, 8, 0, 16},
};

std::size_t census_of(const std::map<TypeTag, std::size_t>& c, TypeTag t) {
    auto it = c.find(t);
    return it == c.end() ? 0 : it->second;
}

bool check_named(const PresentationReport& r, const std::string& needle, bool as_stated) {
    for (const auto& c : r.checks)
        if (c.as_stated == as_stated && c.name.find(needle) != std::string::npos) return c.pass;
    FAIL("no check named " << needle);
    return false;
}

}  // namespace

TEST_CASE("closure of small generator sets") {
    CHECK(closure({Mat4::iota()}).order() == 2);
    CHECK(closure({-Mat4::identity(), Mat4::iota()}).order() == 4);
    GroupSet G = closure({v2788_M(), Mat4::iota()});
    CHECK(G.order() == 48);
    CHECK(G.contains(Mat4::identity()));
    CHECK(G.contains(v2788_B()));
    CHECK(G.index_of(Mat4::identity()).has_value());
    CHECK_FALSE(G.contains(Mat4::scalar(Rational(2))));
}

TEST_CASE("closure respects the cap") {
    const Mat4 inf = Mat4::direct_sum(Mat2Q(Rational(1), Rational(1), Rational(0), Rational(1)), Mat2Q::identity());
    CHECK(error_kind([&] { closure({inf}, 100); }) == ErrorKind::CapExceeded);
    CHECK(error_kind([&] { closure({v2788_M(), Mat4::iota()}, 47); }) == ErrorKind::CapExceeded);
    CHECK(closure({v2788_M(), Mat4::iota()}, 48).order() == 48);
}

TEST_CASE("serial and parallel closures agree element for element") {
    for (const auto& f : kFrozen) {
        auto gens = maximal_group(f.D, f.s).gens;
        GroupSet a = closure_serial(gens), b = closure_parallel(gens);
        CHECK(a.elements == b.elements);
    }
}

TEST_CASE("closure is idempotent and sorted") {
    GroupSet G = build_group(-3, Scenario::sqrt3_III);
    GroupSet H = closure(G.elements);
    CHECK(H.elements == G.elements);
    for (std::size_t i = 1; i < G.elements.size(); ++i) CHECK(Mat4::cmp_lex(G.elements[i - 1], G.elements[i]) < 0);
}

TEST_CASE("canonical group orders and censuses") {
    for (const auto& f : kFrozen) {
        GroupSet G = build_group(f.D, f.s);
        INFO(scenario_name(f.s) << " D=" << f.D);
        CHECK(G.order() == f.order);
        auto c = type_census(G);
        CHECK(census_of(c, TypeTag::TypeI) == f.t1);
        CHECK(census_of(c, TypeTag::TypeII) == f.t2);
        CHECK(census_of(c, TypeTag::TypeIII) == f.t3);
        CHECK(census_of(c, TypeTag::Untyped) == 0);
    }
}

TEST_CASE("groups are closed under products and inverses") {
    for (const auto& f : kFrozen) {
        GroupSet G = build_group(f.D, f.s);
        for (const auto& g : G.elements) {
            CHECK(G.contains(inverse(g)));
            CHECK(finite_order(g).has_value());
        }
        for (std::size_t i = 0; i < G.elements.size(); i += 7)
            for (std::size_t j = 0; j < G.elements.size(); j += 5) CHECK(G.contains(G.elements[i] * G.elements[j]));
    }
}

TEST_CASE("every canonical element is cataloged") {
    for (const auto& f : kFrozen) {
        if (f.s == Scenario::generic) continue;
        GroupSet G = build_group(f.D, f.s);
        for (const auto& g : G.elements) CHECK_MESSAGE(match_catalog(BlockMat(g)).has_value(), g.str());
    }
}

TEST_CASE("scenario and field must agree") {
    CHECK(error_kind([] { maximal_group(-7, Scenario::sqrt3_III); }) == ErrorKind::ScenarioMismatch);
    CHECK(error_kind([] { maximal_group(-3, Scenario::generic); }) == ErrorKind::ScenarioMismatch);
    CHECK(error_kind([] { maximal_group(-2, Scenario::TypeI_only); }) == ErrorKind::ScenarioMismatch);
    CHECK(parse_scenario("sqrt2_III") == Scenario::sqrt2_III);
    CHECK_FALSE(parse_scenario("sqrt5"));
}

TEST_CASE("presentations: the sqrt(-3) group") {
    PresentationReport r = verify_presentation(build_group(-3, Scenario::sqrt3_III), "sqrt3");
    CHECK_FALSE(r.all_stated_pass());
    CHECK_FALSE(check_named(r, "eta^6 = -I", true));
    CHECK(check_named(r, "eta^6 = I", false));
    CHECK(check_named(r, "coset", true));
}

TEST_CASE("presentations: the sqrt(-2) group") {
    PresentationReport r = verify_presentation(build_group(-2, Scenario::sqrt2_III), "sqrt2");
    CHECK_FALSE(r.all_stated_pass());
    CHECK(check_named(r, "coset", false));
}

TEST_CASE("presentations: the sqrt(-1) groups") {
    PresentationReport p = verify_presentation(build_group(-1, Scenario::sqrt1_III_pair), "sqrt1_pair");
    CHECK_FALSE(check_named(p, "abelian", true));
    CHECK(check_named(p, "abelian", false));
    CHECK(check_named(p, "|H| = 16", false));
    PresentationReport q = verify_presentation(build_group(-1, Scenario::sqrt1_III_order2), "sqrt1_order2");
    CHECK(q.all_stated_pass());
}

TEST_CASE("missing designated element fails the presentation") {
    GroupSet G = closure({v2788_M(), Mat4::iota()});
    PresentationReport r = verify_presentation(G, "sqrt2");
    CHECK_FALSE(r.all_stated_pass());
}

TEST_CASE("the worked pair satisfies (M iota)^2 = B") {
    const Mat4 Mi = v2788_M() * Mat4::iota();
    CHECK(Mi * Mi == v2788_B());
    CHECK(min_poly(v2788_M()).str() == "x^2-x+1");
    CHECK(min_poly(v2788_B()).str() == "x^2+1");
}

TEST_CASE("closure cap from the environment") {
    ::setenv("DEHNKIT_CLOSURE_CAP", "123", 1);
    CHECK(closure_cap_from_env() == 123);
    ::setenv("DEHNKIT_CLOSURE_CAP", "abc", 1);
    CHECK(error_kind([] { closure_cap_from_env(); }) == ErrorKind::MalformedInput);
    ::unsetenv("DEHNKIT_CLOSURE_CAP");
    CHECK(closure_cap_from_env() == kDefaultClosureCap);
}
