#include <doctest.h>

#include "dehnkit/catalog.hpp"
#include "dehnkit/groups.hpp"
#include "dehnkit/linalg.hpp"

using namespace dehnkit;

TEST_CASE("classification of basic shapes") {
    CHECK(classify_type(Mat4::iota()) == TypeTag::TypeI);
    CHECK(classify_type(Mat4::anti_sum(Mat2Q::identity(), Mat2Q::identity())) == TypeTag::TypeII);
    BlockMat B(v2788_B());
    CHECK(classify_type(B) == TypeTag::TypeIII);
    for (int k = 1; k <= 4; ++k) CHECK(B.block(k).det() == Rational(1, 2));
    CHECK(classify_type(Mat4::scalar(Rational(2))) == TypeTag::Untyped);
    CHECK(std::string(type_name(TypeTag::Untyped)) == "untyped");
}

TEST_CASE("type composition table") {
    CHECK(type_compose(TypeTag::TypeII, TypeTag::TypeIII) == TypeTag::TypeIII);
    CHECK(type_compose(TypeTag::TypeI, TypeTag::TypeI) == TypeTag::TypeI);
    CHECK(type_compose(TypeTag::TypeII, TypeTag::TypeII) == TypeTag::TypeI);
    CHECK(type_compose(TypeTag::TypeI, TypeTag::TypeII) == TypeTag::TypeII);
    CHECK(type_compose(TypeTag::TypeIII, TypeTag::TypeI) == TypeTag::TypeIII);
    CHECK(type_compose(TypeTag::TypeIII, TypeTag::TypeIII) == TypeTag::Untyped);
}

TEST_CASE("positivity") {
    CHECK(positivity_check(BlockMat(v2788_M())));
    CHECK(positivity_check(BlockMat(Mat4::iota())));
    const Mat2Q I = Mat2Q::identity(), Z;
    CHECK(!positivity_check(BlockMat(I, I, Z, I)));
}

TEST_CASE("products follow the composition table across random catalog instances") {
    std::mt19937_64 rng(53);
    const auto& entries = catalog_entries();
    std::uniform_int_distribution<std::size_t> pick(0, entries.size() - 1);
    int checked = 0;
    for (int i = 0; i < 400; ++i) {
        const auto& e1 = entries[pick(rng)];
        const auto& e2 = entries[pick(rng)];
        BlockMat N = synthesize(e1.id, sample_parameters(e1, rng));
        BlockMat M = synthesize(e2.id, sample_parameters(e2, rng));
        TypeTag predicted = type_compose(classify_type(N), classify_type(M));
        if (predicted == TypeTag::Untyped) continue;
        CHECK(classify_type(N.whole * M.whole) == predicted);
        ++checked;
    }
    CHECK(checked > 100);
}

TEST_CASE("type is preserved by inversion on cataloged matrices") {
    std::mt19937_64 rng(59);
    for (const auto& e : catalog_entries()) {
        for (int i = 0; i < 5; ++i) {
            BlockMat M = synthesize(e.id, sample_parameters(e, rng));
            CHECK(classify_type(inverse(M.whole)) == classify_type(M));
            CHECK(positivity_check(M));
        }
    }
}

TEST_CASE("closure elements of canonical groups are always typed") {
    for (auto [D, s] : {std::pair{-3L, Scenario::sqrt3_III}, {-2L, Scenario::sqrt2_III}, {-1L, Scenario::sqrt1_III_pair},
                        {-1L, Scenario::sqrt1_III_order2}, {-3L, Scenario::TypeI_II}}) {
        auto c = type_census(build_group(D, s));
        CHECK(c[TypeTag::Untyped] == 0);
    }
}
