#pragma once

#include <string>

#include "dehnkit/matrix.hpp"

namespace dehnkit {

enum class TypeTag { TypeI, TypeII, TypeIII, Untyped };

/// "I", "II", "III", "untyped".
const char* type_name(TypeTag t);

/// A 4×4 rational matrix viewed as [[A₁, A₂],[A₃, A₄]].
struct BlockMat {
    Mat2Q A1, A2, A3, A4;
    Mat4 whole;

    BlockMat() : BlockMat(Mat4::identity()) {}
    explicit BlockMat(const Mat4& m) : A1(m.block(1)), A2(m.block(2)), A3(m.block(3)), A4(m.block(4)), whole(m) {}
    BlockMat(const Mat2Q& a1, const Mat2Q& a2, const Mat2Q& a3, const Mat2Q& a4)
        : A1(a1), A2(a2), A3(a3), A4(a4), whole(Mat4::from_blocks(a1, a2, a3, a4)) {}

    const Mat2Q& block(int k) const;
};

TypeTag classify_type(const BlockMat& m);
inline TypeTag classify_type(const Mat4& m) { return classify_type(BlockMat(m)); }

/// Predicted type of N·M from the types of N and M; Untyped means "not determined".
TypeTag type_compose(TypeTag t, TypeTag s);

/// One of: A₁ = A₄ = 0, A₂ = A₃ = 0, or every det A_j > 0.
bool positivity_check(const BlockMat& m);

}  // namespace dehnkit
