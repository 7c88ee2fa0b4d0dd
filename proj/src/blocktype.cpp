#include "dehnkit/blocktype.hpp"

namespace dehnkit {

const char* type_name(TypeTag t) {
    switch (t) {
        case TypeTag::TypeI: return "I";
        case TypeTag::TypeII: return "II";
        case TypeTag::TypeIII: return "III";
        case TypeTag::Untyped: return "untyped";
    }
    return "untyped";
}

const Mat2Q& BlockMat::block(int k) const {
    switch (k) {
        case 1: return A1;
        case 2: return A2;
        case 3: return A3;
        default: return A4;
    }
}

TypeTag classify_type(const BlockMat& m) {
    const Rational one(1);
    Rational d1 = m.A1.det(), d2 = m.A2.det(), d3 = m.A3.det(), d4 = m.A4.det();
    if (m.A2.is_zero() && m.A3.is_zero() && d1 == one && d4 == one) return TypeTag::TypeI;
    if (m.A1.is_zero() && m.A4.is_zero() && d2 == one && d3 == one) return TypeTag::TypeII;
    if (d1.is_zero() || d2.is_zero() || d3.is_zero() || d4.is_zero()) return TypeTag::Untyped;
    if (d1 != d4 || d2 != d3 || d1 + d3 != one) return TypeTag::Untyped;
    // (det A₁)A₁⁻¹A₂ = adj(A₁)A₂ and (det A₃)A₃⁻¹A₄ = adj(A₃)A₄.
    if (m.A1.adjugate() * m.A2 == -(m.A3.adjugate() * m.A4)) return TypeTag::TypeIII;
    return TypeTag::Untyped;
}

TypeTag type_compose(TypeTag t, TypeTag s) {
    using T = TypeTag;
    if (t == T::Untyped || s == T::Untyped) return T::Untyped;
    if (t == T::TypeIII && s == T::TypeIII) return T::Untyped;
    if (t == T::TypeIII || s == T::TypeIII) return T::TypeIII;
    return t == s ? T::TypeI : T::TypeII;
}

bool positivity_check(const BlockMat& m) {
    if (m.A1.is_zero() && m.A4.is_zero()) return true;
    if (m.A2.is_zero() && m.A3.is_zero()) return true;
    for (int k = 1; k <= 4; ++k)
        if (m.block(k).det().sign() <= 0) return false;
    return true;
}

}  // namespace dehnkit
