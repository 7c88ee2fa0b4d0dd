#pragma once

#include <optional>
#include <utility>

#include "dehnkit/blocktype.hpp"
#include "dehnkit/matrix.hpp"
#include "dehnkit/quadnum.hpp"

namespace dehnkit {

/// P = [[ω₁, ω₂],[ω₃, ω₄]] over ℚ(√D) together with its entrywise conjugate.
struct PrimaryMat {
    Mat2K P;
    Mat2K Pbar;
    long D = -1;

    static PrimaryMat of(const Mat2K& p, long D);
};

struct EigenData {
    QuadNum trace;
    QuadNum det;
    QuadNum discriminant;
    std::optional<std::pair<QuadNum, QuadNum>> split;
};

/// τ(a + bτ) = c + dτ for A = [[a,b],[c,d]].
bool cusp_relation_check(const Mat2Q& A, const QuadNum& tau);

/// ω_j = a_j + b_jτ, with τ₁ for A₁, A₂ and τ₂ for A₃, A₄.
/// The τ with Im τ > 0 satisfying τ(a + bτ) = c + dτ; none when A is scalar (any τ
/// works) or when the fixed points are real.
std::optional<QuadNum> fixed_cusp_shape(const Mat2Q& A);

PrimaryMat primary_matrix(const BlockMat& M, const QuadNum& tau1, const QuadNum& tau2);

EigenData eigen2(const Mat2K& P);

/// Orders (ascending) of the two roots of x² − trace·x + det when both are roots of
/// unity of degree ≤ 4 over ℚ; none otherwise.
std::optional<std::pair<int, int>> quad_roots_of_unity(const QuadNum& trace, const QuadNum& det);

enum class AutVerdict { TraceIotaZero, RootsOfUnity, Violation, NotApplicable };
const char* verdict_name(AutVerdict v);

AutVerdict aut_necessary_check(const PrimaryMat& P);

/// primary_matrix(Mⁿ) == primary_matrix(M)ⁿ; blocks must commute with A₁.
bool primary_power_property(const BlockMat& M, const QuadNum& tau1, const QuadNum& tau2, int n);

}  // namespace dehnkit
