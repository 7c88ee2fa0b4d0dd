#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dehnkit/matrix.hpp"
#include "dehnkit/quadnum.hpp"
#include "dehnkit/spectral.hpp"

namespace dehnkit {

constexpr int kDefaultDegreeCap = 15;

/// Homogeneous binary form; coeffs[k] multiplies u₁ᵏ u₂ⁿ⁻ᵏ.
struct HomPoly {
    int degree = 0;
    std::vector<QuadNum> coeffs;

    static HomPoly zero(int n) { return HomPoly{n, std::vector<QuadNum>(n + 1, QuadNum(0))}; }
    bool is_zero() const;
    QuadNum eval(const QuadNum& u1, const QuadNum& u2) const;
    /// f(x·u₁ + y·u₂, z·u₁ + w·u₂) for the substitution matrix [[x,y],[z,w]].
    HomPoly substitute(const Mat2K& S) const;
    HomPoly d_du1() const;  // degree n−1
    HomPoly d_du2() const;
    /// "u1^3+4/3*u1*u2^2", descending in u₁; `var` renames u.
    std::string str(const std::string& var = "u") const;

    friend HomPoly operator+(const HomPoly& f, const HomPoly& g);
    friend HomPoly operator*(const QuadNum& c, const HomPoly& f);
    friend bool operator==(const HomPoly& f, const HomPoly& g) { return f.degree == g.degree && f.coeffs == g.coeffs; }
};

/// (Θ₁, Θ₂).
using HomPair = std::array<HomPoly, 2>;

struct KernelOptions {
    bool allow_even = false;  // the theory uses odd n ≥ 3
    int degree_cap = kDefaultDegreeCap;
};

/// (Θ₁,Θ₂) ↦ Θ(PU) − P̄Θ(U) applied to one pair.
HomPair constraint_residual(const PrimaryMat& P, const HomPair& theta);

/// Echelonized basis of the degree-n solutions of Θ(PU) = P̄Θ(U).
/// Leading coefficients are 1 in the order Θ₁ before Θ₂, higher u₁-power first.
std::vector<HomPair> constraint_kernel(const PrimaryMat& P, int n, const KernelOptions& opts = {});

/// Re-checks Θ(PU) = P̄Θ(U) by evaluation at n + 2 points, independent of the kernel's
/// substitution algebra.
bool identity_holds(const PrimaryMat& P, const HomPair& theta);

struct EigenTransform {
    Mat2K S_lambda, S_zeta;
    std::pair<QuadNum, QuadNum> lambdas, zetas;
    long D = -1;
};

/// S_λ = [[ω₂, ω₂],[λ₁−ω₁, λ₂−ω₁]], λ₁ = (tr + √disc)/2, S_ζ = conj(S_λ).
/// Throws ZeroOmega2, Irreducible, DegenerateEigen (checked in that order).
EigenTransform eigen_transform(const PrimaryMat& P);
/// Identity transform for an already diagonal P.
EigenTransform diagonal_transform(const PrimaryMat& P);

/// g̃ = S_ζ⁻¹ Θ(S_λ Ũ).
HomPair to_eigen(const EigenTransform& T, const HomPair& theta);

struct StructureReport {
    std::string form;  // "zero", "monomial" or "product"
    std::optional<int> d;  // order of λ₁/λ₂ for the product form
    /// Exponents k of ũ₁ᵏũ₂ⁿ⁻ᵏ carrying nonzero coefficients, per component.
    std::array<std::vector<int>, 2> exponents;
    HomPair eigen;
};

/// Throws StructureViolation when a coefficient breaks λ₁ᵏλ₂ˡ = ζᵢ or the monomial/product shape.
std::vector<StructureReport> structure_classify(const std::vector<HomPair>& basis, const EigenTransform& T);

struct FilterResult {
    std::vector<HomPair> basis;
    /// Whether the gradient relation splits into its two ũ-groupings on every survivor;
    /// none without a transform.
    std::optional<bool> split_holds;
    /// True when d ≥ 3 or λ₁/λ₂ is not a root of unity, so the split is forced.
    bool split_forced = false;
};

/// Keeps the span where Θ₁(u₁,−u₂) = Θ₁, Θ₂(u₁,−u₂) = −Θ₂ and a·∂Θ₁/∂u₂ = ∂Θ₂/∂u₁.
FilterResult symmetry_filter(const std::vector<HomPair>& basis, const QuadNum& a,
                             const std::optional<EigenTransform>& T = std::nullopt);

/// Row-reduced basis of the span, same normalization as constraint_kernel.
std::vector<HomPair> canonical_basis(const std::vector<HomPair>& span);

}  // namespace dehnkit
