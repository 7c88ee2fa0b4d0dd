#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "dehnkit/blocktype.hpp"
#include "dehnkit/groups.hpp"
#include "dehnkit/matrix.hpp"
#include "dehnkit/quadnum.hpp"

namespace dehnkit {

/// Primitive (p, q) up to sign; canonical with q > 0, or q = 0 and p > 0.
struct Slope {
    mpz_class p, q;

    static Slope make(const mpz_class& p, const mpz_class& q);
    /// "p/q", "p" (q = 1) or "1/0".
    static Slope parse(std::string_view s);
    std::string str() const;

    friend bool operator==(const Slope& a, const Slope& b) { return a.p == b.p && a.q == b.q; }
    friend bool operator<(const Slope& a, const Slope& b) {
        int c = cmp(a.p, b.p);
        return c != 0 ? c < 0 : cmp(a.q, b.q) < 0;
    }
};

using SlopePair = std::pair<Slope, Slope>;
/// "p1/q1,p2/q2".
SlopePair parse_pair(std::string_view s);
std::string pair_str(const SlopePair& s);

/// Canonical primitive representative of (p q)·A⁻¹.
Slope act_slope(const Mat2Q& A, const Slope& s);

enum class MapKind { Direct, Swap };

struct PairMap {
    MapKind kind = MapKind::Direct;
    TypeTag type = TypeTag::TypeI;
    Mat2Q B1, B4;
    std::optional<Mat2Q> B2, B3;  // cross route, Type III only
    Mat4 source;

    SlopePair apply(const SlopePair& s) const;
    /// Type III: act(A₁,s₁) = act(A₂,s₂) and act(A₄,s₂) = act(A₃,s₁). Always true otherwise.
    bool compatible(const SlopePair& s) const;
};

PairMap induced_pair_map(const BlockMat& M);

struct KVector {
    std::array<Rational, 4> k;
    bool has(const Rational& v) const { return k[0] == v || k[1] == v || k[2] == v || k[3] == v; }
    std::string str() const;
};

/// Solves (p′ᵢ q′ᵢ)A_j = k_j(pᵢ qᵢ) with k₁+k₂ = k₃+k₄ = 1, choosing the sign of each
/// destination slope. Zero blocks give k_j = 0.
std::optional<KVector> k_vector(const BlockMat& M, const SlopePair& src, const SlopePair& dst);

struct MapRecord {
    std::size_t index = 0;  // position in the group's sorted element list
    PairMap map;
    SlopePair image;
    std::optional<KVector> k;
    bool compatible = true;
};

struct WitnessFamily {
    std::string name;
    std::vector<Mat4> members;  // realized when every member is
};

/// Exclusion witnesses built from the designated M's blocks.
struct WitnessContext {
    std::vector<WitnessFamily> families;

    static WitnessContext from_designated(const Mat4& M);
    /// Names of the families realized on this source pair.
    std::vector<std::string> realized(const SlopePair& src) const;
};

/// Drops maps with some k_j = ½; when a witness is realized, also drops Type III maps
/// whose block determinants are all ½.
std::vector<MapRecord> admissibility_filter(const std::vector<MapRecord>& maps, const SlopePair& src,
                                            const WitnessContext* ctx);

struct SymmetryOptions {
    bool apply_filters = false;
    bool c22_nonzero = false;
};

struct SymmetryReport {
    SlopePair source;
    std::vector<MapRecord> maps;  // surviving maps, by element index
    std::set<SlopePair> images;   // Type I/II plus compatible Type III
    std::set<SlopePair> images_with_flagged;
    std::size_t excluded_parity = 0;
    std::size_t excluded_admissibility = 0;
    std::size_t untyped = 0;
    std::vector<std::string> realized_witnesses;

    std::size_t count() const { return images.size(); }
    std::size_t count_with_flagged() const { return images_with_flagged.size(); }
};

/// Throws NonGenericPair when a non-scalar acting block fixes a slope of the pair.
SymmetryReport symmetry_set(const GroupSet& G, const SlopePair& pair, const SymmetryOptions& opts = {});

enum class DependentMode { SGI, NonSGI };

/// Smallest n ≥ 1 with σⁿ scalar, if ≤ 12.
std::optional<int> projective_order(const Mat2Q& s);

std::set<SlopePair> dependent_orbit(DependentMode mode, long D, const SlopePair& pair, const Mat2Q& s1,
                                    const Mat2Q& s2);

struct PotentialDeg4 {
    Rational c40, c22, c04;
};

/// The two degree-4 potential equalities and 1 + det A = 2 det B, exactly in ℚ(√D).
bool dependent_constraint_check(const Mat2Q& A, const Mat2Q& B, const QuadNum& tau, const PotentialDeg4& pot);

}  // namespace dehnkit
