#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dehnkit/blocktype.hpp"
#include "dehnkit/poly.hpp"

namespace dehnkit {

using Params = std::map<std::string, Mat2Q>;

/// One parametric normal form.
///
/// Type I    M = A₁ ⊕ A₄ with m_{A₁} = left, m_{A₄} = right.
/// Type II   M = A₂ ⊕̃ A₃; either A₃ = sign·A₂⁻¹ (inverse form) or m_{A₂A₃} = inner.
/// Type III  m_{A₁} = inner, det A₂ = 1 − det A₁, A₃ = c₃·A₂⁻¹A₁^{p₃}, A₄ = c₄·A₂⁻¹A₁^{p₄}A₂.
struct CatalogEntry {
    std::string id;
    TypeTag type = TypeTag::Untyped;
    Poly min_poly;
    std::optional<long> field_D;  // none: any field
    std::vector<std::string> param_names;

    Poly left, right;  // Type I
    Poly inner;        // Type II product / Type III A₁
    int inverse_sign = 0;  // Type II inverse form: ±1
    Rational c3, c4;
    int p3 = 0, p4 = 1;

    std::string describe() const;
};

struct CatalogMatch {
    const CatalogEntry* entry = nullptr;
    Params params;
    std::optional<long> field_D;
    std::vector<std::string> ambiguous_with;  // other ids that also fit
};

/// x±1, x²±1, x²±x+1, x³±1, x³±x²+x±1, x³±2x²+2x±1, x⁴±1, x⁴±x²+1, x⁴±x³+x²±x+1.
const std::vector<Poly>& candidate_min_polys();
/// The candidates with the two quintic-cyclotomic quartics removed.
const std::vector<Poly>& admissible_min_polys();
bool is_admissible(const Poly& p);

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry& catalog_entry(const std::string& id);

std::optional<CatalogMatch> match_catalog(const BlockMat& M);

/// Builds the matrix of a template; throws ConstraintViolation naming the failed condition.
BlockMat synthesize(const std::string& entry_id, const Params& params);
/// Positional form: the first two parameter blocks of the entry, in order.
BlockMat synthesize(const std::string& entry_id, const Mat2Q& first, const Mat2Q& second);

/// Random parameters satisfying the entry's constraints (small integer conjugators).
Params sample_parameters(const CatalogEntry& entry, std::mt19937_64& rng);

/// Square-free part of the discriminant of a quadratic, or none when it splits over ℚ.
std::optional<long> quadratic_field(const Poly& q);

}  // namespace dehnkit
