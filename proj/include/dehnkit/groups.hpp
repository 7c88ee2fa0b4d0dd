#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dehnkit/blocktype.hpp"
#include "dehnkit/matrix.hpp"

namespace dehnkit {

constexpr std::size_t kDefaultClosureCap = 4096;

/// Finite multiplicatively closed set; elements sorted by Mat4::cmp_lex.
struct GroupSet {
    std::vector<Mat4> elements;
    std::vector<Mat4> generators;
    // Designated elements used by presentations and admissibility witnesses.
    std::optional<Mat4> M;
    std::optional<Mat4> N;
    std::string scenario;

    std::size_t order() const { return elements.size(); }
    bool contains(const Mat4& m) const;
    std::optional<std::size_t> index_of(const Mat4& m) const;
};

/// Reference BFS closure; throws CapExceeded once more than `cap` elements appear.
GroupSet closure_serial(const std::vector<Mat4>& gens, std::size_t cap = kDefaultClosureCap);
/// Same result as closure_serial, with each BFS frontier multiplied out under OpenMP.
GroupSet closure_parallel(const std::vector<Mat4>& gens, std::size_t cap = kDefaultClosureCap);
GroupSet closure(const std::vector<Mat4>& gens, std::size_t cap = kDefaultClosureCap);

/// Cap from DEHNKIT_CLOSURE_CAP when set and valid, else the default.
std::size_t closure_cap_from_env();

std::map<TypeTag, std::size_t> type_census(const GroupSet& G);

enum class Scenario { TypeI_only, TypeI_II, sqrt3_III, sqrt2_III, sqrt1_III_order2, sqrt1_III_pair, generic };
const char* scenario_name(Scenario s);
std::optional<Scenario> parse_scenario(const std::string& s);

struct ScenarioGenerators {
    std::vector<Mat4> gens;
    std::optional<Mat4> M, N;
};

/// Canonical generators for the largest group of the scenario over ℚ(√D).
ScenarioGenerators maximal_group(long D, Scenario s);
/// closure(maximal_group(...)) with the designated elements attached.
GroupSet build_group(long D, Scenario s, std::size_t cap = kDefaultClosureCap);

struct IdentityCheck {
    std::string name;
    bool pass = false;
    bool as_stated = true;  // false for the corrected variants reported alongside
    std::string note;
};

struct PresentationReport {
    std::string kind;
    std::string evaluated_on;  // which matrix played the role of M
    std::vector<IdentityCheck> checks;
    bool all_stated_pass() const;
};

/// kind ∈ {sqrt3, sqrt2, sqrt1_pair, sqrt1_order2}. Failures are reported, never thrown.
PresentationReport verify_presentation(const GroupSet& G, const std::string& kind);

/// The v2788 matrix [[1/2+√−2/2, −1/2],[1/2, 1/2−√−2/2]] in block form over ℚ.
Mat4 v2788_M();
/// Its square partner (Mι)², the x² + 1 matrix.
Mat4 v2788_B();

}  // namespace dehnkit
