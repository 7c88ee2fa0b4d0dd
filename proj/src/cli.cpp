#include "dehnkit/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dehnkit/catalog.hpp"
#include "dehnkit/errors.hpp"
#include "dehnkit/fillings.hpp"
#include "dehnkit/funceq.hpp"
#include "dehnkit/groups.hpp"
#include "dehnkit/json_io.hpp"
#include "dehnkit/linalg.hpp"
#include "dehnkit/spectral.hpp"

namespace dehnkit::cli {

namespace {

using io::json;
using io::to_json;

struct Options {
    bool summary = false;
    std::string matrix, group, generators, pair, tau, tau2, scenario, kind, a, primary, write_dir, mode;
    std::string sigma1, sigma2, matA, matB, c40 = "0", c22 = "0", c04 = "0", cap;
    long field = 0;
    int degree = 3;
    int degree_cap = kDefaultDegreeCap;
    bool apply_filters = false, c22_nonzero = false, verify = false, list = false, allow_even = false;
};

struct Report {
    std::string command;
    json inputs = json::object();
    json results = json::object();
    json verdicts = json::object();
};

std::size_t cap_of(const Options& o) {
    if (o.cap.empty()) return closure_cap_from_env();
    try {
        std::size_t pos = 0;
        long long v = std::stoll(o.cap, &pos);
        if (pos == o.cap.size() && v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
    raise(ErrorKind::MalformedInput, "--cap must be a positive integer, got '" + o.cap + "'");
}

long default_field(Scenario s) {
    switch (s) {
        case Scenario::sqrt3_III: return -3;
        case Scenario::sqrt2_III: return -2;
        case Scenario::sqrt1_III_order2:
        case Scenario::sqrt1_III_pair: return -1;
        default: return 0;
    }
}

const char* presentation_kind(Scenario s) {
    switch (s) {
        case Scenario::sqrt3_III: return "sqrt3";
        case Scenario::sqrt2_III: return "sqrt2";
        case Scenario::sqrt1_III_order2: return "sqrt1_order2";
        case Scenario::sqrt1_III_pair: return "sqrt1_pair";
        default: return "";
    }
}

Scenario scenario_of(const std::string& name) {
    auto s = parse_scenario(name);
    if (!s) raise(ErrorKind::MalformedInput, "unknown scenario '" + name + "'");
    return *s;
}

long field_for(const Options& o, Scenario s) {
    long D = o.field != 0 ? o.field : default_field(s);
    if (D == 0) raise(ErrorKind::MalformedInput, std::string("scenario ") + scenario_name(s) + " needs --field D");
    return D;
}

json census_json(const GroupSet& G) {
    auto c = type_census(G);
    return json{{"I", c[TypeTag::TypeI]}, {"II", c[TypeTag::TypeII]}, {"III", c[TypeTag::TypeIII]}, {"untyped", c[TypeTag::Untyped]}};
}

void attach_designated(GroupSet& G, const json& doc) {
    if (doc.is_object() && doc.contains("M")) G.M = io::mat4_from(doc.at("M"));
    if (doc.is_object() && doc.contains("N")) G.N = io::mat4_from(doc.at("N"));
}

// Group from --scenario/--field, --generators or --group, recording inputs.
GroupSet load_group(const Options& o, Report& r, long* D_out) {
    const int sources = !o.scenario.empty() + !o.generators.empty() + !o.group.empty();
    if (sources != 1) raise(ErrorKind::MalformedInput, "give exactly one of --scenario, --generators, --group");
    if (!o.scenario.empty()) {
        Scenario s = scenario_of(o.scenario);
        long D = field_for(o, s);
        r.inputs["scenario"] = scenario_name(s);
        r.inputs["field_D"] = D;
        if (D_out) *D_out = D;
        return build_group(D, s, cap_of(o));
    }
    if (D_out) *D_out = o.field;
    if (o.field != 0) r.inputs["field_D"] = o.field;
    if (!o.generators.empty()) {
        r.inputs["generators"] = o.generators;
        json doc = io::read_file(o.generators);
        GroupSet G = closure(io::matrices_from(doc, "generators"), cap_of(o));
        attach_designated(G, doc);
        return G;
    }
    r.inputs["group"] = o.group;
    json doc = io::read_file(o.group);
    GroupSet G;
    G.elements = io::matrices_from(doc, "elements");
    std::sort(G.elements.begin(), G.elements.end(), Mat4Less{});
    G.elements.erase(std::unique(G.elements.begin(), G.elements.end()), G.elements.end());
    attach_designated(G, doc);
    return G;
}

json classification(const Mat4& M) {
    BlockMat b(M);
    Poly mp = min_poly(M);
    json out;
    out["type"] = type_name(classify_type(b));
    out["min_poly"] = mp.str();
    out["char_poly"] = char_poly(M).str();
    auto ord = finite_order(M);
    out["finite_order"] = ord ? json(*ord) : json(nullptr);
    out["admissible_min_poly"] = is_admissible(mp);
    out["positivity"] = positivity_check(b);
    out["block_dets"] = json::array({b.A1.det().str(), b.A2.det().str(), b.A3.det().str(), b.A4.det().str()});
    auto match = match_catalog(b);
    if (match) {
        out["template"] = match->entry->id;
        out["template_form"] = match->entry->describe();
        out["ambiguous_with"] = match->ambiguous_with;
        out["field_D"] = match->field_D ? json(*match->field_D) : json(nullptr);
        out["field"] = match->field_D ? json("Q(sqrt(" + std::to_string(*match->field_D) + "))") : json("any");
    } else {
        out["template"] = nullptr;
        out["field_D"] = nullptr;
    }
    return out;
}

json primary_json(const BlockMat& b, const QuadNum& t1, const QuadNum& t2) {
    PrimaryMat P = primary_matrix(b, t1, t2);
    EigenData e = eigen2(P.P);
    json out;
    out["P"] = to_json(P.P);
    out["Pbar"] = to_json(P.Pbar);
    out["trace"] = to_json(e.trace);
    out["det"] = to_json(e.det);
    out["discriminant"] = to_json(e.discriminant);
    out["aut_necessary"] = verdict_name(aut_necessary_check(P));
    if (auto ro = quad_roots_of_unity(e.trace, e.det)) out["eigen_root_orders"] = json::array({ro->first, ro->second});
    else out["eigen_root_orders"] = nullptr;
    return out;
}

void cmd_classify(const Options& o, Report& r) {
    r.inputs["matrix"] = o.matrix;
    Mat4 M = io::mat4_from(io::read_file(o.matrix));
    r.results = classification(M);
    r.verdicts["typed"] = r.results["type"] != "untyped";
    r.verdicts["cataloged"] = !r.results["template"].is_null();
    if (!o.tau.empty()) {
        QuadNum t1 = QuadNum::parse(o.tau), t2 = o.tau2.empty() ? t1 : QuadNum::parse(o.tau2);
        r.inputs["tau"] = o.tau;
        if (!o.tau2.empty()) r.inputs["tau2"] = o.tau2;
        r.results["primary"] = primary_json(BlockMat(M), t1, t2);
        if (r.results["field_D"].is_null() && !t1.is_rational()) r.results["field_D"] = t1.D();
        r.verdicts["aut_necessary"] = r.results["primary"]["aut_necessary"];
    }
}

json presentation_json(const PresentationReport& p) {
    json checks = json::array();
    for (const auto& c : p.checks)
        checks.push_back(json{{"name", c.name}, {"verdict", c.pass ? "pass" : "fail"}, {"as_stated", c.as_stated}, {"note", c.note}});
    return json{{"kind", p.kind}, {"evaluated_on", p.evaluated_on}, {"checks", checks}};
}

void cmd_group(const Options& o, Report& r) {
    GroupSet G = load_group(o, r, nullptr);
    r.results["order"] = G.order();
    r.results["census"] = census_json(G);
    if (!G.scenario.empty()) r.results["scenario"] = G.scenario;
    if (G.M) r.results["M"] = to_json(*G.M);
    if (G.N) r.results["N"] = to_json(*G.N);
    if (o.list) {
        json els = json::array();
        for (const auto& m : G.elements) els.push_back(to_json(m));
        r.results["elements"] = els;
    }
    if (o.verify) {
        std::string kind = o.kind;
        if (kind.empty() && !o.scenario.empty()) kind = presentation_kind(scenario_of(o.scenario));
        if (kind.empty()) raise(ErrorKind::MalformedInput, "--verify needs --kind for this group");
        r.inputs["kind"] = kind;
        PresentationReport p = verify_presentation(G, kind);
        r.results["presentation"] = presentation_json(p);
        r.verdicts["presentation_as_stated"] = p.all_stated_pass() ? "pass" : "fail";
    }
}

std::optional<std::size_t> symmetry_bound(long D) {
    switch (squarefree_part(mpz_class(D))) {
        case -3: return 18;
        case -1: return 8;
        case -2: return 3;
        default: return 2;
    }
}

void cmd_symmetry(const Options& o, Report& r) {
    long D = 0;
    GroupSet G = load_group(o, r, &D);
    SlopePair pair = parse_pair(o.pair);
    r.inputs["pair"] = to_json(pair);
    r.inputs["apply_filters"] = o.apply_filters;
    r.inputs["c22_nonzero"] = o.c22_nonzero;
    SymmetryReport rep = symmetry_set(G, pair, {o.apply_filters, o.c22_nonzero});
    r.results["group_order"] = G.order();
    r.results["count"] = rep.count();
    r.results["count_with_flagged"] = rep.count_with_flagged();
    json imgs = json::array(), all = json::array();
    for (const auto& p : rep.images) imgs.push_back(to_json(p));
    for (const auto& p : rep.images_with_flagged) all.push_back(to_json(p));
    r.results["images"] = imgs;
    r.results["images_with_flagged"] = all;
    json maps = json::array();
    for (const auto& m : rep.maps)
        maps.push_back(json{{"index", m.index},
                            {"type", type_name(m.map.type)},
                            {"image", to_json(m.image)},
                            {"k", m.k ? to_json(*m.k) : json(nullptr)},
                            {"compatible", m.compatible}});
    r.results["maps"] = maps;
    r.results["excluded_parity"] = rep.excluded_parity;
    r.results["excluded_admissibility"] = rep.excluded_admissibility;
    r.results["untyped_elements"] = rep.untyped;
    r.results["realized_witnesses"] = rep.realized_witnesses;
    r.verdicts["source_in_set"] = rep.images.count(pair) == 1;
    if (D != 0) {
        auto b = symmetry_bound(D);
        r.results["bound"] = *b;
        r.verdicts["within_bound"] = rep.count() <= *b;
    }
}

void cmd_orbit(const Options& o, Report& r) {
    DependentMode mode;
    if (o.mode == "SGI") mode = DependentMode::SGI;
    else if (o.mode == "NonSGI") mode = DependentMode::NonSGI;
    else raise(ErrorKind::MalformedInput, "--mode must be SGI or NonSGI");
    if (o.field == 0) raise(ErrorKind::MalformedInput, "dependent orbit needs --field D");
    SlopePair pair = parse_pair(o.pair);
    Mat2Q s1 = io::parse_mat2(o.sigma1), s2 = io::parse_mat2(o.sigma2);
    r.inputs = json{{"mode", o.mode}, {"field_D", o.field}, {"pair", to_json(pair)}, {"sigma1", to_json(s1)}, {"sigma2", to_json(s2)}};
    auto orbit = dependent_orbit(mode, o.field, pair, s1, s2);
    json arr = json::array();
    for (const auto& p : orbit) arr.push_back(to_json(p));
    const long Dr = squarefree_part(mpz_class(o.field));
    const std::size_t bound = Dr == -3 ? 9 : (Dr == -1 ? 4 : 1);
    r.results = json{{"orbit", arr}, {"size", orbit.size()}, {"bound", bound}};
    r.verdicts["within_bound"] = orbit.size() <= bound;
}

void cmd_check(const Options& o, Report& r) {
    Mat2Q A = io::parse_mat2(o.matA), B = io::parse_mat2(o.matB);
    QuadNum tau = QuadNum::parse(o.tau);
    PotentialDeg4 pot{Rational::parse(o.c40), Rational::parse(o.c22), Rational::parse(o.c04)};
    r.inputs = json{{"A", to_json(A)}, {"B", to_json(B)}, {"tau", to_json(tau)},
                    {"potential", json{{"c40", pot.c40.str()}, {"c22", pot.c22.str()}, {"c04", pot.c04.str()}}}};
    bool ok = dependent_constraint_check(A, B, tau, pot);
    r.results["holds"] = ok;
    r.verdicts["constraints"] = ok ? "pass" : "fail";
}

PrimaryMat primary_from(const Options& o, Report& r) {
    if (!o.primary.empty()) {
        r.inputs["primary"] = o.primary;
        std::vector<QuadNum> v;
        std::string cur;
        for (char c : o.primary + ",") {
            if (c == ',' || c == ';') {
                v.push_back(QuadNum::parse(cur));
                cur.clear();
            } else {
                cur += c;
            }
        }
        if (v.size() != 4) raise(ErrorKind::MalformedInput, "--primary must be 'w1,w2;w3,w4'");
        long D = o.field != 0 ? o.field : -1;
        for (const auto& x : v)
            if (!x.is_rational()) D = x.D();
        return PrimaryMat::of(Mat2K(v[0], v[1], v[2], v[3]), D);
    }
    if (o.matrix.empty() || o.tau.empty()) raise(ErrorKind::MalformedInput, "funceq needs --primary, or --matrix with --tau");
    r.inputs["matrix"] = o.matrix;
    r.inputs["tau"] = o.tau;
    QuadNum t1 = QuadNum::parse(o.tau), t2 = o.tau2.empty() ? t1 : QuadNum::parse(o.tau2);
    return primary_matrix(BlockMat(io::mat4_from(io::read_file(o.matrix))), t1, t2);
}

json basis_json(const std::vector<HomPair>& b) {
    json arr = json::array();
    for (const auto& t : b) arr.push_back(to_json(t));
    return arr;
}

void cmd_funceq(const Options& o, Report& r) {
    PrimaryMat P = primary_from(o, r);
    r.inputs["degree"] = o.degree;
    auto kernel = constraint_kernel(P, o.degree, {o.allow_even, o.degree_cap});
    bool verified = std::all_of(kernel.begin(), kernel.end(), [&](const HomPair& t) { return identity_holds(P, t); });
    r.results["primary"] = to_json(P.P);
    r.results["field_D"] = P.D;
    r.results["kernel"] = json{{"dimension", kernel.size()}, {"basis", basis_json(kernel)}};
    r.verdicts["kernel_verified"] = verified;

    std::optional<EigenTransform> T;
    try {
        T = (P.P(0, 1).is_zero() && P.P(1, 0).is_zero()) ? diagonal_transform(P) : eigen_transform(P);
    } catch (const Error& e) {
        r.results["eigen"] = json{{"unavailable", json{{"kind", e.name()}, {"message", e.what()}}}};
    }
    if (T) {
        json structure = json::array();
        for (const auto& s : structure_classify(kernel, *T))
            structure.push_back(json{{"form", s.form},
                                     {"d", s.d ? json(*s.d) : json(nullptr)},
                                     {"exponents", json::array({s.exponents[0], s.exponents[1]})},
                                     {"eigen", to_json(s.eigen)}});
        r.results["eigen"] = json{{"S_lambda", to_json(T->S_lambda)},
                                  {"S_zeta", to_json(T->S_zeta)},
                                  {"lambdas", json::array({to_json(T->lambdas.first), to_json(T->lambdas.second)})},
                                  {"zetas", json::array({to_json(T->zetas.first), to_json(T->zetas.second)})},
                                  {"structure", structure}};
    }
    if (!o.a.empty()) {
        QuadNum a = QuadNum::parse(o.a);
        r.inputs["a"] = to_json(a);
        FilterResult f = symmetry_filter(kernel, a, T);
        r.results["filter"] = json{{"dimension", f.basis.size()},
                                   {"basis", basis_json(f.basis)},
                                   {"split_holds", f.split_holds ? json(*f.split_holds) : json(nullptr)},
                                   {"split_forced", f.split_forced}};
        if (f.split_holds && f.split_forced) r.verdicts["split"] = *f.split_holds ? "pass" : "fail";
    }
}

void cmd_examples(const Options& o, Report& r) {
    const Mat4 M = v2788_M(), B = v2788_B(), iota = Mat4::iota();
    const QuadNum tau = QuadNum::sqrt_of(-2);
    json v;
    v["M"] = classification(M);
    v["M"]["matrix"] = to_json(M);
    v["M"]["primary"] = primary_json(BlockMat(M), tau, tau);
    v["B"] = classification(B);
    v["B"]["matrix"] = to_json(B);
    v["B"]["primary"] = primary_json(BlockMat(B), tau, tau);
    bool square = (M * iota).pow(2) == B;
    v["M_iota_squared_equals_B"] = square;
    GroupSet Gv = closure({M, iota, -Mat4::identity()}, cap_of(o));
    v["closure_order"] = Gv.order();
    r.results["v2788"] = v;

    bool all = square && v["M"]["min_poly"] == "x^2-x+1" && v["B"]["min_poly"] == "x^2+1" && v["M"]["type"] == "III" &&
               v["B"]["type"] == "III" && Gv.order() == 48;
    struct Canon {
        Scenario s;
        long D;
        std::size_t expected;
    };
    const Canon canon[] = {{Scenario::TypeI_only, -3, 36},  {Scenario::TypeI_only, -1, 16},    {Scenario::TypeI_II, -3, 72},
                           {Scenario::TypeI_II, -1, 32},    {Scenario::generic, -7, 8},        {Scenario::sqrt3_III, -3, 72},
                           {Scenario::sqrt2_III, -2, 48},   {Scenario::sqrt1_III_pair, -1, 96}, {Scenario::sqrt1_III_order2, -1, 24}};
    json groups = json::array();
    for (const auto& c : canon) {
        GroupSet G = build_group(c.D, c.s, cap_of(o));
        bool ok = G.order() == c.expected;
        all = all && ok;
        groups.push_back(json{{"scenario", scenario_name(c.s)}, {"field_D", c.D}, {"order", G.order()}, {"expected", c.expected},
                              {"census", census_json(G)}, {"verified", ok}});
    }
    r.results["groups"] = groups;
    r.verdicts["all_verified"] = all;

    if (!o.write_dir.empty()) {
        namespace fs = std::filesystem;
        std::error_code ec;
        fs::create_directories(o.write_dir, ec);
        if (ec) raise(ErrorKind::MalformedInput, "cannot create directory '" + o.write_dir + "'");
        auto put = [&](const std::string& name, const json& j) {
            std::ofstream f(fs::path(o.write_dir) / name);
            if (!f) raise(ErrorKind::MalformedInput, "cannot write '" + name + "'");
            f << j.dump(2) << "\n";
        };
        put("v2788_m.json", to_json(M));
        put("v2788_b.json", to_json(B));
        json gens = json::array({to_json(M), to_json(iota), to_json(-Mat4::identity())});
        put("v2788_generators.json", json{{"generators", gens}, {"M", to_json(M)}});
        r.results["written"] = json::array({"v2788_m.json", "v2788_b.json", "v2788_generators.json"});
    }
}

json assemble(const Report& r) {
    return json{{"command", r.command}, {"inputs", r.inputs}, {"results", r.results}, {"verdicts", r.verdicts}, {"version", kVersion}};
}

void flatten(const json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
        return;
    }
    if (j.is_array()) {
        bool scalars = std::all_of(j.begin(), j.end(), [](const json& x) { return !x.is_structured(); });
        if (scalars) {
            os << prefix << ": [";
            for (std::size_t i = 0; i < j.size(); ++i) os << (i ? ", " : "") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
            os << "]\n";
            return;
        }
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", os);
        return;
    }
    os << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

std::string render(const json& report, bool summary) {
    if (!summary) return report.dump(2) + "\n";
    std::ostringstream os;
    os << "dehnkit " << report["version"].get<std::string>() << " " << report["command"].get<std::string>() << "\n";
    if (report.contains("error")) {
        flatten(report["error"], "error", os);
        return os.str();
    }
    flatten(report["verdicts"], "verdict", os);
    flatten(report["results"], "", os);
    return os.str();
}

int exit_code(ErrorKind k) { return kind_category(k) == ErrorCategory::Input ? kInputError : kComputeError; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact automorphism, symmetry-set and functional-equation toolkit", "dehnkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    auto common = [&](CLI::App* s) {
        s->add_flag("--json", "JSON report (default)");
        s->add_flag("--summary", o.summary, "Human-readable summary of the same report");
        s->add_option("--cap", o.cap, "Closure cap (overrides DEHNKIT_CLOSURE_CAP)");
    };
    auto group_source = [&](CLI::App* s) {
        s->add_option("--scenario", o.scenario, "Canonical maximal group");
        s->add_option("--field", o.field, "Negative D of the field Q(sqrt(D))");
        s->add_option("--generators", o.generators, "JSON file of generator matrices");
        s->add_option("--group", o.group, "JSON file listing group elements");
    };

    auto* classify = app.add_subcommand("classify", "Type, minimal polynomial, template and primary matrix");
    classify->add_option("--matrix", o.matrix, "4x4 matrix JSON file")->required();
    classify->add_option("--tau", o.tau, "Cusp shape, e.g. \"sqrt(-2)\"");
    classify->add_option("--tau2", o.tau2, "Second cusp shape (defaults to --tau)");
    common(classify);

    auto* group = app.add_subcommand("group", "Build a closure and optionally verify its presentation");
    group_source(group);
    group->add_flag("--verify", o.verify, "Check the presentation identities");
    group->add_option("--kind", o.kind, "Presentation kind: sqrt3, sqrt2, sqrt1_pair, sqrt1_order2");
    group->add_flag("--list", o.list, "Include every element");
    common(group);

    auto* symmetry = app.add_subcommand("symmetry", "Symmetry set of a slope pair");
    group_source(symmetry);
    symmetry->add_option("--pair", o.pair, "\"p1/q1,p2/q2\"")->required();
    symmetry->add_flag("--apply-filters", o.apply_filters, "Drop k = 1/2 maps and witnessed Type III maps");
    symmetry->add_flag("--c22-nonzero", o.c22_nonzero, "Exclude Type I elements with mismatched block parity");
    common(symmetry);

    auto* dependent = app.add_subcommand("dependent", "Dependent-case orbits and constraint checks");
    dependent->require_subcommand(1);
    auto* orbit = dependent->add_subcommand("orbit", "Orbit of a slope pair under sigma1, sigma2");
    orbit->add_option("--mode", o.mode, "SGI or NonSGI")->required();
    orbit->add_option("--field", o.field, "Negative D")->required();
    orbit->add_option("--pair", o.pair, "\"p1/q1,p2/q2\"")->required();
    orbit->add_option("--sigma1", o.sigma1, "\"a,b;c,d\"")->required();
    orbit->add_option("--sigma2", o.sigma2, "\"a,b;c,d\"")->required();
    common(orbit);
    auto* check = dependent->add_subcommand("check", "Degree-4 potential constraints for A, B fixing tau");
    check->add_option("--A", o.matA, "\"a,b;c,d\"")->required();
    check->add_option("--B", o.matB, "\"a,b;c,d\"")->required();
    check->add_option("--tau", o.tau, "Cusp shape")->required();
    check->add_option("--c40", o.c40, "Coefficient of u1^4");
    check->add_option("--c22", o.c22, "Coefficient of u1^2 u2^2");
    check->add_option("--c04", o.c04, "Coefficient of u2^4");
    common(check);

    auto* funceq = app.add_subcommand("funceq", "Kernel of Theta(PU) = conj(P) Theta(U) in one degree");
    funceq->add_option("--matrix", o.matrix, "4x4 matrix JSON file (with --tau)");
    funceq->add_option("--tau", o.tau, "Cusp shape");
    funceq->add_option("--tau2", o.tau2, "Second cusp shape");
    funceq->add_option("--primary", o.primary, "P directly: \"w1,w2;w3,w4\"");
    funceq->add_option("--field", o.field, "Negative D when --primary is rational");
    funceq->add_option("--degree", o.degree, "Homogeneous degree n");
    funceq->add_option("--degree-cap", o.degree_cap, "Largest accepted degree");
    funceq->add_flag("--allow-even", o.allow_even, "Permit even or small degrees");
    funceq->add_option("--a", o.a, "Gradient-relation constant; enables the symmetry filter");
    common(funceq);

    auto* examples = app.add_subcommand("examples", "Worked matrices and canonical groups, self-verified");
    examples->add_option("--write", o.write_dir, "Also write the example matrices as JSON into this directory");
    common(examples);

    std::vector<std::string> argv_store{"dehnkit"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_store) argv.push_back(s.c_str());

    Report rep;
    auto fail = [&](const std::string& kind, const std::string& msg, int code) {
        json j{{"command", rep.command.empty() ? json(nullptr) : json(rep.command)},
               {"error", json{{"kind", kind}, {"message", msg}}},
               {"version", kVersion}};
        out << render(j, o.summary);
        err << "dehnkit: " << msg << "\n";
        return code;
    };

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        return fail("UsageError", e.what(), kInputError);
    }

    try {
        const std::pair<CLI::App*, void (*)(const Options&, Report&)> table[] = {
            {classify, cmd_classify}, {group, cmd_group},   {symmetry, cmd_symmetry}, {orbit, cmd_orbit},
            {check, cmd_check},       {funceq, cmd_funceq}, {examples, cmd_examples}};
        for (const auto& [sub, fn] : table) {
            if (!sub->parsed()) continue;
            rep.command = sub == orbit || sub == check ? "dependent " + sub->get_name() : sub->get_name();
            fn(o, rep);
            break;
        }
    } catch (const Error& e) {
        return fail(e.name(), e.what(), exit_code(e.kind()));
    } catch (const io::json::exception& e) {
        return fail("MalformedInput", std::string("malformed JSON input: ") + e.what(), kInputError);
    } catch (const std::exception& e) {
        return fail("InternalError", e.what(), kComputeError);
    }
    out << render(assemble(rep), o.summary);
    return kOk;
}

}  // namespace dehnkit::cli
