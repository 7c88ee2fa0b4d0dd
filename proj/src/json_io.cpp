#include "dehnkit/json_io.hpp"

#include <fstream>
#include <sstream>

#include "dehnkit/errors.hpp"

namespace dehnkit::io {

namespace {

[[noreturn]] void malformed(const std::string& what) { raise(ErrorKind::MalformedInput, what); }

}  // namespace

json to_json(const Rational& r) { return r.str(); }

Rational rational_from(const json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    malformed("malformed rational: '" + j.dump() + "' (use an integer or a \"p/q\" string)");
}

json to_json(const QuadNum& x) { return json{{"a", x.a().str()}, {"b", x.b().str()}, {"D", x.D()}}; }

QuadNum quad_from(const json& j) {
    if (j.is_string()) return QuadNum::parse(j.get<std::string>());
    if (j.is_number_integer()) return QuadNum(j.get<long>());
    if (!j.is_object() || !j.contains("a")) malformed("malformed field element: '" + j.dump() + "'");
    Rational a = rational_from(j.at("a"));
    Rational b = j.contains("b") ? rational_from(j.at("b")) : Rational(0);
    long D = -1;
    if (j.contains("D")) {
        if (!j.at("D").is_number_integer()) malformed("field element D must be an integer");
        D = j.at("D").get<long>();
    }
    if (D >= 0) malformed("field element D must be negative");
    return QuadNum(a, b, D);
}

json to_json(const Mat4& m) {
    json rows = json::array();
    for (int i = 0; i < 4; ++i) {
        json row = json::array();
        for (int k = 0; k < 4; ++k) row.push_back(m(i, k).str());
        rows.push_back(row);
    }
    return json{{"rows", rows}};
}

json to_json(const Mat2Q& m) {
    return json{{"rows", json::array({json::array({m(0, 0).str(), m(0, 1).str()}), json::array({m(1, 0).str(), m(1, 1).str()})})}};
}

json to_json(const Mat2K& m) {
    json rows = json::array();
    for (int i = 0; i < 2; ++i) rows.push_back(json::array({to_json(m(i, 0)), to_json(m(i, 1))}));
    return json{{"rows", rows}};
}

namespace {

const json& rows_of(const json& j, std::size_t n) {
    const json& rows = j.is_object() && j.contains("rows") ? j.at("rows") : j;
    if (!rows.is_array() || rows.size() != n) malformed("matrix must have " + std::to_string(n) + " rows");
    for (const auto& r : rows)
        if (!r.is_array() || r.size() != n) malformed("matrix rows must have " + std::to_string(n) + " entries");
    return rows;
}

}  // namespace

Mat4 mat4_from(const json& j) {
    const json& rows = rows_of(j, 4);
    Mat4 m;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) m(i, k) = rational_from(rows[i][k]);
    return m;
}

Mat2Q mat2_from(const json& j) {
    const json& rows = rows_of(j, 2);
    return Mat2Q(rational_from(rows[0][0]), rational_from(rows[0][1]), rational_from(rows[1][0]), rational_from(rows[1][1]));
}

json to_json(const Slope& s) { return s.p.get_str() + "/" + s.q.get_str(); }

json to_json(const SlopePair& p) { return json::array({to_json(p.first), to_json(p.second)}); }

json to_json(const HomPoly& f) {
    json c = json::array();
    for (int k = f.degree; k >= 0; --k) c.push_back(to_json(f.coeffs[k]));
    return json{{"degree", f.degree}, {"coeffs", c}, {"text", f.str()}};
}

json to_json(const HomPair& t) { return json::array({to_json(t[0]), to_json(t[1])}); }

json to_json(const KVector& k) { return json::array({k.k[0].str(), k.k[1].str(), k.k[2].str(), k.k[3].str()}); }

json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) malformed("cannot read file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return json::parse(ss.str());
    } catch (const json::parse_error& e) {
        malformed("malformed JSON in '" + path + "': " + e.what());
    }
}

std::vector<Mat4> matrices_from(const json& j, const char* key) {
    const json& list = j.is_object() ? (j.contains(key) ? j.at(key) : json()) : j;
    if (!list.is_array() || list.empty()) malformed(std::string("expected a non-empty matrix list under \"") + key + "\"");
    std::vector<Mat4> out;
    for (const auto& m : list) out.push_back(mat4_from(m));
    return out;
}

Mat2Q parse_mat2(const std::string& s) {
    std::vector<Rational> v;
    std::string cur;
    auto flush = [&] {
        v.push_back(Rational::parse(cur));
        cur.clear();
    };
    for (char c : s) {
        if (c == ',' || c == ';') flush();
        else cur += c;
    }
    flush();
    if (v.size() != 4) malformed("2x2 matrix must be 'a,b;c,d': '" + s + "'");
    return Mat2Q(v[0], v[1], v[2], v[3]);
}

}  // namespace dehnkit::io
