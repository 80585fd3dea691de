#include "qlc/serialize.hpp"

#include <fstream>
#include <sstream>

#include "qlc/errors.hpp"

namespace qlc {

namespace {

Int int_from_string(const std::string& s) {
    try {
        return Int(s, 10);
    } catch (const std::invalid_argument&) {
        throw IoError("not a decimal integer: \"" + s + "\"");
    }
}

const json& expect_array(const json& j, const char* what) {
    if (!j.is_array()) throw IoError(std::string(what) + ": expected a JSON array");
    return j;
}

std::string expect_string(const json& j, const char* what) {
    if (!j.is_string()) throw IoError(std::string(what) + ": expected a JSON string");
    return j.get<std::string>();
}

}  // namespace

json to_json(const QPoly& p) {
    json arr = json::array();
    for (const Int& c : p.coeffs()) arr.push_back(c.get_str());
    return arr;
}

QPoly qpoly_from_json(const json& j) {
    expect_array(j, "polynomial");
    std::vector<Int> coeffs;
    coeffs.reserve(j.size());
    for (const auto& el : j) coeffs.push_back(int_from_string(expect_string(el, "coefficient")));
    return QPoly::from_coeffs(std::move(coeffs));
}

json to_json(const PolySeq& s) {
    json arr = json::array();
    for (const QPoly& p : s) arr.push_back(to_json(p));
    return arr;
}

PolySeq polyseq_from_json(const json& j) {
    expect_array(j, "polynomial sequence");
    PolySeq s;
    s.reserve(j.size());
    for (const auto& el : j) s.push_back(qpoly_from_json(el));
    return s;
}

json to_json(const std::vector<Int>& s) {
    json arr = json::array();
    for (const Int& v : s) arr.push_back(v.get_str());
    return arr;
}

json to_json(const std::vector<Rat>& s) {
    json arr = json::array();
    for (const Rat& v : s) arr.push_back(rat_to_string(v));
    return arr;
}

std::vector<Int> ints_from_json(const json& j) {
    expect_array(j, "integer sequence");
    std::vector<Int> s;
    s.reserve(j.size());
    for (const auto& el : j) s.push_back(int_from_string(expect_string(el, "entry")));
    return s;
}

std::vector<Rat> rats_from_json(const json& j) {
    expect_array(j, "numeric sequence");
    std::vector<Rat> s;
    s.reserve(j.size());
    for (const auto& el : j) s.push_back(rat_from_string(expect_string(el, "entry")));
    return s;
}

json to_json(const TriangleSpec& spec) {
    json j;
    j["name"] = spec.name;
    j["f"] = spec.f.render();
    j["g"] = spec.g.render();
    j["h"] = spec.h.render();
    if (spec.has_boundary()) {
        json b = json::object();
        if (spec.boundary_g0) b["g0"] = spec.boundary_g0->render();
        if (spec.boundary_h0) b["h0"] = spec.boundary_h0->render();
        j["boundary"] = std::move(b);
    }
    return j;
}

TriangleSpec spec_from_json(const json& j) {
    if (!j.is_object()) throw IoError("triangle spec: expected a JSON object");
    TriangleSpec spec;
    spec.name = j.contains("name") ? expect_string(j.at("name"), "name") : "";
    for (const char* key : {"f", "g", "h"})
        if (!j.contains(key)) throw IoError(std::string("triangle spec: missing \"") + key + "\"");
    spec.f = CoeffExpr::parse(expect_string(j.at("f"), "f"));
    spec.g = CoeffExpr::parse(expect_string(j.at("g"), "g"));
    spec.h = CoeffExpr::parse(expect_string(j.at("h"), "h"));
    if (j.contains("boundary")) {
        const json& b = j.at("boundary");
        if (!b.is_object()) throw IoError("triangle spec: \"boundary\" must be an object");
        if (b.contains("g0")) spec.boundary_g0 = CoeffExpr::parse(expect_string(b.at("g0"), "g0"));
        if (b.contains("h0")) spec.boundary_h0 = CoeffExpr::parse(expect_string(b.at("h0"), "h0"));
    }
    return spec;
}

json to_json(const Triangle& t) {
    json arr = json::array();
    for (const PolySeq& row : t.rows) arr.push_back(to_json(row));
    return arr;
}

Triangle triangle_from_json(const json& j) {
    expect_array(j, "triangle");
    Triangle t;
    t.rows.reserve(j.size());
    for (const auto& el : j) t.rows.push_back(polyseq_from_json(el));
    return t;
}

namespace {

json witness_to_json(const Witness& w) {
    json jw;
    jw["i"] = w.i;
    jw["j"] = w.j;
    if (w.degree) jw["degree"] = *w.degree;
    if (w.row) jw["row"] = *w.row;
    jw["lhs"] = w.lhs;
    jw["rhs"] = w.rhs;
    return jw;
}

}  // namespace

json to_json(const Report& r) {
    json j;
    j["property"] = r.property;
    j["holds"] = r.holds;
    if (r.witness) j["witness"] = witness_to_json(*r.witness);
    return j;
}

json to_json(const CriterionReport& r) {
    json j;
    j["overall"] = r.overall;
    j["max_n"] = r.max_n;
    json conds = json::object();
    for (const auto& [name, verdict] : r.conditions) {
        json c;
        c["holds"] = verdict.holds;
        if (verdict.witness) {
            c["n"] = verdict.witness->n;
            c["k"] = verdict.witness->k;
            c["l"] = verdict.witness->l;
            c["degree"] = verdict.witness->degree;
        }
        conds[name] = std::move(c);
    }
    j["conditions"] = std::move(conds);
    if (!r.warnings.empty()) j["warnings"] = r.warnings;
    return j;
}

std::string to_csv(const Triangle& t) {
    std::string out;
    for (const PolySeq& row : t.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k) out += ',';
            out += to_string(row[k]);
        }
        out += '\n';
    }
    return out;
}

std::string to_csv(const Triangle& t, const Rat& eval_q) {
    std::string out;
    for (const PolySeq& row : t.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k) out += ',';
            out += rat_to_string(row[k].eval_at(eval_q));
        }
        out += '\n';
    }
    return out;
}

std::string rat_to_string(const Rat& r) {
    return r.get_str();
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw IoError("empty rational");
    try {
        Rat r(s, 10);
        if (r.get_den() == 0) throw IoError("zero denominator in \"" + s + "\"");
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw IoError("not a rational number: \"" + s + "\"");
    }
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw IoError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace qlc
