#ifndef PRODSIMP_IO_HPP
#define PRODSIMP_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "complex.hpp"
#include "homology.hpp"
#include "incidence.hpp"
#include "polytope.hpp"
#include "recognition.hpp"
#include "report.hpp"

namespace prodsimp::io {

using json = nlohmann::json;

inline json vertex_list(Simplex s)
{
    json out = json::array();
    for (int v : s.vertices())
        out.push_back(v);
    return out;
}

inline json label_list(const SimplicialComplex& k, Simplex s)
{
    json out = json::array();
    for (int v : s.vertices())
        out.push_back(k.label(v));
    return out;
}

/// {"m", "labels"?, "maximal_faces"}; the complex is compacted first and
/// faces are listed in lexicographic order.
inline json complex_to_json(const SimplicialComplex& input)
{
    const SimplicialComplex k = compact(input);
    json out;
    out["m"] = k.ambient_size();
    if (k.has_labels())
        out["labels"] = k.labels();
    json faces = json::array();
    for (Simplex f : k.maximal_faces())
        faces.push_back(vertex_list(f));
    out["maximal_faces"] = faces;
    return out;
}

inline SimplicialComplex complex_from_json(const json& j)
{
    try {
        const int m = j.at("m").get<int>();
        std::vector<std::string> labels;
        if (j.contains("labels"))
            labels = j.at("labels").get<std::vector<std::string>>();
        const auto faces = j.at("maximal_faces").get<std::vector<std::vector<int>>>();
        return build_complex(faces, m, std::move(labels));
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("complex JSON: ") + e.what());
    }
}

inline Rational rational_from_json(const json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long long>());
    throw Error(ErrorCode::ParseError, "rationals must be strings \"p\" or \"p/q\"");
}

inline json rational_vector_json(const RationalVector& v)
{
    json out = json::array();
    for (const auto& x : v)
        out.push_back(format_rational(x));
    return out;
}

inline json polytope_to_json(const Polytope& p)
{
    json out;
    out["dim"] = p.h.dim;
    json ineqs = json::array();
    for (const auto& ineq : p.h.inequalities)
        ineqs.push_back(json{{"normal", rational_vector_json(ineq.normal)}, {"offset", format_rational(ineq.offset)}});
    out["inequalities"] = ineqs;
    json verts = json::array();
    for (const auto& x : p.v.vertices)
        verts.push_back(rational_vector_json(x));
    out["vertices"] = verts;
    return out;
}

inline Polytope polytope_from_json(const json& j)
{
    try {
        Polytope p;
        p.h.dim = j.at("dim").get<int>();
        for (const auto& ineq : j.at("inequalities")) {
            Inequality parsed;
            for (const auto& x : ineq.at("normal"))
                parsed.normal.push_back(rational_from_json(x));
            parsed.offset = rational_from_json(ineq.at("offset"));
            p.h.inequalities.push_back(std::move(parsed));
        }
        for (const auto& vert : j.at("vertices")) {
            RationalVector x;
            for (const auto& c : vert)
                x.push_back(rational_from_json(c));
            p.v.vertices.push_back(std::move(x));
        }
        return p;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("polytope JSON: ") + e.what());
    }
}

inline json incidence_to_json(const VertexFacetIncidence& inc)
{
    json sets = json::array();
    for (Simplex s : inc.vertex_facets)
        sets.push_back(vertex_list(s));
    return json{{"n", inc.n}, {"facets", inc.m}, {"vertex_facets", sets}};
}

inline VertexFacetIncidence incidence_from_json(const json& j)
{
    try {
        VertexFacetIncidence inc;
        inc.n = j.at("n").get<int>();
        inc.m = j.at("facets").get<int>();
        for (const auto& set : j.at("vertex_facets").get<std::vector<std::vector<int>>>()) {
            Simplex s;
            for (int f : set) {
                if (f < 0 || f >= inc.m)
                    throw Error(ErrorCode::IndexOutOfRange, "facet index " + std::to_string(f));
                s.insert(f);
            }
            inc.vertex_facets.push_back(s);
        }
        validate_incidence(inc);
        return inc;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("incidence JSON: ") + e.what());
    }
}

inline json faces_json(const SimplicialComplex& k, const std::vector<Simplex>& faces)
{
    json out = json::array();
    for (Simplex f : faces)
        out.push_back(label_list(k, f));
    return out;
}

/// Witness as {"kind": ..., fields}; simplices are given by vertex labels.
inline json witness_to_json(const SimplicialComplex& k, const Witness& w)
{
    struct Visitor {
        const SimplicialComplex& k;
        json operator()(const witness::OverlappingNonFaces& x) const
        {
            return {{"kind", "overlapping_non_faces"}, {"first", label_list(k, x.first)}, {"second", label_list(k, x.second)}};
        }
        json operator()(const witness::UncoveredByNonFaces& x) const
        {
            return {{"kind", "uncovered_vertices"}, {"vertices", label_list(k, x.vertices)}};
        }
        json operator()(const witness::JoinMismatch& x) const
        {
            return {{"kind", "join_mismatch"}, {"face", label_list(k, x.face)}, {"in_complex", x.in_complex}};
        }
        json operator()(const witness::RestrictionNotSimplex& x) const
        {
            return {{"kind", "restriction_not_simplex"}, {"sigma", label_list(k, x.sigma)},
                    {"restriction", faces_json(k, x.restriction)}};
        }
        json operator()(const witness::LinkIntersectionNotSimplex& x) const
        {
            return {{"kind", "link_intersection_not_simplex"}, {"sigma", label_list(k, x.sigma)},
                    {"vertex", k.label(x.vertex)}, {"intersection", faces_json(k, x.intersection)}};
        }
        json operator()(const witness::LongLink& x) const
        {
            return {{"kind", "long_link"}, {"eta", label_list(k, x.eta)}, {"cycle_length", x.cycle_length}};
        }
        json operator()(const witness::BadBaseCase& x) const
        {
            return {{"kind", "bad_base_case"}, {"dimension", x.dimension}, {"cycle_length", x.cycle_length}};
        }
        json operator()(const witness::RecursiveFailure& x) const
        {
            json path = json::array();
            for (int v : x.path)
                path.push_back(k.label(v));
            json out{{"kind", "recursive_failure"}, {"path", path}, {"reason", x.reason}};
            if (x.ridge)
                out["ridge"] = label_list(k, *x.ridge);
            if (x.cycle_length)
                out["cycle_length"] = x.cycle_length;
            return out;
        }
        json operator()(const witness::RankMismatch& x) const
        {
            return {{"kind", "rank_mismatch"}, {"field", std::string(to_string(x.field))}, {"total", x.total},
                    {"expected", x.expected}};
        }
        json operator()(const witness::DoubleFailure& x) const
        {
            json out{{"kind", "double_failure"}, {"reason", x.reason}};
            // Double vertices 2i and 2i+1 come from vertex i of compact(K).
            auto lifted = [&](Simplex s) {
                const SimplicialComplex c = compact(k);
                json names = json::array();
                for (int v : s.vertices())
                    names.push_back(c.label(v / 2) + (v % 2 ? "'" : ""));
                return names;
            };
            if (x.first)
                out["first"] = lifted(*x.first);
            if (x.second)
                out["second"] = lifted(*x.second);
            return out;
        }
        json operator()(const witness::ObtusePair& x) const
        {
            return {{"kind", "obtuse_pair"}, {"facets", {x.facet_a, x.facet_b}},
                    {"inner_product", format_rational(x.inner_product)}};
        }
    };
    return std::visit(Visitor{k}, w);
}

inline json report_to_json(const SimplicialComplex& k, const RecognitionReport& r)
{
    json out{{"criterion", std::string(to_string(r.criterion))}, {"verdict", r.verdict}};
    out["witness"] = r.witness ? witness_to_json(k, *r.witness) : json(nullptr);
    if (r.skipped) {
        out["skipped"] = true;
        out["note"] = r.note;
    }
    return out;
}

inline json decomposition_json(const SimplicialComplex& k, const std::optional<SphereJoinDecomposition>& d)
{
    if (!d)
        return nullptr;
    json parts = json::array();
    for (Simplex p : d->parts)
        parts.push_back(label_list(k, p));
    return json{{"parts", parts}, {"dims", d->dims()}};
}

inline json consolidated_to_json(const SimplicialComplex& k, const ConsolidatedReport& c)
{
    json reports = json::array();
    for (const auto& r : c.reports)
        reports.push_back(report_to_json(k, r));
    return json{{"reports", reports}, {"decomposition", decomposition_json(k, c.decomposition)},
                {"agreement", c.agreement}};
}

/// "(-i,2j)" with "(0,0)" for i = 0.
inline std::string bigraded_key(int i, int j)
{
    return "(" + (i == 0 ? std::string("0") : "-" + std::to_string(i)) + "," + std::to_string(2 * j) + ")";
}

inline json bigraded_to_json(const BigradedBettiTable& t)
{
    json out = json::object();
    for (const auto& [key, value] : t.entries)
        out[bigraded_key(key.first, key.second)] = value;
    return out;
}

inline json betti_to_json(const BettiData& b)
{
    json degrees = json::object();
    for (const auto& [d, value] : b.reduced_betti)
        degrees[std::to_string(d)] = value;
    return json{{"field", std::string(to_string(b.field))}, {"reduced_betti", degrees}, {"total", b.total}};
}

inline json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, "'" + path + "': " + e.what());
    }
}

inline void write_text_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out)
        throw Error(ErrorCode::ParseError, "cannot write '" + path + "'");
    out << text;
    if (!out)
        throw Error(ErrorCode::ParseError, "write failed for '" + path + "'");
}

} // namespace prodsimp::io

#endif // PRODSIMP_IO_HPP
