#ifndef PRODSIMP_TOOLS_SUBJECT_HPP
#define PRODSIMP_TOOLS_SUBJECT_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <prodsimp/io.hpp>
#include <prodsimp/prodsimp.hpp>

namespace prodsimp::cli {

// What a command operates on. complex is always set; the other two are
// present only when the source carried them.
struct Subject {
    std::string name;
    std::optional<Polytope> polytope;
    std::optional<VertexFacetIncidence> incidence;
    SimplicialComplex complex;
};

inline Subject from_polytope(std::string name, Polytope p)
{
    VertexFacetIncidence inc = incidence(p);
    SimplicialComplex k = dual_boundary_complex(inc);
    return Subject{std::move(name), std::move(p), std::move(inc), std::move(k)};
}

inline Subject from_incidence(std::string name, VertexFacetIncidence inc)
{
    SimplicialComplex k = dual_boundary_complex(inc);
    return Subject{std::move(name), std::nullopt, std::move(inc), std::move(k)};
}

inline Subject from_complex(std::string name, SimplicialComplex k)
{
    return Subject{std::move(name), std::nullopt, std::nullopt, std::move(k)};
}

inline Subject subject_from_json(const std::string& name, const io::json& j)
{
    auto bad = [&](const std::string& why) { return Error(ErrorCode::ParseError, name + ": " + why); };
    if (!j.is_object())
        throw bad("expected a JSON object");
    if (j.contains("maximal_faces"))
        return from_complex(name, io::complex_from_json(j));
    if (j.contains("inequalities"))
        return from_polytope(name, io::polytope_from_json(j));
    if (j.contains("vertex_facets"))
        return from_incidence(name, io::incidence_from_json(j));

    std::optional<Subject> s;
    if (j.contains("polytope"))
        s = from_polytope(name, io::polytope_from_json(j.at("polytope")));
    if (j.contains("incidence")) {
        VertexFacetIncidence inc = io::incidence_from_json(j.at("incidence"));
        if (!s)
            s = from_incidence(name, inc);
        else if (inc.vertex_facets != s->incidence->vertex_facets || inc.m != s->incidence->m)
            throw bad("bundle incidence disagrees with its polytope");
    }
    if (j.contains("complex")) {
        SimplicialComplex k = io::complex_from_json(j.at("complex"));
        if (!s)
            s = from_complex(name, k);
        else if (!(compact(k) == compact(s->complex)))
            throw bad("bundle complex disagrees with its incidence");
    }
    if (!s)
        throw bad("not a complex, polytope, incidence or bundle");
    return *s;
}

inline int parse_int(const std::string& text, const std::string& context)
{
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size())
        throw Error(ErrorCode::ParseError, context + ": expected an integer, got '" + text + "'");
    return value;
}

inline std::vector<int> parse_int_list(const std::string& text, const std::string& context)
{
    std::vector<int> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        out.push_back(parse_int(text.substr(start, comma - start), context));
        if (comma == std::string::npos)
            return out;
        start = comma + 1;
    }
}

Subject resolve(const std::string& spec);

/// A file path if one exists under that name, otherwise a generator spec.
inline Subject resolve_operand(const std::string& text)
{
    if (std::filesystem::is_regular_file(text))
        return subject_from_json(text, io::read_json_file(text));
    return resolve(text);
}

/**
 * Generator grammar:
 *   simplex:n | polygon:k | product:n1,n2,... | prism:k
 *   truncate:<input>,<vertex> | double:<input> | join:<a>,<b>
 * where <input> is a file or a nested spec. truncate splits at the last
 * comma; join takes the first comma at which both sides resolve.
 */
inline Subject resolve(const std::string& spec)
{
    const std::size_t colon = spec.find(':');
    if (colon == std::string::npos)
        throw Error(ErrorCode::ParseError, "bad generator spec '" + spec + "'");
    const std::string kind = spec.substr(0, colon);
    const std::string arg = spec.substr(colon + 1);

    if (kind == "simplex")
        return from_polytope(spec, gen_simplex(parse_int(arg, spec)));
    if (kind == "polygon")
        return from_polytope(spec, gen_polygon(parse_int(arg, spec)));
    if (kind == "product")
        return from_polytope(spec, gen_product_of_simplices(parse_int_list(arg, spec)));
    if (kind == "prism")
        return from_polytope(spec, gen_prism(parse_int(arg, spec)));
    if (kind == "truncate") {
        const std::size_t comma = arg.rfind(',');
        if (comma == std::string::npos)
            throw Error(ErrorCode::ParseError, spec + ": expected truncate:<input>,<vertex>");
        const Subject base = resolve_operand(arg.substr(0, comma));
        if (!base.incidence)
            throw Error(ErrorCode::ParseError, spec + ": truncation needs a polytope or incidence input");
        return from_incidence(spec, gen_truncated(*base.incidence, parse_int(arg.substr(comma + 1), spec)));
    }
    if (kind == "double")
        return from_complex(spec, double_complex(resolve_operand(arg).complex));
    if (kind == "join") {
        for (std::size_t comma = arg.find(','); comma != std::string::npos; comma = arg.find(',', comma + 1)) {
            std::optional<Subject> a, b;
            try {
                a = resolve_operand(arg.substr(0, comma));
                b = resolve_operand(arg.substr(comma + 1));
            } catch (const Error&) {
                continue;
            }
            return from_complex(spec, join(a->complex, b->complex));
        }
        throw Error(ErrorCode::ParseError, spec + ": expected join:<a>,<b> with two valid operands");
    }
    throw Error(ErrorCode::ParseError, "unknown generator '" + kind + "'");
}

/// All available representations as one object.
inline io::json bundle_json(const Subject& s)
{
    io::json out;
    out["name"] = s.name;
    if (s.polytope)
        out["polytope"] = io::polytope_to_json(*s.polytope);
    if (s.incidence)
        out["incidence"] = io::incidence_to_json(*s.incidence);
    out["complex"] = io::complex_to_json(s.complex);
    return out;
}

} // namespace prodsimp::cli

#endif // PRODSIMP_TOOLS_SUBJECT_HPP
