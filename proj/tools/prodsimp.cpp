// prodsimp: recognize duals of products of simplices from the command line.

#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subject.hpp"

namespace {

using namespace prodsimp;
using prodsimp::cli::Subject;
using json = io::json;

// Exit codes.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kFailure = 2;
constexpr int kDisagreement = 3;

struct Config {
    std::string in;
    std::string gen;
    std::string field = "gf2";
    int cap = 20;
    bool assert_mode = false;
    std::string json_path;
    bool quiet = false;
    // gen
    std::string positional_spec;
    std::string out_dir;
    // crosscheck
    std::string family;
};

std::vector<Field> parse_fields(const std::string& text)
{
    if (text == "gf2")
        return {Field::GF2};
    if (text == "q")
        return {Field::Rational};
    if (text == "both")
        return {Field::GF2, Field::Rational};
    throw Error(ErrorCode::InvalidParameter, "--field must be gf2, q or both");
}

Subject load(const Config& cfg)
{
    if (!cfg.in.empty() && !cfg.gen.empty())
        throw Error(ErrorCode::InvalidParameter, "give one of --in and --gen");
    if (!cfg.in.empty())
        return cli::subject_from_json(cfg.in, io::read_json_file(cfg.in));
    if (!cfg.gen.empty())
        return cli::resolve(cfg.gen);
    throw Error(ErrorCode::InvalidParameter, "an input is required (--in PATH or --gen SPEC)");
}

SweepOptions sweep_options(const Config& cfg)
{
    if (cfg.cap < 1)
        throw Error(ErrorCode::InvalidParameter, "--cap must be positive");
    SweepOptions o;
    o.cap = cfg.cap;
    return o;
}

void require_cap(const Config& cfg, int needed, const char* what)
{
    if (needed > cfg.cap)
        throw Error(ErrorCode::CapExceeded, std::string(what) + " needs " + std::to_string(needed) +
                                                " vertices, over --cap " + std::to_string(cfg.cap) +
                                                "; cost grows as 2^N, raise --cap explicitly");
}

void emit(const Config& cfg, const json& doc)
{
    const std::string text = doc.dump(2) + "\n";
    if (!cfg.json_path.empty())
        io::write_text_file(cfg.json_path, text);
    else if (!cfg.quiet)
        std::cout << text;
}

json subject_header(const Subject& s)
{
    return json{{"name", s.name}, {"m", s.complex.num_vertices()}, {"dim", s.complex.dimension()}};
}

int cmd_recognize(const Config& cfg)
{
    const Subject s = load(cfg);
    require_cap(cfg, s.complex.num_vertices(), "Hochster sweep");
    RecognizeOptions options;
    options.sweep = sweep_options(cfg);
    options.skip_over_cap = true;  // only the double can exceed here
    const ConsolidatedReport report = recognize_all(s.complex, parse_fields(cfg.field), options);

    json doc = io::consolidated_to_json(s.complex, report);
    doc["input"] = subject_header(s);
    // A non-obtuse realization forces a positive verdict; it never forces a negative one.
    bool dihedral_conflict = false;
    if (s.polytope) {
        const RecognitionReport d = dihedral_nonobtuse_check(s.polytope->h, *s.incidence);
        doc["dihedral"] = io::report_to_json(s.complex, d);
        dihedral_conflict = d.verdict && !report.positive();
    }
    emit(cfg, doc);

    if (!cfg.assert_mode)
        return kOk;
    if (!report.agreement || dihedral_conflict)
        return kDisagreement;
    return report.positive() ? kOk : kNegative;
}

json sweep_json(const HochsterTable& t, const SimplicialComplex& k)
{
    json coh = json::object();
    for (const auto& [p, r] : t.cohomology_ranks())
        coh[std::to_string(p)] = r;
    return json{{"total", t.total()},
                {"cohomology_ranks", coh},
                {"euler_characteristic", t.euler_characteristic()},
                {"product_value", hrk_product_value(k)}};
}

int cmd_hrk(const Config& cfg)
{
    const Subject s = load(cfg);
    require_cap(cfg, s.complex.num_vertices(), "Hochster sweep");
    json doc;
    doc["input"] = subject_header(s);
    bool all_product = true;
    for (Field f : parse_fields(cfg.field)) {
        const HochsterTable t = hochster_sweep(s.complex, f, sweep_options(cfg));
        doc["fields"][std::string(to_string(f))] = sweep_json(t, s.complex);
        all_product = all_product && t.total() == hrk_product_value(s.complex);
    }
    emit(cfg, doc);
    return cfg.assert_mode && !all_product ? kNegative : kOk;
}

int cmd_betti(const Config& cfg)
{
    const Subject s = load(cfg);
    require_cap(cfg, s.complex.num_vertices(), "Hochster sweep");
    json doc;
    doc["input"] = subject_header(s);
    for (Field f : parse_fields(cfg.field)) {
        const BigradedBettiTable t = bigraded_betti(s.complex, f, sweep_options(cfg));
        json entry{{"bigraded", io::bigraded_to_json(t)}, {"total", t.total()},
                   {"complex", io::betti_to_json(reduced_betti(s.complex, f))}};
        doc["fields"][std::string(to_string(f))] = entry;
    }
    emit(cfg, doc);
    return kOk;
}

int cmd_double(const Config& cfg)
{
    const Subject s = load(cfg);
    const int m = s.complex.num_vertices();
    require_cap(cfg, 2 * m, "double");
    const SimplicialComplex l = double_complex(s.complex);
    json doc;
    doc["input"] = subject_header(s);
    doc["double"] = io::complex_to_json(l);
    doc["double_dim"] = l.dimension();
    bool consistent = true;
    for (Field f : parse_fields(cfg.field)) {
        const std::int64_t via_double = hrk_Z_via_double(s.complex, f, sweep_options(cfg));
        const std::int64_t direct = hochster_total_rank(s.complex, f, sweep_options(cfg));
        doc["fields"][std::string(to_string(f))] = json{{"hrk_real_double", via_double}, {"hrk", direct}};
        consistent = consistent && via_double == direct;
    }
    const RecognitionReport r = check_double_criterion(s.complex, cfg.cap);
    doc["criterion"] = io::report_to_json(s.complex, r);
    emit(cfg, doc);
    if (!consistent)
        return kDisagreement;
    return cfg.assert_mode && !r.verdict ? kNegative : kOk;
}

int cmd_gen(Config cfg)
{
    if (!cfg.positional_spec.empty()) {
        if (!cfg.gen.empty())
            throw Error(ErrorCode::InvalidParameter, "give the spec once");
        cfg.gen = cfg.positional_spec;
    }
    const Subject s = load(cfg);
    const json bundle = cli::bundle_json(s);
    if (!cfg.out_dir.empty()) {
        std::filesystem::create_directories(cfg.out_dir);
        const std::filesystem::path dir(cfg.out_dir);
        for (const char* part : {"polytope", "incidence", "complex"})
            if (bundle.contains(part))
                io::write_text_file((dir / (std::string(part) + ".json")).string(), bundle[part].dump(2) + "\n");
    }
    if (!cfg.json_path.empty() || cfg.out_dir.empty())
        emit(cfg, bundle);
    return kOk;
}

int cmd_dihedral(const Config& cfg)
{
    const Subject s = load(cfg);
    if (!s.polytope)
        throw Error(ErrorCode::InvalidParameter, s.name + ": the dihedral test needs an H/V realization");
    const RecognitionReport r = dihedral_nonobtuse_check(s.polytope->h, *s.incidence);
    json doc = io::report_to_json(s.complex, r);
    doc["input"] = subject_header(s);
    emit(cfg, doc);
    return cfg.assert_mode && !r.verdict ? kNegative : kOk;
}

int cmd_euler(const Config& cfg)
{
    const Subject s = load(cfg);
    if (!s.incidence)
        throw Error(ErrorCode::InvalidParameter, s.name + ": the gluing count needs a polytope or incidence");
    require_cap(cfg, s.complex.num_vertices(), "Hochster sweep");
    const std::int64_t gluing = euler_char_gluing(*s.incidence);
    const std::int64_t hochster = hochster_sweep(s.complex, Field::GF2, sweep_options(cfg)).euler_characteristic();
    json doc{{"input", subject_header(s)}, {"gluing", gluing}, {"hochster", hochster}, {"agree", gluing == hochster}};
    emit(cfg, doc);
    return gluing == hochster ? kOk : kDisagreement;
}

struct Row {
    std::string name;
    int m = 0;
    int dim = 0;
    std::string verdict;  // "positive" | "negative" | "skipped"
    bool agreement = true;
    std::string hrk = "skipped";
    std::string chi_gluing;
    std::string chi_hochster = "skipped";
    std::string hrk_double = "skipped";
    std::string dihedral = "-";
    bool ok = true;
};

Row crosscheck_row(const CatalogEntry& e, const Config& cfg, const std::vector<Field>& fields)
{
    const SimplicialComplex& k = e.complex;
    Row row;
    row.name = e.name;
    row.m = k.num_vertices();
    row.dim = k.dimension();
    const std::int64_t gluing = euler_char_gluing(e.incidence);
    row.chi_gluing = std::to_string(gluing);

    RecognizeOptions options;
    options.sweep = sweep_options(cfg);
    options.skip_over_cap = true;
    const ConsolidatedReport report = recognize_all(k, fields, options);
    row.agreement = report.agreement;
    row.verdict = report.positive() ? "positive" : "negative";
    row.ok = report.agreement;

    if (row.m <= cfg.cap) {
        const HochsterTable t = hochster_sweep(k, fields.front(), options.sweep);
        row.hrk = std::to_string(t.total());
        row.chi_hochster = std::to_string(t.euler_characteristic());
        row.ok = row.ok && t.euler_characteristic() == gluing;
        if (e.is_product())
            row.ok = row.ok && report.positive() && t.total() == hrk_product_value(k);
        if (2 * row.m <= cfg.cap) {
            const std::int64_t d = hrk_Z_via_double(k, fields.front(), options.sweep);
            row.hrk_double = std::to_string(d);
            row.ok = row.ok && d == t.total();
        }
    }
    if (e.geometry) {
        const RecognitionReport d = dihedral_nonobtuse_check(e.geometry->h, e.incidence);
        row.dihedral = d.verdict ? "pass" : "fail";
        row.ok = row.ok && (!d.verdict || report.positive());
    }
    return row;
}

int cmd_crosscheck(const Config& cfg)
{
    const std::vector<Field> fields = parse_fields(cfg.field);
    std::vector<Row> rows;
    for (const CatalogEntry& e : default_catalog())
        if (cfg.family.empty() || e.family == cfg.family)
            rows.push_back(crosscheck_row(e, cfg, fields));
    if (rows.empty())
        throw Error(ErrorCode::InvalidParameter, "no catalog entries in family '" + cfg.family + "'");

    bool all_ok = true;
    json doc = json::array();
    for (const Row& r : rows) {
        all_ok = all_ok && r.ok;
        doc.push_back(json{{"name", r.name},
                           {"m", r.m},
                           {"dim", r.dim},
                           {"verdict", r.verdict},
                           {"agreement", r.agreement},
                           {"hrk", r.hrk},
                           {"chi_gluing", r.chi_gluing},
                           {"chi_hochster", r.chi_hochster},
                           {"hrk_double", r.hrk_double},
                           {"dihedral", r.dihedral},
                           {"ok", r.ok}});
    }
    if (!cfg.json_path.empty())
        io::write_text_file(cfg.json_path, doc.dump(2) + "\n");
    if (!cfg.quiet) {
        std::ostringstream out;
        out << std::left << std::setw(26) << "entry" << std::setw(4) << "m" << std::setw(5) << "dim" << std::setw(10)
            << "verdict" << std::setw(7) << "agree" << std::setw(9) << "hrk" << std::setw(10) << "chi(glue)"
            << std::setw(10) << "chi(H)" << std::setw(11) << "hrk(L)" << std::setw(10) << "dihedral"
            << "row\n";
        for (const Row& r : rows)
            out << std::setw(26) << r.name << std::setw(4) << r.m << std::setw(5) << r.dim << std::setw(10)
                << r.verdict << std::setw(7) << (r.agreement ? "yes" : "NO") << std::setw(9) << r.hrk
                << std::setw(10) << r.chi_gluing << std::setw(10) << r.chi_hochster << std::setw(11)
                << r.hrk_double << std::setw(10) << r.dihedral << (r.ok ? "ok" : "FAIL") << "\n";
        std::cout << out.str();
    }
    return all_ok ? kOk : kDisagreement;
}

void add_common(CLI::App* sub, Config& cfg, bool with_input = true)
{
    if (with_input) {
        sub->add_option("--in", cfg.in, "input JSON: complex, polytope, incidence or bundle");
        sub->add_option("--gen", cfg.gen, "generator spec, e.g. product:2,1 or truncate:simplex:3,0");
    }
    sub->add_option("--field", cfg.field, "gf2, q or both")->check(CLI::IsMember({"gf2", "q", "both"}));
    sub->add_option("--cap", cfg.cap, "largest vertex count for exponential sweeps (cost ~ 2^N)");
    sub->add_flag("--assert", cfg.assert_mode, "encode the verdict in the exit status");
    sub->add_option("--json", cfg.json_path, "write JSON here instead of stdout");
    sub->add_flag("--quiet", cfg.quiet, "suppress stdout");
}

} // namespace

int main(int argc, char** argv)
{
    Config cfg;
    CLI::App app{"Recognize simple polytopes that are products of simplices"};
    app.require_subcommand(1);

    add_common(app.add_subcommand("recognize", "run every criterion and report agreement"), cfg);
    add_common(app.add_subcommand("hrk", "Hochster total rank and cohomology ranks"), cfg);
    add_common(app.add_subcommand("betti", "bigraded Betti numbers"), cfg);
    add_common(app.add_subcommand("double", "the double and its real moment-angle rank"), cfg);
    add_common(app.add_subcommand("dihedral", "non-obtuse dihedral angle test"), cfg);
    add_common(app.add_subcommand("euler", "Euler characteristic: gluing count vs Hochster"), cfg);
    CLI::App* gen = app.add_subcommand("gen", "write generated polytope / incidence / complex JSON");
    add_common(gen, cfg);
    gen->add_option("spec", cfg.positional_spec, "generator spec");
    gen->add_option("--out-dir", cfg.out_dir, "write polytope.json, incidence.json, complex.json here");
    CLI::App* cross = app.add_subcommand("crosscheck", "every criterion over the built-in catalog");
    add_common(cross, cfg, false);
    cross->add_option("--family", cfg.family, "polygon, product, prism or truncation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kFailure;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        if (command == "recognize")
            return cmd_recognize(cfg);
        if (command == "hrk")
            return cmd_hrk(cfg);
        if (command == "betti")
            return cmd_betti(cfg);
        if (command == "double")
            return cmd_double(cfg);
        if (command == "gen")
            return cmd_gen(cfg);
        if (command == "dihedral")
            return cmd_dihedral(cfg);
        if (command == "euler")
            return cmd_euler(cfg);
        return cmd_crosscheck(cfg);
    } catch (const std::exception& e) {
        std::cerr << "prodsimp: " << e.what() << "\n";
    }
    return kFailure;
}
