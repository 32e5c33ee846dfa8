// Acceptance run: one [PASS]/[FAIL] line per criterion, exit status 1 if
// any criterion fails. All comparisons are exact integer equalities; the
// only tolerances are the wall-clock limits on AC1 (60 s) and AC2 (5 s).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <prodsimp/prodsimp.hpp>

#include "generators.hpp"
#include "oracles.hpp"

using namespace prodsimp;

namespace {

constexpr double kAc1Seconds = 60.0;
constexpr double kAc2Seconds = 5.0;

struct Outcome {
    bool pass = true;
    std::vector<std::string> failures;
    std::string summary;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            failures.push_back(what);
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ConsolidatedReport run_all(const SimplicialComplex& k)
{
    RecognizeOptions o;
    o.skip_over_cap = false;
    return recognize_all(k, {Field::GF2, Field::Rational}, o);
}

const CatalogEntry& entry(const std::vector<CatalogEntry>& catalog, const std::string& name)
{
    for (const auto& e : catalog)
        if (e.name == name)
            return e;
    throw std::runtime_error("catalog has no entry " + name);
}

std::string join_ints(const std::vector<std::int64_t>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

Outcome ac1(const std::vector<CatalogEntry>&)
{
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    const auto parts = partitions_up_to(5);
    out.require(parts.size() == 18, "expected 18 partitions with sum <= 5, got " + std::to_string(parts.size()));
    for (const auto& dims : parts) {
        const CatalogEntry e = product_entry(dims);
        const auto r = run_all(e.complex);
        out.require(r.agreement, e.name + ": criteria disagree");
        for (const auto& x : r.reports)
            out.require(x.verdict && !x.skipped, e.name + ": " + std::string(to_string(x.criterion)) + " not true");
        std::vector<int> sizes, expect;
        if (r.decomposition)
            for (Simplex p : r.decomposition->parts)
                sizes.push_back(p.size());
        for (int n : dims)
            expect.push_back(n + 1);
        std::sort(sizes.begin(), sizes.end());
        std::sort(expect.begin(), expect.end());
        out.require(sizes == expect, e.name + ": decomposition part sizes differ from n_i + 1");
        const std::int64_t q = static_cast<std::int64_t>(dims.size());
        for (Field f : {Field::GF2, Field::Rational})
            out.require(hochster_total_rank(e.complex, f) == (std::int64_t{1} << q),
                        e.name + ": Hochster total is not 2^q");
    }
    const double t = seconds_since(t0);
    out.require(t < kAc1Seconds, "took " + std::to_string(t) + " s");
    std::ostringstream s;
    s << parts.size() << " partitions, " << std::fixed << std::setprecision(3) << t << " s (limit " << kAc1Seconds << " s)";
    out.summary = s.str();
    return out;
}

Outcome ac2(const std::vector<CatalogEntry>&)
{
    Outcome out;
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<std::int64_t> expect{2, 4, 12, 36, 100, 260};
    std::vector<std::int64_t> got;
    for (int k = 3; k <= 8; ++k)
        got.push_back(hochster_total_rank(dual_boundary_complex(incidence(gen_polygon(k))), Field::GF2));
    const double t = seconds_since(t0);
    out.require(got == expect, "k-gon totals " + join_ints(got));
    out.require(t < kAc2Seconds, "took " + std::to_string(t) + " s");
    std::ostringstream s;
    s << "k=3..8 -> " << join_ints(got) << ", " << std::fixed << std::setprecision(3) << t << " s (limit " << kAc2Seconds << " s)";
    out.summary = s.str();
    return out;
}

Outcome ac3(const std::vector<CatalogEntry>& catalog)
{
    Outcome out;
    int checked = 0;
    for (const auto& e : catalog) {
        if (e.complex.num_vertices() > 10)
            continue;
        ++checked;
        const std::int64_t gluing = euler_char_gluing(e.incidence);
        const std::int64_t hochster = hochster_sweep(e.complex, Field::GF2).euler_characteristic();
        out.require(gluing == hochster,
                    e.name + ": gluing " + std::to_string(gluing) + " vs Hochster " + std::to_string(hochster));
    }
    const std::int64_t pent = euler_char_gluing(entry(catalog, "polygon:5").incidence);
    out.require(pent == -8, "pentagon gives " + std::to_string(pent));
    out.summary = std::to_string(checked) + " entries with m <= 10, pentagon chi = " + std::to_string(pent);
    return out;
}

Outcome ac4(const std::vector<CatalogEntry>& catalog)
{
    Outcome out;
    int checked = 0;
    for (const auto& e : catalog) {
        const SimplicialComplex& k = e.complex;
        if (k.num_vertices() > 6)
            continue;
        ++checked;
        for (Field f : {Field::GF2, Field::Rational})
            out.require(hrk_Z_via_double(k, f) == hochster_total_rank(k, f), e.name + ": double rank differs");
        const auto l = double_complex(k);
        out.require(l.dimension() == k.num_vertices() + k.dimension(), e.name + ": dim L(K) != m + dim K");
    }
    for (int n = 1; n <= 4; ++n) {
        const auto l = double_complex(boundary_of_simplex(n));
        out.require(is_boundary_of_simplex(l) && l.num_vertices() == 2 * n + 2,
                    "L(boundary of simplex " + std::to_string(n) + ") is not a simplex boundary of dim " +
                        std::to_string(2 * n));
    }
    out.summary = std::to_string(checked) + " entries with m <= 6; simplex boundaries k = 1..4";
    return out;
}

/// The TwoFace witness as a codim-2 link cycle length; 0 if it is not one.
int two_face_cycle(const SimplicialComplex& k, const RecognitionReport& r)
{
    if (!r.witness)
        return 0;
    if (const auto* w = std::get_if<witness::LongLink>(&*r.witness)) {
        if (!k.contains(w->eta) || w->eta.size() != k.dimension() - 1)
            return 0;
        return cycle_length(link(k, w->eta));
    }
    if (const auto* w = std::get_if<witness::BadBaseCase>(&*r.witness))
        return w->dimension == 1 ? cycle_length(k) : 0;  // the link of the empty face is K
    return 0;
}

Outcome ac5(const std::vector<CatalogEntry>& catalog)
{
    Outcome out;
    const std::vector<std::string> names{"polygon:5", "prism:5", "prism:6", "prism:7", "truncate:product:1,1,1,0",
                                         "truncate:simplex:3,0"};
    int ok = 0;
    for (const auto& name : names) {
        const auto& e = entry(catalog, name);
        const auto r = run_all(e.complex);
        bool all_false = true;
        for (const auto& x : r.reports)
            all_false = all_false && !x.verdict && !x.skipped;
        const RecognitionReport* tf = r.find(Criterion::TwoFace);
        const int len = tf ? two_face_cycle(e.complex, *tf) : 0;
        const bool entry_ok = all_false && r.agreement && len >= 5;
        ok += entry_ok ? 1 : 0;
        if (!entry_ok) {
            std::string why = name + ": ";
            if (!all_false)
                why += "criteria return true";
            if (r.agreement && r.positive()) {
                const auto type = oracle::sphere_join_type(e.complex);
                why += " (unanimously; isomorphism oracle finds a join of type";
                for (int n : type)
                    why += " " + std::to_string(n);
                why += ")";
            }
            if (len < 5)
                why += "; no TwoFace long-link witness";
            out.require(false, why);
        }
    }
    out.summary = std::to_string(ok) + "/" + std::to_string(names.size()) + " negative entries confirmed";
    return out;
}

Outcome ac6(const std::vector<CatalogEntry>& catalog)
{
    Outcome out;
    int equalities = 0;
    for (const auto& e : catalog) {
        const auto u = ustinovsky_bound_check(e.complex, Field::GF2);
        out.require(u.global_holds(), e.name + ": global bound fails");
        for (const auto& l : u.links)
            out.require(l.holds(), e.name + ": link bound fails at vertex " + std::to_string(l.vertex));
        const bool join = !oracle::sphere_join_type(e.complex).empty();
        const bool equal = u.rank == u.bound;
        equalities += equal ? 1 : 0;
        out.require(equal == join, e.name + (equal ? ": equality on a non-join" : ": strict on a sphere join"));
    }
    out.summary = std::to_string(catalog.size()) + " entries, equality on " + std::to_string(equalities) +
                  " (exactly the sphere joins)";
    return out;
}

Outcome ac7(const std::vector<CatalogEntry>& catalog)
{
    Outcome out;
    int products = 0;
    for (const auto& dims : partitions_up_to(5)) {
        const Polytope p = gen_product_of_simplices(dims);
        out.require(dihedral_nonobtuse_check(p.h, incidence(p)).verdict, product_name(dims) + " fails");
        ++products;
    }
    const Polytope cube = gen_product_of_simplices({1, 1, 1});
    out.require(dihedral_nonobtuse_check(cube.h, incidence(cube)).verdict, "cube fails");

    for (const char* name : {"polygon:5", "prism:5"}) {
        const auto& e = entry(catalog, name);
        const auto r = dihedral_nonobtuse_check(e.geometry->h, e.incidence);
        bool witnessed = false;
        if (!r.verdict && r.witness)
            if (const auto* w = std::get_if<witness::ObtusePair>(&*r.witness)) {
                const auto& ineqs = e.geometry->h.inequalities;
                const Rational d = dot(ineqs[w->facet_a].normal, ineqs[w->facet_b].normal);
                const bool adjacent = e.complex.contains(Simplex{w->facet_a, w->facet_b});
                witnessed = d > 0 && d == w->inner_product && adjacent;
            }
        out.require(witnessed, std::string(name) + ": no exact positive inner-product witness");
    }

    int passing = 0;
    for (const auto& e : catalog) {
        if (!e.geometry)
            continue;
        if (dihedral_nonobtuse_check(e.geometry->h, e.incidence).verdict) {
            ++passing;
            const auto r = run_all(e.complex);
            out.require(r.agreement && r.positive(), e.name + ": non-obtuse but not recognized");
        }
    }
    out.summary = std::to_string(products) + " products + cube pass; pentagon and pentagon prism witnessed; " +
                  std::to_string(passing) + " passing H-reps all recognized";
    return out;
}

std::vector<Simplex> shifted(const std::vector<Simplex>& v, int by)
{
    std::vector<Simplex> out;
    for (Simplex s : v)
        out.emplace_back(s.mask() << by);
    return out;
}

std::vector<std::uint64_t> sorted_masks(std::vector<Simplex> v)
{
    std::vector<std::uint64_t> out;
    for (Simplex s : v)
        out.push_back(s.mask());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<bool> verdicts(const SimplicialComplex& k)
{
    std::vector<bool> out;
    for (const auto& r : run_all(k).reports)
        out.push_back(r.verdict);
    return out;
}

Outcome ac8(const std::vector<CatalogEntry>& catalog)
{
    Outcome out;
    int cases = 0;
    auto check = [&](const std::string& tag, const SimplicialComplex& k, const SimplicialComplex& partner,
                     const std::vector<bool>& base_verdicts, std::int64_t base_total) {
        ++cases;
        const auto mnf = minimal_non_faces(k);
        const auto kk = join(k, partner);
        std::vector<Simplex> expect = mnf;
        const auto pm = shifted(minimal_non_faces(partner), k.ambient_size());
        expect.insert(expect.end(), pm.begin(), pm.end());
        out.require(sorted_masks(minimal_non_faces(kk)) == sorted_masks(expect), tag + ": join factorization");
        if (kk.num_vertices() <= 20)
            out.require(hochster_total_rank(kk, Field::GF2) ==
                            hochster_total_rank(k, Field::GF2) * hochster_total_rank(partner, Field::GF2),
                        tag + ": Kunneth");
        out.require(complex_from_non_faces(k.ambient_size(), k.vertex_set(), mnf) == k, tag + ": reconstruction");
        out.require(verdicts(k) == base_verdicts, tag + ": verdicts change under relabeling");
        out.require(bigraded_betti(k, Field::GF2).total() == base_total, tag + ": bigraded total");
    };

    std::vector<std::vector<bool>> base_verdicts;
    std::vector<std::int64_t> base_totals;
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        const auto& k = catalog[i].complex;
        base_verdicts.push_back(verdicts(k));
        base_totals.push_back(hochster_total_rank(k, Field::GF2));
        const auto& partner = catalog[(i + 1) % catalog.size()].complex;
        check(catalog[i].name, k, partner, base_verdicts.back(), base_totals.back());
    }
    gen::Rng rng(20260101);
    for (int t = 0; t < 100; ++t) {
        const std::size_t i = static_cast<std::size_t>(t) % catalog.size();
        const auto k = gen::shuffled(rng, catalog[i].complex);
        const auto partner = gen::shuffled(rng, catalog[(i + 7) % catalog.size()].complex);
        check(catalog[i].name + " relabeling " + std::to_string(t), k, partner, base_verdicts[i], base_totals[i]);
    }
    out.summary = std::to_string(cases) + " cases (" + std::to_string(catalog.size()) +
                  " catalog + 100 relabelings), " + std::to_string(out.failures.size()) + " failures";
    return out;
}

} // namespace

int main()
{
    const auto catalog = default_catalog();
    const std::vector<std::pair<std::string, std::function<Outcome(const std::vector<CatalogEntry>&)>>> criteria{
        {"AC1 product recognition sweep", ac1}, {"AC2 k-gon Hochster table", ac2},
        {"AC3 Euler characteristic oracle", ac3}, {"AC4 double consistency", ac4},
        {"AC5 negative suite with witnesses", ac5}, {"AC6 hrk lower bounds", ac6},
        {"AC7 dihedral geometry", ac7}, {"AC8 property suite", ac8}};
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn(catalog);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << ": " << o.summary << "\n";
        for (const auto& f : o.failures)
            std::cout << "       - " << f << "\n";
        failed += o.pass ? 0 : 1;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " acceptance criteria pass\n";
    return failed == 0 ? 0 : 1;
}
