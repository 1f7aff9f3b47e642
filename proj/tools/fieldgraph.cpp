// Command line front end: census, per-model reports, DOT export, spectra,
// the non-expander table and covering-space checks.
//
// Exit codes: 0 success, 1 computational check failed, 2 validation error,
// 3 size limit exceeded, 4 cache verification failure.

#include "fieldgraph/census.hpp"
#include "fieldgraph/field.hpp"
#include "fieldgraph/graph.hpp"
#include "fieldgraph/graph_algo.hpp"
#include "fieldgraph/report.hpp"
#include "fieldgraph/spectral.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using namespace fieldgraph;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file " + path);
    out << content;
}

int exit_code = 0;

void run_census(std::uint32_t p, std::uint32_t k, const std::string& mode,
                const std::string& format, const std::string& out_path,
                const CensusOptions& base_options) {
    CensusOptions options = base_options;
    options.mode = iso_mode_from_name(mode);
    if (format != "csv" && format != "md")
        throw CLI::ValidationError("--format", "expected csv or md");
    CensusResult result = classify(p, k, options);
    write_output(out_path, format == "csv" ? census_csv(result) : census_markdown(result));
    for (const CacheIssue& issue : result.cache_issues)
        std::cerr << "cache verification failed for key: " << issue.key << " (" << issue.detail
                  << ")\n";
    if (!result.cache_issues.empty()) exit_code = 4;
}

void run_report(std::uint32_t p, const std::string& poly_text, bool as_json) {
    Poly f = parse_poly(poly_text, p);
    ModelReport r = build_report(p, f);
    std::cout << (as_json ? report_json(r) : report_text(r));
}

void run_dot(std::uint32_t p, const std::string& poly_text, const std::string& variant_name,
             std::uint32_t gen_index, const std::string& out_path) {
    Variant variant;
    if (variant_name == "full") variant = Variant::full;
    else if (variant_name == "additive") variant = Variant::additive;
    else if (variant_name == "multiplicative") variant = Variant::multiplicative;
    else if (variant_name == "core") variant = Variant::core;
    else if (variant_name == "cover") variant = Variant::cover;
    else throw CLI::ValidationError("--variant",
                                    "expected full, additive, multiplicative, core or cover");
    write_output(out_path, export_dot(p, parse_poly(poly_text, p), variant, gen_index));
}

void run_spectrum(std::uint32_t p, const std::string& poly_text, const std::string& csv_path) {
    write_output(csv_path, spectrum_csv(p, parse_poly(poly_text, p)));
}

void run_expander(const std::vector<std::uint32_t>& primes) {
    std::printf("%6s %8s %14s %14s\n", "p", "n", "lambda_1", "8sin^2(pi/p)");
    for (const ExpanderRow& row : expander_report(primes)) {
        std::printf("%6u %8llu %14.9f %14.9f\n", row.p,
                    static_cast<unsigned long long>(row.n), row.lambda1, row.envelope);
    }
}

void run_cover(std::uint32_t p, const std::string& poly_text, bool check) {
    Poly f = parse_poly(poly_text, p);
    FieldModel model(p, f);
    FieldGraph cover = build_cover(model);
    FieldGraph base = build_digraph(model);
    bool connected = component_count(components(cover)) == 1;
    std::cout << "cover of " << model.modulus_text() << " over F_" << p << ": " << cover.n
              << " vertices, " << cover.edges.size() << " edges\n";
    std::cout << "connected: " << (connected ? "yes" : "no")
              << "   (x primitive: " << (model.is_primitive() ? "yes" : "no") << ")\n";
    if (!check) return;

    bool ok = true;
    auto proj = cover_projection(model);
    bool covering = verify_covering(cover, base, proj);
    std::cout << "projection is a covering map: " << (covering ? "yes" : "no") << "\n";
    ok = ok && covering;

    // Deck transformations: F_a respects the projection, permutes fibers and
    // composes like the multiplicative group.
    const std::uint64_t q = model.q();
    bool deck_ok = true;
    for (std::uint64_t a = 1; a < q && deck_ok; ++a) {
        auto perm = deck_transform(model, a);
        for (std::size_t v = 0; v < perm.size() && deck_ok; ++v)
            if (proj[perm[v]] != proj[v]) deck_ok = false;
    }
    std::cout << "deck maps preserve fibers: " << (deck_ok ? "yes" : "no") << "\n";
    ok = ok && deck_ok;

    bool comp_ok = true;
    for (std::uint64_t a = 1; a < std::min<std::uint64_t>(q, 16) && comp_ok; ++a) {
        auto fa = deck_transform(model, a);
        for (std::uint64_t b = 1; b < std::min<std::uint64_t>(q, 16) && comp_ok; ++b) {
            auto fb = deck_transform(model, b);
            auto fab = deck_transform(model, model.mul(a, b));
            for (std::size_t v = 0; v < fa.size(); ++v)
                if (fb[fa[v]] != fab[v]) {
                    comp_ok = false;
                    break;
                }
        }
    }
    std::cout << "deck maps compose multiplicatively: " << (comp_ok ? "yes" : "no") << "\n";
    ok = ok && comp_ok;

    bool match = connected == model.is_primitive();
    std::cout << "connectivity matches primitivity: " << (match ? "yes" : "no") << "\n";
    ok = ok && match;
    if (!ok) exit_code = 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graphs built from finite field presentations F_p[x]/(f)"};
    app.require_subcommand(1);

    // census
    auto* census_cmd = app.add_subcommand("census", "classify all models for fixed p, k");
    std::uint32_t c_p = 0, c_k = 0;
    std::string c_mode = "default", c_format = "csv", c_out, c_cache;
    CensusOptions c_options;
    census_cmd->add_option("--p", c_p, "prime p")->required();
    census_cmd->add_option("--k", c_k, "degree k")->required();
    census_cmd->add_option("--mode", c_mode, "isomorphism mode: default, strict or simple");
    census_cmd->add_option("--format", c_format, "output format: csv or md");
    census_cmd->add_option("--out", c_out, "output file (default: stdout)");
    census_cmd->add_option("--cache", c_cache,
                           "cache directory (default: $FIELDGRAPH_CACHE if set)");
    census_cmd->add_flag("--verify-cache", c_options.verify_cache,
                         "recompute cache hits and flag mismatches");
    census_cmd->add_option("--limit", c_options.limit, "maximum p^k (default 700)");
    census_cmd->add_option("--jobs", c_options.jobs, "worker threads (default: all cores)");
    census_cmd->callback([&] {
        c_options.cache_dir = c_cache;
        run_census(c_p, c_k, c_mode, c_format, c_out, c_options);
    });

    // report
    auto* report_cmd = app.add_subcommand("report", "analyze a single model");
    std::uint32_t r_p = 0;
    std::string r_poly;
    bool r_json = false;
    report_cmd->add_option("--p", r_p, "prime p")->required();
    report_cmd->add_option("--f", r_poly, "monic irreducible polynomial")->required();
    report_cmd->add_flag("--json", r_json, "emit JSON");
    report_cmd->callback([&] { run_report(r_p, r_poly, r_json); });

    // dot
    auto* dot_cmd = app.add_subcommand("dot", "export a graph variant as Graphviz");
    std::uint32_t d_p = 0, d_gen = 0;
    std::string d_poly, d_variant = "full", d_out;
    dot_cmd->add_option("--p", d_p, "prime p")->required();
    dot_cmd->add_option("--f", d_poly, "monic irreducible polynomial")->required();
    dot_cmd->add_option("--variant", d_variant,
                        "full, additive, multiplicative, core or cover");
    dot_cmd->add_option("--gen", d_gen, "generator index for the core variant");
    dot_cmd->add_option("--out", d_out, "output file (default: stdout)");
    dot_cmd->callback([&] { run_dot(d_p, d_poly, d_variant, d_gen, d_out); });

    // spectrum
    auto* spec_cmd = app.add_subcommand("spectrum", "Laplacian spectrum of the full graph");
    std::uint32_t s_p = 0;
    std::string s_poly, s_csv;
    spec_cmd->add_option("--p", s_p, "prime p")->required();
    spec_cmd->add_option("--f", s_poly, "monic irreducible polynomial")->required();
    spec_cmd->add_option("--csv", s_csv, "CSV output file (default: stdout)");
    spec_cmd->callback([&] { run_spectrum(s_p, s_poly, s_csv); });

    // expander
    auto* exp_cmd = app.add_subcommand("expander", "lambda_1 of the x^2+1 family");
    std::vector<std::uint32_t> e_primes{3, 7, 11, 19, 23};
    exp_cmd->add_option("--primes", e_primes, "primes = 3 mod 4")->delimiter(',');
    exp_cmd->callback([&] { run_expander(e_primes); });

    // cover
    auto* cover_cmd = app.add_subcommand("cover", "build and check the covering graph");
    std::uint32_t v_p = 0;
    std::string v_poly;
    bool v_check = false;
    cover_cmd->add_option("--p", v_p, "prime p")->required();
    cover_cmd->add_option("--f", v_poly, "monic irreducible polynomial")->required();
    cover_cmd->add_flag("--check", v_check, "verify covering and deck transformation laws");
    cover_cmd->callback([&] { run_cover(v_p, v_poly, v_check); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const LimitExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
