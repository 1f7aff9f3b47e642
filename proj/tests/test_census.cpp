#include "fieldgraph/census.hpp"
#include "fieldgraph/report.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

using namespace fieldgraph;
namespace fs = std::filesystem;

namespace {

std::size_t count_substr(const std::string& haystack, const std::string& needle) {
    std::size_t count = 0, pos = 0;
    while ((pos = haystack.find(needle, pos)) != std::string::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

struct TempDir {
    fs::path path;
    explicit TempDir(const char* name) : path(fs::temp_directory_path() / name) {
        fs::remove_all(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string str() const { return path.string(); }
};

std::vector<BigInt> orders(const CensusResult& r) {
    std::vector<BigInt> out;
    for (const CensusRow& row : r.rows) out.push_back(row.aut_order);
    return out;
}

std::vector<std::uint32_t> class_ids(const CensusResult& r) {
    std::vector<std::uint32_t> out;
    for (const CensusRow& row : r.rows) out.push_back(row.class_id);
    return out;
}

} // namespace

TEST_CASE("census of the quadratic extensions of F_3") {
    CensusResult r = classify(3, 2);
    REQUIRE(r.rows.size() == 3);
    CHECK(r.rows[0].polynomial == "x^2 + 1");
    CHECK(r.rows[1].polynomial == "x^2 + x + 2");
    CHECK(r.rows[2].polynomial == "x^2 + 2*x + 2");
    CHECK(class_ids(r) == std::vector<std::uint32_t>{0, 1, 1});
    CHECK(orders(r) == std::vector<BigInt>{8, 8, 8});
    CHECK_FALSE(r.rows[0].primitive);
    CHECK_FALSE(r.rows[0].normal);
    CHECK(r.rows[1].primitive);
    CHECK(r.rows[1].normal);
    CHECK(r.rows[0].reciprocal_partner == "x^2 + 1"); // self-reciprocal
    CHECK(r.rows[1].reciprocal_partner == "x^2 + 2*x + 2");
    CHECK(r.rows[2].reciprocal_partner == "x^2 + x + 2");
    CHECK(r.cache_issues.empty());

    CHECK(census_csv(r) ==
          "p,k,polynomial,class_id,aut_order,primitive,normal,reciprocal_partner\n"
          "3,2,x^2 + 1,0,8,false,false,x^2 + 1\n"
          "3,2,x^2 + x + 2,1,8,true,true,x^2 + 2*x + 2\n"
          "3,2,x^2 + 2*x + 2,1,8,true,true,x^2 + x + 2\n");

    CHECK(census_markdown(r) ==
          "## F_3^2 (mode: default)\n"
          "\n"
          "| class | polynomials | aut_order | primitive | normal |\n"
          "|---|---|---|---|---|\n"
          "| 0 | x^2 + 1 | 8 | no | no |\n"
          "| 1 | x^2 + x + 2, x^2 + 2*x + 2 | 8 | yes | yes |\n");
}

TEST_CASE("census of the quintic extensions of F_2") {
    // six pairwise non-isomorphic graphs, each with the bare Frobenius group
    CensusResult r = classify(2, 5);
    REQUIRE(r.rows.size() == 6);
    CHECK(class_ids(r) == std::vector<std::uint32_t>{0, 1, 2, 3, 4, 5});
    CHECK(orders(r) == std::vector<BigInt>{5, 5, 5, 5, 5, 5});
    // reciprocal pairs exist but are not isomorphic here
    CHECK(r.rows[0].polynomial == "x^5 + x^2 + 1");
    CHECK(r.rows[0].reciprocal_partner == "x^5 + x^3 + 1");
    CHECK(r.rows[1].polynomial == "x^5 + x^3 + 1");
    for (const CensusRow& row : r.rows) CHECK(row.primitive); // 2^5 - 1 is prime
}

TEST_CASE("census of the quadratic extensions of F_5") {
    CensusResult r = classify(5, 2);
    REQUIRE(r.rows.size() == 10);
    CHECK(class_ids(r) == std::vector<std::uint32_t>{0, 0, 2, 3, 4, 5, 3, 5, 8, 4});
    CHECK(orders(r) == std::vector<BigInt>{16, 16, 4, 4, 4, 4, 4, 4, 4, 4});
}

TEST_CASE("census options") {
    CHECK_THROWS_AS(classify(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(classify(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(classify(3, 6), LimitExceededError); // 729 > default 700
    CensusOptions tight;
    tight.limit = 31;
    CHECK_THROWS_AS(classify(2, 5, tight), LimitExceededError);
    tight.limit = 32;
    CHECK(classify(2, 5, tight).rows.size() == 6);

    // worker count must not affect the result
    CensusOptions two_jobs;
    two_jobs.jobs = 2;
    CensusResult a = classify(3, 3, two_jobs);
    CensusResult b = classify(3, 3);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].polynomial == b.rows[i].polynomial);
        CHECK(a.rows[i].class_id == b.rows[i].class_id);
        CHECK(a.rows[i].aut_order == b.rows[i].aut_order);
    }
}

TEST_CASE("markdown flags can disagree within a class") {
    CensusResult r;
    r.p = 3;
    r.k = 2;
    r.rows = {
        {"a", 0, 4, true, false, "a"},
        {"b", 0, 4, false, false, "b"},
    };
    std::string md = census_markdown(r);
    CHECK(count_substr(md, "mixed") == 1);
    CHECK(count_substr(md, "| a, b |") == 1);
}

TEST_CASE("cache round trip") {
    TempDir dir("fieldgraph-cache-roundtrip");
    CacheEntry entry;
    entry.aut_order = BigInt("123456789012345678901234567890");
    entry.form.bytes = {0x00, 0xff, 0x10, 0x57};
    std::string key = cache_key(3, 2, "x^2 + 1", IsoMode::standard);
    CHECK(cache_key(3, 2, "x^2 + 1", IsoMode::strict) != key);
    std::string path = cache_path(dir.str(), key);
    CHECK(path.ends_with(".entry"));

    CacheEntry loaded;
    CHECK_FALSE(cache_load(dir.str(), key, loaded)); // cold
    cache_store(dir.str(), key, entry);
    REQUIRE(cache_load(dir.str(), key, loaded));
    CHECK(loaded.aut_order == entry.aut_order);
    CHECK(loaded.form == entry.form);

    // a different key hashing to a different file is simply absent
    CHECK_FALSE(cache_load(dir.str(), cache_key(3, 2, "x^2 + x + 2", IsoMode::standard), loaded));
}

TEST_CASE("census cache behavior") {
    TempDir dir("fieldgraph-cache-census");
    CensusOptions opt;
    opt.cache_dir = dir.str();

    CensusResult cold = classify(3, 2, opt);
    CHECK(cold.cache_issues.empty());
    std::size_t files = 0;
    for (const auto& e : fs::directory_iterator(dir.path)) files += e.is_regular_file();
    CHECK(files == 3);

    // poison one entry with a wrong order but valid format: an unverified
    // run must trust it, which proves the cache was actually consulted
    std::string key = cache_key(3, 2, "x^2 + 1", IsoMode::standard);
    CacheEntry poisoned;
    REQUIRE(cache_load(dir.str(), key, poisoned));
    poisoned.aut_order = 999;
    cache_store(dir.str(), key, poisoned);

    CensusResult warm = classify(3, 2, opt);
    CHECK(warm.rows[0].aut_order == 999);
    CHECK(warm.cache_issues.empty());

    // verification recomputes, reports the lie, and leaves the file alone
    CensusOptions verify = opt;
    verify.verify_cache = true;
    CensusResult checked = classify(3, 2, verify);
    CHECK(checked.rows[0].aut_order == 8);
    REQUIRE(checked.cache_issues.size() == 1);
    CHECK(checked.cache_issues[0].key == key);
    CacheEntry still;
    REQUIRE(cache_load(dir.str(), key, still));
    CHECK(still.aut_order == 999);

    // garbage is a miss: recomputed and replaced by a good entry
    {
        std::ofstream out(cache_path(dir.str(), key), std::ios::trunc);
        out << "not a cache file\n";
    }
    CensusResult fixed = classify(3, 2, opt);
    CHECK(fixed.rows[0].aut_order == 8);
    CHECK(fixed.cache_issues.empty());
    REQUIRE(cache_load(dir.str(), key, still));
    CHECK(still.aut_order == 8);
}

TEST_CASE("cache directory from the environment") {
    TempDir dir("fieldgraph-cache-env");
    ::setenv("FIELDGRAPH_CACHE", dir.str().c_str(), 1);
    classify(3, 2);
    ::unsetenv("FIELDGRAPH_CACHE");
    std::size_t files = 0;
    for (const auto& e : fs::directory_iterator(dir.path)) files += e.is_regular_file();
    CHECK(files == 3);
}

TEST_CASE("model report") {
    ModelReport r = build_report(3, parse_poly("x^2 + x + 2", 3));
    CHECK(r.p == 3);
    CHECK(r.k == 2);
    CHECK(r.n == 9);
    CHECK(r.polynomial == "x^2 + x + 2");
    CHECK(r.additive_edges == 18);
    CHECK(r.multiplicative_edges == 16);
    CHECK(r.graph.diameter == 2);
    CHECK(r.graph.directed_diameter == 3);
    CHECK(r.graph.girth == 2);
    CHECK(r.flags.primitive);
    CHECK(r.flags.normal);
    REQUIRE(r.flags.cover_connected.has_value());
    CHECK(*r.flags.cover_connected);
    CHECK(r.aut_order == "8");
    CHECK(r.reciprocal_partner == "x^2 + 2*x + 2");
    CHECK(r.isomorphic_to_partner);
    CHECK(r.spectral.general_holds);
    CHECK(r.spectral.sharper_holds);
    CHECK(r.spectral.diameter_holds);
    CHECK(r.spectral.normal_holds);

    // the cover flag is dropped when the cover would be too large
    ModelReport small = build_report(3, parse_poly("x^2 + x + 2", 3), 8);
    CHECK_FALSE(small.flags.cover_connected.has_value());

    std::string text = report_text(r);
    CHECK(count_substr(text, "diameter: 2 (bound 22)") == 1);
    CHECK(count_substr(text, "girth: 2") == 1);
    CHECK(count_substr(text, "|Aut|: 8") == 1);
    CHECK(count_substr(text, "isomorphic: yes") == 1);

    nlohmann::json j = nlohmann::json::parse(report_json(r));
    CHECK(j["p"] == 3);
    CHECK(j["n"] == 9);
    CHECK(j["edges"]["additive"] == 18);
    CHECK(j["diameter"] == 2);
    CHECK(j["girth"] == 2);
    CHECK(j["aut_order"] == "8");
    CHECK(j["isomorphic_to_partner"] == true);
    CHECK(j["lambda1_bounds_hold"] == true);
    CHECK(j["cover_connected"] == true);
}

TEST_CASE("spectrum csv") {
    std::string csv = spectrum_csv(3, parse_poly("x^2 + x + 2", 3));
    CHECK(csv.rfind("index,eigenvalue\n", 0) == 0);
    CHECK(count_substr(csv, "\n") == 10); // header + 9 eigenvalues
    // first data line is the (numerically) zero eigenvalue
    std::size_t start = csv.find('\n') + 1;
    std::string first = csv.substr(start, csv.find('\n', start) - start);
    REQUIRE(first.rfind("0,", 0) == 0);
    CHECK(std::abs(std::stod(first.substr(2))) < 1e-9);
}

TEST_CASE("dot export") {
    Poly f = parse_poly("x^2 + x + 1", 2);
    std::string dot = export_dot(2, f, Variant::full);
    CHECK(dot == export_dot(2, f, Variant::full)); // byte-stable
    CHECK(dot.rfind("graph \"x^2 + x + 1 over F_2\" {", 0) == 0);
    CHECK(count_substr(dot, "layout=neato") == 1);
    CHECK(count_substr(dot, " -- ") == 14);
    CHECK(count_substr(dot, "label=") == 4);
    CHECK(count_substr(dot, "#e06f00") == 4); // first additive generator color

    std::string mul = export_dot(2, parse_poly("x^3 + x + 1", 2), Variant::multiplicative);
    CHECK(count_substr(mul, " -- ") == 21);
    CHECK(count_substr(mul, "label=") == 7);
    CHECK(count_substr(mul, "#e06f00") == 0); // no additive edges

    std::string cover = export_dot(2, f, Variant::cover);
    CHECK(count_substr(cover, " -- ") == 42);
    CHECK(count_substr(cover, "label=\"(") == 12);

    std::string core = export_dot(2, parse_poly("x^3 + x + 1", 2), Variant::core, 1);
    CHECK(count_substr(core, " -- ") == 15); // q additive + q-1 multiplicative
}
