#include "fieldgraph/spectral.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace fieldgraph;

namespace {

constexpr double kPi = std::numbers::pi;

FieldGraph undirected_full(std::uint32_t p, const char* f) {
    return to_undirected(build_digraph(FieldModel(p, parse_poly(f, p))));
}

} // namespace

TEST_CASE("laplacian entries") {
    // f = x^2 + 1 over F_7: weighted degree 8 away from 0, 4 at 0.  S and
    // x^-1 S are both {x, -x}, so each adjacency doubles; where a pair is
    // additive and multiplicative at once (the girth witness) it reaches 4.
    FieldGraph g = undirected_full(7, "x^2 + 1");
    Eigen::MatrixXd L = laplacian(g);
    REQUIRE(L.rows() == 49);
    CHECK(L(0, 0) == doctest::Approx(4.0));
    for (int v = 1; v < 49; ++v) CHECK(L(v, v) == doctest::Approx(8.0));
    int quadruple = 0;
    for (int i = 0; i < 49; ++i) {
        CHECK(L.row(i).sum() == doctest::Approx(0.0));
        for (int j = 0; j < 49; ++j) {
            if (i == j) continue;
            double off = L(i, j);
            CHECK((off == 0.0 || off == -2.0 || off == -4.0));
            CHECK(off == L(j, i));
            quadruple += off == -4.0;
        }
    }
    CHECK(quadruple > 0);

    CHECK_THROWS_AS(laplacian(build_digraph(FieldModel(7, parse_poly("x^2 + 1", 7)))),
                    std::invalid_argument);

    // loops must not contribute: x - 1 over F_5 puts every multiplicative
    // edge on the diagonal, so only the additive 5-cycle remains
    FieldGraph loops = undirected_full(5, "x + 4");
    Eigen::MatrixXd Ll = laplacian(loops);
    for (int v = 0; v < 5; ++v) {
        CHECK(Ll.row(v).sum() == doctest::Approx(0.0));
        CHECK(Ll(v, v) == doctest::Approx(2.0));
    }
}

TEST_CASE("spectra of known graphs") {
    // doubled K_4: Laplacian eigenvalues are 2n sin-free: {0, 8, 8, 8}
    FieldModel m(2, parse_poly("x^3 + x + 1", 2));
    FieldGraph add = to_undirected(build_subgraph(m, Variant::additive));
    auto evs = spectrum_of(laplacian(add));
    REQUIRE(evs.size() == 8);
    // two components of a doubled K_4 each: eigenvalue 0 twice, 8 six times
    CHECK(evs[0] == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(evs[1] == doctest::Approx(0.0).epsilon(1e-9));
    for (int i = 2; i < 8; ++i) CHECK(evs[i] == doctest::Approx(8.0));

    // additive 5-cycle: eigenvalues 2 - 2 cos(2 pi j / 5)
    FieldGraph c5 = to_undirected(build_subgraph(FieldModel(5, parse_poly("x + 2", 5)),
                                                 Variant::additive));
    auto cev = spectrum_of(laplacian(c5));
    std::vector<double> expect;
    for (int j = 0; j < 5; ++j) expect.push_back(2 - 2 * std::cos(2 * kPi * j / 5));
    std::sort(expect.begin(), expect.end());
    for (int j = 0; j < 5; ++j) CHECK(cev[j] == doctest::Approx(expect[j]));

    // zero eigenvalue multiplicity counts components
    auto comp = components(add);
    std::size_t zeros = 0;
    for (double ev : evs) zeros += std::abs(ev) < 1e-9;
    CHECK(zeros == component_count(comp));

    Eigen::MatrixXd asym = Eigen::MatrixXd::Zero(2, 2);
    asym(0, 1) = 1.0;
    CHECK_THROWS_AS(spectrum_of(asym), std::invalid_argument);
}

TEST_CASE("spectral gap") {
    // the (2,2) full graph is small enough to diagonalize by hand: its
    // Laplacian spectrum is {0, 9 - sqrt(17), 10, 9 + sqrt(17)}
    CHECK(lambda1(undirected_full(2, "x^2 + x + 1")) ==
          doctest::Approx(9.0 - std::sqrt(17.0)));
    auto evs = spectrum_of(laplacian(undirected_full(2, "x^2 + x + 1")));
    REQUIRE(evs.size() == 4);
    CHECK(evs[0] == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(evs[2] == doctest::Approx(10.0));
    CHECK(evs[3] == doctest::Approx(9.0 + std::sqrt(17.0)));

    FieldModel bad(2, parse_poly("x^3 + x + 1", 2));
    CHECK_THROWS_AS(lambda1(to_undirected(build_subgraph(bad, Variant::additive))),
                    DisconnectedError);
}

TEST_CASE("explicit eigenfunction") {
    for (std::uint32_t p : {3u, 7u, 11u, 19u}) {
        for (std::uint32_t l = 1; l < p; ++l) {
            EigenfunctionCheck c = verify_explicit_eigenfunction(p, l);
            CHECK(c.residual <= 1e-9);
            CHECK_FALSE(c.vanished);
            CHECK(c.eigenvalue ==
                  doctest::Approx(8 * std::pow(std::sin(kPi * l / p), 2)));
            // l and p - l give the same eigenvalue
            CHECK(verify_explicit_eigenfunction(p, p - l).eigenvalue ==
                  doctest::Approx(c.eigenvalue));
        }
    }
    // the eigenvalue really sits in the spectrum
    auto evs = spectrum_of(laplacian(undirected_full(7, "x^2 + 1")));
    for (std::uint32_t l = 1; l < 7; ++l) {
        double target = verify_explicit_eigenfunction(7, l).eigenvalue;
        bool found = false;
        for (double ev : evs) found = found || std::abs(ev - target) < 1e-6;
        CHECK(found);
    }

    CHECK_THROWS_AS(verify_explicit_eigenfunction(5, 1), std::invalid_argument);  // 1 mod 4
    CHECK_THROWS_AS(verify_explicit_eigenfunction(13, 1), std::invalid_argument); // 1 mod 4
    CHECK_THROWS_AS(verify_explicit_eigenfunction(7, 0), std::invalid_argument);
    CHECK_THROWS_AS(verify_explicit_eigenfunction(7, 7), std::invalid_argument);
}

TEST_CASE("lower bounds") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        for (std::uint32_t k = 1; k <= 2; ++k) {
            for (const Poly& f : enumerate_irreducibles(p, k)) {
                if (f.coeff(0) == 0) continue;
                FieldModel m(p, f);
                LowerBoundsReport r = check_lower_bounds(m);
                CHECK(r.general_holds);
                CHECK(r.sharper_holds);
                CHECK(r.diameter_holds);
                CHECK(r.normal_holds);
                CHECK(r.lambda1 > 0);
                CHECK(r.normal == m.is_normal());

                double q = std::pow(double(p), double(k));
                CHECK(r.bound_general == doctest::Approx(1.0 / (q * p * (2 * k + 1))));
                CHECK(r.bound_sharper == doctest::Approx(1.0 / (p * (2 * k + 1) * (q - 1))));
                if (q > 2)
                    CHECK(r.bound_sharper >= r.bound_general); // sharper indeed
                CHECK(r.bound_diameter == doctest::Approx(2.0 / (r.diameter * (q - 1))));
                if (r.normal)
                    CHECK(r.bound_normal ==
                          doctest::Approx(4 * std::pow(std::sin(kPi / p), 2)));
            }
        }
    }
}

TEST_CASE("vanishing spectral gap along the quadratic family") {
    auto rows = expander_report({3, 7, 11, 19});
    REQUIRE(rows.size() == 4);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const ExpanderRow& r = rows[i];
        CHECK(r.n == std::uint64_t(r.p) * r.p);
        CHECK(r.lambda1 > 0);
        CHECK(r.lambda1 <= r.envelope + 1e-12);
        CHECK(r.envelope == doctest::Approx(8 * std::pow(std::sin(kPi / r.p), 2)));
        if (i > 0) CHECK(r.lambda1 < rows[i - 1].lambda1); // gap collapses
    }
    CHECK_THROWS_AS(expander_report({5}), std::invalid_argument);
}
