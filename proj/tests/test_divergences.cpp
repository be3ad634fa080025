#include "catch_amalgamated.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "meanineq/divergences.hpp"
#include "meanineq/sampling.hpp"

using namespace meanineq;
using Catch::Approx;

namespace {

Distribution dist(std::initializer_list<double> v) { return Distribution(std::vector<double>(v)); }

std::pair<Distribution, Distribution> random_pair(Rng& rng, int n) {
    return {Distribution(rng.dirichlet(n)), Distribution(rng.dirichlet(n))};
}

const std::vector<DivergenceKind> basic_kinds = {
    {DivergenceTag::JensenShannonI, {}}, {DivergenceTag::JDivergence, {}},
    {DivergenceTag::AGMeanT, {}},        {DivergenceTag::SymChiSquarePsi, {}},
    {DivergenceTag::TriangularDelta, {}}, {DivergenceTag::HellingerH, {}},
    DivergenceKind::meandiff(DifferencePair(kinds::A, kinds::G)),
    DivergenceKind::meandiff(DifferencePair(kinds::P5, kinds::N2)),
};

} // namespace

TEST_CASE("distribution validation") {
    CHECK_NOTHROW(dist({0.5, 0.5}));
    CHECK_THROWS_AS(dist({0.5, 0.6}), std::domain_error);          // sums to 1.1
    CHECK_THROWS_AS(dist({1.0, 0.0}), std::domain_error);          // zero entry
    CHECK_THROWS_AS(dist({-0.5, 1.5}), std::domain_error);         // negative
    CHECK_THROWS_AS(Distribution({1.0}), std::domain_error);       // too short
    CHECK_NOTHROW(Distribution({0.5, 0.5 + 5e-10}));               // inside tolerance
    CHECK_THROWS_AS(Distribution({0.5, 0.5 + 5e-10}, 1e-12), std::domain_error);

    const Distribution n = Distribution::make({2.0, 6.0}, true, false);
    CHECK(n.p[0] == Approx(0.25));
    CHECK(n.p[1] == Approx(0.75));
    CHECK_THROWS_AS(Distribution::make({2.0, 6.0}, false, false), std::domain_error);

    const Distribution s = Distribution::make({0.0, 1.0}, false, true);
    CHECK(s.p[0] > 0.0);
    CHECK(s.p[0] == Approx(1e-12).epsilon(1e-3));
    CHECK(s.p[0] + s.p[1] == Approx(1.0).epsilon(1e-15));
}

TEST_CASE("divergence examples") {
    const Distribution P = dist({0.5, 0.5}), Q = dist({0.25, 0.75});
    CHECK(divergence({DivergenceTag::SymChiSquarePsi, {}}, P, Q) ==
          Approx(7.0 / 12.0).epsilon(1e-14));
    CHECK(divergence({DivergenceTag::JDivergence, {}}, P, Q) ==
          Approx(0.25 * std::log(3.0)).epsilon(1e-14));
    for (const auto& k : basic_kinds) CHECK(divergence(k, P, P) == 0.0);
    CHECK_THROWS_AS(divergence(basic_kinds[0], P, dist({0.2, 0.3, 0.5})), std::domain_error);
}

TEST_CASE("divergence kind parsing") {
    CHECK(DivergenceKind::parse("psi").tag == DivergenceTag::SymChiSquarePsi);
    CHECK(DivergenceKind::parse("jensen-shannon").tag == DivergenceTag::JensenShannonI);
    CHECK(DivergenceKind::parse("hellinger").tag == DivergenceTag::HellingerH);
    const DivergenceKind md = DivergenceKind::parse("meandiff:A:H");
    CHECK(md.tag == DivergenceTag::MeanDiff);
    CHECK(md.pair->upper == kinds::A);
    CHECK_THROWS_AS(DivergenceKind::parse("nope"), parse_error);
    CHECK_THROWS_AS(DivergenceKind::parse("meandiff:G:A"), parse_error);  // reversed
}

TEST_CASE("symmetry and identity of indiscernibles") {
    Rng rng(4);
    for (int i = 0; i < 1000; ++i) {
        const int n = 2 + static_cast<int>(rng.unit() * 15);
        const auto [P, Q] = random_pair(rng, n);
        for (const auto& k : basic_kinds) {
            const double pq = divergence(k, P, Q), qp = divergence(k, Q, P);
            CHECK(pq == Approx(qp).epsilon(1e-12).margin(1e-18));
            CHECK(pq >= 0.0);
            double maxdiff = 0;
            for (size_t j = 0; j < P.size(); ++j)
                maxdiff = std::max(maxdiff, std::fabs(P.p[j] - Q.p[j]));
            if (maxdiff > 1e-14) CHECK(pq > 0.0);
        }
    }
}

TEST_CASE("Delta and Hellinger aliases") {
    Rng rng(6);
    const auto md_ah = DivergenceKind::meandiff(DifferencePair(kinds::A, kinds::H));
    const auto md_ag = DivergenceKind::meandiff(DifferencePair(kinds::A, kinds::G));
    for (int i = 0; i < 300; ++i) {
        const auto [P, Q] = random_pair(rng, 2 + static_cast<int>(rng.unit() * 30));
        CHECK(divergence({DivergenceTag::TriangularDelta, {}}, P, Q) ==
              Approx(2.0 * divergence(md_ah, P, Q)).epsilon(1e-12).margin(1e-18));
        CHECK(divergence({DivergenceTag::HellingerH, {}}, P, Q) ==
              Approx(divergence(md_ag, P, Q)).epsilon(1e-12).margin(1e-18));
    }
}

TEST_CASE("MeanDiff matches the coordinate-wise difference sum") {
    Rng rng(61);
    const DifferencePair pair(kinds::P6, kinds::N2);
    const auto kind = DivergenceKind::meandiff(pair);
    for (int i = 0; i < 200; ++i) {
        const auto [P, Q] = random_pair(rng, 8);
        double direct = 0;
        for (size_t j = 0; j < P.size(); ++j)
            direct += difference(pair, PositivePair(P.p[j], Q.p[j]));
        CHECK(divergence(kind, P, Q) == Approx(direct).epsilon(1e-11).margin(1e-18));
    }
}

TEST_CASE("additivity over disjoint support blocks") {
    Rng rng(62);
    const auto kind = DivergenceKind::meandiff(DifferencePair(kinds::A, kinds::N2));
    for (int i = 0; i < 100; ++i) {
        const auto [P1, Q1] = random_pair(rng, 4);
        const auto [P2, Q2] = random_pair(rng, 6);
        std::vector<double> pj, qj;
        const double w = 0.25 + 0.5 * rng.unit();
        for (size_t j = 0; j < P1.size(); ++j) { pj.push_back(w * P1.p[j]); qj.push_back(w * Q1.p[j]); }
        for (size_t j = 0; j < P2.size(); ++j) { pj.push_back((1 - w) * P2.p[j]); qj.push_back((1 - w) * Q2.p[j]); }
        const Distribution P(pj), Q(qj);
        const double joint = divergence(kind, P, Q);
        const double split = w * divergence(kind, P1, Q1) + (1 - w) * divergence(kind, P2, Q2);
        CHECK(joint == Approx(split).epsilon(1e-12).margin(1e-18));
    }
}

TEST_CASE("divergence chain is trivial at P = Q") {
    const Distribution P = dist({0.125, 0.375, 0.5});
    const DivergenceChainReport rep = verify_divergence_chain(P, P);
    CHECK(rep.pass);
    for (const auto& t : rep.terms) CHECK(t.value == 0.0);
    for (const auto& c : rep.comparisons) CHECK(c.rel_violation <= 0.0);
}

TEST_CASE("divergence chain on the worked example") {
    const Distribution P = dist({0.5, 0.5}), Q = dist({0.25, 0.75});
    const DivergenceChainReport rep = verify_divergence_chain(P, Q);
    CHECK(rep.pass);
    CHECK(rep.comparisons.size() == 17);
    for (const auto& c : rep.comparisons) {
        INFO(c.label);
        CHECK(c.pass);
        CHECK(c.slack > 0.0);
    }
    // frozen high-precision term values
    auto term = [&](const std::string& label) {
        for (const auto& t : rep.terms)
            if (t.label == label) return t.value;
        FAIL("missing term " + label);
        return 0.0;
    };
    CHECK(term("I") == Approx(0.03382207556860523).epsilon(1e-13));
    CHECK(term("T") == Approx(0.034841192473151626).epsilon(1e-13));
    CHECK(term("1/8*J") == Approx(0.27465307216702742 / 8).epsilon(1e-13));
    CHECK(term("1/16*Psi") == Approx(7.0 / 12.0 / 16.0).epsilon(1e-13));
    CHECK(term("4*D(N2,N1)") == Approx(4 * 0.00847164235372668).epsilon(1e-12));
    CHECK(term("2*D(P5,A)") == Approx(2 * 0.017417184531346053).epsilon(1e-12));
}

TEST_CASE("divergence chain holds on random Dirichlet pairs") {
    Rng rng(1234);
    for (int i = 0; i < 500; ++i) {
        const int n = 2 + static_cast<int>(rng.unit() * 62);
        const auto [P, Q] = random_pair(rng, n);
        const DivergenceChainReport rep = verify_divergence_chain(P, Q, 1e-10);
        INFO("iteration " << i << " n=" << n);
        CHECK(rep.pass);
    }
}

TEST_CASE("ratio monotonicity checks") {
    std::vector<double> grid;
    for (double x = 0.05; x < 0.999; x += 0.05) grid.push_back(x);
    for (double x = 1.05; x < 20.0; x *= 1.13) grid.push_back(x);

    const RatioMonotonicityReport r1 = ratio_monotonicity_check(RatioCheckKind::AP4_vs_I, grid);
    CHECK(r1.sign_pattern_ok);
    CHECK(r1.limit_estimate == Approx(1.5).margin(1e-6));
    CHECK(*rationalize(r1.limit_estimate, 1000, 1e-6) == Rational(3, 2));

    const RatioMonotonicityReport r2 = ratio_monotonicity_check(RatioCheckKind::P5G_vs_J, grid);
    CHECK(r2.sign_pattern_ok);
    CHECK(r2.limit_estimate == Approx(3.0 / 16.0).margin(1e-6));
    CHECK(*rationalize(r2.limit_estimate, 1000, 1e-6) == Rational(3, 16));

    const RatioMonotonicityReport r3 = ratio_monotonicity_check(RatioCheckKind::P5A_vs_T, grid);
    CHECK(r3.sign_pattern_ok);
    CHECK(r3.limit_estimate == Approx(0.5).margin(1e-6));
    CHECK(*rationalize(r3.limit_estimate, 1000, 1e-6) == Rational(1, 2));

    CHECK_THROWS_AS(ratio_monotonicity_check(RatioCheckKind::AP4_vs_I, {1.0, -1.0}),
                    std::domain_error);
}

TEST_CASE("P5G vs J constant from an independent finite-difference oracle") {
    // f_J(x) = (x-1) ln x; second difference at 1 should give 2, and the
    // P5,G generator difference gives 3/8, so the ratio is 3/16, matching the
    // bound the divergence chain uses rather than the stray published 3/2.
    auto fj = [](double x) { return (x - 1.0) * std::log(x); };
    const double h = 1e-4;
    const double fj2 = (fj(1 + h) - 2.0 * fj(1.0) + fj(1 - h)) / (h * h);
    const double g2 = second_derivative_fd(DifferencePair(kinds::P5, kinds::G), 1.0, h);
    CHECK(fj2 == Approx(2.0).margin(1e-6));
    CHECK(g2 == Approx(3.0 / 8.0).margin(1e-6));
    CHECK(*rationalize(g2 / fj2, 1000, 1e-6) == Rational(3, 16));
}

TEST_CASE("distribution file ingestion") {
    const std::string csv_path = "test_dist_p.csv";
    {
        std::ofstream f(csv_path);
        f << "# comment line\n0.25\n\n0.75   # trailing comment\n";
    }
    const Distribution P = read_distribution_file(csv_path, false, false);
    REQUIRE(P.size() == 2);
    CHECK(P.p[0] == 0.25);
    CHECK(P.p[1] == 0.75);

    const std::string json_path = "test_dist_q.json";
    {
        std::ofstream f(json_path);
        f << "[0.125, 0.125, 0.75]\n";
    }
    const Distribution Q = read_distribution_file(json_path, false, false);
    REQUIRE(Q.size() == 3);
    CHECK(Q.p[2] == 0.75);

    CHECK_THROWS_AS(read_distribution_file("does_not_exist.csv", false, false), parse_error);
    {
        std::ofstream f(csv_path);
        f << "0.5\nnot_a_number\n";
    }
    CHECK_THROWS_AS(read_distribution_file(csv_path, false, false), parse_error);
    std::remove(csv_path.c_str());
    std::remove(json_path.c_str());
}
