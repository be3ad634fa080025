#include "catch_amalgamated.hpp"

#include <cmath>

#include "meanineq/polycert.hpp"
#include "meanineq/sampling.hpp"

using namespace meanineq;
using Catch::Approx;

namespace {

double midpoint(const RootInterval& r) { return 0.5 * (r.lo.get_d() + r.hi.get_d()); }

Poly from_longs(std::initializer_list<long> ascending) {
    std::vector<Rat> c;
    for (long v : ascending) c.emplace_back(v);
    return Poly(std::move(c));
}

} // namespace

TEST_CASE("substitute x = t^2") {
    HalfPowerPoly s1;
    for (size_t i = 0; i < tables::h1.size(); ++i)
        if (tables::h1[i] != 0) s1.add(static_cast<long>(i), Rat(tables::h1[i]));
    const Poly h1 = substitute_t_squared(s1);
    CHECK(h1.degree() == 10);
    for (size_t i = 0; i < tables::h1.size(); ++i)
        CHECK(h1.c[i] == Rat(tables::h1[i]));

    HalfPowerPoly c5;
    c5.add(0, Rat(5));
    const Poly p5 = substitute_t_squared(c5);
    CHECK(p5.degree() == 0);
    CHECK(p5.c[0] == 5);

    HalfPowerPoly x1;
    x1.add(2, Rat(1));  // x^1
    const Poly t2 = substitute_t_squared(x1);
    CHECK(t2.degree() == 2);
    CHECK(t2.c[2] == 1);
    CHECK(t2.c[0] == 0);

    HalfPowerPoly bad;
    CHECK_THROWS_AS(bad.add(-1, Rat(1)), std::domain_error);
}

TEST_CASE("degree preservation under substitution") {
    Rng rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        HalfPowerPoly hp;
        long maxk = 0;
        for (int t = 0; t < 6; ++t) {
            const long k = static_cast<long>(rng.unit() * 20);
            hp.add(k, Rat(1 + static_cast<long>(rng.unit() * 9)));
            maxk = std::max(maxk, k);
        }
        CHECK(substitute_t_squared(hp).degree() == static_cast<int>(maxk));
    }
}

TEST_CASE("h1, h2, h3 checksums and real roots") {
    const Poly h1 = builtin_polynomial("h1");
    const Poly h2 = builtin_polynomial("h2");
    const Poly h3 = builtin_polynomial("h3");
    CHECK(h1.eval(Rat(1)) == 56);
    CHECK(h2.eval(Rat(1)) == 288);
    CHECK(h3.eval(Rat(1)) == 416);
    CHECK(h1.degree() == 10);
    CHECK(h2.degree() == 16);
    CHECK(h3.degree() == 22);

    const struct {
        const char* name;
        double r1, r2;
    } expected[] = {
        {"h1", -5.359491864, -0.1865848527},
        {"h2", -5.230974171, -0.1911689806},
        {"h3", -5.269597986, -0.1897677968},
    };
    for (const auto& e : expected) {
        const auto roots = real_roots(builtin_polynomial(e.name));
        REQUIRE(roots.size() == 2);
        CHECK(midpoint(roots[0]) == Approx(e.r1).margin(1e-6));
        CHECK(midpoint(roots[1]) == Approx(e.r2).margin(1e-6));
        for (const auto& r : roots) {
            CHECK(r.hi.get_d() < 0.0);
            CHECK(r.multiplicity == 1);
            CHECK((r.hi - r.lo) <= Rat(1, 1000000000));
        }
    }
    CHECK_THROWS_AS(real_roots(Poly()), std::domain_error);
}

TEST_CASE("multiplicities via squarefree decomposition") {
    // (t-1)^4
    const Poly p = from_longs({1, -4, 6, -4, 1});
    const auto roots = real_roots(p);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].lo == Rat(1));
    CHECK(roots[0].hi == Rat(1));
    CHECK(roots[0].multiplicity == 4);

    // (t-1)^2 (t+2)^3
    const Poly q = from_longs({1, -1}) * from_longs({1, -1}) * from_longs({2, 1}) *
                   from_longs({2, 1}) * from_longs({2, 1});
    const auto qr = real_roots(q);
    REQUIRE(qr.size() == 2);
    CHECK(midpoint(qr[0]) == Approx(-2.0).margin(1e-9));
    CHECK(qr[0].multiplicity == 3);
    CHECK(midpoint(qr[1]) == Approx(1.0).margin(1e-9));
    CHECK(qr[1].multiplicity == 2);
}

TEST_CASE("certify_positive verdicts") {
    const PositivityCertificate c1 = certify_positive(builtin_polynomial("h1"));
    CHECK(c1.verdict == PositivityVerdict::StrictlyPositive);
    CHECK(c1.value_at_one == 56);

    const PositivityCertificate c3 = certify_positive(builtin_polynomial("h3"));
    CHECK(c3.verdict == PositivityVerdict::StrictlyPositive);
    CHECK(c3.value_at_one == 416);

    // part 31's h(x) = (x-1)^4, i.e. (t^2-1)^4 after substitution
    const PositivityCertificate c31 = certify_positive(builtin_polynomial("thm31-p31"));
    CHECK(c31.verdict == PositivityVerdict::NonnegativeZeroOnlyAtOne);

    const PositivityCertificate ind = certify_positive(parse_polynomial("t^2 - 4"));
    CHECK(ind.verdict == PositivityVerdict::Indefinite);

    // negative everywhere on the axis: no positive roots but negative sample
    const PositivityCertificate neg = certify_positive(from_longs({-1, 0, -1}));
    CHECK(neg.verdict == PositivityVerdict::Indefinite);

    // odd multiplicity at t=1 is a sign change, not a touch point
    const PositivityCertificate odd = certify_positive(from_longs({-1, 1}));
    CHECK(odd.verdict == PositivityVerdict::Indefinite);

    CHECK_THROWS_AS(certify_positive(Poly()), std::domain_error);
}

TEST_CASE("theorem proof polynomials touch zero only at t = 1") {
    const char* names[] = {"thm31-p2",  "thm31-p5",  "thm31-p7",  "thm31-p10",
                           "thm31-p11", "thm31-p12", "thm31-p17", "thm31-p18",
                           "thm31-p25", "thm31-p26", "thm31-p29", "thm31-p31",
                           "thm31-p33", "thm31-p40", "thm31-p41"};
    for (const char* name : names) {
        INFO(name);
        const Poly p = builtin_polynomial(name);
        const PositivityCertificate cert = certify_positive(p);
        CHECK(cert.verdict == PositivityVerdict::NonnegativeZeroOnlyAtOne);
        for (const auto& r : cert.roots)
            if (r.hi > 0) {
                CHECK(r.lo <= 1);
                CHECK(r.hi >= 1);
            }
    }
    CHECK_THROWS_AS(builtin_polynomial("thm31-p3"), parse_error);
}

TEST_CASE("randomized certificate soundness") {
    Rng rng(55);
    for (const char* name : {"h1", "h2", "h3"}) {
        const Poly p = builtin_polynomial(name);
        REQUIRE(certify_positive(p).verdict == PositivityVerdict::StrictlyPositive);
        for (int i = 0; i < 1000; ++i) {
            const double t = 100.0 * rng.unit() + 1e-12;
            CHECK(p.eval(t) > 0.0);
        }
    }
}

TEST_CASE("polynomial literals") {
    const Poly p = parse_polynomial("2 + 1/2*t + t^3");
    CHECK(p.degree() == 3);
    CHECK(p.c[0] == 2);
    CHECK(p.c[1] == Rat(1, 2));
    CHECK(p.c[2] == 0);
    CHECK(p.c[3] == 1);

    // half-power x literal: 2x^5 + 2x^(9/2) == first two terms of s1
    const Poly q = parse_polynomial("2*x^5 + 2*x^(9/2) - 27*x^4");
    CHECK(q.degree() == 10);
    CHECK(q.c[10] == 2);
    CHECK(q.c[9] == 2);
    CHECK(q.c[8] == -27);

    const HalfPowerPoly hp = parse_half_power("x^{9/2} + 3*x - 1/3");
    CHECK(hp.terms.at(9) == 1);
    CHECK(hp.terms.at(2) == 3);
    CHECK(hp.terms.at(0) == Rat(-1, 3));

    CHECK(parse_polynomial("t^2 - 4").eval(Rat(2)) == 0);
    CHECK_THROWS_AS(parse_polynomial("t^(1/2)"), parse_error);
    CHECK_THROWS_AS(parse_polynomial("t + x"), parse_error);
    CHECK_THROWS_AS(parse_polynomial("y^2"), parse_error);
    CHECK_THROWS_AS(parse_polynomial(""), parse_error);
    CHECK_THROWS_AS(parse_polynomial("3/"), parse_error);
}

TEST_CASE("square difference gate") {
    CHECK(square_difference_gate(3, 2, +1) == Ordering::Greater);
    CHECK(square_difference_gate(2, 3, -1) == Ordering::Less);
    CHECK_THROWS_AS(square_difference_gate(2, 3, +1), std::domain_error);
    CHECK_THROWS_AS(square_difference_gate(-1, 3, -1), std::domain_error);

    // part 2's k_2 at x = 4 (radical corrected to sqrt(2x^2+2)):
    // A = 3 sqrt(34) * 5 * 17, B = 4*256 + 5*64 + 6*16 + 5*4 + 4, and
    // h_2(4) = (2*256 + 4*64 + 3*16 + 4*4 + 2) * (4-1)^4 > 0.
    const double A = 3.0 * std::sqrt(34.0) * 5.0 * 17.0;
    const double B = 1464.0;
    const double h2_at_4 = (2 * 256 + 4 * 64 + 3 * 16 + 4 * 4 + 2) * 81.0;
    REQUIRE(h2_at_4 > 0);
    CHECK(square_difference_gate(A, B, +1) == Ordering::Greater);
    CHECK(A * A - B * B == Approx(h2_at_4).epsilon(1e-12));
}

TEST_CASE("count_positive_roots") {
    CHECK(count_positive_roots(parse_polynomial("t^2 - 4")) == 1);
    CHECK(count_positive_roots(builtin_polynomial("h1")) == 0);
    // roots at 0 and negative axis do not count
    CHECK(count_positive_roots(from_longs({0, 0, 1})) == 0);
    CHECK(count_positive_roots(from_longs({2, 3, 1})) == 0);  // roots -1, -2
    CHECK(count_positive_roots(from_longs({2, -3, 1})) == 2); // roots 1, 2
}
