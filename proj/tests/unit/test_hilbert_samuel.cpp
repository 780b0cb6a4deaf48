#include "arakelov/errors.hpp"
#include "arakelov/hilbert_samuel.hpp"
#include "arakelov/instances.hpp"
#include "arakelov/positivity.hpp"

#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

using namespace arakelov;
using fixtures::q;
using fixtures::two_point_curve;
using fixtures::w1;

TEST_CASE("filtration of W1 at n = 2") {
    CHECK(filtration_dim(w1(), 2, -5) == 3);
    CHECK(filtration_dim(w1(), 2, -1) == 3);
    CHECK(filtration_dim(w1(), 2, q("-1/2")) == 2);
    CHECK(filtration_dim(w1(), 2, 0) == 2);
    CHECK(filtration_dim(w1(), 2, q("1/100")) == 0);

    const FiltrationProfile p = filtration_profile(w1(), 2);
    CHECK(p.h0 == 3);
    for (const Rational& t : {Rational(-3), Rational(-1), q("-1/3"), Rational(0), Rational(1)})
        CHECK(p(t) == filtration_dim(w1(), 2, t));

    CHECK(arakelov_deg(w1(), 2) == -1);
    CHECK(oracle::monomial_arakelov_deg(w1(), 2) == -1);
    CHECK(phi_star_sum(w1(), 2) == -1);
}

TEST_CASE("W1 at n = 100") {
    // sum_{i=0}^{50} 100 (i/100 - 1/2)
    Rational closed = 0;
    for (int i = 0; i <= 50; ++i) closed += 100 * (Rational(i, 100) - q("1/2"));
    CHECK(closed == -1275);
    CHECK(arakelov_deg(w1(), 100) == -1275);
    CHECK(phi_star_sum(w1(), 100) == -1275);
    CHECK(oracle::monomial_arakelov_deg(w1(), 100) == -1275);
    CHECK(arakelov_deg_plus(w1(), 100) == 0);
}

TEST_CASE("arakelov_deg matches the monomial enumeration") {
    InstanceGenerator gen(51, GeneratorParams{2, 3, 4, 4, 1});
    for (int trial = 0; trial < 10; ++trial) {
        MetrisedRDivisor g = gen.hs_instance(two_point_curve());
        g = add_constant(g, gen.rational(-2, 2));
        for (std::int64_t n : {1, 2, 3, 5, 8}) {
            REQUIRE(arakelov_deg(g, n) == oracle::monomial_arakelov_deg(g, n));
            REQUIRE(arakelov_deg_plus(g, n) == oracle::monomial_arakelov_deg(g, n, true));
        }
    }
}

TEST_CASE("degree is zero for canonical metrics") {
    const MetrisedRDivisor can = canonical_metrised(two_point_curve(), RDivisor{{"p0", 2}, {"pinf", 1}});
    for (std::int64_t n : {1, 4, 9}) {
        CHECK(arakelov_deg(can, n) == 0);
        CHECK(arakelov_deg_plus(can, n) == 0);
        CHECK(phi_star_sum(can, n) == 0);
    }
}

TEST_CASE("harness preconditions") {
    const MetrisedRDivisor frac = canonical_metrised(two_point_curve(), RDivisor{{"p0", q("1/2")}});
    CHECK_THROWS_AS(arakelov_deg(frac, 2), UnsupportedError);
    const auto genus1 = std::make_shared<const CurveModel>(1, two_point_curve()->points());
    CHECK_THROWS_AS(arakelov_deg(canonical_metrised(genus1, RDivisor{{"p0", 1}}), 2), UnsupportedError);
    CHECK_THROWS_AS(arakelov_deg(w1(), 0), DomainError);
    CHECK_THROWS_AS(phi_star_sum(fixtures::w1_scaled_phi(3), 2), DomainError);
    CHECK_THROWS_AS(hs_convergence_run(fixtures::w1_scaled_phi(3), {2}), DomainError);
}

TEST_CASE("translation and monotonicity") {
    InstanceGenerator gen(53);
    const auto curve = gen.curve();
    for (int trial = 0; trial < 10; ++trial) {
        const MetrisedRDivisor g = gen.hs_instance(curve);
        const Rational c = gen.rational(-3, 3);
        for (std::int64_t n : {1, 3, 7}) {
            const std::int64_t h = h0_dim(Rational(n) * g.divisor(), g.curve());
            REQUIRE(arakelov_deg(add_constant(g, c), n) == arakelov_deg(g, n) + n * c * h);
            REQUIRE(arakelov_deg_plus(g, n) >= arakelov_deg(g, n));
            REQUIRE(phi_star_sum(add_constant(g, c), n) == phi_star_sum(g, n) + n * c * h);
            const FiltrationProfile p = filtration_profile(g, n);
            REQUIRE(p.h0 == h);
            std::int64_t prev = h;
            for (const auto& [t, d] : p.steps) {
                REQUIRE(d <= prev);
                REQUIRE(filtration_dim(g, n, t) == d);
                prev = d;
            }
        }
    }
}

TEST_CASE("scaled filtration approaches deg_Dgt") {
    const std::int64_t n = 400;
    for (const Rational& t : {q("-3/8"), q("-1/4"), q("-1/8")}) {
        const Rational ratio = Rational(filtration_dim(w1(), n, n * t), n);
        CHECK(abs(ratio - deg_Dgt(w1(), t)) <= Rational(2, n));
    }
}

TEST_CASE("hs_convergence_run") {
    const HSReport r = hs_convergence_run(w1(), {10, 20, 50, 100, 200});
    CHECK(r.target == q("-1/4"));
    CHECK(r.vol_chi == q("-1/4"));
    CHECK(r.vol == 0);
    REQUIRE(r.rows.size() == 5);
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
        CHECK(r.rows[i].gap == Rational(1, 2 * r.rows[i].n));
        if (i > 0) CHECK(r.rows[i].gap < r.rows[i - 1].gap);
    }
    CHECK(r.rows[3].ratio == q("-51/200"));

    const HSReport shifted = hs_convergence_run(add_constant(w1(), 1), {100});
    CHECK(shifted.vol == q("7/4"));
    CHECK(abs(shifted.rows[0].ratio_plus - q("7/4")) < q("1/20"));

    const HSReport can = hs_convergence_run(canonical_metrised(two_point_curve(), RDivisor{{"p0", 1}}), {5, 10});
    for (const HSRow& row : can.rows) CHECK(row.ratio == 0);
}

TEST_CASE("inequality_suite") {
    const InequalityReport rep = inequality_suite(7, 200);
    CHECK(rep.trials == 200);
    CHECK(rep.violations.empty());
    for (const auto& [name, counts] : rep.checks) {
        INFO(name);
        CHECK(counts.second == 0);
        CHECK(counts.first > 0);
    }
    // deterministic in the seed
    const InequalityReport again = inequality_suite(7, 200);
    CHECK(again.checks == rep.checks);
}
