#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gbc/estimator.hpp"

using namespace gbc;

namespace {

bool near(double a, double b, double tol = 0.05) { return std::fabs(a - b) <= tol; }

} // namespace

TEST_CASE("ciminion table rows") {
    EstimatorConfig cfg;
    struct Row {
        std::size_t r;
        double bariant, eigen, full;
    };
    const Row rows[] = {
        {32, 45.60, 61.09, 126}, {33, 46.67, 63.09, 130},   {65, 80.18, 127.09, 258},
        {66, 81.22, 129.09, 262}, {111, 127.45, 219.09, 442}, {112, 128.47, 221.09, 446},
    };
    for (const Row& row : rows) {
        CiminionEstimate e = est_ciminion(row.r, cfg);
        CHECK(near(e.bariant_bits, row.bariant));
        CHECK(near(e.eigenvalue_bits, row.eigen));
        CHECK(near(e.fully_substituted_bits, row.full));
        CHECK(e.bariant_dominant == "gcd");
        CHECK(near(std::max(e.bariant_construction_bits, e.bariant_gcd_bits), row.bariant, 0.05));
    }
}

TEST_CASE("hydra table rows") {
    EstimatorConfig cfg;
    struct Row {
        std::size_t r;
        int dreg;
        double fglm, eigen, semi;
    };
    const Row rows[] = {
        {28, 22, 113.75, 107.09, 125.31}, {29, 23, 117.81, 111.09, 130.80},
        {30, 24, 121.86, 115.09, 136.29}, {31, 25, 125.91, 119.09, 141.77},
        {32, 26, 129.95, 123.09, 147.26}, {33, 27, 134.00, 127.09, 152.75},
        {34, 28, 138.04, 131.09, 158.23}, {35, 28, 142.09, 135.09, 160.24},
        {39, 32, 158.25, 151.09, 182.22}, {45, 37, 182.46, 175.09, 211.72},
    };
    for (const Row& row : rows) {
        HydraEstimate e = est_hydra(row.r, cfg);
        CHECK(e.dreg == row.dreg);
        CHECK(near(e.fglm_bits, row.fglm));
        CHECK(near(e.eigenvalue_bits, row.eigen));
        CHECK(near(e.semiregular_bits, row.semi));
    }
}

TEST_CASE("hydra recomputation rows") {
    EstimatorConfig cfg;
    struct Row {
        std::size_t r;
        double cp, ep, cs, es;
    };
    const Row rows[] = {
        {28, 148.72, 110, 118.28, 102.10}, {29, 153.89, 114, 123.29, 106.25},
        {31, 164.21, 122, 133.25, 114.54}, {35, 184.82, 138, 150.37, 129.66},
        {45, 236.24, 178, 197.03, 169.55},
    };
    for (const Row& row : rows) {
        HydraEstimate e = est_hydra(row.r, cfg);
        CHECK(near(e.bool_proven_construction_bits, row.cp));
        CHECK(near(e.bool_proven_elimination_bits, row.ep));
        CHECK(near(e.bool_semiregular_construction_bits, row.cs));
        CHECK(near(e.bool_semiregular_elimination_bits, row.es));
        CHECK(e.boolean_semiregular_bits ==
              std::max(e.bool_semiregular_construction_bits, e.bool_semiregular_elimination_bits));
    }
    CHECK_FALSE(est_hydra(31, cfg).note.empty());
    CHECK(est_hydra(30, cfg).note.empty());
}

TEST_CASE("hilbert series degree of regularity") {
    CHECK(hilbert_dreg(29) == 23);
    CHECK(hilbert_dreg(31) == 25);
    CHECK(hilbert_dreg(39) == 32);
    CHECK(hilbert_dreg(3) == 3);
    CHECK(hilbert_dreg(4) == 3);
    CHECK(hilbert_dreg(5) == 4);
    CHECK(hilbert_dreg(10) == 8);
}

TEST_CASE("monotonicity in rounds") {
    EstimatorConfig cfg;
    CiminionEstimate prev_c = est_ciminion(8, cfg);
    for (std::size_t r = 9; r <= 40; ++r) {
        CiminionEstimate e = est_ciminion(r, cfg);
        CHECK(e.bariant_bits > prev_c.bariant_bits);
        CHECK(e.eigenvalue_bits > prev_c.eigenvalue_bits);
        CHECK(e.fully_substituted_bits > prev_c.fully_substituted_bits);
        prev_c = e;
    }
    HydraEstimate prev_h = est_hydra(4, cfg);
    for (std::size_t r = 5; r <= 40; ++r) {
        HydraEstimate e = est_hydra(r, cfg);
        CHECK(e.fglm_bits > prev_h.fglm_bits);
        CHECK(e.eigenvalue_bits > prev_h.eigenvalue_bits);
        CHECK(e.semiregular_bits > prev_h.semiregular_bits);
        CHECK(e.bool_proven_construction_bits > prev_h.bool_proven_construction_bits);
        CHECK(e.bool_proven_elimination_bits > prev_h.bool_proven_elimination_bits);
        prev_h = e;
    }
}

TEST_CASE("omega sensitivity") {
    EstimatorConfig base;
    EstimatorConfig high;
    high.omega = 2.371551;
    for (std::size_t r : {16u, 33u, 64u}) {
        CiminionEstimate a = est_ciminion(r, base), b = est_ciminion(r, high);
        CHECK(b.eigenvalue_bits > a.eigenvalue_bits);
        CHECK(b.fully_substituted_bits > a.fully_substituted_bits);
        HydraEstimate ha = est_hydra(r, base), hb = est_hydra(r, high);
        CHECK(hb.fglm_bits > ha.fglm_bits);
        CHECK(hb.eigenvalue_bits > ha.eigenvalue_bits);
        CHECK(hb.semiregular_bits > ha.semiregular_bits);
        CHECK(hb.bool_proven_elimination_bits > ha.bool_proven_elimination_bits);
        CHECK(hb.bool_semiregular_elimination_bits > ha.bool_semiregular_elimination_bits);
    }
}

TEST_CASE("hilbert dreg never exceeds the macaulay bound of the reduced system") {
    for (std::size_t r = 2; r <= 64; ++r) {
        std::vector<long> degs(2 * r + 2, 2);
        CHECK(hilbert_dreg(r) <= macaulay_bound(degs, 2 * r - 2));
    }
}

TEST_CASE("macaulay bound") {
    CHECK(macaulay_bound({2, 2, 2}, 10) == 4);
    // full ciminion system: 2r+1 linear plus r-1 quadratics in 3r variables
    for (long r : {4L, 9L}) {
        std::vector<long> degs;
        for (long i = 0; i < 2 * r + 1; ++i) degs.push_back(1);
        for (long i = 0; i < r - 1; ++i) degs.push_back(2);
        CHECK(macaulay_bound(degs, static_cast<std::size_t>(3 * r)) == r);
    }
    CHECK_THROWS_AS(macaulay_bound({}, 3), InvalidParams);
}

TEST_CASE("round recommendation") {
    CHECK(round_recommendation(34) == 45);
    CHECK(round_recommendation(29) == 39);
    CHECK(round_recommendation(20) == 30);
    CHECK_THROWS_AS(round_recommendation(0), InvalidParams);
}

TEST_CASE("config validation") {
    EstimatorConfig bad;
    bad.omega = 1.5;
    CHECK_THROWS_AS(bad.validate(), InvalidParams);
    bad.omega = 2.4;
    CHECK_THROWS_AS(bad.validate(), InvalidParams);
    EstimatorConfig zero_n;
    zero_n.n_solutions = 0;
    CHECK_THROWS_AS(zero_n.validate(), InvalidParams);
    EstimatorConfig cfg;
    CHECK(near(cfg.log2_q(), 127.0, 1e-9));
}
