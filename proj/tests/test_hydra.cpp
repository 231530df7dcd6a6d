#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gbc/estimator.hpp"
#include "gbc/groebner.hpp"
#include "gbc/hydra.hpp"
#include "gbc/solver.hpp"
#include "oracles.hpp"

using namespace gbc;
using namespace gbc_tests;

namespace {

const PrimeField kF7741(7741);

} // namespace

TEST_CASE("heads agree with the reference evaluator") {
    HydraParams p = make_hydra_params(kF7741, 3, 5);
    Rng rng(77);
    for (int it = 0; it < 100; ++it) {
        Vec4 k, y, z;
        for (auto& v : k) v = kF7741.sample(rng);
        for (auto& v : y) v = kF7741.sample(rng);
        for (auto& v : z) v = kF7741.sample(rng);
        HydraSamplePair a = heads_sample(p, k, y, z);
        HydraSamplePair b = hydra_sample_reference(p, k, y, z);
        CHECK(a.c1 == b.c1);
        CHECK(a.c2 == b.c2);
    }
    // all-zero input: fully determined by the constants, evaluators agree
    Vec4 zero{};
    HydraSamplePair a = heads_sample(p, zero, zero, zero);
    HydraSamplePair b = hydra_sample_reference(p, zero, zero, zero);
    CHECK(a.c1 == b.c1);
    CHECK(a.c2 == b.c2);
}

TEST_CASE("model counts, witness vanishing, wrong key") {
    HydraParams p = make_hydra_params(kF7741, 2, 5);
    HydraWitness w = random_hydra_witness(p, 6);
    HydraSamplePair out = heads_sample(p, w.key, w.y, w.z);
    HydraModel m = hydra_build_model(p, out);
    CHECK(m.system.size() == 40);
    CHECK(m.system.ring->nvars() == 36);
    std::vector<u128> assign = hydra_witness_assignment(m, w);
    for (const MPoly& f : m.system.polys) CHECK(f.eval(assign) == 0);
    HydraWitness bad = w;
    bad.key[0] = kF7741.add(bad.key[0], 1);
    std::vector<u128> wrong = hydra_witness_assignment(m, bad);
    bool nonzero = false;
    for (const MPoly& f : m.system.polys)
        if (f.eval(wrong) != 0) nonzero = true;
    CHECK(nonzero);
}

TEST_CASE("transform block degrees and exact ideal equality") {
    HydraParams p = make_hydra_params(kF7741, 2, 5);
    HydraWitness w = random_hydra_witness(p, 7);
    HydraSamplePair out = heads_sample(p, w.key, w.y, w.z);
    HydraModel m = hydra_build_model(p, out);
    PolySystem G = hydra_transform(m);
    CHECK(G.size() == 16 * p.rh + 8);
    // head blocks: 7 affine + 1 quadratic; rolling: (3 affine + 1 quadratic) twice
    std::size_t r = p.rh;
    for (std::size_t b = 0; b < 2 * r + 1; ++b) {
        bool rolling = (b == r);
        for (std::size_t l = 0; l < 8; ++l) {
            long deg = G.polys[8 * b + l].total_degree();
            bool quad = rolling ? (l == 3 || l == 7) : (l == 7);
            CHECK(deg == (quad ? 2 : 1));
        }
    }
    std::vector<u128> assign = hydra_witness_assignment(m, w);
    for (const MPoly& g : G.polys) CHECK(g.eval(assign) == 0);
    // invertible row transform: reconstructing the model blocks is exact
    auto mj = p.mj;
    DenseMatrix a8inv(kF7741, 8, 8); // A8^{-1} has ones on the diagonal and in the last column
    for (std::size_t i = 0; i < 8; ++i) {
        a8inv.set(i, i, 1);
        a8inv.set(i, 7, 1);
    }
    DenseMatrix back = mj.mul(a8inv);
    for (std::size_t l = 0; l < 8; ++l) {
        MPoly rebuilt(m.system.ring);
        for (std::size_t t = 0; t < 8; ++t) rebuilt = rebuilt + G.polys[t].scale(back.at(l, t));
        CHECK(rebuilt == m.system.polys[l]);
    }
}

TEST_CASE("generic coordinates rank and affine rank, r 2..6") {
    for (std::size_t r = 2; r <= 6; ++r) {
        HydraParams p = make_hydra_params(kF7741, r, 5);
        HydraModel m = hydra_build_model(p, HydraSamplePair{});
        PolySystem G = hydra_transform(m);
        RankCheck rc = generic_coordinates_check(G, m);
        CHECK(rc.expected == 16 * r + 4);
        CHECK(rc.full_rank);
        AffineElimination elim = eliminate_affine(G, m);
        CHECK(elim.affine_rank == 14 * r + 6);
        CHECK(elim.reduced.size() == 2 * r + 2);
        CHECK(elim.surviving.size() == 2 * r - 2);
    }
}

TEST_CASE("rank identities hold modulo a random 28-bit prime") {
    // deterministic search for a 28-bit prime
    Rng rng(0x70726d);
    u128 q = 0;
    for (;;) {
        u64 cand = (rng.next() & ((1ull << 28) - 1)) | (1ull << 27) | 1ull;
        if (miller_rabin_is_prime(cand)) { q = cand; break; }
    }
    PrimeField f(q);
    for (std::size_t r : {2u, 4u}) {
        HydraParams p = make_hydra_params(f, r, 5);
        HydraModel m = hydra_build_model(p, HydraSamplePair{});
        PolySystem G = hydra_transform(m);
        CHECK(generic_coordinates_check(G, m).full_rank);
        CHECK(eliminate_affine(G, m).affine_rank == 14 * r + 6);
    }
}

TEST_CASE("degenerate mixing layer is reported, not fatal") {
    HydraParams p = make_hydra_params(kF7741, 2, 5);
    p.mj = DenseMatrix::identity(kF7741, 8); // invertible but structurally degenerate
    p.validate();
    HydraModel m = hydra_build_model(p, HydraSamplePair{});
    PolySystem G = hydra_transform(m);
    RankCheck rc = generic_coordinates_check(G, m);
    CHECK_FALSE(rc.full_rank);
}

TEST_CASE("affine elimination keeps the witness") {
    HydraParams p = make_hydra_params(kF7741, 3, 5);
    HydraWitness w = random_hydra_witness(p, 8);
    HydraSamplePair out = heads_sample(p, w.key, w.y, w.z);
    HydraModel m = hydra_build_model(p, out);
    PolySystem G = hydra_transform(m);
    AffineElimination elim = eliminate_affine(G, m);
    CHECK(elim.affine_rank == 48); // 14*3 + 6
    std::vector<u128> assign = hydra_witness_assignment(m, w);
    for (const MPoly& g : elim.reduced.polys) CHECK(g.eval(assign) == 0);
    // the substitution reproduces the witness values of eliminated variables
    for (std::size_t v = 0; v < assign.size(); ++v)
        if (elim.substitution[v]) CHECK(elim.substitution[v]->eval(assign) == assign[v]);
}

TEST_CASE("change of coordinates: shape, extras, dimension, verification") {
    for (std::size_t r : {2u, 3u}) {
        HydraParams p = make_hydra_params(kF7741, r, 5);
        HydraWitness w = random_hydra_witness(p, 9);
        HydraSamplePair out = heads_sample(p, w.key, w.y, w.z);
        HydraModel m = hydra_build_model(p, out);
        AffineElimination elim = eliminate_affine(hydra_transform(m), m);
        HydraGb hgb = change_of_coordinates(m, elim);
        TermOrder drl = TermOrder::drl();
        CHECK(hgb.gb.size() == 2 * r - 2);
        CHECK(hgb.extras.size() == 4);
        for (std::size_t i = 0; i < hgb.gb.size(); ++i) {
            Monomial lm = hgb.gb.polys[i].leading_monomial(drl);
            std::size_t v;
            CHECK(lm.is_pure_power(&v));
            CHECK(v == i);
            CHECK(lm.degree() == 2);
        }
        CHECK(is_groebner(hgb.gb, drl, false));
        CHECK(quotient_basis(hgb.gb, drl).size() <= (std::size_t{1} << (2 * r - 2)));

        // witness maps into hat coordinates and zeroes gb and extras
        std::vector<u128> assign = hydra_witness_assignment(m, w);
        std::vector<u128> xs(elim.surviving.size());
        for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = assign[elim.surviving[i]];
        std::vector<u128> hat = hgb.change.m.mul_vec(xs);
        for (const MPoly& g : hgb.gb.polys) CHECK(g.eval(hat) == 0);
        for (const MPoly& g : hgb.extras.polys) CHECK(g.eval(hat) == 0);

        // pullback returns a zero of the original model
        std::vector<u128> full = hydra_pullback(m, hgb.change, hat);
        for (const MPoly& f : m.system.polys) CHECK(f.eval(full) == 0);
    }
}

TEST_CASE("macaulay bound of the reduced system is 2 rH") {
    for (std::size_t r : {2u, 3u, 5u, 8u}) {
        std::vector<long> degs(2 * r + 2, 2);
        CHECK(macaulay_bound(degs, 2 * r - 2) == static_cast<long>(2 * r));
    }
}

TEST_CASE("rolling constants do not disturb rank or coordinates") {
    HydraParams p = make_hydra_params(kF7741, 2, 5);
    Rng rng(31);
    for (auto& v : p.rolling_constant) v = kF7741.sample(rng);
    HydraWitness w = random_hydra_witness(p, 10);
    HydraSamplePair out = heads_sample(p, w.key, w.y, w.z);
    HydraModel m = hydra_build_model(p, out);
    PolySystem G = hydra_transform(m);
    CHECK(generic_coordinates_check(G, m).full_rank);
    AffineElimination elim = eliminate_affine(G, m);
    HydraGb hgb = change_of_coordinates(m, elim);
    CHECK(hgb.gb.size() == 2);
    CHECK(hgb.extras.size() == 4);
    std::vector<u128> assign = hydra_witness_assignment(m, w);
    for (const MPoly& f : m.system.polys) CHECK(f.eval(assign) == 0);
}

TEST_CASE("rank test cross-checked by the small-instance procedure") {
    HydraParams p = make_hydra_params(kF7741, 2, 5);
    HydraWitness w = random_hydra_witness(p, 11);
    HydraSamplePair out = heads_sample(p, w.key, w.y, w.z);
    HydraModel m = hydra_build_model(p, out);
    PolySystem G = hydra_transform(m);
    REQUIRE(generic_coordinates_check(G, m).full_rank);
    BuchbergerOptions opts;
    opts.max_reductions = 50'000'000;
    CHECK(is_generic_coordinates_small(G, opts));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(make_hydra_params(kF7741, 1, 5), InvalidParams);
    HydraParams p = make_hydra_params(kF7741, 2, 5);
    p.mi.set(0, 1, 2); // breaks the constrained shape
    CHECK_THROWS_AS(p.validate(), InvalidParams);
    HydraParams q = make_hydra_params(kF7741, 2, 5);
    for (std::size_t j = 0; j < 8; ++j) q.mj.set(3, j, q.mj.at(2, j));
    CHECK_THROWS_AS(q.validate(), SingularMatrix);
}
