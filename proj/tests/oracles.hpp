// Test-only oracles, deliberately independent of the library code paths
// they cross-check.

#ifndef GBC_TESTS_ORACLES_HPP
#define GBC_TESTS_ORACLES_HPP

#include <vector>

#include "gbc/ciminion.hpp"
#include "gbc/hydra.hpp"
#include "gbc/matrix.hpp"
#include "gbc/mpoly.hpp"
#include "gbc/unipoly.hpp"

namespace gbc_tests {

using namespace gbc;

// characteristic polynomial via similarity reduction to Hessenberg form and
// the principal-minor recurrence
inline UniPoly naive_charpoly(DenseMatrix m) {
    const PrimeField& f = m.field();
    const std::size_t n = m.rows();
    // reduce to upper Hessenberg with similarity transforms
    for (std::size_t k = 0; k + 2 < n; ++k) {
        std::size_t piv = n;
        for (std::size_t r = k + 1; r < n; ++r)
            if (m.at(r, k) != 0) { piv = r; break; }
        if (piv == n) continue;
        if (piv != k + 1) {
            for (std::size_t j = 0; j < n; ++j) {
                u128 t = m.at(k + 1, j);
                m.set(k + 1, j, m.at(piv, j));
                m.set(piv, j, t);
            }
            for (std::size_t i = 0; i < n; ++i) {
                u128 t = m.at(i, k + 1);
                m.set(i, k + 1, m.at(i, piv));
                m.set(i, piv, t);
            }
        }
        u128 inv = f.inv(m.at(k + 1, k));
        for (std::size_t i = k + 2; i < n; ++i) {
            u128 c = f.mul(m.at(i, k), inv);
            if (c == 0) continue;
            for (std::size_t j = 0; j < n; ++j) m.set(i, j, f.sub(m.at(i, j), f.mul(c, m.at(k + 1, j))));
            for (std::size_t i2 = 0; i2 < n; ++i2)
                m.set(i2, k + 1, f.add(m.at(i2, k + 1), f.mul(c, m.at(i2, i))));
        }
    }
    // p_k = (x - H[k-1][k-1]) p_{k-1} - sum_m H[k-m][k-1] (prod subdiag) p_{k-m}
    std::vector<UniPoly> p;
    p.push_back(UniPoly::constant(f, 1));
    for (std::size_t k = 1; k <= n; ++k) {
        UniPoly cur = UniPoly(f, {f.neg(m.at(k - 1, k - 1)), 1}) * p[k - 1];
        u128 subprod = 1;
        for (std::size_t mm = 2; mm <= k; ++mm) {
            subprod = f.mul(subprod, m.at(k - mm + 1, k - mm));
            u128 c = f.mul(m.at(k - mm, k - 1), subprod);
            if (c != 0) cur = cur - p[k - mm].scale(c);
        }
        p.push_back(cur);
    }
    return p[n];
}

// exhaustive common-zero search over F_q^n
inline std::vector<std::vector<u128>> brute_force_zeros(const PolySystem& F) {
    const PrimeField& f = F.ring->field;
    const std::size_t n = F.ring->nvars();
    std::vector<std::vector<u128>> out;
    std::vector<u128> point(n, 0);
    for (;;) {
        bool ok = true;
        for (const MPoly& p : F.polys)
            if (p.eval(point) != 0) { ok = false; break; }
        if (ok) out.push_back(point);
        std::size_t i = 0;
        while (i < n) {
            if (++point[i] < f.modulus()) break;
            point[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<u128> scan_roots(const UniPoly& f) {
    std::vector<u128> out;
    for (u128 x = 0; x < f.field().modulus(); ++x)
        if (f.eval(x) == 0) out.push_back(x);
    return out;
}

// second straight-line Ciminion evaluator built on explicit matrix-vector
// products instead of the inlined round formulas
inline std::pair<u128, u128> ciminion_encrypt_reference(const CiminionParams& p, u128 k1, u128 k2,
                                                        u128 nonce, u128 p1, u128 p2) {
    const PrimeField& f = p.field;
    std::vector<u128> st{f.reduce(nonce), f.reduce(k1), f.reduce(k2)};
    for (std::size_t i = 1; i <= p.rounds(); ++i) {
        const auto& c = p.constants.rounds[i - 1];
        DenseMatrix a(f, 3, 3);
        a.set(0, 2, 1);
        a.set(1, 0, 1);
        a.set(1, 1, c[3]);
        a.set(1, 2, c[3]);
        a.set(2, 1, 1);
        a.set(2, 2, 1);
        u128 key = 0;
        if (p.variant == CiminionVariant::Fix)
            key = f.add(f.mul(p.alpha, f.reduce(k1)), f.mul(p.beta, f.reduce(k2)));
        else if (p.variant == CiminionVariant::Ciminion2 && i >= 2)
            key = f.add(f.reduce(k1), f.reduce(k2));
        std::vector<u128> v{st[0], st[1], f.add(st[2], f.add(f.mul(st[0], st[1]), key))};
        st = a.mul_vec(v);
        for (int t = 0; t < 3; ++t) st[static_cast<std::size_t>(t)] =
            f.add(st[static_cast<std::size_t>(t)], c[static_cast<std::size_t>(t)]);
    }
    return {f.add(st[0], f.reduce(p1)), f.add(st[1], f.reduce(p2))};
}

// second straight-line Hydra sampler, likewise via DenseMatrix products
inline HydraSamplePair hydra_sample_reference(const HydraParams& p, const Vec4& k, const Vec4& y,
                                              const Vec4& z) {
    const PrimeField& f = p.field;
    std::vector<u128> kp(8, 0);
    for (int l = 0; l < 4; ++l) kp[static_cast<std::size_t>(l)] = f.reduce(k[static_cast<std::size_t>(l)]);
    {
        std::vector<u128> kv(kp.begin(), kp.begin() + 4);
        std::vector<u128> mk = p.me.mul_vec(kv);
        for (int l = 0; l < 4; ++l) kp[static_cast<std::size_t>(4 + l)] = mk[static_cast<std::size_t>(l)];
    }
    auto head = [&](std::vector<u128> st) {
        for (std::size_t i = 1; i <= p.rh; ++i) {
            u128 s = 0;
            for (int l = 0; l < 4; ++l) s = f.add(s, st[static_cast<std::size_t>(l)]);
            for (int l = 4; l < 8; ++l) s = f.sub(s, st[static_cast<std::size_t>(l)]);
            u128 sq = f.mul(s, s);
            std::vector<u128> v(8);
            for (int l = 0; l < 8; ++l) v[static_cast<std::size_t>(l)] = f.add(st[static_cast<std::size_t>(l)], sq);
            st = p.mj.mul_vec(v);
            for (int l = 0; l < 8; ++l)
                st[static_cast<std::size_t>(l)] = f.add(st[static_cast<std::size_t>(l)],
                                                        f.add(kp[static_cast<std::size_t>(l)],
                                                              p.head_constants[i - 1][static_cast<std::size_t>(l)]));
        }
        return st;
    };
    std::vector<u128> yz(8);
    for (int l = 0; l < 4; ++l) {
        yz[static_cast<std::size_t>(l)] = f.reduce(y[static_cast<std::size_t>(l)]);
        yz[static_cast<std::size_t>(4 + l)] = f.reduce(z[static_cast<std::size_t>(l)]);
    }
    u128 gy = f.mul(f.sub(f.add(yz[0], yz[2]), f.add(yz[1], yz[3])),
                    f.sub(f.add(yz[4], yz[5]), f.add(yz[6], yz[7])));
    u128 gz = f.mul(f.sub(f.add(yz[4], yz[6]), f.add(yz[5], yz[7])),
                    f.sub(f.add(yz[0], yz[1]), f.add(yz[2], yz[3])));
    std::vector<u128> u(8);
    for (int l = 0; l < 4; ++l) u[static_cast<std::size_t>(l)] = f.add(yz[static_cast<std::size_t>(l)], gy);
    for (int l = 0; l < 4; ++l) u[static_cast<std::size_t>(4 + l)] = f.add(yz[static_cast<std::size_t>(4 + l)], gz);
    std::vector<u128> w = p.mr().mul_vec(u);
    for (int l = 0; l < 8; ++l)
        w[static_cast<std::size_t>(l)] = f.add(w[static_cast<std::size_t>(l)], p.rolling_constant[static_cast<std::size_t>(l)]);

    std::vector<u128> h1 = head(yz);
    std::vector<u128> h2 = head(w);
    HydraSamplePair out;
    for (int l = 0; l < 8; ++l) {
        out.c1[static_cast<std::size_t>(l)] = f.add(h1[static_cast<std::size_t>(l)], yz[static_cast<std::size_t>(l)]);
        out.c2[static_cast<std::size_t>(l)] = f.add(h2[static_cast<std::size_t>(l)], w[static_cast<std::size_t>(l)]);
    }
    return out;
}

// full witness assignment for a Ciminion model, from the encryption trace
inline std::vector<u128> ciminion_trace_assignment(const CiminionModel& m, u128 k1, u128 k2) {
    const CiminionParams& p = m.params;
    std::vector<u128> assign(m.system.ring->nvars(), 0);
    assign[0] = p.field.reduce(k1);
    assign[1] = p.field.reduce(k2);
    State3 st{p.field.reduce(m.sample.nonce), p.field.reduce(k1), p.field.reduce(k2)};
    for (std::size_t i = 1; i <= p.rounds(); ++i) {
        st = ciminion_round(p, i, st, k1, k2);
        if (i < p.rounds())
            for (int c = 0; c < 3; ++c) assign[m.var_x(i, static_cast<std::size_t>(c))] = st[static_cast<std::size_t>(c)];
    }
    assign[m.var_last()] = st[2];
    return assign;
}

// full witness assignment for a Hydra model
inline std::vector<u128> hydra_witness_assignment(const HydraModel& m, const HydraWitness& w) {
    const HydraParams& p = m.params;
    std::vector<u128> assign(m.system.ring->nvars(), 0);
    Vec8 yz;
    for (std::size_t l = 0; l < 4; ++l) {
        assign[m.var_y(l)] = p.field.reduce(w.y[l]);
        assign[m.var_z(l)] = p.field.reduce(w.z[l]);
        assign[m.var_k(l)] = p.field.reduce(w.key[l]);
        yz[l] = p.field.reduce(w.y[l]);
        yz[4 + l] = p.field.reduce(w.z[l]);
    }
    Vec8 kp = hydra_key_expand(p, w.key);
    Vec8 st = yz;
    for (std::size_t i = 1; i + 1 <= p.rh; ++i) {
        st = hydra_head_round(p, i, st, kp);
        for (std::size_t l = 0; l < 8; ++l) assign[m.var_x1(i, l)] = st[l];
    }
    Vec8 roll = hydra_roll(p, yz);
    for (std::size_t l = 0; l < 8; ++l) assign[m.var_x2(0, l)] = roll[l];
    st = roll;
    for (std::size_t i = 1; i + 1 <= p.rh; ++i) {
        st = hydra_head_round(p, i, st, kp);
        for (std::size_t l = 0; l < 8; ++l) assign[m.var_x2(i, l)] = st[l];
    }
    return assign;
}

// random system in the structured quadratic shape: f_i = x_i^2 + (quadratic
// in x_i..x_n) + (affine with the paired term x_{n-i+1})
inline PolySystem random_special_shape(const PrimeField& f, std::size_t n, Rng& rng) {
    RingPtr ring = make_ring(f, n);
    PolySystem out(ring);
    for (std::size_t i = 0; i < n; ++i) {
        MPoly p = MPoly::term(ring, Monomial::variable(n, i, 2), 1);
        for (std::size_t a = i; a < n; ++a)
            for (std::size_t b = a; b < n; ++b) {
                if (a == i && b == i) continue;
                Monomial m = Monomial::variable(n, a) * Monomial::variable(n, b);
                p.add_term(m, f.sample(rng));
            }
        for (std::size_t v = 0; v < n; ++v)
            if (v != n - i - 1) p.add_term(Monomial::variable(n, v), f.sample(rng));
        p.add_term(Monomial::variable(n, n - i - 1), f.sample_nonzero(rng)); // paired term stays
        p.add_term(Monomial(n), f.sample(rng));
        out.push(p);
    }
    return out;
}

} // namespace gbc_tests

#endif
