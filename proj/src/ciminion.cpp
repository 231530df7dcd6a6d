/*
   Copyright 2026 The gbcrypt authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "gbc/ciminion.hpp"

#include <algorithm>

#include "gbc/matrix.hpp"

namespace gbc {

std::string variant_name(CiminionVariant v) {
    switch (v) {
        case CiminionVariant::Standard: return "standard";
        case CiminionVariant::Fix: return "fix";
        case CiminionVariant::Ciminion2: return "ciminion2";
    }
    return "?";
}

CiminionVariant parse_variant(const std::string& s) {
    if (s == "standard") return CiminionVariant::Standard;
    if (s == "fix") return CiminionVariant::Fix;
    if (s == "ciminion2") return CiminionVariant::Ciminion2;
    throw ParseError("unknown variant: " + s);
}

CiminionConstants derive_constants(std::span<const std::uint8_t> seed, std::size_t r, const PrimeField& f) {
    u64 h = 1469598103934665603ULL; // FNV-1a over the seed bytes
    for (std::uint8_t b : seed) {
        h ^= b;
        h *= 1099511628211ULL;
    }
    Rng rng(h);
    CiminionConstants c;
    c.rounds.resize(r);
    for (std::size_t i = 0; i < r; ++i) {
        c.rounds[i][0] = f.sample(rng);
        c.rounds[i][1] = f.sample(rng);
        c.rounds[i][2] = f.sample(rng);
        u128 c4 = f.sample(rng);
        while (c4 == 0 || c4 == 1) c4 = f.sample(rng); // c4 outside {0, 1}
        c.rounds[i][3] = c4;
    }
    return c;
}

CiminionConstants derive_constants(u64 seed, std::size_t r, const PrimeField& f) {
    std::array<std::uint8_t, 8> bytes{};
    for (int i = 0; i < 8; ++i) bytes[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(seed >> (8 * i));
    return derive_constants(std::span<const std::uint8_t>(bytes.data(), bytes.size()), r, f);
}

void CiminionParams::validate() const {
    if (rc < 1 || re < 1) throw InvalidParams("round counts must be at least 1");
    if (rounds() < 2) throw InvalidParams("total rounds must be at least 2");
    if (constants.rounds.size() != rounds()) throw InvalidParams("constant table size mismatch");
    for (const auto& c : constants.rounds)
        if (c[3] == 0 || c[3] == 1) throw InvalidParams("round constant c4 must avoid {0, 1}");
    if (variant == CiminionVariant::Fix && (alpha == 0 || beta == 0))
        throw InvalidParams("fix variant requires nonzero alpha, beta");
}

CiminionParams make_ciminion_params(const PrimeField& f, std::size_t rc, std::size_t re,
                                    CiminionVariant variant, u64 seed, u128 alpha, u128 beta) {
    CiminionParams p{f, rc, re, derive_constants(seed, rc + re, f), variant, f.reduce(alpha), f.reduce(beta), seed};
    p.validate();
    return p;
}

namespace {

// key material entering the Toffoli branch of round i (1-based)
u128 key_term(const CiminionParams& p, std::size_t i, u128 k1, u128 k2) {
    const PrimeField& f = p.field;
    switch (p.variant) {
        case CiminionVariant::Standard: return 0;
        case CiminionVariant::Fix: return f.add(f.mul(p.alpha, k1), f.mul(p.beta, k2));
        case CiminionVariant::Ciminion2: return i >= 2 ? f.add(k1, k2) : 0;
    }
    return 0;
}

} // namespace

State3 ciminion_round(const CiminionParams& p, std::size_t i, const State3& in, u128 k1, u128 k2) {
    const PrimeField& f = p.field;
    const auto& c = p.constants.rounds[i - 1];
    u128 w = f.add(in[2], f.add(f.mul(in[0], in[1]), key_term(p, i, k1, k2)));
    // A_i = [[0,0,1],[1,c4,c4],[0,1,1]]
    State3 out;
    out[0] = f.add(w, c[0]);
    out[1] = f.add(f.add(in[0], f.mul(c[3], f.add(in[1], w))), c[1]);
    out[2] = f.add(f.add(in[1], w), c[2]);
    return out;
}

State3 ciminion_round_inverse(const CiminionParams& p, std::size_t i, const State3& out) {
    if (p.variant != CiminionVariant::Standard)
        throw VariantUnsupported("round inversion without the key needs the standard variant");
    const PrimeField& f = p.field;
    const auto& c = p.constants.rounds[i - 1];
    State3 u{f.sub(out[0], c[0]), f.sub(out[1], c[1]), f.sub(out[2], c[2])};
    // A_i^{-1} = [[0,1,-c4],[-1,0,1],[1,0,0]]
    u128 x = f.sub(u[1], f.mul(c[3], u[2]));
    u128 y = f.sub(u[2], u[0]);
    u128 w = u[0];
    return State3{x, y, f.sub(w, f.mul(x, y))};
}

State3 ciminion_rol(const State3& s) { return State3{s[2], s[0], s[1]}; }

State3 ciminion_permute(const CiminionParams& p, u128 nonce, u128 k1, u128 k2) {
    State3 st{p.field.reduce(nonce), p.field.reduce(k1), p.field.reduce(k2)};
    for (std::size_t i = 1; i <= p.rounds(); ++i) st = ciminion_round(p, i, st, k1, k2);
    return st;
}

std::pair<u128, u128> ciminion_encrypt(const CiminionParams& p, u128 k1, u128 k2, u128 nonce,
                                       u128 p1, u128 p2) {
    State3 st = ciminion_permute(p, nonce, k1, k2);
    return {p.field.add(st[0], p.field.reduce(p1)), p.field.add(st[1], p.field.reduce(p2))};
}

CiminionSample make_ciminion_sample(const CiminionParams& p, u128 k1, u128 k2, u64 sample_seed) {
    Rng rng(sample_seed);
    CiminionSample s;
    s.nonce = p.field.sample(rng);
    s.p1 = p.field.sample(rng);
    s.p2 = p.field.sample(rng);
    auto [c1, c2] = ciminion_encrypt(p, k1, k2, s.nonce, s.p1, s.p2);
    s.c1 = c1;
    s.c2 = c2;
    return s;
}

std::pair<u128, u128> ciminion_encrypt_second_pair(const CiminionParams& p, const std::array<u128, 4>& keys,
                                                   u128 nonce, u128 p3, u128 p4) {
    const PrimeField& f = p.field;
    State3 st{f.reduce(nonce), f.reduce(keys[0]), f.reduce(keys[1])};
    for (std::size_t i = 1; i <= p.rc; ++i) st = ciminion_round(p, i, st, keys[0], keys[1]);
    // second key pair enters on the first two branches before rolling
    st[0] = f.add(st[0], f.reduce(keys[2]));
    st[1] = f.add(st[1], f.reduce(keys[3]));
    st = ciminion_rol(st);
    for (std::size_t i = p.rc + 1; i <= p.rounds(); ++i) st = ciminion_round(p, i, st, keys[0], keys[1]);
    return {f.add(st[0], f.reduce(p3)), f.add(st[1], f.reduce(p4))};
}

namespace {

std::array<MPoly, 3> apply_round_matrix(const CiminionParams& p, std::size_t i,
                                        const std::array<MPoly, 3>& v) {
    const auto& c = p.constants.rounds[i - 1];
    // rows of A_i applied to (v0, v1, v2)
    return {v[2], v[0] + (v[1] + v[2]).scale(c[3]), v[1] + v[2]};
}

} // namespace

CiminionModel ciminion_build_model(const CiminionParams& p, const CiminionSample& s) {
    p.validate();
    const PrimeField& f = p.field;
    const std::size_t r = p.rounds();
    std::vector<std::string> names{"y1", "y2"};
    for (std::size_t i = 1; i <= r - 1; ++i) {
        names.push_back("x1_" + std::to_string(i));
        names.push_back("x2_" + std::to_string(i));
        names.push_back("x3_" + std::to_string(i));
    }
    names.push_back("x");
    RingPtr ring = make_ring(f, std::move(names));

    CiminionModel model{PolySystem(ring), TermOrder::drl(), p, s};
    auto var = [&](std::size_t idx) { return MPoly::variable(ring, idx); };
    auto cst = [&](u128 v) { return MPoly::constant(ring, v); };

    MPoly key_poly(ring);
    if (p.variant == CiminionVariant::Fix)
        key_poly = var(0).scale(p.alpha) + var(1).scale(p.beta);
    else if (p.variant == CiminionVariant::Ciminion2)
        key_poly = var(0) + var(1);

    std::array<MPoly, 3> in{cst(s.nonce), var(0), var(1)};
    for (std::size_t i = 1; i <= r; ++i) {
        MPoly w = in[2] + in[0] * in[1];
        if (p.variant == CiminionVariant::Fix || (p.variant == CiminionVariant::Ciminion2 && i >= 2))
            w = w + key_poly;
        std::array<MPoly, 3> rounded = apply_round_matrix(p, i, {in[0], in[1], w});
        const auto& c = p.constants.rounds[i - 1];
        for (std::size_t k = 0; k < 3; ++k) rounded[k] = rounded[k] + cst(c[k]);

        std::array<MPoly, 3> target{cst(0), cst(0), cst(0)};
        if (i < r) {
            target = {var(model.var_x(i, 0)), var(model.var_x(i, 1)), var(model.var_x(i, 2))};
        } else {
            target = {cst(f.sub(s.c1, f.reduce(s.p1))), cst(f.sub(s.c2, f.reduce(s.p2))),
                      var(model.var_last())};
        }
        for (std::size_t k = 0; k < 3; ++k) model.system.push(rounded[k] - target[k]);
        if (i < r) in = {var(model.var_x(i, 0)), var(model.var_x(i, 1)), var(model.var_x(i, 2))};
    }
    return model;
}

namespace {

std::array<MPoly, 3> apply_inverse_round_matrix(const CiminionParams& p, std::size_t i,
                                                const std::array<MPoly, 3>& v) {
    const auto& c = p.constants.rounds[i - 1];
    // rows of A_i^{-1} = [[0,1,-c4],[-1,0,1],[1,0,0]]
    return {v[1] - v[2].scale(c[3]), v[2] - v[0], v[0]};
}

} // namespace

PolySystem ciminion_gb(const CiminionModel& model) {
    const CiminionParams& p = model.params;
    p.validate();
    const PrimeField& f = p.field;
    const std::size_t r = p.rounds();
    const RingPtr& ring = model.system.ring;
    const std::size_t n = ring->nvars();
    const TermOrder& order = model.order;

    // step 1: g^(i) = A_i^{-1} f^(i)
    std::vector<MPoly> linear;
    std::vector<MPoly> quadratic;
    for (std::size_t i = 1; i <= r; ++i) {
        std::array<MPoly, 3> fi{model.system.polys[3 * (i - 1)], model.system.polys[3 * (i - 1) + 1],
                                model.system.polys[3 * (i - 1) + 2]};
        std::array<MPoly, 3> gi = apply_inverse_round_matrix(p, i, fi);
        for (const MPoly& g : gi) {
            long d = g.total_degree();
            if (d <= 1)
                linear.push_back(g);
            else
                quadratic.push_back(g);
        }
    }
    if (linear.size() != 2 * r + 1 || quadratic.size() != r - 1)
        throw InvalidParams("unexpected degree split in the transformed system");

    // step 2: Gaussian elimination on the linear members
    DenseMatrix lin(f, linear.size(), n + 1);
    for (std::size_t row = 0; row < linear.size(); ++row) {
        for (const auto& [m, c] : linear[row].terms()) {
            if (m.is_one())
                lin.set(row, n, c);
            else {
                std::size_t v;
                m.is_pure_power(&v);
                lin.set(row, v, c);
            }
        }
    }
    RrefResult rr = rref(lin);
    if (rr.rank != linear.size()) throw InvalidParams("linear members are not independent");

    // the proof pins the pivots: y1, y2, all x1/x2 columns, and x3^(1)
    std::vector<std::size_t> expected{0, 1, 2, 3, 4};
    for (std::size_t i = 2; i + 1 <= r; ++i) {
        expected.push_back(model.var_x(i, 0));
        expected.push_back(model.var_x(i, 1));
    }
    std::sort(expected.begin(), expected.end());
    if (rr.pivots != expected) throw InvalidParams("pivot structure violates the construction");

    PolySystem out(ring);
    for (std::size_t row = 0; row < rr.rank; ++row) {
        MPoly g(ring);
        for (std::size_t jcol = 0; jcol < n; ++jcol)
            if (rr.reduced.at(row, jcol) != 0)
                g.add_term(Monomial::variable(n, jcol), rr.reduced.at(row, jcol));
        if (rr.reduced.at(row, n) != 0) g.add_term(Monomial(n), rr.reduced.at(row, n));
        out.push(std::move(g), PolyRole::Affine);
    }

    // step 3: reduce the quadratics modulo the eliminated linear set
    PolySystem linsys(ring, out.polys);
    std::vector<MPoly> quads;
    for (const MPoly& q : quadratic) quads.push_back(reduce(q, linsys, order).monic(order));
    // tails may still contain later pure squares; interreduce the union
    PolySystem all(ring);
    for (auto& q : quads) all.push(std::move(q), PolyRole::Quadratic);
    for (const auto& g : out.polys) all.push(g, PolyRole::Affine);
    PolySystem red = interreduce(all, order);

    // leading monomials must be y1, y2, x3^(1), x1^(i), x2^(i), squares
    for (const MPoly& g : red.polys) {
        Monomial lm = g.leading_monomial(order);
        std::size_t v;
        if (!lm.is_pure_power(&v) || (lm.degree() != 1 && lm.degree() != 2))
            throw InvalidParams("leading monomial outside the proven staircase");
    }
    red.roles.clear();
    for (const MPoly& g : red.polys)
        red.roles.push_back(g.total_degree() <= 1 ? PolyRole::Affine : PolyRole::Quadratic);
    return red;
}

DownsizedSystem ciminion_downsize(const CiminionModel& model, const PolySystem& gb) {
    const std::size_t r = model.params.rounds();
    std::vector<std::size_t> keep;
    std::vector<std::string> names;
    for (std::size_t i = 2; i + 1 <= r; ++i) {
        keep.push_back(model.var_x(i, 2));
        names.push_back(model.system.ring->vars[model.var_x(i, 2)]);
    }
    keep.push_back(model.var_last());
    names.push_back(model.system.ring->vars[model.var_last()]);
    RingPtr sub = make_ring(model.params.field, std::move(names));

    std::vector<long> to_sub(model.system.ring->nvars(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) to_sub[keep[i]] = static_cast<long>(i);

    DownsizedSystem ds{PolySystem(sub), keep};
    std::vector<MPoly> quads;
    for (const MPoly& g : gb.polys) {
        if (g.total_degree() != 2) continue;
        MPoly q(sub);
        for (const auto& [m, c] : g.terms()) {
            std::vector<std::uint16_t> e(keep.size(), 0);
            for (std::size_t v = 0; v < model.system.ring->nvars(); ++v) {
                if (m.exp(v) == 0) continue;
                if (to_sub[v] < 0) throw ShapeUnavailable("quadratic member touches an eliminated variable");
                e[static_cast<std::size_t>(to_sub[v])] = m.exp(v);
            }
            q.add_term(Monomial(std::move(e)), c);
        }
        quads.push_back(std::move(q));
    }
    TermOrder drl = TermOrder::drl();
    std::sort(quads.begin(), quads.end(), [&](const MPoly& a, const MPoly& b) {
        return drl.greater(a.leading_monomial(drl), b.leading_monomial(drl));
    });
    for (auto& q : quads) ds.system.push(std::move(q), PolyRole::Quadratic);
    return ds;
}

namespace {

MPoly from_unipoly(const RingPtr& ring, const UniPoly& u, std::size_t var) {
    MPoly p(ring);
    for (std::size_t i = 0; i < u.coeffs().size(); ++i)
        if (u.coeff(i) != 0)
            p.add_term(Monomial::variable(ring->nvars(), var, static_cast<std::uint16_t>(i)), u.coeff(i));
    return p;
}

} // namespace

PolySystem lex_shape_basis(const CiminionModel& model, const PolySystem& gb) {
    const CiminionParams& p = model.params;
    if (p.variant != CiminionVariant::Standard)
        throw ShapeUnavailable("variant models break the substitution chain");
    const PrimeField& f = p.field;
    const std::size_t r = p.rounds();
    const RingPtr& ring = model.system.ring;
    const std::size_t n = ring->nvars();
    const std::size_t xvar = model.var_last();

    // quadratics keyed by their leading variable
    const TermOrder drl = model.order;
    std::vector<const MPoly*> quad_of(n, nullptr);
    std::vector<const MPoly*> linear;
    for (const MPoly& g : gb.polys) {
        if (g.total_degree() == 2) {
            std::size_t v;
            g.leading_monomial(drl).is_pure_power(&v);
            quad_of[v] = &g;
        } else {
            linear.push_back(&g);
        }
    }

    // expr[v] = univariate expression of variable v in x, filled back to front
    std::vector<std::optional<UniPoly>> expr(n);
    expr[xvar] = UniPoly::x(f);

    auto substitute_known = [&](const MPoly& g, long* unknown_var, UniPoly* unknown_coeff) -> UniPoly {
        UniPoly acc = UniPoly::zero(f);
        *unknown_var = -1;
        for (const auto& [m, c] : g.terms()) {
            UniPoly t = UniPoly::constant(f, c);
            long unk = -1;
            for (std::size_t v = 0; v < n; ++v) {
                for (std::uint16_t e = 0; e < m.exp(v); ++e) {
                    if (expr[v]) {
                        t = t * *expr[v];
                    } else {
                        if (unk >= 0) throw ShapeUnavailable("two unresolved variables in one term");
                        unk = static_cast<long>(v);
                    }
                }
            }
            if (unk >= 0) {
                if (*unknown_var >= 0 && *unknown_var != unk)
                    throw ShapeUnavailable("substitution chain broken");
                *unknown_var = unk;
                *unknown_coeff = (*unknown_coeff) + t;
            } else {
                acc = acc + t;
            }
        }
        return acc;
    };

    // solve x3^(r-1), ..., x3^(2) from the quadratics of rounds r, ..., 3
    std::vector<std::size_t> quad_vars; // leading variables, in round order 2..r
    for (std::size_t i = 2; i + 1 <= r; ++i) quad_vars.push_back(model.var_x(i, 2));
    quad_vars.push_back(xvar);
    for (std::size_t idx = quad_vars.size(); idx-- > 1;) {
        const MPoly* g = quad_of[quad_vars[idx]];
        if (!g) throw ShapeUnavailable("missing quadratic member");
        long unk = -1;
        UniPoly coeff = UniPoly::zero(f);
        UniPoly known = substitute_known(*g, &unk, &coeff);
        if (unk < 0 || coeff.degree() != 0) throw ShapeUnavailable("substitution chain broken");
        expr[static_cast<std::size_t>(unk)] = known.scale(f.neg(f.inv(coeff.coeff(0))));
    }

    // fully substituted first quadratic gives the univariate member
    {
        const MPoly* g = quad_of[quad_vars[0]];
        if (!g) throw ShapeUnavailable("missing quadratic member");
        long unk = -1;
        UniPoly coeff = UniPoly::zero(f);
        UniPoly ftilde = substitute_known(*g, &unk, &coeff);
        if (unk >= 0) throw ShapeUnavailable("substitution chain broken");
        UniPoly univ = ftilde.monic();

        // linear members express the pivot variables in the substituted ones
        PolySystem out(ring);
        std::vector<std::pair<std::size_t, UniPoly>> shape;
        for (std::size_t v = 0; v < n; ++v) {
            if (v == xvar) continue;
            if (expr[v]) {
                shape.emplace_back(v, expr[v]->mod(univ));
                continue;
            }
        }
        for (const MPoly* lp : linear) {
            std::size_t v;
            lp->leading_monomial(drl).is_pure_power(&v);
            // member is v + tail; tail only involves substituted variables
            MPoly tail = *lp - MPoly::variable(ring, v);
            UniPoly acc = UniPoly::zero(f);
            for (const auto& [m, c] : tail.terms()) {
                UniPoly t = UniPoly::constant(f, c);
                for (std::size_t w = 0; w < n; ++w)
                    for (std::uint16_t e = 0; e < m.exp(w); ++e) {
                        if (!expr[w]) throw ShapeUnavailable("linear tail touches an unresolved variable");
                        t = t * *expr[w];
                    }
                acc = acc + t;
            }
            shape.emplace_back(v, acc.scale(f.neg(1)).mod(univ));
        }
        std::sort(shape.begin(), shape.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [v, g_of_x] : shape)
            out.push(MPoly::variable(ring, v) - from_unipoly(ring, g_of_x, xvar));
        out.push(from_unipoly(ring, univ, xvar));
        return out;
    }
}

UniPoly bariant_polynomial(const CiminionParams& p, const CiminionSample& s) {
    if (p.variant != CiminionVariant::Standard)
        throw VariantUnsupported("the univariate construction needs invertible key-free rounds");
    p.validate();
    const PrimeField& f = p.field;
    const std::size_t r = p.rounds();
    std::array<UniPoly, 3> st{UniPoly::constant(f, f.sub(s.c1, f.reduce(s.p1))),
                              UniPoly::constant(f, f.sub(s.c2, f.reduce(s.p2))), UniPoly::x(f)};
    for (std::size_t i = r; i >= 1; --i) {
        const auto& c = p.constants.rounds[i - 1];
        std::array<UniPoly, 3> u{st[0] - UniPoly::constant(f, c[0]), st[1] - UniPoly::constant(f, c[1]),
                                 st[2] - UniPoly::constant(f, c[2])};
        UniPoly x = u[1] - u[2].scale(c[3]);
        UniPoly y = u[2] - u[0];
        st = {x, y, u[0] - x * y};
    }
    return st[0] - UniPoly::constant(f, s.nonce);
}

} // namespace gbc
