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

#include "gbc/hydra.hpp"

#include <algorithm>

namespace gbc {

namespace {

DenseMatrix from_ints(const PrimeField& f, std::size_t n, const int* a) {
    DenseMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, f.from_int(a[i * n + j]));
    return m;
}

} // namespace

DenseMatrix hydra_instance_me(const PrimeField& f) {
    static const int a[16] = {3, 2, 1, 1, 1, 3, 2, 1, 1, 1, 3, 2, 2, 1, 1, 3};
    return from_ints(f, 4, a);
}

DenseMatrix hydra_instance_mi(const PrimeField& f) {
    static const int a[16] = {1, 1, 1, 1, 1, 4, 1, 1, 3, 1, 3, 1, 4, 1, 1, 2};
    return from_ints(f, 4, a);
}

DenseMatrix hydra_instance_mj(const PrimeField& f) {
    static const int a[64] = {
        3, 1, 1, 1, 1, 1, 1, 1,
        7, 3, 1, 1, 1, 1, 1, 1,
        4, 1, 4, 1, 1, 1, 1, 1,
        3, 1, 1, 8, 1, 1, 1, 1,
        7, 1, 1, 1, 7, 1, 1, 1,
        8, 1, 1, 1, 1, 5, 1, 1,
        5, 1, 1, 1, 1, 1, 2, 1,
        4, 1, 1, 1, 1, 1, 1, 6,
    };
    return from_ints(f, 8, a);
}

DenseMatrix HydraParams::mr() const {
    DenseMatrix m(field, 8, 8);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            m.set(i, j, mi.at(i, j));
            m.set(4 + i, 4 + j, mi.at(i, j));
        }
    return m;
}

void HydraParams::validate() const {
    if (rh < 2) throw InvalidParams("hydra needs at least 2 rounds");
    if (head_constants.size() != rh) throw InvalidParams("head constant table size mismatch");
    if (!me.inverse()) throw SingularMatrix("M_E is singular");
    if (!mi.inverse()) throw SingularMatrix("M_I is singular");
    if (!mj.inverse()) throw SingularMatrix("M_J is singular");
    // constrained shape: ones away from the first column and the diagonal
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 1; j < 4; ++j)
            if (i != j && mi.at(i, j) != 1 % field.modulus())
                throw InvalidParams("M_I violates the constrained shape");
}

std::vector<Vec8> hydra_derive_constants(u64 seed, std::size_t r, const PrimeField& f) {
    u64 h = 1469598103934665603ULL;
    for (int i = 0; i < 8; ++i) {
        h ^= static_cast<std::uint8_t>(seed >> (8 * i));
        h *= 1099511628211ULL;
    }
    h ^= 0x48; // domain separation from the ciminion table
    h *= 1099511628211ULL;
    Rng rng(h);
    std::vector<Vec8> out(r);
    for (auto& v : out)
        for (auto& e : v) e = f.sample(rng);
    return out;
}

HydraParams make_hydra_params(const PrimeField& f, std::size_t rh, u64 seed) {
    HydraParams p{f,
                  rh,
                  hydra_instance_me(f),
                  hydra_instance_mi(f),
                  hydra_instance_mj(f),
                  hydra_derive_constants(seed, rh, f),
                  Vec8{},
                  seed};
    p.validate();
    return p;
}

Vec8 hydra_key_expand(const HydraParams& p, const Vec4& k) {
    const PrimeField& f = p.field;
    Vec8 kp{};
    for (std::size_t i = 0; i < 4; ++i) kp[i] = f.reduce(k[i]);
    for (std::size_t i = 0; i < 4; ++i) {
        u128 acc = 0;
        for (std::size_t j = 0; j < 4; ++j) acc = f.add(acc, f.mul(p.me.at(i, j), f.reduce(k[j])));
        kp[4 + i] = acc;
    }
    return kp;
}

Vec8 hydra_head_round(const HydraParams& p, std::size_t i, const Vec8& state, const Vec8& kprime) {
    const PrimeField& f = p.field;
    u128 s = 0;
    for (std::size_t l = 0; l < 4; ++l) s = f.add(s, state[l]);
    for (std::size_t l = 4; l < 8; ++l) s = f.sub(s, state[l]);
    u128 fq = f.mul(s, s);
    Vec8 y;
    for (std::size_t l = 0; l < 8; ++l) y[l] = f.add(state[l], fq);
    Vec8 out{};
    for (std::size_t m = 0; m < 8; ++m) {
        u128 acc = 0;
        for (std::size_t l = 0; l < 8; ++l) acc = f.add(acc, f.mul(p.mj.at(m, l), y[l]));
        out[m] = f.add(acc, f.add(kprime[m], p.head_constants[i - 1][m]));
    }
    return out;
}

Vec8 hydra_heads(const HydraParams& p, const Vec4& k, const Vec8& yz) {
    Vec8 kp = hydra_key_expand(p, k);
    Vec8 st = yz;
    for (std::size_t i = 1; i <= p.rh; ++i) st = hydra_head_round(p, i, st, kp);
    return st;
}

Vec8 hydra_roll(const HydraParams& p, const Vec8& yz) {
    const PrimeField& f = p.field;
    auto alt1 = [&](std::size_t base) { // a0 - a1 + a2 - a3
        u128 s = yz[base];
        s = f.sub(s, yz[base + 1]);
        s = f.add(s, yz[base + 2]);
        return f.sub(s, yz[base + 3]);
    };
    auto alt2 = [&](std::size_t base) { // a0 + a1 - a2 - a3
        u128 s = f.add(yz[base], yz[base + 1]);
        s = f.sub(s, yz[base + 2]);
        return f.sub(s, yz[base + 3]);
    };
    u128 gy = f.mul(alt1(0), alt2(4));
    u128 gz = f.mul(alt1(4), alt2(0));
    Vec8 u;
    for (std::size_t l = 0; l < 4; ++l) u[l] = f.add(yz[l], gy);
    for (std::size_t l = 0; l < 4; ++l) u[4 + l] = f.add(yz[4 + l], gz);
    DenseMatrix mr = p.mr();
    Vec8 out{};
    for (std::size_t m = 0; m < 8; ++m) {
        u128 acc = 0;
        for (std::size_t l = 0; l < 8; ++l) acc = f.add(acc, f.mul(mr.at(m, l), u[l]));
        out[m] = f.add(acc, p.rolling_constant[m]);
    }
    return out;
}

HydraSamplePair heads_sample(const HydraParams& p, const Vec4& k, const Vec4& y, const Vec4& z) {
    const PrimeField& f = p.field;
    Vec8 yz;
    for (std::size_t l = 0; l < 4; ++l) yz[l] = f.reduce(y[l]);
    for (std::size_t l = 0; l < 4; ++l) yz[4 + l] = f.reduce(z[l]);
    Vec8 h1 = hydra_heads(p, k, yz);
    Vec8 w = hydra_roll(p, yz);
    Vec8 h2 = hydra_heads(p, k, w);
    HydraSamplePair out;
    for (std::size_t l = 0; l < 8; ++l) {
        out.c1[l] = f.add(h1[l], yz[l]);
        out.c2[l] = f.add(h2[l], w[l]);
    }
    return out;
}

HydraWitness random_hydra_witness(const HydraParams& p, u64 seed) {
    Rng rng(seed);
    HydraWitness w;
    for (auto& v : w.key) v = p.field.sample(rng);
    for (auto& v : w.y) v = p.field.sample(rng);
    for (auto& v : w.z) v = p.field.sample(rng);
    return w;
}

namespace {

using Poly8 = std::array<MPoly, 8>;

Poly8 symbolic_head_round(const HydraModel& model, std::size_t i, const Poly8& xs, const Poly8& kp) {
    const HydraParams& p = model.params;
    const RingPtr& ring = model.system.ring;
    MPoly s(ring);
    for (std::size_t l = 0; l < 4; ++l) s = s + xs[l];
    for (std::size_t l = 4; l < 8; ++l) s = s - xs[l];
    MPoly fq = s * s;
    Poly8 y{MPoly(ring), MPoly(ring), MPoly(ring), MPoly(ring),
            MPoly(ring), MPoly(ring), MPoly(ring), MPoly(ring)};
    for (std::size_t l = 0; l < 8; ++l) y[l] = xs[l] + fq;
    Poly8 out{MPoly(ring), MPoly(ring), MPoly(ring), MPoly(ring),
              MPoly(ring), MPoly(ring), MPoly(ring), MPoly(ring)};
    for (std::size_t m = 0; m < 8; ++m) {
        MPoly acc(ring);
        for (std::size_t l = 0; l < 8; ++l) acc = acc + y[l].scale(p.mj.at(m, l));
        out[m] = acc + kp[m] + MPoly::constant(ring, p.head_constants[i - 1][m]);
    }
    return out;
}

} // namespace

HydraModel hydra_build_model(const HydraParams& p, const HydraSamplePair& outputs) {
    p.validate();
    const PrimeField& f = p.field;
    const std::size_t r = p.rh;
    std::vector<std::string> names;
    for (std::size_t l = 1; l <= 4; ++l) names.push_back("y" + std::to_string(l));
    for (std::size_t l = 1; l <= 4; ++l) names.push_back("z" + std::to_string(l));
    for (std::size_t i = 1; i <= r - 1; ++i)
        for (std::size_t l = 1; l <= 8; ++l)
            names.push_back("x1_" + std::to_string(i) + "_" + std::to_string(l));
    for (std::size_t i = 0; i <= r - 1; ++i)
        for (std::size_t l = 1; l <= 8; ++l)
            names.push_back("x2_" + std::to_string(i) + "_" + std::to_string(l));
    for (std::size_t l = 1; l <= 4; ++l) names.push_back("k" + std::to_string(l));
    RingPtr ring = make_ring(f, std::move(names));

    HydraModel model{PolySystem(ring), TermOrder::drl(), p, outputs};
    auto var = [&](std::size_t i) { return MPoly::variable(ring, i); };

    Poly8 kp{MPoly(ring), MPoly(ring), MPoly(ring), MPoly(ring),
             MPoly(ring), MPoly(ring), MPoly(ring), MPoly(ring)};
    for (std::size_t l = 0; l < 4; ++l) kp[l] = var(model.var_k(l));
    for (std::size_t m = 0; m < 4; ++m) {
        MPoly acc(ring);
        for (std::size_t l = 0; l < 4; ++l) acc = acc + var(model.var_k(l)).scale(p.me.at(m, l));
        kp[4 + m] = acc;
    }

    Poly8 yz{MPoly(ring), MPoly(ring), MPoly(ring), MPoly(ring),
             MPoly(ring), MPoly(ring), MPoly(ring), MPoly(ring)};
    for (std::size_t l = 0; l < 4; ++l) yz[l] = var(model.var_y(l));
    for (std::size_t l = 0; l < 4; ++l) yz[4 + l] = var(model.var_z(l));

    auto state_x = [&](auto&& index_of) {
        Poly8 st{MPoly(ring), MPoly(ring), MPoly(ring), MPoly(ring),
                 MPoly(ring), MPoly(ring), MPoly(ring), MPoly(ring)};
        for (std::size_t l = 0; l < 8; ++l) st[l] = var(index_of(l));
        return st;
    };

    // f1 rounds
    {
        Poly8 in = yz;
        for (std::size_t i = 1; i <= r; ++i) {
            Poly8 out = symbolic_head_round(model, i, in, kp);
            if (i < r) {
                for (std::size_t l = 0; l < 8; ++l)
                    model.system.push(out[l] - var(model.var_x1(i, l)));
                in = state_x([&](std::size_t l) { return model.var_x1(i, l); });
            } else {
                for (std::size_t l = 0; l < 8; ++l)
                    model.system.push(out[l] + yz[l] - MPoly::constant(ring, f.reduce(outputs.c1[l])));
            }
        }
    }
    // rolling equation
    {
        auto alt1 = [&](std::size_t base) {
            return yz[base] - yz[base + 1] + yz[base + 2] - yz[base + 3];
        };
        auto alt2 = [&](std::size_t base) {
            return yz[base] + yz[base + 1] - yz[base + 2] - yz[base + 3];
        };
        MPoly gy = alt1(0) * alt2(4);
        MPoly gz = alt1(4) * alt2(0);
        Poly8 u{MPoly(ring), MPoly(ring), MPoly(ring), MPoly(ring),
                MPoly(ring), MPoly(ring), MPoly(ring), MPoly(ring)};
        for (std::size_t l = 0; l < 4; ++l) u[l] = yz[l] + gy;
        for (std::size_t l = 0; l < 4; ++l) u[4 + l] = yz[4 + l] + gz;
        DenseMatrix mr = p.mr();
        for (std::size_t m = 0; m < 8; ++m) {
            MPoly acc(ring);
            for (std::size_t l = 0; l < 8; ++l) acc = acc + u[l].scale(mr.at(m, l));
            acc = acc + MPoly::constant(ring, p.rolling_constant[m]);
            model.system.push(acc - var(model.var_x2(0, m)));
        }
    }
    // f2 rounds
    {
        Poly8 in = state_x([&](std::size_t l) { return model.var_x2(0, l); });
        for (std::size_t i = 1; i <= r; ++i) {
            Poly8 out = symbolic_head_round(model, i, in, kp);
            if (i < r) {
                for (std::size_t l = 0; l < 8; ++l)
                    model.system.push(out[l] - var(model.var_x2(i, l)));
                in = state_x([&](std::size_t l) { return model.var_x2(i, l); });
            } else {
                for (std::size_t l = 0; l < 8; ++l)
                    model.system.push(out[l] + var(model.var_x2(0, l)) -
                                      MPoly::constant(ring, f.reduce(outputs.c2[l])));
            }
        }
    }
    return model;
}

PolySystem hydra_transform(const HydraModel& model) {
    const HydraParams& p = model.params;
    const RingPtr& ring = model.system.ring;
    auto mj_inv = p.mj.inverse();
    if (!mj_inv) throw SingularMatrix("M_J is singular");
    auto mr_inv = p.mr().inverse();
    if (!mr_inv) throw SingularMatrix("M_R is singular");

    auto block = [&](std::size_t first) {
        std::vector<const MPoly*> b(8);
        for (std::size_t l = 0; l < 8; ++l) b[l] = &model.system.polys[first + l];
        return b;
    };
    auto apply = [&](const DenseMatrix& m, const std::vector<const MPoly*>& b) {
        std::vector<MPoly> out;
        out.reserve(8);
        for (std::size_t i = 0; i < 8; ++i) {
            MPoly acc(ring);
            for (std::size_t l = 0; l < 8; ++l) acc = acc + b[l]->scale(m.at(i, l));
            out.push_back(std::move(acc));
        }
        return out;
    };

    const std::size_t r = p.rh;
    PolySystem G(ring);
    auto push_head_block = [&](std::size_t first) {
        std::vector<MPoly> v = apply(*mj_inv, block(first));
        // A8: subtract the eighth component from the first seven
        for (std::size_t m = 0; m < 7; ++m) {
            MPoly g = v[m] - v[7];
            if (g.total_degree() > 1) throw InvalidParams("head block component not affine");
            G.push(std::move(g), PolyRole::Affine);
        }
        if (v[7].total_degree() != 2) throw InvalidParams("head block quadratic missing");
        G.push(std::move(v[7]), PolyRole::Quadratic);
    };
    for (std::size_t i = 0; i < r; ++i) push_head_block(8 * i);
    {
        std::vector<MPoly> v = apply(*mr_inv, block(8 * r));
        // B = diag(A4, A4)
        for (std::size_t half = 0; half < 2; ++half) {
            for (std::size_t m = 0; m < 3; ++m) {
                MPoly g = v[4 * half + m] - v[4 * half + 3];
                if (g.total_degree() > 1) throw InvalidParams("rolling component not affine");
                G.push(std::move(g), PolyRole::Affine);
            }
            if (v[4 * half + 3].total_degree() != 2) throw InvalidParams("rolling quadratic missing");
            G.push(v[4 * half + 3], PolyRole::Quadratic);
        }
    }
    for (std::size_t i = 0; i < r; ++i) push_head_block(8 * (r + 1) + 8 * i);
    return G;
}

namespace {

// the 2r alternating-sign input forms whose squares are the head quadratics;
// index j*r + (i-1) for sample j in {0,1} and round i in [1, r]
std::vector<MPoly> head_square_forms(const HydraModel& model) {
    const RingPtr& ring = model.system.ring;
    const std::size_t r = model.params.rh;
    auto var = [&](std::size_t i) { return MPoly::variable(ring, i); };
    std::vector<MPoly> forms;
    forms.reserve(2 * r);
    for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t i = 1; i <= r; ++i) {
            MPoly s(ring);
            for (std::size_t l = 0; l < 8; ++l) {
                std::size_t v;
                if (j == 0)
                    v = (i == 1) ? (l < 4 ? model.var_y(l) : model.var_z(l - 4)) : model.var_x1(i - 1, l);
                else
                    v = model.var_x2(i - 1, l);
                s = (l < 4) ? s + var(v) : s - var(v);
            }
            forms.push_back(std::move(s));
        }
    return forms;
}

} // namespace

RankCheck generic_coordinates_check(const PolySystem& G, const HydraModel& model) {
    if (!G.ring->compatible(*model.system.ring)) throw RingMismatch();
    const HydraParams& p = model.params;
    const PrimeField& f = p.field;
    const std::size_t r = p.rh;
    const std::size_t n = model.system.ring->nvars();
    auto mj_inv = p.mj.inverse();
    auto mr_inv = p.mr().inverse();
    if (!mj_inv || !mr_inv) throw SingularMatrix("transform matrices are singular");

    std::vector<std::vector<u128>> rows;
    auto new_row = [&]() -> std::vector<u128>& {
        rows.emplace_back(n, 0);
        return rows.back();
    };
    auto add = [&](std::vector<u128>& row, std::size_t var, u128 c) {
        row[var] = f.add(row[var], f.reduce(c));
    };
    // coefficient of variable `var` contributed via (MJ^-1 kprime)_m rows
    auto add_kprime = [&](std::vector<u128>& row, std::size_t m, u128 sign_c) {
        // kprime_l = k_l for l < 4, (ME k)_{l-4} otherwise
        for (std::size_t l = 0; l < 8; ++l) {
            u128 c = f.mul(mj_inv->at(m, l), sign_c);
            if (l < 4)
                add(row, model.var_k(l), c);
            else
                for (std::size_t t = 0; t < 4; ++t)
                    add(row, model.var_k(t), f.mul(c, p.me.at(l - 4, t)));
        }
    };
    auto input_var = [&](std::size_t j, std::size_t i, std::size_t l) {
        // input state of head block (sample j, round i)
        if (j == 0 && i == 1) return l < 4 ? model.var_y(l) : model.var_z(l - 4);
        if (j == 0) return model.var_x1(i - 1, l);
        return model.var_x2(i - 1, l);
    };

    const u128 one = 1;
    for (std::size_t j = 0; j < 2; ++j) {
        for (std::size_t i = 1; i <= r; ++i) {
            if (i < r) {
                // rows: in_k - in_8 + (MJ^-1 (k' - next))_k + (MJ^-1 (next - k'))_8
                for (std::size_t kk = 0; kk < 7; ++kk) {
                    auto& row = new_row();
                    add(row, input_var(j, i, kk), one);
                    add(row, input_var(j, i, 7), f.neg(one));
                    add_kprime(row, kk, one);
                    add_kprime(row, 7, f.neg(one));
                    for (std::size_t l = 0; l < 8; ++l) {
                        std::size_t next = (j == 0) ? model.var_x1(i, l) : model.var_x2(i, l);
                        add(row, next, f.neg(mj_inv->at(kk, l)));
                        add(row, next, mj_inv->at(7, l));
                    }
                }
            } else {
                // rows: in_k - in_8 + (MJ^-1 (k' + fb))_k - (MJ^-1 (k' + fb))_8,
                // fb = (y, z) for sample 1 and x_2^(0) for sample 2
                for (std::size_t kk = 0; kk < 7; ++kk) {
                    auto& row = new_row();
                    add(row, input_var(j, i, kk), one);
                    add(row, input_var(j, i, 7), f.neg(one));
                    add_kprime(row, kk, one);
                    add_kprime(row, 7, f.neg(one));
                    for (std::size_t l = 0; l < 8; ++l) {
                        std::size_t fb = (j == 0) ? (l < 4 ? model.var_y(l) : model.var_z(l - 4))
                                                  : model.var_x2(0, l);
                        add(row, fb, mj_inv->at(kk, l));
                        add(row, fb, f.neg(mj_inv->at(7, l)));
                    }
                }
            }
            // the square-root form of this block's quadratic
            auto& row = new_row();
            for (std::size_t l = 0; l < 8; ++l)
                add(row, input_var(j, i, l), l < 4 ? one : f.neg(one));
        }
    }
    // rolling rows
    for (std::size_t half = 0; half < 2; ++half)
        for (std::size_t m = 0; m < 3; ++m) {
            auto& row = new_row();
            std::size_t a = half == 0 ? model.var_y(m) : model.var_z(m);
            std::size_t b = half == 0 ? model.var_y(3) : model.var_z(3);
            add(row, a, one);
            add(row, b, f.neg(one));
            for (std::size_t l = 0; l < 8; ++l) {
                add(row, model.var_x2(0, l), f.neg(mr_inv->at(4 * half + m, l)));
                add(row, model.var_x2(0, l), mr_inv->at(4 * half + 3, l));
            }
        }

    DenseMatrix m = DenseMatrix::from_rows(f, rows);
    RrefResult rr = rref(m);
    RankCheck rc;
    rc.rank = rr.rank;
    rc.expected = 16 * r + 4;
    rc.full_rank = rr.rank == rc.expected;
    return rc;
}

AffineElimination eliminate_affine(const PolySystem& G, const HydraModel& model) {
    const PrimeField& f = model.params.field;
    const std::size_t r = model.params.rh;
    const std::size_t n = model.system.ring->nvars();
    const std::size_t expected = 2 * 7 * r + 6;

    std::vector<const MPoly*> affine;
    std::vector<const MPoly*> quads;
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (G.roles.at(i) == PolyRole::Affine)
            affine.push_back(&G.polys[i]);
        else
            quads.push_back(&G.polys[i]);
    }
    if (affine.size() != expected || quads.size() != 2 * r + 2)
        throw InvalidParams("unexpected transformed block degrees");

    DenseMatrix m(f, affine.size(), n + 1);
    for (std::size_t row = 0; row < affine.size(); ++row)
        for (const auto& [mm, c] : affine[row]->terms()) {
            if (mm.is_one()) {
                m.set(row, n, c);
            } else {
                std::size_t v;
                mm.is_pure_power(&v);
                m.set(row, v, c);
            }
        }
    RrefResult rr = rref(m);
    std::size_t var_rank = 0;
    for (std::size_t pc : rr.pivots)
        if (pc < n) ++var_rank;
    if (var_rank != expected) throw AffineRankDeficit(var_rank, expected);

    AffineElimination elim;
    elim.affine_rank = var_rank;
    elim.substitution.assign(n, std::nullopt);
    std::vector<bool> eliminated(n, false);
    const RingPtr& ring = model.system.ring;
    for (std::size_t row = 0; row < rr.rank; ++row) {
        std::size_t pv = rr.pivots[row];
        eliminated[pv] = true;
        MPoly expr(ring);
        for (std::size_t c = pv + 1; c < n; ++c)
            if (rr.reduced.at(row, c) != 0)
                expr.add_term(Monomial::variable(n, c), f.neg(rr.reduced.at(row, c)));
        if (rr.reduced.at(row, n) != 0) expr.add_term(Monomial(n), f.neg(rr.reduced.at(row, n)));
        elim.substitution[pv] = std::move(expr);
    }
    for (std::size_t v = 0; v < n; ++v)
        if (!eliminated[v]) elim.surviving.push_back(v);
    // RREF tails only touch non-pivot columns, so every substitution
    // expression is already supported on the surviving variables

    elim.reduced = PolySystem(ring);
    for (const MPoly* q : quads) {
        MPoly red = q->substitute(elim.substitution);
        elim.reduced.push(std::move(red), PolyRole::Quadratic);
    }
    // reorder to: head sample 1 rounds 1..r, head sample 2 rounds 1..r, rolling
    // (transform emitted: sample-1 heads, rolling pair, sample-2 heads)
    {
        std::vector<MPoly> ordered;
        ordered.reserve(quads.size());
        for (std::size_t i = 0; i < r; ++i) ordered.push_back(elim.reduced.polys[i]);
        for (std::size_t i = 0; i < r; ++i) ordered.push_back(elim.reduced.polys[r + 2 + i]);
        ordered.push_back(elim.reduced.polys[r]);
        ordered.push_back(elim.reduced.polys[r + 1]);
        elim.reduced.polys = std::move(ordered);
        elim.reduced.roles.assign(elim.reduced.polys.size(), PolyRole::Quadratic);
    }
    return elim;
}

HydraGb change_of_coordinates(const HydraModel& model, const AffineElimination& elim) {
    const HydraParams& p = model.params;
    const PrimeField& f = p.field;
    const std::size_t r = p.rh;
    const std::size_t nfree = elim.surviving.size();
    if (nfree != 2 * r - 2) throw InvalidParams("unexpected surviving variable count");

    std::vector<MPoly> forms = head_square_forms(model);
    std::vector<MPoly> tilde;
    tilde.reserve(forms.size());
    for (const MPoly& l : forms) tilde.push_back(l.substitute(elim.substitution));

    std::vector<long> col_of(model.system.ring->nvars(), -1);
    for (std::size_t i = 0; i < nfree; ++i) col_of[elim.surviving[i]] = static_cast<long>(i);
    auto linear_row = [&](const MPoly& g) {
        std::vector<u128> row(nfree, 0);
        for (const auto& [m, c] : g.terms()) {
            if (m.is_one()) continue;
            std::size_t v;
            m.is_pure_power(&v);
            row[static_cast<std::size_t>(col_of[v])] = c;
        }
        return row;
    };

    // greedy selection: sample-1 rounds 3..r first, then sample-2 rounds
    // 1..r, then sample-1 rounds 1..2
    std::vector<std::size_t> candidates;
    for (std::size_t i = 3; i <= r; ++i) candidates.push_back(i - 1);
    for (std::size_t i = 1; i <= r; ++i) candidates.push_back(r + i - 1);
    candidates.push_back(0);
    candidates.push_back(1);

    std::vector<std::size_t> selected;
    std::vector<std::vector<u128>> rows;
    std::size_t rank = 0;
    for (std::size_t idx : candidates) {
        if (selected.size() == nfree) break;
        rows.push_back(linear_row(tilde[idx]));
        RrefResult rr = rref_serial(DenseMatrix::from_rows(f, rows));
        if (rr.rank > rank) {
            rank = rr.rank;
            selected.push_back(idx);
        } else {
            rows.pop_back();
        }
    }
    if (selected.size() != nfree)
        throw ChangeOfCoordinatesFailed("independent head forms span only rank " + std::to_string(rank));

    DenseMatrix M = DenseMatrix::from_rows(f, rows);
    auto Minv = M.inverse();
    if (!Minv) throw ChangeOfCoordinatesFailed("selected form matrix is singular");

    std::vector<std::string> hat_names;
    for (std::size_t i = 1; i <= nfree; ++i) hat_names.push_back("xh" + std::to_string(i));
    RingPtr hat = make_ring(f, std::move(hat_names));

    // x_surviving = M^-1 xhat
    std::vector<std::optional<MPoly>> to_hat(model.system.ring->nvars());
    for (std::size_t j = 0; j < nfree; ++j) {
        MPoly e(hat);
        for (std::size_t i = 0; i < nfree; ++i)
            if (Minv->at(j, i) != 0) e.add_term(Monomial::variable(nfree, i), Minv->at(j, i));
        to_hat[elim.surviving[j]] = std::move(e);
    }

    const TermOrder drl = TermOrder::drl();
    HydraGb out{PolySystem(hat), PolySystem(hat),
                CoordinateChange{M, *Minv, selected, hat, elim}};
    std::vector<bool> used(2 * r, false);
    for (std::size_t pos = 0; pos < selected.size(); ++pos) {
        used[selected[pos]] = true;
        MPoly g = elim.reduced.polys[selected[pos]].substitute(to_hat).monic(drl);
        Monomial lm = g.leading_monomial(drl);
        std::size_t v;
        if (!lm.is_pure_power(&v) || v != pos || lm.degree() != 2)
            throw ChangeOfCoordinatesFailed("transformed member misses its pure-square leading monomial");
        out.gb.push(std::move(g), PolyRole::BooleanBasis);
    }
    for (std::size_t idx = 0; idx < 2 * r; ++idx)
        if (!used[idx]) out.extras.push(elim.reduced.polys[idx].substitute(to_hat), PolyRole::Quadratic);
    out.extras.push(elim.reduced.polys[2 * r].substitute(to_hat), PolyRole::Quadratic);
    out.extras.push(elim.reduced.polys[2 * r + 1].substitute(to_hat), PolyRole::Quadratic);
    return out;
}

std::vector<u128> hydra_pullback(const HydraModel& model, const CoordinateChange& change,
                                 const std::vector<u128>& hat_values) {
    const std::size_t n = model.system.ring->nvars();
    const AffineElimination& elim = change.elim;
    std::vector<u128> full(n, 0);
    std::vector<u128> xs = change.m_inv.mul_vec(hat_values);
    for (std::size_t j = 0; j < elim.surviving.size(); ++j) full[elim.surviving[j]] = xs[j];
    for (std::size_t v = 0; v < n; ++v)
        if (elim.substitution[v]) full[v] = elim.substitution[v]->eval(full);
    return full;
}

} // namespace gbc
