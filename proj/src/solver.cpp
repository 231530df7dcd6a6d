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

#include "gbc/solver.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

namespace gbc {

MultiplicationMatrix multiplication_matrix(const PolySystem& G, const TermOrder& order, std::size_t var) {
    std::vector<Monomial> basis = quotient_basis(G, order);
    const PrimeField& f = G.ring->field;
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);

    DenseMatrix m(f, basis.size(), basis.size());
    const std::size_t n = G.ring->nvars();
    for (std::size_t b = 0; b < basis.size(); ++b) {
        Monomial shifted = basis[b] * Monomial::variable(n, var);
        auto hit = index.find(shifted);
        if (hit != index.end()) {
            m.set(b, hit->second, 1); // still a standard monomial
            continue;
        }
        MPoly nf = reduce(MPoly::term(G.ring, shifted, 1), G, order);
        for (const auto& [mono, c] : nf.terms()) {
            auto it = index.find(mono);
            if (it == index.end()) throw NotZeroDimensional("normal form escaped the staircase");
            m.set(b, it->second, c);
        }
    }
    return MultiplicationMatrix{std::move(m), std::move(basis), var};
}

UniPoly polymatrix_det(std::vector<std::vector<UniPoly>> m, const PrimeField& f) {
    const std::size_t n = m.size();
    if (n == 0) return UniPoly::constant(f, 1);
    bool negate = false;
    UniPoly prev = UniPoly::constant(f, 1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = n;
        for (std::size_t r = k; r < n; ++r)
            if (!m[r][k].is_zero()) { piv = r; break; }
        if (piv == n) return UniPoly::zero(f);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                UniPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto [q, r] = num.divmod(prev);
                if (!r.is_zero()) throw Error("fraction-free elimination lost exactness");
                m[i][j] = std::move(q);
            }
            m[i][k] = UniPoly::zero(f);
        }
        prev = m[k][k];
    }
    UniPoly det = m[n - 1][n - 1];
    return negate ? det.scale(f.neg(1)) : det;
}

UniPoly block_charpoly(const PolySystem& G, const TermOrder& order) {
    const PrimeField& f = G.ring->field;
    const std::size_t n = G.ring->nvars();
    for (const MPoly& g : G.polys) {
        std::size_t v;
        if (g.is_zero() || !g.leading_monomial(order).is_pure_power(&v))
            throw NotZeroDimensional("block structure needs pure-power leading monomials");
    }
    const std::size_t last = order.ranking.empty() ? n - 1 : order.ranking[n - 1];

    MultiplicationMatrix mm = multiplication_matrix(G, order, last);
    const std::size_t dim = mm.basis.size();
    // block order sorts by the exponent of the least variable first
    std::size_t dn = 0;
    for (const Monomial& b : mm.basis) dn = std::max<std::size_t>(dn, b.exp(last) + 1u);
    if (dim % dn != 0) throw NotZeroDimensional("staircase is not a product block");
    const std::size_t D = dim / dn;

    // bottom block row holds A_0 ... A_{dn-1}
    std::vector<std::vector<UniPoly>> pm(D, std::vector<UniPoly>(D, UniPoly::zero(f)));
    for (std::size_t i = 0; i < D; ++i) {
        // x^{dn} on the diagonal
        std::vector<u128> c(dn + 1, 0);
        c[dn] = 1;
        pm[i][i] = UniPoly(f, c);
    }
    for (std::size_t rowp = 0; rowp < D; ++rowp) {
        std::size_t row = (dn - 1) * D + rowp;
        for (std::size_t block = 0; block < dn; ++block)
            for (std::size_t colp = 0; colp < D; ++colp) {
                u128 a = mm.matrix.at(row, block * D + colp);
                if (a == 0) continue;
                std::vector<u128> c(block + 1, 0);
                c[block] = f.neg(a);
                pm[rowp][colp] = pm[rowp][colp] + UniPoly(f, c);
            }
    }
    return polymatrix_det(std::move(pm), f).monic();
}

namespace {

struct SearchContext {
    const PolySystem* original;
    const PolySystem* filter;
    const TermOrder* order;
    const PrimeField* field;
    RingPtr ring;
    SolveOptions opts;
    SolveStats stats;
    std::vector<std::vector<u128>> found;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void check_budget() {
        if (++stats.branches > opts.budget) throw BudgetExceeded("search budget exhausted");
        if (opts.budget_ms > 0) {
            auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
            if (ms.count() > opts.budget_ms) throw BudgetExceeded("wall-clock budget exhausted");
        }
    }
};

bool quadratic_part_contains(const MPoly& p, std::size_t v) {
    for (const auto& [m, c] : p.terms())
        if (m.degree() >= 2 && m.exp(v) > 0) return true;
    return false;
}

UniPoly charpoly_of_least(const std::vector<MPoly>& polys, const std::vector<std::size_t>& active,
                          const RingPtr& ring) {
    const PrimeField& f = ring->field;
    std::vector<std::string> names;
    for (std::size_t v : active) names.push_back(ring->vars[v]);
    RingPtr sub = make_ring(f, std::move(names));
    std::vector<long> to_sub(ring->nvars(), -1);
    for (std::size_t i = 0; i < active.size(); ++i) to_sub[active[i]] = static_cast<long>(i);

    PolySystem S(sub);
    for (const MPoly& p : polys) {
        MPoly q(sub);
        for (const auto& [m, c] : p.terms()) {
            std::vector<std::uint16_t> e(active.size(), 0);
            for (std::size_t v = 0; v < ring->nvars(); ++v) {
                if (m.exp(v) == 0) continue;
                if (to_sub[v] < 0) throw ShapeViolation("inactive variable still present");
                e[static_cast<std::size_t>(to_sub[v])] = m.exp(v);
            }
            q.add_term(Monomial(std::move(e)), c);
        }
        S.push(std::move(q));
    }
    return block_charpoly(S, TermOrder::drl());
}

void eigen_recurse(SearchContext& ctx, std::vector<MPoly> polys, std::vector<std::size_t> active,
                   std::vector<std::optional<u128>> assignment,
                   std::vector<std::pair<std::size_t, MPoly>> deferred) {
    const PrimeField& f = *ctx.field;
    const TermOrder& order = *ctx.order;
    ctx.check_budget();

    // propagate values and safe affine eliminations; affine members with no
    // usable variable simply ride along as extra constraints
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t idx = 0; idx < polys.size(); ++idx) {
            const MPoly& p = polys[idx];
            if (p.is_zero()) {
                polys.erase(polys.begin() + static_cast<long>(idx));
                --idx;
                changed = true;
                continue;
            }
            long deg = p.total_degree();
            if (deg == 0) return; // nonzero constant: dead branch
            if (deg != 1) continue;

            std::vector<std::size_t> vars;
            for (std::size_t v : active) {
                bool present = false;
                for (const auto& [m, c] : p.terms())
                    if (m.exp(v) > 0) { present = true; break; }
                if (present) vars.push_back(v);
            }
            if (vars.size() == 1) {
                // direct value: a*v + b = 0
                std::size_t v = vars[0];
                u128 a = p.coeff(Monomial::variable(ctx.ring->nvars(), v));
                u128 b = p.coeff(Monomial(ctx.ring->nvars()));
                u128 value = f.mul(f.neg(b), f.inv(a));
                assignment[v] = value;
                active.erase(std::find(active.begin(), active.end(), v));
                std::vector<MPoly> next;
                for (std::size_t j = 0; j < polys.size(); ++j) {
                    if (j == idx) continue;
                    next.push_back(polys[j].substitute_value(v, value));
                }
                polys = std::move(next);
                changed = true;
                break;
            }
            // rearrange for the greatest variable whose removal keeps every
            // other variable covered: the members it drops (their quadratic
            // part holds v) must all have leading monomial v^2, and those are
            // re-checked at the leaf against the original system
            std::size_t chosen = ctx.ring->nvars();
            for (std::size_t v : vars) {
                bool safe = true;
                for (std::size_t j = 0; j < polys.size() && safe; ++j) {
                    if (j == idx || !quadratic_part_contains(polys[j], v)) continue;
                    std::size_t lv;
                    Monomial lm = polys[j].leading_monomial(order);
                    if (!(lm.degree() == 2 && lm.is_pure_power(&lv) && lv == v)) safe = false;
                }
                if (safe) { chosen = v; break; } // vars is in ring order, greatest first
            }
            if (chosen == ctx.ring->nvars()) continue; // stuck affine: keep as a constraint
            u128 a = p.coeff(Monomial::variable(ctx.ring->nvars(), chosen));
            MPoly expr = (p - MPoly::variable(ctx.ring, chosen).scale(a)).scale(f.neg(f.inv(a)));
            std::vector<std::optional<MPoly>> repl(ctx.ring->nvars());
            repl[chosen] = expr;
            deferred.emplace_back(chosen, expr);
            active.erase(std::find(active.begin(), active.end(), chosen));
            std::vector<MPoly> next;
            for (std::size_t j = 0; j < polys.size(); ++j) {
                if (j == idx) continue;
                if (quadratic_part_contains(polys[j], chosen)) continue;
                next.push_back(polys[j].substitute(repl));
            }
            polys = std::move(next);
            changed = true;
            break;
        }
    }

    if (active.empty()) {
        if (!polys.empty()) return; // leftover nonzero member
        // resolve deferred bindings, newest first
        std::vector<u128> values(ctx.ring->nvars(), 0);
        for (std::size_t v = 0; v < values.size(); ++v)
            if (assignment[v]) values[v] = *assignment[v];
        for (std::size_t i = deferred.size(); i-- > 0;) {
            values[deferred[i].first] = deferred[i].second.eval(values);
            assignment[deferred[i].first] = values[deferred[i].first];
        }
        for (const MPoly& g : ctx.original->polys)
            if (g.eval(values) != 0) return;
        if (ctx.filter)
            for (const MPoly& g : ctx.filter->polys)
                if (g.eval(values) != 0) return;
        ++ctx.stats.verified;
        ctx.found.push_back(values);
        return;
    }

    // pick one pure-square member per active variable for the companion step
    std::vector<MPoly> core;
    {
        std::vector<bool> covered(ctx.ring->nvars(), false);
        for (const MPoly& p : polys) {
            if (p.total_degree() != 2) continue;
            std::size_t v;
            Monomial lm = p.leading_monomial(order);
            if (lm.degree() == 2 && lm.is_pure_power(&v) && !covered[v]) {
                covered[v] = true;
                core.push_back(p);
            }
        }
        for (std::size_t v : active)
            if (!covered[v]) throw ShapeViolation("a variable has no pure-square member");
    }

    std::size_t last = active.back();
    ++ctx.stats.charpolys;
    UniPoly chi = charpoly_of_least(core, active, ctx.ring);
    std::vector<u128> roots = uni_roots(chi, RootMethod::Auto, ctx.opts.seed);
    std::size_t explored = 0;
    for (u128 alpha : roots) {
        if (ctx.opts.root_cap && explored >= *ctx.opts.root_cap) break;
        ++explored;
        std::vector<MPoly> next;
        next.reserve(polys.size());
        for (const MPoly& p : polys) next.push_back(p.substitute_value(last, alpha));
        std::vector<std::size_t> nact(active.begin(), active.end() - 1);
        auto nassign = assignment;
        nassign[last] = alpha;
        eigen_recurse(ctx, std::move(next), std::move(nact), std::move(nassign), deferred);
    }
}

} // namespace

std::vector<std::vector<u128>> eigen_solve(const PolySystem& G, const TermOrder& order,
                                           const SolveOptions& opts, const PolySystem* filter,
                                           SolveStats* stats) {
    if (G.empty()) throw ShapeViolation("empty system");
    SearchContext ctx{&G, filter, &order, &G.ring->field, G.ring, opts, {}, {}};
    std::vector<std::size_t> active;
    std::vector<std::size_t> ranked(G.ring->nvars());
    for (std::size_t r = 0; r < ranked.size(); ++r)
        ranked[r] = order.ranking.empty() ? r : order.ranking[r];
    active = ranked; // greatest first; back() is the order-least variable
    std::vector<std::optional<u128>> assignment(G.ring->nvars());
    eigen_recurse(ctx, G.polys, std::move(active), std::move(assignment), {});
    std::sort(ctx.found.begin(), ctx.found.end());
    ctx.found.erase(std::unique(ctx.found.begin(), ctx.found.end()), ctx.found.end());
    if (stats) *stats = ctx.stats;
    return ctx.found;
}

PolySystem fglm(const PolySystem& Gdrl, const TermOrder& drl_order, const TermOrder& lex_order,
                std::size_t dim_budget) {
    const PrimeField& f = Gdrl.ring->field;
    const std::size_t n = Gdrl.ring->nvars();
    std::vector<Monomial> basis = quotient_basis(Gdrl, drl_order);
    const std::size_t dim = basis.size();
    if (dim > dim_budget) throw BudgetExceeded("quotient dimension above the FGLM budget");
    std::map<Monomial, std::size_t> basis_index;
    for (std::size_t i = 0; i < dim; ++i) basis_index.emplace(basis[i], i);

    std::vector<DenseMatrix> mul;
    mul.reserve(n);
    for (std::size_t v = 0; v < n; ++v) mul.push_back(multiplication_matrix(Gdrl, drl_order, v).matrix);

    struct Row {
        std::vector<u128> vec;   // reduced normal form, pivot normalized to 1
        std::vector<u128> combo; // expression over the staircase list
        std::size_t pivot;
    };
    std::vector<Row> rows;
    std::vector<Monomial> staircase;
    std::vector<std::vector<u128>> stair_nf;
    std::vector<Monomial> lex_lms;
    PolySystem out(Gdrl.ring);

    struct LexLess {
        const TermOrder* o;
        bool operator()(const Monomial& a, const Monomial& b) const { return o->less(a, b); }
    };
    // frontier entries remember which staircase member and variable spawned them
    std::map<Monomial, std::pair<std::size_t, std::size_t>, LexLess> frontier{LexLess{&lex_order}};
    std::set<Monomial> seen;

    auto nf_of = [&](std::size_t parent, std::size_t var) {
        std::vector<u128> w(dim, 0);
        const std::vector<u128>& pv = stair_nf[parent];
        for (std::size_t i = 0; i < dim; ++i) {
            if (pv[i] == 0) continue;
            for (std::size_t j = 0; j < dim; ++j)
                w[j] = f.add(w[j], f.mul(pv[i], mul[var].at(i, j)));
        }
        return w;
    };

    // returns true when the monomial extended the staircase
    auto handle = [&](const Monomial& m, std::vector<u128> w_raw) {
        std::vector<u128> w = w_raw;
        std::vector<u128> combo(staircase.size(), 0);
        for (const Row& r : rows) {
            u128 c = w[r.pivot];
            if (c == 0) continue;
            for (std::size_t j = 0; j < dim; ++j) w[j] = f.sub(w[j], f.mul(c, r.vec[j]));
            for (std::size_t j = 0; j < r.combo.size(); ++j)
                combo[j] = f.add(combo[j], f.mul(c, r.combo[j]));
        }
        std::size_t pivot = dim;
        for (std::size_t j = 0; j < dim; ++j)
            if (w[j] != 0) { pivot = j; break; }
        if (pivot == dim) {
            MPoly g = MPoly::term(Gdrl.ring, m, 1);
            for (std::size_t j = 0; j < staircase.size(); ++j)
                if (combo[j] != 0) g.add_term(staircase[j], f.neg(combo[j]));
            lex_lms.push_back(m);
            out.push(std::move(g));
            return false;
        }
        u128 inv = f.inv(w[pivot]);
        Row r;
        r.pivot = pivot;
        r.vec.resize(dim);
        for (std::size_t j = 0; j < dim; ++j) r.vec[j] = f.mul(w[j], inv);
        r.combo.resize(staircase.size() + 1, 0);
        for (std::size_t j = 0; j < staircase.size(); ++j) r.combo[j] = f.mul(f.neg(combo[j]), inv);
        r.combo[staircase.size()] = inv;
        staircase.push_back(m);
        stair_nf.push_back(std::move(w_raw));
        rows.push_back(std::move(r));
        return true;
    };

    // seed with the monomial 1
    {
        Monomial one(n);
        std::vector<u128> w(dim, 0);
        auto it = basis_index.find(one);
        if (it == basis_index.end()) throw NotZeroDimensional("1 is not a standard monomial");
        w[it->second] = 1;
        handle(one, std::move(w));
        seen.insert(one);
        for (std::size_t v = 0; v < n; ++v) {
            Monomial cand = Monomial::variable(n, v);
            frontier.emplace(cand, std::make_pair(std::size_t{0}, v));
            seen.insert(cand);
        }
    }

    while (!frontier.empty()) {
        auto it = frontier.begin();
        Monomial m = it->first;
        auto [parent, var] = it->second;
        frontier.erase(it);
        bool lm_multiple = false;
        for (const Monomial& lm : lex_lms)
            if (lm.divides(m)) { lm_multiple = true; break; }
        if (lm_multiple) continue;
        std::vector<u128> w = nf_of(parent, var);
        if (handle(m, std::move(w))) {
            std::size_t me = staircase.size() - 1;
            for (std::size_t v = 0; v < n; ++v) {
                Monomial cand = m * Monomial::variable(n, v);
                if (seen.insert(cand).second) frontier.emplace(cand, std::make_pair(me, v));
            }
        }
        if (staircase.size() > dim) throw Error("staircase exceeded the quotient dimension");
    }
    if (staircase.size() != dim) throw NotZeroDimensional("LEX staircase dimension mismatch");

    std::sort(out.polys.begin(), out.polys.end(), [&](const MPoly& a, const MPoly& b) {
        return lex_order.greater(a.leading_monomial(lex_order), b.leading_monomial(lex_order));
    });
    return interreduce(out, lex_order);
}

CiminionAttack recover_ciminion_key(const CiminionParams& params, const CiminionSample& sample,
                                    const SolveOptions& opts) {
    const PrimeField& f = params.field;
    CiminionAttack out;
    CiminionModel model = ciminion_build_model(params, sample);
    PolySystem gb = ciminion_gb(model);

    auto verify_and_push = [&](u128 k1, u128 k2) {
        auto [c1, c2] = ciminion_encrypt(params, k1, k2, sample.nonce, sample.p1, sample.p2);
        if (c1 == sample.c1 && c2 == sample.c2) {
            out.keys.push_back(CiminionKeyResult{k1, k2});
            ++out.stats.verified;
        }
    };

    if (params.variant == CiminionVariant::Standard) {
        out.strategy = "bariant-gcd";
        UniPoly fx = bariant_polynomial(params, sample);
        std::vector<u128> roots = uni_roots(fx, RootMethod::Auto, opts.seed);
        for (u128 x : roots) {
            ++out.stats.branches;
            State3 st{f.sub(sample.c1, f.reduce(sample.p1)), f.sub(sample.c2, f.reduce(sample.p2)), x};
            for (std::size_t i = params.rounds(); i >= 1; --i) st = ciminion_round_inverse(params, i, st);
            if (st[0] != f.reduce(sample.nonce)) continue;
            verify_and_push(st[1], st[2]);
        }
    } else {
        out.strategy = "eigenvalue";
        DownsizedSystem ds = ciminion_downsize(model, gb);
        std::vector<std::vector<u128>> sols = eigen_solve(ds.system, TermOrder::drl(), opts, nullptr, &out.stats);
        // the linear members with leading variables y1, y2 recover the key
        const MPoly* row_y1 = nullptr;
        const MPoly* row_y2 = nullptr;
        for (const MPoly& g : gb.polys) {
            if (g.total_degree() != 1) continue;
            std::size_t v;
            if (!g.leading_monomial(model.order).is_pure_power(&v)) continue;
            if (v == 0) row_y1 = &g;
            if (v == 1) row_y2 = &g;
        }
        if (!row_y1 || !row_y2) throw Error("groebner basis misses the key rows");
        for (const auto& sol : sols) {
            std::vector<u128> full(model.system.ring->nvars(), 0);
            for (std::size_t i = 0; i < ds.model_var.size(); ++i) full[ds.model_var[i]] = sol[i];
            // rows read v + tail = 0; with v unset (0) the evaluation is the tail
            u128 k1 = f.neg(row_y1->eval(full));
            u128 k2 = f.neg(row_y2->eval(full));
            verify_and_push(k1, k2);
        }
    }
    std::sort(out.keys.begin(), out.keys.end(), [](const CiminionKeyResult& a, const CiminionKeyResult& b) {
        return a.k1 != b.k1 ? a.k1 < b.k1 : a.k2 < b.k2;
    });
    out.keys.erase(std::unique(out.keys.begin(), out.keys.end(),
                               [](const CiminionKeyResult& a, const CiminionKeyResult& b) {
                                   return a.k1 == b.k1 && a.k2 == b.k2;
                               }),
                   out.keys.end());
    if (out.keys.empty()) throw NoSolution("no candidate key survived verification");
    return out;
}

HydraAttack recover_hydra_key(const HydraParams& params, const HydraSamplePair& outputs,
                              const SolveOptions& opts) {
    HydraAttack out;
    out.strategy = "eigenvalue";
    HydraModel model = hydra_build_model(params, outputs);
    PolySystem G = hydra_transform(model);
    AffineElimination elim = eliminate_affine(G, model);
    HydraGb hgb = change_of_coordinates(model, elim);
    std::vector<std::vector<u128>> sols =
        eigen_solve(hgb.gb, TermOrder::drl(), opts, &hgb.extras, &out.stats);
    for (const auto& sol : sols) {
        std::vector<u128> full = hydra_pullback(model, hgb.change, sol);
        HydraWitness w;
        for (std::size_t l = 0; l < 4; ++l) {
            w.y[l] = full[model.var_y(l)];
            w.z[l] = full[model.var_z(l)];
            w.key[l] = full[model.var_k(l)];
        }
        HydraSamplePair re = heads_sample(params, w.key, w.y, w.z);
        if (re.c1 == outputs.c1 && re.c2 == outputs.c2) {
            out.keys.push_back(w);
            ++out.stats.verified;
        }
    }
    std::sort(out.keys.begin(), out.keys.end(), [](const HydraWitness& a, const HydraWitness& b) {
        if (a.key != b.key) return a.key < b.key;
        if (a.y != b.y) return a.y < b.y;
        return a.z < b.z;
    });
    out.keys.erase(std::unique(out.keys.begin(), out.keys.end(),
                               [](const HydraWitness& a, const HydraWitness& b) {
                                   return a.key == b.key && a.y == b.y && a.z == b.z;
                               }),
                   out.keys.end());
    if (out.keys.empty()) throw NoSolution("no candidate key survived verification");
    return out;
}

} // namespace gbc
