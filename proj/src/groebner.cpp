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

#include "gbc/groebner.hpp"

#include <algorithm>
#include <atomic>

namespace gbc {

MPoly s_polynomial(const MPoly& f, const MPoly& g, const TermOrder& order) {
    Monomial lf = f.leading_monomial(order), lg = g.leading_monomial(order);
    Monomial l = lf.lcm(lg);
    const PrimeField& fld = f.field();
    MPoly a = f.mul_term(lf.divide_into(l), fld.inv(f.coeff(lf)));
    MPoly b = g.mul_term(lg.divide_into(l), fld.inv(g.coeff(lg)));
    return a - b;
}

namespace {

// division that counts work against a budget shared across a Buchberger run
MPoly reduce_budgeted(const MPoly& f, const std::vector<MPoly>& G, const TermOrder& order,
                      std::size_t& steps, std::size_t budget) {
    const PrimeField& fld = f.field();
    const TermOrder tie = TermOrder{OrderKind::DRL, order.ranking};
    MPoly p = f;
    MPoly rem(f.ring());
    while (!p.is_zero()) {
        if (++steps > budget) throw BudgetExceeded("division budget exhausted");
        Monomial lm = p.leading_monomial(order);
        u128 lc = p.coeff(lm);
        const MPoly* best = nullptr;
        Monomial best_lm;
        for (const MPoly& g : G) {
            if (g.is_zero()) continue;
            Monomial glm = g.leading_monomial(order);
            if (!glm.divides(lm)) continue;
            if (!best || tie.greater(glm, best_lm)) {
                best = &g;
                best_lm = glm;
            }
        }
        if (best) {
            u128 c = fld.mul(lc, fld.inv(best->coeff(best_lm)));
            p = p - best->mul_term(best_lm.divide_into(lm), c);
        } else {
            rem.add_term(lm, lc);
            p.add_term(lm, fld.neg(lc));
        }
    }
    return rem;
}

} // namespace

PolySystem buchberger(const PolySystem& F, const TermOrder& order, const BuchbergerOptions& opts) {
    if (F.empty()) throw RingMismatch("buchberger on empty system");
    std::vector<MPoly> G;
    for (const MPoly& f : F.polys)
        if (!f.is_zero()) G.push_back(f.monic(order));
    if (G.empty()) return PolySystem(F.ring);

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
        unsigned deg;
    };
    std::vector<Pair> pairs;
    auto add_pairs = [&](std::size_t j) {
        Monomial lj = G[j].leading_monomial(order);
        for (std::size_t i = 0; i < j; ++i) {
            Monomial li = G[i].leading_monomial(order);
            if (opts.coprime_skip && li.coprime(lj)) continue;
            Monomial l = li.lcm(lj);
            pairs.push_back(Pair{i, j, l, l.degree()});
        }
    };
    for (std::size_t j = 0; j < G.size(); ++j) add_pairs(j);

    std::size_t steps = 0;
    while (!pairs.empty()) {
        // normal strategy: process the pair with the smallest lcm
        std::size_t sel = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            if (pairs[k].deg < pairs[sel].deg ||
                (pairs[k].deg == pairs[sel].deg && order.less(pairs[k].lcm, pairs[sel].lcm)))
                sel = k;
        }
        Pair p = pairs[sel];
        pairs[sel] = pairs.back();
        pairs.pop_back();
        MPoly s = s_polynomial(G[p.i], G[p.j], order);
        MPoly r = reduce_budgeted(s, G, order, steps, opts.max_reductions);
        if (!r.is_zero()) {
            G.push_back(r.monic(order));
            add_pairs(G.size() - 1);
        }
    }

    // minimalize: drop members whose leading monomial another one divides
    std::vector<MPoly> minimal;
    for (std::size_t i = 0; i < G.size(); ++i) {
        Monomial li = G[i].leading_monomial(order);
        bool keep = true;
        for (std::size_t j = 0; j < G.size() && keep; ++j) {
            if (i == j) continue;
            Monomial lj = G[j].leading_monomial(order);
            if (lj.divides(li) && (lj != li || j < i)) keep = false;
        }
        if (keep) minimal.push_back(G[i]);
    }
    PolySystem out(F.ring, std::move(minimal));
    return interreduce(out, order);
}

PolySystem interreduce(const PolySystem& G, const TermOrder& order) {
    std::vector<MPoly> v;
    for (const MPoly& g : G.polys)
        if (!g.is_zero()) v.push_back(g.monic(order));
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < v.size(); ++i) {
            PolySystem others(G.ring);
            for (std::size_t j = 0; j < v.size(); ++j)
                if (j != i) others.push(v[j]);
            if (others.empty()) continue;
            MPoly r = reduce(v[i], others, order);
            if (r != v[i]) {
                changed = true;
                if (r.is_zero()) {
                    v.erase(v.begin() + static_cast<long>(i));
                    --i;
                } else {
                    v[i] = r.monic(order);
                }
            }
        }
    }
    std::sort(v.begin(), v.end(), [&](const MPoly& a, const MPoly& b) {
        return order.greater(a.leading_monomial(order), b.leading_monomial(order));
    });
    return PolySystem(G.ring, std::move(v));
}

bool is_groebner(const PolySystem& G, const TermOrder& order, bool coprime_skip) {
    if (G.empty()) throw RingMismatch("is_groebner on empty system");
    std::vector<const MPoly*> g;
    for (const MPoly& p : G.polys)
        if (!p.is_zero()) g.push_back(&p);
    std::vector<std::pair<std::size_t, std::size_t>> todo;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            if (coprime_skip &&
                g[i]->leading_monomial(order).coprime(g[j]->leading_monomial(order)))
                continue;
            todo.emplace_back(i, j);
        }
    std::atomic<bool> ok{true};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long k = 0; k < static_cast<long long>(todo.size()); ++k) {
        if (!ok.load(std::memory_order_relaxed)) continue;
        auto [i, j] = todo[static_cast<std::size_t>(k)];
        MPoly s = s_polynomial(*g[i], *g[j], order);
        if (!s.is_zero() && !reduce(s, G, order).is_zero()) ok.store(false, std::memory_order_relaxed);
    }
    return ok.load();
}

std::vector<Monomial> quotient_basis(const PolySystem& G, const TermOrder& order) {
    if (G.empty()) throw NotZeroDimensional("empty basis");
    const std::size_t n = G.ring->nvars();
    std::vector<Monomial> lms;
    for (const MPoly& g : G.polys)
        if (!g.is_zero()) lms.push_back(g.leading_monomial(order));
    // every variable needs a pure power among the leading monomials
    std::vector<unsigned> bound(n, 0);
    for (const Monomial& m : lms) {
        std::size_t v;
        if (m.is_pure_power(&v)) {
            unsigned d = m.exp(v);
            if (bound[v] == 0 || d < bound[v]) bound[v] = d;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        if (bound[i] == 0) throw NotZeroDimensional("no pure power of " + G.ring->vars[i] + " among leading monomials");

    std::vector<Monomial> basis;
    std::vector<std::uint16_t> e(n, 0);
    // enumerate in block order: the order-least variable is the slowest
    // digit, so the list comes out as B' u x_n B' u x_n^2 B' u ...
    std::vector<std::size_t> digits(n); // digits[0] = fastest = greatest variable
    for (std::size_t r = 0; r < n; ++r) digits[r] = order.ranking.empty() ? r : order.ranking[r];
    auto advance = [&]() -> bool {
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t v = digits[k];
            if (e[v] + 1u < bound[v]) {
                ++e[v];
                for (std::size_t s = 0; s < k; ++s) e[digits[s]] = 0;
                return true;
            }
            e[v] = 0;
        }
        return false;
    };
    for (;;) {
        Monomial m(e);
        bool standard = true;
        for (const Monomial& lm : lms)
            if (lm.divides(m)) { standard = false; break; }
        if (standard) basis.push_back(m);
        if (!advance()) break;
    }
    return basis;
}

namespace {

// does some pure power of variable v lie in the ideal generated by gb?
bool pure_power_in_ideal(const PolySystem& gb, const TermOrder& order, std::size_t v, unsigned dmax) {
    if (gb.empty()) return false;
    for (unsigned d = 1; d <= dmax; ++d) {
        MPoly m = MPoly::term(gb.ring, Monomial::variable(gb.ring->nvars(), v, static_cast<std::uint16_t>(d)), 1);
        if (reduce(m, gb, order).is_zero()) return true;
    }
    return false;
}

} // namespace

bool is_generic_coordinates_small(const PolySystem& F, const BuchbergerOptions& opts) {
    if (F.empty()) throw RingMismatch("empty system");
    const std::size_t n = F.ring->nvars();
    const TermOrder order = TermOrder::drl();
    PolySystem tops(F.ring);
    unsigned degsum = 0;
    for (const MPoly& f : F.polys) {
        if (f.is_zero()) continue;
        tops.push(top_component(f));
        degsum += static_cast<unsigned>(f.total_degree());
    }
    const unsigned dmax = std::max<unsigned>(degsum + 1, static_cast<unsigned>(n) + 2);

    std::vector<bool> done(n, false);
    std::size_t remaining = n;
    PolySystem current = tops;
    while (remaining > 0) {
        bool all_zero = true;
        for (const MPoly& p : current.polys)
            if (!p.is_zero()) { all_zero = false; break; }
        if (all_zero) return false;
        PolySystem gb = buchberger(current, order, opts);
        std::size_t found = n;
        for (std::size_t v = 0; v < n && found == n; ++v)
            if (!done[v] && pure_power_in_ideal(gb, order, v, dmax)) found = v;
        if (found == n) return false;
        done[found] = true;
        --remaining;
        PolySystem next(F.ring);
        for (const MPoly& p : gb.polys) {
            MPoly q = p.substitute_value(found, 0);
            if (!q.is_zero()) next.push(q);
        }
        if (next.empty() && remaining > 0) return false;
        current = std::move(next);
    }
    return true;
}

} // namespace gbc
