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

#include "gbc/macaulay.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>

namespace gbc {

namespace {

void enumerate_monomials(std::vector<Monomial>& out, std::vector<std::uint16_t>& e, std::size_t pos,
                         int remaining, bool squarefree_only) {
    if (pos == e.size()) {
        out.emplace_back(e);
        return;
    }
    int cap = squarefree_only ? std::min(remaining, 1) : remaining;
    for (int v = 0; v <= cap; ++v) {
        e[pos] = static_cast<std::uint16_t>(v);
        enumerate_monomials(out, e, pos + 1, remaining - v, squarefree_only);
    }
    e[pos] = 0;
}

} // namespace

std::vector<Monomial> monomial_columns(const RingPtr& ring, int d, const TermOrder& order,
                                       bool squarefree_only, const std::vector<Monomial>& excluded_lms) {
    std::vector<Monomial> all;
    std::vector<std::uint16_t> e(ring->nvars(), 0);
    enumerate_monomials(all, e, 0, d, squarefree_only);
    std::vector<Monomial> kept;
    kept.reserve(all.size());
    for (Monomial& m : all) {
        bool excluded = false;
        for (const Monomial& lm : excluded_lms)
            if (lm.divides(m)) { excluded = true; break; }
        if (!excluded) kept.push_back(std::move(m));
    }
    std::sort(kept.begin(), kept.end(), [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
    return kept;
}

bool is_k_boolean(const PolySystem& FBool, const TermOrder& order) {
    if (FBool.empty()) return false;
    const std::size_t n = FBool.ring->nvars();
    std::vector<bool> seen(n, false);
    for (const MPoly& g : FBool.polys) {
        if (g.is_zero()) return false;
        Monomial lm = g.leading_monomial(order);
        std::size_t v;
        if (lm.is_pure_power(&v) && lm.degree() == 2) seen[v] = true;
    }
    for (bool b : seen)
        if (!b) return false;
    return is_groebner(FBool, order);
}

namespace {

MacaulayMatrix build_matrix(const PolySystem& F, const PolySystem* FBool, int d, const TermOrder& order) {
    const RingPtr& ring = F.ring;
    const PrimeField& f = ring->field;
    const bool boolean = FBool != nullptr;

    std::vector<Monomial> excluded;
    if (boolean)
        for (const MPoly& g : FBool->polys) excluded.push_back(g.leading_monomial(order));

    MacaulayMatrix m{d, boolean, ring, order,
                     monomial_columns(ring, d, order, boolean, excluded),
                     {}, DenseMatrix(f, 0, 0)};

    std::vector<std::pair<Monomial, std::size_t>> tags;
    for (std::size_t pi = 0; pi < F.size(); ++pi) {
        const MPoly& p = F.polys[pi];
        if (p.is_zero()) continue;
        int deg = static_cast<int>(p.total_degree());
        if (deg > d) continue;
        std::vector<Monomial> shifts = monomial_columns(ring, d - deg, order, boolean, excluded);
        for (const Monomial& s : shifts) tags.emplace_back(s, pi);
    }

    std::map<Monomial, std::size_t> col_of;
    for (std::size_t c = 0; c < m.columns.size(); ++c) col_of.emplace(m.columns[c], c);

    DenseMatrix entries(f, tags.size(), m.columns.size());
    std::atomic<bool> bad{false};
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long r = 0; r < static_cast<long long>(tags.size()); ++r) {
        const auto& [s, pi] = tags[static_cast<std::size_t>(r)];
        MPoly prod = F.polys[pi].mul_term(s, 1);
        if (boolean) prod = reduce(prod, *FBool, order);
        for (const auto& [mono, c] : prod.terms()) {
            auto it = col_of.find(mono);
            if (it == col_of.end()) {
                bad.store(true, std::memory_order_relaxed);
                break;
            }
            entries.set(static_cast<std::size_t>(r), it->second, c);
        }
    }
    if (bad.load()) throw NotBoolean("row support escapes the column set");
    for (auto& [s, pi] : tags) m.row_tags.push_back(MacaulayMatrix::RowTag{s, pi});
    m.entries = std::move(entries);
    return m;
}

} // namespace

MacaulayMatrix build_macaulay(const PolySystem& F, int d, const TermOrder& order) {
    for (const MPoly& p : F.polys)
        if (!p.is_zero() && p.total_degree() > d)
            throw InvalidParams("degree bound below the system degree");
    return build_matrix(F, nullptr, d, order);
}

MacaulayMatrix build_boolean_macaulay(const PolySystem& F, const PolySystem& FBool, int d,
                                      const TermOrder& order) {
    if (!F.ring->compatible(*FBool.ring)) throw RingMismatch();
    if (!is_k_boolean(FBool, order)) throw NotBoolean();
    return build_matrix(F, &FBool, d, order);
}

PolySystem rowspace(const MacaulayMatrix& m) {
    RrefResult rr = rref(m.entries);
    PolySystem out(m.ring);
    for (std::size_t r = 0; r < rr.rank; ++r) {
        MPoly p(m.ring);
        for (std::size_t c = 0; c < m.columns.size(); ++c)
            if (rr.reduced.at(r, c) != 0) p.add_term(m.columns[c], rr.reduced.at(r, c));
        if (!p.is_zero()) out.push(std::move(p));
    }
    return out;
}

std::optional<PolySystem> extract_gb(const PolySystem& rows, const PolySystem* FBool, const TermOrder& order) {
    PolySystem pool = rows;
    if (FBool)
        for (const MPoly& g : FBool->polys) pool.push(g);
    if (pool.empty()) return std::nullopt;

    // minimal generating set of the leading-monomial ideal
    std::vector<Monomial> lms;
    for (const MPoly& p : pool.polys)
        if (!p.is_zero()) lms.push_back(p.leading_monomial(order));
    std::vector<char> minimal(lms.size(), 1);
    for (std::size_t i = 0; i < lms.size(); ++i)
        for (std::size_t j = 0; j < lms.size() && minimal[i]; ++j) {
            if (i == j || !minimal[j]) continue;
            if (lms[j].divides(lms[i]) && (lms[j] != lms[i] || j < i)) minimal[i] = 0;
        }

    PolySystem candidate(pool.ring);
    for (std::size_t i = 0; i < pool.size(); ++i)
        if (minimal[i]) candidate.push(pool.polys[i].monic(order));
    if (candidate.empty()) return std::nullopt;

    if (!is_groebner(candidate, order)) return std::nullopt;
    // the filtered set must still generate everything it was filtered from
    for (const MPoly& p : pool.polys)
        if (!reduce(p, candidate, order).is_zero()) return std::nullopt;
    return interreduce(candidate, order);
}

namespace {

// Degree-capped elimination in the style of the linear-algebra basis
// algorithms: at each degree the row space is saturated, i.e. row-space
// members with new leading monomials are adjoined and multiplied up again
// until nothing new appears below the cap.
DegreeSearchResult degree_search(const PolySystem& F, const PolySystem* FBool, const TermOrder& order,
                                 int d_max) {
    long maxdeg = 0;
    for (const MPoly& p : F.polys) maxdeg = std::max(maxdeg, p.total_degree());
    DegreeSearchResult res;
    for (int d = static_cast<int>(maxdeg); d <= d_max; ++d) {
        auto t0 = std::chrono::steady_clock::now();
        PolySystem working = F;
        DegreeSearchRecord rec;
        rec.d = d;
        std::optional<PolySystem> gb;
        for (;;) {
            ++rec.passes;
            MacaulayMatrix m =
                FBool ? build_boolean_macaulay(working, *FBool, d, order) : build_macaulay(working, d, order);
            PolySystem rows = rowspace(m);
            rec.rows = m.entries.rows();
            rec.cols = m.entries.cols();
            rec.rank = rows.size();
            gb = extract_gb(rows, FBool, order);
            if (gb) break;
            // adjoin row-space members whose leading monomial is new
            std::vector<Monomial> known;
            for (const MPoly& g : working.polys) known.push_back(g.leading_monomial(order));
            if (FBool)
                for (const MPoly& g : FBool->polys) known.push_back(g.leading_monomial(order));
            bool grew = false;
            for (const MPoly& g : rows.polys) {
                Monomial lm = g.leading_monomial(order);
                bool fresh = true;
                for (const Monomial& k : known)
                    if (k.divides(lm)) { fresh = false; break; }
                if (fresh) {
                    working.push(g);
                    known.push_back(lm);
                    grew = true;
                }
            }
            if (!grew) break;
        }
        auto t1 = std::chrono::steady_clock::now();
        rec.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
        rec.success = gb.has_value();
        res.trace.push_back(rec);
        if (gb) {
            res.degree = d;
            res.basis = std::move(*gb);
            return res;
        }
    }
    throw NotFoundWithin(d_max);
}

} // namespace

DegreeSearchResult solving_degree_search(const PolySystem& F, const TermOrder& order, int d_max) {
    return degree_search(F, nullptr, order, d_max);
}

DegreeSearchResult boolean_solving_degree_search(const PolySystem& F, const PolySystem& FBool,
                                                 const TermOrder& order, int d_max) {
    return degree_search(F, &FBool, order, d_max);
}

std::optional<int> dreg_small(const PolySystem& F, const BuchbergerOptions& opts) {
    if (F.empty()) throw RingMismatch("empty system");
    const RingPtr& ring = F.ring;
    const PrimeField& f = ring->field;
    const std::size_t n = ring->nvars();
    const TermOrder order = TermOrder::drl();

    PolySystem tops(ring);
    for (const MPoly& p : F.polys)
        if (!p.is_zero()) tops.push(top_component(p));

    // infinity when the top-component ideal is positive dimensional
    PolySystem gb = buchberger(tops, order, opts);
    bool zero_dim = true;
    {
        std::vector<bool> seen(n, false);
        for (const MPoly& g : gb.polys) {
            std::size_t v;
            Monomial lm = g.leading_monomial(order);
            if (lm.is_pure_power(&v)) seen[v] = true;
            if (lm.is_one()) return 0; // unit ideal: every graded piece is full
        }
        for (bool b : seen)
            if (!b) { zero_dim = false; break; }
    }
    if (!zero_dim) return std::nullopt;

    // first d where the degree-d graded piece of (F^top) is everything
    for (int d = 0;; ++d) {
        // count monomials of degree exactly d
        std::vector<Monomial> all;
        std::vector<std::uint16_t> e(n, 0);
        enumerate_monomials(all, e, 0, d, false);
        std::vector<Monomial> exact;
        for (Monomial& m : all)
            if (static_cast<int>(m.degree()) == d) exact.push_back(std::move(m));
        std::map<Monomial, std::size_t> col_of;
        for (std::size_t c = 0; c < exact.size(); ++c) col_of.emplace(exact[c], c);

        std::vector<std::vector<u128>> rows;
        for (const MPoly& p : tops.polys) {
            int deg = static_cast<int>(p.total_degree());
            if (deg > d) continue;
            std::vector<Monomial> shifts;
            std::vector<std::uint16_t> se(n, 0);
            enumerate_monomials(shifts, se, 0, d - deg, false);
            for (const Monomial& s : shifts) {
                if (static_cast<int>(s.degree()) != d - deg) continue;
                std::vector<u128> row(exact.size(), 0);
                for (const auto& [mono, c] : p.terms()) row[col_of.at(mono * s)] = c;
                rows.push_back(std::move(row));
            }
        }
        std::size_t rank = rows.empty() ? 0 : rref(DenseMatrix::from_rows(f, rows)).rank;
        if (rank == exact.size()) return d;
        if (d > 4 * static_cast<int>(n) + 16)
            throw BudgetExceeded("degree of regularity search ran away");
    }
}

} // namespace gbc
