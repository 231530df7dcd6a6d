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

#include "gbc/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace gbc {

std::size_t PolyRing::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return i;
    throw ParseError("unknown variable: " + name);
}

RingPtr make_ring(const PrimeField& f, std::vector<std::string> names) {
    return std::make_shared<const PolyRing>(f, std::move(names));
}

RingPtr make_ring(const PrimeField& f, std::size_t nvars) {
    std::vector<std::string> names;
    names.reserve(nvars);
    for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i));
    return make_ring(f, std::move(names));
}

MPoly MPoly::constant(RingPtr ring, u128 v) {
    MPoly p(ring);
    p.add_term(Monomial(ring->nvars()), ring->field.reduce(v));
    return p;
}

MPoly MPoly::variable(RingPtr ring, std::size_t i) {
    MPoly p(ring);
    p.add_term(Monomial::variable(ring->nvars(), i), 1);
    return p;
}

MPoly MPoly::term(RingPtr ring, const Monomial& m, u128 coeff) {
    MPoly p(ring);
    p.add_term(m, ring->field.reduce(coeff));
    return p;
}

long MPoly::total_degree() const {
    long d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, static_cast<long>(m.degree()));
    return d;
}

u128 MPoly::coeff(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? 0 : it->second;
}

void MPoly::add_term(const Monomial& m, u128 coeff) {
    if (coeff == 0) return;
    if (m.nvars() != nvars()) throw RingMismatch("monomial length does not match ring");
    auto [it, inserted] = t_.emplace(m, coeff);
    if (!inserted) {
        it->second = field().add(it->second, coeff);
        if (it->second == 0) t_.erase(it);
    }
}

MPoly MPoly::operator+(const MPoly& o) const {
    check_ring(o);
    MPoly r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    check_ring(o);
    MPoly r = *this;
    for (const auto& [m, c] : o.t_) r.add_term(m, field().neg(c));
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r(ring_);
    for (const auto& [m, c] : t_) r.t_.emplace(m, field().neg(c));
    return r;
}

MPoly MPoly::scale(u128 s) const {
    s = field().reduce(s);
    MPoly r(ring_);
    if (s == 0) return r;
    for (const auto& [m, c] : t_) {
        u128 v = field().mul(c, s);
        if (v != 0) r.t_.emplace(m, v);
    }
    return r;
}

MPoly MPoly::mul_term(const Monomial& m, u128 coeff) const {
    coeff = field().reduce(coeff);
    MPoly r(ring_);
    if (coeff == 0) return r;
    for (const auto& [mm, c] : t_) {
        u128 v = field().mul(c, coeff);
        if (v != 0) r.t_.emplace(mm * m, v);
    }
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    check_ring(o);
    MPoly r(ring_);
    for (const auto& [m, c] : o.t_) r = r + mul_term(m, c);
    return r;
}

bool MPoly::operator==(const MPoly& o) const {
    return ring_->compatible(*o.ring_) && t_ == o.t_;
}

Monomial MPoly::leading_monomial(const TermOrder& order) const {
    if (t_.empty()) throw ZeroPolynomial();
    auto it = t_.begin();
    Monomial best = it->first;
    for (++it; it != t_.end(); ++it)
        if (order.greater(it->first, best)) best = it->first;
    return best;
}

u128 MPoly::leading_coeff(const TermOrder& order) const { return coeff(leading_monomial(order)); }

MPoly MPoly::monic(const TermOrder& order) const {
    if (is_zero()) return *this;
    return scale(field().inv(leading_coeff(order)));
}

u128 MPoly::eval(const std::vector<u128>& point) const {
    if (point.size() != nvars()) throw RingMismatch("evaluation point has wrong length");
    const PrimeField& f = field();
    u128 acc = 0;
    for (const auto& [m, c] : t_) {
        u128 v = c;
        for (std::size_t i = 0; i < nvars(); ++i)
            for (std::uint16_t e = 0; e < m.exp(i); ++e) v = f.mul(v, point[i]);
        acc = f.add(acc, v);
    }
    return acc;
}

MPoly MPoly::substitute(const std::vector<std::optional<MPoly>>& repl) const {
    if (repl.size() != nvars()) throw RingMismatch("substitution vector has wrong length");
    RingPtr target = ring_;
    for (const auto& r : repl)
        if (r) { target = r->ring(); break; }
    MPoly acc(target);
    for (const auto& [m, c] : t_) {
        MPoly term = MPoly::constant(target, c);
        for (std::size_t i = 0; i < nvars(); ++i) {
            if (m.exp(i) == 0) continue;
            MPoly base = repl[i] ? *repl[i] : MPoly::variable(target, i);
            for (std::uint16_t e = 0; e < m.exp(i); ++e) term = term * base;
        }
        acc = acc + term;
    }
    return acc;
}

MPoly MPoly::substitute_value(std::size_t var, u128 value) const {
    const PrimeField& f = field();
    value = f.reduce(value);
    MPoly r(ring_);
    for (const auto& [m, c] : t_) {
        u128 v = c;
        for (std::uint16_t e = 0; e < m.exp(var); ++e) v = f.mul(v, value);
        if (v == 0) continue;
        std::vector<std::uint16_t> e(m.exps());
        e[var] = 0;
        r.add_term(Monomial(std::move(e)), v);
    }
    return r;
}

MPoly top_component(const MPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    long d = f.total_degree();
    MPoly r(f.ring());
    for (const auto& [m, c] : f.terms())
        if (static_cast<long>(m.degree()) == d) r.add_term(m, c);
    return r;
}

void PolySystem::push(MPoly p, PolyRole role) {
    if (!ring) ring = p.ring();
    if (!ring->compatible(*p.ring())) throw RingMismatch("system members share one ring");
    if (!roles.empty() || role != PolyRole::None) {
        roles.resize(polys.size(), PolyRole::None);
        roles.push_back(role);
    }
    polys.push_back(std::move(p));
}

MPoly reduce(const MPoly& f, const PolySystem& G, const TermOrder& order) {
    if (G.empty()) throw RingMismatch("division by an empty system");
    if (!f.ring()->compatible(*G.ring)) throw RingMismatch();
    const PrimeField& fld = f.field();
    const TermOrder tie = TermOrder{OrderKind::DRL, order.ranking};

    struct Divisor {
        Monomial lm;
        u128 lc;
        const MPoly* poly;
    };
    std::vector<Divisor> divisors;
    divisors.reserve(G.size());
    for (const MPoly& g : G.polys) {
        if (g.is_zero()) continue;
        Monomial lm = g.leading_monomial(order);
        divisors.push_back(Divisor{lm, g.coeff(lm), &g});
    }

    MPoly p = f;
    MPoly rem(f.ring());
    while (!p.is_zero()) {
        Monomial lm = p.leading_monomial(order);
        u128 lc = p.coeff(lm);
        const Divisor* best = nullptr;
        for (const Divisor& d : divisors) {
            if (!d.lm.divides(lm)) continue;
            if (!best || tie.greater(d.lm, best->lm)) best = &d;
        }
        if (best) {
            Monomial q = best->lm.divide_into(lm);
            u128 c = fld.mul(lc, fld.inv(best->lc));
            p = p - best->poly->mul_term(q, c);
        } else {
            rem.add_term(lm, lc);
            p.add_term(lm, fld.neg(lc)); // strikes the term exactly
        }
    }
    return rem;
}

namespace {

void append_term(std::ostringstream& os, const PolyRing& ring, const Monomial& m, u128 c) {
    os << to_string(c);
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m.exp(i) == 0) continue;
        os << '*' << ring.vars[i];
        if (m.exp(i) > 1) os << '^' << m.exp(i);
    }
}

} // namespace

std::string MPoly::str() const {
    if (is_zero()) return "0";
    // emit terms in descending DRL order of the ring's natural variable order
    TermOrder drl = TermOrder::drl();
    std::vector<const Monomial*> ms;
    ms.reserve(t_.size());
    for (const auto& [m, c] : t_) ms.push_back(&m);
    std::sort(ms.begin(), ms.end(), [&](const Monomial* a, const Monomial* b) { return drl.greater(*a, *b); });
    std::ostringstream os;
    bool first = true;
    for (const Monomial* m : ms) {
        if (!first) os << " + ";
        first = false;
        append_term(os, *ring_, *m, t_.at(*m));
    }
    return os.str();
}

MPoly MPoly::parse(RingPtr ring, const std::string& text) {
    MPoly p(ring);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && text[pos] == ' ') ++pos;
    };
    skip_ws();
    if (pos < text.size() && text.compare(pos, 1, "0") == 0 && pos + 1 == text.size()) return p;
    while (pos < text.size()) {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) throw ParseError("expected coefficient at: " + text.substr(start));
        u128 coeff = ring->field.reduce(parse_u128(text.substr(start, pos - start)));
        Monomial m(ring->nvars());
        while (pos < text.size() && text[pos] == '*') {
            ++pos;
            std::size_t vstart = pos;
            while (pos < text.size() && text[pos] != '*' && text[pos] != '^' && text[pos] != ' ' && text[pos] != '+')
                ++pos;
            std::size_t vi = ring->var_index(text.substr(vstart, pos - vstart));
            std::uint16_t e = 1;
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                std::size_t estart = pos;
                while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
                e = static_cast<std::uint16_t>(parse_u128(text.substr(estart, pos - estart)));
            }
            m = m * Monomial::variable(ring->nvars(), vi, e);
        }
        p.add_term(m, coeff);
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != '+') throw ParseError("expected '+' at: " + text.substr(pos));
        ++pos;
    }
    return p;
}

} // namespace gbc
