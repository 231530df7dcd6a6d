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

#include "gbc/unipoly.hpp"

#include <algorithm>

namespace gbc {

UniPoly UniPoly::operator+(const UniPoly& o) const {
    if (f_ != o.f_) throw RingMismatch("unipoly fields differ");
    std::vector<u128> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f_.add(coeff(i), o.coeff(i));
    return UniPoly(f_, std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    if (f_ != o.f_) throw RingMismatch("unipoly fields differ");
    std::vector<u128> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f_.sub(coeff(i), o.coeff(i));
    return UniPoly(f_, std::move(c));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (f_ != o.f_) throw RingMismatch("unipoly fields differ");
    if (is_zero() || o.is_zero()) return zero(f_);
    std::vector<u128> c(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            if (o.c_[j] != 0) c[i + j] = f_.add(c[i + j], f_.mul(c_[i], o.c_[j]));
    }
    return UniPoly(f_, std::move(c));
}

UniPoly UniPoly::scale(u128 s) const {
    s = f_.reduce(s);
    if (s == 0) return zero(f_);
    std::vector<u128> c(c_);
    for (auto& v : c) v = f_.mul(v, s);
    return UniPoly(f_, std::move(c));
}

UniPoly UniPoly::shift(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<u128> c(c_.size() + k, 0);
    std::copy(c_.begin(), c_.end(), c.begin() + static_cast<long>(k));
    return UniPoly(f_, std::move(c));
}

u128 UniPoly::eval(u128 x) const {
    u128 acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = f_.add(f_.mul(acc, x), c_[i]);
    return acc;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scale(f_.inv(leading_coeff()));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (f_ != d.f_) throw RingMismatch("unipoly fields differ");
    if (d.is_zero()) throw ZeroPolynomial();
    if (degree() < d.degree()) return {zero(f_), *this};
    std::vector<u128> rem(c_);
    const long dd = d.degree();
    const long qd = degree() - dd;
    std::vector<u128> quo(static_cast<std::size_t>(qd) + 1, 0);
    const u128 lead_inv = f_.inv(d.leading_coeff());
    for (long off = qd; off >= 0; --off) {
        u128 c = rem[static_cast<std::size_t>(off + dd)];
        if (c == 0) continue;
        u128 q = f_.mul(c, lead_inv);
        quo[static_cast<std::size_t>(off)] = q;
        for (long j = 0; j <= dd; ++j) {
            auto k = static_cast<std::size_t>(off + j);
            rem[k] = f_.sub(rem[k], f_.mul(q, d.c_[static_cast<std::size_t>(j)]));
        }
    }
    return {UniPoly(f_, std::move(quo)), UniPoly(f_, std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x.mod(y);
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

UniPoly powmod(const UniPoly& base, u128 exp, const UniPoly& m) {
    UniPoly r = UniPoly::constant(base.field(), 1).mod(m);
    UniPoly b = base.mod(m);
    while (exp > 0) {
        if (exp & 1) r = (r * b).mod(m);
        b = (b * b).mod(m);
        exp >>= 1;
    }
    return r;
}

UniPoly field_equation_gcd(const UniPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    const PrimeField& fld = f.field();
    if (f.degree() == 0) return UniPoly::constant(fld, 1);
    if (f.degree() == 1) return f.monic(); // root -c0/c1 always lies in F_q
    // x^q mod f by square and multiply, then gcd(f, x^q - x)
    UniPoly xq = powmod(UniPoly::x(fld), fld.modulus(), f);
    return gcd(f, xq - UniPoly::x(fld));
}

namespace {

// recursive random-shift splitting of a squarefree product of linear factors
void split_roots(const UniPoly& g, Rng& rng, std::vector<u128>& out) {
    const PrimeField& f = g.field();
    if (g.degree() <= 0) return;
    if (g.degree() == 1) {
        // monic x + c0  ->  root -c0
        u128 c0 = f.mul(g.coeff(0), f.inv(g.coeff(1)));
        out.push_back(f.neg(c0));
        return;
    }
    const u128 half = (f.modulus() - 1) / 2;
    for (;;) {
        u128 s = f.sample(rng);
        // (x+s)^((q-1)/2) - 1 picks out roots r with chi(r+s) = 1
        UniPoly shifted(f, {s, 1});
        UniPoly w = powmod(shifted, half, g) - UniPoly::constant(f, 1);
        UniPoly h = gcd(g, w);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            split_roots(h, rng, out);
            split_roots(g.divmod(h).first.monic(), rng, out);
            return;
        }
    }
}

} // namespace

std::vector<u128> uni_roots(const UniPoly& f, RootMethod method, u64 seed) {
    if (f.is_zero()) throw ZeroPolynomial();
    const PrimeField& fld = f.field();
    std::vector<u128> out;
    if (method == RootMethod::Auto)
        method = fld.modulus() < (u128(1) << 16) ? RootMethod::Scan : RootMethod::Split;
    if (method == RootMethod::Scan) {
        for (u128 x = 0; x < fld.modulus(); ++x)
            if (f.eval(x) == 0) out.push_back(x);
        return out;
    }
    UniPoly g = field_equation_gcd(f);
    if (g.degree() <= 0) return out;
    // pull out a root at 0 so every remaining factor survives the shift trick
    if (g.coeff(0) == 0) {
        out.push_back(0);
        std::vector<u128> c(g.coeffs().begin() + 1, g.coeffs().end());
        g = UniPoly(fld, std::move(c));
    }
    Rng rng(seed);
    split_roots(g, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace gbc
