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

// Univariate polynomials over F_q: schoolbook arithmetic, Euclidean gcd,
// reduction against the field equation x^q - x, and F_q-rational roots.

#ifndef GBC_UNIPOLY_HPP
#define GBC_UNIPOLY_HPP

#include <vector>

#include "gbc/field.hpp"

namespace gbc {

class UniPoly {
public:
    explicit UniPoly(const PrimeField& f) : f_(f) {}
    UniPoly(const PrimeField& f, std::vector<u128> coeffs) : f_(f), c_(std::move(coeffs)) { trim(); }

    static UniPoly zero(const PrimeField& f) { return UniPoly(f); }
    static UniPoly constant(const PrimeField& f, u128 v) { return UniPoly(f, {f.reduce(v)}); }
    static UniPoly x(const PrimeField& f) { return UniPoly(f, {0, 1}); }

    const PrimeField& field() const { return f_; }
    // degree of the zero polynomial is -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    u128 coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<u128>& coeffs() const { return c_; }
    u128 leading_coeff() const { return c_.empty() ? 0 : c_.back(); }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scale(u128 s) const;
    UniPoly shift(std::size_t k) const; // multiply by x^k

    u128 eval(u128 x) const;
    UniPoly monic() const;

    // quotient and remainder; divisor must be nonzero
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
    UniPoly mod(const UniPoly& d) const { return divmod(d).second; }

    bool operator==(const UniPoly& o) const { return f_ == o.f_ && c_ == o.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    PrimeField f_;
    std::vector<u128> c_; // lowest degree first, no trailing zeros
};

// monic gcd via the Euclidean algorithm
UniPoly gcd(const UniPoly& a, const UniPoly& b);

// base^exp mod m by square and multiply
UniPoly powmod(const UniPoly& base, u128 exp, const UniPoly& m);

// gcd(f, x^q - x), monic; its roots are exactly the F_q-rational roots of f,
// each with multiplicity one
UniPoly field_equation_gcd(const UniPoly& f);

enum class RootMethod { Auto, Split, Scan };

// all x in F_q with f(x) = 0, ascending
std::vector<u128> uni_roots(const UniPoly& f, RootMethod method = RootMethod::Auto, u64 seed = 0x726f6f74ULL);

} // namespace gbc

#endif
