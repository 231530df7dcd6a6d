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

// Prime fields F_q with odd prime modulus, 3 <= q < 2^128.
// Elements are canonical residues in [0, q); all arithmetic is exact.

#ifndef GBC_FIELD_HPP
#define GBC_FIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gbc/errors.hpp"

namespace gbc {

#if !defined(__SIZEOF_INT128__)
#error "gbc requires compiler support for unsigned __int128 (GCC/Clang)."
#endif

using u64 = std::uint64_t;
using u128 = unsigned __int128;

std::string to_string(u128 v);
u128 parse_u128(std::string_view s);

// Deterministic 64-bit generator (splitmix64).  All randomness in the
// library flows through explicitly seeded instances of this.
class Rng {
public:
    explicit Rng(u64 seed) : state_(seed) {}
    u64 next() {
        u64 z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    u128 next128() { return (static_cast<u128>(next()) << 64) | next(); }

private:
    u64 state_;
};

// Field context.  Construction runs a Miller-Rabin primality check with 40
// deterministic pseudo-random bases; a composite or even modulus throws.
class PrimeField {
public:
    explicit PrimeField(u128 modulus);

    u128 modulus() const { return q_; }
    bool fits_u64() const { return small_; }

    u128 add(u128 a, u128 b) const {
        u128 t = q_ - b;
        return a >= t ? a - t : a + b;
    }
    u128 sub(u128 a, u128 b) const { return a >= b ? a - b : a + (q_ - b); }
    u128 neg(u128 a) const { return a == 0 ? 0 : q_ - a; }
    u128 mul(u128 a, u128 b) const {
        if (small_) return (a * b) % q_;
        return mul_wide(a, b);
    }
    u128 inv(u128 a) const {
        if (a == 0) throw InversionOfZero();
        return pow(a, q_ - 2);
    }
    u128 pow(u128 base, u128 exp) const;
    u128 reduce(u128 a) const { return a % q_; }
    // maps a signed small integer into [0, q)
    u128 from_int(long long v) const;

    // uniform residue via rejection sampling
    u128 sample(Rng& rng) const;
    u128 sample_nonzero(Rng& rng) const;

    bool operator==(const PrimeField& o) const { return q_ == o.q_; }
    bool operator!=(const PrimeField& o) const { return q_ != o.q_; }

private:
    u128 mul_wide(u128 a, u128 b) const; // binary double-and-add, any q < 2^128
    u128 q_ = 0;
    bool small_ = false; // q < 2^64, products fit in u128
};

bool miller_rabin_is_prime(u128 n, int rounds = 40);

// Field element carrying its field; the arithmetic-operator layer over the
// raw residue API above.
class Fp {
public:
    Fp() = default;
    Fp(const PrimeField& f, u128 canonical) : f_(&f), v_(canonical) {}

    u128 value() const { return v_; }
    const PrimeField& field() const { return *f_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(const Fp& o) const { check(o); return Fp(*f_, f_->add(v_, o.v_)); }
    Fp operator-(const Fp& o) const { check(o); return Fp(*f_, f_->sub(v_, o.v_)); }
    Fp operator*(const Fp& o) const { check(o); return Fp(*f_, f_->mul(v_, o.v_)); }
    Fp operator-() const { return Fp(*f_, f_->neg(v_)); }
    Fp inv() const { return Fp(*f_, f_->inv(v_)); }
    Fp operator/(const Fp& o) const { check(o); return Fp(*f_, f_->mul(v_, f_->inv(o.v_))); }
    bool operator==(const Fp& o) const { return v_ == o.v_ && *f_ == *o.f_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }

private:
    void check(const Fp& o) const {
        if (*f_ != *o.f_) throw RingMismatch("field elements from different fields");
    }
    const PrimeField* f_ = nullptr;
    u128 v_ = 0;
};

inline Fp field_inv(const Fp& a) { return a.inv(); }

} // namespace gbc

#endif
