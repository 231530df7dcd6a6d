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

#include "gbc/field.hpp"

#include <algorithm>

namespace gbc {

std::string to_string(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

u128 parse_u128(std::string_view s) {
    if (s.empty()) throw ParseError("empty integer literal");
    u128 v = 0;
    const u128 max = ~static_cast<u128>(0);
    for (char c : s) {
        if (c < '0' || c > '9') throw ParseError("bad digit in integer literal: " + std::string(s));
        unsigned d = static_cast<unsigned>(c - '0');
        if (v > (max - d) / 10) throw ParseError("integer literal exceeds 128 bits: " + std::string(s));
        v = v * 10 + d;
    }
    return v;
}

namespace {

// modular multiplication valid for any modulus < 2^128
u128 mulmod_any(u128 a, u128 b, u128 q) {
    u128 r = 0;
    a %= q;
    while (b > 0) {
        if (b & 1) {
            u128 t = q - a;
            r = r >= t ? r - t : r + a;
        }
        u128 t = q - a;
        a = a >= t ? a - t : a + a;
        b >>= 1;
    }
    return r;
}

u128 powmod_any(u128 base, u128 exp, u128 q) {
    u128 r = 1 % q;
    base %= q;
    while (exp > 0) {
        if (exp & 1) r = mulmod_any(r, base, q);
        base = mulmod_any(base, base, q);
        exp >>= 1;
    }
    return r;
}

} // namespace

bool miller_rabin_is_prime(u128 n, int rounds) {
    if (n < 2) return false;
    for (u128 p : {u128(2), u128(3), u128(5), u128(7), u128(11), u128(13), u128(17), u128(19), u128(23)}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u128 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // deterministic pseudo-random bases derived from n
    Rng rng(0x6d696c6c6572ULL ^ static_cast<u64>(n) ^ static_cast<u64>(n >> 64));
    for (int it = 0; it < rounds; ++it) {
        u128 a = 2 + rng.next128() % (n - 3);
        u128 x = powmod_any(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_any(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(u128 modulus) : q_(modulus) {
    if (modulus < 3) throw InvalidModulus("modulus must be at least 3");
    if ((modulus & 1) == 0) throw InvalidModulus("modulus must be odd");
    if (!miller_rabin_is_prime(modulus)) throw InvalidModulus("modulus fails primality check: " + to_string(modulus));
    small_ = (modulus >> 64) == 0;
}

u128 PrimeField::mul_wide(u128 a, u128 b) const { return mulmod_any(a, b, q_); }

u128 PrimeField::pow(u128 base, u128 exp) const {
    u128 r = 1;
    base %= q_;
    while (exp > 0) {
        if (exp & 1) r = mul(r, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return r;
}

u128 PrimeField::from_int(long long v) const {
    if (v >= 0) return static_cast<u128>(v) % q_;
    u128 m = static_cast<u128>(-(v + 1)) + 1; // |v| without UB at LLONG_MIN
    m %= q_;
    return m == 0 ? 0 : q_ - m;
}

u128 PrimeField::sample(Rng& rng) const {
    // rejection from the largest multiple of q below 2^128
    const u128 limit = (~static_cast<u128>(0)) - ((~static_cast<u128>(0)) % q_);
    for (;;) {
        u128 x = rng.next128();
        if (x < limit) return x % q_;
    }
}

u128 PrimeField::sample_nonzero(Rng& rng) const {
    for (;;) {
        u128 x = sample(rng);
        if (x != 0) return x;
    }
}

} // namespace gbc
