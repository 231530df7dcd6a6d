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

// The Ciminion PRF (first key pair path), its key-addition variants, the
// iterated polynomial model, the linear-transformation DRL Groebner basis,
// the LEX shape-position basis and the univariate attack polynomial.

#ifndef GBC_CIMINION_HPP
#define GBC_CIMINION_HPP

#include <array>
#include <cstdint>
#include <span>

#include "gbc/groebner.hpp"
#include "gbc/unipoly.hpp"

namespace gbc {

enum class CiminionVariant { Standard, Fix, Ciminion2 };

std::string variant_name(CiminionVariant v);
CiminionVariant parse_variant(const std::string& s);

struct CiminionConstants {
    // per round (c1, c2, c3, c4), with c4 outside {0, 1}
    std::vector<std::array<u128, 4>> rounds;
};

CiminionConstants derive_constants(std::span<const std::uint8_t> seed, std::size_t r, const PrimeField& f);
CiminionConstants derive_constants(u64 seed, std::size_t r, const PrimeField& f);

struct CiminionParams {
    PrimeField field;
    std::size_t rc = 0, re = 0;
    CiminionConstants constants;
    CiminionVariant variant = CiminionVariant::Standard;
    u128 alpha = 1, beta = 1; // Fix variant key-combination coefficients
    u64 seed = 0;             // constant-derivation seed, recorded for reproducibility

    std::size_t rounds() const { return rc + re; }
    void validate() const;
};

CiminionParams make_ciminion_params(const PrimeField& f, std::size_t rc, std::size_t re,
                                    CiminionVariant variant, u64 seed, u128 alpha = 1, u128 beta = 1);

struct CiminionSample {
    u128 nonce = 0, p1 = 0, p2 = 0, c1 = 0, c2 = 0;
};

using State3 = std::array<u128, 3>;

// one forward round (1-based index); key pair only consulted by the variants
State3 ciminion_round(const CiminionParams& p, std::size_t i, const State3& in, u128 k1, u128 k2);
State3 ciminion_round_inverse(const CiminionParams& p, std::size_t i, const State3& out);
State3 ciminion_rol(const State3& s);

// full permutation p_E . p_C on (nonce, k1, k2); returns the output state
State3 ciminion_permute(const CiminionParams& p, u128 nonce, u128 k1, u128 k2);

std::pair<u128, u128> ciminion_encrypt(const CiminionParams& p, u128 k1, u128 k2, u128 nonce,
                                       u128 p1, u128 p2);
CiminionSample make_ciminion_sample(const CiminionParams& p, u128 k1, u128 k2, u64 sample_seed);

// second plaintext pair via the rolling path; needs the second key pair
std::pair<u128, u128> ciminion_encrypt_second_pair(const CiminionParams& p, const std::array<u128, 4>& keys,
                                                   u128 nonce, u128 p3, u128 p4);

struct CiminionModel {
    PolySystem system; // 3r polynomials in 3r variables
    TermOrder order;   // DRL, y1 > y2 > x^(1) > ... > x^(r-1) > x
    CiminionParams params;
    CiminionSample sample;

    std::size_t var_y(std::size_t j) const { return j; }                       // j in {0,1}
    std::size_t var_x(std::size_t i, std::size_t comp) const {                 // round i in [1, r-1], comp in [0,2]
        return 2 + (i - 1) * 3 + comp;
    }
    std::size_t var_last() const { return system.ring->nvars() - 1; }
};

CiminionModel ciminion_build_model(const CiminionParams& p, const CiminionSample& s);

// the linear-transformation DRL Groebner basis: 2r+1 linear members plus r-1
// quadratics with pure-square leading monomials; reduced and monic
PolySystem ciminion_gb(const CiminionModel& model);

struct DownsizedSystem {
    PolySystem system;                  // fresh ring, one polynomial per variable
    std::vector<std::size_t> model_var; // ring variable i corresponds to this model variable
};

// keep only the quadratic members, rewritten in the r-1 surviving variables
DownsizedSystem ciminion_downsize(const CiminionModel& model, const PolySystem& gb);

// LEX Groebner basis in x-shape position via back substitution (Standard only)
PolySystem lex_shape_basis(const CiminionModel& model, const PolySystem& gb);

// univariate relation f(X) = f_1(X) - nonce obtained by inverting the rounds
// from the output state (Standard only)
UniPoly bariant_polynomial(const CiminionParams& p, const CiminionSample& s);

} // namespace gbc

#endif
