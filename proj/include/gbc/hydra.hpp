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

// The Hydra heads and rolling function, the two-sample iterated model, the
// linear transformation to Feistel-like form, the generic-coordinates rank
// test, affine elimination, and the change of coordinates that yields a
// quadratic DRL Groebner basis plus four extra quadratics.

#ifndef GBC_HYDRA_HPP
#define GBC_HYDRA_HPP

#include <array>

#include "gbc/matrix.hpp"
#include "gbc/mpoly.hpp"

namespace gbc {

using Vec4 = std::array<u128, 4>;
using Vec8 = std::array<u128, 8>;

struct HydraParams {
    PrimeField field;
    std::size_t rh = 0;
    DenseMatrix me;      // 4x4 MDS layer for the key expansion
    DenseMatrix mi;      // 4x4, constrained shape
    DenseMatrix mj;      // 8x8 head mixing layer
    std::vector<Vec8> head_constants;   // one per round
    Vec8 rolling_constant{};            // added after the first rolling step
    u64 seed = 0;

    DenseMatrix mr() const; // diag(mi, mi)
    void validate() const;  // invertibility and the mi shape
};

// the concrete-instance matrices reduced into the given field
DenseMatrix hydra_instance_me(const PrimeField& f);
DenseMatrix hydra_instance_mi(const PrimeField& f);
DenseMatrix hydra_instance_mj(const PrimeField& f);

std::vector<Vec8> hydra_derive_constants(u64 seed, std::size_t r, const PrimeField& f);

HydraParams make_hydra_params(const PrimeField& f, std::size_t rh, u64 seed);

struct HydraSamplePair {
    Vec8 c1{}, c2{};
};

struct HydraWitness {
    Vec4 key{}, y{}, z{};
};

Vec8 hydra_key_expand(const HydraParams& p, const Vec4& k);
Vec8 hydra_head_round(const HydraParams& p, std::size_t i, const Vec8& state, const Vec8& kprime);
Vec8 hydra_heads(const HydraParams& p, const Vec4& k, const Vec8& yz);
Vec8 hydra_roll(const HydraParams& p, const Vec8& yz); // rolling step plus constant

// both released samples; the body is bypassed and (y, z) supplied directly
HydraSamplePair heads_sample(const HydraParams& p, const Vec4& k, const Vec4& y, const Vec4& z);

HydraWitness random_hydra_witness(const HydraParams& p, u64 seed);

struct HydraModel {
    PolySystem system; // 16r+8 polynomials in 16r+4 variables
    TermOrder order;   // DRL, y > z > x_1^(1..r-1) > x_2^(0..r-1) > k
    HydraParams params;
    HydraSamplePair outputs;

    std::size_t var_y(std::size_t l) const { return l; }
    std::size_t var_z(std::size_t l) const { return 4 + l; }
    std::size_t var_x1(std::size_t i, std::size_t l) const { return 8 + (i - 1) * 8 + l; } // i in [1, r-1]
    std::size_t var_x2(std::size_t i, std::size_t l) const {                               // i in [0, r-1]
        return 8 + (params.rh - 1) * 8 + i * 8 + l;
    }
    std::size_t var_k(std::size_t l) const { return 16 * params.rh + l; }
};

HydraModel hydra_build_model(const HydraParams& p, const HydraSamplePair& outputs);

// G = { A8 MJ^-1 f1, B MR^-1 fR, A8 MJ^-1 f2 }; per head block seven affine
// members and one quadratic, per rolling block six affine and two quadratic
PolySystem hydra_transform(const HydraModel& model);

struct RankCheck {
    std::size_t rank = 0;
    std::size_t expected = 0;
    bool full_rank = false;
};

// the generic-coordinates linear system and its rank
RankCheck generic_coordinates_check(const PolySystem& G, const HydraModel& model);

struct AffineElimination {
    PolySystem reduced;                             // 2r+2 quadratics in the surviving variables
    std::vector<std::optional<MPoly>> substitution; // per model variable; null = surviving
    std::vector<std::size_t> surviving;             // model variable indices, ring order
    std::size_t affine_rank = 0;
    // reduced ordering: head quadratics sample 1 rounds 1..r, sample 2
    // rounds 1..r, then the two rolling quadratics
};

AffineElimination eliminate_affine(const PolySystem& G, const HydraModel& model);

struct CoordinateChange {
    DenseMatrix m, m_inv;              // xhat = m * x_surviving
    std::vector<std::size_t> selected; // indices into the 2r head-form list
    RingPtr hat_ring;
    AffineElimination elim;
};

struct HydraGb {
    PolySystem gb;     // 2r-2 members, g_i = xhat_i^2 + affine
    PolySystem extras; // 4 additional quadratics in the hat variables
    CoordinateChange change;
};

HydraGb change_of_coordinates(const HydraModel& model, const AffineElimination& elim);

// full model assignment from a hat-variable solution
std::vector<u128> hydra_pullback(const HydraModel& model, const CoordinateChange& change,
                                 const std::vector<u128>& hat_values);

} // namespace gbc

#endif
