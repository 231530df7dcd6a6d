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

// Zero finding from a known DRL Groebner basis: multiplication matrices,
// block-companion characteristic polynomials, the iterative eigenvalue
// solver for structured quadratic bases, deterministic FGLM, and the two
// end-to-end key-recovery pipelines.

#ifndef GBC_SOLVER_HPP
#define GBC_SOLVER_HPP

#include <optional>

#include "gbc/ciminion.hpp"
#include "gbc/hydra.hpp"
#include "gbc/macaulay.hpp"

namespace gbc {

struct MultiplicationMatrix {
    DenseMatrix matrix;          // row b = coefficients of b * x_var mod (G)
    std::vector<Monomial> basis; // quotient basis in block order
    std::size_t var = 0;
};

MultiplicationMatrix multiplication_matrix(const PolySystem& G, const TermOrder& order, std::size_t var);

// characteristic polynomial of the multiplication matrix of the order-least
// variable, via the block companion determinant over F_q[x]
UniPoly block_charpoly(const PolySystem& G, const TermOrder& order);

// determinant of a univariate-polynomial matrix by fraction-free elimination
UniPoly polymatrix_det(std::vector<std::vector<UniPoly>> m, const PrimeField& f);

struct SolveOptions {
    std::optional<std::size_t> root_cap; // breadth cap per iteration (N); unset = explore all
    std::size_t budget = 1u << 20;       // bound on visited search nodes
    double budget_ms = 0;                // wall-clock cap; 0 = none
    u64 seed = 0x65696765ULL;
};

struct SolveStats {
    std::size_t charpolys = 0;
    std::size_t branches = 0;
    std::size_t verified = 0;
};

// all common zeros over F_q of a structured quadratic basis (leading
// monomials x_i^2, quadratic parts supported on order-later variables);
// candidates failing any member of `filter` are dropped
std::vector<std::vector<u128>> eigen_solve(const PolySystem& G, const TermOrder& order,
                                           const SolveOptions& opts = {},
                                           const PolySystem* filter = nullptr,
                                           SolveStats* stats = nullptr);

// deterministic term-order conversion of a zero-dimensional DRL basis
PolySystem fglm(const PolySystem& Gdrl, const TermOrder& drl_order, const TermOrder& lex_order,
                std::size_t dim_budget = 4096);

struct CiminionKeyResult {
    u128 k1 = 0, k2 = 0;
};

struct CiminionAttack {
    std::vector<CiminionKeyResult> keys; // verified candidates only
    SolveStats stats;
    std::string strategy;
};

CiminionAttack recover_ciminion_key(const CiminionParams& params, const CiminionSample& sample,
                                    const SolveOptions& opts = {});

struct HydraAttack {
    std::vector<HydraWitness> keys; // verified candidates with witnesses
    SolveStats stats;
    std::string strategy;
};

HydraAttack recover_hydra_key(const HydraParams& params, const HydraSamplePair& outputs,
                              const SolveOptions& opts = {});

} // namespace gbc

#endif
