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

// Buchberger's algorithm (desk-scale oracle), the S-polynomial criterion,
// staircase extraction and the small-instance generic-coordinates test.

#ifndef GBC_GROEBNER_HPP
#define GBC_GROEBNER_HPP

#include "gbc/mpoly.hpp"

namespace gbc {

struct BuchbergerOptions {
    std::size_t max_reductions = 2'000'000; // budget on division steps
    bool coprime_skip = true;
};

MPoly s_polynomial(const MPoly& f, const MPoly& g, const TermOrder& order);

// reduced Groebner basis of (F); members monic, sorted by descending
// leading monomial
PolySystem buchberger(const PolySystem& F, const TermOrder& order, const BuchbergerOptions& opts = {});

// Buchberger criterion; with coprime_skip pairs with coprime leading
// monomials are not reduced
bool is_groebner(const PolySystem& G, const TermOrder& order, bool coprime_skip = true);

// standard monomials of a zero-dimensional leading-monomial ideal, in block
// order: sorted by exponent of the least variable first, then recursively.
// With pure-power leading monomials this lists B' u x_n B' u x_n^2 B' u ...
std::vector<Monomial> quotient_basis(const PolySystem& G, const TermOrder& order);

// the three-step procedure on (F^top): find a pure power of some variable in
// the top-component ideal, mod out that variable, repeat; true iff every
// variable succeeds
bool is_generic_coordinates_small(const PolySystem& F, const BuchbergerOptions& opts = {});

// interreduce a set whose leading monomials are already minimal; returns
// monic members with tails fully reduced
PolySystem interreduce(const PolySystem& G, const TermOrder& order);

} // namespace gbc

#endif
