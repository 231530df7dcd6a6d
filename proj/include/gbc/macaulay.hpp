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

// Macaulay and square-free ("Boolean") Macaulay matrices, row-space
// extraction, empirical solving-degree search and the small-instance degree
// of regularity.

#ifndef GBC_MACAULAY_HPP
#define GBC_MACAULAY_HPP

#include <optional>

#include "gbc/groebner.hpp"
#include "gbc/matrix.hpp"

namespace gbc {

struct MacaulayMatrix {
    int degree = 0;
    bool boolean_variant = false;
    RingPtr ring;
    TermOrder order;
    std::vector<Monomial> columns; // descending under order
    struct RowTag {
        Monomial shift;
        std::size_t poly;
    };
    std::vector<RowTag> row_tags;
    DenseMatrix entries;
};

// all monomials of degree <= d not divisible by an excluded leading
// monomial, descending under the order
std::vector<Monomial> monomial_columns(const RingPtr& ring, int d, const TermOrder& order, bool squarefree_only,
                                       const std::vector<Monomial>& excluded_lms);

MacaulayMatrix build_macaulay(const PolySystem& F, int d, const TermOrder& order);

// F_Bool must be K-Boolean: a Groebner basis whose leading monomials include
// every x_i^2.  Rows hold the remainders t*f mod (F_Bool).
MacaulayMatrix build_boolean_macaulay(const PolySystem& F, const PolySystem& FBool, int d,
                                      const TermOrder& order);

bool is_k_boolean(const PolySystem& FBool, const TermOrder& order);

// Gaussian elimination; nonzero rows as monic polynomials
PolySystem rowspace(const MacaulayMatrix& m);

// minimal-generator filter plus Buchberger verification; nullopt when the
// row space does not yet contain a Groebner basis
std::optional<PolySystem> extract_gb(const PolySystem& rows, const PolySystem* FBool, const TermOrder& order);

struct DegreeSearchRecord {
    int d = 0;
    std::size_t rows = 0, cols = 0, rank = 0; // dimensions of the final pass
    std::size_t passes = 0;                   // saturation rounds at this degree
    double millis = 0;
    bool success = false;
};

struct DegreeSearchResult {
    int degree = 0;
    std::vector<DegreeSearchRecord> trace;
    PolySystem basis;
};

DegreeSearchResult solving_degree_search(const PolySystem& F, const TermOrder& order, int d_max);
DegreeSearchResult boolean_solving_degree_search(const PolySystem& F, const PolySystem& FBool,
                                                 const TermOrder& order, int d_max);

// degree of regularity of (F^top); nullopt encodes infinity (positive
// dimensional top-component ideal)
std::optional<int> dreg_small(const PolySystem& F, const BuchbergerOptions& opts = {});

} // namespace gbc

#endif
