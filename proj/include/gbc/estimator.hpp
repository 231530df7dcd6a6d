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

// Closed-form bit-complexity calculators for the Groebner-basis attacks,
// with exact integer evaluation behind every logarithm that permits it.

#ifndef GBC_ESTIMATOR_HPP
#define GBC_ESTIMATOR_HPP

#include <string>
#include <vector>

#include "gbc/field.hpp"

namespace gbc {

struct EstimatorConfig {
    std::string q_decimal = "170141183460469231731687303715884105773"; // 2^127 + 45
    double omega = 2.0;          // linear algebra constant, [2, 2.371552)
    unsigned n_solutions = 1;    // breadth bound N in the eigenvalue costs
    unsigned security_bits = 128;

    void validate() const;
    double log2_q() const;
};

struct CiminionEstimate {
    std::size_t r = 0;
    double bariant_construction_bits = 0;
    double bariant_gcd_bits = 0;
    double bariant_bits = 0; // cost of both steps together
    std::string bariant_dominant;
    double eigenvalue_bits = 0;
    double fully_substituted_bits = 0;
};

struct HydraEstimate {
    std::size_t rh = 0;
    int dreg = 0;
    double fglm_bits = 0;
    double eigenvalue_bits = 0;
    double semiregular_bits = 0; // designers' estimate
    double bool_proven_construction_bits = 0;
    double bool_proven_elimination_bits = 0;
    double bool_semiregular_construction_bits = 0;
    double bool_semiregular_elimination_bits = 0;
    double boolean_semiregular_bits = 0; // headline: max of the two semi-regular steps
    std::string note;
};

CiminionEstimate est_ciminion(std::size_t r, const EstimatorConfig& cfg = {});
HydraEstimate est_hydra(std::size_t rh, const EstimatorConfig& cfg = {});

// index of the first negative coefficient of (1 - t^2)^(2r+2) / (1 - t)^(2r-2)
int hilbert_dreg(std::size_t rh);

// d_1 + ... + d_l - l + 1 over the l = min(n+1, m) largest degrees
long macaulay_bound(std::vector<long> degrees, std::size_t nvars);

// ceil(1.25 * max(24, 2 + r_star))
long round_recommendation(long r_star);

// log2 helpers shared with the report layer
double log2_add_bits(double a, double b);
double log2_sub_bits(double a, double b);

} // namespace gbc

#endif
