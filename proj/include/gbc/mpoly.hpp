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

// Sparse multivariate polynomials over F_q and multivariate division.

#ifndef GBC_MPOLY_HPP
#define GBC_MPOLY_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gbc/field.hpp"
#include "gbc/monomial.hpp"

namespace gbc {

struct PolyRing {
    PrimeField field;
    std::vector<std::string> vars;

    PolyRing(const PrimeField& f, std::vector<std::string> names) : field(f), vars(std::move(names)) {}
    std::size_t nvars() const { return vars.size(); }
    std::size_t var_index(const std::string& name) const;
    bool compatible(const PolyRing& o) const {
        return field == o.field && vars.size() == o.vars.size();
    }
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(const PrimeField& f, std::vector<std::string> names);
// x0, x1, ... placeholder names
RingPtr make_ring(const PrimeField& f, std::size_t nvars);

class MPoly {
public:
    explicit MPoly(RingPtr ring) : ring_(std::move(ring)) {}

    static MPoly zero(RingPtr ring) { return MPoly(std::move(ring)); }
    static MPoly constant(RingPtr ring, u128 v);
    static MPoly variable(RingPtr ring, std::size_t i);
    static MPoly term(RingPtr ring, const Monomial& m, u128 coeff);

    const RingPtr& ring() const { return ring_; }
    const PrimeField& field() const { return ring_->field; }
    std::size_t nvars() const { return ring_->nvars(); }

    bool is_zero() const { return t_.empty(); }
    std::size_t num_terms() const { return t_.size(); }
    long total_degree() const; // -1 for zero
    u128 coeff(const Monomial& m) const;
    const std::map<Monomial, u128>& terms() const { return t_; }

    void add_term(const Monomial& m, u128 coeff); // accumulates, drops zeros

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator-() const;
    MPoly scale(u128 s) const;
    MPoly mul_term(const Monomial& m, u128 coeff) const;
    bool operator==(const MPoly& o) const;
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    Monomial leading_monomial(const TermOrder& order) const; // throws ZeroPolynomial
    u128 leading_coeff(const TermOrder& order) const;
    MPoly monic(const TermOrder& order) const;

    u128 eval(const std::vector<u128>& point) const;
    // substitute repl[i] for variable i wherever repl[i] is set
    MPoly substitute(const std::vector<std::optional<MPoly>>& repl) const;
    // fix variable i to a constant
    MPoly substitute_value(std::size_t var, u128 value) const;

    std::string str() const;
    static MPoly parse(RingPtr ring, const std::string& text);

private:
    void check_ring(const MPoly& o) const {
        if (!ring_->compatible(*o.ring_)) throw RingMismatch();
    }
    RingPtr ring_;
    std::map<Monomial, u128> t_; // canonical positional order; values nonzero
};

// sum of the terms of maximal total degree
MPoly top_component(const MPoly& f);

enum class PolyRole { None, Affine, Quadratic, BooleanBasis };

struct PolySystem {
    RingPtr ring;
    std::vector<MPoly> polys;
    std::vector<PolyRole> roles; // optional, parallel to polys when non-empty

    PolySystem() = default;
    explicit PolySystem(RingPtr r) : ring(std::move(r)) {}
    PolySystem(RingPtr r, std::vector<MPoly> p) : ring(std::move(r)), polys(std::move(p)) {}

    std::size_t size() const { return polys.size(); }
    bool empty() const { return polys.empty(); }
    void push(MPoly p, PolyRole role = PolyRole::None);
};

// remainder of multivariate division of f by G; no remainder term is
// divisible by any leading monomial of G.  Ties are broken by dividing by
// the member with the DRL-greatest leading monomial among the divisors.
MPoly reduce(const MPoly& f, const PolySystem& G, const TermOrder& order);

} // namespace gbc

#endif
