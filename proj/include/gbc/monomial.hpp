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

// Exponent-vector monomials and the DRL/LEX term orders.

#ifndef GBC_MONOMIAL_HPP
#define GBC_MONOMIAL_HPP

#include <cstdint>
#include <vector>

#include "gbc/errors.hpp"

namespace gbc {

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint16_t> e) : e_(std::move(e)) {}

    static Monomial variable(std::size_t nvars, std::size_t i, std::uint16_t power = 1) {
        Monomial m(nvars);
        m.e_[i] = power;
        return m;
    }

    std::size_t nvars() const { return e_.size(); }
    std::uint16_t exp(std::size_t i) const { return e_[i]; }
    const std::vector<std::uint16_t>& exps() const { return e_; }
    unsigned degree() const {
        unsigned d = 0;
        for (auto v : e_) d += v;
        return d;
    }
    bool is_one() const {
        for (auto v : e_)
            if (v != 0) return false;
        return true;
    }
    bool is_squarefree() const {
        for (auto v : e_)
            if (v > 1) return false;
        return true;
    }
    bool is_pure_power(std::size_t* var = nullptr) const;

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    // quotient o / *this; caller guarantees divisibility
    Monomial divide_into(const Monomial& o) const;
    Monomial lcm(const Monomial& o) const;
    bool coprime(const Monomial& o) const;

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }
    // plain positional comparison, used only as a canonical storage order
    bool operator<(const Monomial& o) const { return e_ < o.e_; }

private:
    std::vector<std::uint16_t> e_;
};

enum class OrderKind { DRL, LEX };

// A term order together with its variable ordering; ranking[0] is the index
// of the greatest variable.  An empty ranking means the natural order
// (variable 0 greatest).
struct TermOrder {
    OrderKind kind = OrderKind::DRL;
    std::vector<std::size_t> ranking;

    static TermOrder drl() { return TermOrder{OrderKind::DRL, {}}; }
    static TermOrder lex() { return TermOrder{OrderKind::LEX, {}}; }

    // -1, 0, +1 for a < b, a = b, a > b
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};

inline int compare_monomials(const Monomial& a, const Monomial& b, const TermOrder& order) {
    return order.compare(a, b);
}

} // namespace gbc

#endif
