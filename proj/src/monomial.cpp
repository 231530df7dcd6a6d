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

#include "gbc/monomial.hpp"

#include <algorithm>

namespace gbc {

bool Monomial::is_pure_power(std::size_t* var) const {
    std::size_t found = e_.size();
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] == 0) continue;
        if (found != e_.size()) return false;
        found = i;
    }
    if (found == e_.size()) return false; // the monomial 1
    if (var) *var = found;
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw RingMismatch("monomial lengths differ");
    std::vector<std::uint16_t> e(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) e[i] = static_cast<std::uint16_t>(e_[i] + o.e_[i]);
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw RingMismatch("monomial lengths differ");
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::divide_into(const Monomial& o) const {
    std::vector<std::uint16_t> e(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) e[i] = static_cast<std::uint16_t>(o.e_[i] - e_[i]);
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw RingMismatch("monomial lengths differ");
    std::vector<std::uint16_t> e(e_.size());
    for (std::size_t i = 0; i < e_.size(); ++i) e[i] = std::max(e_[i], o.e_[i]);
    return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw RingMismatch("monomial lengths differ");
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] != 0 && o.e_[i] != 0) return false;
    return true;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
    const std::size_t n = a.nvars();
    if (n != b.nvars()) throw RingMismatch("monomials from different rings");
    if (!ranking.empty() && ranking.size() != n) throw RingMismatch("order ranking length mismatch");
    auto at = [&](std::size_t rank) {
        std::size_t v = ranking.empty() ? rank : ranking[rank];
        return static_cast<int>(a.exp(v)) - static_cast<int>(b.exp(v));
    };
    if (kind == OrderKind::LEX) {
        // greater iff the first non-zero entry of a - b is positive
        for (std::size_t r = 0; r < n; ++r) {
            int d = at(r);
            if (d != 0) return d > 0 ? 1 : -1;
        }
        return 0;
    }
    int da = static_cast<int>(a.degree()), db = static_cast<int>(b.degree());
    if (da != db) return da > db ? 1 : -1;
    // equal degrees: greater iff the last non-zero entry of a - b is negative
    for (std::size_t r = n; r-- > 0;) {
        int d = at(r);
        if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
}

} // namespace gbc
