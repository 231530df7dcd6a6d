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

#ifndef GBC_ERRORS_HPP
#define GBC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gbc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InversionOfZero : Error {
    InversionOfZero() : Error("inversion of zero") {}
};

struct InvalidModulus : Error {
    explicit InvalidModulus(const std::string& what) : Error(what) {}
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

struct RingMismatch : Error {
    explicit RingMismatch(const std::string& what = "operands live in different rings") : Error(what) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what = "computation budget exceeded") : Error(what) {}
};

struct NotZeroDimensional : Error {
    explicit NotZeroDimensional(const std::string& what = "ideal is not zero-dimensional") : Error(what) {}
};

struct InvalidParams : Error {
    explicit InvalidParams(const std::string& what) : Error(what) {}
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& what = "matrix is singular") : Error(what) {}
};

struct ShapeUnavailable : Error {
    explicit ShapeUnavailable(const std::string& what = "substitution chain broken") : Error(what) {}
};

struct VariantUnsupported : Error {
    explicit VariantUnsupported(const std::string& what = "operation unsupported for this variant") : Error(what) {}
};

struct AffineRankDeficit : Error {
    std::size_t rank_found;
    AffineRankDeficit(std::size_t found, std::size_t expected)
        : Error("affine rank " + std::to_string(found) + ", expected " + std::to_string(expected)),
          rank_found(found) {}
};

struct ChangeOfCoordinatesFailed : Error {
    explicit ChangeOfCoordinatesFailed(const std::string& what = "no independent subset of full size")
        : Error(what) {}
};

struct NotBoolean : Error {
    explicit NotBoolean(const std::string& what = "system is not K-Boolean") : Error(what) {}
};

struct NotFoundWithin : Error {
    int d_max;
    explicit NotFoundWithin(int dmax)
        : Error("no Groebner basis found up to degree " + std::to_string(dmax)), d_max(dmax) {}
};

struct ShapeViolation : Error {
    explicit ShapeViolation(const std::string& what = "system violates the structured shape") : Error(what) {}
};

struct NoSolution : Error {
    explicit NoSolution(const std::string& what = "no verified solution") : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace gbc

#endif
