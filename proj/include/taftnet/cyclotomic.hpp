/*
   Copyright 2026 the taftnet authors

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

#ifndef TAFTNET_CYCLOTOMIC_HPP
#define TAFTNET_CYCLOTOMIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "taftnet/errors.hpp"

namespace taftnet {

// Exact rational scalar. mpq_class in canonical form is exactly the contract
// we need: gcd(|num|, den) = 1 and den > 0 after canonicalize().
using Rational = mpq_class;

Rational make_rational(long num, long den);

// Phi_N as a monic integer polynomial, ascending coefficients, degree phi(N).
std::vector<mpz_class> cyclotomic_polynomial(long N);

long euler_phi(long N);

/// An element of Q(zeta_N): a polynomial in zeta_N of degree < phi(N),
/// reduced modulo Phi_N. Equality of coefficient vectors is equality in the
/// field, since Phi_N is the minimal polynomial of zeta_N.
class CycNumber {
public:
    CycNumber() : level_(1), coeffs_(1, Rational(0)) {}
    CycNumber(long level, std::vector<Rational> coeffs);

    static CycNumber zero(long level);
    static CycNumber one(long level);
    static CycNumber from_rational(long level, const Rational& r);

    long level() const { return level_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;  // lies in Q (all non-constant coefficients zero)
    Rational rational_part() const;

    CycNumber operator-() const;
    CycNumber operator+(const CycNumber& o) const;
    CycNumber operator-(const CycNumber& o) const;
    CycNumber operator*(const CycNumber& o) const;
    CycNumber& operator+=(const CycNumber& o);
    CycNumber& operator-=(const CycNumber& o);
    CycNumber& operator*=(const CycNumber& o);
    CycNumber scaled(const Rational& r) const;

    bool operator==(const CycNumber& o) const;
    bool operator!=(const CycNumber& o) const { return !(*this == o); }

    // Multiplicative inverse; throws DivisionByZero on zero.
    CycNumber inverse() const;

    std::string str() const;

private:
    long level_;
    std::vector<Rational> coeffs_;  // length phi(level_)
};

// zeta_N^k, k taken mod N.
CycNumber q_pow(long N, long k);

CycNumber cyc_inverse(const CycNumber& a);

// If a is a root of unity zeta_N^k, returns k in [0, N); throws OracleError
// otherwise.
long root_of_unity_exponent(const CycNumber& a);

}  // namespace taftnet

#endif
