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

#include "taftnet/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace taftnet {

Rational make_rational(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

long euler_phi(long N) {
    if (N < 1) throw InvalidLevel("euler_phi: N must be positive");
    long result = N;
    long n = N;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Exact division of integer polynomials, divisor monic. Ascending coeffs.
std::vector<mpz_class> divide_monic(std::vector<mpz_class> num,
                                    const std::vector<mpz_class>& den) {
    const long dn = static_cast<long>(num.size()) - 1;
    const long dd = static_cast<long>(den.size()) - 1;
    std::vector<mpz_class> quot(dn - dd + 1, 0);
    for (long k = dn - dd; k >= 0; --k) {
        mpz_class c = num[k + dd];
        quot[k] = c;
        if (c == 0) continue;
        for (long i = 0; i <= dd; ++i) num[k + i] -= c * den[i];
    }
    for (long i = 0; i < dd; ++i) {
        if (num[i] != 0) throw OracleError("divide_monic: nonzero remainder");
    }
    return quot;
}

struct LevelTable {
    long phi = 0;
    std::vector<mpz_class> poly;  // Phi_N, ascending, monic
    // x^(phi + t) mod Phi_N, as rows of phi rationals; covers every degree a
    // product of reduced values or a monomial zeta^k (k < N) can reach.
    std::vector<std::vector<Rational>> power_rows;
};

std::shared_ptr<const LevelTable> level_table(long N) {
    static std::mutex mu;
    static std::map<long, std::shared_ptr<const LevelTable>> cache;
    std::scoped_lock lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;

    auto tab = std::make_shared<LevelTable>();
    tab->poly = cyclotomic_polynomial(N);
    tab->phi = static_cast<long>(tab->poly.size()) - 1;
    const long phi = tab->phi;
    const long max_degree = std::max(2 * phi - 2, N - 1);
    // Row for x^phi: x^phi = -sum_{i<phi} poly[i] x^i (poly is monic).
    std::vector<Rational> row(phi);
    for (long i = 0; i < phi; ++i) row[i] = Rational(-tab->poly[i]);
    tab->power_rows.push_back(row);
    for (long t = 1; t + phi <= max_degree; ++t) {
        // x^(phi+t) = x * previous row, reduced.
        const auto& prev = tab->power_rows.back();
        std::vector<Rational> next(phi, Rational(0));
        for (long i = 0; i + 1 < phi; ++i) next[i + 1] = prev[i];
        const Rational& top = prev[phi - 1];
        if (top != 0) {
            const auto& r0 = tab->power_rows.front();
            for (long i = 0; i < phi; ++i) next[i] += top * r0[i];
        }
        tab->power_rows.push_back(next);
    }
    cache.emplace(N, tab);
    return tab;
}

std::vector<Rational> reduce_mod_phi(long N, std::vector<Rational> poly) {
    auto tab = level_table(N);
    const long phi = tab->phi;
    const long covered = phi + static_cast<long>(tab->power_rows.size()) - 1;
    long deg = static_cast<long>(poly.size()) - 1;
    if (deg > covered) {
        // Long division by the monic Phi_N for degrees beyond the table.
        for (long k = deg; k >= phi; --k) {
            const Rational c = poly[k];
            if (c == 0) continue;
            poly[k] = 0;
            for (long i = 0; i < phi; ++i) poly[k - phi + i] -= c * Rational(tab->poly[i]);
        }
        poly.resize(phi);
    }
    std::vector<Rational> out(phi, Rational(0));
    for (long k = 0; k < static_cast<long>(poly.size()); ++k) {
        if (poly[k] == 0) continue;
        if (k < phi) {
            out[k] += poly[k];
        } else {
            const auto& row = tab->power_rows[k - phi];
            for (long i = 0; i < phi; ++i) out[i] += poly[k] * row[i];
        }
    }
    return out;
}

}  // namespace

std::vector<mpz_class> cyclotomic_polynomial(long N) {
    if (N < 1) throw InvalidLevel("cyclotomic_polynomial: N must be positive");
    if (N == 1) return {mpz_class(-1), mpz_class(1)};  // x - 1
    // (x^N - 1) / prod_{d | N, d < N} Phi_d
    std::vector<mpz_class> num(N + 1, 0);
    num[0] = -1;
    num[N] = 1;
    for (long d = 1; d < N; ++d) {
        if (N % d == 0) num = divide_monic(std::move(num), cyclotomic_polynomial(d));
    }
    return num;
}

CycNumber::CycNumber(long level, std::vector<Rational> coeffs)
    : level_(level), coeffs_(std::move(coeffs)) {
    const long phi = euler_phi(level);
    if (static_cast<long>(coeffs_.size()) != phi) {
        coeffs_ = reduce_mod_phi(level, std::move(coeffs_));
    }
}

CycNumber CycNumber::zero(long level) {
    return CycNumber(level, std::vector<Rational>(euler_phi(level), Rational(0)));
}

CycNumber CycNumber::one(long level) {
    std::vector<Rational> c(euler_phi(level), Rational(0));
    c[0] = 1;
    return CycNumber(level, std::move(c));
}

CycNumber CycNumber::from_rational(long level, const Rational& r) {
    std::vector<Rational> c(euler_phi(level), Rational(0));
    c[0] = r;
    return CycNumber(level, std::move(c));
}

bool CycNumber::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CycNumber::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

bool CycNumber::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational CycNumber::rational_part() const {
    if (!is_rational()) throw OracleError("rational_part of a non-rational value");
    return coeffs_[0];
}

CycNumber CycNumber::operator-() const {
    std::vector<Rational> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return CycNumber(level_, std::move(c));
}

CycNumber CycNumber::operator+(const CycNumber& o) const {
    CycNumber r = *this;
    r += o;
    return r;
}

CycNumber CycNumber::operator-(const CycNumber& o) const {
    CycNumber r = *this;
    r -= o;
    return r;
}

CycNumber& CycNumber::operator+=(const CycNumber& o) {
    if (level_ != o.level_) throw InvalidLevel("mixed cyclotomic levels");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& o) {
    if (level_ != o.level_) throw InvalidLevel("mixed cyclotomic levels");
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CycNumber CycNumber::operator*(const CycNumber& o) const {
    if (level_ != o.level_) throw InvalidLevel("mixed cyclotomic levels");
    const long phi = static_cast<long>(coeffs_.size());
    std::vector<Rational> prod(2 * phi - 1, Rational(0));
    for (long i = 0; i < phi; ++i) {
        if (coeffs_[i] == 0) continue;
        for (long j = 0; j < phi; ++j) {
            if (o.coeffs_[j] == 0) continue;
            prod[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    return CycNumber(level_, reduce_mod_phi(level_, std::move(prod)));
}

CycNumber& CycNumber::operator*=(const CycNumber& o) {
    *this = *this * o;
    return *this;
}

CycNumber CycNumber::scaled(const Rational& r) const {
    std::vector<Rational> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] * r;
    return CycNumber(level_, std::move(c));
}

bool CycNumber::operator==(const CycNumber& o) const {
    return level_ == o.level_ && coeffs_ == o.coeffs_;
}

CycNumber CycNumber::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(zeta)");
    if (is_rational()) {
        return from_rational(level_, Rational(1) / coeffs_[0]);
    }
    // Extended Euclid in Q[x] for gcd(a, Phi_N) = 1: u*a + v*Phi = 1.
    auto tab = level_table(level_);
    std::vector<Rational> r0(tab->poly.size());
    for (size_t i = 0; i < tab->poly.size(); ++i) r0[i] = Rational(tab->poly[i]);
    std::vector<Rational> r1(coeffs_);
    auto degree = [](const std::vector<Rational>& p) {
        for (long i = static_cast<long>(p.size()) - 1; i >= 0; --i)
            if (p[i] != 0) return i;
        return -1L;
    };
    std::vector<Rational> u0{Rational(0)}, u1{Rational(1)};  // coeffs of 'a'
    while (true) {
        long d1 = degree(r1);
        if (d1 < 0) throw OracleError("inverse: gcd(a, Phi_N) != 1");
        if (d1 == 0) break;
        // r0 = q * r1 + r2
        long d0 = degree(r0);
        std::vector<Rational> q(std::max<long>(d0 - d1 + 1, 1), Rational(0));
        std::vector<Rational> rem = r0;
        for (long k = d0 - d1; k >= 0; --k) {
            Rational c = rem[k + d1] / r1[d1];
            q[k] = c;
            if (c == 0) continue;
            for (long i = 0; i <= d1; ++i) rem[k + i] -= c * r1[i];
        }
        // u2 = u0 - q * u1
        std::vector<Rational> u2(std::max(u0.size(), u1.size() + q.size()), Rational(0));
        for (size_t i = 0; i < u0.size(); ++i) u2[i] = u0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < u1.size(); ++j) u2[i + j] -= q[i] * u1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    // r1 is a nonzero constant: a^{-1} = u1 / r1 mod Phi.
    Rational c = r1[0];
    for (auto& x : u1) x /= c;
    return CycNumber(level_, reduce_mod_phi(level_, std::move(u1)));
}

std::string CycNumber::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        os << coeffs_[i].get_str();
        if (i > 0) os << "*z^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

CycNumber q_pow(long N, long k) {
    if (N < 1) throw InvalidLevel("q_pow: N must be positive");
    k %= N;
    if (k < 0) k += N;
    std::vector<Rational> mono(k + 1, Rational(0));
    mono[k] = 1;
    return CycNumber(N, reduce_mod_phi(N, std::move(mono)));
}

CycNumber cyc_inverse(const CycNumber& a) { return a.inverse(); }

long root_of_unity_exponent(const CycNumber& a) {
    const long N = a.level();
    for (long k = 0; k < N; ++k) {
        if (a == q_pow(N, k)) return k;
    }
    throw OracleError("value is not a power of zeta_N");
}

}  // namespace taftnet
