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

#include "taftnet/hopf.hpp"

#include <array>
#include <numeric>
#include <sstream>

#include "taftnet/matrix.hpp"

namespace taftnet {

namespace {
long mod(long a, long N) {
    a %= N;
    return a < 0 ? a + N : a;
}
}  // namespace

std::string HopfParams::name() const {
    std::ostringstream os;
    if (kind == HopfKind::Taft) {
        os << "Taft(" << N << ")";
    } else {
        os << "GenTaft(" << N << ";" << a1 << "," << a2 << "," << b1 << "," << b2 << ")";
    }
    return os.str();
}

long additive_order(long a, long N) {
    if (N < 1) throw InvalidLevel("additive_order: N must be positive");
    return N / std::gcd(mod(a, N), N);
}

HopfParams make_taft(long N) {
    if (N < 1) throw InvalidLevel("Taft algebra needs N >= 1");
    return HopfParams{HopfKind::Taft, N, 1, 1, 0, 0, N, 1, N * N};
}

HopfParams make_gen_taft(long N, long a1, long a2, long b1, long b2) {
    if (N < 2) throw InvalidLevel("generalized Taft algebra needs N >= 2");
    a1 = mod(a1, N);
    a2 = mod(a2, N);
    b1 = mod(b1, N);
    b2 = mod(b2, N);
    if (mod(a1 * a2, N) == 0)
        throw NilpotencyError("a1*a2 = 0 mod N: x would not be nilpotent of finite order > 1");
    if (mod(b1 * b2, N) == 0)
        throw NilpotencyError("b1*b2 = 0 mod N: y would not be nilpotent of finite order > 1");
    if (mod(a1 * b2 + b1 * a2, N) != 0)
        throw CompatibilityError("a1*b2 + b1*a2 != 0 mod N");
    const long n = additive_order(a1 * a2, N);
    const long m = additive_order(b1 * b2, N);
    return HopfParams{HopfKind::GenTaftA1A1, N, a1, a2, b1, b2, n, m, N * n * m};
}

std::vector<std::array<long, 4>> valid_gen_taft_tuples(long N) {
    std::vector<std::array<long, 4>> out;
    for (long a1 = 0; a1 < N; ++a1)
        for (long a2 = 0; a2 < N; ++a2) {
            if (mod(a1 * a2, N) == 0) continue;
            for (long b1 = 0; b1 < N; ++b1)
                for (long b2 = 0; b2 < N; ++b2) {
                    if (mod(b1 * b2, N) == 0) continue;
                    if (mod(a1 * b2 + b1 * a2, N) != 0) continue;
                    out.push_back({a1, a2, b1, b2});
                }
        }
    return out;
}

PBWElement::PBWElement(HopfParams H, PBWMono mono) : H_(std::move(H)) {
    add_term(mono, CycNumber::one(H_.N));
}

PBWElement PBWElement::unit(const HopfParams& H) { return PBWElement(H, PBWMono{0, 0, 0}); }
PBWElement PBWElement::generator_g(const HopfParams& H) { return PBWElement(H, PBWMono{1 % H.N, 0, 0}); }
PBWElement PBWElement::generator_x(const HopfParams& H) {
    if (H.n < 2) return zero(H);  // x = 0 when x^1 = 0
    return PBWElement(H, PBWMono{0, 1, 0});
}
PBWElement PBWElement::generator_y(const HopfParams& H) {
    if (!H.has_y() || H.m < 2) return zero(H);
    return PBWElement(H, PBWMono{0, 0, 1});
}

void PBWElement::add_term(const PBWMono& m, const CycNumber& c) {
    if (c.is_zero()) return;
    if (m.gi < 0 || m.gi >= H_.N || m.xj < 0 || m.xj >= H_.n || m.yk < 0 || m.yk >= H_.m)
        throw RangeError("PBW exponent out of range");
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PBWElement PBWElement::operator+(const PBWElement& o) const {
    PBWElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

PBWElement PBWElement::operator-(const PBWElement& o) const {
    PBWElement r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

PBWElement PBWElement::scaled(const CycNumber& s) const {
    PBWElement r(H_);
    if (s.is_zero()) return r;
    for (const auto& [m, c] : terms_) r.add_term(m, c * s);
    return r;
}

bool PBWElement::operator==(const PBWElement& o) const { return terms_ == o.terms_; }

std::string PBWElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        os << "(" << c.str() << ")";
        if (m.gi) os << "*g^" << m.gi;
        if (m.xj) os << "*x^" << m.xj;
        if (m.yk) os << "*y^" << m.yk;
        first = false;
    }
    return os.str();
}

std::pair<CycNumber, bool> pbw_mono_multiply(const HopfParams& H, const PBWMono& a,
                                             const PBWMono& b, PBWMono* out) {
    if (a.xj + b.xj >= H.n || a.yk + b.yk >= H.m)
        return {CycNumber::zero(H.N), false};
    // Move g^{b.gi} left past x^{a.xj} y^{a.yk}: x g = q^{-a2} g x, y g = q^{-b2} g y.
    long e = -b.gi * (a.xj * H.a2 + a.yk * H.b2);
    // Move x^{b.xj} left past y^{a.yk}: y x = q^{-a1 b2} x y.
    e += -(a.yk * b.xj) * H.a1 * H.b2;
    *out = PBWMono{mod(a.gi + b.gi, H.N), a.xj + b.xj, a.yk + b.yk};
    return {q_pow(H.N, e), true};
}

PBWElement pbw_multiply(const PBWElement& e1, const PBWElement& e2) {
    const HopfParams& H = e1.algebra();
    PBWElement out(H);
    PBWMono m{};
    for (const auto& [a, ca] : e1.terms()) {
        for (const auto& [b, cb] : e2.terms()) {
            auto [coeff, ok] = pbw_mono_multiply(H, a, b, &m);
            if (!ok) continue;
            out.add_term(m, coeff * ca * cb);
        }
    }
    return out;
}

TensorSquareElement TensorSquareElement::unit(const HopfParams& H) {
    TensorSquareElement t(H);
    t.add_term(PBWMono{0, 0, 0}, PBWMono{0, 0, 0}, CycNumber::one(H.N));
    return t;
}

void TensorSquareElement::add_term(const PBWMono& a, const PBWMono& b, const CycNumber& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorSquareElement TensorSquareElement::operator+(const TensorSquareElement& o) const {
    TensorSquareElement r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

TensorSquareElement TensorSquareElement::operator*(const TensorSquareElement& o) const {
    const HopfParams& H = H_;
    TensorSquareElement out(H);
    PBWMono m1{}, m2{};
    for (const auto& [ka, ca] : terms_) {
        for (const auto& [kb, cb] : o.terms_) {
            auto [c1, ok1] = pbw_mono_multiply(H, ka.first, kb.first, &m1);
            if (!ok1) continue;
            auto [c2, ok2] = pbw_mono_multiply(H, ka.second, kb.second, &m2);
            if (!ok2) continue;
            out.add_term(m1, m2, ca * cb * c1 * c2);
        }
    }
    return out;
}

bool TensorSquareElement::operator==(const TensorSquareElement& o) const {
    return terms_ == o.terms_;
}

namespace {

// Delta on generators; products of these give Delta on monomials.
TensorSquareElement coproduct_g_power(const HopfParams& H, long i) {
    TensorSquareElement t(H);
    t.add_term(PBWMono{mod(i, H.N), 0, 0}, PBWMono{mod(i, H.N), 0, 0}, CycNumber::one(H.N));
    return t;
}

TensorSquareElement coproduct_x(const HopfParams& H) {
    TensorSquareElement t(H);
    t.add_term(PBWMono{0, 0, 0}, PBWMono{0, 1, 0}, CycNumber::one(H.N));
    t.add_term(PBWMono{0, 1, 0}, PBWMono{mod(H.a1, H.N), 0, 0}, CycNumber::one(H.N));
    return t;
}

TensorSquareElement coproduct_y(const HopfParams& H) {
    TensorSquareElement t(H);
    t.add_term(PBWMono{0, 0, 0}, PBWMono{0, 0, 1}, CycNumber::one(H.N));
    t.add_term(PBWMono{0, 0, 1}, PBWMono{mod(H.b1, H.N), 0, 0}, CycNumber::one(H.N));
    return t;
}

TensorSquareElement coproduct_mono(const HopfParams& H, const PBWMono& m) {
    TensorSquareElement res = coproduct_g_power(H, m.gi);
    if (m.xj > 0) {
        TensorSquareElement dx = coproduct_x(H);
        for (long j = 0; j < m.xj; ++j) res = res * dx;
    }
    if (m.yk > 0) {
        TensorSquareElement dy = coproduct_y(H);
        for (long k = 0; k < m.yk; ++k) res = res * dy;
    }
    return res;
}

}  // namespace

TensorSquareElement coproduct(const PBWElement& e) {
    const HopfParams& H = e.algebra();
    TensorSquareElement out(H);
    for (const auto& [m, c] : e.terms()) {
        TensorSquareElement dm = coproduct_mono(H, m);
        for (const auto& [k, cc] : dm.terms()) out.add_term(k.first, k.second, cc * c);
    }
    return out;
}

PBWElement antipode(const PBWElement& e) {
    const HopfParams& H = e.algebra();
    // S g = g^{-1}, S x = -x g^{-a1}, S y = -y g^{-b1}, extended
    // anti-multiplicatively: S(g^i x^j y^k) = (Sy)^k (Sx)^j (Sg)^i.
    // In normal form: x g^{-a1} = q^{a1 a2} g^{-a1} x and likewise for y.
    PBWElement sx(H);
    if (H.n >= 2) sx.add_term(PBWMono{mod(-H.a1, H.N), 1, 0}, -q_pow(H.N, H.a1 * H.a2));
    PBWElement sy(H);
    if (H.has_y() && H.m >= 2)
        sy.add_term(PBWMono{mod(-H.b1, H.N), 0, 1}, -q_pow(H.N, H.b1 * H.b2));

    PBWElement out(H);
    for (const auto& [mono, c] : e.terms()) {
        PBWElement acc = PBWElement::unit(H);
        for (long k = 0; k < mono.yk; ++k) acc = pbw_multiply(acc, sy);
        for (long j = 0; j < mono.xj; ++j) acc = pbw_multiply(acc, sx);
        acc = pbw_multiply(acc, PBWElement(H, PBWMono{mod(-mono.gi, H.N), 0, 0}));
        out = out + acc.scaled(c);
    }
    return out;
}

CycNumber counit(const PBWElement& e) {
    CycNumber s = CycNumber::zero(e.algebra().N);
    for (const auto& [m, c] : e.terms()) {
        if (m.xj == 0 && m.yk == 0) s += c;
    }
    return s;
}

DistinguishedData distinguished_data(const HopfParams& H) {
    const long D = mod(H.a2 * (H.n - 1) + H.b2 * (H.m - 1), H.N);
    const long G = mod(H.a1 * (H.n - 1) + H.b1 * (H.m - 1), H.N);
    return DistinguishedData{D, G, D == 0};
}

namespace {

long basis_index(const HopfParams& H, const PBWMono& m) {
    return (m.gi * H.n + m.xj) * H.m + m.yk;
}

}  // namespace

long distinguished_grouplike_oracle(const HopfParams& H, long dim_bound) {
    if (H.dim > dim_bound)
        throw DimensionBound(H.name() + ": dimension exceeds oracle bound");
    const long N = H.N;
    const PBWMono top{0, H.n - 1, H.m - 1};

    // Every term of Delta x splits the x-degree as (0,1) or (1,0) with no
    // y-degree, and likewise for Delta y; tensor-square multiplication adds
    // degrees (truncation only drops terms). Hence a term of Delta b has
    // right-leg degrees (n-1, m-1) only when b = g^p x^{n-1} y^{m-1}, and a
    // left cointegral is determined by its values on those N monomials: the
    // constraints from all other b hold identically. The degree shape of the
    // generators is asserted here so the reduction stays tied to the code.
    const TensorSquareElement dx_check = coproduct_x(H);
    for (const auto& [uw, c] : dx_check.terms()) {
        (void)c;
        if (uw.first.xj + uw.second.xj != 1 || uw.first.yk + uw.second.yk != 0)
            throw OracleError("coproduct of x is not degree-split");
    }
    if (H.has_y()) {
        const TensorSquareElement dy_check = coproduct_y(H);
        for (const auto& [uw, c] : dy_check.terms()) {
            (void)c;
            if (uw.first.yk + uw.second.yk != 1 || uw.first.xj + uw.second.xj != 0)
                throw OracleError("coproduct of y is not degree-split");
        }
    }

    // Coproducts of the N top monomials g^p x^{n-1} y^{m-1}.
    std::vector<TensorSquareElement> dtop;
    dtop.reserve(N);
    {
        TensorSquareElement base = coproduct_mono(H, top);
        for (long p = 0; p < N; ++p) {
            dtop.push_back(coproduct_g_power(H, p) * base);
        }
    }

    // Solve for lambda(g^t x^{n-1} y^{m-1}) =: lam_t.
    std::map<PBWMono, std::vector<CycNumber>> row_map;
    auto row_of = [&](const PBWMono& u) -> std::vector<CycNumber>& {
        auto it = row_map.find(u);
        if (it == row_map.end())
            it = row_map.emplace(u, std::vector<CycNumber>(N, CycNumber::zero(N))).first;
        return it->second;
    };
    for (long p = 0; p < N; ++p) {
        for (const auto& [uw, c] : dtop[p].terms()) {
            const PBWMono& w = uw.second;
            if (w.xj == H.n - 1 && w.yk == H.m - 1) row_of(uw.first)[w.gi] += c;
        }
        row_of(PBWMono{0, 0, 0})[p] -= CycNumber::one(N);
    }
    CycMatrix sys(N, static_cast<long>(row_map.size()), N);
    {
        long r = 0;
        for (const auto& [u, row] : row_map) {
            for (long t = 0; t < N; ++t) sys.at(r, t) = row[t];
            ++r;
        }
    }
    auto kb = kernel_basis(sys);
    if (kb.size() != 1)
        throw OracleError(H.name() + ": cointegral solution space has dimension " +
                          std::to_string(kb.size()));
    const std::vector<CycNumber>& lam = kb[0];

    auto lambda_of = [&](const PBWMono& m) -> CycNumber {
        if (m.xj == H.n - 1 && m.yk == H.m - 1) return lam[m.gi];
        return CycNumber::zero(N);
    };

    // Re-verify the cointegral property on the constrained monomials.
    for (long p = 0; p < N; ++p) {
        const PBWMono b{p, H.n - 1, H.m - 1};
        PBWElement lhs(H);
        for (const auto& [uw, c] : dtop[p].terms()) {
            lhs.add_term(uw.first, c * lambda_of(uw.second));
        }
        PBWElement rhs = PBWElement::unit(H).scaled(lambda_of(b));
        if (!(lhs == rhs)) throw OracleError(H.name() + ": cointegral verification failed");
    }

    // Distinguished group-like a: (lambda (x) id)(Delta b) = lambda(b) * a.
    long exponent = -1;
    for (long p = 0; p < N; ++p) {
        const PBWMono b{p, H.n - 1, H.m - 1};
        const CycNumber lb = lambda_of(b);
        PBWElement a(H);
        for (const auto& [uw, c] : dtop[p].terms()) {
            a.add_term(uw.second, c * lambda_of(uw.first));
        }
        if (lb.is_zero()) {
            if (!a.is_zero()) throw OracleError(H.name() + ": group-like assembly inconsistent");
            continue;
        }
        a = a.scaled(lb.inverse());
        if (a.terms().size() != 1) throw OracleError(H.name() + ": assembled element not group-like");
        const auto& [mono, coeff] = *a.terms().begin();
        if (mono.xj != 0 || mono.yk != 0 || !coeff.is_one())
            throw OracleError(H.name() + ": assembled element not a g-power");
        if (exponent >= 0 && exponent != mono.gi)
            throw OracleError(H.name() + ": group-like exponent not unique");
        exponent = mono.gi;
    }
    if (exponent < 0) throw OracleError(H.name() + ": cointegral is zero");
    return exponent;
}

long left_integral_character_oracle(const HopfParams& H, long dim_bound) {
    if (H.dim > dim_bound)
        throw DimensionBound(H.name() + ": dimension exceeds oracle bound");
    const long N = H.N;
    const long nm = H.n * H.m;

    // g Lambda = Lambda forces Lambda into span{ u_{jk} = sum_i g^i x^j y^k }.
    auto u_elem = [&](long j, long k) {
        PBWElement e(H);
        for (long i = 0; i < N; ++i) e.add_term(PBWMono{i, j, k}, CycNumber::one(N));
        return e;
    };
    std::vector<PBWElement> gens = {PBWElement::generator_x(H)};
    if (H.has_y()) gens.push_back(PBWElement::generator_y(H));

    CycMatrix sys(N, static_cast<long>(gens.size()) * H.dim, nm);
    for (long j = 0; j < H.n; ++j) {
        for (long k = 0; k < H.m; ++k) {
            const long col = j * H.m + k;
            PBWElement u = u_elem(j, k);
            for (size_t gidx = 0; gidx < gens.size(); ++gidx) {
                PBWElement prod = pbw_multiply(gens[gidx], u);
                for (const auto& [m, c] : prod.terms()) {
                    sys.at(static_cast<long>(gidx) * H.dim + basis_index(H, m), col) += c;
                }
            }
        }
    }
    auto kb = kernel_basis(sys);
    if (kb.size() != 1)
        throw OracleError(H.name() + ": left integral space has dimension " +
                          std::to_string(kb.size()));

    PBWElement integral(H);
    for (long j = 0; j < H.n; ++j)
        for (long k = 0; k < H.m; ++k) {
            const CycNumber& c = kb[0][j * H.m + k];
            if (c.is_zero()) continue;
            for (long i = 0; i < N; ++i) integral.add_term(PBWMono{i, j, k}, c);
        }
    // Sanity: h Lambda = eps(h) Lambda for the generators.
    PBWElement g = PBWElement::generator_g(H);
    if (!(pbw_multiply(g, integral) == integral))
        throw OracleError(H.name() + ": integral verification failed for g");
    for (const auto& gen : gens)
        if (!pbw_multiply(gen, integral).is_zero())
            throw OracleError(H.name() + ": integral verification failed for a nilpotent");

    // Character of the right action: Lambda g = q^e Lambda.
    PBWElement rg = pbw_multiply(integral, g);
    const auto& [mono, coeff] = *integral.terms().begin();
    auto it = rg.terms().find(mono);
    if (it == rg.terms().end()) throw OracleError(H.name() + ": right action not diagonal");
    const CycNumber scalar = it->second * coeff.inverse();
    const long e = root_of_unity_exponent(scalar);
    if (!(rg == integral.scaled(scalar)))
        throw OracleError(H.name() + ": right action is not by a scalar");
    return e;
}

}  // namespace taftnet
