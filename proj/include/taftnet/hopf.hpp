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

#ifndef TAFTNET_HOPF_HPP
#define TAFTNET_HOPF_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "taftnet/cyclotomic.hpp"

namespace taftnet {

enum class HopfKind { Taft, GenTaftA1A1 };

/// Descriptor of a Taft algebra H_N = <g,x | g^N=1, x^N=0, gx=qxg> or a
/// generalized Taft algebra of type A1xA1,
///   H = <g,x,y | g^N=1, x^n=0, y^m=0, gx=q^{a2}xg, gy=q^{b2}yg, xy=q^{a1b2}yx>
/// with coproduct dx = 1(x)x + x(x)g^{a1}, dy = 1(x)y + y(x)g^{b1}.
/// Taft is the x-only case with (a1,a2) = (1,1), n = N.
struct HopfParams {
    HopfKind kind;
    long N;
    long a1, a2, b1, b2;  // Taft: a1 = a2 = 1, b1 = b2 = 0
    long n, m;            // nilpotency orders of x and y (Taft: n = N, m = 1)
    long dim;             // N*n*m

    bool has_y() const { return kind == HopfKind::GenTaftA1A1; }
    std::string name() const;
};

// Smallest k > 0 with k*a = 0 in Z/N, i.e. N / gcd(N, a).
long additive_order(long a, long N);

HopfParams make_taft(long N);
HopfParams make_gen_taft(long N, long a1, long a2, long b1, long b2);

// All valid generalized Taft parameter tuples at level N, ordered
// lexicographically by (a1,a2,b1,b2).
std::vector<std::array<long, 4>> valid_gen_taft_tuples(long N);

/// PBW monomial g^i x^j y^k in normal form (i mod N, j < n, k < m).
struct PBWMono {
    long gi, xj, yk;
    auto operator<=>(const PBWMono&) const = default;
};

/// Element of the Hopf algebra as an exact coefficient map over normal-form
/// monomials. Zero coefficients are never stored.
class PBWElement {
public:
    explicit PBWElement(HopfParams H) : H_(std::move(H)) {}
    PBWElement(HopfParams H, PBWMono mono);

    static PBWElement zero(const HopfParams& H) { return PBWElement(H); }
    static PBWElement unit(const HopfParams& H);
    static PBWElement generator_g(const HopfParams& H);
    static PBWElement generator_x(const HopfParams& H);
    static PBWElement generator_y(const HopfParams& H);

    const HopfParams& algebra() const { return H_; }
    const std::map<PBWMono, CycNumber>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const PBWMono& m, const CycNumber& c);

    PBWElement operator+(const PBWElement& o) const;
    PBWElement operator-(const PBWElement& o) const;
    PBWElement scaled(const CycNumber& s) const;
    bool operator==(const PBWElement& o) const;
    bool operator!=(const PBWElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    HopfParams H_;
    std::map<PBWMono, CycNumber> terms_;
};

/// Element of H (x) H over the PBW basis pairs.
class TensorSquareElement {
public:
    explicit TensorSquareElement(HopfParams H) : H_(std::move(H)) {}

    static TensorSquareElement unit(const HopfParams& H);

    const HopfParams& algebra() const { return H_; }
    const std::map<std::pair<PBWMono, PBWMono>, CycNumber>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const PBWMono& a, const PBWMono& b, const CycNumber& c);

    TensorSquareElement operator+(const TensorSquareElement& o) const;
    TensorSquareElement operator*(const TensorSquareElement& o) const;
    bool operator==(const TensorSquareElement& o) const;

private:
    HopfParams H_;
    std::map<std::pair<PBWMono, PBWMono>, CycNumber> terms_;
};

// Product of two normal-form monomials: coefficient from the commutation
// relations, zero when an x- or y-power truncates.
std::pair<CycNumber, bool> pbw_mono_multiply(const HopfParams& H, const PBWMono& a,
                                             const PBWMono& b, PBWMono* out);

PBWElement pbw_multiply(const PBWElement& e1, const PBWElement& e2);

TensorSquareElement coproduct(const PBWElement& e);

PBWElement antipode(const PBWElement& e);

CycNumber counit(const PBWElement& e);

struct DistinguishedData {
    long D_index;          // socle weight of P_0: a2(n-1) + b2(m-1) mod N
    long grouplike_index;  // exponent of the distinguished group-like of H
    bool unimodular;       // D_index == 0
};

DistinguishedData distinguished_data(const HopfParams& H);

inline constexpr long kDefaultOracleDimBound = 256;

// Distinguished group-like element of H from an exact cointegral computation
// on PBW coordinates: solves for a nonzero left cointegral functional lambda
// ((id (x) lambda)(Delta h) = lambda(h) 1 for all h), then reads the
// group-like a with (lambda (x) id)(Delta h) = lambda(h) a and returns its
// exponent on g. Independent of the closed form in distinguished_data.
long distinguished_grouplike_oracle(const HopfParams& H,
                                    long dim_bound = kDefaultOracleDimBound);

// Exponent e with Lambda * g = q^e Lambda for a left integral Lambda of H
// (h Lambda = eps(h) Lambda), solved exactly on PBW coordinates. For this
// family e = -D_index mod N, giving a second, independent check of the socle
// closed form.
long left_integral_character_oracle(const HopfParams& H,
                                    long dim_bound = kDefaultOracleDimBound);

// True iff v |-> g^d v together with the character alpha(g) = q^c defines an
// intertwiner V** (x) alpha -> alpha (x) V on every module of the generating
// test set (all P_k and all T_k). Matrix oracle, frozen convention; see reps.
bool check_pair_in_involution(const HopfParams& H, long c, long d);

}  // namespace taftnet

#endif
