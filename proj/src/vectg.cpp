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

#include "taftnet/vectg.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "taftnet/errors.hpp"

namespace taftnet {

long FiniteGroup::inv(long a) const {
    for (long b = 0; b < order; ++b)
        if (table[a][b] == identity) return b;
    throw GroupFormatError("element without inverse");
}

long FiniteGroup::element_order(long a) const {
    long acc = a, ord = 1;
    while (acc != identity) {
        acc = table[acc][a];
        ++ord;
        if (ord > order) throw GroupFormatError("element order exceeds group order");
    }
    return ord;
}

FiniteGroup load_cayley(std::istream& in) {
    FiniteGroup G;
    if (!(in >> G.order)) throw GroupFormatError("missing group order");
    if (G.order < 1 || G.order > kMaxGroupOrder)
        throw GroupFormatError("group order out of range [1, 128]");
    G.table.assign(G.order, std::vector<long>(G.order, 0));
    for (long i = 0; i < G.order; ++i)
        for (long j = 0; j < G.order; ++j) {
            if (!(in >> G.table[i][j])) throw GroupFormatError("truncated Cayley table");
            if (G.table[i][j] < 0 || G.table[i][j] >= G.order)
                throw GroupFormatError("Cayley entry out of range");
        }
    // Identity.
    long id = -1;
    for (long e = 0; e < G.order; ++e) {
        bool ok = true;
        for (long a = 0; a < G.order; ++a)
            if (G.table[e][a] != a || G.table[a][e] != a) {
                ok = false;
                break;
            }
        if (ok) {
            id = e;
            break;
        }
    }
    if (id < 0) throw GroupFormatError("no identity element");
    G.identity = id;
    // Inverses: each row and column must be a permutation.
    for (long a = 0; a < G.order; ++a) {
        std::set<long> row(G.table[a].begin(), G.table[a].end());
        if (static_cast<long>(row.size()) != G.order)
            throw GroupFormatError("row is not a permutation");
        bool has_inv = false;
        for (long b = 0; b < G.order; ++b)
            if (G.table[a][b] == id && G.table[b][a] == id) has_inv = true;
        if (!has_inv) throw GroupFormatError("element without two-sided inverse");
    }
    // Associativity.
    for (long a = 0; a < G.order; ++a)
        for (long b = 0; b < G.order; ++b)
            for (long c = 0; c < G.order; ++c)
                if (G.table[G.table[a][b]][c] != G.table[a][G.table[b][c]])
                    throw GroupFormatError("multiplication table is not associative");
    return G;
}

FiniteGroup load_cayley_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GroupFormatError("cannot open Cayley table file: " + path);
    return load_cayley(in);
}

std::vector<long> group_center(const FiniteGroup& G) {
    std::vector<long> center;
    for (long z = 0; z < G.order; ++z) {
        bool central = true;
        for (long g = 0; g < G.order && central; ++g)
            central = (G.mul(z, g) == G.mul(g, z));
        if (central) center.push_back(z);
    }
    return center;
}

std::vector<long> commutator_subgroup(const FiniteGroup& G) {
    std::set<long> gens;
    for (long a = 0; a < G.order; ++a)
        for (long b = 0; b < G.order; ++b)
            gens.insert(G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b))));
    // Closure under multiplication.
    std::set<long> sub(gens);
    sub.insert(G.identity);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<long> cur(sub.begin(), sub.end());
        for (long a : cur)
            for (long b : cur)
                if (sub.insert(G.mul(a, b)).second) grew = true;
    }
    return {sub.begin(), sub.end()};
}

bool Character::is_trivial() const {
    return std::all_of(exponents.begin(), exponents.end(), [](long e) { return e == 0; });
}

bool Character::squares_trivial() const {
    return std::all_of(exponents.begin(), exponents.end(),
                       [this](long e) { return (2 * e) % modulus == 0; });
}

namespace {

struct Quotient {
    long order = 0;
    std::vector<long> proj;                // G index -> quotient index
    std::vector<std::vector<long>> table;  // quotient Cayley table
    long identity = 0;
};

Quotient quotient_by(const FiniteGroup& G, const std::vector<long>& normal) {
    std::set<long> sub(normal.begin(), normal.end());
    Quotient Q;
    std::vector<long> coset_of(G.order, -1);
    std::vector<long> reps;
    for (long g = 0; g < G.order; ++g) {
        if (coset_of[g] >= 0) continue;
        const long idx = static_cast<long>(reps.size());
        reps.push_back(g);
        for (long h : sub) coset_of[G.mul(g, h)] = idx;
    }
    Q.order = static_cast<long>(reps.size());
    Q.proj = coset_of;
    Q.table.assign(Q.order, std::vector<long>(Q.order, 0));
    for (long i = 0; i < Q.order; ++i)
        for (long j = 0; j < Q.order; ++j) Q.table[i][j] = coset_of[G.mul(reps[i], reps[j])];
    Q.identity = coset_of[G.identity];
    return Q;
}

}  // namespace

std::vector<Character> group_characters(const FiniteGroup& G) {
    const Quotient Q = quotient_by(G, commutator_subgroup(G));

    FiniteGroup A;  // the abelianization, reused for order computations
    A.order = Q.order;
    A.table = Q.table;
    A.identity = Q.identity;

    long M = 1;
    for (long a = 0; a < A.order; ++a) M = std::lcm(M, A.element_order(a));

    // Homomorphisms A -> Z/M, built by extending along a subgroup chain:
    // adjoin one element at a time; chi extends to <S, g> iff the linear
    // congruence r * e = chi(g^r) (mod M) has a solution, where r is minimal
    // with g^r in S.
    struct Partial {
        std::vector<long> values;  // exponent per element of A, -1 = unset
    };
    std::vector<Partial> homs{Partial{std::vector<long>(A.order, -1)}};
    homs[0].values[A.identity] = 0;
    std::vector<long> in_sub{A.identity};

    while (static_cast<long>(in_sub.size()) < A.order) {
        long g = -1;
        std::vector<bool> present(A.order, false);
        for (long s : in_sub) present[s] = true;
        for (long cand = 0; cand < A.order; ++cand)
            if (!present[cand]) {
                g = cand;
                break;
            }
        long r = 1, acc = g;
        while (!present[acc]) {
            acc = A.table[acc][g];
            ++r;
        }
        // acc = g^r is in the current subgroup.
        std::vector<Partial> next;
        for (const auto& h : homs) {
            const long target = h.values[acc];
            const long gg = std::gcd(r, M);
            if (target % gg != 0) continue;
            // Solve r*e = target (mod M): gg solutions.
            const long Mg = M / gg;
            long rg = (r / gg) % Mg, inv = 0;
            for (long t = 0; t < Mg; ++t)
                if ((rg * t) % Mg == 1 % Mg) {
                    inv = t;
                    break;
                }
            const long e0 = ((target / gg) % Mg) * inv % Mg;
            for (long t = 0; t < gg; ++t) {
                const long e = e0 + t * Mg;
                Partial ext = h;
                // Fill the new cosets s * g^i.
                for (long s : in_sub) {
                    long elem = s, val = ext.values[s];
                    for (long i = 1; i < r; ++i) {
                        elem = A.table[elem][g];
                        val = (val + e) % M;
                        ext.values[elem] = val;
                    }
                }
                next.push_back(std::move(ext));
            }
        }
        homs = std::move(next);
        std::vector<long> new_sub;
        for (long elem = 0; elem < A.order; ++elem)
            if (!homs.empty() && homs[0].values[elem] >= 0) new_sub.push_back(elem);
        in_sub = std::move(new_sub);
        if (homs.empty()) throw OracleError("character extension produced no homomorphisms");
    }

    std::vector<Character> chars;
    for (const auto& h : homs) {
        Character c;
        c.modulus = M;
        c.exponents.resize(G.order);
        for (long g = 0; g < G.order; ++g) c.exponents[g] = h.values[Q.proj[g]];
        chars.push_back(std::move(c));
    }
    std::sort(chars.begin(), chars.end(), [](const Character& a, const Character& b) {
        return a.exponents < b.exponents;
    });
    return chars;
}

std::vector<CenterPair> vectg_classify(const FiniteGroup& G) {
    std::vector<CenterPair> out;
    const auto center = group_center(G);
    const auto chars = group_characters(G);
    for (long z : center) {
        const bool z2 = (G.mul(z, z) == G.identity);
        for (const auto& chi : chars) {
            CenterPair p;
            p.z = z;
            p.chi = chi;
            p.trivial_twist = (chi.exponents[z] % chi.modulus == 0);
            p.punctured_nonzero = z2;
            p.sphere_nonzero = z2 && chi.squares_trivial();
            out.push_back(std::move(p));
        }
    }
    return out;
}

}  // namespace taftnet
