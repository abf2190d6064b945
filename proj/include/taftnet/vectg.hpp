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

#ifndef TAFTNET_VECTG_HPP
#define TAFTNET_VECTG_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace taftnet {

/// Finite group as a validated Cayley table over element indices 0..order-1.
struct FiniteGroup {
    long order = 0;
    std::vector<std::vector<long>> table;  // table[a][b] = a*b
    long identity = 0;

    long mul(long a, long b) const { return table[a][b]; }
    long inv(long a) const;
    long element_order(long a) const;
};

// Plain-text format: first line the order, then order rows of 0-based
// indices. The table is fully validated (closure, identity, inverses,
// associativity); throws GroupFormatError.
FiniteGroup load_cayley(std::istream& in);
FiniteGroup load_cayley_file(const std::string& path);

inline constexpr long kMaxGroupOrder = 128;

std::vector<long> group_center(const FiniteGroup& G);

// Commutator subgroup [G,G] as a sorted element list.
std::vector<long> commutator_subgroup(const FiniteGroup& G);

/// Character chi: G -> mu_M given by exponents: chi(g) = zeta_M^{exponents[g]}.
struct Character {
    long modulus = 1;  // M = exponent of G/[G,G]
    std::vector<long> exponents;

    bool is_trivial() const;
    bool squares_trivial() const;
    bool operator==(const Character&) const = default;
};

// All homomorphisms G -> k^x, via the abelianization. Count = |G/[G,G]|.
std::vector<Character> group_characters(const FiniteGroup& G);

/// Invertible object (z, chi) of the center, with the flags of interest:
/// trivial twist chi(z) = 1; punctured-sphere value nonzero iff z^2 = 1;
/// sphere value nonzero iff additionally chi^2 = 1.
struct CenterPair {
    long z = 0;
    Character chi;
    bool trivial_twist = false;
    bool punctured_nonzero = false;
    bool sphere_nonzero = false;
};

std::vector<CenterPair> vectg_classify(const FiniteGroup& G);

}  // namespace taftnet

#endif
