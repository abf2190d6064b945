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

#ifndef TAFTNET_CLASSIFIER_HPP
#define TAFTNET_CLASSIFIER_HPP

#include <optional>
#include <vector>

#include "taftnet/hopf.hpp"

namespace taftnet {

/// Classification flags of a candidate pair (c,d).
///
/// quasi_pivotal:   c*a2 + d*a1 + a1*a2 = 0 and c*b2 + d*b1 + b1*b2 = 0 in Z/N
///                  (Taft: d = -(c+1))
/// twisted_pivotal: quasi and c*d = 0
/// plain_pivotal:   quasi and c = 0
/// punctured_sphere_nonzero: twisted and 2c = a2(n-1) + b2(m-1)
/// sphere_nonzero:  punctured and 2d = a1(n-1) + b1(m-1)
/// spherical:       plain and sphere_nonzero
struct PivotalDatum {
    long c = 0, d = 0;
    bool quasi_pivotal = false;
    bool twisted_pivotal = false;
    bool plain_pivotal = false;
    bool punctured_sphere_nonzero = false;
    bool sphere_nonzero = false;
    bool spherical = false;
};

struct StructureSummary {
    bool has_quasi = false;
    bool has_twisted_pivotal = false;
    bool has_pivotal = false;
    bool has_twisted_spherical = false;
    bool has_spherical = false;
    bool unimodular = false;
};

struct CensusReport {
    long N = 0;
    long total_valid = 0;
    long with_pivotal = 0;
    long with_twisted_pivotal = 0;
    long unimodular = 0;
    long with_spherical = 0;
    long with_twisted_spherical = 0;
    long nonunimodular_with_twisted_spherical = 0;

    bool operator==(const CensusReport&) const = default;
};

bool is_quasi_pivotal(const HopfParams& H, long c, long d);

PivotalDatum classify_pair(const HopfParams& H, long c, long d);

// Solution set of the quasi-pivotal congruences, ordered by (c,d). The
// default route solves the 2x2 linear system per residue c; the scan route
// tries all N^2 pairs. Both are exposed so tests can assert they agree.
std::vector<std::pair<long, long>> quasi_pivotal_pairs(const HopfParams& H);
std::vector<std::pair<long, long>> quasi_pivotal_pairs_scan(const HopfParams& H);

StructureSummary structure_summary(const HopfParams& H);

// Aggregates structure_summary over all valid (a1,a2,b1,b2) in (Z/N)^4,
// counting parameter tuples without isomorphism identification.
CensusReport census(long N, int workers = 0);  // workers <= 0: hardware count

enum class Implication {
    TwistedPivotalWithoutPivotal,
    TwistedSphericalWithoutSpherical,
    QuasiWithoutTwistedPivotal,
    ValidWithoutQuasi,
    UnimodularWithoutSpherical,
};

// Smallest N <= n_max admitting a valid tuple witnessing the non-implication.
std::optional<long> minimal_counterexample(Implication which, long n_max);

const char* implication_name(Implication which);

}  // namespace taftnet

#endif
