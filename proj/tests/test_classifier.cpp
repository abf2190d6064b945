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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "taftnet/classifier.hpp"

using namespace taftnet;

using PairVec = std::vector<std::pair<long, long>>;

TEST_CASE("quasi-pivotal pairs for Taft algebras") {
    CHECK(quasi_pivotal_pairs(make_taft(5)) ==
          PairVec{{0, 4}, {1, 3}, {2, 2}, {3, 1}, {4, 0}});
    for (long N = 2; N <= 12; ++N) {
        const HopfParams T = make_taft(N);
        const auto pairs = quasi_pivotal_pairs(T);
        CHECK(static_cast<long>(pairs.size()) == N);
        for (const auto& [c, d] : pairs) CHECK((c + d + 1) % N == 0);
        CHECK(pairs == quasi_pivotal_pairs_scan(T));
    }
}

TEST_CASE("quasi-pivotal pairs for the worked examples") {
    CHECK(quasi_pivotal_pairs(make_gen_taft(3, 1, 1, 1, 2)) == PairVec{{2, 0}});
    const auto p8 = quasi_pivotal_pairs(make_gen_taft(8, 2, 2, 6, 2));
    for (auto pr : PairVec{{2, 0}, {2, 4}, {6, 0}, {6, 4}})
        CHECK(std::find(p8.begin(), p8.end(), pr) != p8.end());
    const auto p9 = quasi_pivotal_pairs(make_gen_taft(9, 1, 3, 5, 3));
    CHECK(std::find(p9.begin(), p9.end(), std::pair<long, long>{6, 6}) != p9.end());
}

TEST_CASE("congruence solver agrees with the full scan") {
    for (long N = 2; N <= 9; ++N) {
        for (const auto& t : valid_gen_taft_tuples(N)) {
            const HopfParams H = make_gen_taft(N, t[0], t[1], t[2], t[3]);
            CHECK(quasi_pivotal_pairs(H) == quasi_pivotal_pairs_scan(H));
        }
    }
}

TEST_CASE("classify_pair flags") {
    const HopfParams H9 = make_gen_taft(9, 1, 3, 5, 3);
    PivotalDatum p = classify_pair(H9, 6, 6);
    CHECK(p.quasi_pivotal);
    CHECK(p.twisted_pivotal);   // 36 = 0 mod 9
    CHECK_FALSE(p.plain_pivotal);
    CHECK(p.punctured_sphere_nonzero);  // 12 = 12
    CHECK(p.sphere_nonzero);            // 12 = 12
    CHECK_FALSE(p.spherical);

    const HopfParams H3 = make_gen_taft(3, 1, 1, 1, 2);
    p = classify_pair(H3, 2, 0);
    CHECK(p.twisted_pivotal);
    CHECK_FALSE(p.punctured_sphere_nonzero);  // 2c = 1 != 0 = D mod 3
    CHECK_FALSE(p.sphere_nonzero);

    const HopfParams T7 = make_taft(7);
    p = classify_pair(T7, 0, 6);
    CHECK(p.plain_pivotal);
    CHECK(p.twisted_pivotal);
    CHECK_FALSE(p.punctured_sphere_nonzero);
}

TEST_CASE("flag implications hold for every pair") {
    for (long N = 2; N <= 6; ++N) {
        for (const auto& t : valid_gen_taft_tuples(N)) {
            const HopfParams H = make_gen_taft(N, t[0], t[1], t[2], t[3]);
            for (long c = 0; c < N; ++c)
                for (long d = 0; d < N; ++d) {
                    const PivotalDatum p = classify_pair(H, c, d);
                    if (p.twisted_pivotal) CHECK(p.quasi_pivotal);
                    if (p.plain_pivotal) CHECK(p.twisted_pivotal);
                    if (p.sphere_nonzero) {
                        CHECK(p.punctured_sphere_nonzero);
                        CHECK(p.twisted_pivotal);
                    }
                    if (p.spherical) CHECK(p.plain_pivotal);
                }
        }
    }
}

TEST_CASE("Taft twisted-pivotal c-set is {c : c(c+1) = 0}") {
    for (long N = 2; N <= 12; ++N) {
        const HopfParams T = make_taft(N);
        for (const auto& [c, d] : quasi_pivotal_pairs(T)) {
            CHECK(classify_pair(T, c, d).twisted_pivotal == ((c * (c + 1)) % N == 0));
        }
    }
}

TEST_CASE("structure summaries of the worked examples") {
    StructureSummary s = structure_summary(make_gen_taft(3, 1, 1, 1, 2));
    CHECK_FALSE(s.has_pivotal);
    CHECK(s.has_twisted_pivotal);
    CHECK(s.unimodular);
    CHECK_FALSE(s.has_twisted_spherical);

    s = structure_summary(make_gen_taft(9, 1, 3, 5, 3));
    CHECK(s.has_twisted_spherical);
    CHECK_FALSE(s.unimodular);

    s = structure_summary(make_taft(3));
    CHECK(s.has_pivotal);
    CHECK_FALSE(s.has_twisted_spherical);
}

TEST_CASE("plain spherical structures exist only on unimodular algebras") {
    for (long N = 2; N <= 6; ++N) {
        for (const auto& t : valid_gen_taft_tuples(N)) {
            const StructureSummary s =
                structure_summary(make_gen_taft(N, t[0], t[1], t[2], t[3]));
            if (s.has_spherical) CHECK(s.unimodular);
        }
    }
}

TEST_CASE("census values at small levels") {
    struct Row {
        long N, total, piv, tp, uni, sph, ts, nuts;
    };
    // Pinned from the congruence definitions; the scan path is asserted equal
    // to the solver path above, and N = 8, 9, 36 match the published counts.
    const std::vector<Row> rows = {
        {2, 1, 1, 1, 1, 1, 1, 0},        {3, 8, 4, 8, 4, 0, 0, 0},
        {4, 16, 12, 16, 10, 2, 4, 0},    {5, 64, 16, 32, 16, 0, 0, 0},
        {6, 113, 73, 113, 43, 5, 5, 0},  {7, 216, 36, 72, 36, 0, 0, 0},
        {8, 240, 96, 144, 68, 8, 16, 4}, {9, 360, 108, 216, 84, 0, 24, 24},
    };
    for (const auto& r : rows) {
        const CensusReport c = census(r.N);
        CHECK(c.total_valid == r.total);
        CHECK(c.with_pivotal == r.piv);
        CHECK(c.with_twisted_pivotal == r.tp);
        CHECK(c.unimodular == r.uni);
        CHECK(c.with_spherical == r.sph);
        CHECK(c.with_twisted_spherical == r.ts);
        CHECK(c.nonunimodular_with_twisted_spherical == r.nuts);
        // Count monotonicity.
        CHECK(c.with_pivotal <= c.with_twisted_pivotal);
        CHECK(c.with_twisted_pivotal <= c.total_valid);
        CHECK(c.with_spherical <= c.with_twisted_spherical);
        CHECK(c.nonunimodular_with_twisted_spherical <= c.with_twisted_spherical);
    }
}

TEST_CASE("census agrees with a scan-based recount") {
    for (long N : {5, 8}) {
        CensusReport scanned;
        scanned.N = N;
        for (const auto& t : valid_gen_taft_tuples(N)) {
            const HopfParams H = make_gen_taft(N, t[0], t[1], t[2], t[3]);
            bool piv = false, tp = false, ts = false, sph = false;
            for (const auto& [c, d] : quasi_pivotal_pairs_scan(H)) {
                const PivotalDatum p = classify_pair(H, c, d);
                piv |= p.plain_pivotal;
                tp |= p.twisted_pivotal;
                ts |= p.sphere_nonzero;
                sph |= p.spherical;
            }
            const bool uni = distinguished_data(H).unimodular;
            scanned.total_valid += 1;
            scanned.with_pivotal += piv;
            scanned.with_twisted_pivotal += tp;
            scanned.unimodular += uni;
            scanned.with_spherical += sph;
            scanned.with_twisted_spherical += ts;
            scanned.nonunimodular_with_twisted_spherical += (ts && !uni);
        }
        CHECK(scanned == census(N));
    }
}

TEST_CASE("census is independent of the worker count") {
    const CensusReport one = census(8, 1);
    CHECK(one == census(8, 4));
    CHECK(one == census(8, 8));
    CHECK(one == census(8, 64));  // more workers than partitions
    CHECK_THROWS_AS(census(1), InvalidLevel);
}

TEST_CASE("minimal counterexamples") {
    CHECK(minimal_counterexample(Implication::TwistedPivotalWithoutPivotal, 10) == 3);
    CHECK(minimal_counterexample(Implication::TwistedSphericalWithoutSpherical, 10) == 4);
    CHECK(minimal_counterexample(Implication::QuasiWithoutTwistedPivotal, 10) == 5);
    CHECK(minimal_counterexample(Implication::ValidWithoutQuasi, 10) == 8);
    CHECK(minimal_counterexample(Implication::UnimodularWithoutSpherical, 10) == 3);
    // Below the minimum nothing is found.
    CHECK_FALSE(minimal_counterexample(Implication::ValidWithoutQuasi, 7).has_value());
    CHECK_FALSE(minimal_counterexample(Implication::QuasiWithoutTwistedPivotal, 4).has_value());
}

TEST_CASE("level 1 degenerates gracefully") {
    const HopfParams T1 = make_taft(1);
    CHECK(quasi_pivotal_pairs(T1) == PairVec{{0, 0}});
    const PivotalDatum p = classify_pair(T1, 0, 0);
    CHECK(p.spherical);  // the one-dimensional group algebra carries everything
    CHECK(distinguished_data(T1).unimodular);
}

TEST_CASE("is_quasi_pivotal reduces arguments mod N") {
    const HopfParams H = make_gen_taft(3, 1, 1, 1, 2);
    CHECK(is_quasi_pivotal(H, 2, 0));
    CHECK(is_quasi_pivotal(H, 5, 3));
    CHECK(is_quasi_pivotal(H, -1, -3));
    CHECK_FALSE(is_quasi_pivotal(H, 0, 0));
}
