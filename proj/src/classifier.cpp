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

#include "taftnet/classifier.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace taftnet {

namespace {

long mod(long a, long N) {
    a %= N;
    return a < 0 ? a + N : a;
}

// Solutions of a*d = r (mod N), ascending.
std::vector<long> solve_linear(long a, long r, long N) {
    a = mod(a, N);
    r = mod(r, N);
    const long g = std::gcd(a, N);
    if (r % g != 0) return {};
    const long Ng = N / g;
    // Inverse of a/g mod N/g.
    long ag = (a / g) % Ng, inv = 1;
    for (long t = 0; t < Ng; ++t) {  // small N, direct search
        if (mod(ag * t, Ng) == 1) {
            inv = t;
            break;
        }
    }
    const long d0 = mod((r / g) * inv, Ng);
    std::vector<long> out;
    for (long t = 0; t < g; ++t) out.push_back(d0 + t * Ng);
    return out;
}

bool congruences_hold(const HopfParams& H, long c, long d) {
    const long N = H.N;
    if (H.kind == HopfKind::Taft) return mod(c + d + 1, N) == 0;
    return mod(c * H.a2 + d * H.a1 + H.a1 * H.a2, N) == 0 &&
           mod(c * H.b2 + d * H.b1 + H.b1 * H.b2, N) == 0;
}

}  // namespace

bool is_quasi_pivotal(const HopfParams& H, long c, long d) {
    return congruences_hold(H, mod(c, H.N), mod(d, H.N));
}

PivotalDatum classify_pair(const HopfParams& H, long c, long d) {
    const long N = H.N;
    c = mod(c, N);
    d = mod(d, N);
    const DistinguishedData dd = distinguished_data(H);
    PivotalDatum p;
    p.c = c;
    p.d = d;
    p.quasi_pivotal = congruences_hold(H, c, d);
    p.twisted_pivotal = p.quasi_pivotal && mod(c * d, N) == 0;
    p.plain_pivotal = p.quasi_pivotal && c == 0;
    p.punctured_sphere_nonzero = p.twisted_pivotal && mod(2 * c - dd.D_index, N) == 0;
    p.sphere_nonzero = p.punctured_sphere_nonzero && mod(2 * d - dd.grouplike_index, N) == 0;
    p.spherical = p.plain_pivotal && p.sphere_nonzero;
    return p;
}

std::vector<std::pair<long, long>> quasi_pivotal_pairs(const HopfParams& H) {
    const long N = H.N;
    std::vector<std::pair<long, long>> out;
    if (H.kind == HopfKind::Taft) {
        for (long c = 0; c < N; ++c) out.emplace_back(c, mod(-(c + 1), N));
        std::sort(out.begin(), out.end());
        return out;
    }
    const long det = mod(H.a2 * H.b1 - H.a1 * H.b2, N);  // = -2 a1 b2 by validity
    if (std::gcd(det, N) == 1) {
        long inv = 1;
        for (long t = 0; t < N; ++t)
            if (mod(det * t, N) == 1) {
                inv = t;
                break;
            }
        const long r1 = mod(-H.a1 * H.a2, N), r2 = mod(-H.b1 * H.b2, N);
        const long c = mod(inv * (H.b1 * r1 - H.a1 * r2), N);
        const long d = mod(inv * (H.a2 * r2 - H.b2 * r1), N);
        if (!congruences_hold(H, c, d))
            throw OracleError(H.name() + ": unique congruence solution failed verification");
        out.emplace_back(c, d);
        return out;
    }
    for (long c = 0; c < N; ++c) {
        for (long d : solve_linear(H.a1, -(c * H.a2 + H.a1 * H.a2), N)) {
            if (mod(c * H.b2 + d * H.b1 + H.b1 * H.b2, N) == 0) out.emplace_back(c, d);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<long, long>> quasi_pivotal_pairs_scan(const HopfParams& H) {
    std::vector<std::pair<long, long>> out;
    for (long c = 0; c < H.N; ++c)
        for (long d = 0; d < H.N; ++d)
            if (congruences_hold(H, c, d)) out.emplace_back(c, d);
    return out;
}

StructureSummary structure_summary(const HopfParams& H) {
    const DistinguishedData dd = distinguished_data(H);
    StructureSummary s;
    s.unimodular = dd.unimodular;
    for (const auto& [c, d] : quasi_pivotal_pairs(H)) {
        s.has_quasi = true;
        const PivotalDatum p = classify_pair(H, c, d);
        s.has_twisted_pivotal |= p.twisted_pivotal;
        s.has_pivotal |= p.plain_pivotal;
        s.has_twisted_spherical |= p.sphere_nonzero;
        s.has_spherical |= p.spherical;
    }
    return s;
}

namespace {

void census_accumulate(const StructureSummary& s, CensusReport* r) {
    r->total_valid += 1;
    r->with_pivotal += s.has_pivotal;
    r->with_twisted_pivotal += s.has_twisted_pivotal;
    r->unimodular += s.unimodular;
    r->with_spherical += s.has_spherical;
    r->with_twisted_spherical += s.has_twisted_spherical;
    r->nonunimodular_with_twisted_spherical += (s.has_twisted_spherical && !s.unimodular);
}

CensusReport census_slice(long N, long a1_begin, long a1_end) {
    CensusReport r;
    r.N = N;
    for (long a1 = a1_begin; a1 < a1_end; ++a1)
        for (long a2 = 0; a2 < N; ++a2) {
            if (mod(a1 * a2, N) == 0) continue;
            for (long b1 = 0; b1 < N; ++b1)
                for (long b2 = 0; b2 < N; ++b2) {
                    if (mod(b1 * b2, N) == 0) continue;
                    if (mod(a1 * b2 + b1 * a2, N) != 0) continue;
                    census_accumulate(
                        structure_summary(make_gen_taft(N, a1, a2, b1, b2)), &r);
                }
        }
    return r;
}

}  // namespace

CensusReport census(long N, int workers) {
    if (N < 2) throw InvalidLevel("census needs N >= 2");
    if (workers <= 0)
        workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    workers = static_cast<int>(std::min<long>(workers, N));

    // Partition on a1 in contiguous blocks, merge partials in a1 order.
    std::vector<CensusReport> partial(workers);
    std::vector<std::thread> pool;
    const long per = (N + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const long lo = std::min<long>(w * per, N), hi = std::min<long>(lo + per, N);
        pool.emplace_back([&partial, w, N, lo, hi] { partial[w] = census_slice(N, lo, hi); });
    }
    for (auto& t : pool) t.join();

    CensusReport total;
    total.N = N;
    for (const auto& p : partial) {
        total.total_valid += p.total_valid;
        total.with_pivotal += p.with_pivotal;
        total.with_twisted_pivotal += p.with_twisted_pivotal;
        total.unimodular += p.unimodular;
        total.with_spherical += p.with_spherical;
        total.with_twisted_spherical += p.with_twisted_spherical;
        total.nonunimodular_with_twisted_spherical += p.nonunimodular_with_twisted_spherical;
    }
    return total;
}

const char* implication_name(Implication which) {
    switch (which) {
        case Implication::TwistedPivotalWithoutPivotal: return "twisted-pivotal-without-pivotal";
        case Implication::TwistedSphericalWithoutSpherical:
            return "twisted-spherical-without-spherical";
        case Implication::QuasiWithoutTwistedPivotal: return "quasi-without-twisted-pivotal";
        case Implication::ValidWithoutQuasi: return "valid-without-quasi";
        case Implication::UnimodularWithoutSpherical: return "unimodular-without-spherical";
    }
    return "?";
}

std::optional<long> minimal_counterexample(Implication which, long n_max) {
    for (long N = 2; N <= n_max; ++N) {
        for (const auto& t : valid_gen_taft_tuples(N)) {
            const StructureSummary s = structure_summary(make_gen_taft(N, t[0], t[1], t[2], t[3]));
            bool hit = false;
            switch (which) {
                case Implication::TwistedPivotalWithoutPivotal:
                    hit = s.has_twisted_pivotal && !s.has_pivotal;
                    break;
                case Implication::TwistedSphericalWithoutSpherical:
                    hit = s.has_twisted_spherical && !s.has_spherical;
                    break;
                case Implication::QuasiWithoutTwistedPivotal:
                    hit = s.has_quasi && !s.has_twisted_pivotal;
                    break;
                case Implication::ValidWithoutQuasi:
                    hit = !s.has_quasi;
                    break;
                case Implication::UnimodularWithoutSpherical:
                    hit = s.unimodular && !s.has_spherical;
                    break;
            }
            if (hit) return N;
        }
    }
    return std::nullopt;
}

}  // namespace taftnet
