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

#ifndef TAFTNET_STRINGNET_HPP
#define TAFTNET_STRINGNET_HPP

#include "taftnet/classifier.hpp"
#include "taftnet/reps.hpp"

namespace taftnet {

// Dimension of the string-net space of a foliated disk with one singularity
// of the given index and boundary V, twisted by alpha = T_c:
//   index 0 -> dim Hom(T_c, V), index 1 -> dim Hom(V, T_c),
//   index 2 -> dim Hom(V, T_{-c}).
long dim_disk(const HopfParams& H, int index, long c, const ModuleRep& V);

// Closed forms for the twisted sphere dimensions; (c,d) must be twisted
// pivotal (throws NotTwistedPivotal otherwise).
int dim_sphere_punctured(const HopfParams& H, long c, long d);
int dim_sphere(const HopfParams& H, long c, long d);

// Punctured-sphere dimension from the coend presentation, computed entirely
// from Hom-space matrices: sum_k dim Hom(T_{2c}, P_k) * dim Hom(P_k, T_0).
long coend_oracle_punctured(const HopfParams& H, long c,
                            long dim_bound = kDefaultOracleDimBound);

// (dim T_alpha, dim S_alpha): the spaces of alpha-twisted modified traces and
// of spherical ones are dual to the punctured and unpunctured sphere values.
std::pair<long, long> dim_modified_traces(const HopfParams& H, long c, long d);

struct SphereReport {
    long c = 0, d = 0;
    int dim_punctured = 0;
    int dim_sphere = 0;
    long oracle_dim_punctured = -1;  // -1 when the oracle was skipped
    std::pair<long, long> trace_dims{0, 0};
    bool oracle_checked = false;
    bool oracle_matches = true;
};

SphereReport make_sphere_report(const HopfParams& H, long c, long d, bool run_oracle);

}  // namespace taftnet

#endif
