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

#ifndef TAFTNET_REPS_HPP
#define TAFTNET_REPS_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "taftnet/hopf.hpp"
#include "taftnet/matrix.hpp"

namespace taftnet {

/// Convention toggles for the duality/pivotal matrix oracle. The default
/// (all false) transcribes the printed presentation: coproduct legs
/// dx = 1(x)x + x(x)g^{a1}, dual action through S, double dual through S^2,
/// and candidate maps V** (x) alpha -> alpha (x) V.
struct OracleConvention {
    bool coproduct_swapped = false;
    bool dual_via_s_inverse = false;
    bool ddual_via_s_inverse = false;
    bool alpha_on_left = false;

    bool operator==(const OracleConvention&) const = default;
    std::string str() const;
};

inline constexpr OracleConvention kPrintedConvention{};

/// Finite-dimensional module given by exact action matrices of the
/// generators. For Taft algebras the y matrix is the zero matrix.
struct ModuleRep {
    HopfParams H;
    long dim = 0;
    CycMatrix g, x, y;
    std::string label;
};

// Throws OracleError unless the action matrices satisfy the defining
// relations exactly (g^N = 1, x^n = 0, y^m = 0 and the commutation
// relations). g is then automatically semisimple with N-th-root-of-unity
// eigenvalues, since X^N - 1 is squarefree in characteristic zero.
void validate_module(const ModuleRep& V);

ModuleRep simple_module(const HopfParams& H, long k);

// V_{k,l} (Taft) / V_{k,l,h} (generalized Taft); dimension l resp. l*h.
// P_k is the top case l = n (and h = m).
ModuleRep indecomposable_module(const HopfParams& H, long k, long l);
ModuleRep indecomposable_module(const HopfParams& H, long k, long l, long h);
ModuleRep projective_module(const HopfParams& H, long k);

ModuleRep dual_module(const HopfParams& H, const ModuleRep& V,
                      const OracleConvention& conv = kPrintedConvention);
ModuleRep double_dual(const HopfParams& H, const ModuleRep& V,
                      const OracleConvention& conv = kPrintedConvention);
ModuleRep tensor_module(const HopfParams& H, const ModuleRep& V, const ModuleRep& W,
                        const OracleConvention& conv = kPrintedConvention);

struct HomSpace {
    long dimension = 0;
    std::vector<CycMatrix> basis;  // canonical order, see kernel_basis
};

// Solves { M : M rho_V(h) = rho_W(h) M for all generators h } exactly.
HomSpace hom_space(const HopfParams& H, const ModuleRep& V, const ModuleRep& W);

long hom_dimension(const HopfParams& H, const ModuleRep& V, const ModuleRep& W);

// Weight w -> multiplicity; weights live in Z/N.
using WeightMultiset = std::map<long, long>;

// Joint kernel of the nilpotent generator actions, decomposed into
// g-eigenweights. Valid as the socle here because every simple module of
// this family is one-dimensional with the nilpotents acting by zero.
WeightMultiset socle(const HopfParams& H, const ModuleRep& V);

// Cokernel of the summed nilpotent images, as g-eigenweights.
WeightMultiset head(const HopfParams& H, const ModuleRep& V);

// Isomorphism test: equal dimensions plus an invertible intertwiner found in
// hom_space (exact rank test on basis elements and small combinations).
bool module_isomorphic(const HopfParams& H, const ModuleRep& V, const ModuleRep& W);

// Tests exactly whether v** (x) t_c |-> t_c (x) g^d v intertwines the actions
// on tensor_module(double_dual(V), T_c) and tensor_module(T_c, V).
bool check_pivotal_on_module(const HopfParams& H, long c, long d, const ModuleRep& V,
                             const OracleConvention& conv = kPrintedConvention);

// The same check over the generating test set {all P_k, all T_k}.
bool oracle_accepts_pair(const HopfParams& H, long c, long d,
                         const OracleConvention& conv = kPrintedConvention);

std::set<std::pair<long, long>> oracle_accepted_pairs(
    const HopfParams& H, const OracleConvention& conv = kPrintedConvention);

// Scalar of the twist-relation composite for alpha = T_c with pivot g^d:
// ev_alpha o (pivotal matrix of *alpha) o coev_alpha, all exact 1x1 matrices.
// Equals q^{-cd}. Throws NotQuasiPivotal unless (c,d) solves the
// quasi-pivotal congruences.
CycNumber verify_twist_scalar(const HopfParams& H, long c, long d);

// End(V) = k.id (+) nilpotents, decided exactly: the traceless part of the
// endomorphism ring must span a codimension-one subspace generating a
// nilpotent subalgebra.
bool end_ring_is_local(const HopfParams& H, const ModuleRep& V);

/// Calibration of the oracle conventions against the worked example pairs
/// at N in {3, 8, 9} (see classifier for the congruence side).
struct CalibrationCase {
    HopfParams H;
    std::set<std::pair<long, long>> required;
    bool exact;  // required == accepted, else required subset of accepted
};

struct CalibrationComboResult {
    OracleConvention conv;
    std::vector<std::set<std::pair<long, long>>> accepted;  // per case
    bool passes = false;
};

struct CalibrationOutcome {
    std::vector<CalibrationCase> cases;
    std::vector<CalibrationComboResult> combos;
    std::optional<OracleConvention> selected;  // set iff exactly one combo passes
    std::string report() const;
};

CalibrationOutcome calibrate_oracle_conventions();

}  // namespace taftnet

#endif
