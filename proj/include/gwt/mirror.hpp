#pragma once

#include "gwt/cohomology.hpp"
#include "gwt/correlator.hpp"
#include "gwt/rational.hpp"
#include "gwt/series.hpp"

#include <string>
#include <vector>

namespace gwt {

// Per-degree small J-function of the plane: J^0 = z and
//   J^d = z / prod_{k=1}^{d} (H + kz)^3,
// an exact Laurent polynomial in z over Q[H]/(H^3). The z^{-a-1} H^{2-b}
// coefficient of J^d is the one-point descendent <tau_a(H^b)>_{0,d}.
struct JFunctionTable {
    int d_max = 0;
    std::vector<CohLaurent> by_degree; // index 0..d_max
};

JFunctionTable j_function(int d_max);

// Hypergeometric modification for the canonical bundle over the plane:
//   I^d = J^d * prod_{k=0}^{3d-1} (-D - kz),  D = 3H.
// After simplification each degree-d >= 1 entry collapses to the three slots
// z, H, H^2/z; no z-powers below -1 survive.
std::vector<CohLaurent> i_kx(int d_max);

// Read I1, I2 off the expansion I = z + I1(q) D + I2(q) D^2/z. Any residue
// outside those slots raises consistency_error.
std::pair<Series, Series> extract_I1_I2(const std::vector<CohLaurent>& table);

// Hypergeometric closed forms (d >= 1; both vanish at d = 0):
//   I1_d = (-1)^d (3d-1)!/d!^3
//   I2_d = (-1)^d (3d-1)!/d!^3 * sum_{k=d+1}^{3d-1} 1/k
Rational i1_closed_form(int d);
Rational i2_closed_form(int d);

// Generating series F(q) of one-point invariants with maximal naive tangency
// along a cubic: F_d = <(3d) D>_{0,d}. Residue route: the z^{-1} coefficient
// of the integral of I^d, with signs flipped at odd degrees.
Series naive_series_F(int d_max);

// Same coefficient through the descendent engine (tangency expansion of the
// order-3d condition along the cubic). Exact but combinatorial; degrees above
// the bound raise resource_guard_error instead of grinding forever.
Rational naive_series_F_descendent(CorrelatorEngine& engine, int d, int degree_bound = 3);

// Harmonic-sum closed form 9 (3d-1)!/d!^3 sum_{k=d+1}^{3d-1} 1/k for F_d.
Rational naive_series_F_closed_form(int d);

// Everything the local pipeline produces, over a common truncation order.
struct MirrorData {
    Series I1, I2;       // in q
    Series F;            // in q
    Series mirror_map;   // Q as a function of q: q * exp(3 I1)
    Series inverse_map;  // q as a function of Q
    Series Floc;         // in Q
    Rational d_X = Rational(9);
};

MirrorData mirror_pipeline(int d_max);

// Assemble the mirror map and local series from given I1, I2, F (lets tests
// inject perturbed inputs).
MirrorData mirror_pipeline_from(Series I1, Series I2, Series F);

// Degree-d local invariant K_d = Floc_d / (3d), d >= 1.
Rational local_invariant(const MirrorData& md, int d);

// Order-by-order verification of
//   F(q)|sign-flip - (d_X/2) I1^2 = -Floc(Q)  under  Q = q exp(3 I1(q)),
// plus the definitional log series Flog_d = (-1)^{d+1} Floc_d.
struct IdentityCheck {
    struct Mismatch {
        int degree;
        Rational lhs, rhs;
    };
    bool passed = false;
    std::vector<Mismatch> mismatches;
    Series flog;

    IdentityCheck() : flog(0) {}
};

IdentityCheck check_identities(int d_max);
IdentityCheck check_identities_from(const MirrorData& md);

} // namespace gwt
