#pragma once

#include <vector>

#include "nullsurf/curve.hpp"
#include "nullsurf/marching.hpp"

// A family member phi(s,t) = alpha(s) + x*ell + y*n + z*u, its normal by two
// independent routes, and the asymptotic residual along t = t0.

namespace nullsurf {

struct SurfaceFamilyMember {
    NullCurve curve;
    MarchingScale ms;
    int n_s = 64;
    int n_t = 32;
};

void validate_member(const SurfaceFamilyMember& mem);

MVec3 evaluate_surface(const SurfaceFamilyMember& mem, double s, double t);

// N = phi_s x phi_t with the actual derivatives of curve, frame and marching
// functions. Shares no frame algebra with the expansion route below, so their
// agreement is a real check of the frame relations.
MVec3 normal_direct(const SurfaceFamilyMember& mem, double s, double t);

struct NormalSample {
    double s = 0.0, t = 0.0;
    MVec3 N{};
    double phi1 = 0.0, phi2 = 0.0, phi3 = 0.0;
};

// N written in the frame basis, N = phi1*ell + phi2*n + phi3*u, with the
// coefficients obtained from the Frenet equations and cross identities.
NormalSample normal_frame_expansion(const SurfaceFamilyMember& mem, double s, double t);

struct ResidualSample {
    double s = 0.0;
    double phi1 = 0.0, phi2 = 0.0, phi3 = 0.0;
    double r_direct = 0.0;
    double r_reduced = 0.0;
    double null_defect = 0.0;
    // Euclidean norm of N(s,t0): the pseudo-norm of a null normal reads 0, so
    // it cannot distinguish a lightlike normal from a degenerate one.
    double normal_norm = 0.0;
    CausalCharacter normal_char = CausalCharacter::Null;
};

// Sweep along t = t0: R(s) = <dN/ds, ell> and the reduced form
// Rtilde(s) = -(dphi2/ds + k1*phi3). Checks the isoparametric precondition
// and throws PreconditionError when it fails.
std::vector<ResidualSample> asymptotic_residual(const SurfaceFamilyMember& mem, int n_samples,
                                                const Tolerances& tol);

// Full verification: nullity, frame identities, conditions, residuals,
// consistency, finite-difference cross-check, normal degeneracy scan.
// Never throws; evaluation errors become failed mandatory items.
VerificationReport verify_member(const SurfaceFamilyMember& mem, int n_samples,
                                 const Tolerances& tol);

}  // namespace nullsurf
