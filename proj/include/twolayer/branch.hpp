// Sheeted square roots and powers with the sheet conventions of the layered
// kernel: S1 cut along the upper imaginary axis, S2 along the lower one.
#pragma once

#include "twolayer/core.hpp"

namespace twolayer::branch {

enum class BranchSide { FromRight, FromLeft };

// |z|^beta e^{i beta arg z} with arg z in (-pi, pi).
cplx principal_power(cplx z, double beta);

// sqrt(|z|) e^{i theta/2}, theta in (-3pi/2, pi/2).
cplx s1(cplx z);

// sqrt(|z|) e^{i theta/2}, theta in (-pi/2, 3pi/2).
cplx s2(cplx z);

// S(z,a) = s1(z-a) s2(z+a)
cplx s_cut(cplx z, double a);

// S~(z,a) = s2(z-a) s2(z+a)
cplx s_tilde(cplx z, double a);

// One-sided limit of s_cut onto its cut {Re z = a, Im z >= 0}.
cplx s_limit(cplx z, double a, BranchSide side);

// Reflection and transmission coefficients for upper-half angles
// (R, T) and lower-half angles (R~, T~).
cplx refl_coeff(double theta, const WaveProfile& wp);
cplx trans_coeff(double theta, const WaveProfile& wp);
cplx refl_tilde(double theta, const WaveProfile& wp);
cplx trans_tilde(double theta, const WaveProfile& wp);

double critical_angle(const WaveProfile& wp);

}  // namespace twolayer::branch
