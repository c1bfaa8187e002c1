#pragma once

#include <complex>
#include <functional>

namespace crsys::ops::direct {

using cplx = std::complex<double>;
using Function = std::function<cplx(cplx)>;
/// Derivative oracle: (i, j, z) -> d^i dbar^j f(z).
using JetFunction = std::function<cplx(int, int, cplx)>;

/// Polar quadrature centered on the target point, straight from the
/// integral definitions. Slow; for cross-checking only.
struct Rule {
    int n_phi = 256;
    int n_s = 48;
};

/// Distance from z to the circle |w| = R along direction e^{i phi}.
double ray_length(cplx z, double phi, double R);

cplx T(const Function& f, cplx z, double R, Rule rule = {});
/// -(1/pi) int (f(zeta) - f(z)) / (zeta - z)^2 dA.
cplx T2(const Function& f, cplx z, double R, Rule rule = {});
/// -((k+1)!/pi) int (f(zeta) - P_k(zeta, z)) / (zeta - z)^{k+2} dA.
cplx Tk(const JetFunction& f, int k, cplx z, double R, Rule rule = {});

/// int over D minus the disk delta = {|w - c| < rho} of
/// (zetabar - sbar)^n / (zeta - s)^m dzetabar ^ dzeta, for s inside delta.
cplx annulus_moment(int m, int n, cplx s, cplx c, double rho, double R, int n_phi = 512);

}  // namespace crsys::ops::direct
