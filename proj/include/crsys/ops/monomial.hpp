#pragma once

#include "crsys/core/polynomial.hpp"

namespace crsys::ops::exact {

// Closed-form images of polynomials in (z, zbar) on the disk of radius R.
// These come from residue calculus and serve as ground truth in tests.

/// T(z^a zbar^b) = z^a zbar^{b+1}/(b+1) - [a >= b+1] R^{2(b+1)} z^{a-b-1}/(b+1).
core::Polynomial T(const core::Polynomial& p, double R);
core::Polynomial Tbar(const core::Polynomial& p, double R);
/// S(z^a zbar^b) = [a >= b] R^{2b} z^{a-b}.
core::Polynomial S(const core::Polynomial& p, double R);
core::Polynomial Sbar(const core::Polynomial& p, double R);
/// S_b(z^a zbar^b) = -[a - b >= 2] R^{2b+2} z^{a-b-2}.
core::Polynomial Sb(const core::Polynomial& p, double R);
/// 2T p = d T p.
core::Polynomial T2(const core::Polynomial& p, double R);
/// (k+2)T p = d^{k+1} T p.
core::Polynomial Tk(const core::Polynomial& p, int k, double R);
core::Polynomial compose_T(const core::Polynomial& p, int mu, int nu, double R);

}  // namespace crsys::ops::exact
