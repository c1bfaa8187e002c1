#pragma once

#include "crsys/core/jet.hpp"
#include "crsys/ops/workspace.hpp"

namespace crsys::ops {

// All operators act component-wise and return values at every node,
// including the center and the boundary ring.

/// Tf(z) = -(1/pi) int_D f(zeta) / (zeta - z) dA.
core::Field op_T(const core::Field& f, const OperatorWorkspace& ws);
/// conj(T(conj f)).
core::Field op_Tbar(const core::Field& f, const OperatorWorkspace& ws);
/// Cauchy integral of the boundary values.
core::Field op_S(const core::Field& f, const OperatorWorkspace& ws);
/// conj(S(conj f)).
core::Field op_Sbar(const core::Field& f, const OperatorWorkspace& ws);
/// (1/2 pi i) int_C f(zeta) dzetabar / (zeta - z).
core::Field op_Sb(const core::Field& f, const OperatorWorkspace& ws);
/// d^l S_b f, taken term-wise on the boundary series (S_b f is holomorphic).
core::Field op_dSb(const core::Field& f, int l, const OperatorWorkspace& ws);
/// 2T f = d T f, the Taylor-subtracted strongly singular transform.
core::Field op_T2(const core::Field& f, const OperatorWorkspace& ws);
/// (k+2)T f = d^{k+1} T f, assembled from 2T(d^k f) minus d^l S_b terms.
/// Needs the jet entries d^i f for i <= k.
core::Field op_Tk(const core::Jet& f, int k, const OperatorWorkspace& ws);

/// d^i dbar^j T f without numerical differentiation: a dbar is peeled
/// into f when j >= 1, otherwise the (i+1)T transform is used.
core::Field derivative_of_T(const core::Jet& f, int i, int j, const OperatorWorkspace& ws);

/// Jet of order k + 1 of T f from a jet of order k of f.
core::Jet apply_T(const core::Jet& f, const OperatorWorkspace& ws);
core::Jet apply_Tbar(const core::Jet& f, const OperatorWorkspace& ws);

/// T^nu Tbar^mu h: Tbar applied mu times, then T nu times.
core::Jet compose_T(const core::Jet& h, int mu, int nu, const OperatorWorkspace& ws);
core::Field compose_T(const core::Field& h, int mu, int nu, const OperatorWorkspace& ws);

}  // namespace crsys::ops
