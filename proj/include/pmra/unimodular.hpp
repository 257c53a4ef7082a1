#pragma once

#include "pmra/intmat.hpp"

namespace pmra {

/// Normalized extended gcd: g = gcd(a,b) >= 0 and u*a + v*b = g.
/// (u,v) is the minimal-norm Bezout pair; ties prefer v >= 0, then u > 0,
/// so results are reproducible across platforms.
struct ExtGcd {
    i64 g = 0;
    i64 u = 0;
    i64 v = 0;
};

ExtGcd ext_gcd(i64 a, i64 b);

/// SL(3,Z) completion with prescribed last-two-row cofactors.
///
/// B = ((b11,b12,b13), (-alpha,0,beta), (sigma,nu,tau)) with det B = 1 and
///   b22*b31 - b21*b32 = x,  b23*b31 - b21*b33 = y,  b23*b32 - b22*b33 = z.
struct UnimodularCompletion {
    i64 x = 0, y = 0, z = 0;
    IMat b;
    // construction witnesses
    i64 b11 = 0, b12 = 0, b13 = 0;
    i64 nu = 0, alpha = 0, beta = 0;
    i64 sigma = 0, tau = 0;
};

/// Build the completion for a coprime triple; throws NotCoprime otherwise.
/// First solves -b11*z + b12*y - b13*x = 1 by two extended gcds, then writes
/// x = nu*alpha, z = nu*beta with nu = gcd(x,z) and solves alpha*tau +
/// beta*sigma = y. Degenerate triples (zeros) use the gcd(0,k) = |k|
/// convention throughout.
UnimodularCompletion sl3_with_cofactors(i64 x, i64 y, i64 z);

} // namespace pmra
