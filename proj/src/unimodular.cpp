#include "pmra/unimodular.hpp"

#include "pmra/errors.hpp"

namespace pmra {

namespace {

// Pick k so that |t0 - k*step| is minimal; ties prefer the second value
// other >= 0 (after other += k*adj), then positive first value.
// Used to normalize one-parameter Bezout families deterministically.
struct Reduced {
    i64 first;
    i64 second;
};

Reduced reduce_pair(i64 t0, i64 step, i64 s0, i64 s_adj) {
    // family: (t0 - k*step, s0 + k*s_adj), step > 0
    i64 k0 = floor_div_i(t0, step);
    Reduced best{0, 0};
    bool have = false;
    for (i64 k : {k0, k0 + 1}) {
        Reduced cand{sub_i(t0, mul_i(k, step)), add_i(s0, mul_i(k, s_adj))};
        if (!have) {
            best = cand;
            have = true;
            continue;
        }
        i64 ca = abs_i(cand.first), ba = abs_i(best.first);
        if (ca < ba)
            best = cand;
        else if (ca == ba) {
            bool cs = cand.second >= 0, bs = best.second >= 0;
            if (cs != bs) {
                if (cs) best = cand;
            } else if (cand.first > best.first) {
                best = cand;
            }
        }
    }
    return best;
}

} // namespace

ExtGcd ext_gcd(i64 a, i64 b) {
    if (a == 0 && b == 0) return {0, 0, 0};
    if (b == 0) return {abs_i(a), sign_i(a), 0};
    if (a == 0) return {abs_i(b), 0, sign_i(b)};
    // iterative extended Euclid on absolute values
    i64 r0 = abs_i(a), r1 = abs_i(b);
    i64 u0 = 1, u1 = 0;
    while (r1 != 0) {
        i64 q = r0 / r1;
        i64 r2 = sub_i(r0, mul_i(q, r1));
        i64 u2 = sub_i(u0, mul_i(q, u1));
        r0 = r1;
        r1 = r2;
        u0 = u1;
        u1 = u2;
    }
    i64 g = r0;
    i64 u = mul_i(u0, sign_i(a));
    i64 v = (g - mul_i(u, a)) / b; // exact by the gcd identity
    // The solution family is u' = u + k*(b/g), v' = v - k*(a/g); reduce u to
    // minimal absolute value. Written as (u - j*bu, v + j*av) with bu > 0.
    i64 bu = b / g, av = a / g;
    if (bu < 0) {
        bu = neg_i(bu);
        av = neg_i(av);
    }
    Reduced r = reduce_pair(u, bu, v, av);
    return {g, r.first, r.second};
}

UnimodularCompletion sl3_with_cofactors(i64 x, i64 y, i64 z) {
    if (gcd_i(gcd_i(x, y), z) != 1) throw NotCoprime();
    UnimodularCompletion c;
    c.x = x;
    c.y = y;
    c.z = z;

    // Step 1: -b11*z + b12*y - b13*x = 1 via two extended gcds.
    ExtGcd zy = ext_gcd(z, y); // p*z + q*y = g1
    ExtGcd gx = ext_gcd(zy.g, x); // r*g1 + s*x = 1
    c.b11 = neg_i(mul_i(gx.u, zy.u));
    c.b12 = mul_i(gx.u, zy.v);
    c.b13 = neg_i(gx.v);

    // Step 2: nu = gcd(x,z), x = nu*alpha, z = nu*beta.
    c.nu = gcd_i(x, z);
    if (c.nu == 0) {
        // x = z = 0 forces |y| = 1; rows (-1,0,0) and (0,0,y) complete.
        c.alpha = 1;
        c.beta = 0;
        c.tau = y;
        c.sigma = 0;
    } else {
        c.alpha = x / c.nu;
        c.beta = z / c.nu;
        // Step 3: alpha*tau + beta*sigma = y (gcd(alpha,beta) = 1).
        if (c.beta == 0) {
            c.tau = mul_i(c.alpha, y); // alpha = +-1
            c.sigma = 0;
        } else if (c.alpha == 0) {
            c.sigma = mul_i(c.beta, y); // beta = +-1
            c.tau = 0;
        } else {
            ExtGcd ab = ext_gcd(c.alpha, c.beta); // u*alpha + v*beta = 1
            i64 tau0 = mul_i(ab.u, y);
            i64 sigma0 = mul_i(ab.v, y);
            // family: tau(k) = tau0 - k*beta', sigma(k) = sigma0 + k*alpha'
            i64 bstep = c.beta, astep = c.alpha;
            if (bstep < 0) {
                bstep = neg_i(bstep);
                astep = neg_i(astep);
            }
            Reduced r = reduce_pair(tau0, bstep, sigma0, astep);
            c.tau = r.first;
            c.sigma = r.second;
        }
    }

    c.b = IMat::from_rows({{c.b11, c.b12, c.b13}, {neg_i(c.alpha), 0, c.beta}, {c.sigma, c.nu, c.tau}});
    return c;
}

} // namespace pmra
