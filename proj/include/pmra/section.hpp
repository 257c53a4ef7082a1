#pragma once

#include <memory>
#include <optional>

#include "pmra/decay.hpp"
#include "pmra/dilation.hpp"
#include "pmra/trigpoly.hpp"

namespace pmra {

enum class SectionKind {
    ClosedFormHaar,   // (e(x)-1)/(2 pi i x), the d-adic product in closed form
    TrigPolynomial,   // finite frequency support, periodic
    TensorProduct,    // product over consecutive coordinate slices
    TruncatedProduct, // prod_{j=1..J} (1/sqrt d) m0(A^-j x)
    Dilated,          // d^(-i/2) f((A^t)^-i x)
    Modulated,        // e(-v.x) f(x)
    Sum,
    Scaled,
    Product,          // pointwise product, same arity
    Shifted,          // f(x - h)
    MeyerScaling,     // smooth compactly supported scaling profile, factor d
    MeyerWavelet,     // the d=2 wavelet profile derived from MeyerScaling
    MeyerMask,        // the 1-periodic mask refining MeyerScaling
    QuasiComb,        // sum_k e(-k a.s) w(s, t - k q), quasi-periodic step q
};

/// Declares f(s, t - q) = e(sum_j twists_j s_j) f(s, t) in the last variable.
struct QuasiPeriod {
    i64 q = 1;
    IVec twists; // length n-1

    bool operator==(const QuasiPeriod& o) const { return q == o.q && twists == o.twists; }
};

/// Immutable evaluable descriptor of a function on R^n. Build through the
/// factory functions; evaluation is pure and thread-safe.
struct Section {
    int n = 1;
    SectionKind kind = SectionKind::ClosedFormHaar;
    i64 d = 2;                                 // ClosedFormHaar / Meyer kinds
    std::shared_ptr<const TrigPoly> poly;      // TrigPolynomial, TruncatedProduct mask
    std::shared_ptr<const DilationSpec> dspec; // Dilated, TruncatedProduct
    std::vector<Section> children;
    int power = 0;             // Dilated exponent, TruncatedProduct depth
    IVec freq;                 // Modulated frequency
    std::vector<double> shift; // Shifted offset
    cplx factor{1.0, 0.0};     // Scaled
    i64 comb_q = 1;            // QuasiComb step
    IVec comb_twists;          // QuasiComb phases
    std::optional<QuasiPeriod> quasi;
    DecayModel decay;

    // evaluation caches, fixed at construction
    std::vector<double> inv_mat; // Dilated: (A^t)^-i; TruncatedProduct: A^-1
    double amp = 1.0;
};

Section section_haar(i64 d);
Section section_trig(const TrigPoly& poly);
Section section_tensor(const std::vector<Section>& parts);
Section section_truncated_product(const DilationSpec& spec, const TrigPoly& m0, int depth);
Section section_sum(const Section& a, const Section& b);
Section section_scaled(cplx z, const Section& s);
Section section_product(const Section& a, const Section& b);
Section section_shifted(const std::vector<double>& h, const Section& s);
Section section_meyer_scaling(i64 d);
Section section_meyer_wavelet();
Section section_meyer_mask(i64 d);
Section section_quasi_comb(i64 q, const IVec& twists, const Section& window);

/// Frequency-domain dilation: eval = d^(-i/2) f((A^t)^-i x), i >= 0.
/// Composes additively in the exponent.
Section dilate(const DilationSpec& spec, const Section& s, int i);
/// Modulation e(-v.x) f(x); v = 0 returns s itself.
Section modulate(const IVec& v, const Section& s);

cplx eval(const Section& s, const double* x);
cplx eval(const Section& s, const std::vector<double>& x);
cplx eval1(const Section& s, double x);

/// Smooth step t^2 (3 - 2t) clamped to [0,1].
double meyer_nu(double t);
/// The flat-top profile: 1 on |x| <= 1/(d+1), supported in |x| < d/(d+1).
double meyer_phi(i64 d, double x);

} // namespace pmra
