#pragma once

#include "pmra/analysis.hpp"
#include "pmra/cosets.hpp"

namespace pmra {

struct FrameElement {
    int level = 0;       // i >= 0
    i64 coset_index = 0; // l < d^i
    int generator = 0;   // k
    bool is_scaling = false;
    IVec v; // coset representative applied by the modulation
    Section realized;
};

/// The family {Phi_k} united with {D^i eps_{v_l} Psi_k : 0 <= i <= depth,
/// l < d^i}, ordered by (level, coset index, generator). Scaling elements
/// stay at level 0.
struct FrameSet {
    DilationSpec spec;
    int depth = 0;
    std::vector<Section> scaling;
    std::vector<Section> wavelets;
    std::vector<CosetTable> tables; // levels 0..depth
    std::vector<FrameElement> elements;

    size_t expected_count() const;
    /// Wavelet elements of one level, in enumeration order.
    std::vector<const FrameElement*> level_elements(int level) const;
};

FrameSet generate_frame(const DilationSpec& spec, const std::vector<Section>& phis,
                        const std::vector<Section>& psis, int depth,
                        i64 level_cap = kDefaultLevelCap);

/// Smooth band-limited generators for the factor-2 diagonal dilation:
/// MeyerScaling tensors for Phi, the 2^n - 1 mixed tensors with at least one
/// MeyerWavelet factor for Psi. UnsupportedForm for other specs or n > 3.
std::pair<std::vector<Section>, std::vector<Section>> default_generators(const DilationSpec& spec);

struct ReconstructionReport {
    int level = 0;
    double max_residual = 0.0;
    double tail_accum = 0.0;
    double tol = 0.0;
    double box = 0.0;
    bool pass = false; // max_residual <= tol + tail_accum
};

/// Frame identity on one wavelet level: max over sampled x of
///   | zeta(x) - sum_elt elt(x) <elt, zeta>(frac x) |,
/// sampled on the grid mapped onto [-box/2, box/2)^n. Inner products are
/// truncated at R with tails accumulated into the report.
ReconstructionReport verify_reconstruction(const FrameSet& fs, const Section& zeta, int level,
                                           const TorusGrid& grid, i64 R, double tol,
                                           double box = 16.0, Exec exec = Exec::parallel);

struct GramLevelReport {
    int level = 0;
    size_t count = 0;
    std::vector<double> deviations; // row-major count x count sup-norm devs from delta
    double max_diag_dev = 0.0;
    double max_offdiag_dev = 0.0;
    double max_tail = 0.0;

    bool certified(double tol) const {
        return count > 0 && std::max(max_diag_dev, max_offdiag_dev) <= tol + max_tail;
    }
};

/// Pairwise inner products of one level's wavelet elements against the
/// delta identity; certifies the level free of rank r d^i when the
/// deviations stay within tolerance plus tails.
GramLevelReport gram_report(const FrameSet& fs, int level, const TorusGrid& grid, i64 R,
                            Exec exec = Exec::parallel);

/// Sup-norm residuals of zeta against the projections onto
/// span{scaling} + wavelet levels 0..i, one entry per i = 0..depth.
std::vector<double> projection_residuals(const FrameSet& fs, const Section& zeta,
                                         const TorusGrid& grid, i64 R, double box = 16.0,
                                         Exec exec = Exec::parallel);

} // namespace pmra
