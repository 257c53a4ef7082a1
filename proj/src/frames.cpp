#include "pmra/frames.hpp"

#include <cmath>

namespace pmra {

namespace {

// <f, g>(t) truncated to the per-axis box, sequential fixed order.
cplx ip_at(const Section& f, const Section& g, const std::vector<double>& t,
           const std::vector<i64>& radii) {
    const int n = f.n;
    std::vector<double> y(static_cast<size_t>(n));
    std::vector<i64> m(static_cast<size_t>(n), 0);
    for (int j = 0; j < n; ++j) m[static_cast<size_t>(j)] = -radii[static_cast<size_t>(j)];
    cplx acc{0.0, 0.0};
    while (true) {
        for (int j = 0; j < n; ++j)
            y[static_cast<size_t>(j)] =
                t[static_cast<size_t>(j)] - static_cast<double>(m[static_cast<size_t>(j)]);
        acc += std::conj(eval(f, y.data())) * eval(g, y.data());
        int j = 0;
        for (; j < n; ++j) {
            if (++m[static_cast<size_t>(j)] <= radii[static_cast<size_t>(j)]) break;
            m[static_cast<size_t>(j)] = -radii[static_cast<size_t>(j)];
        }
        if (j == n) break;
    }
    return acc;
}

std::vector<double> frac_point(const std::vector<double>& x) {
    std::vector<double> t(x.size());
    for (size_t j = 0; j < x.size(); ++j) t[j] = x[j] - std::floor(x[j]);
    return t;
}

} // namespace

size_t FrameSet::expected_count() const {
    size_t cnt = scaling.size();
    for (const auto& tab : tables) cnt += wavelets.size() * tab.reps.size();
    return cnt;
}

std::vector<const FrameElement*> FrameSet::level_elements(int level) const {
    std::vector<const FrameElement*> out;
    for (const auto& e : elements)
        if (!e.is_scaling && e.level == level) out.push_back(&e);
    return out;
}

FrameSet generate_frame(const DilationSpec& spec, const std::vector<Section>& phis,
                        const std::vector<Section>& psis, int depth, i64 level_cap) {
    if (depth < 0) throw std::invalid_argument("frame depth must be >= 0");
    for (const auto& s : phis)
        if (s.n != spec.n) throw DimensionMismatch("scaling generator arity mismatch");
    for (const auto& s : psis)
        if (s.n != spec.n) throw DimensionMismatch("wavelet generator arity mismatch");

    FrameSet fs;
    fs.spec = spec;
    fs.depth = depth;
    fs.scaling = phis;
    fs.wavelets = psis;
    for (int i = 0; i <= depth; ++i) fs.tables.push_back(coset_table(spec, i, level_cap));

    for (size_t k = 0; k < phis.size(); ++k) {
        FrameElement e;
        e.generator = static_cast<int>(k);
        e.is_scaling = true;
        e.v = IVec(static_cast<size_t>(spec.n), 0);
        e.realized = phis[k];
        fs.elements.push_back(std::move(e));
    }
    for (int i = 0; i <= depth; ++i) {
        const auto& tab = fs.tables[static_cast<size_t>(i)];
        for (size_t l = 0; l < tab.reps.size(); ++l)
            for (size_t k = 0; k < psis.size(); ++k) {
                FrameElement e;
                e.level = i;
                e.coset_index = static_cast<i64>(l);
                e.generator = static_cast<int>(k);
                e.v = tab.reps[l];
                e.realized = dilate(spec, modulate(tab.reps[l], psis[k]), i);
                fs.elements.push_back(std::move(e));
            }
    }
    return fs;
}

std::pair<std::vector<Section>, std::vector<Section>> default_generators(const DilationSpec& spec) {
    const bool plain_two = !spec.conjugated && spec.is_diagonal_form();
    bool all_two = plain_two;
    if (plain_two)
        for (int j = 0; j < spec.n; ++j) all_two = all_two && spec.diag_entry(j) == 2;
    if (!all_two || spec.n > 3)
        throw UnsupportedForm("default generators cover factor-2 diagonal dilations in n <= 3");

    const Section phi1 = section_meyer_scaling(2);
    const Section psi1 = section_meyer_wavelet();
    if (spec.n == 1) return {{phi1}, {psi1}};

    std::vector<Section> parts(static_cast<size_t>(spec.n), phi1);
    std::vector<Section> phis{section_tensor(parts)};
    std::vector<Section> psis;
    for (unsigned mask = 1; mask < (1u << spec.n); ++mask) {
        for (int j = 0; j < spec.n; ++j)
            parts[static_cast<size_t>(j)] = (mask >> j) & 1u ? psi1 : phi1;
        psis.push_back(section_tensor(parts));
    }
    return {phis, psis};
}

ReconstructionReport verify_reconstruction(const FrameSet& fs, const Section& zeta, int level,
                                           const TorusGrid& grid, i64 R, double tol, double box,
                                           Exec exec) {
    if (zeta.n != fs.spec.n || grid.n != fs.spec.n) throw DimensionMismatch("arity mismatch");
    if (level < 0 || level > fs.depth) throw std::invalid_argument("level outside the frame depth");
    const auto elts = fs.level_elements(level);

    ReconstructionReport rep;
    rep.level = level;
    rep.tol = tol;
    rep.box = box;

    std::vector<std::vector<i64>> radii;
    radii.reserve(elts.size());
    for (const auto* e : elts) {
        const auto envs = pair_envelopes(e->realized, zeta);
        for (const auto& env : envs)
            if (!env.summable()) throw NonSummableDecay();
        rep.tail_accum += e->realized.decay.sup_bound() *
                          lattice_tail(envs, static_cast<double>(R),
                                       std::vector<i64>(envs.size(), 1));
        radii.push_back(clipped_radii(envs, R));
    }

    const int n = fs.spec.n;
    const size_t total = grid.size();
    std::vector<double> devs(total, 0.0);
    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (par)
    for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(total); ++idx) {
        std::vector<double> x = grid.point(static_cast<size_t>(idx));
        for (int j = 0; j < n; ++j) x[static_cast<size_t>(j)] = (x[static_cast<size_t>(j)] - 0.5) * box;
        const std::vector<double> t = frac_point(x);
        cplx recon{0.0, 0.0};
        for (size_t e = 0; e < elts.size(); ++e)
            recon += eval(elts[e]->realized, x.data()) * ip_at(elts[e]->realized, zeta, t, radii[e]);
        devs[static_cast<size_t>(idx)] = std::abs(eval(zeta, x.data()) - recon);
    }
    for (double d : devs) rep.max_residual = std::max(rep.max_residual, d);
    rep.pass = rep.max_residual <= tol + rep.tail_accum;
    return rep;
}

GramLevelReport gram_report(const FrameSet& fs, int level, const TorusGrid& grid, i64 R, Exec exec) {
    if (grid.n != fs.spec.n) throw DimensionMismatch("arity mismatch");
    if (level < 0 || level > fs.depth) throw std::invalid_argument("level outside the frame depth");
    const auto elts = fs.level_elements(level);
    const size_t m = elts.size();

    GramLevelReport rep;
    rep.level = level;
    rep.count = m;
    rep.deviations.assign(m * m, 0.0);

    for (size_t a = 0; a < m; ++a)
        for (size_t b = a; b < m; ++b) {
            const auto res = rigged_inner_product(elts[a]->realized, elts[b]->realized, grid, R, exec);
            const cplx expected = a == b ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
            double dev = 0.0;
            for (const auto& v : res.values) dev = std::max(dev, std::abs(v - expected));
            rep.deviations[a * m + b] = dev;
            rep.deviations[b * m + a] = dev;
            rep.max_tail = std::max(rep.max_tail, res.tail_bound);
            if (a == b)
                rep.max_diag_dev = std::max(rep.max_diag_dev, dev);
            else
                rep.max_offdiag_dev = std::max(rep.max_offdiag_dev, dev);
        }
    return rep;
}

std::vector<double> projection_residuals(const FrameSet& fs, const Section& zeta,
                                         const TorusGrid& grid, i64 R, double box, Exec exec) {
    if (zeta.n != fs.spec.n || grid.n != fs.spec.n) throw DimensionMismatch("arity mismatch");
    std::vector<const FrameElement*> elts;
    for (const auto& e : fs.elements) elts.push_back(&e);

    std::vector<std::vector<i64>> radii;
    radii.reserve(elts.size());
    for (const auto* e : elts) {
        const auto envs = pair_envelopes(e->realized, zeta);
        for (const auto& env : envs)
            if (!env.summable()) throw NonSummableDecay();
        radii.push_back(clipped_radii(envs, R));
    }

    const int n = fs.spec.n;
    const size_t total = grid.size();
    const size_t levels = static_cast<size_t>(fs.depth) + 1;
    std::vector<double> devs(total * levels, 0.0);
    const bool par = exec == Exec::parallel;
#pragma omp parallel for schedule(static) if (par)
    for (std::ptrdiff_t idx = 0; idx < static_cast<std::ptrdiff_t>(total); ++idx) {
        std::vector<double> x = grid.point(static_cast<size_t>(idx));
        for (int j = 0; j < n; ++j) x[static_cast<size_t>(j)] = (x[static_cast<size_t>(j)] - 0.5) * box;
        const std::vector<double> t = frac_point(x);
        cplx residual = eval(zeta, x.data());
        for (size_t e = 0; e < elts.size(); ++e)
            if (elts[e]->is_scaling)
                residual -= eval(elts[e]->realized, x.data()) * ip_at(elts[e]->realized, zeta, t, radii[e]);
        for (int lev = 0; lev <= fs.depth; ++lev) {
            for (size_t e = 0; e < elts.size(); ++e)
                if (!elts[e]->is_scaling && elts[e]->level == lev)
                    residual -=
                        eval(elts[e]->realized, x.data()) * ip_at(elts[e]->realized, zeta, t, radii[e]);
            devs[static_cast<size_t>(idx) * levels + static_cast<size_t>(lev)] = std::abs(residual);
        }
    }
    std::vector<double> out(levels, 0.0);
    for (size_t idx = 0; idx < total; ++idx)
        for (size_t lev = 0; lev < levels; ++lev)
            out[lev] = std::max(out[lev], devs[idx * levels + lev]);
    return out;
}

} // namespace pmra
