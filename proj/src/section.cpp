#include "pmra/section.hpp"

#include <array>
#include <cmath>

namespace pmra {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;
constexpr int kMaxDim = 8;

double wrap_half(double x) { return x - std::round(x); }

cplx haar_closed_form(double x) {
    if (std::abs(x) < 1e-4) {
        // (e^z - 1)/z for z = 2 pi i x, truncated where the next term is ~1e-15
        const cplx z{0.0, 2.0 * kPi * x};
        return 1.0 + z * (0.5 + z * (1.0 / 6.0 + z * (1.0 / 24.0)));
    }
    const cplx num = unit_e(x) - 1.0;
    return num / cplx{0.0, 2.0 * kPi * x};
}

void apply_mat(const std::vector<double>& m, int n, const double* x, double* y) {
    for (int r = 0; r < n; ++r) {
        double acc = 0.0;
        for (int c = 0; c < n; ++c) acc += m[static_cast<size_t>(r * n + c)] * x[c];
        y[r] = acc;
    }
}

std::vector<double> inverse_as_doubles(const IMat& m) {
    const i64 dt = det(m);
    if (dt == 0) throw SingularMatrix();
    const IMat adj = adjugate(m);
    std::vector<double> out(static_cast<size_t>(m.rows * m.cols));
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            out[static_cast<size_t>(r * m.cols + c)] =
                static_cast<double>(adj(r, c)) / static_cast<double>(dt);
    return out;
}

bool same_entries(const IMat& a, const IMat& b) {
    return a.rows == b.rows && a.cols == b.cols && a.a == b.a;
}

Section make_base(SectionKind kind, int n) {
    if (n < 1 || n > kMaxDim) throw std::invalid_argument("section dimension out of range");
    Section s;
    s.kind = kind;
    s.n = n;
    return s;
}

} // namespace

double meyer_nu(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    return t * t * (3.0 - 2.0 * t);
}

double meyer_phi(i64 d, double x) {
    const double dd = static_cast<double>(d);
    const double a = 1.0 / (dd + 1.0);
    const double b = dd / (dd + 1.0);
    const double r = std::abs(x);
    if (r <= a) return 1.0;
    if (r >= b) return 0.0;
    return std::cos(0.5 * kPi * meyer_nu((r - a) / (b - a)));
}

Section section_haar(i64 d) {
    if (abs_i(d) < 2) throw NotExpanding("dilation factor needs |d| > 1");
    Section s = make_base(SectionKind::ClosedFormHaar, 1);
    s.d = d;
    s.decay.axes = {axis_power(1.0, 1.0 / kPi, 1.0)};
    return s;
}

Section section_trig(const TrigPoly& poly) {
    Section s = make_base(SectionKind::TrigPolynomial, poly.n);
    s.poly = std::make_shared<TrigPoly>(poly);
    s.decay = DecayModel::bounded(poly.n, poly.coeff_abs_sum());
    if (poly.period == 1)
        s.quasi = QuasiPeriod{1, IVec(static_cast<size_t>(poly.n - 1), 0)};
    return s;
}

Section section_tensor(const std::vector<Section>& parts) {
    if (parts.empty()) throw std::invalid_argument("tensor needs at least one part");
    int n = 0;
    std::vector<DecayModel> models;
    models.reserve(parts.size());
    for (const auto& p : parts) {
        n += p.n;
        models.push_back(p.decay);
    }
    Section s = make_base(SectionKind::TensorProduct, n);
    s.children = parts;
    s.decay = decay_tensor(models);
    return s;
}

Section section_truncated_product(const DilationSpec& spec, const TrigPoly& m0, int depth) {
    if (depth < 1) throw DepthZero();
    if (m0.n != spec.n) throw DimensionMismatch("mask arity must match the dilation");
    Section s = make_base(SectionKind::TruncatedProduct, spec.n);
    s.dspec = std::make_shared<DilationSpec>(spec);
    s.poly = std::make_shared<TrigPoly>(m0);
    s.power = depth;
    s.amp = 1.0 / std::sqrt(static_cast<double>(spec.absdet));
    s.inv_mat = inverse_as_doubles(spec.entries);
    const double step_sup = m0.coeff_abs_sum() * s.amp;
    s.decay = DecayModel::bounded(spec.n, std::pow(std::max(step_sup, 1.0), depth));
    return s;
}

Section section_sum(const Section& a, const Section& b) {
    if (a.n != b.n) throw DimensionMismatch("sum arity mismatch");
    Section s = make_base(SectionKind::Sum, a.n);
    s.children = {a, b};
    s.decay = decay_sum(a.decay, b.decay);
    if (a.quasi && b.quasi && *a.quasi == *b.quasi) s.quasi = a.quasi;
    return s;
}

Section section_scaled(cplx z, const Section& inner) {
    Section s = make_base(SectionKind::Scaled, inner.n);
    s.children = {inner};
    s.factor = z;
    s.decay = decay_scale(inner.decay, std::abs(z));
    s.quasi = inner.quasi;
    return s;
}

Section section_product(const Section& a, const Section& b) {
    if (a.n != b.n) throw DimensionMismatch("product arity mismatch");
    Section s = make_base(SectionKind::Product, a.n);
    s.children = {a, b};
    s.decay = decay_product(a.decay, b.decay);
    if (a.quasi && b.quasi && a.quasi->q == b.quasi->q) {
        QuasiPeriod qp;
        qp.q = a.quasi->q;
        qp.twists = add(a.quasi->twists, b.quasi->twists);
        s.quasi = qp;
    }
    return s;
}

Section section_shifted(const std::vector<double>& h, const Section& inner) {
    if (static_cast<int>(h.size()) != inner.n) throw DimensionMismatch("shift arity mismatch");
    Section s = make_base(SectionKind::Shifted, inner.n);
    s.children = {inner};
    s.shift = h;
    s.decay = decay_shift(inner.decay, h);
    if (inner.quasi) {
        double mix = 0.0;
        for (size_t j = 0; j + 1 < h.size(); ++j)
            mix += std::abs(static_cast<double>(inner.quasi->twists[j]) * h[j]);
        if (mix == 0.0) s.quasi = inner.quasi;
    }
    return s;
}

Section section_meyer_scaling(i64 d) {
    if (d < 2) throw NotExpanding("smooth scaling profile needs d >= 2");
    Section s = make_base(SectionKind::MeyerScaling, 1);
    s.d = d;
    s.decay.axes = {axis_compact(1.0, static_cast<double>(d) / (static_cast<double>(d) + 1.0))};
    return s;
}

Section section_meyer_wavelet() {
    Section s = make_base(SectionKind::MeyerWavelet, 1);
    s.d = 2;
    s.decay.axes = {axis_compact(1.0, 4.0 / 3.0)};
    return s;
}

Section section_meyer_mask(i64 d) {
    if (d < 2) throw NotExpanding("mask needs d >= 2");
    Section s = make_base(SectionKind::MeyerMask, 1);
    s.d = d;
    s.decay = DecayModel::bounded(1, std::sqrt(static_cast<double>(d)));
    s.quasi = QuasiPeriod{1, IVec{}};
    return s;
}

Section section_quasi_comb(i64 q, const IVec& twists, const Section& window) {
    if (q < 1) throw std::invalid_argument("quasi comb needs q >= 1");
    if (static_cast<int>(twists.size()) != window.n - 1)
        throw DimensionMismatch("quasi comb needs n-1 twists");
    const AxisDecay& last = window.decay.axes.back();
    if (!last.compact)
        throw std::invalid_argument("quasi comb needs a window compactly supported in the last variable");
    Section s = make_base(SectionKind::QuasiComb, window.n);
    s.children = {window};
    s.comb_q = q;
    s.comb_twists = twists;
    s.decay = window.decay;
    const double overlap = std::floor(2.0 * last.radius / static_cast<double>(q)) + 1.0;
    s.decay.axes.back() = axis_bounded(last.sup * overlap);
    s.quasi = QuasiPeriod{q, twists};
    return s;
}

Section dilate(const DilationSpec& spec, const Section& inner, int i) {
    if (spec.n != inner.n) throw DimensionMismatch("dilation arity mismatch");
    if (i < 0) throw std::invalid_argument("dilation power must be >= 0");
    if (i == 0) return inner;
    if (inner.kind == SectionKind::Dilated && same_entries(inner.dspec->entries, spec.entries))
        return dilate(spec, inner.children[0], i + inner.power);

    Section s = make_base(SectionKind::Dilated, spec.n);
    s.dspec = std::make_shared<DilationSpec>(spec);
    s.children = {inner};
    s.power = i;
    const IMat at_i = mat_pow(spec.entries.transposed(), i);
    s.inv_mat = inverse_as_doubles(at_i);
    s.amp = std::pow(static_cast<double>(spec.absdet), -0.5 * static_cast<double>(i));
    if (spec.is_diagonal_form() && !spec.conjugated) {
        std::vector<double> dils(static_cast<size_t>(spec.n));
        for (int j = 0; j < spec.n; ++j)
            dils[static_cast<size_t>(j)] =
                std::pow(static_cast<double>(abs_i(spec.diag_entry(j))), static_cast<double>(i));
        s.decay = decay_dilate_diag(inner.decay, dils, s.amp);
    } else {
        std::vector<double> row_sums(static_cast<size_t>(spec.n), 0.0);
        for (int r = 0; r < spec.n; ++r)
            for (int c = 0; c < spec.n; ++c)
                row_sums[static_cast<size_t>(r)] += static_cast<double>(abs_i(at_i(r, c)));
        s.decay = decay_dilate_general(inner.decay, row_sums, s.amp);
    }
    return s;
}

Section modulate(const IVec& v, const Section& inner) {
    if (static_cast<int>(v.size()) != inner.n) throw DimensionMismatch("modulation arity mismatch");
    bool zero = true;
    for (i64 c : v) zero = zero && c == 0;
    if (zero) return inner;
    if (inner.kind == SectionKind::Modulated) return modulate(add(v, inner.freq), inner.children[0]);

    Section s = make_base(SectionKind::Modulated, inner.n);
    s.children = {inner};
    s.freq = v;
    s.decay = inner.decay;
    s.quasi = inner.quasi; // e(-v_n q) = 1: integer frequency times integer step
    return s;
}

cplx eval(const Section& s, const double* x) {
    switch (s.kind) {
    case SectionKind::ClosedFormHaar:
        return haar_closed_form(x[0]);
    case SectionKind::TrigPolynomial:
        return s.poly->eval(x);
    case SectionKind::TensorProduct: {
        cplx acc{1.0, 0.0};
        int off = 0;
        for (const auto& ch : s.children) {
            acc *= eval(ch, x + off);
            off += ch.n;
        }
        return acc;
    }
    case SectionKind::TruncatedProduct: {
        if (s.power < 1) throw DepthZero();
        std::array<double, kMaxDim> y{}, t{};
        for (int j = 0; j < s.n; ++j) y[static_cast<size_t>(j)] = x[j];
        cplx acc{1.0, 0.0};
        for (int j = 1; j <= s.power; ++j) {
            apply_mat(s.inv_mat, s.n, y.data(), t.data());
            y = t;
            acc *= s.amp * s.poly->eval(y.data());
        }
        return acc;
    }
    case SectionKind::Dilated: {
        std::array<double, kMaxDim> y{};
        apply_mat(s.inv_mat, s.n, x, y.data());
        return s.amp * eval(s.children[0], y.data());
    }
    case SectionKind::Modulated: {
        double phase = 0.0;
        for (int j = 0; j < s.n; ++j) phase += static_cast<double>(s.freq[static_cast<size_t>(j)]) * x[j];
        return unit_e(-phase) * eval(s.children[0], x);
    }
    case SectionKind::Sum: {
        cplx acc{0.0, 0.0};
        for (const auto& ch : s.children) acc += eval(ch, x);
        return acc;
    }
    case SectionKind::Scaled:
        return s.factor * eval(s.children[0], x);
    case SectionKind::Product:
        return eval(s.children[0], x) * eval(s.children[1], x);
    case SectionKind::Shifted: {
        std::array<double, kMaxDim> y{};
        for (int j = 0; j < s.n; ++j) y[static_cast<size_t>(j)] = x[j] - s.shift[static_cast<size_t>(j)];
        return eval(s.children[0], y.data());
    }
    case SectionKind::MeyerScaling:
        return {meyer_phi(s.d, x[0]), 0.0};
    case SectionKind::MeyerWavelet: {
        const double h = 0.5 * x[0];
        const double mag = meyer_phi(2, 2.0 * wrap_half(h + 0.5)) * meyer_phi(2, h);
        return unit_e(h) * mag;
    }
    case SectionKind::MeyerMask:
        return {std::sqrt(static_cast<double>(s.d)) *
                    meyer_phi(s.d, static_cast<double>(s.d) * wrap_half(x[0])),
                0.0};
    case SectionKind::QuasiComb: {
        const Section& w = s.children[0];
        const double rho = w.decay.axes.back().radius;
        const double t = x[s.n - 1];
        const double q = static_cast<double>(s.comb_q);
        const i64 k_lo = static_cast<i64>(std::ceil((t - rho) / q));
        const i64 k_hi = static_cast<i64>(std::floor((t + rho) / q));
        double sphase = 0.0;
        for (int j = 0; j + 1 < s.n; ++j)
            sphase += static_cast<double>(s.comb_twists[static_cast<size_t>(j)]) * x[j];
        std::array<double, kMaxDim> y{};
        for (int j = 0; j < s.n; ++j) y[static_cast<size_t>(j)] = x[j];
        cplx acc{0.0, 0.0};
        for (i64 k = k_lo; k <= k_hi; ++k) {
            y[static_cast<size_t>(s.n - 1)] = t - static_cast<double>(k) * q;
            acc += unit_e(-static_cast<double>(k) * sphase) * eval(w, y.data());
        }
        return acc;
    }
    }
    throw std::logic_error("unreachable section kind");
}

cplx eval(const Section& s, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != s.n) throw DimensionMismatch("evaluation arity mismatch");
    return eval(s, x.data());
}

cplx eval1(const Section& s, double x) {
    if (s.n != 1) throw DimensionMismatch("eval1 needs a univariate section");
    return eval(s, &x);
}

} // namespace pmra
