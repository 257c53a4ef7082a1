#include "pmra/kclass.hpp"

#include "pmra/errors.hpp"

namespace pmra {

void ModuleDescriptor::validate() const {
    if (n < 1) throw std::invalid_argument("descriptor dimension must be >= 1");
    if (q < 1) throw std::invalid_argument("descriptor rank q must be >= 1");
    if (static_cast<int>(twists.size()) != n - 1) throw DimensionMismatch("descriptor needs n-1 twists");
    if (conjugator) {
        if (!conjugator->is_square() || conjugator->rows != n) throw DimensionMismatch();
        i64 d = det(*conjugator);
        if (d != 1 && d != -1) throw NotUnimodular();
    }
}

KClass class_of_module(const ModuleDescriptor& m) {
    m.validate();
    ExtElement c = ExtElement::scalar(m.n, m.q);
    ExtElement en = ExtElement::generator(m.n, m.n);
    for (int j = 1; j <= m.n - 1; ++j) {
        i64 a = m.twists[static_cast<size_t>(j - 1)];
        if (a == 0) continue;
        ExtElement term = wedge(ExtElement::generator(m.n, j), en);
        c = sub(c, scale(a, term));
    }
    if (m.conjugator) c = substitute(*m.conjugator, c);
    return KClass(m.n, c);
}

KClass direct_sum(const KClass& c1, const KClass& c2) {
    if (c1.n != c2.n) throw DimensionMismatch();
    return KClass(c1.n, add(c1.elem, c2.elem));
}

KClass gl2_action(const IMat& a, const KClass& c) {
    if (c.n != 2 || a.rows != 2 || a.cols != 2) throw DimensionMismatch();
    i64 d = det(a);
    if (d != 1 && d != -1) throw NotUnimodular();
    ExtElement e = c.elem;
    e.set(0b11, mul_i(d, e.coefficient(0b11)));
    return KClass(2, e);
}

KClass gl_action(const IMat& b, const KClass& c) {
    if (b.rows != c.n || b.cols != c.n) throw DimensionMismatch();
    i64 d = det(b);
    if (d != 1 && d != -1) throw NotUnimodular();
    return KClass(c.n, substitute(b, c.elem));
}

namespace {

// Position (1-based) of the unique nonzero twist, or 0 if all twists vanish.
int single_twist_position(const ModuleDescriptor& m) {
    int pos = 0;
    for (int j = 1; j <= m.n - 1; ++j) {
        if (m.twists[static_cast<size_t>(j - 1)] == 0) continue;
        if (pos != 0) throw UnsupportedTwistPattern();
        pos = j;
    }
    return pos;
}

} // namespace

ModuleDescriptor dilate_class(const DilationSpec& spec, const ModuleDescriptor& m) {
    m.validate();
    if (spec.n != m.n) throw DimensionMismatch();
    if (!spec.is_diagonal_form()) throw UnsupportedForm("dilation pushforward needs a diagonal spec");
    if (m.conjugator) throw std::invalid_argument("dilation pushforward needs an unconjugated descriptor");
    int k = single_twist_position(m);
    ModuleDescriptor out = m;
    out.q = mul_i(m.q, spec.absdet);
    if (k != 0) {
        // Permute the twist position to n-1, apply the single-twist rule,
        // permute back: the factor is the product of |d_j| over all axes
        // except the twist axis and the last one, signed by d_k*d_n.
        i64 factor = 1;
        for (int j = 1; j <= m.n; ++j) {
            if (j == k || j == m.n) continue;
            factor = mul_i(factor, abs_i(spec.diag_entry(j - 1)));
        }
        i64 s = mul_i(sign_i(spec.diag_entry(k - 1)), sign_i(spec.diag_entry(m.n - 1)));
        out.twists[static_cast<size_t>(k - 1)] = mul_i(mul_i(factor, s), m.twists[static_cast<size_t>(k - 1)]);
    }
    return out;
}

ModuleDescriptor pmra_level_class(const DilationSpec& spec, const ModuleDescriptor& m, int i) {
    if (i < 0) throw std::invalid_argument("level must be >= 0");
    ModuleDescriptor v = m;
    for (int j = 0; j < i; ++j) v = dilate_class(spec, v);
    return v;
}

WaveletClass wavelet_class(const DilationSpec& spec, const ModuleDescriptor& m, int i) {
    ModuleDescriptor vi = pmra_level_class(spec, m, i);
    ModuleDescriptor vi1 = dilate_class(spec, vi);
    WaveletClass w;
    w.diff = KClass(m.n, sub(class_of_module(vi1).elem, class_of_module(vi).elem));
    w.cancellation_valid = (m.n <= 4);
    return w;
}

} // namespace pmra
