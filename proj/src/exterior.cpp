#include "pmra/exterior.hpp"

#include <bit>
#include <stdexcept>

#include "pmra/errors.hpp"

namespace pmra {

namespace {

void check_dim(const ExtElement& u, const ExtElement& v) {
    if (u.n != v.n) throw DimensionMismatch();
}

// Sign of merging two disjoint ascending monomials: parity of the number of
// generator pairs (s in u, t in v) with t < s.
int merge_sign(std::uint64_t u, std::uint64_t v) {
    int inversions = 0;
    std::uint64_t rest = u;
    while (rest) {
        int s = std::countr_zero(rest);
        rest &= rest - 1;
        inversions += std::popcount(v & ((std::uint64_t(1) << s) - 1));
    }
    return (inversions % 2 == 0) ? 1 : -1;
}

} // namespace

ExtElement ExtElement::scalar(int n, i64 c) {
    ExtElement e(n);
    e.set(0, c);
    return e;
}

ExtElement ExtElement::generator(int n, int index) {
    if (index < 1 || index > n) throw std::invalid_argument("generator index out of range");
    ExtElement e(n);
    e.set(std::uint64_t(1) << (index - 1), 1);
    return e;
}

ExtElement ExtElement::monomial(int n, const std::vector<int>& indices, i64 c) {
    ExtElement e(n);
    std::uint64_t mask = 0;
    int prev = 0;
    for (int i : indices) {
        if (i <= prev || i > n) throw std::invalid_argument("monomial indices must be strictly increasing and <= n");
        mask |= std::uint64_t(1) << (i - 1);
        prev = i;
    }
    e.set(mask, c);
    return e;
}

bool ExtElement::even() const {
    for (const auto& [mask, c] : coeffs)
        if (std::popcount(mask) % 2 != 0) return false;
    return true;
}

i64 ExtElement::coefficient(std::uint64_t mask) const {
    auto it = coeffs.find(mask);
    return it == coeffs.end() ? 0 : it->second;
}

void ExtElement::set(std::uint64_t mask, i64 c) {
    if (c == 0)
        coeffs.erase(mask);
    else
        coeffs[mask] = c;
}

ExtElement add(const ExtElement& u, const ExtElement& v) {
    check_dim(u, v);
    ExtElement r = u;
    for (const auto& [mask, c] : v.coeffs) r.set(mask, add_i(r.coefficient(mask), c));
    return r;
}

ExtElement sub(const ExtElement& u, const ExtElement& v) {
    check_dim(u, v);
    ExtElement r = u;
    for (const auto& [mask, c] : v.coeffs) r.set(mask, sub_i(r.coefficient(mask), c));
    return r;
}

ExtElement scale(i64 c, const ExtElement& u) {
    ExtElement r(u.n);
    if (c == 0) return r;
    for (const auto& [mask, x] : u.coeffs) r.set(mask, mul_i(c, x));
    return r;
}

ExtElement wedge(const ExtElement& u, const ExtElement& v) {
    check_dim(u, v);
    ExtElement r(u.n);
    for (const auto& [mu, cu] : u.coeffs)
        for (const auto& [mv, cv] : v.coeffs) {
            if (mu & mv) continue; // repeated generator
            i64 term = mul_i(cu, cv);
            if (merge_sign(mu, mv) < 0) term = neg_i(term);
            r.set(mu | mv, add_i(r.coefficient(mu | mv), term));
        }
    return r;
}

ExtElement substitute(const IMat& b, const ExtElement& u) {
    if (b.rows != u.n || b.cols != u.n) throw DimensionMismatch();
    std::vector<ExtElement> image(static_cast<size_t>(u.n));
    for (int j = 0; j < u.n; ++j) {
        ExtElement img(u.n);
        for (int l = 0; l < u.n; ++l) img.set(std::uint64_t(1) << l, b(j, l));
        image[static_cast<size_t>(j)] = img;
    }
    ExtElement r(u.n);
    for (const auto& [mask, c] : u.coeffs) {
        ExtElement term = ExtElement::scalar(u.n, c);
        std::uint64_t rest = mask;
        while (rest) {
            int j = std::countr_zero(rest);
            rest &= rest - 1;
            term = wedge(term, image[static_cast<size_t>(j)]);
        }
        r = add(r, term);
    }
    return r;
}

std::vector<int> mask_indices(std::uint64_t mask) {
    std::vector<int> idx;
    while (mask) {
        int j = std::countr_zero(mask);
        mask &= mask - 1;
        idx.push_back(j + 1);
    }
    return idx;
}

} // namespace pmra
