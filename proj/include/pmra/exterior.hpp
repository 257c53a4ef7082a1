#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "pmra/intmat.hpp"

namespace pmra {

/// Element of the integer exterior algebra on n generators e_1..e_n.
/// Monomials are stored as bitmasks (bit j-1 = generator e_j present);
/// zero coefficients are never stored.
struct ExtElement {
    int n = 0;
    std::map<std::uint64_t, i64> coeffs;

    ExtElement() = default;
    explicit ExtElement(int n_) : n(n_) {}

    static ExtElement scalar(int n, i64 c);
    /// e_index with 1-based index.
    static ExtElement generator(int n, int index);
    /// Monomial e_{i1}^...^e_{ik} from strictly increasing 1-based indices.
    static ExtElement monomial(int n, const std::vector<int>& indices, i64 c);

    bool operator==(const ExtElement& o) const { return n == o.n && coeffs == o.coeffs; }

    bool is_zero() const { return coeffs.empty(); }
    bool even() const;
    i64 coefficient(std::uint64_t mask) const;

    void set(std::uint64_t mask, i64 c); // drops zeros
};

ExtElement add(const ExtElement& u, const ExtElement& v);
ExtElement sub(const ExtElement& u, const ExtElement& v);
ExtElement scale(i64 c, const ExtElement& u);

/// Exterior product; graded-anticommutative, associative, exact.
ExtElement wedge(const ExtElement& u, const ExtElement& v);

/// Ring homomorphism induced by the substitution e_j -> sum_l b_{jl} e_l.
ExtElement substitute(const IMat& b, const ExtElement& u);

/// Indices (1-based, ascending) of a monomial mask.
std::vector<int> mask_indices(std::uint64_t mask);

} // namespace pmra
