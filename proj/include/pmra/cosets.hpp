#pragma once

#include <vector>

#include "pmra/dilation.hpp"

namespace pmra {

/// Ordered coset representatives of Z^n / A^i(Z^n).
///
/// reps[l] = sum_j A^j(base[b_j]) where l = sum_j b_j d^j in base d, so the
/// table is prefix-consistent: the first d^(i-1) entries equal the level-(i-1)
/// table. reps[0] = 0 always.
struct CosetTable {
    DilationSpec spec;
    int level = 0;
    std::vector<IVec> base; // level-1 representatives, base[0] = 0
    std::vector<IVec> reps; // d^level representatives
};

inline constexpr i64 kDefaultLevelCap = i64(1) << 20;

/// Canonical level-1 representatives beta_0..beta_{d-1}, beta_0 = 0.
/// Deterministic: scan the box [0,N)^n, first coordinate varying fastest,
/// keeping the first point of each residue class; N starts at the maximum
/// column sum of |entries| and doubles if the box missed a class.
std::vector<IVec> coset_base(const DilationSpec& spec);

/// Representatives of Z^n / A^level(Z^n) by d-adic expansion.
CosetTable coset_table(const DilationSpec& spec, int level, i64 level_cap = kDefaultLevelCap);

/// The unique l with w congruent to reps[l] mod A^level(Z^n).
i64 reduce_mod(const DilationSpec& spec, int level, const IVec& w, i64 level_cap = kDefaultLevelCap);

/// Exact congruence test x = y mod A^level(Z^n).
bool congruent_mod(const DilationSpec& spec, int level, const IVec& x, const IVec& y);

} // namespace pmra
