#include "pmra/cosets.hpp"

#include <map>

#include "pmra/errors.hpp"

namespace pmra {

namespace {

// Canonical residue key: adj(A)*x mod |det A| componentwise. x = y mod A(Z^n)
// iff adj(A)(x-y) = 0 mod det A, so the key identifies the class exactly.
IVec residue_key(const IMat& adj, i64 absdet, const IVec& x) {
    IVec k = mul(adj, x);
    for (auto& c : k) c = mod_i(c, absdet);
    return k;
}

i64 checked_level_count(const DilationSpec& spec, int level, i64 level_cap) {
    if (level < 0) throw std::invalid_argument("level must be >= 0");
    i64 count = 1;
    for (int j = 0; j < level; ++j) {
        i64 next;
        if (__builtin_mul_overflow(count, spec.absdet, &next) || next > level_cap) throw LevelOverflow();
        count = next;
    }
    return count;
}

} // namespace

std::vector<IVec> coset_base(const DilationSpec& spec) {
    const IMat& A = spec.entries;
    const IMat adj = adjugate(A);
    const i64 d = spec.absdet;
    i64 N = 0;
    for (int c = 0; c < spec.n; ++c) {
        i64 col = 0;
        for (int r = 0; r < spec.n; ++r) col = add_i(col, abs_i(A(r, c)));
        if (col > N) N = col;
    }
    if (N < 2) N = 2;
    while (true) {
        std::map<IVec, IVec> first_rep; // residue key -> first point scanned
        std::vector<IVec> reps;
        IVec x(static_cast<size_t>(spec.n), 0);
        bool done = false;
        while (!done) {
            IVec key = residue_key(adj, d, x);
            if (first_rep.emplace(key, x).second) {
                reps.push_back(x);
                if (static_cast<i64>(reps.size()) == d) break;
            }
            // advance: first coordinate varies fastest
            done = true;
            for (int j = 0; j < spec.n; ++j) {
                if (++x[static_cast<size_t>(j)] < N) {
                    done = false;
                    break;
                }
                x[static_cast<size_t>(j)] = 0;
            }
        }
        if (static_cast<i64>(reps.size()) == d) return reps;
        N = mul_i(N, 2); // cannot happen for valid specs, but guarded
    }
}

CosetTable coset_table(const DilationSpec& spec, int level, i64 level_cap) {
    checked_level_count(spec, level, level_cap);
    CosetTable t;
    t.spec = spec;
    t.level = level;
    t.base = coset_base(spec);
    t.reps = {IVec(static_cast<size_t>(spec.n), 0)};
    IMat apow = IMat::identity(spec.n); // A^j for the digit being appended
    for (int j = 0; j < level; ++j) {
        std::vector<IVec> next;
        next.reserve(t.reps.size() * t.base.size());
        for (const IVec& beta : t.base) {
            IVec shift = mul(apow, beta);
            for (const IVec& v : t.reps) next.push_back(add(v, shift));
        }
        t.reps = std::move(next);
        apow = mul(apow, spec.entries);
    }
    return t;
}

i64 reduce_mod(const DilationSpec& spec, int level, const IVec& w, i64 level_cap) {
    checked_level_count(spec, level, level_cap);
    if (static_cast<int>(w.size()) != spec.n) throw DimensionMismatch();
    const IMat adj = adjugate(spec.entries);
    const i64 det_a = spec.det_a;
    const std::vector<IVec> base = coset_base(spec);
    std::map<IVec, i64> digit_of;
    for (size_t b = 0; b < base.size(); ++b)
        digit_of[residue_key(adj, spec.absdet, base[b])] = static_cast<i64>(b);
    IVec v = w;
    i64 index = 0;
    i64 place = 1;
    for (int j = 0; j < level; ++j) {
        i64 b = digit_of.at(residue_key(adj, spec.absdet, v));
        index = add_i(index, mul_i(b, place));
        place = mul_i(place, spec.absdet);
        auto next = solve_integer(adj, det_a, sub(v, base[static_cast<size_t>(b)]));
        if (!next) throw std::logic_error("digit peeling failed"); // unreachable: v = base[b] mod A
        v = *next;
    }
    return index;
}

bool congruent_mod(const DilationSpec& spec, int level, const IVec& x, const IVec& y) {
    if (static_cast<int>(x.size()) != spec.n || static_cast<int>(y.size()) != spec.n) throw DimensionMismatch();
    if (level == 0) return true;
    IMat m = mat_pow(spec.entries, level);
    IMat adj = adjugate(m);
    i64 dm = det(m);
    return divisible(mul(adj, sub(x, y)), dm);
}

} // namespace pmra
