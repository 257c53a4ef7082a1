#pragma once

#include <optional>

#include "pmra/dilation.hpp"
#include "pmra/exterior.hpp"

namespace pmra {

/// K0 class of a projective C(T^n)-module: an even-degree element of the
/// integer exterior algebra. The degree-0 coefficient is the rank.
struct KClass {
    int n = 0;
    ExtElement elem;

    KClass() = default;
    KClass(int n_, ExtElement e) : n(n_), elem(std::move(e)) {
        if (!elem.even()) throw std::invalid_argument("KClass needs even degrees only");
    }

    bool operator==(const KClass& o) const { return n == o.n && elem == o.elem; }
    i64 rank() const { return elem.coefficient(0); }
};

/// X(q, a_1..a_{n-1}) twisted module, optionally precomposed with a
/// unimodular B (the module {h o B : h in X(q, a)}).
struct ModuleDescriptor {
    int n = 0;
    i64 q = 1;
    IVec twists;                 // length n-1
    std::optional<IMat> conjugator; // B with det +-1

    void validate() const;
};

/// Chern-character class: q - sum_j a_j e_j^e_n, with the generator
/// substitution e_j -> sum_l b_{jl} e_l applied when B is present.
KClass class_of_module(const ModuleDescriptor& m);

/// Coefficientwise sum: the class of a direct sum of modules.
KClass direct_sum(const KClass& c1, const KClass& c2);

/// n=2 unimodular action: fixes rank, multiplies the e1^e2 coefficient by det.
KClass gl2_action(const IMat& a, const KClass& c);

/// General unimodular substitution action on classes.
KClass gl_action(const IMat& b, const KClass& c);

/// Descriptor of D(V0) for a diagonal dilation: rank scales by |det A|; the
/// single twist a_k becomes (prod_{j not in {k,n}} |d_j|) * sign(d_k d_n) * a_k.
/// Multi-twist descriptors are outside the theorem's hypothesis.
ModuleDescriptor dilate_class(const DilationSpec& spec, const ModuleDescriptor& m);

/// V_i: dilate_class iterated i times.
ModuleDescriptor pmra_level_class(const DilationSpec& spec, const ModuleDescriptor& m, int i);

/// W_i as the formal difference class(V_{i+1}) - class(V_i). Equality of
/// classes certifies stable isomorphism; cancellation holds only for n <= 4.
struct WaveletClass {
    KClass diff;
    bool cancellation_valid = false;
};

WaveletClass wavelet_class(const DilationSpec& spec, const ModuleDescriptor& m, int i);

} // namespace pmra
