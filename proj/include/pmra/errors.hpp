#pragma once

#include <stdexcept>
#include <string>

namespace pmra {

/// Base class for all library errors. Input validation failures derive from
/// this; plain std::invalid_argument is reserved for API misuse (null
/// sections, negative counts, and the like).
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct OverflowError : Error {
    explicit OverflowError(const std::string& msg = "integer overflow") : Error(msg) {}
};

struct SingularMatrix : Error {
    explicit SingularMatrix(const std::string& msg = "matrix is singular") : Error(msg) {}
};

struct NotExpanding : Error {
    explicit NotExpanding(const std::string& msg = "diagonal entry with |d_j| <= 1") : Error(msg) {}
};

struct NotUnimodular : Error {
    explicit NotUnimodular(const std::string& msg = "matrix determinant is not +-1") : Error(msg) {}
};

struct NonIntegerConjugate : Error {
    explicit NonIntegerConjugate(const std::string& msg = "conjugated matrix is not integral") : Error(msg) {}
};

/// Square integer matrix that is neither diagonal nor accompanied by a
/// conjugator that diagonalizes it.
struct UnsupportedForm : Error {
    explicit UnsupportedForm(const std::string& msg = "unsupported dilation form") : Error(msg) {}
};

struct NotCoprime : Error {
    explicit NotCoprime(const std::string& msg = "gcd of the triple is not 1") : Error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg = "operands have different dimension") : Error(msg) {}
};

struct LevelOverflow : Error {
    explicit LevelOverflow(const std::string& msg = "d^level exceeds the configured cap") : Error(msg) {}
};

struct NotOrthonormal : Error {
    explicit NotOrthonormal(const std::string& msg = "rows are not orthonormal") : Error(msg) {}
};

struct NonSummableDecay : Error {
    explicit NonSummableDecay(const std::string& msg = "decay models do not give a summable lattice tail") : Error(msg) {}
};

struct QuasiPeriodMismatch : Error {
    explicit QuasiPeriodMismatch(const std::string& msg = "sections carry different quasi-period data") : Error(msg) {}
};

struct UnsupportedTwistPattern : Error {
    explicit UnsupportedTwistPattern(const std::string& msg = "descriptor has more than one nonzero twist") : Error(msg) {}
};

struct DepthZero : Error {
    explicit DepthZero(const std::string& msg = "truncated product needs depth >= 1") : Error(msg) {}
};

} // namespace pmra
