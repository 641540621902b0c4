#ifndef QFROB_ERRORS_HPP
#define QFROB_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qfrob {

// Base class for every failure the library can signal. The CLI maps these
// onto exit codes, so each condition named in the interface gets its own type.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ShapeMismatch : Error {
    using Error::Error;
};

struct NotNormal : Error {
    using Error::Error;
};

struct SyntaxError : Error {
    std::size_t offset;
    SyntaxError(const std::string& what, std::size_t off)
        : Error(what + " (at byte " + std::to_string(off) + ")"), offset(off) {}
};

struct TypeMismatch : Error {
    using Error::Error;
};

struct UnknownGenerator : Error {
    using Error::Error;
};

struct SignatureMismatch : Error {
    using Error::Error;
};

struct NotFrobenius : Error {
    using Error::Error;
};

struct InvalidInvolution : Error {
    using Error::Error;
};

struct InvalidAlgebra : Error {
    using Error::Error;
};

struct NotCStar : Error {
    double min_eigenvalue;
    NotCStar(const std::string& what, double min_eig)
        : Error(what + " (min eigenvalue " + std::to_string(min_eig) + ")"),
          min_eigenvalue(min_eig) {}
};

struct NonpositiveScale : Error {
    using Error::Error;
};

struct DegenerateSplit : Error {
    using Error::Error;
};

struct NotCommutative : Error {
    using Error::Error;
};

struct NotHomomorphism : Error {
    using Error::Error;
};

struct NotPermutation : Error {
    using Error::Error;
};

}  // namespace qfrob

#endif
