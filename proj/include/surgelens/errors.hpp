#pragma once

#include <stdexcept>
#include <string>

namespace surgelens {

// Common base so callers can catch all domain errors at once.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// exact_div: no exact quotient exists.
struct NotDivisible : Error {
    explicit NotDivisible(const std::string& msg = "polynomial division is not exact")
        : Error(msg) {}
};

// duality_normalize: no unit multiple satisfies the duality relation.
struct NotSymmetric : Error {
    explicit NotSymmetric(const std::string& msg = "no associate satisfies the duality symmetry")
        : Error(msg) {}
};

// normalize_fg: input does not admit the (t1..tn-1)*prod(ti-1)*f + (t-1)*g split.
struct NotDecomposable : Error {
    explicit NotDecomposable(const std::string& msg = "polynomial does not admit the f/g split")
        : Error(msg) {}
};

// Surgery with non-cyclic (or too small) first homology.
struct NotCyclic : Error {
    explicit NotCyclic(const std::string& msg = "first homology is not cyclic of order >= 2")
        : Error(msg) {}
};

// A divisor argument that does not divide the relevant order.
struct BadDivisor : Error {
    explicit BadDivisor(const std::string& msg = "divisor does not divide the ring order")
        : Error(msg) {}
};

// Wrong component count / arity for a link-family constructor.
struct BadArity : Error {
    explicit BadArity(const std::string& msg = "bad arity for link family") : Error(msg) {}
};

}  // namespace surgelens
