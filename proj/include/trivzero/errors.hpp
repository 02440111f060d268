#pragma once

#include <stdexcept>
#include <string>

namespace trivzero {

// Base for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& m) : std::runtime_error(m) {}
};

// bad arguments: wrong modulus, out-of-range index, q not dividing Np, ...
struct UsageError : Error {
    explicit UsageError(const std::string& m) : Error(m) {}
};

// a required unit was not a unit (division by p-divisible value, a ≡ 0 mod p, ...)
struct UnitRequiredError : Error {
    explicit UnitRequiredError(const std::string& m) : Error(m) {}
};

// requested precision cannot be met; carries what *is* achievable
struct PrecisionError : Error {
    long achievable;
    PrecisionError(const std::string& m, long ach) : Error(m), achievable(ach) {}
};

// precision/degree budget of a whole computation is infeasible
struct BudgetError : Error {
    explicit BudgetError(const std::string& m) : Error(m) {}
};

// a mathematical hypothesis of the formula is violated (parity, primitivity,
// exceptionality, p | φ(N), ...)
struct HypothesisError : Error {
    explicit HypothesisError(const std::string& m) : Error(m) {}
};

// evaluation at a pole (t = 1 style degeneracies)
struct PoleError : Error {
    explicit PoleError(const std::string& m) : Error(m) {}
};

// a value is zero to working precision, so a threshold/valuation is undetermined
struct UndeterminedError : Error {
    explicit UndeterminedError(const std::string& m) : Error(m) {}
};

} // namespace trivzero
