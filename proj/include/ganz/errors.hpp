#ifndef GANZ_ERRORS_HPP
#define GANZ_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ganz {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct NegativeValuation : Error {
    NegativeValuation() : Error("residue of an element with negative valuation") {}
};

struct NotDefinedAt : Error {
    NotDefinedAt() : Error("function not defined at the given point") {}
    explicit NotDefinedAt(const std::string& what) : Error(what) {}
};

struct Indeterminate : Error {
    Indeterminate() : Error("0/0: representation does not decide definedness") {}
};

struct LineInDenominatorLocus : Error {
    LineInDenominatorLocus() : Error("denominator vanishes identically on the line") {}
};

struct DegenerateDirection : Error {
    DegenerateDirection() : Error("substitution line lies inside a zero locus; retry with another direction") {}
};

struct NonzeroValuation : Error {
    NonzeroValuation() : Error("residue requires valuation exactly zero") {}
};

struct DependentParities : Error {
    // indices of earlier forced elements whose parities XOR to the offending one
    std::vector<std::size_t> combination;
    explicit DependentParities(std::vector<std::size_t> combo)
        : Error("forced valuations have F2-dependent parities"), combination(std::move(combo)) {}
};

struct StructuralError : Error {
    using Error::Error;
};

struct SyntaxError : Error {
    std::size_t position;
    SyntaxError(const std::string& what, std::size_t pos)
        : Error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct IndexOutOfRange : Error {
    IndexOutOfRange() : Error("certificate subset index outside the constraint list") {}
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct IdenticallyMinusOne : Error {
    IdenticallyMinusOne() : Error("cone value is identically -1; certificate data error") {}
};

struct OrderUndecided : Error {
    OrderUndecided() : Error("residue order cannot decide the sign of a non-constant residue") {}
};

} // namespace ganz

#endif
