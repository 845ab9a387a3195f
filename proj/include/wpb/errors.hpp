#pragma once

#include <stdexcept>
#include <string>

namespace wpb {

// Base of every library error. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotAPrimePower : public Error {
public:
    explicit NotAPrimePower(unsigned q)
        : Error("not a prime power <= 256: " + std::to_string(q)), q_(q) {}
    unsigned q() const { return q_; }

private:
    unsigned q_;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("inverse of zero") {}
};

class LeeRequiresPrimeField : public Error {
public:
    explicit LeeRequiresPrimeField(unsigned q)
        : Error("Lee weight needs a prime field, got q = " + std::to_string(q)) {}
};

enum class WeightAxiom { length, zero, positivity, symmetry, triangle };

const char* to_string(WeightAxiom axiom);

class AxiomViolation : public Error {
public:
    AxiomViolation(WeightAxiom axiom, unsigned alpha, unsigned beta)
        : Error(std::string("weight axiom violated: ") + to_string(axiom) + " at (" +
                std::to_string(alpha) + "," + std::to_string(beta) + ")"),
          axiom_(axiom), alpha_(alpha), beta_(beta) {}
    WeightAxiom axiom() const { return axiom_; }
    unsigned alpha() const { return alpha_; }
    unsigned beta() const { return beta_; }

private:
    WeightAxiom axiom_;
    unsigned alpha_;
    unsigned beta_;
};

class CycleDetected : public Error {
public:
    CycleDetected(std::string cycle)
        : Error("cover relations contain a cycle: " + cycle), cycle_(std::move(cycle)) {}
    const std::string& cycle() const { return cycle_; }

private:
    std::string cycle_;
};

class NotAnIdeal : public Error {
public:
    NotAnIdeal() : Error("set is not downward closed") {}
};

class OutOfRange : public Error {
public:
    using Error::Error;
};

class LengthMismatch : public Error {
public:
    using Error::Error;
};

class SpaceTooLarge : public Error {
public:
    SpaceTooLarge(double size, double limit)
        : Error("enumeration of " + std::to_string(static_cast<unsigned long long>(size)) +
                " vectors exceeds the limit " +
                std::to_string(static_cast<unsigned long long>(limit))) {}
};

class TooFewWords : public Error {
public:
    TooFewWords() : Error("code needs at least two distinct words") {}
};

class NotLinear : public Error {
public:
    NotLinear() : Error("operation requires a linear code") {}
};

class NotAChain : public Error {
public:
    NotAChain() : Error("operation requires a chain poset") {}
};

class FieldMismatch : public Error {
public:
    FieldMismatch() : Error("codes live over different fields") {}
};

class WeightMismatch : public Error {
public:
    WeightMismatch() : Error("codes use different weight tables") {}
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& reason)
        : Error("parse error at line " + std::to_string(line) + ": " + reason), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

class ConsistencyError : public Error {
public:
    ConsistencyError(std::string field, const std::string& reason)
        : Error("inconsistent instance (" + field + "): " + reason), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

} // namespace wpb
