#pragma once

#include <stdexcept>
#include <string>

namespace asym {

/// Malformed or inconsistent input (dimension mismatch, bad file, bad gauge).
class InputError : public std::runtime_error
{
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A polyhedral gauge that fails one of the asymmetric norm axioms.
class AxiomError : public InputError
{
public:
    enum class Axiom { nonnegativity, separation };

    AxiomError(Axiom axiom, const std::string& what) : InputError(what), axiom_(axiom) {}

    Axiom axiom() const noexcept { return axiom_; }

private:
    Axiom axiom_;
};

/// Vertex enumeration requested beyond the configured size cap.
class CapacityError : public std::runtime_error
{
public:
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// The mathematical hypotheses of an operation are not met by its arguments.
class PreconditionError : public std::runtime_error
{
public:
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// A self-check failed. Always a bug in this library, never a user error.
class InvariantViolation : public std::logic_error
{
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

} // namespace asym
