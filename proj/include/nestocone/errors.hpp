#pragma once

#include <stdexcept>
#include <string>

namespace nestocone {

/// Malformed input: bad files, out-of-range vertices, sets that are not tubes
/// or blocks. The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A family that fails the building-set axioms.
class ValidationError : public InputError {
public:
    explicit ValidationError(const std::string& what) : InputError(what) {}
};

class InvalidTubeError : public InputError {
public:
    explicit InvalidTubeError(const std::string& what) : InputError(what) {}
};

/// Well-formed input to which a construction does not apply. Exit code 1.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

class NotIntervalError : public DomainError {
public:
    explicit NotIntervalError(const std::string& what) : DomainError(what) {}
};

class NotSimplicialError : public DomainError {
public:
    explicit NotSimplicialError(const std::string& what) : DomainError(what) {}
};

class NotInteriorError : public DomainError {
public:
    explicit NotInteriorError(const std::string& what) : DomainError(what) {}
};

/// An internal invariant failed; always a bug.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace nestocone
