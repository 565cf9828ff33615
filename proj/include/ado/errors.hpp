#pragma once

#include <stdexcept>
#include <string>

namespace ado {

// Base class of all library errors. kind() is the stable machine-readable
// name used by the CLI error objects and the exit-code mapping.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
    virtual const char* kind() const noexcept { return "Error"; }
};

// Malformed braid text, color list, or numeric literal.
class ParseError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "ParseError"; }
};

// Integer argument outside its admissible range (e.g. {n}! with n >= N).
class RangeError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "RangeError"; }
};

// Highest weight is atypical: lambda in Z with lambda + 1 not divisible by N.
class TypicalityError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "TypicalityError"; }
};

// Ambidexterity reference weight lies in (1/2)Z.
class GenericityError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "GenericityError"; }
};

// Morphism domain/codomain signatures do not line up.
class SignatureMismatch : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "SignatureMismatch"; }
};

// An endomorphism expected to be a scalar multiple of the identity is not.
class SimplicityError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "SimplicityError"; }
};

// Matrix inversion residual exceeded tolerance.
class SingularMatrix : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "SingularMatrix"; }
};

// A bracket factor in a denominator is numerically zero.
class PoleError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "PoleError"; }
};

// Per-cut values of F' differ beyond tolerance (would contradict cut
// independence, so it signals a bug or corrupted input).
class DisagreementError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "DisagreementError"; }
};

// Requested state space exceeds the practical size guard.
class ResourceError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "ResourceError"; }
};

}  // namespace ado
