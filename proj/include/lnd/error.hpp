#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lnd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownVariable : public Error {
public:
    explicit UnknownVariable(const std::string& name)
        : Error("unknown variable '" + name + "'"), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class InexactDivision : public Error {
public:
    InexactDivision() : Error("division is not exact") {}
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : Error(what + " at offset " + std::to_string(offset)), offset_(offset) {}
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class InvalidParameters : public Error {
public:
    using Error::Error;
};

class ParamsMismatch : public Error {
public:
    using Error::Error;
};

/// Term, candidate, or time cap exceeded. Distinct from "no result".
class ResourceLimit : public Error {
public:
    using Error::Error;
};

class HypothesisViolation : public Error {
public:
    using Error::Error;
};

/// A derivation does not annihilate a defining relation.
class IllDefinedDerivation : public Error {
public:
    IllDefinedDerivation(const std::string& relation, const std::string& image)
        : Error("derivation does not respect relation " + relation + ": image is " + image),
          relation_(relation), image_(image) {}
    const std::string& relation() const noexcept { return relation_; }
    const std::string& image() const noexcept { return image_; }

private:
    std::string relation_;
    std::string image_;
};

/// An internal consistency certificate failed. Always a bug.
class CertificateFailure : public Error {
public:
    using Error::Error;
};

}  // namespace lnd
