#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fibrous {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Term constructor invariant violations (empty sum, zero multiple, ...).
class TermError : public Error {
public:
    using Error::Error;
};

/// 64-bit integer arithmetic left the representable range. Never wraps.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// Notation diagnostics carry the byte span of the offending input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t begin, std::size_t end)
        : Error(what), begin_(begin), end_(end) {}

    std::size_t begin() const { return begin_; }
    std::size_t end() const { return end_; }

private:
    std::size_t begin_;
    std::size_t end_;
};

/// Catalog resolution failures: unknown name, arity mismatch, parameter
/// outside the entry's declared domain.
class CatalogError : public Error {
public:
    using Error::Error;
};

/// Catalog expansion recursed past the configured bound. Guards against an
/// entry whose recursion never reaches a base case.
class ExpansionDepthError : public Error {
public:
    using Error::Error;
};

/// Simplicial complex or CW skeleton validation failures.
class ComplexError : public Error {
public:
    using Error::Error;
};

/// A JSON input did not match the documented file schema.
class SchemaError : public Error {
public:
    using Error::Error;
};

/// File could not be read.
class IoError : public Error {
public:
    using Error::Error;
};

} // namespace fibrous
