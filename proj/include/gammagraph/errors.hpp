#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gammagraph {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// An argument is outside the operation's domain (bad index, bad parameter).
class ArgumentError : public Error
{
public:
    using Error::Error;
};

/// A structural precondition on the input does not hold.
class PreconditionError : public Error
{
public:
    using Error::Error;
};

/// The input is larger than the operation supports.
class UnsupportedSize : public Error
{
public:
    using Error::Error;
};

class ParseError : public Error
{
public:
    ParseError(std::size_t offset, const std::string & what) :
        Error("parse error at byte " + std::to_string(offset) + ": " + what),
        _offset(offset)
    {
    }

    auto offset() const -> std::size_t { return _offset; }

private:
    std::size_t _offset;
};

/// A configurable work limit was hit before the computation finished.
class ResourceError : public Error
{
public:
    ResourceError(std::uint64_t work_done, const std::string & what) :
        Error(what + " (work examined: " + std::to_string(work_done) + ")"),
        _work_done(work_done)
    {
    }

    auto work_done() const -> std::uint64_t { return _work_done; }

private:
    std::uint64_t _work_done;
};

} // namespace gammagraph
