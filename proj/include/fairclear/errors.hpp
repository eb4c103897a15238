#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fairclear {

// Byte range into the original input text, for diagnostics.
struct SourceSpan {
    std::size_t start = 0;
    std::size_t end = 0;
};

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
    ParseError(SourceSpan sp, const std::string& msg) : Error(msg), span(sp) {}
    SourceSpan span;
};

struct DivPresent : Error {
    using Error::Error;
};
struct NotPrenex : Error {
    using Error::Error;
};
struct NotNormalized : Error {
    using Error::Error;
};
struct NotPevalSafe : Error {
    using Error::Error;
};
struct NotStandardizedApart : Error {
    using Error::Error;
};
struct NotPositivePrenex : Error {
    using Error::Error;
};
struct PropVarPresent : Error {
    using Error::Error;
};
struct LengthMismatch : Error {
    using Error::Error;
};
struct OrderIncomplete : Error {
    using Error::Error;
};
struct LevelOutOfRange : Error {
    using Error::Error;
};
struct BlockMismatch : Error {
    using Error::Error;
};
struct NotClosed : Error {
    using Error::Error;
};
struct RealVarsPresent : Error {
    using Error::Error;
};
struct ArityMismatch : Error {
    using Error::Error;
};

}  // namespace fairclear
