#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace eo {

// Base for all domain errors raised by the toolkit.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    std::size_t line;
    ParseError(std::size_t line_, const std::string& what_)
        : Error("parse error at line " + std::to_string(line_) + ": " + what_),
          line(line_) {}
};

struct DuplicateValue : Error {
    std::uint64_t value;
    std::size_t first_pos;
    std::size_t second_pos;
    DuplicateValue(std::uint64_t v, std::size_t first, std::size_t second)
        : Error("duplicate value " + std::to_string(v) + " at positions " +
                std::to_string(first) + " and " + std::to_string(second)),
          value(v), first_pos(first), second_pos(second) {}
};

struct ValueCollision : Error {
    std::uint64_t value;
    explicit ValueCollision(std::uint64_t v)
        : Error("value " + std::to_string(v) + " present in both listings"),
          value(v) {}
};

struct SetMismatch : Error {
    SetMismatch() : Error("listings do not enumerate the same value set") {}
};

struct LengthMismatch : Error {
    LengthMismatch() : Error("listings have different lengths") {}
};

struct OutOfRange : Error {
    using Error::Error;
};

struct StepGap : Error {
    StepGap(std::size_t expected, std::size_t got)
        : Error("expected step " + std::to_string(expected) + ", got " +
                std::to_string(got)) {}
};

struct TooShort : Error {
    std::string name;
    TooShort(std::string name_, std::size_t length, std::size_t wanted)
        : Error("listing '" + name_ + "' has length " + std::to_string(length) +
                ", shorter than prefix " + std::to_string(wanted)),
          name(std::move(name_)) {}
};

struct InvalidProgram : Error {
    std::size_t address;
    InvalidProgram(std::size_t addr, const std::string& what_)
        : Error("invalid program at instruction " + std::to_string(addr) + ": " + what_),
          address(addr) {}
};

}  // namespace eo
