#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kparadigm {

/// Base class of every failure raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    /// Short machine-readable kind, e.g. "NonHangulInput".
    virtual const char* kind() const noexcept = 0;
};

class NonHangulInput : public Error {
public:
    explicit NonHangulInput(std::size_t position)
        : Error("non-Hangul character at position " + std::to_string(position)), position_(position) {}
    const char* kind() const noexcept override { return "NonHangulInput"; }
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class Uncomposable : public Error {
public:
    explicit Uncomposable(std::size_t position)
        : Error("letter sequence is not composable at position " + std::to_string(position)),
          position_(position) {}
    const char* kind() const noexcept override { return "Uncomposable"; }
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class MalformedRule : public Error {
public:
    MalformedRule(std::string text, std::string reason)
        : Error("malformed rule \"" + text + "\": " + reason), text_(std::move(text)),
          reason_(std::move(reason)) {}
    const char* kind() const noexcept override { return "MalformedRule"; }
    const std::string& text() const noexcept { return text_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::string text_;
    std::string reason_;
};

class IndexOutOfBounds : public Error {
public:
    IndexOutOfBounds(std::string which, long index, std::size_t length)
        : Error(which + " slice index " + std::to_string(index) + " exceeds length " +
                std::to_string(length)),
          which_(std::move(which)), index_(index), length_(length) {}
    const char* kind() const noexcept override { return "IndexOutOfBounds"; }
    const std::string& which() const noexcept { return which_; }
    long index() const noexcept { return index_; }
    std::size_t length() const noexcept { return length_; }

private:
    std::string which_;
    long index_;
    std::size_t length_;
};

class ParseError : public Error {
public:
    ParseError(std::string file, std::size_t line, std::string reason)
        : Error(file + ":" + std::to_string(line) + ": " + reason), file_(std::move(file)),
          line_(line), reason_(std::move(reason)) {}
    const char* kind() const noexcept override { return "ParseError"; }
    const std::string& file() const noexcept { return file_; }
    std::size_t line() const noexcept { return line_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::string file_;
    std::size_t line_;
    std::string reason_;
};

class RangeError : public Error {
public:
    RangeError(std::string what, long value)
        : Error(what + " " + std::to_string(value) + " is out of range"), value_(value) {}
    const char* kind() const noexcept override { return "RangeError"; }
    long value() const noexcept { return value_; }

private:
    long value_;
};

class DuplicateVerb : public Error {
public:
    explicit DuplicateVerb(std::string surface)
        : Error("duplicate verb \"" + surface + "\""), surface_(std::move(surface)) {}
    const char* kind() const noexcept override { return "DuplicateVerb"; }
    const std::string& surface() const noexcept { return surface_; }

private:
    std::string surface_;
};

class NotFound : public Error {
public:
    explicit NotFound(std::string what) : Error("Not Found: " + what), what_(std::move(what)) {}
    const char* kind() const noexcept override { return "NotFound"; }
    const std::string& what_item() const noexcept { return what_; }

private:
    std::string what_;
};

}  // namespace kparadigm
