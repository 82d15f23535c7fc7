#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gmmrans {

/// A symbol handed to an encoder lies outside the coding alphabet.
/// Encoders refuse such symbols instead of clamping them.
class SymbolOutOfAlphabet : public std::runtime_error {
 public:
  SymbolOutOfAlphabet(std::size_t index, long long value)
      : std::runtime_error("symbol out of alphabet at index " +
                           std::to_string(index) + " (value " +
                           std::to_string(value) + ")"),
        index_(index),
        value_(value) {}

  std::size_t index() const noexcept { return index_; }
  long long value() const noexcept { return value_; }

 private:
  std::size_t index_;
  long long value_;
};

/// The byte stream ended before all declared symbols could be decoded,
/// or its trailing state does not match a well-formed encoding.
class TruncatedStream : public std::runtime_error {
 public:
  explicit TruncatedStream(const std::string& what)
      : std::runtime_error(what) {}
};

/// Bad magic, version, or inconsistent header fields.
class HeaderMismatch : public std::runtime_error {
 public:
  explicit HeaderMismatch(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace gmmrans
