#pragma once

#include <stdexcept>
#include <string>

namespace bicay {

/// Base class for all errors thrown by this library.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input value (bad connection set, non-bijective image list, ...).
class validation_error : public error {
public:
  using error::error;
};

/// An operation was called outside its stated precondition.
class precondition_error : public error {
public:
  using error::error;
};

/// A configured size bound would be exceeded (group order, vertex count,
/// arithmetic overflow in a group order).
class resource_error : public error {
public:
  using error::error;
};

/// Text input could not be parsed; `offset` is the byte position.
class parse_error : public error {
public:
  parse_error(const std::string& what, std::size_t offset)
      : error(what + " (offset " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

/// A search ran out of budget before exhausting its space.
class inconclusive_error : public error {
public:
  using error::error;
};

/// A constructed witness failed re-verification; names the failing predicate.
class verification_error : public error {
public:
  using error::error;
};

}  // namespace bicay
