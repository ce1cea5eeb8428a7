#ifndef YK_ERROR_HPP
#define YK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace yk {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (braid grammar, catalog files). Carries a position.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// A mathematical contract that should hold failed to hold.
class PropertyError : public Error {
public:
  using Error::Error;
};

}  // namespace yk

#endif
