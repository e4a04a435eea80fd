#pragma once

#include <stdexcept>
#include <string>

namespace solv3 {

// Exit-code contract shared with the CLI: 0 ok, 1 selftest fail,
// 2 parse error, 3 semantic error, 4 numeric failure.
enum class ErrorKind { Parse = 2, Semantic = 3, Numeric = 4 };

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

class ParseError : public Error {
  public:
    explicit ParseError(const std::string& what) : Error(ErrorKind::Parse, what) {}
};

class SemanticError : public Error {
  public:
    explicit SemanticError(const std::string& what) : Error(ErrorKind::Semantic, what) {}
};

class NumericError : public Error {
  public:
    explicit NumericError(const std::string& what) : Error(ErrorKind::Numeric, what) {}
};

}  // namespace solv3
