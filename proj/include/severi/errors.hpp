#pragma once

#include <stdexcept>
#include <string>

namespace severi {

// Base of every error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnboundSymbol : public Error { using Error::Error; };
class NonSquare : public Error { using Error::Error; };
class Singular : public Error { using Error::Error; };
class DomainError : public Error { using Error::Error; };
class WrongBasis : public Error { using Error::Error; };
class NotAdmissible : public Error { using Error::Error; };
class UnknownName : public Error { using Error::Error; };
class IoError : public Error { using Error::Error; };
class ParseError : public Error { using Error::Error; };
class ValidationError : public Error { using Error::Error; };

}  // namespace severi
