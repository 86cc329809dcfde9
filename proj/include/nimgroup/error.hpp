#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nimgroup {

enum class ErrorCode {
  // group construction / validation
  BadParameter,
  NotPrime,
  NotPrimitiveRoot,
  BadAction,
  OrderCapExceeded,
  NotAssociative,
  NoIdentity,
  NotLatinSquare,
  MissingInverse,
  BadTableFormat,
  // spec text
  ParseError,
  // lattice / structure / oracle
  SubgroupBlowup,
  TrivialGroup,
  IllegalPosition,
  WrongGame,
  StateCapExceeded,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by table validation; carries the first (i, j, k) with (ij)k != i(jk).
class NotAssociativeError : public Error {
 public:
  NotAssociativeError(std::array<std::uint32_t, 3> witness, const std::string& what)
      : Error(ErrorCode::NotAssociative, what), witness_(witness) {}

  const std::array<std::uint32_t, 3>& witness() const noexcept { return witness_; }

 private:
  std::array<std::uint32_t, 3> witness_;
};

}  // namespace nimgroup
