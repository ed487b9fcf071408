#ifndef RSG_ERROR_HPP_
#define RSG_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rsg {

// Base of every error thrown by the library. The category maps onto the CLI
// exit-code taxonomy (see tools/rsg_main.cpp).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* category() const noexcept = 0;
};

// Malformed text input or unusable parameters (exit code 2).
class ParseError : public Error {
 public:
  using Error::Error;
  const char* category() const noexcept override { return "parse"; }
};

// A documented precondition or invariant does not hold (exit code 3).
class ContractError : public Error {
 public:
  using Error::Error;
  const char* category() const noexcept override { return "contract"; }
};

// An exhaustive search would exceed its configured budget (exit code 4).
// `partial_count` is how far the search got before giving up.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t partial_count)
      : Error(what), partial_count_(partial_count) {}
  const char* category() const noexcept override { return "budget"; }
  std::uint64_t partial_count() const noexcept { return partial_count_; }

 private:
  std::uint64_t partial_count_;
};

}  // namespace rsg

#endif  // RSG_ERROR_HPP_
