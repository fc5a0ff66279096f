#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ehs {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed files, out-of-range indices, self-loops, cycles.
class invalid_input : public error {
 public:
  using error::error;
};

// A documented precondition of an operation does not hold for its arguments.
class precondition_violation : public error {
 public:
  using error::error;
};

// An internal invariant failed; always a bug or a constant-bookkeeping error.
class invariant_violation : public error {
 public:
  using error::error;
};

class retry_cap_exhausted : public error {
 public:
  using error::error;
};

// Case-1 grouping of the main algorithm produced fewer than two blocks.
class case1_underflow : public error {
 public:
  using error::error;
};

// The dense branch needs a poset witness that is not available.
class oracle_required : public error {
 public:
  using error::error;
};

class separator_failure : public error {
 public:
  using error::error;
};

// A block oracle returned an invalid certificate during the cotree recursion.
// `repro` holds the offending sub-instance and certificate as JSON.
class oracle_contract_violation : public error {
 public:
  oracle_contract_violation(const std::string& what, std::string repro)
      : error(what), repro_(std::move(repro)) {}
  const std::string& repro() const noexcept { return repro_; }

 private:
  std::string repro_;
};

}  // namespace ehs
