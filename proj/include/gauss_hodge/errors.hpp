#pragma once

#include <stdexcept>
#include <string>

namespace gauss_hodge {

// A degree-raising operation would leave the configured capacity.
class DegreeOverflow : public std::runtime_error {
 public:
  DegreeOverflow(int required, int capacity)
      : std::runtime_error("degree overflow: result needs total degree " +
                           std::to_string(required) + " but capacity is " +
                           std::to_string(capacity)),
        required_(required),
        capacity_(capacity) {}

  int required_capacity() const { return required_; }
  int capacity() const { return capacity_; }

 private:
  int required_;
  int capacity_;
};

// An input violates a solver precondition (typically closedness).
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& what, std::string residual)
      : std::runtime_error(what + " (residual " + residual + ")"),
        residual_(std::move(residual)) {}

  const std::string& residual() const { return residual_; }

 private:
  std::string residual_;
};

// An iterative block solve did not reach its tolerance.
class NumericalFailure : public std::runtime_error {
 public:
  NumericalFailure(int block_degree, const std::string& what)
      : std::runtime_error(what + " (block degree " +
                           std::to_string(block_degree) + ")"),
        block_degree_(block_degree) {}

  int block_degree() const { return block_degree_; }

 private:
  int block_degree_;
};

// A stage bound or structural invariant that must always hold did not.
class InvariantViolation : public std::logic_error {
 public:
  InvariantViolation(std::string stage, const std::string& detail)
      : std::logic_error("invariant violated at stage '" + stage + "': " + detail),
        stage_(std::move(stage)) {}

  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

}  // namespace gauss_hodge
