#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace unimodal {

enum class ErrorKind {
  order_mismatch,
  not_invertible,
  singular_pochhammer,
  out_of_range,
  lattice_mismatch,
  size_limit,
  divergent_spec,
  unsupported_specialization,
  theta_zero,
  unknown_identity,
  domain,
  uncertified_factorization,
  uncleared_denominator,
  bailey_relation,
  unknown_series,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` tells callers which
/// contract was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace unimodal
