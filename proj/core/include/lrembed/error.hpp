#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lrembed {

/// Failure categories. Each one maps to a distinct diagnostic in the CLI.
enum class Errc {
  malformed_partition,
  not_increasing,
  not_horizontal_strip,
  not_lr_sequence,
  weight_mismatch,
  out_of_range,
  not_semisimple,
  not_p2_bounded,
  invalid_summand,
  prime_mismatch,
  not_prime,
  bound_exceeded,
  precondition_failed,
  parse_error,
  internal,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace lrembed
