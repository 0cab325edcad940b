#include "lrembed/error.hpp"

namespace lrembed {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::malformed_partition: return "malformed partition";
    case Errc::not_increasing: return "sequence is not increasing";
    case Errc::not_horizontal_strip: return "not a horizontal strip";
    case Errc::not_lr_sequence: return "not an LR sequence";
    case Errc::weight_mismatch: return "weight mismatch";
    case Errc::out_of_range: return "value out of range";
    case Errc::not_semisimple: return "submodule is not semisimple";
    case Errc::not_p2_bounded: return "submodule is not p^2-bounded";
    case Errc::invalid_summand: return "invalid summand";
    case Errc::prime_mismatch: return "prime mismatch";
    case Errc::not_prime: return "not a prime";
    case Errc::bound_exceeded: return "size bound exceeded";
    case Errc::precondition_failed: return "precondition failed";
    case Errc::parse_error: return "parse error";
    case Errc::internal: return "internal error";
  }
  return "unknown error";
}

}  // namespace lrembed
