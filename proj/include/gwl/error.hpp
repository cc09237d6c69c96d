#pragma once

#include <stdexcept>
#include <string>

namespace gwl {

enum class errc {
  not_closed,
  no_identity,
  missing_inverse,
  not_associative,
  parameter_out_of_range,
  order_limit,
  not_normal,
  not_semisimple,
  not_in_socle,
  length_mismatch,
  not_socle_iso,
  nontrivial_centralizer,
  size_mismatch,
  budget_exceeded,
  malformed_certificate,
  parse_error,
  internal,
};

const char* errc_name(errc code);

/// All failures thrown by the library carry one of the codes above plus a
/// human-readable detail string (e.g. the first violating triple).
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] void raise(errc code, const std::string& detail);

}  // namespace gwl
