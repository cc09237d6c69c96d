#include "gwl/error.hpp"

namespace gwl {

const char* errc_name(errc code) {
  switch (code) {
    case errc::not_closed: return "NotClosed";
    case errc::no_identity: return "NoIdentity";
    case errc::missing_inverse: return "MissingInverse";
    case errc::not_associative: return "NotAssociative";
    case errc::parameter_out_of_range: return "ParameterOutOfRange";
    case errc::order_limit: return "OrderLimit";
    case errc::not_normal: return "NotNormal";
    case errc::not_semisimple: return "NotSemisimple";
    case errc::not_in_socle: return "NotInSocle";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::not_socle_iso: return "NotSocleIso";
    case errc::nontrivial_centralizer: return "NontrivialCentralizer";
    case errc::size_mismatch: return "SizeMismatch";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::malformed_certificate: return "MalformedCertificate";
    case errc::parse_error: return "ParseError";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

void raise(errc code, const std::string& detail) {
  throw error(code, std::string(errc_name(code)) + ": " + detail);
}

}  // namespace gwl
