#pragma once

#include <stdexcept>
#include <string>

namespace graphonkit {

enum class errc {
  asymmetric_values,
  nonpositive_weight,
  ambient_too_small,
  invalid_p,
  too_many_blocks,
  negative_value,
  not_symmetric,
  bad_density,
  marginal_mismatch,
  mode_unsupported,
  negative_graphon,
  nonpositive_u,
  value_out_of_range,
  infinite_support,
  self_loop,
  duplicate_edge,
  n_too_large,
  parse_error,
};

inline const char* to_string(errc e) {
  switch (e) {
    case errc::asymmetric_values: return "ASYMMETRIC_VALUES";
    case errc::nonpositive_weight: return "NONPOSITIVE_WEIGHT";
    case errc::ambient_too_small: return "AMBIENT_TOO_SMALL";
    case errc::invalid_p: return "INVALID_P";
    case errc::too_many_blocks: return "TOO_MANY_BLOCKS";
    case errc::negative_value: return "NEGATIVE_VALUE";
    case errc::not_symmetric: return "NOT_SYMMETRIC";
    case errc::bad_density: return "BAD_DENSITY";
    case errc::marginal_mismatch: return "MARGINAL_MISMATCH";
    case errc::mode_unsupported: return "MODE_UNSUPPORTED";
    case errc::negative_graphon: return "NEGATIVE_GRAPHON";
    case errc::nonpositive_u: return "NONPOSITIVE_U";
    case errc::value_out_of_range: return "VALUE_OUT_OF_RANGE";
    case errc::infinite_support: return "INFINITE_SUPPORT";
    case errc::self_loop: return "SELF_LOOP";
    case errc::duplicate_edge: return "DUPLICATE_EDGE";
    case errc::n_too_large: return "N_TOO_LARGE";
    case errc::parse_error: return "PARSE_ERROR";
  }
  return "UNKNOWN";
}

class graphon_error : public std::runtime_error {
 public:
  graphon_error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace graphonkit
