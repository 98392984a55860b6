#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace geodet {

// Error codes for every contract violation the library reports.
enum class errc {
  length_mismatch,
  missing_outcome,
  empty_input,
  degenerate_range,
  bad_l,
  unsorted_breaks,
  zero_variance,
  bad_perm_count,
  bad_degrees_of_freedom,
  out_of_range,
  out_of_range_coordinate,
  no_stations,
  mixed_months,
  positive_exceeds_tested,
  empty_region,
  too_few_observations,
  bad_spec,
  schema_error,
  config_error,
  io_error,
};

std::string_view errc_name(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace geodet
