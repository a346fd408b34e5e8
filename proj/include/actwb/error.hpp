#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace actwb {

enum class Errc {
  malformed_table,
  not_associative,
  identity_law,
  unit_law,
  act_associativity,
  index_out_of_range,
  monoid_mismatch,
  source_mismatch,
  target_mismatch,
  shape_mismatch,
  not_mono,
  not_commutative,
  not_equivariant,
  inconsistent_constraints,
  base_not_subact,
  element_in_base,
  base_not_contained,
  not_a_subset,
  param_mismatch,
  tuple_length_mismatch,
  parse_error,
};

const char* errc_name(Errc c);

/// Thrown on contract violations; `detail()` carries the witnessing indices
/// named by the operation (e.g. the triple of a failed associativity check).
class WorkbenchError : public std::runtime_error {
 public:
  WorkbenchError(Errc code, const std::string& msg, std::vector<long> detail = {})
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
        code_(code),
        detail_(std::move(detail)) {}

  Errc code() const { return code_; }
  const std::vector<long>& detail() const { return detail_; }

 private:
  Errc code_;
  std::vector<long> detail_;
};

}  // namespace actwb
