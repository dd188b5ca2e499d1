#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace clustagree {

enum class Errc {
  invalid_argument,
  empty_clustering,
  empty_cluster,
  negative_weight,
  duplicate_entry,
  empty_graph,
  invalid_edge,
  duplicate_edge,
  universe_mismatch,
  missing_graph,
  not_disjoint,
  not_crisp,
  non_integer_table,
  negative_cell,
  cap_exceeded,
  too_large,
  requires_overlapping_measure,
  parse_error,
  io_error,
  // Degenerate-measure family: the inputs are valid but the measure is undefined.
  too_few_points,
  degenerate_precision_recall,
  degenerate_entropy,
  zero_denominator,
  zero_total,
  zero_nf,
  zero_norm,
};

std::string_view errc_name(Errc code) noexcept;

/// True for errors raised because a measure is undefined on otherwise valid input.
bool is_degenerate(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace clustagree
