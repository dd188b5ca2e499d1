#include "clustagree/error.hpp"

namespace clustagree {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::empty_clustering: return "empty_clustering";
    case Errc::empty_cluster: return "empty_cluster";
    case Errc::negative_weight: return "negative_weight";
    case Errc::duplicate_entry: return "duplicate_entry";
    case Errc::empty_graph: return "empty_graph";
    case Errc::invalid_edge: return "invalid_edge";
    case Errc::duplicate_edge: return "duplicate_edge";
    case Errc::universe_mismatch: return "universe_mismatch";
    case Errc::missing_graph: return "missing_graph";
    case Errc::not_disjoint: return "not_disjoint";
    case Errc::not_crisp: return "not_crisp";
    case Errc::non_integer_table: return "non_integer_table";
    case Errc::negative_cell: return "negative_cell";
    case Errc::cap_exceeded: return "cap_exceeded";
    case Errc::too_large: return "too_large";
    case Errc::requires_overlapping_measure: return "requires_overlapping_measure";
    case Errc::parse_error: return "parse_error";
    case Errc::io_error: return "io_error";
    case Errc::too_few_points: return "too_few_points";
    case Errc::degenerate_precision_recall: return "degenerate_precision_recall";
    case Errc::degenerate_entropy: return "degenerate_entropy";
    case Errc::zero_denominator: return "zero_denominator";
    case Errc::zero_total: return "zero_total";
    case Errc::zero_nf: return "zero_nf";
    case Errc::zero_norm: return "zero_norm";
  }
  return "unknown";
}

bool is_degenerate(Errc code) noexcept {
  switch (code) {
    case Errc::too_few_points:
    case Errc::degenerate_precision_recall:
    case Errc::degenerate_entropy:
    case Errc::zero_denominator:
    case Errc::zero_total:
    case Errc::zero_nf:
    case Errc::zero_norm:
      return true;
    default:
      return false;
  }
}

}  // namespace clustagree
