#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clustagree/classic.hpp"
#include "clustagree/comembership.hpp"
#include "clustagree/error.hpp"
#include "clustagree/generalized.hpp"
#include "clustagree/structure.hpp"

namespace clustagree {

enum class StructureMode { none, transform, combine };
enum class EtaKind { count, degree, edge };
enum class GenForm { normalized, adjusted };

/// One fully specified measure evaluation.
struct MeasureRequest {
  MeasureId id = MeasureId::ari;
  DeltaVariant variant = DeltaVariant::exact;
  StructureMode structure = StructureMode::none;
  double alpha = 0.5;
  EtaKind eta = EtaKind::count;
  PhiFunction::Kind phi = PhiFunction::Kind::square;
  GenForm gen_form = GenForm::adjusted;
  NormKind norm = NormKind::plain;
  LogBase log_base = LogBase::natural;
  AmiUpperBound upper = AmiUpperBound::mean;
  double beta = 1.0;

  /// Options that affect this measure, `;`-separated, or "-".
  std::string variant_string() const;
  /// measure id, plus the variant in brackets when there is one.
  std::string label() const;
};

std::string_view measure_name(MeasureId id) noexcept;
std::optional<MeasureId> parse_measure(std::string_view name);
std::optional<StructureMode> parse_structure(std::string_view name);
std::optional<EtaKind> parse_eta(std::string_view name);
std::optional<PhiFunction::Kind> parse_phi(std::string_view name);
PhiFunction make_phi(PhiFunction::Kind kind);

/// Cross product of measures with structure modes (co-membership measures
/// only) and overlap kinds (gen only). With `strict`, classic measures also
/// receive the non-`none` modes, which then fail with requires_overlapping_measure.
std::vector<MeasureRequest> expand_requests(const std::vector<MeasureId>& measures,
                                            const std::vector<StructureMode>& structures,
                                            const std::vector<EtaKind>& etas,
                                            const MeasureRequest& options, bool strict);

/// Evaluates a request on (U, V). The result is an agreement for every measure
/// except vi (a distance) and mirkin (non-positive); gen reports 1 - distance.
double evaluate(const MeasureRequest& request, const Clustering& u, const Clustering& v,
                const Graph* graph);

struct ReportRow {
  std::string pair;
  std::string measure;
  std::string variant;
  std::optional<double> value;
  std::optional<Errc> error;
  std::string message;
  double elapsed_ms = 0.0;
};

/// Evaluates and times one request; errors and non-finite values become error rows.
ReportRow run_request(const std::string& pair, const MeasureRequest& request, const Clustering& u,
                      const Clustering& v, const Graph* graph);

/// Values print with 6 significant digits; errors as ERROR:<code>.
std::string format_value(const ReportRow& row);

void write_csv(std::ostream& out, const std::vector<ReportRow>& rows, bool timing);
void write_json(std::ostream& out, const std::vector<ReportRow>& rows, bool timing);

}  // namespace clustagree
