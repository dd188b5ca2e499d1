#include "clustagree/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "clustagree/contingency.hpp"

namespace clustagree {

namespace {

struct NamedMeasure {
  MeasureId id;
  std::string_view name;
};

constexpr NamedMeasure measure_names[] = {
    {MeasureId::ri, "ri"},
    {MeasureId::ari, "ari"},
    {MeasureId::ari_approx, "ari-approx"},
    {MeasureId::jaccard, "jaccard"},
    {MeasureId::f1, "f1"},
    {MeasureId::mirkin, "mirkin"},
    {MeasureId::vi, "vi"},
    {MeasureId::nmi_sum, "nmi-sum"},
    {MeasureId::nmi_sqrt, "nmi-sqrt"},
    {MeasureId::ami, "ami"},
    {MeasureId::ri_delta, "ri-delta"},
    {MeasureId::ari_delta, "ari-delta"},
    {MeasureId::d_norm, "d-norm"},
    {MeasureId::i_sqrt_tr, "i-sqrt-tr"},
    {MeasureId::omega, "omega"},
    {MeasureId::omega_adj, "omega-adj"},
    {MeasureId::gen, "gen"},
};

std::string_view eta_name(EtaKind e) {
  switch (e) {
    case EtaKind::count: return "count";
    case EtaKind::degree: return "degree";
    case EtaKind::edge: return "edge";
  }
  return "count";
}

std::string_view upper_name(AmiUpperBound u) {
  switch (u) {
    case AmiUpperBound::min: return "min";
    case AmiUpperBound::sqrt: return "sqrt";
    case AmiUpperBound::mean: return "mean";
    case AmiUpperBound::max: return "max";
    case AmiUpperBound::joint: return "joint";
  }
  return "mean";
}

std::string number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

std::string_view log_name(LogBase b) { return b == LogBase::base2 ? "log=2" : "log=e"; }

void append(std::string& s, std::string_view part) {
  if (!s.empty()) s += ';';
  s += part;
}

const Graph& need_graph(const Graph* graph) {
  if (graph == nullptr) throw Error(Errc::missing_graph, "this measure needs --graph");
  return *graph;
}

}  // namespace

std::string_view measure_name(MeasureId id) noexcept {
  for (const auto& m : measure_names) {
    if (m.id == id) return m.name;
  }
  return "?";
}

std::optional<MeasureId> parse_measure(std::string_view name) {
  for (const auto& m : measure_names) {
    if (m.name == name) return m.id;
  }
  return std::nullopt;
}

std::optional<StructureMode> parse_structure(std::string_view name) {
  if (name == "none") return StructureMode::none;
  if (name == "transform") return StructureMode::transform;
  if (name == "combine") return StructureMode::combine;
  return std::nullopt;
}

std::optional<EtaKind> parse_eta(std::string_view name) {
  if (name == "count") return EtaKind::count;
  if (name == "degree") return EtaKind::degree;
  if (name == "edge") return EtaKind::edge;
  return std::nullopt;
}

std::optional<PhiFunction::Kind> parse_phi(std::string_view name) {
  if (name == "xlogx") return PhiFunction::Kind::x_log_x;
  if (name == "binom2") return PhiFunction::Kind::binom2;
  if (name == "square") return PhiFunction::Kind::square;
  if (name == "x(x-1)" || name == "xx-1") return PhiFunction::Kind::x_times_x_minus_1;
  return std::nullopt;
}

PhiFunction make_phi(PhiFunction::Kind kind) {
  switch (kind) {
    case PhiFunction::Kind::x_log_x: return PhiFunction::x_log_x();
    case PhiFunction::Kind::binom2: return PhiFunction::binom2();
    case PhiFunction::Kind::square: return PhiFunction::square();
    case PhiFunction::Kind::x_times_x_minus_1: return PhiFunction::x_times_x_minus_1();
    case PhiFunction::Kind::custom: break;
  }
  throw Error(Errc::invalid_argument, "custom phi functions are not available by name");
}

std::string MeasureRequest::variant_string() const {
  std::string s;
  switch (id) {
    case MeasureId::ri_delta:
    case MeasureId::ari_delta:
      append(s, variant == DeltaVariant::exact ? "exact" : "approx");
      break;
    case MeasureId::d_norm:
      append(s, norm == NormKind::plain ? "plain" : "squared");
      break;
    case MeasureId::f1:
      append(s, "beta=" + number(beta));
      break;
    case MeasureId::vi:
    case MeasureId::nmi_sum:
    case MeasureId::nmi_sqrt:
      append(s, log_name(log_base));
      break;
    case MeasureId::ami:
      append(s, "upper=" + std::string(upper_name(upper)));
      break;
    case MeasureId::gen:
      append(s, "phi=" + make_phi(phi).name());
      append(s, "eta=" + std::string(eta_name(eta)));
      append(s, gen_form == GenForm::adjusted ? "adjusted" : "normalized");
      break;
    default:
      break;
  }
  if (structure == StructureMode::transform) append(s, "transform");
  if (structure == StructureMode::combine) append(s, "combine(alpha=" + number(alpha) + ")");
  return s.empty() ? "-" : s;
}

std::string MeasureRequest::label() const {
  std::string l(measure_name(id));
  const std::string v = variant_string();
  if (v != "-") l += "[" + v + "]";
  return l;
}

std::vector<MeasureRequest> expand_requests(const std::vector<MeasureId>& measures,
                                            const std::vector<StructureMode>& structures,
                                            const std::vector<EtaKind>& etas,
                                            const MeasureRequest& options, bool strict) {
  std::vector<MeasureRequest> out;
  for (MeasureId id : measures) {
    MeasureRequest r = options;
    r.id = id;
    r.structure = StructureMode::none;
    if (id == MeasureId::gen) {
      for (EtaKind eta : etas) {
        r.eta = eta;
        out.push_back(r);
      }
      continue;
    }
    r.eta = EtaKind::count;
    for (StructureMode s : structures) {
      if (s != StructureMode::none && !accepts_overlapping(id) && !strict) continue;
      r.structure = s;
      out.push_back(r);
    }
  }
  return out;
}

double evaluate(const MeasureRequest& request, const Clustering& u, const Clustering& v,
                const Graph* graph) {
  if (request.structure != StructureMode::none) {
    if (!accepts_overlapping(request.id)) {
      throw Error(Errc::requires_overlapping_measure,
                  std::string(measure_name(request.id)) +
                      " is contingency based; structure modes need a co-membership measure");
    }
    const BaseMeasure base{request.id, request.variant, request.norm};
    const Graph& g = need_graph(graph);
    if (request.structure == StructureMode::transform) return transformed_measure(u, v, g, base);
    return combined_measure(u, v, g, base, request.alpha);
  }

  switch (request.id) {
    case MeasureId::ri: return rand_index(overlap_table(u, v));
    case MeasureId::ari: return ari(overlap_table(u, v), AriVariant::exact);
    case MeasureId::ari_approx: return ari(overlap_table(u, v), AriVariant::approx);
    case MeasureId::jaccard: return jaccard(pair_counts(u, v));
    case MeasureId::f1: return f_measure(pair_counts(u, v), request.beta);
    case MeasureId::mirkin: return mirkin(pair_counts(u, v));
    case MeasureId::vi:
      return entropy_suite(overlap_table(u, v), request.log_base).variation_of_information;
    case MeasureId::nmi_sum: return nmi(overlap_table(u, v), NmiVariant::sum, request.log_base);
    case MeasureId::nmi_sqrt: return nmi(overlap_table(u, v), NmiVariant::sqrt, request.log_base);
    case MeasureId::ami:
      return ami(overlap_table(u, v), request.upper, EmiOptions{100'000, request.log_base});
    case MeasureId::ri_delta:
    case MeasureId::ari_delta:
    case MeasureId::d_norm:
    case MeasureId::i_sqrt_tr:
      return BaseMeasure{request.id, request.variant, request.norm}(u, v);
    case MeasureId::omega: return omega(u, v);
    case MeasureId::omega_adj: return adjusted_omega(u, v);
    case MeasureId::gen: {
      OverlapKind kind = OverlapKind::count();
      if (request.eta == EtaKind::degree) kind = OverlapKind::degree_weighted(need_graph(graph));
      if (request.eta == EtaKind::edge) kind = OverlapKind::edge_overlap(need_graph(graph));
      const auto table = overlap_table(u, v, kind);
      const PhiFunction phi = make_phi(request.phi);
      const double d = request.gen_form == GenForm::adjusted ? gen_distance_adjusted(table, phi)
                                                             : gen_distance_normalized(table, phi);
      return 1.0 - d;
    }
  }
  throw Error(Errc::invalid_argument, "unknown measure");
}

ReportRow run_request(const std::string& pair, const MeasureRequest& request, const Clustering& u,
                      const Clustering& v, const Graph* graph) {
  ReportRow row{pair, std::string(measure_name(request.id)), request.variant_string(),
                std::nullopt, std::nullopt, {}, 0.0};
  const auto start = std::chrono::steady_clock::now();
  try {
    const double value = evaluate(request, u, v, graph);
    if (std::isfinite(value)) {
      row.value = value;
    } else {
      row.error = Errc::zero_denominator;
      row.message = "measure evaluated to a non-finite value";
    }
  } catch (const Error& e) {
    row.error = e.code();
    row.message = e.what();
  }
  row.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

std::string format_value(const ReportRow& row) {
  if (row.error) return "ERROR:" + std::string(errc_name(*row.error));
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", *row.value);
  return buf;
}

void write_csv(std::ostream& out, const std::vector<ReportRow>& rows, bool timing) {
  out << "pair,measure,variant,value" << (timing ? ",elapsed_ms" : "") << '\n';
  for (const auto& r : rows) {
    out << r.pair << ',' << r.measure << ',' << r.variant << ',' << format_value(r);
    if (timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", r.elapsed_ms);
      out << ',' << buf;
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<ReportRow>& rows, bool timing) {
  auto doc = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json j{{"pair", r.pair}, {"measure", r.measure}, {"variant", r.variant}};
    if (r.value) {
      j["value"] = *r.value;
    } else {
      j["value"] = nullptr;
      j["error"] = std::string(errc_name(*r.error));
      j["message"] = r.message;
    }
    if (timing) j["elapsed_ms"] = r.elapsed_ms;
    doc.push_back(std::move(j));
  }
  out << doc.dump(2) << '\n';
}

}  // namespace clustagree
