#include "clustagree/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "clustagree/io.hpp"

namespace clustagree {

namespace {

namespace fs = std::filesystem;

std::string stem(const std::string& path) { return fs::path(path).stem().string(); }

std::vector<MeasureId> resolve_measures(const std::vector<std::string>& names) {
  if (names.empty()) return default_measures();
  std::vector<MeasureId> ids;
  for (const auto& name : names) {
    auto id = parse_measure(name);
    if (!id) throw Error(Errc::invalid_argument, "unknown measure '" + name + "'");
    ids.push_back(*id);
  }
  return ids;
}

StructureMode resolve_structure(const std::string& name) {
  auto s = parse_structure(name);
  if (!s) throw Error(Errc::invalid_argument, "unknown structure mode '" + name + "'");
  return *s;
}

EtaKind resolve_eta(const std::string& name) {
  auto e = parse_eta(name);
  if (!e) throw Error(Errc::invalid_argument, "unknown overlap kind '" + name + "'");
  return *e;
}

LoadedInputs load_pair(const ClusteringFile& u, const ClusteringFile& v,
                       const std::optional<EdgeListFile>& graph, bool pad_union,
                       bool sum_duplicates) {
  LoadOptions options{pad_union, sum_duplicates ? DuplicateEdges::sum : DuplicateEdges::reject};
  return load_inputs(u, v, graph ? &*graph : nullptr, options);
}

std::optional<EdgeListFile> read_graph(const std::optional<std::string>& path) {
  if (!path) return std::nullopt;
  return read_edge_list_file(*path);
}

/// Streams to stdout for "-" and the bare format names, otherwise to a file.
class OutputTarget {
 public:
  OutputTarget(const std::string& output, std::ostream& stdout_stream) : stream_(&stdout_stream) {
    if (output == "-" || output == "csv" || output == "json") return;
    file_.open(output, std::ios::binary);
    if (!file_) throw Error(Errc::io_error, output + ": cannot open for writing");
    stream_ = &file_;
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::string plural(std::size_t count, const char* word) {
  return std::to_string(count) + " " + word + (count == 1 ? "" : "s");
}

}  // namespace

std::vector<MeasureId> default_measures() {
  return {MeasureId::ri, MeasureId::ari, MeasureId::nmi_sum, MeasureId::ari_delta,
          MeasureId::gen};
}

int run_compare(const CompareOptions& options, std::ostream& out, std::ostream& err) {
  std::vector<ReportRow> rows;
  bool json = false;
  try {
    json = options.format ? *options.format == "json"
                          : options.output == "json" || fs::path(options.output).extension() == ".json";
    if (options.format && *options.format != "csv" && *options.format != "json") {
      throw Error(Errc::invalid_argument, "unknown format '" + *options.format + "'");
    }
    const auto measures = resolve_measures(options.measures);
    const StructureMode structure = resolve_structure(options.structure);
    const EtaKind eta = resolve_eta(options.eta);
    const auto requests = expand_requests(measures, {structure}, {eta}, options.defaults, true);

    const auto u_file = read_clustering_file(options.u_path);
    const auto v_file = read_clustering_file(options.v_path);
    const auto graph_file = read_graph(options.graph_path);
    const auto inputs =
        load_pair(u_file, v_file, graph_file, options.pad_union, options.sum_duplicates);
    const Graph* graph = inputs.graph ? &*inputs.graph : nullptr;

    const std::string pair = stem(options.u_path) + ":" + stem(options.v_path);
    for (const auto& request : requests) {
      rows.push_back(run_request(pair, request, inputs.u, inputs.v, graph));
    }
    OutputTarget target(options.output, out);
    if (json) {
      write_json(target.stream(), rows, options.timing);
    } else {
      write_csv(target.stream(), rows, options.timing);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  }

  int code = exit_ok;
  for (const auto& row : rows) {
    if (!row.error) continue;
    err << "error: " << row.measure << ": " << row.message << '\n';
    if (!is_degenerate(*row.error)) return exit_input_error;
    code = exit_degenerate;
  }
  return code;
}

int run_batch(const BatchOptions& options, std::ostream& out, std::ostream& err) {
  std::vector<MeasureRequest> requests;
  std::optional<ClusteringFile> reference;
  std::optional<EdgeListFile> graph_file;
  std::vector<fs::path> candidates;
  try {
    const auto measures = resolve_measures(options.measures);
    std::vector<StructureMode> structures;
    std::vector<EtaKind> etas;
    for (const auto& s : options.structures) structures.push_back(resolve_structure(s));
    for (const auto& e : options.etas) etas.push_back(resolve_eta(e));
    if (structures.empty()) {
      structures.push_back(StructureMode::none);
      if (options.graph_path) {
        structures.push_back(StructureMode::transform);
        structures.push_back(StructureMode::combine);
      }
    }
    if (etas.empty()) {
      etas.push_back(EtaKind::count);
      if (options.graph_path) etas.push_back(EtaKind::degree);
    }
    requests = expand_requests(measures, structures, etas, options.defaults, false);

    reference = read_clustering_file(options.reference_path);
    graph_file = read_graph(options.graph_path);

    std::error_code ec;
    fs::directory_iterator it(options.directory, ec);
    if (ec) throw Error(Errc::io_error, options.directory + ": " + ec.message());
    for (const auto& entry : it) {
      const auto name = entry.path().filename().string();
      if (entry.is_regular_file() && !name.starts_with('.')) candidates.push_back(entry.path());
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  }

  std::ostringstream csv;
  csv << "candidate,status";
  for (const auto& r : requests) csv << ',' << r.label();
  csv << '\n';
  for (const auto& path : candidates) {
    const std::string name = path.filename().string();
    std::vector<std::string> cells;
    std::string status = "ok";
    try {
      const auto candidate = read_clustering_file(path);
      const auto inputs =
          load_pair(*reference, candidate, graph_file, options.pad_union, options.sum_duplicates);
      const Graph* graph = inputs.graph ? &*inputs.graph : nullptr;
      for (const auto& request : requests) {
        cells.push_back(format_value(run_request(name, request, inputs.u, inputs.v, graph)));
      }
    } catch (const Error& e) {
      err << "error: " << e.what() << '\n';
      status = "ERROR:" + std::string(errc_name(e.code()));
      cells.assign(requests.size(), "");
    }
    csv << name << ',' << status;
    for (const auto& cell : cells) csv << ',' << cell;
    csv << '\n';
  }

  try {
    OutputTarget target(options.output, out);
    target.stream() << csv.str();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  }
  return exit_ok;
}

int run_validate(const ValidateOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const auto file = read_clustering_file(options.path);
    auto universe = std::make_shared<PointUniverse>();
    intern_points(file, *universe);
    const auto graph_file = read_graph(options.graph_path);
    const std::size_t clustered = universe->size();
    if (graph_file) {
      for (const auto& r : graph_file->records) {
        universe->intern(r.u);
        universe->intern(r.v);
      }
    }
    const Clustering c = build_clustering(file, universe);

    std::map<std::size_t, std::size_t> by_count;  // memberships per point -> points
    for (std::size_t i = 0; i < c.points(); ++i) {
      if (c.row(i).size() > 1) ++by_count[c.row(i).size()];
    }
    std::string kind = c.disjoint_crisp() ? "disjoint-crisp" : c.crisp() ? "crisp" : "soft";
    std::string summary = kind;
    if (!c.disjoint()) summary += ", overlapping";
    summary += ", " + plural(c.points(), "point") + ", " + plural(c.clusters(), "cluster");
    for (const auto& [count, points] : by_count) {
      summary += ", " + plural(points, "point") + " in " + std::to_string(count) + " clusters";
    }
    out << summary << '\n';

    if (c.uncovered_points() > 0) {
      out << "uncovered: " << plural(c.uncovered_points(), "point") << " (";
      std::size_t shown = 0;
      for (std::size_t i = 0; i < c.points() && shown < 10; ++i) {
        if (!c.row(i).empty()) continue;
        out << (shown++ ? " " : "") << universe->id(i);
      }
      out << (c.uncovered_points() > shown ? " ..." : "") << ")\n";
    }
    if (!c.crisp()) {
      double lo = 0.0;
      double hi = 0.0;
      bool first = true;
      for (std::size_t i = 0; i < c.points(); ++i) {
        if (c.row(i).empty()) continue;
        double mass = 0.0;
        for (const auto& e : c.row(i)) mass += e.weight;
        lo = first ? mass : std::min(lo, mass);
        hi = first ? mass : std::max(hi, mass);
        first = false;
      }
      char buf[96];
      std::snprintf(buf, sizeof buf, "membership mass per point: %.6g to %.6g", lo, hi);
      out << buf << '\n';
    }
    if (graph_file) {
      const Graph g = build_graph(*graph_file, *universe,
                                  options.sum_duplicates ? DuplicateEdges::sum
                                                         : DuplicateEdges::reject);
      char buf[160];
      std::snprintf(buf, sizeof buf, "graph: %zu nodes, %zu edges, total weight %.6g",
                    g.nodes(), g.edge_count(), g.total_weight());
      out << buf << '\n';
      if (universe->size() > clustered) {
        out << "graph nodes outside the clustering: " << universe->size() - clustered << '\n';
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  }
  return exit_ok;
}

}  // namespace clustagree
