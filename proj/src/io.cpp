#include "clustagree/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_set>

namespace clustagree {

namespace {

std::string where(const std::string& source, std::size_t line) {
  return source + ":" + std::to_string(line) + ": ";
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream ss(line);
  std::string token;
  while (ss >> token) tokens.push_back(token);
  return tokens;
}

double parse_weight(const std::string& token, const std::string& source, std::size_t line) {
  errno = 0;
  char* end = nullptr;
  const double w = std::strtod(token.c_str(), &end);
  if (end == token.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(w)) {
    throw Error(Errc::parse_error, where(source, line) + "invalid weight '" + token + "'");
  }
  return w;
}

/// Reads the data lines of a whitespace-separated file with 2 or 3 columns.
template <typename F>
void for_each_row(std::istream& in, const std::string& source, const char* expected, F&& f) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw Error(Errc::parse_error, where(source, number) + "expected '" + expected + "'");
    }
    const double w = tokens.size() == 3 ? parse_weight(tokens[2], source, number) : 1.0;
    f(std::move(tokens[0]), std::move(tokens[1]), w, number);
  }
  if (in.bad()) throw Error(Errc::io_error, source + ": read failed");
}

std::ifstream open(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, path.string() + ": cannot open file");
  return in;
}

}  // namespace

ClusteringFile parse_clustering(std::istream& in, const std::string& source) {
  ClusteringFile file{source, {}};
  for_each_row(in, source, "point cluster [weight]",
               [&](std::string point, std::string cluster, double w, std::size_t line) {
                 if (w < 0.0) {
                   throw Error(Errc::negative_weight, where(source, line) + "negative weight");
                 }
                 file.records.push_back({std::move(point), std::move(cluster), w, line});
               });
  return file;
}

ClusteringFile read_clustering_file(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_clustering(in, path.string());
}

EdgeListFile parse_edge_list(std::istream& in, const std::string& source) {
  EdgeListFile file{source, {}};
  for_each_row(in, source, "u v [weight]",
               [&](std::string u, std::string v, double w, std::size_t line) {
                 if (!(w > 0.0)) {
                   throw Error(Errc::invalid_edge, where(source, line) + "edge weight must be positive");
                 }
                 if (u == v) throw Error(Errc::invalid_edge, where(source, line) + "self-loop");
                 file.records.push_back({std::move(u), std::move(v), w, line});
               });
  return file;
}

EdgeListFile read_edge_list_file(const std::filesystem::path& path) {
  auto in = open(path);
  return parse_edge_list(in, path.string());
}

void intern_points(const ClusteringFile& file, PointUniverse& universe) {
  for (const auto& r : file.records) universe.intern(r.point);
}

Clustering build_clustering(const ClusteringFile& file,
                            std::shared_ptr<const PointUniverse> universe) {
  if (!universe || universe->size() == 0) {
    throw Error(Errc::empty_clustering, file.source + ": no points");
  }
  std::unordered_map<std::string, std::size_t> cluster_index;
  std::vector<std::string> names;
  std::vector<Membership> entries;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& r : file.records) {
    auto point = universe->find(r.point);
    if (!point) {
      throw Error(Errc::universe_mismatch,
                  where(file.source, r.line) + "point '" + r.point + "' is not in the universe");
    }
    auto [it, inserted] = cluster_index.try_emplace(r.cluster, names.size());
    if (inserted) names.push_back(r.cluster);
    if (!seen.emplace(*point, it->second).second) {
      throw Error(Errc::duplicate_entry, where(file.source, r.line) + "point '" + r.point +
                                             "' listed twice in cluster '" + r.cluster + "'");
    }
    entries.push_back({*point, it->second, r.weight});
  }
  const std::size_t k = names.size();
  auto c = Clustering::from_matrix(universe->size(), k, std::move(entries), names);
  for (std::size_t j = 0; j < k; ++j) {
    if (c.members(j).empty()) {
      throw Error(Errc::empty_cluster,
                  file.source + ": cluster '" + names[j] + "' has no members with positive weight");
    }
  }
  return c.with_universe(std::move(universe));
}

Graph build_graph(const EdgeListFile& file, const PointUniverse& universe,
                  DuplicateEdges duplicates) {
  std::vector<Edge> edges;
  edges.reserve(file.records.size());
  for (const auto& r : file.records) {
    auto u = universe.find(r.u);
    auto v = universe.find(r.v);
    if (!u || !v) {
      throw Error(Errc::universe_mismatch, where(file.source, r.line) + "node '" +
                                               (u ? r.v : r.u) + "' is not a clustered point");
    }
    edges.push_back({*u, *v, r.weight});
  }
  try {
    return Graph::from_edges(universe.size(), std::move(edges), duplicates);
  } catch (const Error& e) {
    throw Error(e.code(), file.source + ": " + e.what());
  }
}

void write_clustering(std::ostream& out, const Clustering& clustering) {
  const auto universe = clustering.universe();
  const auto& names = clustering.cluster_names();
  for (std::size_t i = 0; i < clustering.points(); ++i) {
    for (const auto& e : clustering.row(i)) {
      out << (universe ? universe->id(i) : std::to_string(i)) << ' '
          << (names.empty() ? std::to_string(e.index) : names[e.index]);
      if (e.weight != 1.0) {
        std::ostringstream w;
        w.precision(17);
        w << e.weight;
        out << ' ' << w.str();
      }
      out << '\n';
    }
  }
}

LoadedInputs load_inputs(const ClusteringFile& u_file, const ClusteringFile& v_file,
                         const EdgeListFile* graph_file, const LoadOptions& options) {
  auto universe = std::make_shared<PointUniverse>();
  intern_points(u_file, *universe);
  intern_points(v_file, *universe);

  if (!options.pad_union) {
    std::unordered_set<std::string> in_u;
    std::unordered_set<std::string> in_v;
    for (const auto& r : u_file.records) in_u.insert(r.point);
    for (const auto& r : v_file.records) in_v.insert(r.point);
    for (const auto& id : universe->ids()) {
      if (!in_u.count(id) || !in_v.count(id)) {
        throw Error(Errc::universe_mismatch,
                    "point '" + id + "' appears in " + (in_u.count(id) ? u_file.source : v_file.source) +
                        " but not in " + (in_u.count(id) ? v_file.source : u_file.source) +
                        " (use --pad-union to compare over the union)");
      }
    }
  }
  if (graph_file && options.pad_union) {
    for (const auto& r : graph_file->records) {
      universe->intern(r.u);
      universe->intern(r.v);
    }
  }

  std::shared_ptr<const PointUniverse> shared = universe;
  LoadedInputs out{universe, build_clustering(u_file, shared), build_clustering(v_file, shared),
                   std::nullopt};
  if (graph_file) out.graph = build_graph(*graph_file, *universe, options.duplicates);
  return out;
}

}  // namespace clustagree
