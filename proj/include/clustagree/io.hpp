#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "clustagree/clustering.hpp"
#include "clustagree/graph.hpp"

namespace clustagree {

// Clustering files: `point_id <ws> cluster_id [<ws> weight]`, weight 1 by default.
// Edge lists:       `u <ws> v [<ws> weight]`, undirected.
// Blank lines and `#` comments are ignored in both.

struct ClusteringRecord {
  std::string point;
  std::string cluster;
  double weight = 1.0;
  std::size_t line = 0;
};

struct EdgeRecord {
  std::string u;
  std::string v;
  double weight = 1.0;
  std::size_t line = 0;
};

struct ClusteringFile {
  std::string source;
  std::vector<ClusteringRecord> records;
};

struct EdgeListFile {
  std::string source;
  std::vector<EdgeRecord> records;
};

ClusteringFile parse_clustering(std::istream& in, const std::string& source);
ClusteringFile read_clustering_file(const std::filesystem::path& path);
EdgeListFile parse_edge_list(std::istream& in, const std::string& source);
EdgeListFile read_edge_list_file(const std::filesystem::path& path);

/// Adds every point of the file to the universe in file order.
void intern_points(const ClusteringFile& file, PointUniverse& universe);

/// Builds the clustering over the whole universe; points of the universe that
/// the file does not mention get empty rows. Errors carry file:line context.
Clustering build_clustering(const ClusteringFile& file,
                            std::shared_ptr<const PointUniverse> universe);

Graph build_graph(const EdgeListFile& file, const PointUniverse& universe,
                  DuplicateEdges duplicates = DuplicateEdges::reject);

/// Serializes with the universe's point ids and the clustering's cluster names
/// (falling back to indices), one line per stored membership.
void write_clustering(std::ostream& out, const Clustering& clustering);

struct LoadOptions {
  bool pad_union = false;
  DuplicateEdges duplicates = DuplicateEdges::reject;
};

/// Two clusterings (and optionally a graph) over one shared universe, indexed
/// by first appearance across the files in argument order.
struct LoadedInputs {
  std::shared_ptr<PointUniverse> universe;
  Clustering u;
  Clustering v;
  std::optional<Graph> graph;
};

/// Without pad_union, files over different point sets (or graph nodes outside
/// them) are a universe_mismatch; with it both sides extend to the union.
LoadedInputs load_inputs(const ClusteringFile& u_file, const ClusteringFile& v_file,
                         const EdgeListFile* graph_file, const LoadOptions& options = {});

}  // namespace clustagree
