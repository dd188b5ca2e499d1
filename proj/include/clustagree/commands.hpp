#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "clustagree/report.hpp"

namespace clustagree {

// Exit codes shared by every command.
inline constexpr int exit_ok = 0;
inline constexpr int exit_input_error = 2;
inline constexpr int exit_degenerate = 3;

struct CompareOptions {
  std::string u_path;
  std::string v_path;
  std::optional<std::string> graph_path;
  std::vector<std::string> measures;  // empty: the default set
  std::string structure = "none";
  std::string eta = "count";
  MeasureRequest defaults;
  std::string output = "csv";  // csv, json, "-" or a file path
  std::optional<std::string> format;
  bool timing = false;
  bool pad_union = false;
  bool sum_duplicates = false;
};

struct BatchOptions {
  std::string directory;
  std::string reference_path;
  std::optional<std::string> graph_path;
  std::vector<std::string> measures;    // empty: the default set
  std::vector<std::string> structures;  // empty: none, plus transform/combine with a graph
  std::vector<std::string> etas;        // empty: count, plus degree with a graph
  MeasureRequest defaults;
  std::string output = "-";
  bool pad_union = false;
  bool sum_duplicates = false;
};

struct ValidateOptions {
  std::string path;
  std::optional<std::string> graph_path;
  bool sum_duplicates = false;
};

/// Measures used when none are requested.
std::vector<MeasureId> default_measures();

int run_compare(const CompareOptions& options, std::ostream& out, std::ostream& err);
int run_batch(const BatchOptions& options, std::ostream& out, std::ostream& err);
int run_validate(const ValidateOptions& options, std::ostream& out, std::ostream& err);

}  // namespace clustagree
