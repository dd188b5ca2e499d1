#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "clustagree/commands.hpp"

using namespace clustagree;

#ifndef FIXTURE_DIR
#error "FIXTURE_DIR must point at the fixtures directory"
#endif

namespace {

const std::string fixtures = FIXTURE_DIR;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run compare(CompareOptions o) {
  std::ostringstream out, err;
  const int code = run_compare(o, out, err);
  return {code, out.str(), err.str()};
}

CompareOptions pair(const std::string& u, const std::string& v) {
  CompareOptions o;
  o.u_path = fixtures + "/" + u;
  o.v_path = fixtures + "/" + v;
  return o;
}

}  // namespace

TEST_CASE("compare prints one row per measure") {
  auto o = pair("fig3_U.clu", "fig3_V.clu");
  o.measures = {"ari", "ri", "gen"};
  o.defaults.phi = PhiFunction::Kind::x_times_x_minus_1;
  const auto r = compare(o);
  CHECK(r.code == 0);
  CHECK(r.out ==
        "pair,measure,variant,value\n"
        "fig3_U:fig3_V,ari,-,0.311927\n"
        "fig3_U:fig3_V,ri,-,0.666667\n"
        "fig3_U:fig3_V,gen,phi=x(x-1);eta=count;adjusted,0.311927\n");
}

TEST_CASE("compare on the edge universe") {
  auto o = pair("fig4_V.clu", "fig4_U1.clu");
  o.graph_path = fixtures + "/fig4.edges";
  o.measures = {"ari-delta"};
  o.defaults.variant = DeltaVariant::approx;
  o.structure = "transform";
  const auto r = compare(o);
  CHECK(r.code == 0);
  CHECK(r.out.find(",ari-delta,approx;transform,0.752022\n") != std::string::npos);
}

TEST_CASE("a file against itself scores perfectly on every measure") {
  auto o = pair("fig4_V.clu", "fig4_V.clu");
  o.graph_path = fixtures + "/fig4.edges";
  o.measures = {"ri",  "ari",      "ari-approx", "jaccard", "f1",        "mirkin",
                "vi",  "nmi-sum",  "nmi-sqrt",   "ami",     "ri-delta",  "ari-delta",
                "d-norm", "i-sqrt-tr", "omega",  "omega-adj", "gen"};
  o.output = "json";
  const auto r = compare(o);
  CHECK(r.code == 0);
  const auto rows = nlohmann::json::parse(r.out);
  REQUIRE(rows.size() == o.measures.size());
  for (const auto& row : rows) {
    const std::string m = row["measure"];
    const double expected = m == "vi" || m == "mirkin" ? 0.0 : 1.0;
    CHECK_MESSAGE(row["value"].get<double>() == doctest::Approx(expected).epsilon(1e-12), m);
  }
}

TEST_CASE("exit codes") {
  auto missing = pair("fig3_U.clu", "does_not_exist.clu");
  CHECK(compare(missing).code == exit_input_error);

  auto bad_measure = pair("fig3_U.clu", "fig3_V.clu");
  bad_measure.measures = {"nope"};
  CHECK(compare(bad_measure).code == exit_input_error);

  auto overlapping = pair("fig2_V.clu", "fig2_V.clu");
  overlapping.measures = {"ari"};
  const auto r = compare(overlapping);
  CHECK(r.code == exit_input_error);
  CHECK(r.out.find("ERROR:not_disjoint") != std::string::npos);

  auto structured = pair("fig4_V.clu", "fig4_U1.clu");
  structured.measures = {"ari"};
  structured.structure = "transform";
  structured.graph_path = fixtures + "/fig4.edges";
  CHECK(compare(structured).out.find("ERROR:requires_overlapping_measure") != std::string::npos);

  auto no_graph = pair("fig4_V.clu", "fig4_U1.clu");
  no_graph.measures = {"ri-delta"};
  no_graph.structure = "combine";
  CHECK(compare(no_graph).code == exit_input_error);
}

TEST_CASE("degenerate measures exit with 3") {
  const auto dir = std::filesystem::temp_directory_path() / "clustagree_degenerate";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "one.clu") << "a x\nb x\nc x\n";
  }
  CompareOptions o;
  o.u_path = (dir / "one.clu").string();
  o.v_path = o.u_path;
  o.measures = {"ami"};
  const auto r = compare(o);
  CHECK(r.code == exit_degenerate);
  CHECK(r.out.find("ERROR:degenerate_entropy") != std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST_CASE("output is deterministic") {
  auto o = pair("fig4_V.clu", "fig4_U2.clu");
  o.graph_path = fixtures + "/fig4.edges";
  o.measures = {"ri", "ari-delta", "d-norm", "omega-adj", "gen"};
  o.eta = "degree";
  for (const char* format : {"csv", "json"}) {
    o.output = format;
    const auto first = compare(o).out;
    for (int i = 0; i < 5; ++i) CHECK(compare(o).out == first);
  }
}

TEST_CASE("batch ranks the candidates on structure-aware columns only") {
  BatchOptions o;
  o.directory = fixtures + "/fig1_candidates";
  o.reference_path = fixtures + "/fig4_V.clu";
  o.graph_path = fixtures + "/fig4.edges";
  std::ostringstream out, err;
  CHECK(run_batch(o, out, err) == 0);
  std::istringstream lines(out.str());
  std::string header, u1, u2;
  std::getline(lines, header);
  std::getline(lines, u1);
  std::getline(lines, u2);
  CHECK(u1.starts_with("U1.clu,ok,"));
  CHECK(u2.starts_with("U2.clu,ok,"));
  auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    return cells;
  };
  const auto h = split(header);
  const auto a = split(u1);
  const auto b = split(u2);
  for (std::size_t i = 2; i < h.size(); ++i) {
    const bool structural = h[i].find("transform") != std::string::npos ||
                            h[i].find("combine") != std::string::npos ||
                            h[i].find("eta=degree") != std::string::npos;
    if (structural) CHECK_MESSAGE(std::stod(a[i]) > std::stod(b[i]), h[i]);
    else CHECK_MESSAGE(a[i] == b[i], h[i]);
  }
}

TEST_CASE("batch flags malformed files and keeps going") {
  const auto dir = std::filesystem::temp_directory_path() / "clustagree_batch";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::filesystem::copy_file(fixtures + "/fig4_U1.clu", dir / "a.clu");
  { std::ofstream(dir / "b.clu") << "0 r\n1 r extra tokens\n"; }
  std::filesystem::copy_file(fixtures + "/fig4_U2.clu", dir / "c.clu");

  BatchOptions o;
  o.directory = dir.string();
  o.reference_path = fixtures + "/fig4_V.clu";
  o.measures = {"ri", "ari"};
  std::ostringstream out, err;
  CHECK(run_batch(o, out, err) == 0);
  CHECK(out.str() ==
        "candidate,status,ri,ari\n"
        "a.clu,ok,0.777778,0.555556\n"
        "b.clu,ERROR:parse_error,,\n"
        "c.clu,ok,0.777778,0.555556\n");
  CHECK(err.str().find("b.clu:2:") != std::string::npos);

  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  std::ostringstream empty, empty_err;
  CHECK(run_batch(o, empty, empty_err) == 0);
  CHECK(empty.str() == "candidate,status,ri,ari\n");
  std::filesystem::remove_all(dir);
}

TEST_CASE("validate summaries") {
  auto validate = [](const std::string& file) {
    ValidateOptions o;
    o.path = fixtures + "/" + file;
    std::ostringstream out, err;
    CHECK(run_validate(o, out, err) == 0);
    return out.str();
  };
  CHECK(validate("fig2_V.clu").starts_with(
      "crisp, overlapping, 10 points, 3 clusters, 1 point in 2 clusters\n"));
  CHECK(validate("fig3_V.clu").starts_with("disjoint-crisp, 10 points, 3 clusters\n"));
  CHECK(validate("fig2_U1.clu").starts_with("soft,"));

  ValidateOptions g;
  g.path = fixtures + "/fig4_V.clu";
  g.graph_path = fixtures + "/fig4.edges";
  std::ostringstream out, err;
  CHECK(run_validate(g, out, err) == 0);
  CHECK(out.str().find("graph: 9 nodes, 15 edges") != std::string::npos);
}
