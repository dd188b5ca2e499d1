// Command-line front end: compare, batch and validate.

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "clustagree/commands.hpp"

namespace {

using namespace clustagree;

/// Flags that tune individual measures; shared by compare and batch.
struct MeasureFlags {
  std::string variant = "exact";
  std::string phi = "square";
  std::string gen_form = "adjusted";
  std::string norm = "plain";
  std::string log_base = "e";
  std::string upper = "mean";
  double alpha = 0.5;
  double beta = 1.0;

  void attach(CLI::App& app) {
    app.add_option("--variant", variant, "Co-membership variant")
        ->check(CLI::IsMember({"exact", "approx"}));
    app.add_option("--phi", phi, "Generalized-distance phi")
        ->check(CLI::IsMember({"xlogx", "binom2", "square", "x(x-1)"}));
    app.add_option("--gen-form", gen_form, "Generalized distance normalization")
        ->check(CLI::IsMember({"normalized", "adjusted"}));
    app.add_option("--norm", norm, "d-norm form")->check(CLI::IsMember({"plain", "squared"}));
    app.add_option("--log-base", log_base, "Logarithm base for entropies")
        ->check(CLI::IsMember({"e", "2"}));
    app.add_option("--upper", upper, "AMI upper bound")
        ->check(CLI::IsMember({"min", "sqrt", "mean", "max", "joint"}));
    app.add_option("--alpha", alpha, "Weight of the clustering term in combine mode")
        ->check(CLI::Range(0.0, 1.0));
    app.add_option("--beta", beta, "F-measure beta")->check(CLI::PositiveNumber);
  }

  MeasureRequest request() const {
    static const std::map<std::string, AmiUpperBound> uppers{
        {"min", AmiUpperBound::min},   {"sqrt", AmiUpperBound::sqrt}, {"mean", AmiUpperBound::mean},
        {"max", AmiUpperBound::max},   {"joint", AmiUpperBound::joint}};
    MeasureRequest r;
    r.variant = variant == "exact" ? DeltaVariant::exact : DeltaVariant::approx;
    r.phi = *parse_phi(phi);
    r.gen_form = gen_form == "adjusted" ? GenForm::adjusted : GenForm::normalized;
    r.norm = norm == "plain" ? NormKind::plain : NormKind::squared;
    r.log_base = log_base == "2" ? LogBase::base2 : LogBase::natural;
    r.upper = uppers.at(upper);
    r.alpha = alpha;
    r.beta = beta;
    return r;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compare clusterings with classic, co-membership and graph-aware measures"};
  app.require_subcommand(1);

  CompareOptions compare;
  MeasureFlags compare_flags;
  auto* cmp = app.add_subcommand("compare", "Compare two clustering files");
  cmp->add_option("u", compare.u_path, "First clustering file")->required();
  cmp->add_option("v", compare.v_path, "Second clustering file")->required();
  cmp->add_option("--graph", compare.graph_path, "Edge list over the same points");
  cmp->add_option("--measure,-m", compare.measures, "Measure id (repeatable)");
  cmp->add_option("--structure", compare.structure, "none, transform or combine");
  cmp->add_option("--eta", compare.eta, "Overlap kind for gen: count, degree or edge");
  cmp->add_option("--output,-o", compare.output, "csv, json, - or an output path");
  cmp->add_option("--format", compare.format, "Force csv or json");
  cmp->add_flag("--timing", compare.timing, "Add elapsed milliseconds per row");
  cmp->add_flag("--pad-union", compare.pad_union, "Compare over the union of point sets");
  cmp->add_flag("--sum-duplicates", compare.sum_duplicates, "Sum repeated edges");
  compare_flags.attach(*cmp);

  BatchOptions batch;
  MeasureFlags batch_flags;
  auto* bat = app.add_subcommand("batch", "Score every clustering file in a directory");
  bat->add_option("directory", batch.directory, "Directory of candidate clusterings")->required();
  bat->add_option("reference", batch.reference_path, "Reference clustering file")->required();
  bat->add_option("--graph", batch.graph_path, "Edge list over the same points");
  bat->add_option("--measure,-m", batch.measures, "Measure id (repeatable)");
  bat->add_option("--structure", batch.structures, "Structure mode (repeatable)");
  bat->add_option("--eta", batch.etas, "Overlap kind for gen (repeatable)");
  bat->add_option("--output,-o", batch.output, "Output path or - for stdout");
  bat->add_flag("--pad-union", batch.pad_union, "Compare over the union of point sets");
  bat->add_flag("--sum-duplicates", batch.sum_duplicates, "Sum repeated edges");
  batch_flags.attach(*bat);

  ValidateOptions validate;
  auto* val = app.add_subcommand("validate", "Describe a clustering file");
  val->add_option("file", validate.path, "Clustering file")->required();
  val->add_option("--graph", validate.graph_path, "Edge list to check against the file");
  val->add_flag("--sum-duplicates", validate.sum_duplicates, "Sum repeated edges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_input_error;
  }

  if (cmp->parsed()) {
    compare.defaults = compare_flags.request();
    return run_compare(compare, std::cout, std::cerr);
  }
  if (bat->parsed()) {
    batch.defaults = batch_flags.request();
    return run_batch(batch, std::cout, std::cerr);
  }
  return run_validate(validate, std::cout, std::cerr);
}
