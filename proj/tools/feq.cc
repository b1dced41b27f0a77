// feq: find all solutions of functional equations with templates and coefficient matching.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "feq/error.h"
#include "feq/problem.h"
#include "feq/report.h"
#include "feq/runner.h"
#include "feq/solver.h"

namespace {

std::vector<feq::Problem> load_input(const std::string& input) {
  if (input == "corpus") return feq::load_corpus(feq::default_corpus_dir());
  if (std::filesystem::is_directory(input)) return feq::load_corpus(input);
  return {feq::load_problem_file(input)};
}

void print_details(std::ostream& out, const feq::PipelineReport& r) {
  out << r.problem << " (" << feq::mode_name(r.mode) << ")\n";
  if (!r.fragment.equational) out << "  unsupported fragment: " << r.fragment.reason << "\n";
  for (const auto& o : r.templates) {
    out << "  " << feq::template_shape(o.kind) << ": ";
    if (!o.failure.empty()) {
      out << "no solved form (" << o.failure << ")\n";
    } else if (o.solved) {
      out << feq::to_string(*o.constraint) << "  =>  " << feq::to_string(*o.solved) << "\n";
      if (!o.constraint->equations.empty()) out << "    (" << feq::to_string_ascending(*o.constraint) << ")\n";
    } else {
      out << feq::status_symbol(o.status) << "\n";
    }
    for (const auto& e : o.external) {
      out << "    " << e.solver << ": " << feq::answer_name(e.answer);
      if (!e.diagnostic.empty()) out << " (" << e.diagnostic << ")";
      out << "\n";
    }
  }
  for (const auto& name : r.emitted) out << "  wrote " << name << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solve functional equations over the reals with polynomial templates"};
  app.require_subcommand(1);

  CLI::App* solve = app.add_subcommand("solve", "Solve a problem file, a directory of .feq files, or the bundled corpus");
  std::string input;
  std::string mode = "lazy";
  std::string tmpl = "all";
  std::string emit_dir;
  std::vector<std::string> smt_solvers, uniteq_solvers;
  std::string config_file;
  std::optional<double> timeout;
  bool all_templates = false, inline_check = false, legacy_uniteq = false, details = false;
  std::string report = "txt";
  unsigned jobs = 0;

  solve->add_option("input", input, "problem file, directory, or 'corpus'")->required();
  solve->add_option("--mode", mode, "eager or lazy")->check(CLI::IsMember({"eager", "lazy"}));
  solve->add_option("--template", tmpl, "template to try")
      ->check(CLI::IsMember({"all", "constant", "mlinear", "linear", "mquad", "quad"}));
  solve->add_option("--emit", emit_dir, "write solver queries to this directory");
  solve->add_option("--solver", smt_solvers, "SMT-LIB2 solver as NAME=CMD (repeatable)");
  solve->add_option("--uniteq-solver", uniteq_solvers, "unit-equality prover on TPTP input as NAME=CMD (repeatable)");
  solve->add_option("--config", config_file, "solver configuration file")->check(CLI::ExistingFile);
  solve->add_option("--timeout", timeout, "seconds per external query")->check(CLI::PositiveNumber);
  solve->add_flag("--all-templates", all_templates, "keep trying templates after the first solution class");
  solve->add_flag("--inline-check", inline_check, "substitute the candidate for f in check queries");
  solve->add_flag("--legacy-uniteq", legacy_uniteq, "also write the sectioned unit-equality format");
  solve->add_option("--report", report, "csv or txt")->check(CLI::IsMember({"csv", "txt"}));
  solve->add_flag("--details", details, "print constraints and solved forms per template");
  solve->add_option("--jobs", jobs, "worker threads (0: one per core)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    feq::RunOptions options;
    options.mode = mode == "eager" ? feq::Mode::Eager : feq::Mode::Lazy;
    if (tmpl != "all") options.templates = {*feq::parse_template_name(tmpl)};
    options.all_templates = all_templates;
    if (!emit_dir.empty()) options.emit_dir = emit_dir;
    options.emit.inline_check = inline_check;
    options.emit.legacy_uniteq = legacy_uniteq;
    if (!config_file.empty()) options.solvers = feq::load_solver_config(config_file);
    for (const auto& s : smt_solvers) options.solvers.solvers.push_back(feq::parse_solver_spec(s));
    for (const auto& s : uniteq_solvers)
      options.solvers.solvers.push_back(feq::parse_solver_spec(s, feq::SolverInput::UnitEq));
    if (timeout) options.solvers.timeout_seconds = *timeout;
    options.solvers.validate();

    const std::vector<feq::Problem> problems = load_input(input);
    const std::vector<feq::PipelineReport> reports = feq::run_all(problems, options, jobs);
    if (details) {
      for (const auto& r : reports) print_details(std::cout, r);
      std::cout << "\n";
    }
    std::cout << feq::render_report(reports, report == "csv" ? feq::ReportFormat::Csv : feq::ReportFormat::Text);

    const bool all_unsupported =
        !reports.empty() && std::all_of(reports.begin(), reports.end(),
                                        [](const feq::PipelineReport& r) { return !r.fragment.equational; });
    return all_unsupported ? 2 : 0;
  } catch (const std::exception& e) {
    std::cerr << "feq: " << e.what() << "\n";
    return 1;
  }
}
