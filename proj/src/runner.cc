#include "feq/runner.h"

#include <atomic>
#include <chrono>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

#include "feq/error.h"

namespace feq {

std::string_view mode_name(Mode m) { return m == Mode::Eager ? "eager" : "lazy"; }

const TemplateOutcome* PipelineReport::outcome(TemplateKind k) const {
  for (const auto& o : templates) {
    if (o.kind == k) return &o;
  }
  return nullptr;
}

const SolvedForm* PipelineReport::solved_form() const {
  if (!selected) return nullptr;
  const TemplateOutcome* o = outcome(*selected);
  return o && o->solved ? &*o->solved : nullptr;
}

std::vector<SolutionCandidate> PipelineReport::solutions() const {
  if (!selected) return {};
  const TemplateOutcome* o = outcome(*selected);
  return o ? o->solutions : std::vector<SolutionCandidate>{};
}

std::string describe(const SolutionCandidate& s) {
  std::string out = "f(" + s.var + ") = " + to_string(s.body);
  for (const Parameter& param : s.params) {
    out += ", " + param.name;
    if (param.relation) {
      out += std::string(" ") + relation_symbol(*param.relation) + " " + param.bound.to_string();
    } else {
      out += " ∈ ℝ";
    }
  }
  return out;
}

bool check_solution(const Problem& p, const SolutionCandidate& s) {
  if (const Fragment fr = classify_fragment(p); !fr.equational) throw UnsupportedFragment(fr.reason);
  for (const Equation& eq : p.equations) {
    const Expr lhs = inline_function(eq.lhs, s.var, s.body);
    const Expr rhs = inline_function(eq.rhs, s.var, s.body);
    if (!(to_polynomial(lhs) - to_polynomial(rhs)).is_zero()) return false;
  }
  return true;
}

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

void write_file(PipelineReport& report, const RunOptions& options, const std::string& name,
                const std::string& text) {
  if (!options.emit_dir) return;
  std::filesystem::create_directories(*options.emit_dir);
  const auto path = *options.emit_dir / name;
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw Error("cannot write " + path.string());
  report.emitted.push_back(name);
}

/// First decisive answer over the solvers accepting this input, else the last answer.
std::optional<SolveResult> dispatch(const std::string& text, SolverInput input, const SolverConfig& config) {
  std::optional<SolveResult> last;
  for (const SolverCommand& c : config.solvers) {
    if (c.input != input) continue;
    last = external_solve(text, input == SolverInput::Smt2 ? ".smt2" : ".p", c, config);
    if (last->answer == SolverAnswer::Sat || last->answer == SolverAnswer::Unsat) break;
  }
  return last;
}

bool is(const std::optional<SolveResult>& r, SolverAnswer a) { return r && r->answer == a; }

/// find/prove/check queries, unit-equality tasks and the candidate checks.
void common_queries(const Problem& p, const RunOptions& options, PipelineReport& report) {
  const Smt2Query find = emit_find(p);
  write_file(report, options, find.file_name(), find.text);
  const Smt2Query prove = emit_prove(p);
  write_file(report, options, prove.file_name(), prove.text);
  report.prove = dispatch(prove.text, SolverInput::Smt2, options.solvers);
  for (std::size_t i = 0; i < p.solutions.size(); ++i) {
    CandidateCheck check{p.solutions[i], std::nullopt, std::nullopt};
    if (report.fragment.equational) check.holds = check_solution(p, p.solutions[i]);
    const Smt2Query q = emit_check(p, i + 1, options.emit);
    write_file(report, options, q.file_name(), q.text);
    check.external = dispatch(q.text, SolverInput::Smt2, options.solvers);
    report.checks.push_back(std::move(check));
  }
  if (options.emit_dir && !uniteq_ineligibility(p)) {
    for (TemplateKind k : options.templates) {
      const UnitEqTask task = emit_uniteq(p, k);
      write_file(report, options, task.file_name(), task.tptp());
      if (options.emit.legacy_uniteq) write_file(report, options, task.legacy_file_name(), task.legacy());
    }
  }
}

/// Inlines, eliminates and postprocesses; false when no solved form exists.
bool solve_template(const Problem& p, TemplateOutcome& o) {
  const Template& t = get_template(o.kind);
  try {
    const auto vars = p.variables();
    o.constraint = eliminate(inline_template(p, t), std::set<std::string>(vars.begin(), vars.end()));
    o.solved = to_solved_form(*o.constraint, t.coefficients);
  } catch (const NoSolvedForm& e) {
    o.failure = e.reason();
    return false;
  }
  for (const Assignment& a : o.solved->disjuncts) {
    o.solutions.push_back(instantiate(t, a));
    o.checked.push_back(check_solution(p, o.solutions.back()));
  }
  return true;
}

PipelineReport start_report(const Problem& p, Mode requested) {
  PipelineReport report;
  report.problem = p.name;
  report.requested = requested;
  report.mode = requested;
  report.fragment = classify_fragment(p);
  return report;
}

}  // namespace

PipelineReport run_lazy(const Problem& p, const RunOptions& options) {
  const auto start = Clock::now();
  PipelineReport report = start_report(p, Mode::Lazy);
  common_queries(p, options, report);
  if (!report.fragment.equational) {
    report.seconds = since(start);
    return report;
  }
  for (TemplateKind k : options.templates) {
    const auto t0 = Clock::now();
    TemplateOutcome o;
    o.kind = k;
    const bool solved = solve_template(p, o);
    if (solved && !o.solved->is_bottom()) {
      const auto query = emit_uniqueness(p, k, *o.solved);
      // Several templates may each produce a uniqueness query.
      const std::string name = options.all_templates
                                   ? p.name + "." + std::string(template_name(k)) + ".unique.smt2"
                                   : query->file_name();
      write_file(report, options, name, query->text);
      if (auto r = dispatch(query->text, SolverInput::Smt2, options.solvers)) {
        // The solved form holds every solution within the template, so any
        // solution it misses lies outside the template.
        if (r->answer == SolverAnswer::Unsat) o.status = TemplateStatus::Proven;
        if (r->answer == SolverAnswer::Sat) o.status = TemplateStatus::Disproven;
        o.external.push_back(std::move(*r));
      }
    }
    o.seconds = since(t0);
    const bool nonempty = solved && !o.solved->is_bottom();
    const bool verified = o.status == TemplateStatus::Proven;
    const TemplateStatus o_status = o.status;
    report.templates.push_back(std::move(o));
    if (nonempty && (!report.selected || (verified && !report.verified))) {
      report.selected = k;
      report.verified = verified;
    }
    // A solver counter-example to uniqueness means the solved form is incomplete.
    if (nonempty && !options.all_templates && o_status != TemplateStatus::Disproven) break;
  }
  report.seconds = since(start);
  return report;
}

PipelineReport run_eager(const Problem& p, const RunOptions& options) {
  if (options.solvers.solvers.empty()) {
    PipelineReport report = run_lazy(p, options);
    report.requested = Mode::Eager;
    return report;
  }
  const auto start = Clock::now();
  PipelineReport report = start_report(p, Mode::Eager);
  common_queries(p, options, report);
  const bool eligible = !uniteq_ineligibility(p);
  for (TemplateKind k : options.templates) {
    const auto t0 = Clock::now();
    TemplateOutcome o;
    o.kind = k;
    bool disproven = false;
    for (Variant v : {Variant::First, Variant::Second}) {
      const Smt2Query q = emit_template_verification(p, k, v);
      write_file(report, options, q.file_name(), q.text);
      if (o.status == TemplateStatus::Proven) continue;
      auto r = dispatch(q.text, SolverInput::Smt2, options.solvers);
      if (is(r, SolverAnswer::Unsat)) o.status = TemplateStatus::Proven;
      if (is(r, SolverAnswer::Sat)) disproven = true;
      if (r) o.external.push_back(std::move(*r));
    }
    if (eligible && o.status != TemplateStatus::Proven && options.solvers.has(SolverInput::UnitEq)) {
      // A ring-level counter model says nothing about the reals, so only proofs count.
      auto r = dispatch(emit_uniteq(p, k).tptp(), SolverInput::UnitEq, options.solvers);
      if (is(r, SolverAnswer::Unsat)) o.status = TemplateStatus::Proven;
      if (r) o.external.push_back(std::move(*r));
    }
    if (o.status != TemplateStatus::Proven && disproven) o.status = TemplateStatus::Disproven;

    const bool proven = o.status == TemplateStatus::Proven;
    if (proven && report.fragment.equational && solve_template(p, o) && !report.selected) {
      report.selected = k;
      report.verified = true;
    }
    o.seconds = since(t0);
    report.templates.push_back(std::move(o));
    if (proven && report.fragment.equational && !options.all_templates) break;
  }
  report.seconds = since(start);
  return report;
}

PipelineReport run(const Problem& p, const RunOptions& options) {
  return options.mode == Mode::Eager ? run_eager(p, options) : run_lazy(p, options);
}

std::vector<PipelineReport> run_all(std::span<const Problem> problems, const RunOptions& options, unsigned jobs) {
  std::vector<PipelineReport> reports(problems.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, std::max<std::size_t>(problems.size(), 1));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < problems.size(); i = next++) {
      try {
        reports[i] = run(problems[i], options);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::jthread> workers;
  for (unsigned j = 1; j < jobs; ++j) workers.emplace_back(work);
  work();
  workers.clear();
  if (failure) std::rethrow_exception(failure);
  return reports;
}

}  // namespace feq
