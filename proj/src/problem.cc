#include "feq/problem.h"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "feq/error.h"
#include "feq/parser.h"

namespace feq {

Formula Equation::to_formula() const { return Formula::forall(vars, Formula::equation(lhs, rhs)); }

Formula SolutionCandidate::identity() const {
  return Formula::forall({var}, Formula::equation(Expr::apply(Expr::variable(var)), body));
}

std::vector<std::string> Problem::variables() const {
  std::set<std::string> all;
  for (const auto& eq : equations) all.insert(eq.vars.begin(), eq.vars.end());
  return {all.begin(), all.end()};
}

std::vector<Formula> Problem::assertions() const {
  std::vector<Formula> out;
  for (const auto& eq : equations) out.push_back(eq.to_formula());
  for (const auto& c : side_conditions) out.push_back(side_condition_formula(c));
  return out;
}

namespace {

constexpr std::array<std::pair<std::string_view, Relation>, 4> kMonotonicity{{
    {"increasing", Relation::Lt},
    {"decreasing", Relation::Gt},
    {"nondecreasing", Relation::Le},
    {"nonincreasing", Relation::Ge},
}};

}  // namespace

bool is_known_side_condition(std::string_view marker) {
  return std::any_of(kMonotonicity.begin(), kMonotonicity.end(),
                     [&](const auto& entry) { return entry.first == marker; });
}

Formula side_condition_formula(const SideCondition& condition) {
  if (condition.is_raw()) return Formula::raw(condition.text);
  for (const auto& [marker, rel] : kMonotonicity) {
    if (marker != condition.text) continue;
    const Expr x = Expr::variable("x"), y = Expr::variable("y");
    return Formula::forall({"x", "y"},
                           Formula::implication(Formula::atom(Relation::Lt, x, y),
                                                Formula::atom(rel, Expr::apply(x), Expr::apply(y))));
  }
  throw UnknownIdentifier("unknown side condition '" + condition.text + "'");
}

Fragment classify_fragment(const Problem& p) {
  if (p.domain != Domain::Real) return {false, "integer domain"};
  for (const auto& c : p.side_conditions) {
    if (is_known_side_condition(c.text)) return {false, "order side-condition"};
    return {false, "non-equational side-condition"};
  }
  return {true, {}};
}

Problem load_problem_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_problem(buffer.str());
  } catch (const Error& e) {
    throw Error(path.string() + ":" + e.what());
  }
}

std::filesystem::path default_corpus_dir() {
  if (const char* env = std::getenv("FEQ_CORPUS"); env != nullptr && *env != '\0') return env;
  return FEQ_CORPUS_DIR;
}

std::vector<Problem> load_corpus(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw Error("corpus directory not found: " + dir.string());
  std::vector<Problem> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".feq") continue;
    Problem p = load_problem_file(entry.path());
    if (p.name != entry.path().stem().string())
      throw Error(entry.path().string() + ": declares problem '" + p.name + "', expected '" +
                  entry.path().stem().string() + "'");
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), [](const Problem& a, const Problem& b) { return a.name < b.name; });
  return out;
}

const Problem* find_problem(std::span<const Problem> corpus, std::string_view name) {
  for (const auto& p : corpus) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

}  // namespace feq
