#include "feq/report.h"

#include <gtest/gtest.h>

#include <sstream>

#include "feq/parser.h"

namespace feq {
namespace {

const std::string stubs = FEQ_STUB_DIR;

const std::vector<Problem>& corpus() {
  static const std::vector<Problem> problems = load_corpus();
  return problems;
}
const Problem& problem(const char* name) { return *find_problem(corpus(), name); }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> cells(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, sep)) {
    const auto b = cell.find_first_not_of(' ');
    const auto e = cell.find_last_not_of(' ');
    out.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
  }
  return out;
}

PipelineReport with_statuses(const std::string& name, std::vector<std::pair<TemplateKind, TemplateStatus>> statuses) {
  PipelineReport r;
  r.problem = name;
  r.fragment.equational = true;
  for (auto [k, s] : statuses) {
    TemplateOutcome o;
    o.kind = k;
    o.status = s;
    r.templates.push_back(o);
  }
  return r;
}

TEST(Report, Symbols) {
  EXPECT_EQ(status_symbol(TemplateStatus::Proven), "✓");
  EXPECT_EQ(status_symbol(TemplateStatus::Disproven), "×");
  EXPECT_EQ(status_symbol(TemplateStatus::Unknown), "-");
}

TEST(Report, EmptyInputHasHeadersOnly) {
  const auto text = lines(render_template_table({}, ReportFormat::Text));
  ASSERT_EQ(text.size(), 2u);
  EXPECT_EQ(cells(text[0], '|'),
            (std::vector<std::string>{"problem", "c", "ax", "ax+b", "ax^2", "ax^2+bx+c", "solutions", "verified"}));
  EXPECT_EQ(lines(render_template_table({}, ReportFormat::Csv)).size(), 1u);
  EXPECT_EQ(lines(render_check_table({}, ReportFormat::Csv)),
            (std::vector<std::string>{"problem,candidates,check,prove"}));
}

TEST(Report, U24AllProven) {
  std::vector<std::pair<TemplateKind, TemplateStatus>> all;
  for (TemplateKind k : template_order()) all.emplace_back(k, TemplateStatus::Proven);
  const std::vector<PipelineReport> reports{with_statuses("U24", all)};
  const auto row = cells(lines(render_template_table(reports, ReportFormat::Csv))[1], ',');
  EXPECT_EQ(std::vector<std::string>(row.begin(), row.begin() + 6),
            (std::vector<std::string>{"U24", "✓", "✓", "✓", "✓", "✓"}));
}

// Template verification with a stub that proves exactly the two templates containing x + b.
TEST(Report, U3RowFromEagerRun) {
  RunOptions o;
  o.mode = Mode::Eager;
  o.all_templates = true;
  SolverCommand c;
  c.name = "stub";
  c.argv = {stubs + "/pattern.sh", "form ax+b (", "form ax^2+bx+c (", "{file}"};
  o.solvers.solvers.push_back(c);
  const std::vector<PipelineReport> reports{run(problem("U3"), o)};
  const auto row = cells(lines(render_template_table(reports, ReportFormat::Csv))[1], ',');
  EXPECT_EQ(std::vector<std::string>(row.begin(), row.begin() + 6),
            (std::vector<std::string>{"U3", "×", "×", "✓", "×", "✓"}));
  EXPECT_EQ(row.back(), "yes");
}

TEST(Report, TextColumnsAlign) {
  const std::vector<PipelineReport> reports = run_all(corpus(), RunOptions{});
  const auto text = lines(render_template_table(reports, ReportFormat::Text));
  ASSERT_EQ(text.size(), corpus().size() + 2);
  // Separator columns, counted in code points.
  auto separators = [](const std::string& s) {
    std::vector<std::size_t> at;
    std::size_t n = 0;
    for (unsigned char ch : s) {
      if ((ch & 0xC0) == 0x80) continue;
      if (ch == '|') at.push_back(n);
      ++n;
    }
    return at;
  };
  for (std::size_t i = 2; i < text.size(); ++i) EXPECT_EQ(separators(text[i]), separators(text[0])) << text[i];
}

TEST(Report, CheckTable) {
  const std::vector<PipelineReport> reports = run_all(corpus(), RunOptions{});
  const auto rows = lines(render_check_table(reports, ReportFormat::Csv));
  ASSERT_EQ(rows.size(), corpus().size() + 1);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const bool u2 = rows[i].rfind("U2,", 0) == 0;
    EXPECT_NE(rows[i].find(u2 ? ",-,-" : ",✓,-"), std::string::npos) << rows[i];
  }
  EXPECT_NE(render_check_table(reports, ReportFormat::Csv).find("U3,\"f(x) = x + b, b ∈ ℝ\",✓,-"), std::string::npos);
}

TEST(Report, UnsupportedAndFailureCells) {
  const std::vector<PipelineReport> reports{run_lazy(problem("U2"), RunOptions{})};
  EXPECT_NE(render_template_table(reports, ReportFormat::Text).find("unsupported: order side-condition"),
            std::string::npos);
}

TEST(Report, Deterministic) {
  const std::vector<PipelineReport> a = run_all(corpus(), RunOptions{}, 3);
  const std::vector<PipelineReport> b = run_all(corpus(), RunOptions{}, 1);
  EXPECT_EQ(render_report(a, ReportFormat::Text), render_report(b, ReportFormat::Text));
  EXPECT_EQ(render_report(a, ReportFormat::Csv), render_report(b, ReportFormat::Csv));
}

}  // namespace
}  // namespace feq
