#include "feq/report.h"

#include <algorithm>
#include <sstream>
#include <vector>

namespace feq {

std::string_view status_symbol(TemplateStatus s) {
  switch (s) {
    case TemplateStatus::Proven: return "✓";
    case TemplateStatus::Disproven: return "×";
    case TemplateStatus::Unknown: return "-";
  }
  return "-";
}

namespace {

using Row = std::vector<std::string>;

constexpr TemplateKind kColumns[] = {TemplateKind::Constant, TemplateKind::MonomialLinear, TemplateKind::Linear,
                                     TemplateKind::MonomialQuadratic, TemplateKind::Quadratic};

// Code points, which is the display width for everything printed here.
std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render(const std::vector<Row>& rows, ReportFormat format) {
  std::ostringstream out;
  if (format == ReportFormat::Csv) {
    for (const Row& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
      out << "\n";
    }
    return out.str();
  }
  std::vector<std::size_t> widths(rows.front().size(), 0);
  for (const Row& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], width(row[i]));
  }
  auto line = [&](const Row& row) {
    std::string text;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) text += " | ";
      text += row[i];
      if (i + 1 < row.size()) text += std::string(widths[i] - width(row[i]), ' ');
    }
    out << text << "\n";
  };
  line(rows.front());
  std::string rule;
  for (std::size_t i = 0; i < widths.size(); ++i) rule += (i ? "-+-" : "") + std::string(widths[i], '-');
  out << rule << "\n";
  for (std::size_t r = 1; r < rows.size(); ++r) line(rows[r]);
  return out.str();
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : "; ") + s;
  return out;
}

std::string answer_symbol(const std::optional<SolveResult>& r) {
  if (!r) return "-";
  if (r->answer == SolverAnswer::Unsat) return "✓";
  if (r->answer == SolverAnswer::Sat) return "×";
  return "-";
}

std::string solutions_cell(const PipelineReport& r) {
  if (!r.fragment.equational) return "unsupported: " + r.fragment.reason;
  if (!r.selected) {
    std::vector<std::string> failures;
    for (const auto& o : r.templates) {
      if (!o.failure.empty()) failures.push_back(std::string(template_shape(o.kind)) + ": " + o.failure);
    }
    return failures.empty() ? "none found" : "none found (" + join(failures) + ")";
  }
  std::vector<std::string> items;
  for (const auto& s : r.solutions()) items.push_back(describe(s));
  if (items.empty()) items.push_back("no solution");
  return std::string(template_shape(*r.selected)) + ": " + join(items);
}

}  // namespace

std::string render_template_table(std::span<const PipelineReport> reports, ReportFormat format) {
  std::vector<Row> rows;
  Row header{"problem"};
  for (TemplateKind k : kColumns) header.emplace_back(template_shape(k));
  header.insert(header.end(), {"solutions", "verified"});
  rows.push_back(std::move(header));
  for (const PipelineReport& r : reports) {
    Row row{r.problem};
    for (TemplateKind k : kColumns) {
      const TemplateOutcome* o = r.outcome(k);
      row.emplace_back(status_symbol(o ? o->status : TemplateStatus::Unknown));
    }
    row.push_back(solutions_cell(r));
    row.push_back(r.verified ? "yes" : "no");
    rows.push_back(std::move(row));
  }
  return render(rows, format);
}

std::string render_check_table(std::span<const PipelineReport> reports, ReportFormat format) {
  std::vector<Row> rows{{"problem", "candidates", "check", "prove"}};
  for (const PipelineReport& r : reports) {
    std::vector<std::string> candidates;
    std::string check = r.checks.empty() ? "-" : "✓";
    for (const CandidateCheck& c : r.checks) {
      candidates.push_back(describe(c.candidate));
      std::string one = c.holds ? (*c.holds ? "✓" : "×") : answer_symbol(c.external);
      if (one == "×") check = "×";
      if (one == "-" && check == "✓") check = "-";
    }
    rows.push_back({r.problem, join(candidates), check, answer_symbol(r.prove)});
  }
  return render(rows, format);
}

std::string render_report(std::span<const PipelineReport> reports, ReportFormat format) {
  return render_template_table(reports, format) + "\n" + render_check_table(reports, format);
}

}  // namespace feq
