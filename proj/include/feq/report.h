#pragma once

#include <span>
#include <string>
#include <string_view>

#include "feq/runner.h"

namespace feq {

enum class ReportFormat { Text, Csv };

/// ✓ proven, × disproven, - unknown or not attempted.
std::string_view status_symbol(TemplateStatus s);

/// One row per problem: status for each of the five templates, the solutions
/// read off the selected solved form, and whether they were verified.
std::string render_template_table(std::span<const PipelineReport> reports, ReportFormat format);

/// One row per problem: bundled candidates, the result of checking them and
/// the external prove answer.
std::string render_check_table(std::span<const PipelineReport> reports, ReportFormat format);

/// Both tables separated by an empty line.
std::string render_report(std::span<const PipelineReport> reports, ReportFormat format);

}  // namespace feq
