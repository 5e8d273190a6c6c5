#pragma once

#include <map>
#include <string>
#include <string_view>

#include "grm/verify.hpp"

namespace grm {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class ReportFormat { Json, Csv, Markdown };
std::optional<ReportFormat> parse_report_format(std::string_view text);

/// Extra key/value pairs recorded in the report header (the invoking flags).
using ReportConfig = std::map<std::string, std::string>;

std::string render_report(const VerificationReport& report, ReportFormat format, const ReportConfig& config = {});

}  // namespace grm
