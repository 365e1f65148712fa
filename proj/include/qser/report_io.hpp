#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string_view>

#include <json.hpp>

#include "qser/series.hpp"
#include "qser/verify.hpp"

namespace qser {

enum class OutputFormat { Table, Csv, Json };

std::optional<OutputFormat> parse_output_format(std::string_view text);

/// {"name": ..., "coeffs": ["1", ...]}; coefficients are decimal strings.
nlohmann::ordered_json coefficients_json(std::string_view name,
                                         const Series& s);
nlohmann::ordered_json report_json(const Report& r);

void write_coefficients(std::ostream& os, std::string_view name,
                        const Series& s, OutputFormat fmt);
/// Several reports in json become one array document.
void write_reports(std::ostream& os, std::span<const Report> reports,
                   OutputFormat fmt);

}  // namespace qser
