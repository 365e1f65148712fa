#include "qser/report_io.hpp"

#include <algorithm>
#include <iomanip>
#include <string>

namespace qser {

using nlohmann::ordered_json;

std::optional<OutputFormat> parse_output_format(std::string_view text) {
  if (text == "table") return OutputFormat::Table;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  return std::nullopt;
}

ordered_json coefficients_json(std::string_view name, const Series& s) {
  ordered_json coeffs = ordered_json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(c.get_str());
  ordered_json j;
  j["name"] = name;
  j["coeffs"] = std::move(coeffs);
  return j;
}

ordered_json report_json(const Report& r) {
  ordered_json j;
  j["subject"] = r.subject;
  j["order_checked"] = r.order_checked;
  j["status"] = to_string(r.status);
  if (r.first_divergence) {
    j["first_divergence"] = {{"index", r.first_divergence->index},
                             {"lhs", r.first_divergence->lhs.get_str()},
                             {"rhs", r.first_divergence->rhs.get_str()}};
  } else {
    j["first_divergence"] = nullptr;
  }
  ordered_json violations = ordered_json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"index", v.index},
                          {"value", v.value.get_str()},
                          {"expected", to_string(v.expected)}});
  }
  j["violations"] = std::move(violations);
  if (!r.falsified.empty()) {
    ordered_json parts = ordered_json::object();
    for (const auto& [label, at] : r.falsified) parts[label] = at;
    j["falsified"] = std::move(parts);
  }
  return j;
}

void write_coefficients(std::ostream& os, std::string_view name,
                        const Series& s, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Json:
      os << coefficients_json(name, s).dump() << '\n';
      return;
    case OutputFormat::Csv:
      os << "n,coefficient\n";
      for (std::size_t n = 0; n < s.prec(); ++n) {
        os << n << ',' << s[n].get_str() << '\n';
      }
      return;
    case OutputFormat::Table: {
      const int width = static_cast<int>(
          std::max<std::size_t>(1, std::to_string(s.prec()).size()));
      os << std::setw(width) << "n" << "  coefficient\n";
      for (std::size_t n = 0; n < s.prec(); ++n) {
        os << std::setw(width) << n << "  " << s[n].get_str() << '\n';
      }
      return;
    }
  }
}

namespace {

void write_table(std::ostream& os, const Report& r) {
  os << "subject        " << r.subject << '\n'
     << "order_checked  " << r.order_checked << '\n'
     << "status         " << to_string(r.status) << '\n';
  if (r.first_divergence) {
    os << "divergence     index " << r.first_divergence->index << ": lhs "
       << r.first_divergence->lhs.get_str() << ", rhs "
       << r.first_divergence->rhs.get_str() << '\n';
  }
  for (const auto& [label, at] : r.falsified) {
    os << "falsified " << label << "    [";
    for (std::size_t i = 0; i < at.size(); ++i) os << (i ? "," : "") << at[i];
    os << "]\n";
  }
  if (r.violation_count > 0) {
    os << "violations     " << r.violation_count;
    if (r.violations.size() < r.violation_count) {
      os << " (showing " << r.violations.size() << ")";
    }
    os << '\n';
    for (const auto& v : r.violations) {
      os << "  n=" << v.index << "  value " << v.value.get_str()
         << "  expected " << to_string(v.expected) << '\n';
    }
  }
}

}  // namespace

void write_reports(std::ostream& os, std::span<const Report> reports,
                   OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Json: {
      if (reports.size() == 1) {
        os << report_json(reports.front()).dump() << '\n';
        return;
      }
      ordered_json arr = ordered_json::array();
      for (const auto& r : reports) arr.push_back(report_json(r));
      os << arr.dump() << '\n';
      return;
    }
    case OutputFormat::Csv:
      os << "subject,order_checked,status,divergence_index,violation_count\n";
      for (const auto& r : reports) {
        os << r.subject << ',' << r.order_checked << ',' << to_string(r.status)
           << ',';
        if (r.first_divergence) os << r.first_divergence->index;
        os << ',' << r.violation_count << '\n';
      }
      return;
    case OutputFormat::Table:
      for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i > 0) os << '\n';
        write_table(os, reports[i]);
      }
      return;
  }
}

}  // namespace qser
