#include "qser/cli.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <string_view>

#include <CLI11.hpp>

#include "qser/report_io.hpp"
#include "qser/rr_series.hpp"
#include "qser/verify.hpp"

namespace qser::cli {

namespace {

using VerifyFn = std::function<Report(std::size_t)>;

const std::vector<std::pair<std::string, VerifyFn>>& verify_targets() {
  static const std::vector<std::pair<std::string, VerifyFn>> targets{
      {"B20", verify_identity_B20},
      {"R5", verify_identity_R5},
      {"A_full", [](std::size_t p) { return verify_genfun(GenFun::A_full, p); }},
      {"B_full", [](std::size_t p) { return verify_genfun(GenFun::B_full, p); }},
      {"D_full", [](std::size_t p) { return verify_genfun(GenFun::D_full, p); }},
      {"dissect-A0",
       [](std::size_t p) { return verify_dissection(Dissection::A0, p); }},
      {"dissect-B0",
       [](std::size_t p) { return verify_dissection(Dissection::B0, p); }},
      {"dissect-D1",
       [](std::size_t p) { return verify_dissection(Dissection::D1, p); }},
      {"dissect-C0",
       [](std::size_t p) { return verify_dissection(Dissection::C0, p); }},
  };
  return targets;
}

struct PatternScan {
  NamedSeries series;
  SignPattern (*pattern)();
};

const std::map<std::string, PatternScan, std::less<>>& pattern_scans() {
  static const std::map<std::string, PatternScan, std::less<>> scans{
      {"richmond-c", {NamedSeries::c, richmond_c_pattern}},
      {"richmond-d", {NamedSeries::d, richmond_d_pattern}},
      {"thm2", {NamedSeries::A, theorem2_pattern}},
      {"thm3", {NamedSeries::B, theorem3_pattern}},
      {"thm4", {NamedSeries::C, theorem4_pattern}},
      {"thm5", {NamedSeries::D, theorem5_pattern}},
  };
  return scans;
}

// A(5n) < 0 and B(5n) < 0 fail exactly at n = 0; D(5n+1) > 0 holds.
bool conjecture13_as_expected(const Report& r) {
  const std::vector<std::pair<std::string, std::vector<std::size_t>>> want{
      {"A", {0}}, {"B", {0}}, {"D", {}}};
  return r.status == Status::Falsified && r.falsified == want;
}

struct Options {
  std::string target;
  long long count = 0;
  std::string format = "table";
};

OutputFormat format_or_throw(const std::string& text) {
  auto fmt = parse_output_format(text);
  if (!fmt) throw CLI::ValidationError("--format", "unknown format " + text);
  return *fmt;
}

int cmd_expand(const Options& o, std::ostream& out, std::ostream& err) {
  auto name = parse_named_series(o.target);
  if (!name) {
    err << "qser expand: unknown series '" << o.target << "'\n";
    return kExitUsage;
  }
  if (o.count < 1) {
    err << "qser expand: --order must be >= 1\n";
    return kExitUsage;
  }
  const auto fmt = format_or_throw(o.format);
  const auto order = static_cast<std::size_t>(o.count);
  const Series s = (*name == NamedSeries::G_sum || *name == NamedSeries::H_sum)
                       ? build_sum_form(*name, order)
                       : build(*name, order);
  write_coefficients(out, o.target, s, fmt);
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto& targets = verify_targets();
  const bool all = o.target == "all";
  auto it = std::find_if(targets.begin(), targets.end(),
                         [&](const auto& t) { return t.first == o.target; });
  if (!all && it == targets.end()) {
    err << "qser verify: unknown target '" << o.target << "'\n";
    return kExitUsage;
  }
  if (o.count < 1) {
    err << "qser verify: --order must be >= 1\n";
    return kExitUsage;
  }
  const auto fmt = format_or_throw(o.format);
  const auto order = static_cast<std::size_t>(o.count);

  std::vector<Report> reports;
  if (all) {
    for (const auto& [label, fn] : targets) reports.push_back(fn(order));
  } else {
    reports.push_back(it->second(order));
  }
  write_reports(out, reports, fmt);

  int code = kExitOk;
  for (const auto& r : reports) {
    if (r.status != Status::Verified) {
      err << "qser verify: " << r.subject << " diverges at q^"
          << r.first_divergence->index << '\n';
      code = kExitMismatch;
    }
  }
  return code;
}

int cmd_scan(const Options& o, std::ostream& out, std::ostream& err) {
  const auto& scans = pattern_scans();
  const auto it = scans.find(o.target);
  const bool known = it != scans.end() || o.target == "conjecture13" ||
                     o.target == "asymptotic-c";
  if (!known) {
    err << "qser scan: unknown target '" << o.target << "'\n";
    return kExitUsage;
  }
  if (o.count < 0) {
    err << "qser scan: --n-max must be >= 0\n";
    return kExitUsage;
  }
  const auto fmt = format_or_throw(o.format);
  const auto n_max = static_cast<std::size_t>(o.count);

  Report r;
  bool expected = false;
  if (o.target == "conjecture13") {
    r = check_conjecture13(n_max);
    expected = conjecture13_as_expected(r);
  } else if (o.target == "asymptotic-c") {
    r = scan_asymptotic_c(n_max);
    expected = r.status == Status::Verified;
  } else {
    r = scan_signs(it->second.series, it->second.pattern(), n_max);
    r.subject = o.target;
    expected = r.status == Status::Verified;
  }
  write_reports(out, std::span<const Report>(&r, 1), fmt);
  if (!expected) {
    err << "qser scan: " << o.target << " did not match the expected outcome ("
        << r.violation_count << " violations)\n";
    return kExitMismatch;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact q-series engine for the Rogers-Ramanujan continued fraction",
               "qser"};
  app.require_subcommand(1);

  Options expand_opts, verify_opts, scan_opts;
  expand_opts.count = kDefaultExpandOrder;
  verify_opts.count = kDefaultVerifyOrder;
  scan_opts.count = kDefaultScanNMax;

  const std::array<std::string, 3> formats{"table", "csv", "json"};
  auto add_format = [&](CLI::App* sub, Options& o) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember(formats));
  };

  auto* expand = app.add_subcommand("expand", "Print coefficients of a named series");
  expand->add_option("name", expand_opts.target, "Series name")->required();
  expand->add_option("--order", expand_opts.count,
                     "Number of coefficients (q^0 .. q^{N-1})");
  add_format(expand, expand_opts);
  // Short form: qser expand d 4 csv
  expand->add_option("order_pos", expand_opts.count)->group("");
  expand->add_option("format_pos", expand_opts.format)
      ->check(CLI::IsMember(formats))
      ->group("");

  auto* verify = app.add_subcommand("verify", "Check an identity to a finite order");
  verify->add_option("target", verify_opts.target, "Identity name or 'all'")
      ->required();
  verify->add_option("--order", verify_opts.count, "Truncation order");
  add_format(verify, verify_opts);

  auto* scan = app.add_subcommand("scan", "Scan coefficient sign patterns");
  scan->add_option("target", scan_opts.target, "Scan name")->required();
  scan->add_option("--n-max", scan_opts.count, "Largest index checked");
  add_format(scan, scan_opts);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (expand->parsed()) return cmd_expand(expand_opts, out, err);
    if (verify->parsed()) return cmd_verify(verify_opts, out, err);
    return cmd_scan(scan_opts, out, err);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
}

}  // namespace qser::cli
