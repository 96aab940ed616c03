// Copyright (C) 2026 The mtcverify Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end over the C interface.

#include <cmath>
#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "mtcv/mtcv.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct DatasetDeleter {
  void operator()(mtcv_dataset* p) const { mtcv_dataset_free(p); }
};
struct ReportDeleter {
  void operator()(mtcv_report* p) const { mtcv_report_free(p); }
};
struct StringDeleter {
  void operator()(char* p) const { mtcv_string_free(p); }
};
using Dataset = std::unique_ptr<mtcv_dataset, DatasetDeleter>;
using Report = std::unique_ptr<mtcv_report, ReportDeleter>;
using OwnedString = std::unique_ptr<char, StringDeleter>;

// Thrown to leave a subcommand with a given exit status after printing.
struct Exit {
  int code;
};

[[noreturn]] void die(int code, const std::string& message) {
  fmt::print(stderr, "mtcv: {}\n", message);
  throw Exit{code};
}

void check(mtcv_status status, int code = kExitUsage) {
  if (status != MTCV_OK) die(code, mtcv_last_error());
}

Dataset open_source(const std::string& source) {
  mtcv_dataset* raw = nullptr;
  constexpr std::string_view prefix = "catalog:";
  const mtcv_status status =
      source.rfind(prefix, 0) == 0
          ? mtcv_dataset_from_catalog(source.c_str() + prefix.size(), &raw)
          : mtcv_dataset_load_file(source.c_str(), &raw);
  // Data that parse but fail validation are a failed check, not a usage error.
  check(status, status == MTCV_ERR_VALIDATION ? kExitFail : kExitUsage);
  return Dataset(raw);
}

int rank_of(const mtcv_dataset* set) {
  int m = 0;
  check(mtcv_dataset_rank(set, &m));
  return m;
}

std::string label_name(const mtcv_dataset* set, int a) {
  const char* name = nullptr;
  check(mtcv_dataset_label_name(set, a, &name));
  return name;
}

std::string rational(long long num, long long den) {
  return den == 1 ? std::to_string(num) : fmt::format("{}/{}", num, den);
}

std::optional<std::pair<double, double>> parse_tau(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return std::nullopt;
  try {
    std::size_t used_re = 0;
    std::size_t used_im = 0;
    const std::string re_text = text.substr(0, comma);
    const std::string im_text = text.substr(comma + 1);
    const double re = std::stod(re_text, &used_re);
    const double im = std::stod(im_text, &used_im);
    if (used_re != re_text.size() || used_im != im_text.size()) return std::nullopt;
    return std::pair{re, im};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

int cmd_catalog(const std::string& name) {
  if (name.empty()) {
    for (size_t i = 0; i < mtcv_catalog_count(); ++i) fmt::print("{}\n", mtcv_catalog_name(i));
    return 0;
  }
  mtcv_dataset* raw = nullptr;
  check(mtcv_dataset_from_catalog(name.c_str(), &raw));
  Dataset set(raw);
  char* text = nullptr;
  check(mtcv_dataset_export(set.get(), &text));
  OwnedString owned(text);
  fmt::print("{}", owned.get());
  return 0;
}

int cmd_show(const std::string& source) {
  Dataset set = open_source(source);
  const int m = rank_of(set.get());
  const char* name = nullptr;
  check(mtcv_dataset_name(set.get(), &name));
  long long cn = 0;
  long long cd = 1;
  check(mtcv_dataset_c(set.get(), &cn, &cd));
  int unit = 0;
  check(mtcv_dataset_unit(set.get(), &unit));
  int has_fr = 0;
  int has_chars = 0;
  check(mtcv_dataset_has_fr(set.get(), &has_fr));
  check(mtcv_dataset_has_chars(set.get(), &has_chars));
  double see = 0.0;
  double ignored = 0.0;
  check(mtcv_dataset_s_entry(set.get(), unit, unit, &see, &ignored));

  fmt::print("name: {}\nrank: {}\nc: {}\n", *name ? name : "(unnamed)", m, rational(cn, cd));
  fmt::print("{:<10} {:<10} {:<10} {}\n", "label", "dual", "h", "d");
  for (int a = 0; a < m; ++a) {
    int dual = 0;
    long long hn = 0;
    long long hd = 1;
    double re = 0.0;
    double im = 0.0;
    check(mtcv_dataset_dual(set.get(), a, &dual));
    check(mtcv_dataset_h(set.get(), a, &hn, &hd));
    check(mtcv_dataset_s_entry(set.get(), unit, a, &re, &im));
    fmt::print("{:<10} {:<10} {:<10} {:.12g}\n", label_name(set.get(), a),
               label_name(set.get(), dual), rational(hn, hd), re / see);
  }
  fmt::print("F/R data: {}\ncharacters: {}\n", has_fr ? "yes" : "no", has_chars ? "yes" : "no");
  return 0;
}

int cmd_verify(const std::string& source, const std::string& checks, double tol, bool json,
               int order, const std::string& tau_text) {
  mtcv_verify_options opts;
  mtcv_verify_options_init(&opts);
  opts.eps = tol;
  opts.order = order;
  if (!tau_text.empty()) {
    const auto tau = parse_tau(tau_text);
    if (!tau) die(kExitUsage, fmt::format("--tau expects re,im, got '{}'", tau_text));
    opts.tau_re = tau->first;
    opts.tau_im = tau->second;
  }
  Dataset set = open_source(source);
  mtcv_report* raw = nullptr;
  check(mtcv_verify(set.get(), checks.c_str(), &opts, &raw));
  Report report(raw);
  char* text = nullptr;
  check(json ? mtcv_report_json(report.get(), source.c_str(), &text)
             : mtcv_report_text(report.get(), &text));
  OwnedString owned(text);
  fmt::print("{}", owned.get());
  return mtcv_report_exit_code(report.get());
}

int cmd_verlinde(const std::string& source) {
  Dataset set = open_source(source);
  const int m = rank_of(set.get());
  const size_t n = static_cast<size_t>(m) * m * m;
  std::vector<double> re(n);
  std::vector<double> im(n);
  check(mtcv_verlinde(set.get(), re.data(), im.data(), n), kExitFail);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        const size_t i = (static_cast<size_t>(a) * m + b) * m + c;
        int stored = 0;
        check(mtcv_dataset_fusion(set.get(), a, b, c, &stored));
        const long rounded = std::lround(re[i]);
        if (rounded == 0 && stored == 0) continue;
        fmt::print("N {} {} {} = {:.12f}{:+.1e}i  stored {}\n", label_name(set.get(), a),
                   label_name(set.get(), b), label_name(set.get(), c), re[i], im[i], stored);
      }
  return 0;
}

int cmd_chars(const std::string& source, const std::string& label, int order,
              const std::string& tau_text) {
  Dataset set = open_source(source);
  int has = 0;
  check(mtcv_dataset_has_chars(set.get(), &has));
  if (!has) die(kExitFail, "no character data");
  std::optional<std::pair<double, double>> tau;
  if (!tau_text.empty()) {
    tau = parse_tau(tau_text);
    if (!tau) die(kExitUsage, fmt::format("--tau expects re,im, got '{}'", tau_text));
  }
  const int m = rank_of(set.get());
  bool found = label.empty();
  for (int a = 0; a < m; ++a) {
    const std::string name = label_name(set.get(), a);
    if (!label.empty() && name != label) continue;
    found = true;
    long long an = 0;
    long long ad = 1;
    char* coeffs = nullptr;
    check(mtcv_character_series(set.get(), a, order, &an, &ad, &coeffs));
    OwnedString owned(coeffs);
    fmt::print("chi[{}] alpha={} coeffs: {}\n", name, rational(an, ad), owned.get());
    if (tau) {
      double re = 0.0;
      double im = 0.0;
      check(mtcv_character_eval(set.get(), a, order, tau->first, tau->second, &re, &im));
      fmt::print("chi[{}]({},{}) = {:.15g}{:+.15g}i\n", name, tau->first, tau->second, re, im);
    }
  }
  if (!found) die(kExitUsage, fmt::format("unknown label '{}'", label));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify modular tensor category data"};
  app.require_subcommand(1);
  app.set_version_flag("--version", mtcv_version());

  std::string catalog_name;
  auto* catalog = app.add_subcommand("catalog", "List catalog entries or print one as a data file");
  catalog->add_option("name", catalog_name, "Entry to print");

  std::string source;
  auto* show = app.add_subcommand("show", "Summarize a data set");
  show->add_option("source", source, "Data file or catalog:<name>")->required();

  std::string checks = "all";
  double tol = 1e-9;
  bool json = false;
  int order = 400;
  std::string tau;
  auto* verify = app.add_subcommand("verify", "Run verification checks");
  verify->add_option("source", source, "Data file or catalog:<name>")->required();
  verify->add_option("--checks", checks, "'all' or a comma-separated list")->capture_default_str();
  verify->add_option("--tol", tol, "Residual tolerance")->capture_default_str();
  verify->add_flag("--json", json, "Print a JSON report");
  verify->add_option("--order", order, "Character truncation order")->capture_default_str();
  verify->add_option("--tau", tau, "Character evaluation point as re,im (default 0,2)");

  auto* verlinde = app.add_subcommand("verlinde", "Print the Verlinde fusion tensor");
  verlinde->add_option("source", source, "Data file or catalog:<name>")->required();

  std::string label;
  int series_order = 10;
  auto* chars = app.add_subcommand("chars", "Print or evaluate character q-series");
  chars->add_option("source", source, "Data file or catalog:<name>")->required();
  chars->add_option("--label", label, "Only this label");
  chars->add_option("--order", series_order, "Number of coefficients")->capture_default_str();
  chars->add_option("--tau", tau, "Evaluate at re,im");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (catalog->parsed()) return cmd_catalog(catalog_name);
    if (show->parsed()) return cmd_show(source);
    if (verify->parsed()) return cmd_verify(source, checks, tol, json, order, tau);
    if (verlinde->parsed()) return cmd_verlinde(source);
    if (chars->parsed()) return cmd_chars(source, label, series_order, tau);
  } catch (const Exit& e) {
    return e.code;
  }
  return kExitUsage;
}
