// Copyright (C) 2026 The mtcverify Authors
// SPDX-License-Identifier: Apache-2.0

#include "mtcv/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <limits>

#include <fmt/format.h>
#include <json.hpp>

#include "mtcv/characters.hpp"
#include "mtcv/fr_symbols.hpp"
#include "mtcv/fusion_modular.hpp"

namespace mtcv {

namespace {

constexpr std::string_view kNoFR = "skipped: no F/R data";
constexpr std::string_view kNoChars = "skipped: no character data";

VerificationReport only(const VerificationReport& full, std::string_view name) {
  VerificationReport out;
  for (const auto& r : full.entries())
    if (r.check_name == name) out.add(r.check_name, r.residual, r.tol, r.detail);
  return out;
}

// Runs one check; an empty skip reason means the check applies.
struct Plan {
  std::string skip;
  std::function<VerificationReport()> run;
};

Plan plan_for(const std::string& name, const ModularDataSet& set, const VerifyOptions& opt) {
  // Lambdas outlive this frame, so they capture pointers into set and opt.
  const FusionData* d = &set.data;
  const SMatrix* S = &set.S;
  const ToleranceConfig* tol = &opt.tol;
  const FRSymbols* fr = set.fr ? &*set.fr : nullptr;
  auto needs_fr = [fr](std::function<VerificationReport()> fn) {
    return fr ? Plan{{}, std::move(fn)} : Plan{std::string(kNoFR), {}};
  };

  if (name == "unit") return {{}, [=] { return validate(*d); }};
  if (name == "assoc") return {{}, [=] { return verify_fusion_axioms(*d); }};
  if (name == "symmetry")
    return {{}, [=] { return only(verify_s_properties(*S, d->unit(), *tol), "symmetry"); }};
  if (name == "unitrow")
    return {{}, [=] { return only(verify_s_properties(*S, d->unit(), *tol), "unitrow"); }};
  if (name == "diag") return {{}, [=] { return verify_diagonalization(*d, *S, *tol); }};
  if (name == "verlinde") return {{}, [=] { return verify_verlinde(*d, *S, *tol); }};
  if (name == "balancing") return {{}, [=] { return verify_balancing(*d, *S, *tol); }};
  if (name == "nondeg") return {{}, [=] { return verify_nondegeneracy(*d, *S, *tol); }};
  if (name == "pentagon") return needs_fr([=] { return pentagon_check(*d, *fr, *tol); });
  if (name == "hexagon") return needs_fr([=] { return hexagon_check(*d, *fr, *tol); });
  if (name == "rigidity") return needs_fr([=] { return rigidity_check(*d, *fr, tol->eps); });
  if (name == "ms1")
    return needs_fr(
        [=] { return ms_identity_check(*d, *fr, *S, MSIdentity::fusing_product, *tol); });
  if (name == "ms2")
    return needs_fr(
        [=] { return ms_identity_check(*d, *fr, *S, MSIdentity::modular_monodromy, *tol); });
  if (name == "sfromfr") return needs_fr([=] { return verify_s_from_fr(*d, *fr, *S, *tol); });
  if (name == "chars") {
    if (!set.chars) return {std::string(kNoChars), {}};
    const CharacterGenerator gen = *set.chars;
    const VerifyOptions* o = &opt;
    return {{}, [=] {
              VerificationReport r = verify_modular_S(gen, *S, o->tau, o->order, tol->eps);
              r.append(verify_t_consistency(gen, *d, o->tau, o->order, tol->eps));
              return r;
            }};
  }
  throw Error(ErrorCode::invalid_argument, fmt::format("unknown check '{}'", name));
}

CheckOutcome summarize(std::string name, VerificationReport report) {
  CheckOutcome out;
  out.name = std::move(name);
  const CheckResult* pick = nullptr;
  for (const auto& r : report.entries()) {
    if (!r.passed) {
      pick = &r;
      break;
    }
    if (!pick || r.residual > pick->residual) pick = &r;
  }
  if (!pick) {
    out.status = CheckStatus::fail;
    out.residual = std::numeric_limits<double>::infinity();
    out.detail = "check produced no results";
  } else {
    out.status = report.all_passed() ? CheckStatus::pass : CheckStatus::fail;
    out.residual = pick->residual;
    out.tol = pick->tol;
    if (!pick->passed)
      out.detail = pick->check_name + (pick->detail.empty() ? "" : ": " + pick->detail);
  }
  out.report = std::move(report);
  return out;
}

}  // namespace

std::string_view to_string(CheckStatus status) noexcept {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "fail";
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = {
      "unit",     "assoc",   "symmetry", "unitrow",  "diag", "verlinde", "balancing", "nondeg",
      "pentagon", "hexagon", "rigidity", "ms1",      "ms2",  "sfromfr",  "chars"};
  return names;
}

std::vector<std::string> parse_check_selection(std::string_view selection) {
  const auto& all = check_names();
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  if (trim(selection) == "all") return all;
  std::vector<bool> chosen(all.size(), false);
  std::size_t start = 0;
  while (true) {
    const auto comma = selection.find(',', start);
    const std::string_view item =
        trim(selection.substr(start, comma == std::string_view::npos ? selection.npos : comma - start));
    if (item.empty()) throw Error(ErrorCode::invalid_argument, "empty check name in selection");
    const auto it = std::find(all.begin(), all.end(), item);
    if (it == all.end())
      throw Error(ErrorCode::invalid_argument, fmt::format("unknown check '{}'", item));
    chosen[it - all.begin()] = true;
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (chosen[i]) out.push_back(all[i]);
  return out;
}

std::vector<CheckOutcome> run_verification(const ModularDataSet& set,
                                           const std::vector<std::string>& checks,
                                           const VerifyOptions& options) {
  options.tol.check();
  if (options.order < 1)
    throw Error(ErrorCode::invalid_argument, "truncation order must be positive");
  std::vector<std::string> ordered;
  for (const auto& name : check_names())
    if (std::find(checks.begin(), checks.end(), name) != checks.end()) ordered.push_back(name);
  for (const auto& name : checks)
    if (std::find(ordered.begin(), ordered.end(), name) == ordered.end())
      throw Error(ErrorCode::invalid_argument, fmt::format("unknown check '{}'", name));

  std::vector<Plan> plans;
  for (const auto& name : ordered) plans.push_back(plan_for(name, set, options));
  std::vector<std::future<VerificationReport>> running(plans.size());
  for (std::size_t i = 0; i < plans.size(); ++i)
    if (plans[i].skip.empty()) running[i] = std::async(std::launch::async, plans[i].run);

  std::vector<CheckOutcome> out;
  for (std::size_t i = 0; i < plans.size(); ++i) {
    if (!plans[i].skip.empty()) {
      CheckOutcome skipped;
      skipped.name = ordered[i];
      skipped.detail = plans[i].skip;
      out.push_back(std::move(skipped));
      continue;
    }
    try {
      out.push_back(summarize(ordered[i], running[i].get()));
    } catch (const std::exception& ex) {
      CheckOutcome failed;
      failed.name = ordered[i];
      failed.status = CheckStatus::fail;
      failed.residual = std::numeric_limits<double>::infinity();
      failed.tol = options.tol.eps;
      failed.detail = ex.what();
      out.push_back(std::move(failed));
    }
  }
  return out;
}

std::string format_text(const std::vector<CheckOutcome>& outcomes) {
  std::string out;
  for (const auto& o : outcomes) {
    if (o.status == CheckStatus::skip) {
      out += fmt::format("{} SKIP {}\n", o.name, o.detail);
      continue;
    }
    out += fmt::format("{} {} residual={:.3e} tol={:.3e}", o.name,
                       o.status == CheckStatus::pass ? "PASS" : "FAIL", o.residual, o.tol);
    if (!o.detail.empty()) out += " (" + o.detail + ")";
    out += '\n';
  }
  return out;
}

std::string format_json(std::string_view source, const ToleranceConfig& tol,
                        const std::vector<CheckOutcome>& outcomes) {
  nlohmann::ordered_json doc;
  doc["source"] = source;
  doc["tol"] = tol.eps;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& o : outcomes) {
    nlohmann::ordered_json item;
    item["name"] = o.name;
    item["status"] = to_string(o.status);
    if (o.status == CheckStatus::skip || !std::isfinite(o.residual))
      item["residual"] = nullptr;
    else
      item["residual"] = o.residual;
    doc["checks"].push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

int exit_code(const std::vector<CheckOutcome>& outcomes) noexcept {
  for (const auto& o : outcomes)
    if (o.status == CheckStatus::fail) return 1;
  return 0;
}

}  // namespace mtcv
