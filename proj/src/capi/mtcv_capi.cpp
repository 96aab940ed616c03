// Copyright (C) 2026 The mtcverify Authors
// SPDX-License-Identifier: Apache-2.0

#include "mtcv/mtcv.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "mtcv/catalog.hpp"
#include "mtcv/characters.hpp"
#include "mtcv/data_file.hpp"
#include "mtcv/fusion_modular.hpp"
#include "mtcv/number_expr.hpp"
#include "mtcv/verify.hpp"

struct mtcv_dataset {
  mtcv::ModularDataSet set;
};

struct mtcv_report {
  std::vector<mtcv::CheckOutcome> outcomes;
  mtcv::ToleranceConfig tol;
};

namespace {

thread_local std::string last_error;

mtcv_status code_of(mtcv::ErrorCode code) {
  switch (code) {
    case mtcv::ErrorCode::invalid_argument: return MTCV_ERR_INVALID_ARGUMENT;
    case mtcv::ErrorCode::parse: return MTCV_ERR_PARSE;
    case mtcv::ErrorCode::io: return MTCV_ERR_IO;
    case mtcv::ErrorCode::validation: return MTCV_ERR_VALIDATION;
    case mtcv::ErrorCode::unsupported: return MTCV_ERR_UNSUPPORTED;
    case mtcv::ErrorCode::domain: return MTCV_ERR_DOMAIN;
    case mtcv::ErrorCode::missing_data: return MTCV_ERR_MISSING_DATA;
  }
  return MTCV_ERR_INTERNAL;
}

mtcv_status fail(mtcv_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
mtcv_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return MTCV_OK;
  } catch (const mtcv::Error& ex) {
    return fail(code_of(ex.code()), ex.what());
  } catch (const std::bad_alloc&) {
    return fail(MTCV_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& ex) {
    return fail(MTCV_ERR_INTERNAL, ex.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define MTCV_REQUIRE(cond)                                                  \
  do {                                                                      \
    if (!(cond)) return fail(MTCV_ERR_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

mtcv_status check_label(const mtcv_dataset* set, int label) {
  if (label < 0 || label >= set->set.data.rank())
    return fail(MTCV_ERR_INVALID_ARGUMENT, "label index out of range");
  return MTCV_OK;
}

template <typename Make>
mtcv_status make_dataset(mtcv_dataset** out, Make&& make) {
  *out = nullptr;
  return guarded([&] { *out = new mtcv_dataset{make()}; });
}

}  // namespace

extern "C" {

const char* mtcv_version(void) { return "0.1.0"; }

const char* mtcv_last_error(void) { return last_error.c_str(); }

void mtcv_string_free(char* s) { std::free(s); }

mtcv_status mtcv_dataset_load_file(const char* path, mtcv_dataset** out) {
  MTCV_REQUIRE(path && out);
  return make_dataset(out, [&] { return mtcv::load_data_file(path); });
}

mtcv_status mtcv_dataset_from_catalog(const char* name, mtcv_dataset** out) {
  MTCV_REQUIRE(name && out);
  return make_dataset(out, [&] { return mtcv::get_entry(name); });
}

mtcv_status mtcv_dataset_parse(const char* text, size_t length, mtcv_dataset** out) {
  MTCV_REQUIRE(text && out);
  return make_dataset(out, [&] { return mtcv::parse_data_file(std::string_view(text, length)); });
}

void mtcv_dataset_free(mtcv_dataset* set) { delete set; }

mtcv_status mtcv_dataset_export(const mtcv_dataset* set, char** out) {
  MTCV_REQUIRE(set && out);
  return guarded([&] { *out = copy_string(mtcv::export_data_file(set->set)); });
}

mtcv_status mtcv_dataset_name(const mtcv_dataset* set, const char** out) {
  MTCV_REQUIRE(set && out);
  *out = set->set.name.c_str();
  return MTCV_OK;
}

mtcv_status mtcv_dataset_rank(const mtcv_dataset* set, int* out) {
  MTCV_REQUIRE(set && out);
  *out = set->set.data.rank();
  return MTCV_OK;
}

mtcv_status mtcv_dataset_label_name(const mtcv_dataset* set, int label, const char** out) {
  MTCV_REQUIRE(set && out);
  if (auto s = check_label(set, label)) return s;
  *out = set->set.data.names()[label].c_str();
  return MTCV_OK;
}

mtcv_status mtcv_dataset_unit(const mtcv_dataset* set, int* out) {
  MTCV_REQUIRE(set && out);
  *out = set->set.data.unit_index();
  return MTCV_OK;
}

mtcv_status mtcv_dataset_dual(const mtcv_dataset* set, int label, int* out) {
  MTCV_REQUIRE(set && out);
  if (auto s = check_label(set, label)) return s;
  *out = set->set.data.dual_index(label);
  return MTCV_OK;
}

mtcv_status mtcv_dataset_h(const mtcv_dataset* set, int label, long long* num, long long* den) {
  MTCV_REQUIRE(set && num && den);
  if (auto s = check_label(set, label)) return s;
  const auto& h = set->set.data.weights()[label];
  *num = h.numerator();
  *den = h.denominator();
  return MTCV_OK;
}

mtcv_status mtcv_dataset_c(const mtcv_dataset* set, long long* num, long long* den) {
  MTCV_REQUIRE(set && num && den);
  *num = set->set.data.c().numerator();
  *den = set->set.data.c().denominator();
  return MTCV_OK;
}

mtcv_status mtcv_dataset_fusion(const mtcv_dataset* set, int a, int b, int c, int* out) {
  MTCV_REQUIRE(set && out);
  for (int x : {a, b, c})
    if (auto s = check_label(set, x)) return s;
  *out = set->set.data.n(a, b, c);
  return MTCV_OK;
}

mtcv_status mtcv_dataset_s_entry(const mtcv_dataset* set, int a, int b, double* re, double* im) {
  MTCV_REQUIRE(set && re && im);
  for (int x : {a, b})
    if (auto s = check_label(set, x)) return s;
  const auto v = set->set.S(a, b);
  *re = v.real();
  *im = v.imag();
  return MTCV_OK;
}

mtcv_status mtcv_dataset_has_fr(const mtcv_dataset* set, int* out) {
  MTCV_REQUIRE(set && out);
  *out = set->set.fr.has_value() ? 1 : 0;
  return MTCV_OK;
}

mtcv_status mtcv_dataset_has_chars(const mtcv_dataset* set, int* out) {
  MTCV_REQUIRE(set && out);
  *out = set->set.chars.has_value() ? 1 : 0;
  return MTCV_OK;
}

mtcv_status mtcv_verlinde(const mtcv_dataset* set, double* re, double* im, size_t capacity) {
  MTCV_REQUIRE(set && re && im);
  const auto m = static_cast<size_t>(set->set.data.rank());
  if (capacity < m * m * m) return fail(MTCV_ERR_INVALID_ARGUMENT, "output buffer too small");
  return guarded([&] {
    const auto& d = set->set.data;
    std::vector<mtcv::Label> dual;
    for (int a = 0; a < d.rank(); ++a) dual.push_back(d.dual(mtcv::Label(a)));
    const auto t = mtcv::verlinde_fusion(set->set.S, dual, d.unit());
    const int r = d.rank();
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < r; ++b)
        for (int c = 0; c < r; ++c) {
          const size_t i = (static_cast<size_t>(a) * r + b) * r + c;
          re[i] = t(a, b, c).real();
          im[i] = t(a, b, c).imag();
        }
  });
}

mtcv_status mtcv_character_series(const mtcv_dataset* set, int label, int order,
                                  long long* alpha_num, long long* alpha_den, char** coeffs) {
  MTCV_REQUIRE(set && alpha_num && alpha_den && coeffs);
  if (!set->set.chars) return fail(MTCV_ERR_UNSUPPORTED, "data set has no character data");
  return guarded([&] {
    const auto chi = mtcv::character_series(*set->set.chars, mtcv::Label(label), order);
    std::string text;
    for (const auto& c : chi.coeffs) {
      if (!text.empty()) text += ' ';
      text += c.str();
    }
    *coeffs = copy_string(text);
    *alpha_num = chi.alpha.numerator();
    *alpha_den = chi.alpha.denominator();
  });
}

mtcv_status mtcv_character_eval(const mtcv_dataset* set, int label, int order, double tau_re,
                                double tau_im, double* re, double* im) {
  MTCV_REQUIRE(set && re && im);
  if (!set->set.chars) return fail(MTCV_ERR_UNSUPPORTED, "data set has no character data");
  return guarded([&] {
    const auto chi = mtcv::character_series(*set->set.chars, mtcv::Label(label), order);
    const auto v = mtcv::eval_character(chi, {tau_re, tau_im});
    *re = v.real();
    *im = v.imag();
  });
}

void mtcv_verify_options_init(mtcv_verify_options* options) {
  if (!options) return;
  const mtcv::VerifyOptions defaults;
  options->eps = defaults.tol.eps;
  options->eps_det = defaults.tol.eps_det;
  options->tau_re = defaults.tau.real();
  options->tau_im = defaults.tau.imag();
  options->order = defaults.order;
}

mtcv_status mtcv_verify(const mtcv_dataset* set, const char* checks,
                        const mtcv_verify_options* options, mtcv_report** out) {
  MTCV_REQUIRE(set && checks && out);
  *out = nullptr;
  mtcv_verify_options opts;
  mtcv_verify_options_init(&opts);
  if (options) opts = *options;
  return guarded([&] {
    mtcv::VerifyOptions vo;
    vo.tol = {opts.eps, opts.eps_det};
    vo.tau = {opts.tau_re, opts.tau_im};
    vo.order = opts.order;
    auto selection = mtcv::parse_check_selection(checks);
    auto outcomes = mtcv::run_verification(set->set, selection, vo);
    *out = new mtcv_report{std::move(outcomes), vo.tol};
  });
}

void mtcv_report_free(mtcv_report* report) { delete report; }

mtcv_status mtcv_report_size(const mtcv_report* report, size_t* out) {
  MTCV_REQUIRE(report && out);
  *out = report->outcomes.size();
  return MTCV_OK;
}

mtcv_status mtcv_report_check(const mtcv_report* report, size_t index, const char** name,
                              mtcv_check_status* status, double* residual, double* tol,
                              const char** detail) {
  MTCV_REQUIRE(report);
  if (index >= report->outcomes.size())
    return fail(MTCV_ERR_INVALID_ARGUMENT, "check index out of range");
  const auto& o = report->outcomes[index];
  if (name) *name = o.name.c_str();
  if (status)
    *status = o.status == mtcv::CheckStatus::pass   ? MTCV_CHECK_PASS
              : o.status == mtcv::CheckStatus::fail ? MTCV_CHECK_FAIL
                                                    : MTCV_CHECK_SKIP;
  if (residual) *residual = o.residual;
  if (tol) *tol = o.tol;
  if (detail) *detail = o.detail.c_str();
  return MTCV_OK;
}

mtcv_status mtcv_report_text(const mtcv_report* report, char** out) {
  MTCV_REQUIRE(report && out);
  return guarded([&] { *out = copy_string(mtcv::format_text(report->outcomes)); });
}

mtcv_status mtcv_report_json(const mtcv_report* report, const char* source, char** out) {
  MTCV_REQUIRE(report && out);
  return guarded([&] {
    *out = copy_string(mtcv::format_json(source ? source : "", report->tol, report->outcomes));
  });
}

int mtcv_report_exit_code(const mtcv_report* report) {
  return report ? mtcv::exit_code(report->outcomes) : 2;
}

size_t mtcv_catalog_count(void) {
  static const auto names = mtcv::catalog_names();
  return names.size();
}

const char* mtcv_catalog_name(size_t index) {
  static const auto names = mtcv::catalog_names();
  return index < names.size() ? names[index].c_str() : nullptr;
}

mtcv_status mtcv_parse_number_expr(const char* text, double* re, double* im) {
  MTCV_REQUIRE(text && re && im);
  return guarded([&] {
    const auto v = mtcv::parse_number_expr(text);
    *re = v.real();
    *im = v.imag();
  });
}

}  // extern "C"
