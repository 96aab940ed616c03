// Copyright (C) 2026 The mtcverify Authors
// SPDX-License-Identifier: Apache-2.0

#include "mtcv/data_file.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "mtcv/number_expr.hpp"

namespace mtcv {

ParseError::ParseError(int line, const std::string& message)
    : Error(ErrorCode::parse, line > 0 ? fmt::format("line {}: {}", line, message) : message),
      line_(line) {}

ValidationError::ValidationError(const std::string& message, VerificationReport report)
    : Error(ErrorCode::validation, message), report_(std::move(report)) {}

namespace {

constexpr std::string_view kHeader = "mtc-data v1";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

class FileParser {
 public:
  explicit FileParser(std::string_view text) : text_(text) {}

  ModularDataSet run() {
    std::size_t pos = 0;
    bool header_seen = false;
    while (pos <= text_.size()) {
      const std::size_t nl = text_.find('\n', pos);
      const std::size_t end = nl == std::string_view::npos ? text_.size() : nl;
      ++line_;
      std::string_view raw = text_.substr(pos, end - pos);
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      pos = end + 1;
      if (!header_seen) {
        if (trim(raw) != kHeader) fail(fmt::format("expected header '{}'", kHeader));
        header_seen = true;
      } else {
        line(raw);
      }
      if (nl == std::string_view::npos) break;
    }
    if (!header_seen) fail(fmt::format("expected header '{}'", kHeader));
    line_ = 0;
    return finish();
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, message); }

  void line(std::string_view raw) {
    std::string_view body = trim(raw);
    if (body.empty() || body.front() == '#') return;
    const auto words = split_words(body);
    const std::string_view key = words.front();
    if (key == "note") {
      notes_.emplace_back(trim(body.substr(4)));
      return;
    }
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = trim(body.substr(0, hash));
    if (key == "name") return name_line(body);
    if (key == "labels") return labels_line(body);
    if (key == "chars") return chars_line(body);
    if (names_.empty()) fail(fmt::format("'{}' before 'labels'", key));
    if (key == "unit") return unit_line(body);
    if (key == "dual") return dual_line(body);
    if (key == "h") return h_line(body);
    if (key == "c") return c_line(body);
    if (key == "N") return n_line(body);
    if (key == "S") return s_line(body);
    if (key == "F") return f_line(body);
    if (key == "R") return r_line(body);
    fail(fmt::format("unknown keyword '{}'", key));
  }

  std::vector<std::string_view> args(std::string_view body) {
    auto w = split_words(body);
    w.erase(w.begin());
    return w;
  }

  void once(bool& seen, std::string_view key) {
    if (seen) fail(fmt::format("duplicate '{}' line", key));
    seen = true;
  }

  int label(std::string_view name) {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<int>(i);
    fail(fmt::format("undeclared label '{}'", name));
  }

  Rational rational(std::string_view s) {
    auto parse_int = [&](std::string_view t) {
      std::int64_t v = 0;
      if (!t.empty() && t.front() == '+') t.remove_prefix(1);
      auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
        fail(fmt::format("invalid rational '{}'", s));
      return v;
    };
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    const std::int64_t q = parse_int(s.substr(slash + 1));
    if (q == 0) fail(fmt::format("zero denominator in '{}'", s));
    return Rational(parse_int(s.substr(0, slash)), q);
  }

  std::pair<std::string_view, std::string_view> split_eq(std::string_view body) {
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) fail("expected '='");
    return {trim(body.substr(0, eq)), trim(body.substr(eq + 1))};
  }

  std::pair<Complex, std::string> expression(std::string_view s) {
    const std::string text(trim(s));
    if (text.empty()) fail("missing number expression");
    try {
      return {parse_number_expr(text), text};
    } catch (const ExprError& ex) {
      fail(fmt::format("in expression '{}': {}", text, ex.what()));
    }
  }

  template <std::size_t K>
  std::array<int, K> labels_of(std::string_view lhs, std::string_view key) {
    auto w = args(lhs);
    if (w.size() != K) fail(fmt::format("'{}' takes {} labels, got {}", key, K, w.size()));
    std::array<int, K> out{};
    for (std::size_t i = 0; i < K; ++i) out[i] = label(w[i]);
    return out;
  }

  void name_line(std::string_view body) {
    once(seen_name_, "name");
    auto w = args(body);
    if (w.size() != 1) fail("'name' takes one word");
    name_ = w[0];
  }

  void labels_line(std::string_view body) {
    if (!names_.empty()) fail("duplicate 'labels' line");
    auto w = args(body);
    if (w.empty()) fail("'labels' needs at least one label");
    std::set<std::string_view> seen;
    for (auto n : w) {
      if (n.find_first_of("=,") != std::string_view::npos) fail(fmt::format("invalid label '{}'", n));
      if (!seen.insert(n).second) fail(fmt::format("duplicate label '{}'", n));
      names_.emplace_back(n);
    }
  }

  void chars_line(std::string_view body) {
    if (chars_) fail("duplicate 'chars' line");
    auto w = args(body);
    if (w.size() == 1 && w[0] == "ising") {
      chars_ = CharacterGenerator{CharacterFamily::ising, 0};
    } else if (w.size() == 2 && w[0] == "su2") {
      const Rational k = rational(w[1]);
      if (k.denominator() != 1 || k.numerator() < 1) fail("su2 level must be a positive integer");
      chars_ = CharacterGenerator{CharacterFamily::su2, static_cast<int>(k.numerator())};
    } else {
      fail("expected 'chars ising' or 'chars su2 <k>'");
    }
  }

  void unit_line(std::string_view body) {
    if (unit_) fail("duplicate 'unit' line");
    auto w = args(body);
    if (w.size() != 1) fail("'unit' takes one label");
    unit_ = label(w[0]);
  }

  void dual_line(std::string_view body) {
    if (!dual_.empty()) fail("duplicate 'dual' line");
    auto w = args(body);
    if (w.size() != names_.size())
      fail(fmt::format("'dual' needs {} labels, got {}", names_.size(), w.size()));
    for (auto n : w) dual_.emplace_back(label(n));
  }

  void h_line(std::string_view body) {
    if (!weights_.empty()) fail("duplicate 'h' line");
    auto w = args(body);
    if (w.size() != names_.size())
      fail(fmt::format("'h' needs {} values, got {}", names_.size(), w.size()));
    for (auto v : w) weights_.push_back(rational(v));
  }

  void c_line(std::string_view body) {
    once(seen_c_, "c");
    auto w = args(body);
    if (w.size() != 1) fail("'c' takes one value");
    c_ = rational(w[0]);
  }

  void n_line(std::string_view body) {
    auto [lhs, rhs] = split_eq(body);
    const auto idx = labels_of<3>(lhs, "N");
    std::int64_t k = 0;
    auto [ptr, ec] = std::from_chars(rhs.data(), rhs.data() + rhs.size(), k);
    if (ec != std::errc() || ptr != rhs.data() + rhs.size())
      fail(fmt::format("N entry must be an integer, got '{}'", rhs));
    if (k < 0) fail(fmt::format("N entry must be nonnegative, got {}", k));
    if (k > 1000000) fail(fmt::format("N entry {} is out of range", k));
    if (!fusion_.emplace(idx, static_cast<int>(k)).second) fail("duplicate N entry");
    fusion_line_[idx] = line_;
  }

  void s_line(std::string_view body) {
    auto [lhs, rhs] = split_eq(body);
    const int row = labels_of<1>(lhs, "S")[0];
    if (s_rows_.count(row)) fail(fmt::format("duplicate S row '{}'", names_[row]));
    std::vector<std::pair<Complex, std::string>> entries;
    std::size_t start = 0;
    while (true) {
      const auto comma = rhs.find(',', start);
      entries.push_back(expression(rhs.substr(start, comma == std::string_view::npos
                                                         ? std::string_view::npos
                                                         : comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (entries.size() != names_.size())
      throw ValidationError(
          fmt::format("line {}: S dimensions: row '{}' has {} entries, expected {}", line_,
                      names_[row], entries.size(), names_.size()),
          {});
    s_rows_[row] = std::move(entries);
  }

  void f_line(std::string_view body) {
    auto [lhs, rhs] = split_eq(body);
    const FIndex idx = labels_of<6>(lhs, "F");
    auto [value, text] = expression(rhs);
    if (!f_.emplace(idx, value).second) fail("duplicate F entry");
    exprs_.f[idx] = std::move(text);
  }

  void r_line(std::string_view body) {
    auto [lhs, rhs] = split_eq(body);
    const RIndex idx = labels_of<3>(lhs, "R");
    auto [value, text] = expression(rhs);
    if (!r_.emplace(idx, value).second) fail("duplicate R entry");
    exprs_.r[idx] = std::move(text);
  }

  ModularDataSet finish() {
    if (names_.empty()) fail("missing 'labels' line");
    if (!unit_) fail("missing 'unit' line");
    if (dual_.empty()) fail("missing 'dual' line");
    if (weights_.empty()) fail("missing 'h' line");
    if (!seen_c_) fail("missing 'c' line");
    const int m = static_cast<int>(names_.size());
    const int e = *unit_;

    std::vector<int> fusion(static_cast<std::size_t>(m) * m * m, 0);
    for (const auto& [idx, k] : fusion_) {
      if (idx[0] == e && k != (idx[1] == idx[2] ? 1 : 0))
        throw ParseError(fusion_line_.at(idx),
                         fmt::format("N {} {} {} = {} contradicts the unit row", names_[idx[0]],
                                     names_[idx[1]], names_[idx[2]], k));
      fusion[(idx[0] * m + idx[1]) * m + idx[2]] = k;
    }
    for (int a = 0; a < m; ++a) fusion[(e * m + a) * m + a] = 1;

    FusionData data(names_, Label(e), dual_, weights_, c_, std::move(fusion));
    VerificationReport report = validate(data);
    if (!report.all_passed()) {
      std::string first;
      for (const auto& r : report.entries())
        if (!r.passed) {
          first = r.check_name + (r.detail.empty() ? "" : ": " + r.detail);
          break;
        }
      throw ValidationError("fusion data failed validation (" + first + ")", std::move(report));
    }

    for (int a = 0; a < m; ++a)
      if (!s_rows_.count(a))
        throw ValidationError(fmt::format("S dimensions: missing row '{}', expected {} rows",
                                          names_[a], m),
                              {});
    Eigen::MatrixXcd s(m, m);
    for (auto& [row, entries] : s_rows_)
      for (int col = 0; col < m; ++col) {
        s(row, col) = entries[col].first;
        exprs_.s[{row, col}] = std::move(entries[col].second);
      }

    std::optional<FRSymbols> fr;
    if (!f_.empty() || !r_.empty()) {
      if (!data.multiplicity_free())
        throw Error(ErrorCode::unsupported,
                    "F/R data for fusion rules with multiplicities are not supported");
      fr.emplace(m, std::move(f_), std::move(r_));
    }
    if (chars_ && chars_->rank() != m)
      throw ValidationError(fmt::format("characters have rank {}, data have rank {}",
                                        chars_->rank(), m),
                            {});

    return ModularDataSet{name_, std::move(data), SMatrix(std::move(s)), std::move(fr), chars_,
                          std::move(notes_), std::move(exprs_)};
  }

  std::string_view text_;
  int line_ = 0;
  bool seen_name_ = false;
  bool seen_c_ = false;
  std::string name_;
  std::vector<std::string> notes_;
  std::vector<std::string> names_;
  std::optional<int> unit_;
  std::vector<Label> dual_;
  std::vector<Rational> weights_;
  Rational c_{0};
  std::map<std::array<int, 3>, int> fusion_;
  std::map<std::array<int, 3>, int> fusion_line_;
  std::map<int, std::vector<std::pair<Complex, std::string>>> s_rows_;
  std::map<FIndex, Complex> f_;
  std::map<RIndex, Complex> r_;
  std::optional<CharacterGenerator> chars_;
  ExpressionText exprs_;
};

}  // namespace

ModularDataSet parse_data_file(std::string_view text) { return FileParser(text).run(); }

ModularDataSet load_data_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, fmt::format("cannot open '{}'", path.string()));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::io, fmt::format("cannot read '{}'", path.string()));
  return parse_data_file(buffer.str());
}

std::string export_data_file(const ModularDataSet& set) {
  const FusionData& d = set.data;
  const auto& n = d.names();
  const int m = d.rank();
  const int e = d.unit_index();
  std::string out;
  auto emit = [&out](const std::string& line) {
    out += line;
    out += '\n';
  };
  auto join = [](const auto& items, auto fn, std::string_view sep = " ") {
    std::string s;
    for (const auto& it : items) {
      if (!s.empty()) s += sep;
      s += fn(it);
    }
    return s;
  };
  auto expr = [](const auto& texts, const auto& key, Complex value) {
    auto it = texts.find(key);
    return it != texts.end() ? it->second : format_number_expr(value);
  };

  emit(std::string(kHeader));
  if (!set.name.empty()) emit("name " + set.name);
  for (const auto& note : set.notes) emit("note " + note);
  emit("labels " + join(n, [](const std::string& s) { return s; }));
  emit("unit " + n[e]);
  std::vector<int> all(m);
  for (int a = 0; a < m; ++a) all[a] = a;
  emit("dual " + join(all, [&](int a) { return n[d.dual_index(a)]; }));
  emit("h " + join(d.weights(), [](const Rational& r) { return to_string(r); }));
  emit("c " + to_string(d.c()));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if (a != e && d.n(a, b, c) != 0)
          emit(fmt::format("N {} {} {} = {}", n[a], n[b], n[c], d.n(a, b, c)));
  for (int a = 0; a < m; ++a)
    emit(fmt::format("S {} = {}", n[a], join(all, [&](int b) {
                       return expr(set.text.s, std::pair{a, b}, set.S(a, b));
                     }, ", ")));
  if (set.fr) {
    for (const auto& [idx, value] : set.fr->f_entries())
      emit(fmt::format("F {} {} {} {} {} {} = {}", n[idx[0]], n[idx[1]], n[idx[2]], n[idx[3]],
                       n[idx[4]], n[idx[5]], expr(set.text.f, idx, value)));
    for (const auto& [idx, value] : set.fr->r_entries())
      emit(fmt::format("R {} {} {} = {}", n[idx[0]], n[idx[1]], n[idx[2]],
                       expr(set.text.r, idx, value)));
  }
  if (set.chars) {
    if (set.chars->family == CharacterFamily::ising)
      emit("chars ising");
    else
      emit(fmt::format("chars su2 {}", set.chars->level));
  }
  return out;
}

}  // namespace mtcv
