/* SPDX-License-Identifier: Apache-2.0 */

#include "ahodge/manifold/spec.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "ahodge/algebra/interval.hpp"
#include "ahodge/error.hpp"
#include "ahodge/manifold/differential.hpp"
#include "ahodge/manifold/expression.hpp"

namespace ahodge::manifold {

using algebra::Form;
using algebra::Mask;
using algebra::Scalar;
using algebra::ScalarMatrix;

Scalar FrameVector::symbol_at(const std::vector<long>& m) const {
  Scalar s;
  for (std::size_t j = 0; j < symbol.size() && j < m.size(); ++j)
    if (m[j] != 0) s += symbol[j] * Scalar(m[j]);
  return s;
}

namespace {

Form images_substitute(const Form& f, const ScalarMatrix& t, int n) {
  // generator k -> sum_l t(k, l) generator l
  std::vector<Form> images;
  for (int k = 0; k < 2 * n; ++k) {
    Form g(n);
    for (int l = 0; l < 2 * n; ++l) g.add(Mask(1) << l, t(k, l));
    images.push_back(std::move(g));
  }
  return f.substitute(images);
}

}  // namespace

Form ManifoldSpec::to_phi(const Form& e_form) const {
  if (!has_real_frame) throw ValidationError("manifold '" + name + "' declares no real coframe");
  return images_substitute(e_form, frame_inverse, n);
}

Form ManifoldSpec::to_e(const Form& phi_form) const {
  if (!has_real_frame) throw ValidationError("manifold '" + name + "' declares no real coframe");
  return images_substitute(phi_form, frame_change, n);
}

namespace {

struct Line {
  int number;
  std::string text;  // comment stripped, untrimmed
};

struct KeyValue {
  int line;
  std::string key;
  std::string value;
  int value_column;  // 0-based offset of value in the raw line
};

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

KeyValue split_key_value(const Line& l, char sep = '=') {
  std::size_t eq = l.text.find(sep);
  if (eq == std::string::npos) throw ParseError(std::string("expected '") + sep + "'", l.number, 1);
  std::size_t vstart = eq + 1;
  while (vstart < l.text.size() && std::isspace(static_cast<unsigned char>(l.text[vstart]))) ++vstart;
  return {l.number, trim(l.text.substr(0, eq)), trim(l.text.substr(eq + 1)), static_cast<int>(vstart)};
}

struct ListItem {
  std::string text;
  int column;  // 0-based
};

// Splits `[a, b, (c, d)]` at top-level commas; offsets are relative to the line.
std::vector<ListItem> split_list(const std::string& s, int base_column, int line) {
  std::string t = trim(s);
  std::size_t lead = s.find_first_not_of(" \t");
  if (t.size() < 2 || t.front() != '[' || t.back() != ']')
    throw ParseError("expected a bracketed list", line, base_column + 1);
  std::vector<ListItem> out;
  int depth = 0;
  std::size_t start = 1;
  int offset = base_column + static_cast<int>(lead);
  for (std::size_t k = 1; k + 1 <= t.size() - 1; ++k) {
    char c = t[k];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back({t.substr(start, k - start), offset + static_cast<int>(start)});
      start = k + 1;
    }
  }
  std::string last = t.substr(start, t.size() - 1 - start);
  if (!trim(last).empty() || !out.empty()) out.push_back({last, offset + static_cast<int>(start)});
  for (auto& item : out) {
    std::size_t a = item.text.find_first_not_of(" \t");
    if (a == std::string::npos) throw ParseError("empty list entry", line, item.column + 1);
    item.column += static_cast<int>(a);
    item.text = trim(item.text);
  }
  return out;
}

bool is_real_form(const Form& f) { return f == f.conj_coefficients(); }

void check_frame(const Value& v, Frame want, const std::string& what, int line, int col) {
  if (v.frame != Frame::None && v.frame != want)
    throw ParseError(what + " must be written in the " + (want == Frame::E ? "e" : "phi") + " coframe", line, col + 1);
}

}  // namespace

ManifoldSpec load_spec(const std::string& text, const Overrides& overrides) {
  std::map<std::string, std::vector<Line>> sections;
  std::map<std::string, int> section_line;
  std::string current;
  {
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
      ++number;
      std::size_t hash = raw.find('#');
      if (hash != std::string::npos) raw = raw.substr(0, hash);
      std::string t = trim(raw);
      if (t.empty()) continue;
      if (t.front() == '[' && t.back() == ']' && t.find('=') == std::string::npos) {
        current = trim(t.substr(1, t.size() - 2));
        static const std::set<std::string> known = {"manifold", "params", "coframe", "acs", "metric", "fibration"};
        if (!known.count(current)) throw ParseError("unknown section [" + current + "]", number, 1);
        if (section_line.count(current)) throw ParseError("duplicate section [" + current + "]", number, 1);
        section_line[current] = number;
        sections[current];
        continue;
      }
      if (current.empty()) throw ParseError("content outside of a section", number, 1);
      sections[current].push_back({number, raw});
    }
  }
  if (sections.empty()) throw ParseError("empty manifest");
  if (!sections.count("manifold")) throw ParseError("missing [manifold] section");

  ManifoldSpec spec;
  int dim = 0;
  for (const auto& l : sections["manifold"]) {
    KeyValue kv = split_key_value(l);
    if (kv.key == "name") {
      spec.name = kv.value;
    } else if (kv.key == "dim") {
      try {
        dim = std::stoi(kv.value);
      } catch (const std::exception&) {
        throw ParseError("dim must be an integer", kv.line, kv.value_column + 1);
      }
      if (dim < 2 || dim % 2 != 0 || dim > 2 * algebra::kMaxComplexDim)
        throw ParseError("dim must be even and between 2 and " + std::to_string(2 * algebra::kMaxComplexDim),
                         kv.line, kv.value_column + 1);
    } else {
      throw ParseError("unknown key '" + kv.key + "' in [manifold]", kv.line, 1);
    }
  }
  if (spec.name.empty()) throw ParseError("[manifold] needs a name", section_line["manifold"]);
  if (dim == 0) throw ParseError("[manifold] needs dim", section_line["manifold"]);
  const int n = dim / 2;
  spec.n = n;

  // Parameters, in declaration order.
  Bindings env;
  std::set<std::string> used_overrides;
  for (const auto& l : sections["params"]) {
    KeyValue kv = split_key_value(l);
    if (!is_identifier(kv.key) || kv.key == "pi" || kv.key == "i" || (kv.key[0] == 'e' && kv.key.size() > 1 &&
        std::all_of(kv.key.begin() + 1, kv.key.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) ||
        kv.key.rfind("phi", 0) == 0)
      throw ParseError("invalid parameter name '" + kv.key + "'", kv.line, 1);
    if (env.count(kv.key)) throw ParseError("duplicate parameter '" + kv.key + "'", kv.line, 1);
    Scalar value;
    auto ov = overrides.find(kv.key);
    if (ov != overrides.end()) {
      used_overrides.insert(kv.key);
      value = parse_scalar(ov->second, env);
    } else {
      value = parse_scalar(kv.value, env, kv.line, kv.value_column);
    }
    env[kv.key] = value;
    spec.params.emplace_back(kv.key, value);
  }
  for (const auto& [name, v] : overrides)
    if (!used_overrides.count(name)) throw ValidationError("manifest has no parameter '" + name + "'");

  // Structure equations.
  std::vector<std::optional<Form>> real_eq(2 * n), cplx_eq(n);
  int real_line = 0, cplx_line = 0;
  for (const auto& l : sections["coframe"]) {
    KeyValue kv = split_key_value(l);
    std::string lhs = kv.key;
    if (lhs.size() < 2 || lhs[0] != 'd') throw ParseError("expected 'd eK = ...' or 'd phiK = ...'", kv.line, 1);
    std::string target = trim(lhs.substr(1));
    bool real = target.size() >= 2 && target[0] == 'e';
    bool cplx = target.rfind("phi", 0) == 0 && target.size() >= 4;
    std::string digits = real ? target.substr(1) : cplx ? target.substr(3) : "";
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("expected 'd eK = ...' or 'd phiK = ...'", kv.line, 1);
    int k = std::stoi(digits);
    int limit = real ? 2 * n : n;
    if (k < 1 || k > limit) throw ParseError("coframe index " + digits + " out of range", kv.line, 1);
    Value v = parse_expression(kv.value, env, n, kv.line, kv.value_column);
    check_frame(v, real ? Frame::E : Frame::Phi, "structure equation", kv.line, kv.value_column);
    if (!v.form.is_zero() && (v.form.degree() != 2 || !v.form.is_homogeneous()))
      throw ParseError("structure equation must be a 2-form", kv.line, kv.value_column + 1);
    auto& slot = real ? real_eq[k - 1] : cplx_eq[k - 1];
    if (slot) throw ParseError("duplicate equation for " + target, kv.line, 1);
    if (real && !is_real_form(v.form))
      throw ValidationError("structure equation for e" + digits + " has non-real coefficients");
    slot = v.form;
    (real ? real_line : cplx_line) = kv.line;
  }
  bool has_real = real_line > 0, has_cplx = cplx_line > 0;
  if (!has_real && !has_cplx) throw ParseError("manifest declares no structure equations");

  if (has_real) {
    spec.has_real_frame = true;
    for (int k = 0; k < 2 * n; ++k) spec.real_d.push_back(real_eq[k] ? *real_eq[k] : Form(n));
    spec.d_e = antiderivation(n, spec.real_d);
    for (int k = 0; k < 2 * n; ++k) {
      Form dd = spec.d_e.apply(spec.real_d[k]);
      if (!dd.is_zero()) throw JacobiViolation("e", k + 1, dd.to_string(algebra::Notation::E));
    }
    if (!sections.count("acs")) throw ParseError("a real coframe needs an [acs] section");
    std::vector<std::optional<Form>> phis(n);
    for (const auto& l : sections["acs"]) {
      KeyValue kv = split_key_value(l);
      if (kv.key.rfind("phi", 0) != 0 || kv.key.size() != 4 || !std::isdigit(static_cast<unsigned char>(kv.key[3])))
        throw ParseError("expected 'phiK = ...'", kv.line, 1);
      int k = kv.key[3] - '0';
      if (k < 1 || k > n) throw ParseError("acs index out of range", kv.line, 1);
      Value v = parse_expression(kv.value, env, n, kv.line, kv.value_column);
      check_frame(v, Frame::E, "complex coframe", kv.line, kv.value_column);
      if (v.form.is_zero() || v.form.degree() != 1 || !v.form.is_homogeneous())
        throw ParseError("complex coframe element must be a nonzero 1-form", kv.line, kv.value_column + 1);
      if (phis[k - 1]) throw ParseError("duplicate definition of " + kv.key, kv.line, 1);
      phis[k - 1] = v.form;
    }
    ScalarMatrix p(2 * n, 2 * n);
    for (int k = 0; k < n; ++k) {
      if (!phis[k]) throw ParseError("[acs] does not define phi" + std::to_string(k + 1), section_line["acs"]);
      for (const auto& [m, c] : phis[k]->terms()) {
        int j = __builtin_ctz(m);
        p(k, j) = c;
        p(n + k, j) = c.conj();
      }
    }
    spec.frame_change = p;
    try {
      spec.frame_inverse = algebra::inverse(p);
    } catch (const DivisionByZero&) {
      throw NonInvertibleCoframe("phi and its conjugates do not span the complexified coframe");
    }
    // Orientation: i^n (-1)^{n(n-1)/2} det P must be real and nonzero.
    Scalar s = algebra::determinant(p) * Scalar((n * (n - 1) / 2) % 2 ? -1 : 1);
    for (int k = 0; k < n; ++k) s = s * Scalar::i();
    spec.orientation = algebra::real_sign(s);

    for (int k = 0; k < 2 * n; ++k) {
      Form de(n);
      for (int j = 0; j < 2 * n; ++j)
        if (!p(k, j).is_zero()) de += p(k, j) * spec.real_d[j];
      spec.complex_d.push_back(spec.to_phi(de));
    }
    if (has_cplx)
      for (int k = 0; k < n; ++k)
        if (cplx_eq[k] && !(*cplx_eq[k] == spec.complex_d[k]))
          throw ValidationError("declared d phi" + std::to_string(k + 1) + " = " + cplx_eq[k]->to_ascii() +
                                " disagrees with the real coframe, which gives " + spec.complex_d[k].to_ascii());
    spec.d_phi = antiderivation(n, spec.complex_d);
  } else {
    if (sections.count("acs")) throw ParseError("[acs] requires real structure equations", section_line["acs"]);
    spec.complex_d.assign(2 * n, Form(n));
    for (int k = 0; k < n; ++k) {
      spec.complex_d[k] = cplx_eq[k] ? *cplx_eq[k] : Form(n);
      spec.complex_d[n + k] = spec.complex_d[k].conj();
    }
    spec.d_phi = antiderivation(n, spec.complex_d);
    for (int k = 0; k < n; ++k) {
      Form dd = spec.d_phi.apply(spec.complex_d[k]);
      if (!dd.is_zero()) throw JacobiViolation("phi", k + 1, dd.to_string());
    }
    spec.orientation = 1;
  }

  // Metric.
  if (!sections.count("metric") || sections["metric"].empty()) throw ValidationError("manifest declares no metric");
  if (sections["metric"].size() > 1)
    throw ParseError("[metric] takes a single omega or gram entry", sections["metric"][1].number, 1);
  {
    KeyValue kv = split_key_value(sections["metric"].front());
    if (kv.key == "omega") {
      Value v = parse_expression(kv.value, env, n, kv.line, kv.value_column);
      if (v.form.is_zero() || v.form.degree() != 2 || !v.form.is_homogeneous())
        throw ParseError("omega must be a nonzero 2-form", kv.line, kv.value_column + 1);
      if (v.frame == Frame::E) {
        if (!spec.has_real_frame) throw ParseError("omega in the e coframe needs a real coframe", kv.line, kv.value_column + 1);
        spec.metric.omega = spec.to_phi(v.form);
      } else {
        spec.metric.omega = v.form;
      }
      spec.metric.kind = MetricSource::Kind::Omega;
    } else if (kv.key == "gram") {
      auto rows = split_list(kv.value, kv.value_column, kv.line);
      if (static_cast<int>(rows.size()) != n) throw ParseError("gram must have " + std::to_string(n) + " rows", kv.line, kv.value_column + 1);
      ScalarMatrix g(n, n);
      for (int r = 0; r < n; ++r) {
        auto cols = split_list(rows[r].text, rows[r].column, kv.line);
        if (static_cast<int>(cols.size()) != n)
          throw ParseError("gram row must have " + std::to_string(n) + " entries", kv.line, rows[r].column + 1);
        for (int c = 0; c < n; ++c) g(r, c) = parse_scalar(cols[c].text, env, kv.line, cols[c].column);
      }
      spec.metric.kind = MetricSource::Kind::Gram;
      spec.metric.gram = g;
    } else {
      throw ParseError("unknown key '" + kv.key + "' in [metric]", kv.line, 1);
    }
  }

  // Fibration.
  FibrationData& fib = spec.fibration;
  fib.vectors.assign(n, FrameVector{});
  if (!sections.count("fibration")) {
    for (int k = 0; k < n; ++k) fib.fiber_span.push_back(k);
  } else {
    std::vector<bool> declared(n, false);
    std::vector<std::pair<KeyValue, std::string>> pending;  // V lines need the rank
    bool span_given = false;
    for (const auto& l : sections["fibration"]) {
      std::size_t colon = l.text.find(':');
      std::size_t eq = l.text.find('=');
      if (colon != std::string::npos && (eq == std::string::npos || colon < eq)) {
        KeyValue kv = split_key_value(l, ':');
        pending.emplace_back(kv, kv.key);
        continue;
      }
      KeyValue kv = split_key_value(l);
      if (kv.key == "rank") {
        try {
          fib.rank = std::stoi(kv.value);
        } catch (const std::exception&) {
          throw ParseError("rank must be an integer", kv.line, kv.value_column + 1);
        }
        if (fib.rank < 0) throw ParseError("rank must be non-negative", kv.line, kv.value_column + 1);
      } else if (kv.key == "coords") {
        for (const auto& item : split_list(kv.value, kv.value_column, kv.line)) fib.coords.push_back(item.text);
      } else if (kv.key == "fiber_span") {
        span_given = true;
        for (const auto& item : split_list(kv.value, kv.value_column, kv.line)) {
          if (item.text.size() != 2 || item.text[0] != 'V' || item.text[1] < '1' || item.text[1] > '0' + n)
            throw ParseError("expected a frame vector name V1..V" + std::to_string(n), kv.line, item.column + 1);
          fib.fiber_span.push_back(item.text[1] - '1');
        }
      } else {
        throw ParseError("unknown key '" + kv.key + "' in [fibration]", kv.line, 1);
      }
    }
    for (auto& [kv, name] : pending) {
      if (name.size() != 2 || name[0] != 'V' || name[1] < '1' || name[1] > '0' + n)
        throw ParseError("expected a frame vector name V1..V" + std::to_string(n), kv.line, 1);
      int k = name[1] - '1';
      if (declared[k]) throw ParseError("duplicate entry for " + name, kv.line, 1);
      declared[k] = true;
      FrameVector& fv = fib.vectors[k];
      std::string body = kv.value;
      std::size_t comma = body.find(',');
      std::string kind = trim(body.substr(0, comma));
      if (kind == "fiber") {
        if (comma != std::string::npos) throw ParseError("a fiber vector takes no symbol", kv.line, kv.value_column + 1);
        fv.pure_fiber = true;
        fv.symbol.assign(fib.rank, Scalar());
      } else if (kind == "base") {
        fv.pure_fiber = false;
        if (comma == std::string::npos) throw ParseError("a base vector needs 'symbol = [...]'", kv.line, kv.value_column + 1);
        std::string rest = body.substr(comma + 1);
        std::size_t eq = rest.find('=');
        if (eq == std::string::npos || trim(rest.substr(0, eq)) != "symbol")
          throw ParseError("expected 'symbol = [...]'", kv.line, kv.value_column + static_cast<int>(comma) + 2);
        int list_col = kv.value_column + static_cast<int>(comma + 1 + eq + 1);
        auto items = split_list(rest.substr(eq + 1), list_col, kv.line);
        std::vector<Scalar> vals;
        for (const auto& item : items) vals.push_back(parse_scalar(item.text, env, kv.line, item.column));
        if (static_cast<int>(vals.size()) == fib.rank + 1) {
          if (!vals.front().is_zero())
            throw ValidationError("symbol of " + name + " must vanish at the zero mode");
          vals.erase(vals.begin());
        }
        if (static_cast<int>(vals.size()) != fib.rank)
          throw ParseError("symbol of " + name + " needs " + std::to_string(fib.rank) + " entries", kv.line, list_col + 1);
        fv.symbol = vals;
      } else {
        throw ParseError("expected 'fiber' or 'base'", kv.line, kv.value_column + 1);
      }
    }
    for (int k = 0; k < n; ++k)
      if (!declared[k]) throw ValidationError("[fibration] does not classify V" + std::to_string(k + 1));
    for (int k : fib.fiber_span)
      if (!fib.vectors[k].pure_fiber)
        throw ValidationError("fiber_span lists V" + std::to_string(k + 1) + ", which is not a fiber vector");
    if (!span_given) {
      for (int k = 0; k < n; ++k)
        if (fib.vectors[k].pure_fiber) fib.fiber_span.push_back(k);
    }
  }
  if (fib.coords.empty())
    for (int j = 0; j < fib.rank; ++j) fib.coords.push_back("t" + std::to_string(j + 1));
  if (static_cast<int>(fib.coords.size()) != fib.rank) throw ValidationError("coords must list one name per base direction");
  return spec;
}

}  // namespace ahodge::manifold
