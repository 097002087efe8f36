/* SPDX-License-Identifier: Apache-2.0 */

#include "ahodge/cli/report.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "ahodge/cli/builtins.hpp"
#include "ahodge/error.hpp"
#include "ahodge/hermitian/hermitian.hpp"
#include "ahodge/manifold/differential.hpp"
#include "json.hpp"

namespace ahodge::cli {

using fourier::HarmonicSpace;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kSymbolNote =
    "mode equations use the symbols declared on the frame vectors; they can differ from hand-scaled versions "
    "by a nonzero factor, only vanishing loci are compared";

struct Theory {
  const char* key;
  const char* label;
  const std::vector<HarmonicSpace> fourier::HarmonicReport::*spaces;
};

const Theory kTheories[] = {
    {"dbar", "dbar", &fourier::HarmonicReport::dbar},
    {"deltabar", "deltabar", &fourier::HarmonicReport::deltabar},
    {"dolbeault", "Dolbeault", &fourier::HarmonicReport::dolbeault},
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string dim_text(const HarmonicSpace& s) { return s.exact() ? std::to_string(s.dimension()) : "?"; }

}  // namespace

std::string load_source(const std::string& source) {
  const std::string prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) return builtin_manifest(source.substr(prefix.size()));
  std::ifstream in(source);
  if (!in) throw ValidationError("cannot read manifest " + source);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run(const RunConfig& config) {
  RunResult r;
  r.spec = manifold::load_spec(load_source(config.source), config.overrides);
  const auto& spec = r.spec;
  auto& rep = r.report;
  rep.manifold = spec.name;
  rep.n = spec.n;
  rep.degrees = config.degrees;
  if (rep.degrees.empty())
    for (int p = 0; p <= spec.n; ++p) rep.degrees.push_back(p);
  for (int p : rep.degrees)
    if (p < 0 || p > spec.n) throw ValidationError("degree " + std::to_string(p) + " is outside 0.." + std::to_string(spec.n));

  manifold::OperatorSplit ops = manifold::split_d(spec);
  rep.d_squared_zero = ops.d.compose(ops.d).is_zero();
  rep.relations = manifold::check_d2_relations(ops);
  rep.integrable = manifold::is_integrable(ops);
  hermitian::HermitianData h = hermitian::metric_from_spec(spec, config.prec_bits);
  rep.almost_kahler = h.is_almost_kahler;
  rep.ak_identity = rep.almost_kahler ? (hermitian::check_ak_identity(h, spec) ? "holds" : "fails") : "n/a";

  fourier::FourierOptions opts{config.modes_bound};
  std::optional<HarmonicSpace> h10;
  for (int p : rep.degrees) {
    HarmonicSpace d = fourier::harmonic_basis_dbar(p, spec, opts);
    rep.deltabar.push_back(fourier::harmonic_basis_deltabar(d, spec, h));
    rep.dolbeault.push_back(fourier::dolbeault_basis(d, spec));
    if (p == 1) h10 = d;
    rep.dbar.push_back(std::move(d));
  }
  if (!h10) h10 = fourier::harmonic_basis_dbar(1, spec, opts);
  r.verdict = obstruction::symplectic_obstruction(spec, *h10);
  rep.obstruction = obstruction::verdict_name(r.verdict.verdict);
  return r;
}

int exit_code(const RunResult& r) { return r.report.exact() ? 0 : 2; }

std::string render_text(const RunResult& r) {
  const auto& rep = r.report;
  const auto& coords = r.spec.fibration.coords;
  std::ostringstream out;
  out << "manifold: " << rep.manifold << " (n = " << rep.n << ")\n";
  if (!r.spec.params.empty()) {
    out << "parameters:";
    for (const auto& [name, value] : r.spec.params) out << " " << name << " = " << value.to_string() << ";";
    out << "\n";
  }
  out << "flags:\n";
  out << "  d^2 = 0: " << yes_no(rep.d_squared_zero) << "\n";
  for (const auto& rel : rep.relations) out << "  " << rel.name << ": " << (rel.holds ? "holds" : "fails") << "\n";
  out << "  integrable: " << yes_no(rep.integrable) << "\n";
  out << "  almost-Kaehler: " << yes_no(rep.almost_kahler) << "\n";
  out << "  Laplacian identity (deltabar = delta): " << rep.ak_identity << "\n";

  out << std::left << std::setw(12) << "h^{p,0}" << std::right;
  for (int p : rep.degrees) out << std::setw(6) << ("p=" + std::to_string(p));
  out << "\n";
  for (const auto& t : kTheories) {
    out << "  " << std::left << std::setw(10) << t.label << std::right;
    for (const auto& s : rep.*t.spaces) out << std::setw(6) << dim_text(s);
    out << "\n";
  }

  out << "bases:\n";
  for (const auto& t : kTheories)
    for (const auto& s : rep.*t.spaces) {
      out << "  " << t.label << " p=" << s.p << ":";
      if (!s.exact()) {
        out << " UNDETERMINED (" << s.reason << ")\n";
        continue;
      }
      if (s.basis.empty()) out << " (none)";
      for (std::size_t k = 0; k < s.basis.size(); ++k) out << (k ? ", " : " ") << s.basis[k].to_string(coords);
      out << "\n";
    }

  out << "obstruction: " << obstruction::verdict_name(r.verdict.verdict) << " (rule "
      << obstruction::rule_name(r.verdict.rule) << ")\n";
  if (r.verdict.witness) out << "  witness: " << r.verdict.witness->to_string(coords) << "\n";
  out << "  " << r.verdict.note << "\n";
  out << "note: " << kSymbolNote << "\n";
  out << "status: " << (rep.exact() ? "EXACT" : "UNDETERMINED") << "\n";
  return out.str();
}

std::string render_json(const RunResult& r) {
  const auto& rep = r.report;
  const auto& coords = r.spec.fibration.coords;
  json j;
  json params = json::object();
  for (const auto& [name, value] : r.spec.params) params[name] = value.to_string();
  j["manifold"] = {{"name", rep.manifold},
                   {"n", rep.n},
                   {"parameters", params},
                   {"base_rank", r.spec.fibration.rank},
                   {"base_coordinates", coords}};
  json relations = json::object();
  for (const auto& rel : rep.relations) relations[rel.name] = rel.holds;
  j["flags"] = {{"d_squared_zero", rep.d_squared_zero},
                {"relations", relations},
                {"integrable", rep.integrable},
                {"almost_kahler", rep.almost_kahler},
                {"laplacian_identity", rep.ak_identity}};
  json tables = json::object(), bases = json::object();
  json undetermined = json::array();
  for (const auto& t : kTheories) {
    json tab = json::object(), bas = json::object();
    for (const auto& s : rep.*t.spaces) {
      const std::string p = std::to_string(s.p);
      tab[p] = s.exact() ? json(s.dimension()) : json(nullptr);
      json list = json::array();
      for (const auto& psi : s.basis) list.push_back({{"text", psi.to_string(coords)}, {"ascii", psi.to_ascii(coords)}});
      bas[p] = list;
      if (!s.exact()) undetermined.push_back({{"theory", t.key}, {"p", s.p}, {"reason", s.reason}});
    }
    tables[t.key] = tab;
    bases[t.key] = bas;
  }
  j["tables"] = tables;
  j["bases"] = bases;
  json ob = {{"verdict", obstruction::verdict_name(r.verdict.verdict)},
             {"rule", obstruction::rule_name(r.verdict.rule)},
             {"witness", nullptr},
             {"note", r.verdict.note}};
  if (r.verdict.witness)
    ob["witness"] = {{"text", r.verdict.witness->to_string(coords)}, {"ascii", r.verdict.witness->to_ascii(coords)}};
  j["obstruction"] = ob;
  j["status"] = {{"result", rep.exact() ? "EXACT" : "UNDETERMINED"}, {"undetermined", undetermined}};
  j["notes"] = json::array({kSymbolNote});
  return j.dump(2) + "\n";
}

CheckResult check(const std::string& manifest_text) {
  manifold::ManifoldSpec spec = manifold::load_spec(manifest_text);
  CheckResult c;
  c.name = spec.name;
  c.relations = manifold::check_d2_relations(spec);
  for (const auto& rel : c.relations) c.ok = c.ok && rel.holds;
  return c;
}

std::string render_check(const CheckResult& c) {
  std::ostringstream out;
  out << "manifold: " << c.name << "\n";
  for (const auto& rel : c.relations) out << "  " << rel.name << ": " << (rel.holds ? "holds" : "fails") << "\n";
  out << (c.ok ? "ok" : "FAILED") << "\n";
  return out.str();
}

}  // namespace ahodge::cli
