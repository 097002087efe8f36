/* SPDX-License-Identifier: Apache-2.0 */

// ahodge run <manifest|builtin:NAME> [options]
// ahodge check <manifest>

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ahodge/cli/builtins.hpp"
#include "ahodge/cli/report.hpp"
#include "ahodge/error.hpp"

namespace {

std::vector<int> parse_degrees(const std::string& list) {
  std::vector<int> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    int p = std::stoi(item, &pos);
    if (pos != item.size()) throw ahodge::ValidationError("bad degree '" + item + "' in --p");
    out.push_back(p);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harmonic (p,0)-forms on almost-complex solvmanifolds"};
  app.require_subcommand(1);

  ahodge::cli::RunConfig config;
  std::string a, b, c, degrees, report = "text";
  std::vector<std::string> sets;
  auto* run = app.add_subcommand("run", "compute the h^{p,0} tables, bases and obstruction verdict");
  run->add_option("manifest", config.source, "manifest path or builtin:NAME")->required();
  run->add_option("--a", a, "value of parameter a");
  run->add_option("--b", b, "value of parameter b");
  run->add_option("--c", c, "value of parameter c");
  run->add_option("--set", sets, "name=value parameter override (repeatable)");
  run->add_option("--p", degrees, "comma-separated degrees, default 0..n");
  run->add_option("--report", report, "text or json")->check(CLI::IsMember({"text", "json"}));
  run->add_option("--modes-bound", config.modes_bound, "cap on the integer root search")
      ->check(CLI::PositiveNumber);
  run->add_option("--prec", config.prec_bits, "initial bits for certified sign checks")->check(CLI::Range(16u, 65536u));

  std::string check_path;
  auto* chk = app.add_subcommand("check", "parse a manifest and check the d^2 relations");
  chk->add_option("manifest", check_path, "manifest path or builtin:NAME")->required();

  app.add_subcommand("list", "list the built-in manifolds");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("list")) {
      for (const auto& name : ahodge::cli::builtin_names()) std::cout << "builtin:" << name << "\n";
      return 0;
    }
    if (chk->parsed()) {
      auto result = ahodge::cli::check(ahodge::cli::load_source(check_path));
      std::cout << ahodge::cli::render_check(result);
      return result.ok ? 0 : 1;
    }
    if (!a.empty()) config.overrides["a"] = a;
    if (!b.empty()) config.overrides["b"] = b;
    if (!c.empty()) config.overrides["c"] = c;
    for (const auto& s : sets) {
      auto eq = s.find('=');
      if (eq == std::string::npos || eq == 0) throw ahodge::ValidationError("--set expects name=value, got '" + s + "'");
      config.overrides[s.substr(0, eq)] = s.substr(eq + 1);
    }
    config.degrees = parse_degrees(degrees);
    config.format = report == "json" ? ahodge::cli::Format::Json : ahodge::cli::Format::Text;
    auto result = ahodge::cli::run(config);
    std::cout << (config.format == ahodge::cli::Format::Json ? ahodge::cli::render_json(result)
                                                             : ahodge::cli::render_text(result));
    return ahodge::cli::exit_code(result);
  } catch (const ahodge::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
