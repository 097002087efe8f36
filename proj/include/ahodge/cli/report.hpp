/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <string>
#include <vector>

#include "ahodge/fourier/harmonic.hpp"
#include "ahodge/manifold/spec.hpp"
#include "ahodge/obstruction/obstruction.hpp"

namespace ahodge::cli {

enum class Format { Text, Json };

struct RunConfig {
  std::string source;  ///< manifest path or builtin:NAME
  manifold::Overrides overrides;
  std::vector<int> degrees;  ///< empty means 0..n
  Format format = Format::Text;
  long modes_bound = fourier::kDefaultModesBound;
  unsigned prec_bits = algebra::kDefaultPrecisionBits;
};

struct RunResult {
  manifold::ManifoldSpec spec;
  fourier::HarmonicReport report;
  obstruction::ObstructionVerdict verdict;
};

/// Manifest text for a path or builtin:NAME.
std::string load_source(const std::string& source);

RunResult run(const RunConfig& config);

std::string render_text(const RunResult& r);
std::string render_json(const RunResult& r);

/// 0 when every space is exact, 2 otherwise.
int exit_code(const RunResult& r);

struct CheckResult {
  std::string name;
  std::vector<manifold::RelationCheck> relations;
  bool ok = true;
};

/// Loads a manifest and checks the seven d^2 relations. Load errors propagate.
CheckResult check(const std::string& manifest_text);
std::string render_check(const CheckResult& c);

}  // namespace ahodge::cli
