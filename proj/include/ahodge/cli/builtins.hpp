/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <string>
#include <vector>

namespace ahodge::cli {

/// Names of the embedded manifests.
std::vector<std::string> builtin_names();

/// Manifest text of a built-in; throws ValidationError for unknown names.
const std::string& builtin_manifest(const std::string& name);

}  // namespace ahodge::cli
