/* SPDX-License-Identifier: Apache-2.0 */

#include "ahodge/cli/builtins.hpp"

#include <map>

#include "ahodge/error.hpp"

namespace ahodge::cli {

namespace {

// T^4-bundle over T^2 with the lattice a0 Z x Z in the (t, x) directions.
// Base characters are exp(2 pi i (l x + m t / a0)); e_1 = d/dt and
// e_2 = d/dx on base functions, so conj(V1) = ((1/a) e_1 + i e_2) / 2 acts
// by -pi l + i pi m / (a a0). V2, V3 only involve e_3..e_6 (fiber).
const char* const kFls = R"(# almost-Kaehler family J_{a,b,c}, omega_{a,b,c}
[manifold]
name = fls
dim = 6

[params]
a = 1
b = 0
c = 1
a0 = 1   # lattice period, trusted input

[coframe]
d e1 = 0
d e2 = 0
d e3 = -e13 - e25
d e4 = e14 - e26
d e5 = -e15
d e6 = e16

[acs]
phi1 = a*e1 + i*e2
phi2 = b*e5 + c*e3 + i*e6
phi3 = c*e4 + i*e5

[metric]
omega = a*e12 + b*e56 + c*(e36 + e45)

[fibration]
rank = 2
coords = [x, t/a0]
V1: base, symbol = [-pi, i*pi/(a*a0)]
V2: fiber
V3: fiber
fiber_span = [V2, V3]
)";

// Same manifold, J with no compatible symplectic form.
const char* const kFlsNonak = R"(# phi^k = e^{2k-1} + i e^{2k} on the same solvmanifold
[manifold]
name = fls_nonak
dim = 6

[params]
a0 = 1

[coframe]
d e1 = 0
d e2 = 0
d e3 = -e13 - e25
d e4 = e14 - e26
d e5 = -e15
d e6 = e16

[acs]
phi1 = e1 + i*e2
phi2 = e3 + i*e4
phi3 = e5 + i*e6

[metric]
omega = (i/2)*(phi11b + phi22b + phi33b)

[fibration]
rank = 2
coords = [x, t/a0]
V1: base, symbol = [-pi, i*pi/a0]
V2: fiber
V3: fiber
fiber_span = [V2, V3]
)";

// Iwasawa manifold, e^1..e^4 = dx1, dy1, dx2, dy2. Base torus (x2, y2):
// conj(V3) = (e_3 + i e_4) / 2 acts by i pi l - pi m on exp(2 pi i (l x2 + m y2)).
const char* const kIwasawaAk = R"(# almost-Kaehler Iwasawa manifold
[manifold]
name = iwasawa_ak
dim = 6

[coframe]
d e1 = 0
d e2 = 0
d e3 = 0
d e4 = 0
d e5 = -e13 + e24
d e6 = -e14 - e23

[acs]
phi1 = e1 + i*e6
phi2 = e2 + i*e5
phi3 = e3 + i*e4

[metric]
omega = (i/2)*(phi11b + phi22b + phi33b)

[fibration]
rank = 2
coords = [x2, y2]
V1: fiber
V2: fiber
V3: base, symbol = [i*pi, -pi]
fiber_span = [V1, V2]
)";

// psi^1 = d zbar1, psi^2 = d zbar2, psi^3 = d zbar3 - z1 dz2.
const char* const kIwasawaStd = R"(# Iwasawa manifold, non-integrable J from conjugated coordinates
[manifold]
name = iwasawa_std
dim = 6

[coframe]
d phi1 = 0
d phi2 = 0
d phi3 = -phi1b2b

[metric]
gram = [[2, 0, 0], [0, 2, 0], [0, 0, 2]]

[fibration]
rank = 0
V1: fiber
V2: fiber
V3: fiber
fiber_span = [V1, V2, V3]
)";

// Holomorphic coframe dz1, dz2, dz3 - z1 dz2.
const char* const kIwasawaComplex = R"(# complex Iwasawa manifold
[manifold]
name = iwasawa_complex
dim = 6

[coframe]
d e1 = 0
d e2 = 0
d e3 = 0
d e4 = 0
d e5 = -e13 + e24
d e6 = -e14 - e23
d phi3 = -phi12

[acs]
phi1 = e1 + i*e2
phi2 = e3 + i*e4
phi3 = e5 + i*e6

[metric]
omega = (i/2)*(phi11b + phi22b + phi33b)

[fibration]
rank = 2
coords = [x2, y2]
V1: fiber
V2: base, symbol = [i*pi, -pi]
V3: fiber
fiber_span = [V1, V3]
)";

const std::map<std::string, std::string>& table() {
  static const std::map<std::string, std::string> t = {
      {"fls", kFls},
      {"fls_nonak", kFlsNonak},
      {"iwasawa_ak", kIwasawaAk},
      {"iwasawa_std", kIwasawaStd},
      {"iwasawa_complex", kIwasawaComplex},
  };
  return t;
}

}  // namespace

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : table()) out.push_back(k);
  return out;
}

const std::string& builtin_manifest(const std::string& name) {
  auto it = table().find(name);
  if (it == table().end()) throw ValidationError("unknown built-in '" + name + "'");
  return it->second;
}

}  // namespace ahodge::cli
