/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <map>
#include <string>
#include <string_view>

#include "ahodge/algebra/form.hpp"

namespace ahodge::manifold {

/// Which coframe the generators of a parsed value refer to.
enum class Frame { None, E, Phi };

struct Value {
  algebra::Form form;
  Frame frame = Frame::None;
};

/// Parameter bindings visible to expressions.
using Bindings = std::map<std::string, algebra::Scalar>;

/// Evaluates an expression over + - * / ^, parentheses, rational and decimal
/// literals, `pi`, `i`, bound parameter names, real monomials `e135` and
/// complex monomials `phi12b` (a trailing `b` bars the preceding index).
/// `*` between two forms is the wedge product; `/` and `^` take scalars.
/// Positions in errors are reported as (line, column_offset + column).
Value parse_expression(std::string_view text, const Bindings& params, int n, int line = 0, int column_offset = 0);

/// Expression that must evaluate to a scalar.
algebra::Scalar parse_scalar(std::string_view text, const Bindings& params, int line = 0, int column_offset = 0);

}  // namespace ahodge::manifold
