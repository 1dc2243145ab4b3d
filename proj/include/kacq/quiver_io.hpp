#pragma once

#include <string>

#include "kacq/quiver.hpp"

namespace kacq {

/// Parses the text format
///   vertex <id>
///   arrow <id> <source> <target>
/// Blank lines and '#' comments are ignored. Errors are InputError with a
/// "line N:" prefix.
Quiver parse_quiver(const std::string& text);

/// Inverse of parse_quiver: vertex lines, then arrow lines, in order.
std::string render_quiver(const Quiver& q);

/// kronecker:m, loops:g, cycle:n, path:n, star:k. Throws InputError for an
/// unknown family or a bad parameter.
Quiver builtin_quiver(const std::string& spec);
bool is_builtin_spec(const std::string& spec);

/// A builtin spec or the path of a quiver file.
Quiver load_quiver(const std::string& spec_or_path);

} // namespace kacq
