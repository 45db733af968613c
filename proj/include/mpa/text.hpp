#pragma once

#include <string>

#include "mpa/process.hpp"

namespace mpa {

/// Parse the textual format:
///   Name = term;
/// one definition per line group, first definition is the root. Operators by
/// increasing binding strength: +, ||, ., | (multi-action join); lmerge(p,q)
/// and sync(p,q) are function-style; allow{a|b,c}(p), block{a}(p),
/// rename{a->b}(p), comm{a|b->c}(p), hide{a}(p); literals tau, delta.
/// Identifiers are [A-Za-z][A-Za-z0-9_]*; backtick quoting admits generated
/// names containing '#'. An identifier naming a definition is a reference,
/// any other is an action. '%' starts a line comment.
/// Throws error(syntax_error) with 1-based line/column.
specification parse_specification(const std::string& text);

/// Inverse of parse_specification: minimal parentheses, canonical payload
/// order, backtick quoting exactly where needed. Root printed first.
std::string format(const specification& spec);
std::string format(const term_ptr& t);

}  // namespace mpa
