#pragma once

#include "mealy/automaton.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace mealy {

// Text format, one automaton per file:
//
//   alphabet <m>
//   states <n>
//   state <name> trans <pi(q,x0)> ... <pi(q,x_{m-1})> out <lambda(q,x0)> ... <lambda(q,x_{m-1})>
//
// with n `state` lines in index order. `#` starts a comment. Indices are 0-based.

/// Throws ParseError with the 1-based line and column of the offending token.
MealyAutomaton parse_automaton(std::string_view text);

MealyAutomaton read_automaton_file(const std::filesystem::path& path);

std::string format_automaton(const MealyAutomaton& a);

} // namespace mealy
