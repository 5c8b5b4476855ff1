#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "fairhouse/core.hpp"

namespace fairhouse {

// Instance files are YAML documents:
//
//   agents: 2
//   houses: 3
//   values:
//     - [1, 0, 1/2]
//     - [0.25, 3, 0]
//   agent_labels: [alice, bob]      # optional
//   house_labels: [h1, h2, h3]      # optional
//
// Values are integers, terminating decimals or "p/q", converted exactly.
// Syntax problems throw ParseError (with line/column); well-formed documents
// that break an Instance invariant throw ValidationError.
Instance parse_instance(std::string_view text);
std::string write_instance(const Instance& inst);

Instance load_instance(const std::filesystem::path& path);

// Allocation files hold one line per agent, "agent -> house" or "agent -> -",
// with 0-based indices. Blank lines and lines starting with '#' are skipped;
// agents without a line are unassigned. The result is not checked against an
// instance; use validate_allocation for that.
Allocation parse_allocation(std::string_view text, int agent_count);
std::string write_allocation(const Allocation& alloc);

Allocation load_allocation(const std::filesystem::path& path, int agent_count);

// Human-readable metrics block, one "key: value" per line.
std::string format_report(const Instance& inst, const EnvyReport& report);

}  // namespace fairhouse
