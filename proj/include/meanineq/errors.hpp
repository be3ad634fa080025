#pragma once

#include <stdexcept>
#include <string>

namespace meanineq {

// Bad user-supplied text (CLI specs, chain files, polynomial literals,
// unreadable inputs). Maps to exit code 2 at the CLI.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// Numeric-domain violations (nonpositive pair, zero probability, unordered
// difference pair, ...) reuse std::domain_error and map to exit code 1.

} // namespace meanineq
