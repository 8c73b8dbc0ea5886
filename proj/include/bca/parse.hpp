#pragma once

#include <stdexcept>

#include "bca/contact.hpp"
#include "bca/region.hpp"

namespace bca {

/// Parse failure with a 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, int col, const std::string& msg)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          line_(line), col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

/// Line-oriented structure description: `atoms:` with space-separated
/// names, `contact:` overlap or adjacency, `edges:` with a-b pairs,
/// optional `name:`, `#` comments.
struct SpecFile {
    std::string name;
    std::vector<std::string> atoms;
    std::string contact_kind;  // "overlap" or "adjacency"
    std::vector<std::pair<std::string, std::string>> edges;
};

SpecFile parse_spec_text(const std::string& text);
ContactStructure build_structure(const SpecFile& spec);

/// Region expression evaluation: either a region value or, when the
/// expression is a predicate (`<<` or `C`), a truth value.
struct EvalResult {
    std::optional<Region> region;
    std::optional<bool> truth;
};

EvalResult eval_region_expression(const std::string& text);

/// Convenience: evaluation that must produce a region.
Region parse_region(const std::string& text);

/// "p/q", "p", "inf" or "-inf".
Rat parse_rational_text(const std::string& text);

}  // namespace bca
