#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "perron/graph_app.hpp"
#include "perron/spectral.hpp"

namespace perron {
namespace cli {

struct SpecDocument {
    ShiftSpec spec;
    Tolerances tol;
};

// JSON spec file: {"q": 5, "forbidden": ["00", "1010"]} with words as digit
// strings (q <= 10 only) or integer arrays; optional {"options":
// {"tol_root": x, "tol_singular": y}}.
SpecDocument parse_spec_document(const std::string& text);

// Matrix file: either plain text (line 1: n, then n rows of 0/1) or JSON
// (an array of rows or {"entries": [...]}).
DigraphInput parse_matrix_document(const std::string& text);

// Deterministic serialization: keys sorted (nlohmann objects are ordered
// maps), floating-point numbers printed with 17 significant digits.
std::string dump_json(const nlohmann::json& j, int indent = 2);

// Entry point shared by the binary and the tests.  Writes the report JSON
// to `out`, human diagnostics to `err`, and returns the process exit code
// (0 ok, 2 invalid input, 3 assumption violated, 4 numeric failure;
// verify additionally exits 1 on oracle discrepancies).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cli
}  // namespace perron
