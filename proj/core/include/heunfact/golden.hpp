#pragma once

#include "heunfact/report.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace heunfact {

/// A transcribed table. Header lines are `key: value`; rows are `|`-separated
/// cells in `columns` order. Standard columns are mask, L, Lbar, M, Mbar,
/// alpha, beta, q (k = 1) or rho1..rhok, and orient (0: alpha is the index of
/// the right-factor solution, 1: beta is). Any other column names a letter
/// that `define` templates and later cells may use.
struct GoldenTable {
    std::string title;
    ProblemFile problem;
    std::vector<std::pair<std::string, std::string>> defines;
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

/// Throws InvalidInput on malformed files.
GoldenTable parse_golden(std::string_view text);

std::filesystem::path golden_path(const std::filesystem::path& dir, int table_id);

/// "mask | L | Lbar | M | Mbar | alpha | beta | q" (rho1..rhok when k > 1).
std::string canonical_header(int k);

struct TableComparison {
    std::vector<std::string> expected;
    std::vector<std::string> computed;

    std::size_t matches() const;
    bool ok() const { return matches() == expected.size(); }
};

/// Renders every golden row canonically and recomputes the same masks from scratch.
TableComparison reproduce_table(const GoldenTable& table);

/// Canonical row for a computed factorization with the given orientation bit.
std::string canonical_row(const Factorization& f, bool swap_alpha_beta);

} // namespace heunfact
