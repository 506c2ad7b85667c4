#pragma once

#include "heunfact/report.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace heunfact {

/// Exit codes: 0 ok, 1 verification or table mismatch, 2 invalid input,
/// 3 degenerate system.
struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

enum class OutputFormat { Table, Json, Csv };

/// Throws InvalidInput for an unknown name.
OutputFormat parse_output_format(std::string_view name);

struct FamilyFlags {
    int k = 0;
    std::string sing;
    bool lame = false;
    std::optional<std::string> gamma;
    std::optional<std::string> delta;
    std::optional<std::string> eps;
    std::optional<std::string> symbols;
    bool include_trivial = false;
};

/// Throws InvalidInput when the exponent flags are inconsistent.
ProblemFile problem_from_flags(const FamilyFlags& flags);

CommandResult cmd_factorize(const ProblemFile& problem, OutputFormat format);
CommandResult cmd_adjoint(const ProblemFile& problem, OutputFormat format, bool twice);
CommandResult cmd_tables(int table_id, const std::filesystem::path& golden_dir);
CommandResult cmd_verify_text(std::string_view text);
CommandResult cmd_verify(const std::filesystem::path& path);

} // namespace heunfact
