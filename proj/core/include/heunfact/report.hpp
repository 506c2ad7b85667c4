#pragma once

#include "heunfact/factorization.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace heunfact {

/// Input family description shared by the CLI flags and JSON problem files.
struct ProblemFile {
    int k = 0;
    /// The k free singularities a_1..a_k (0 and 1 are implicit).
    std::vector<std::string> singularities;
    bool lame = false;
    /// gamma, delta, eps_1..eps_k when !lame.
    std::vector<std::string> exponents;
    /// Explicit symbol order; empty means identifiers in order of first
    /// appearance, singularities first.
    std::vector<std::string> symbols;
    bool include_trivial = false;
};

/// Throws InvalidInput (malformed JSON or fields) or the parser's errors.
ProblemFile parse_problem_json(std::string_view text);

/// Declared symbol table of a problem; "x" is reserved.
SymbolTablePtr problem_symbols(const ProblemFile& problem);

/// Parses and validates; throws CoincidentSingularities for duplicate constants.
FamilySpec make_family(const ProblemFile& problem);

struct OperatorRecord {
    std::string q_top;
    std::string q_mid;
    std::string q_low;

    friend bool operator==(const OperatorRecord&, const OperatorRecord&) = default;
};

struct FactorizationRecord {
    std::string mask;
    std::optional<std::string> l_poly;
    std::optional<std::string> m_poly;
    std::optional<std::string> lbar_poly;
    std::optional<std::string> mbar_poly;
    std::optional<std::string> alpha_beta;
    std::vector<std::string> rho;
    std::optional<std::string> q;
    std::optional<std::string> nu_infinity;
    std::optional<std::string> nu_other;
    std::string status;
    std::optional<OperatorRecord> op;

    friend bool operator==(const FactorizationRecord&, const FactorizationRecord&) = default;
};

struct ResultDocument {
    ProblemFile problem;
    std::vector<std::string> symbols;
    std::vector<FactorizationRecord> factorizations;
    std::string engine_version;
};

FactorizationRecord make_record(const Factorization& f, FactorizationStatus status, bool with_operator = false);
FactorizationRecord make_record(const FactorizationOutcome& outcome);

ResultDocument make_document(const ProblemFile& problem, const FamilySpec& family,
                             std::vector<FactorizationRecord> records);

std::string render_json(const ResultDocument& doc);
/// Throws InvalidInput when the text does not match the document schema.
ResultDocument parse_result_json(std::string_view text);
std::string render_table(const ResultDocument& doc);
std::string render_csv(const ResultDocument& doc);

/// Rebuilds the factorization a record describes against `family`. The
/// pinned operator takes Q_top and Q_mid from the family and Q_low from the
/// record's accessory values.
Factorization factorization_from_record(const FactorizationRecord& record, const FamilySpec& family);

} // namespace heunfact
