#include "heunfact/errors.hpp"
#include "heunfact/parse.hpp"
#include "heunfact/report.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>

namespace heunfact {

using nlohmann::json;

namespace {

std::vector<std::string> string_list(const json& j, const char* field) {
    if (!j.is_array()) {
        throw InvalidInput(std::string("field '") + field + "' must be an array of strings");
    }
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string()) {
            throw InvalidInput(std::string("field '") + field + "' must be an array of strings");
        }
        out.push_back(e.get<std::string>());
    }
    return out;
}

} // namespace

ProblemFile parse_problem_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InvalidInput(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw InvalidInput("problem file must be a JSON object");
    }
    ProblemFile p;
    if (!j.contains("k") || !j["k"].is_number_integer()) {
        throw InvalidInput("field 'k' must be an integer");
    }
    p.k = j["k"].get<int>();
    if (!j.contains("singularities")) {
        throw InvalidInput("missing field 'singularities'");
    }
    p.singularities = string_list(j["singularities"], "singularities");
    if (!j.contains("exponents")) {
        throw InvalidInput("missing field 'exponents'");
    }
    const json& ex = j["exponents"];
    if (ex.is_string()) {
        if (ex.get<std::string>() != "lame") {
            throw InvalidInput("field 'exponents' must be \"lame\" or an array of strings");
        }
        p.lame = true;
    } else {
        p.exponents = string_list(ex, "exponents");
    }
    if (j.contains("symbols")) {
        p.symbols = string_list(j["symbols"], "symbols");
    }
    if (j.contains("include_trivial")) {
        if (!j["include_trivial"].is_boolean()) {
            throw InvalidInput("field 'include_trivial' must be a boolean");
        }
        p.include_trivial = j["include_trivial"].get<bool>();
    }
    return p;
}

SymbolTablePtr problem_symbols(const ProblemFile& problem) {
    std::vector<std::string> names = problem.symbols;
    if (names.empty()) {
        auto note = [&](const std::string& text) {
            for (auto& id : collect_identifiers(text)) {
                if (std::find(names.begin(), names.end(), id) == names.end()) {
                    names.push_back(std::move(id));
                }
            }
        };
        for (const auto& s : problem.singularities) {
            note(s);
        }
        for (const auto& e : problem.exponents) {
            note(e);
        }
    }
    if (std::find(names.begin(), names.end(), "x") != names.end()) {
        throw InvalidInput("'x' is the independent variable and cannot be a parameter");
    }
    return make_symbols(std::move(names));
}

FamilySpec make_family(const ProblemFile& problem) {
    if (problem.k < 1) {
        throw InvalidInput("k must be at least 1");
    }
    const auto k = static_cast<std::size_t>(problem.k);
    if (problem.singularities.size() != k) {
        throw InvalidInput("expected " + std::to_string(k) + " singularities, got " +
                           std::to_string(problem.singularities.size()));
    }
    const SymbolTablePtr symbols = problem_symbols(problem);
    std::vector<RationalFunction> points;
    for (const auto& s : problem.singularities) {
        points.push_back(parse_coeff(s, symbols));
    }
    FamilySpec family;
    if (problem.lame) {
        family = lame_family(problem.k, symbols, std::move(points));
    } else {
        if (problem.exponents.size() != k + 2) {
            throw InvalidInput("expected " + std::to_string(k + 2) + " exponents (gamma, delta, eps_1..eps_k), got " +
                               std::to_string(problem.exponents.size()));
        }
        family.k = problem.k;
        family.symbols = symbols;
        family.singularities = HeunParams::standard_singularities(symbols, std::move(points));
        for (const auto& e : problem.exponents) {
            family.exponents.push_back(parse_coeff(e, symbols));
        }
    }
    check_distinct_singularities(family.singularities);
    return family;
}

} // namespace heunfact
