#include "heunfact/commands.hpp"

#include "heunfact/errors.hpp"
#include "heunfact/golden.hpp"
#include "heunfact/solutions.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace heunfact {

namespace {

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(text);
    while (std::getline(in, cell, ',')) {
        const auto first = cell.find_first_not_of(' ');
        const auto last = cell.find_last_not_of(' ');
        out.push_back(first == std::string::npos ? std::string{} : cell.substr(first, last - first + 1));
    }
    if (!text.empty() && text.back() == ',') {
        out.emplace_back();
    }
    return out;
}

CommandResult invalid(const std::string& message) { return {2, {}, "error: " + message + "\n"}; }

CommandResult guarded(const std::function<CommandResult()>& body) {
    try {
        return body();
    } catch (const SingularSystem& e) {
        return {3, {}, std::string("error: ") + e.what() + "\n"};
    } catch (const Error& e) {
        return invalid(e.what());
    }
}

std::string render(const ResultDocument& doc, OutputFormat format) {
    switch (format) {
    case OutputFormat::Json:
        return render_json(doc);
    case OutputFormat::Csv:
        return render_csv(doc);
    case OutputFormat::Table:
        break;
    }
    return render_table(doc);
}

bool has_factor_data(const FactorizationRecord& r) {
    return r.l_poly && r.m_poly && r.lbar_poly && r.mbar_poly && r.alpha_beta;
}

} // namespace

OutputFormat parse_output_format(std::string_view name) {
    if (name == "table") {
        return OutputFormat::Table;
    }
    if (name == "json") {
        return OutputFormat::Json;
    }
    if (name == "csv") {
        return OutputFormat::Csv;
    }
    throw InvalidInput("unknown format '" + std::string(name) + "' (expected table, json or csv)");
}

ProblemFile problem_from_flags(const FamilyFlags& flags) {
    ProblemFile p;
    p.k = flags.k;
    p.singularities = split_csv(flags.sing);
    p.include_trivial = flags.include_trivial;
    if (flags.symbols) {
        p.symbols = split_csv(*flags.symbols);
    }
    const bool any_heun = flags.gamma || flags.delta || flags.eps;
    if (flags.lame) {
        if (any_heun) {
            throw InvalidInput("--lame cannot be combined with --gamma/--delta/--eps");
        }
        p.lame = true;
        return p;
    }
    if (!flags.gamma || !flags.delta || !flags.eps) {
        throw InvalidInput("give either --lame or all of --gamma, --delta and --eps");
    }
    p.exponents = {*flags.gamma, *flags.delta};
    for (auto& e : split_csv(*flags.eps)) {
        p.exponents.push_back(std::move(e));
    }
    return p;
}

CommandResult cmd_factorize(const ProblemFile& problem, OutputFormat format) {
    return guarded([&] {
        const FamilySpec family = make_family(problem);
        const auto outcomes = factorize_all(family, problem.include_trivial);
        std::vector<FactorizationRecord> records;
        CommandResult result;
        for (const auto& o : outcomes) {
            records.push_back(make_record(o));
            if (o.status == FactorizationStatus::Singular) {
                result.exit_code = 3;
                result.err += "mask " + o.mask.str() + ": " + o.message + "\n";
            }
        }
        result.out = render(make_document(problem, family, std::move(records)), format);
        return result;
    });
}

CommandResult cmd_adjoint(const ProblemFile& problem, OutputFormat format, bool twice) {
    return guarded([&] {
        const FamilySpec family = make_family(problem);
        const auto outcomes = factorize_all(family, problem.include_trivial);
        std::vector<FactorizationRecord> records;
        CommandResult result;
        for (const auto& o : outcomes) {
            if (!o.factorization) {
                records.push_back(make_record(o));
                result.exit_code = 3;
                result.err += "mask " + o.mask.str() + ": " + o.message + "\n";
                continue;
            }
            const Factorization star = adjoint_factorization(*o.factorization);
            if (!twice) {
                records.push_back(make_record(star, o.status, true));
                continue;
            }
            const Factorization back = adjoint_factorization(star);
            if (!operator_equal(back.pinned, o.factorization->pinned) || !(back.mask == o.mask)) {
                throw ConsistencyFailure("double adjoint of mask " + o.mask.str() + " differs from the original");
            }
            records.push_back(make_record(back, o.status, true));
        }
        result.out = render(make_document(problem, family, std::move(records)), format);
        return result;
    });
}

CommandResult cmd_tables(int table_id, const std::filesystem::path& golden_dir) {
    if (table_id < 1 || table_id > 7) {
        return invalid("table id must be between 1 and 7, got " + std::to_string(table_id));
    }
    const auto path = golden_path(golden_dir, table_id);
    std::ifstream in(path);
    if (!in) {
        return invalid("cannot read golden file " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return guarded([&] {
        const GoldenTable table = parse_golden(buffer.str());
        const TableComparison cmp = reproduce_table(table);
        CommandResult result;
        std::ostringstream out;
        out << "Table " << table_id << ": " << table.title << "\n" << canonical_header(table.problem.k) << "\n";
        for (const auto& row : cmp.computed) {
            out << row << "\n";
        }
        out << cmp.matches() << "/" << cmp.expected.size() << " rows match\n";
        if (!cmp.ok()) {
            result.exit_code = 1;
            for (std::size_t i = 0; i < cmp.expected.size(); ++i) {
                if (cmp.expected[i] != cmp.computed[i]) {
                    out << "row " << i + 1 << " differs\n- " << cmp.expected[i] << "\n+ " << cmp.computed[i] << "\n";
                }
            }
        }
        result.out = out.str();
        return result;
    });
}

namespace {

bool fuchs_holds(const Factorization& f, const FamilySpec& family) {
    const int deg = f.right.l_poly.degree();
    const RationalFunction lead = f.right.m_poly.coeff(deg - 1);
    const auto& nu = f.index_pair;
    return rf_equal(nu.at_right, deg >= 1 ? lead : RationalFunction(family.symbols)) &&
           rf_equal(nu.at_right + nu.other, family.fuchs_sum()) && rf_equal(nu.at_right * nu.other, f.alpha_beta);
}

bool residual_vanishes(const Factorization& f) {
    return residual_numerator(f.pinned, right_solution(f)).is_zero();
}

} // namespace

CommandResult cmd_verify_text(std::string_view text) {
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
        return invalid("problem file is empty");
    }
    return guarded([&] {
        ResultDocument doc = parse_result_json(text);
        const FamilySpec family = make_family(doc.problem);
        if (doc.factorizations.empty()) {
            for (const auto& o : factorize_all(family, doc.problem.include_trivial)) {
                doc.factorizations.push_back(make_record(o));
            }
        }
        std::map<std::string, Factorization> by_mask;
        for (const auto& r : doc.factorizations) {
            if (has_factor_data(r)) {
                by_mask.emplace(r.mask, factorization_from_record(r, family));
            }
        }
        const bool lame = family.is_lame();
        std::ostringstream out;
        int passed = 0;
        int total = 0;
        auto report = [&](const std::string& mask, const char* check, bool ok) {
            ++total;
            passed += ok ? 1 : 0;
            out << "mask " << mask << " " << check << " " << (ok ? "PASS" : "FAIL") << "\n";
        };
        auto safely = [](const std::function<bool()>& check) {
            try {
                return check();
            } catch (const Error&) {
                return false;
            }
        };
        for (const auto& r : doc.factorizations) {
            const auto it = by_mask.find(r.mask);
            if (it == by_mask.end()) {
                out << "mask " << r.mask << " " << r.status << " (no factors to check)\n";
                continue;
            }
            const Factorization& f = it->second;
            report(r.mask, "roundtrip",
                   safely([&] { return operator_equal(expand_factors(f.left, f.right), f.pinned); }));
            report(r.mask, "fuchs", safely([&] { return fuchs_holds(f, family); }));
            report(r.mask, "residual", safely([&] { return residual_vanishes(f); }));
            if (lame && f.mask.is_proper()) {
                report(r.mask, "lame-symmetry", safely([&] {
                           const std::string other = f.mask.complement().str();
                           const auto g = by_mask.find(other);
                           const Factorization partner =
                               g != by_mask.end() ? g->second : solve_splitting(family, f.mask.complement());
                           return lame_swap_check(f, partner) && lame_antisymmetry_holds(f);
                       }));
            }
        }
        out << passed << "/" << total << " checks passed\n";
        return CommandResult{passed == total ? 0 : 1, out.str(), {}};
    });
}

CommandResult cmd_verify(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        return invalid("cannot read " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return cmd_verify_text(buffer.str());
}

} // namespace heunfact
