#include "heunfact/golden.hpp"

#include "heunfact/errors.hpp"
#include "heunfact/parse.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace heunfact {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
        if (pos == std::string_view::npos) {
            return out;
        }
        start = pos + 1;
    }
}

std::vector<std::string> standard_fields(int k) {
    std::vector<std::string> out{"mask", "L", "Lbar", "M", "Mbar", "alpha", "beta"};
    if (k == 1) {
        out.emplace_back("q");
    } else {
        for (int i = 1; i <= k; ++i) {
            out.push_back("rho" + std::to_string(i));
        }
    }
    return out;
}

bool is_standard(const std::string& name, int k) {
    const auto fields = standard_fields(k);
    return name == "orient" || std::find(fields.begin(), fields.end(), name) != fields.end();
}

std::string join(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        out += (i ? " | " : "") + cells[i];
    }
    return out;
}

} // namespace

GoldenTable parse_golden(std::string_view text) {
    GoldenTable t;
    bool have_k = false;
    bool have_exponents = false;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string s = trim(line);
        if (s.empty() || s.front() == '#') {
            continue;
        }
        const auto where = " (line " + std::to_string(line_no) + ")";
        if (t.columns.empty()) {
            const auto colon = s.find(':');
            if (colon == std::string::npos) {
                throw InvalidInput("expected 'key: value'" + where);
            }
            const std::string key = trim(std::string_view(s).substr(0, colon));
            const std::string value = trim(std::string_view(s).substr(colon + 1));
            if (key == "title") {
                t.title = value;
            } else if (key == "k") {
                try {
                    t.problem.k = std::stoi(value);
                } catch (const std::exception&) {
                    throw InvalidInput("bad k" + where);
                }
                have_k = true;
            } else if (key == "singularities") {
                t.problem.singularities = split(value, ',');
            } else if (key == "exponents") {
                have_exponents = true;
                if (value == "lame") {
                    t.problem.lame = true;
                } else {
                    t.problem.exponents = split(value, ',');
                }
            } else if (key == "define") {
                const auto eq = value.find('=');
                if (eq == std::string::npos) {
                    throw InvalidInput("define needs 'name = expr'" + where);
                }
                t.defines.emplace_back(trim(std::string_view(value).substr(0, eq)),
                                       trim(std::string_view(value).substr(eq + 1)));
            } else if (key == "columns") {
                t.columns = split(value, '|');
            } else {
                throw InvalidInput("unknown key '" + key + "'" + where);
            }
            continue;
        }
        auto cells = split(s, '|');
        if (cells.size() != t.columns.size()) {
            throw InvalidInput("row has " + std::to_string(cells.size()) + " cells, expected " +
                               std::to_string(t.columns.size()) + where);
        }
        t.rows.push_back(std::move(cells));
    }
    if (!have_k || !have_exponents || t.columns.empty()) {
        throw InvalidInput("golden file needs k, exponents and columns");
    }
    for (const auto& req : {"mask", "L", "Lbar", "orient"}) {
        if (std::find(t.columns.begin(), t.columns.end(), req) == t.columns.end()) {
            throw InvalidInput(std::string("golden file lacks column '") + req + "'");
        }
    }
    for (const auto& [name, expr] : t.defines) {
        if (!is_standard(name, t.problem.k) || name == "orient" || name == "mask") {
            throw InvalidInput("define may only set a standard field, got '" + name + "'");
        }
    }
    return t;
}

std::filesystem::path golden_path(const std::filesystem::path& dir, int table_id) {
    return dir / ("table" + std::to_string(table_id) + ".txt");
}

std::string canonical_header(int k) { return join(standard_fields(k)); }

std::size_t TableComparison::matches() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < expected.size() && i < computed.size(); ++i) {
        n += expected[i] == computed[i] ? 1 : 0;
    }
    return n;
}

std::string canonical_row(const Factorization& f, bool swap_alpha_beta) {
    const IndexPair& nu = f.index_pair;
    std::vector<std::string> cells{f.mask.str(),
                                   f.left.l_poly.str(),
                                   f.right.l_poly.str(),
                                   f.left.m_poly.str(),
                                   f.right.m_poly.str(),
                                   (swap_alpha_beta ? nu.other : nu.at_right).str(),
                                   (swap_alpha_beta ? nu.at_right : nu.other).str()};
    if (f.mask.k() == 1) {
        cells.push_back(f.q ? f.q->str() : std::string("-"));
    } else {
        for (const auto& r : f.rho) {
            cells.push_back(r.str());
        }
    }
    return join(cells);
}

TableComparison reproduce_table(const GoldenTable& table) {
    const FamilySpec family = make_family(table.problem);
    const int k = table.problem.k;

    std::vector<std::string> ext_names{"x"};
    for (const auto& n : family.symbols->names()) {
        ext_names.push_back(n);
    }
    std::vector<std::string> letters;
    for (const auto& c : table.columns) {
        if (!is_standard(c, k)) {
            if (std::find(ext_names.begin(), ext_names.end(), c) != ext_names.end()) {
                throw InvalidInput("letter column '" + c + "' shadows a symbol");
            }
            letters.push_back(c);
            ext_names.push_back(c);
        }
    }
    const SymbolTablePtr ext = make_symbols(ext_names);
    const std::size_t letter_base = ext->size() - letters.size();

    TableComparison out;
    for (const auto& row : table.rows) {
        std::map<std::string, std::string> cell;
        for (std::size_t i = 0; i < row.size(); ++i) {
            cell[table.columns[i]] = row[i];
        }
        std::vector<RationalFunction> values;
        for (std::size_t i = 0; i < letter_base; ++i) {
            values.push_back(RationalFunction::variable(ext, i));
        }
        for (const auto& l : letters) {
            values.push_back(parse_coeff(cell.at(l), ext));
        }
        auto expr = [&](const std::string& field) {
            if (auto it = cell.find(field); it != cell.end()) {
                return substitute(parse_coeff(it->second, ext), values);
            }
            for (const auto& [name, text] : table.defines) {
                if (name == field) {
                    return substitute(parse_coeff(text, ext), values);
                }
            }
            throw InvalidInput("golden table does not provide '" + field + "'");
        };
        const SplittingMask mask = SplittingMask::from_string(cell.at("mask"));
        const std::string orient = cell.at("orient");
        if (orient != "0" && orient != "1") {
            throw InvalidInput("orient must be 0 or 1");
        }

        std::vector<std::string> expected{mask.str()};
        for (const auto& f : {"L", "Lbar", "M", "Mbar"}) {
            expected.push_back(to_xpoly(expr(f), "x", family.symbols).str());
        }
        const auto fields = standard_fields(k);
        for (std::size_t i = 5; i < fields.size(); ++i) {
            expected.push_back(rebase(expr(fields[i]), family.symbols).str());
        }
        out.expected.push_back(join(expected));
        out.computed.push_back(canonical_row(solve_splitting(family, mask), orient == "1"));
    }
    return out;
}

} // namespace heunfact
