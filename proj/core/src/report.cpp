#include "heunfact/report.hpp"

#include "heunfact/errors.hpp"
#include "heunfact/parse.hpp"
#include "heunfact/version.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace heunfact {

using nlohmann::json;
using nlohmann::ordered_json;

FactorizationRecord make_record(const Factorization& f, FactorizationStatus status, bool with_operator) {
    FactorizationRecord r;
    r.mask = f.mask.str();
    r.l_poly = f.left.l_poly.str();
    r.m_poly = f.left.m_poly.str();
    r.lbar_poly = f.right.l_poly.str();
    r.mbar_poly = f.right.m_poly.str();
    r.alpha_beta = f.alpha_beta.str();
    for (const auto& rho : f.rho) {
        r.rho.push_back(rho.str());
    }
    if (f.q) {
        r.q = f.q->str();
    }
    r.nu_infinity = f.index_pair.at_right.str();
    r.nu_other = f.index_pair.other.str();
    r.status = to_string(status);
    if (with_operator) {
        r.op = OperatorRecord{f.pinned.q_top().str(), f.pinned.q_mid().str(), f.pinned.q_low().str()};
    }
    return r;
}

FactorizationRecord make_record(const FactorizationOutcome& outcome) {
    if (outcome.factorization) {
        return make_record(*outcome.factorization, outcome.status);
    }
    FactorizationRecord r;
    r.mask = outcome.mask.str();
    r.status = to_string(outcome.status);
    return r;
}

ResultDocument make_document(const ProblemFile& problem, const FamilySpec& family,
                             std::vector<FactorizationRecord> records) {
    ResultDocument doc;
    doc.problem = problem;
    doc.symbols = family.symbols->names();
    doc.factorizations = std::move(records);
    doc.engine_version = kEngineVersion;
    return doc;
}

namespace {

ordered_json optional_string(const std::optional<std::string>& s) {
    return s ? ordered_json(*s) : ordered_json(nullptr);
}

std::optional<std::string> read_optional_string(const json& j, const char* field) {
    if (!j.contains(field)) {
        throw InvalidInput(std::string("record is missing field '") + field + "'");
    }
    const json& v = j[field];
    if (v.is_null()) {
        return std::nullopt;
    }
    if (!v.is_string()) {
        throw InvalidInput(std::string("record field '") + field + "' must be a string or null");
    }
    return v.get<std::string>();
}

std::string read_string(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_string()) {
        throw InvalidInput(std::string("field '") + field + "' must be a string");
    }
    return j[field].get<std::string>();
}

} // namespace

std::string render_json(const ResultDocument& doc) {
    ordered_json j;
    j["k"] = doc.problem.k;
    j["singularities"] = doc.problem.singularities;
    if (doc.problem.lame) {
        j["exponents"] = "lame";
    } else {
        j["exponents"] = doc.problem.exponents;
    }
    j["symbols"] = doc.symbols;
    j["include_trivial"] = doc.problem.include_trivial;
    ordered_json list = ordered_json::array();
    for (const auto& r : doc.factorizations) {
        ordered_json e;
        e["mask"] = r.mask;
        e["L"] = optional_string(r.l_poly);
        e["M"] = optional_string(r.m_poly);
        e["Lbar"] = optional_string(r.lbar_poly);
        e["Mbar"] = optional_string(r.mbar_poly);
        e["alpha_beta"] = optional_string(r.alpha_beta);
        e["rho"] = r.rho;
        e["q"] = optional_string(r.q);
        e["nu_infinity"] = optional_string(r.nu_infinity);
        e["nu_other"] = optional_string(r.nu_other);
        e["status"] = r.status;
        if (r.op) {
            e["operator"] = {{"q_top", r.op->q_top}, {"q_mid", r.op->q_mid}, {"q_low", r.op->q_low}};
        }
        list.push_back(std::move(e));
    }
    j["factorizations"] = std::move(list);
    j["engine_version"] = doc.engine_version;
    return j.dump(2) + "\n";
}

ResultDocument parse_result_json(std::string_view text) {
    ResultDocument doc;
    doc.problem = parse_problem_json(text);
    const json j = json::parse(text);
    if (j.contains("symbols")) {
        doc.symbols = doc.problem.symbols;
    }
    doc.engine_version = j.contains("engine_version") ? read_string(j, "engine_version") : std::string{};
    if (!j.contains("factorizations")) {
        return doc;
    }
    if (!j["factorizations"].is_array()) {
        throw InvalidInput("field 'factorizations' must be an array");
    }
    for (const auto& e : j["factorizations"]) {
        if (!e.is_object()) {
            throw InvalidInput("factorization records must be objects");
        }
        FactorizationRecord r;
        r.mask = read_string(e, "mask");
        r.l_poly = read_optional_string(e, "L");
        r.m_poly = read_optional_string(e, "M");
        r.lbar_poly = read_optional_string(e, "Lbar");
        r.mbar_poly = read_optional_string(e, "Mbar");
        r.alpha_beta = read_optional_string(e, "alpha_beta");
        if (!e.contains("rho") || !e["rho"].is_array()) {
            throw InvalidInput("record field 'rho' must be an array");
        }
        for (const auto& v : e["rho"]) {
            if (!v.is_string()) {
                throw InvalidInput("record field 'rho' must hold strings");
            }
            r.rho.push_back(v.get<std::string>());
        }
        r.q = read_optional_string(e, "q");
        r.nu_infinity = read_optional_string(e, "nu_infinity");
        r.nu_other = read_optional_string(e, "nu_other");
        r.status = read_string(e, "status");
        if (e.contains("operator")) {
            const json& op = e["operator"];
            r.op = OperatorRecord{read_string(op, "q_top"), read_string(op, "q_mid"), read_string(op, "q_low")};
        }
        doc.factorizations.push_back(std::move(r));
    }
    return doc;
}

namespace {

std::string or_dash(const std::optional<std::string>& s) { return s ? *s : "-"; }

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    return out + "\"";
}

std::string rho_header(int k) {
    if (k == 1) {
        return "q";
    }
    std::string out;
    for (int i = 1; i <= k; ++i) {
        out += (i > 1 ? "," : "") + std::string("rho") + std::to_string(i);
    }
    return out;
}

} // namespace

std::string render_table(const ResultDocument& doc) {
    std::ostringstream out;
    out << "# k = " << doc.problem.k << ", singularities 0, 1";
    for (const auto& s : doc.problem.singularities) {
        out << ", " << s;
    }
    out << "; exponents ";
    if (doc.problem.lame) {
        out << "all 1/2 (Lame)";
    } else {
        for (std::size_t i = 0; i < doc.problem.exponents.size(); ++i) {
            out << (i ? ", " : "") << doc.problem.exponents[i];
        }
    }
    out << "\n";
    out << "mask | L | Lbar | M | Mbar | alpha_beta | " << (doc.problem.k == 1 ? "q" : "rho")
        << " | nu_infinity | nu_other | status\n";
    for (const auto& r : doc.factorizations) {
        out << r.mask << " | " << or_dash(r.l_poly) << " | " << or_dash(r.lbar_poly) << " | " << or_dash(r.m_poly)
            << " | " << or_dash(r.mbar_poly) << " | " << or_dash(r.alpha_beta) << " | ";
        if (doc.problem.k == 1) {
            out << or_dash(r.q);
        } else {
            out << "[";
            for (std::size_t i = 0; i < r.rho.size(); ++i) {
                out << (i ? "; " : "") << r.rho[i];
            }
            out << "]";
        }
        out << " | " << or_dash(r.nu_infinity) << " | " << or_dash(r.nu_other) << " | " << r.status << "\n";
    }
    return out.str();
}

std::string render_csv(const ResultDocument& doc) {
    std::ostringstream out;
    out << "mask,L,Lbar,M,Mbar,alpha_beta," << rho_header(doc.problem.k) << ",nu_infinity,nu_other,status\n";
    auto cell = [](const std::optional<std::string>& s) { return s ? csv_quote(*s) : std::string{}; };
    for (const auto& r : doc.factorizations) {
        out << r.mask << ',' << cell(r.l_poly) << ',' << cell(r.lbar_poly) << ',' << cell(r.m_poly) << ','
            << cell(r.mbar_poly) << ',' << cell(r.alpha_beta) << ',';
        if (doc.problem.k == 1) {
            out << cell(r.q);
        } else {
            for (int i = 0; i < doc.problem.k; ++i) {
                out << (i ? "," : "");
                if (static_cast<std::size_t>(i) < r.rho.size()) {
                    out << csv_quote(r.rho[static_cast<std::size_t>(i)]);
                }
            }
        }
        out << ',' << cell(r.nu_infinity) << ',' << cell(r.nu_other) << ',' << r.status << "\n";
    }
    return out.str();
}

Factorization factorization_from_record(const FactorizationRecord& record, const FamilySpec& family) {
    if (!record.l_poly || !record.m_poly || !record.lbar_poly || !record.mbar_poly || !record.alpha_beta ||
        !record.nu_infinity || !record.nu_other) {
        throw InvalidInput("record " + record.mask + " lacks factor data");
    }
    const SplittingMask mask = SplittingMask::from_string(record.mask);
    if (mask.k() != family.k) {
        throw MaskMismatch("record mask " + record.mask + " does not match k");
    }
    std::vector<std::string> ext_names{"x"};
    for (const auto& n : family.symbols->names()) {
        ext_names.push_back(n);
    }
    const SymbolTablePtr ext = make_symbols(std::move(ext_names));
    auto poly = [&](const std::string& text) { return to_xpoly(parse_coeff(text, ext), "x", family.symbols); };
    auto value = [&](const std::string& text) { return parse_coeff(text, family.symbols); };

    Factor left{poly(*record.l_poly), poly(*record.m_poly), {}};
    Factor right{poly(*record.lbar_poly), poly(*record.mbar_poly), {}};
    for (std::size_t i = 0; i < family.singularities.size(); ++i) {
        (mask.in_left(i) ? left.roots : right.roots).push_back(family.singularities[i]);
    }
    if (record.rho.size() != static_cast<std::size_t>(family.k)) {
        throw InvalidInput("record " + record.mask + " needs k rho values");
    }
    Accessory accessory{value(*record.alpha_beta), {}};
    for (const auto& r : record.rho) {
        accessory.rho.push_back(value(r));
    }
    HeunParams params = family.params();
    params.accessory = accessory;
    const FuchsOperator target = build_heun(params);
    std::optional<RationalFunction> q;
    if (record.q) {
        q = value(*record.q);
    }
    return Factorization{mask,
                         std::move(left),
                         std::move(right),
                         accessory.alpha_beta,
                         accessory.rho,
                         q,
                         IndexPair{value(*record.nu_infinity), value(*record.nu_other)},
                         target};
}

} // namespace heunfact
