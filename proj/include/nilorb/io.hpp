// Text parsing and JSON/CSV/table export.
#pragma once

#include "unipotent.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

namespace nilorb::io {

using nlohmann::ordered_json;

inline std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t[]");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t[]");
    return s.substr(b, e - b + 1);
}

inline std::vector<int> parse_ints(const std::string &text) {
    std::vector<int> out;
    std::stringstream ss(trim(text));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        if (tok.empty())
            continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != tok.size())
            throw DomainError("expected comma-separated integers", "cannot parse '" + text + "'");
        out.push_back(v);
    }
    return out;
}

// "4,2,2", "[4,2,2]"; "", "[]" and "-" mean the empty partition.
inline Partition parse_partition(const std::string &text) {
    if (trim(text) == "-")
        return Partition();
    return Partition(parse_ints(text));
}

inline Signature parse_signature(const std::string &text) {
    const auto v = parse_ints(text);
    if (v.size() != 2 || v[0] < 0 || v[1] < 0)
        throw DomainError("signature is p,q with p,q >= 0", "bad signature '" + text + "'");
    return {v[0], v[1]};
}

// "1,0|0,1"; "" or "-" is the empty diagram.
inline SignedDiagram parse_diagram(const std::string &text) {
    std::vector<Signature> cols;
    if (trim(text).empty() || trim(text) == "-")
        return SignedDiagram();
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, '|'))
        cols.push_back(parse_signature(tok));
    if (!is_signed_diagram(cols))
        throw DomainError("d_l >= dual(d_{l+1}) and d_l != (0,0)", "'" + text + "' is not a signed diagram");
    return SignedDiagram(std::move(cols));
}

inline std::string format_diagram(const SignedDiagram &d) {
    std::string s;
    for (std::size_t i = 0; i < d.cols.size(); ++i)
        s += (i ? "|" : "") + std::to_string(d.cols[i].plus) + "," + std::to_string(d.cols[i].minus);
    return s;
}

inline ordered_json to_json(const Partition &p) { return ordered_json(p.parts()); }

inline ordered_json to_json(const ComplexOrbit &o) {
    return {{"eps", value(o.eps)}, {"dim", o.dim}, {"columns", to_json(o.cols)}};
}

inline ordered_json to_json(const InfinitesimalCharacter &c) { return ordered_json(to_strings(c)); }

inline ordered_json to_json(const SignedDiagram &d) {
    ordered_json a = ordered_json::array();
    for (auto s : d.cols)
        a.push_back({s.plus, s.minus});
    return a;
}

inline ordered_json to_json(const RealForm &f) {
    return {{"name", form_name(f)},
            {"eps", value(f.kind.eps)},
            {"eps_dot", value(f.kind.eps_dot)},
            {"signature", {f.sig.plus, f.sig.minus}}};
}

inline ordered_json to_json(const AdmissibleDatum &d, const ComponentGroup &g) {
    ordered_json bits = ordered_json::object();
    for (std::size_t i = 0; i < g.rank(); ++i)
        bits[g.generators[i].label()] = d.bits[i];
    return {{"orbit", to_json(d.orbit)}, {"bits", bits}, {"genuine_parity", d.genuine_parity}};
}

inline ordered_json to_json(const ClassificationRow &r) {
    ordered_json ks = ordered_json::array();
    for (const auto &k : r.k_orbits)
        ks.push_back({{"diagram", to_json(k.orbit.diagram)}, {"component_order", k.component_order}});
    return {{"form", to_json(r.form)}, {"parity", r.parity},   {"orbit", to_json(r.orbit)},
            {"inf_char", to_json(r.inf_char)}, {"k_orbits", ks}, {"total", r.total},
            {"genuine", r.genuine}};
}

inline std::string join(const std::vector<std::string> &v, const std::string &sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? sep : "") + v[i];
    return s;
}

inline std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"|") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s)
        q += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

inline const char *kCsvHeader = "form,parity,orbit_columns,inf_char,k_orbit_diagram,A_X_order,total";

// One line per K-orbit; rows without K-orbits get one line with an empty diagram.
inline std::string export_csv(const std::vector<ClassificationRow> &rows) {
    std::string out = std::string(kCsvHeader) + "\n";
    for (const auto &r : rows) {
        const std::string head = csv_field(form_name(r.form)) + "," + std::to_string(r.parity) + "," +
                                 csv_field(join([&] {
                                               std::vector<std::string> v;
                                               for (int c : r.orbit.cols.parts())
                                                   v.push_back(std::to_string(c));
                                               return v;
                                           }(),
                                                ",")) +
                                 "," + csv_field(join(to_strings(r.inf_char), " "));
        const std::string tail = "," + std::to_string(r.total) + "\n";
        if (r.k_orbits.empty())
            out += head + ",,0" + tail;
        for (const auto &k : r.k_orbits)
            out += head + "," + csv_field(format_diagram(k.orbit.diagram)) + "," +
                   std::to_string(k.component_order) + tail;
    }
    return out;
}

inline std::string export_json(const std::vector<ClassificationRow> &rows) {
    ordered_json a = ordered_json::array();
    for (const auto &r : rows)
        a.push_back(to_json(r));
    return a.dump(2) + "\n";
}

inline std::string export_table(const std::vector<ClassificationRow> &rows) {
    std::ostringstream os;
    for (const auto &r : rows) {
        os << form_name(r.form) << "  parity " << r.parity << "  orbit " << to_string(r.orbit.cols)
           << "  lambda {" << join(to_strings(r.inf_char), ", ") << "}" << (r.genuine ? "  genuine" : "") << "\n";
        for (const auto &k : r.k_orbits)
            os << "    " << format_diagram(k.orbit.diagram) << "  |A_X| = " << k.component_order << "\n";
        os << "    total " << r.total << "\n";
    }
    return os.str();
}

inline std::string export_rows(const std::vector<ClassificationRow> &rows, const std::string &format) {
    if (format == "csv")
        return export_csv(rows);
    if (format == "table")
        return export_table(rows);
    if (format == "json")
        return export_json(rows);
    throw DomainError("format is json, csv or table", "unknown format '" + format + "'");
}

} // namespace nilorb::io
