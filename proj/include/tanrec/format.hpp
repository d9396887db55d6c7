#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tanrec/errors.hpp"
#include "tanrec/reciprocity.hpp"

namespace tanrec {

// Flat record layout shared by the CSV and JSON writers.  Big integers are
// carried as exact decimal strings so no consumer is tempted to truncate
// them to 64 bits; the two formats hold identical values field for field.

inline constexpr std::string_view kCsvHeader =
    "p,q,P,Q,s,d,sym_tangent,sym_euler,sym_gauss,sigma,reciprocity_ok";

inline std::string poly_to_json(const Polynomial& p, std::string_view var) {
    std::string out = "{\"var\":\"";
    out += var;
    out += "\",\"coeffs\":[";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i > 0) out += ',';
        out += '"';
        out += p.coeffs()[i].str();
        out += '"';
    }
    out += "]}";
    return out;
}

inline std::string to_csv_row(const ReciprocityReport& r) {
    std::string out;
    out += std::to_string(r.p);
    out += ',';
    out += std::to_string(r.q);
    out += ',';
    out += r.P.str();
    out += ',';
    out += r.Q.str();
    out += ',';
    out += r.s.str();
    out += ',';
    out += r.d.str();
    out += ',';
    out += std::to_string(r.sym_tangent);
    out += ',';
    out += std::to_string(r.sym_euler);
    out += ',';
    out += std::to_string(r.sym_gauss);
    out += ',';
    out += std::to_string(r.sigma);
    out += ',';
    out += r.reciprocity_ok ? "true" : "false";
    return out;
}

inline std::string to_json_line(const ReciprocityReport& r) {
    std::string out = "{";
    out += "\"p\":" + std::to_string(r.p);
    out += ",\"q\":" + std::to_string(r.q);
    out += ",\"P\":\"" + r.P.str() + "\"";
    out += ",\"Q\":\"" + r.Q.str() + "\"";
    out += ",\"s\":\"" + r.s.str() + "\"";
    out += ",\"d\":\"" + r.d.str() + "\"";
    out += ",\"sym_tangent\":" + std::to_string(r.sym_tangent);
    out += ",\"sym_euler\":" + std::to_string(r.sym_euler);
    out += ",\"sym_gauss\":" + std::to_string(r.sym_gauss);
    out += ",\"sigma\":" + std::to_string(r.sigma);
    out += ",\"reciprocity_ok\":";
    out += r.reciprocity_ok ? "true" : "false";
    out += "}";
    return out;
}

inline std::string to_key_value_line(const ReciprocityReport& r) {
    std::string out;
    out += "p=" + std::to_string(r.p);
    out += " q=" + std::to_string(r.q);
    out += " P=" + r.P.str();
    out += " Q=" + r.Q.str();
    out += " s=" + r.s.str();
    out += " d=" + r.d.str();
    out += " sym_tangent=" + std::to_string(r.sym_tangent);
    out += " sym_euler=" + std::to_string(r.sym_euler);
    out += " sym_gauss=" + std::to_string(r.sym_gauss);
    out += " sigma=" + std::to_string(r.sigma);
    out += std::string(" reciprocity_ok=") + (r.reciprocity_ok ? "true" : "false");
    return out;
}

inline ReciprocityReport report_from_csv_row(std::string_view row) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = row.find(',', start);
        if (comma == std::string_view::npos) {
            fields.emplace_back(row.substr(start));
            break;
        }
        fields.emplace_back(row.substr(start, comma - start));
        start = comma + 1;
    }
    if (fields.size() != 11) {
        throw invalid_input("report_from_csv_row: expected 11 fields, got " +
                            std::to_string(fields.size()));
    }
    ReciprocityReport r;
    r.p = std::stoll(fields[0]);
    r.q = std::stoll(fields[1]);
    r.P = Int(fields[2]);
    r.Q = Int(fields[3]);
    r.s = Int(fields[4]);
    r.d = Int(fields[5]);
    r.sym_tangent = std::stoi(fields[6]);
    r.sym_euler = std::stoi(fields[7]);
    r.sym_gauss = std::stoi(fields[8]);
    r.sigma = std::stoi(fields[9]);
    if (fields[10] == "true") {
        r.reciprocity_ok = true;
    } else if (fields[10] == "false") {
        r.reciprocity_ok = false;
    } else {
        throw invalid_input("report_from_csv_row: bad boolean '" + fields[10] + "'");
    }
    return r;
}

}  // namespace tanrec
