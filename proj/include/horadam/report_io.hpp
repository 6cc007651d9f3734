#pragma once

#include "horadam/format.hpp"
#include "horadam/identities.hpp"

#include <json.hpp>

#include <limits>
#include <sstream>
#include <string>

namespace horadam {

inline nlohmann::json disc_to_json(const Int& d) {
    // integers beyond 64 bits fall back to strings
    if (d >= std::numeric_limits<long long>::min() && d <= std::numeric_limits<long long>::max())
        return nlohmann::json(d.convert_to<long long>());
    return nlohmann::json(d.str());
}

/// Rational-valued quaternions serialize as 4-arrays of "num/den" strings;
/// quaternions with a sqrt(D) residue use {"rat", "irr", "D"} objects per
/// component.
inline nlohmann::json quat_to_json(const Quaternion<QuadExt>& u) {
    bool rational = u.w.is_rational() && u.x.is_rational() && u.y.is_rational() &&
                    u.z.is_rational();
    nlohmann::json arr = nlohmann::json::array();
    for (const QuadExt* c : {&u.w, &u.x, &u.y, &u.z}) {
        if (rational) {
            arr.push_back(c->rat().str());
        } else {
            arr.push_back(nlohmann::json{{"rat", c->rat().str()},
                                         {"irr", c->irr().str()},
                                         {"D", disc_to_json(c->disc())}});
        }
    }
    return arr;
}

inline nlohmann::json report_to_json(const IdentityReport& rep) {
    nlohmann::json j;
    j["identity"] = std::string(identity_name(rep.id));
    j["params"] = {{"p", rep.params.p.str()},
                   {"q", rep.params.q.str()},
                   {"a", rep.params.a.str()},
                   {"b", rep.params.b.str()}};
    j["indices"] = rep.indices;
    j["lhs"] = quat_to_json(rep.lhs);
    j["rhs"] = quat_to_json(rep.rhs);
    j["equal"] = rep.equal;
    j["notes"] = rep.notes;
    return j;
}

inline std::string report_csv_header() {
    return "identity,p,q,a,b,indices,lhs,rhs,equal,notes";
}

inline std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string report_to_csv_row(const IdentityReport& rep) {
    std::ostringstream os;
    os << identity_name(rep.id) << ',' << rep.params.p << ',' << rep.params.q << ','
       << rep.params.a << ',' << rep.params.b << ',';
    std::string idx;
    for (size_t i = 0; i < rep.indices.size(); ++i) {
        if (i) idx += ';';
        idx += std::to_string(rep.indices[i]);
    }
    os << csv_quote(idx) << ',' << csv_quote(to_string(rep.lhs)) << ','
       << csv_quote(to_string(rep.rhs)) << ',' << (rep.equal ? "true" : "false");
    std::string notes;
    for (size_t i = 0; i < rep.notes.size(); ++i) {
        if (i) notes += "; ";
        notes += rep.notes[i];
    }
    os << ',' << csv_quote(notes);
    return os.str();
}

inline std::string report_to_human(const IdentityReport& rep) {
    std::ostringstream os;
    os << identity_name(rep.id) << " p=" << rep.params.p << " q=" << rep.params.q;
    if (identity_uses_seeds(rep.id))
        os << " a=" << rep.params.a << " b=" << rep.params.b;
    if (!rep.indices.empty()) {
        os << " [";
        for (size_t i = 0; i < rep.indices.size(); ++i) {
            if (i) os << ',';
            os << rep.indices[i];
        }
        os << ']';
    }
    os << " lhs=" << to_string(rep.lhs) << " rhs=" << to_string(rep.rhs)
       << (rep.equal && rep.ok ? " ok" : " FAIL");
    for (const auto& n : rep.notes)
        if (!rep.ok || n.find("differs") != std::string::npos) os << " (" << n << ')';
    return os.str();
}

} // namespace horadam
