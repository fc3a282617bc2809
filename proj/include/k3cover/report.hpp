#pragma once

// Reports: every CLI operation produces one ordered JSON tree, rendered
// either as indented text or as single-line JSON.  Insertion order is
// preserved, so equal inputs give byte-identical output in both formats.

#include "k3cover/cover.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <limits>

namespace k3cover {

using Report = nlohmann::ordered_json;

inline Report jint(const Int& n) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (n >= lo && n <= hi) return n.convert_to<std::int64_t>();
    return str(n);  // past 64 bits, keep exactness as a string
}

inline Report jmaybe(const MaybeInt& m) {
    if (m.is_exact()) return jint(m.value);
    return m.render();
}

inline std::string str(const QVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += str(v[i]);
    }
    return out + ")";
}

inline Report report_invariants(const SurfaceInvariants& inv) {
    Report r;
    r["chi"] = jint(inv.chi);
    r["K2"] = jint(inv.K2);
    r["e"] = jint(inv.e);
    r["q"] = jmaybe(inv.q);
    r["pg"] = jmaybe(inv.pg);
    if (!inv.notes.empty()) r["notes"] = inv.notes;
    return r;
}

namespace detail {

inline std::string scalar_text(const Report& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

inline void render_text_rec(const Report& j, int indent, std::string& out) {
    const std::string pad(indent, ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (v.is_object() || v.is_array()) {
                if (v.empty()) {
                    out += pad + k + ": (none)\n";
                } else {
                    out += pad + k + ":\n";
                    render_text_rec(v, indent + 2, out);
                }
            } else {
                out += pad + k + ": " + scalar_text(v) + "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (v.is_object() || v.is_array()) {
                out += pad + "-\n";
                render_text_rec(v, indent + 2, out);
            } else {
                out += pad + "- " + scalar_text(v) + "\n";
            }
        }
    } else {
        out += pad + scalar_text(j) + "\n";
    }
}

}  // namespace detail

inline std::string render_text(const Report& r) {
    std::string out;
    detail::render_text_rec(r, 0, out);
    return out;
}

inline std::string render_json(const Report& r) { return r.dump() + "\n"; }

}  // namespace k3cover
