#ifndef BURNSIDE_REPORT_HPP
#define BURNSIDE_REPORT_HPP

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "burnside/burnside_ring.hpp"
#include "burnside/common.hpp"
#include "burnside/fusion.hpp"
#include "burnside/ideals.hpp"
#include "burnside/lattice.hpp"
#include "burnside/stable.hpp"

namespace burnside {

enum class Format { Table, Json };

inline Format parse_format(const std::string& s) {
    if (s == "table") return Format::Table;
    if (s == "json") return Format::Json;
    throw InvalidInput("unknown format: " + s);
}

namespace detail {

inline long long to_ll(const Int& v) { return v.convert_to<long long>(); }

inline std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

inline std::vector<std::string> class_labels(const FiniteGroup& g, const SubgroupClassTable& cls) {
    std::vector<std::string> out;
    for (int c = 0; c < cls.size(); ++c) out.push_back(subgroup_label(g, cls.rep(c)));
    return out;
}

/// "alpha[x]", "2*alpha[x]", "-4*alpha[x]"
inline std::string alpha_term(const Int& coeff, const std::string& label, bool leading) {
    std::string out;
    Int c = coeff;
    if (leading) {
        if (c < 0) {
            out += "-";
            c = -c;
        }
    } else {
        out += c < 0 ? " - " : " + ";
        if (c < 0) c = -c;
    }
    if (c != 1) out += c.str() + "*";
    return out + "alpha[" + label + "]";
}

inline std::string alpha_combination(const FusionSystem& f, const ZElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool leading = true;
    for (const auto& [c, coeff] : x.coeffs) {
        out += alpha_term(coeff, f.f_class_label(c), leading);
        leading = false;
    }
    return out;
}

inline std::string transitive_combination(const FiniteGroup& s, const SubgroupClassTable& cls,
                                          const ZElement& x) {
    if (x.is_zero()) return "0";
    std::string out;
    bool leading = true;
    for (const auto& [c, coeff] : x.coeffs) {
        Int v = coeff;
        if (leading) {
            if (v < 0) {
                out += "-";
                v = -v;
            }
        } else {
            out += v < 0 ? " - " : " + ";
            if (v < 0) v = -v;
        }
        if (v != 1) out += v.str() + "*";
        out += "[S/" + subgroup_label(s, cls.rep(c)) + "]";
        leading = false;
    }
    return out;
}

inline std::string ghost_tuple(const std::vector<Int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out + ")";
}

inline std::string ideal_name(const FusionSystem& f, const IdealDescriptor& i) {
    const std::string letter = i.ring == Ring::PLocal ? "J" : "I";
    return letter + "[" + f.f_class_label(i.f_class) + "," + std::to_string(i.q) + "]";
}

}  // namespace detail

/// Table of marks of G: class labels header plus the integer matrix, rows
/// [G/Q] in class order, columns the evaluating class [P].
inline std::string marks_report(const FiniteGroup& g, const SubgroupClassTable& cls,
                                const TableOfMarks& tom, Format format) {
    const auto labels = detail::class_labels(g, cls);
    if (format == Format::Json) {
        nlohmann::json j;
        j["name"] = g.name().empty() ? "G" : g.name();
        j["classes"] = labels;
        auto& m = j["matrix"] = nlohmann::json::array();
        for (int q = 0; q < tom.size(); ++q) {
            nlohmann::json row = nlohmann::json::array();
            for (int p = 0; p < tom.size(); ++p) row.push_back(detail::to_ll(tom.at(q, p)));
            m.push_back(row);
        }
        return detail::dump_json(j);
    }
    const int k = cls.size();
    std::vector<std::string> row_names;
    std::size_t name_w = 0;
    for (int q = 0; q < k; ++q) {
        row_names.push_back("[S/" + labels[q] + "]");
        name_w = std::max(name_w, row_names.back().size());
    }
    std::vector<std::size_t> col_w(k);
    for (int p = 0; p < k; ++p) {
        col_w[p] = labels[p].size();
        for (int q = 0; q < k; ++q) col_w[p] = std::max(col_w[p], tom.at(q, p).str().size());
    }
    std::ostringstream out;
    out << "table of marks of " << (g.name().empty() ? "G" : g.name()) << "\n";
    out << std::string(name_w, ' ');
    for (int p = 0; p < k; ++p)
        out << "  " << std::string(col_w[p] - labels[p].size(), ' ') << labels[p];
    out << "\n";
    for (int q = 0; q < k; ++q) {
        out << row_names[q] << std::string(name_w - row_names[q].size(), ' ');
        for (int p = 0; p < k; ++p) {
            const std::string v = tom.at(q, p).str();
            out << "  " << std::string(col_w[p] - v.size(), ' ') << v;
        }
        out << "\n";
    }
    return out.str();
}

inline std::string subgroups_report(const FiniteGroup& g, const SubgroupClassTable& cls,
                                    Format format) {
    const auto labels = detail::class_labels(g, cls);
    if (format == Format::Json) {
        nlohmann::json j;
        j["name"] = g.name().empty() ? "G" : g.name();
        auto& arr = j["classes"] = nlohmann::json::array();
        for (int c = 0; c < cls.size(); ++c) {
            nlohmann::json e;
            e["label"] = labels[c];
            e["order"] = cls.rep(c).order();
            e["size"] = cls.classes[c].size();
            e["members"] = nlohmann::json::array();
            for (const Subgroup& s : cls.classes[c]) e["members"].push_back(s.members());
            arr.push_back(e);
        }
        auto& sub = j["subconj"] = nlohmann::json::array();
        for (int i = 0; i < cls.size(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (int jj = 0; jj < cls.size(); ++jj) row.push_back(cls.subconj[i][jj] != 0);
            sub.push_back(row);
        }
        return detail::dump_json(j);
    }
    std::ostringstream out;
    int total = 0;
    for (const auto& c : cls.classes) total += static_cast<int>(c.size());
    out << "subgroups of " << (g.name().empty() ? "G" : g.name()) << ": " << total << " in "
        << cls.size() << " conjugacy classes\n";
    for (int c = 0; c < cls.size(); ++c) {
        out << "  [" << labels[c] << "]  order " << cls.rep(c).order() << ", class size "
            << cls.classes[c].size() << "\n";
    }
    return out.str();
}

inline std::string fusion_report(const FusionSystem& f, Format format) {
    if (format == Format::Json) {
        nlohmann::json j;
        j["ambient"] = f.ambient_name.empty() ? "G" : f.ambient_name;
        j["p"] = f.p;
        j["s_classes"] = f.cls.size();
        j["f_classes"] = f.class_count();
        auto& arr = j["classes"] = nlohmann::json::array();
        for (int c = 0; c < f.class_count(); ++c) {
            nlohmann::json e;
            e["label"] = f.f_class_label(c);
            e["fully_normalized"] = subgroup_label(f.S, f.cls.rep(f.fully_normalized[c]));
            e["s_classes"] = nlohmann::json::array();
            for (int sc : f.f_classes[c])
                e["s_classes"].push_back(subgroup_label(f.S, f.cls.rep(sc)));
            arr.push_back(e);
        }
        return detail::dump_json(j);
    }
    std::ostringstream out;
    out << "fusion system F_S(" << (f.ambient_name.empty() ? "G" : f.ambient_name)
        << "), p = " << f.p << ", |Cl(S)| = " << f.cls.size() << ", |Cl(F)| = " << f.class_count()
        << "\n";
    for (int c = 0; c < f.class_count(); ++c) {
        out << "  [" << f.f_class_label(c) << "]_F = {";
        for (std::size_t i = 0; i < f.f_classes[c].size(); ++i) {
            if (i) out << ", ";
            out << "[" << subgroup_label(f.S, f.cls.rep(f.f_classes[c][i])) << "]";
        }
        out << "}\n";
    }
    return out.str();
}

/// Each alpha as (a) a nonnegative combination of transitive S-sets and
/// (b) its ghost vector over Cl(S).
inline std::string alpha_report(const FusionSystem& f, const AlphaBasis& b, Format format) {
    if (format == Format::Json) {
        nlohmann::json j;
        j["ambient"] = f.ambient_name.empty() ? "G" : f.ambient_name;
        j["p"] = f.p;
        j["s_class_labels"] = detail::class_labels(f.S, f.cls);
        auto& arr = j["alphas"] = nlohmann::json::array();
        for (int c = 0; c < f.class_count(); ++c) {
            nlohmann::json e;
            e["label"] = f.f_class_label(c);
            e["transitive"] = nlohmann::json::array();
            for (const auto& [sc, coeff] : b.alphas[c].coeffs)
                e["transitive"].push_back(
                    {detail::to_ll(coeff), subgroup_label(f.S, f.cls.rep(sc))});
            e["ghost"] = nlohmann::json::array();
            for (const Int& v : b.marks[c]) e["ghost"].push_back(detail::to_ll(v));
            arr.push_back(e);
        }
        return detail::dump_json(j);
    }
    std::ostringstream out;
    out << "alpha basis of A(F), F = F_S(" << (f.ambient_name.empty() ? "G" : f.ambient_name)
        << "), p = " << f.p << "\n";
    for (int c = 0; c < f.class_count(); ++c) {
        out << "alpha[" << f.f_class_label(c)
            << "] = " << detail::transitive_combination(f.S, f.cls, b.alphas[c]) << "\n";
        out << "  ghost " << detail::ghost_tuple(b.marks[c]) << "\n";
    }
    return out.str();
}

/// Prime ideal listing with generator sets, type p first, then type 0 in
/// descending class order, then each further prime q ascending.
inline std::string ideals_report(const FusionSystem& f, const AlphaBasis& b, Ring ring,
                                 const std::set<int>& primes, Format format) {
    std::vector<IdealDescriptor> descs = enumerate_primes(f, ring, primes);
    const std::string ring_name = ring == Ring::PLocal ? "Z_(p)" : "Z";
    if (format == Format::Json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const IdealDescriptor& d : descs) {
            nlohmann::json e;
            e["ideal"] = {{"class", f.f_class_label(d.f_class)},
                          {"q", d.q},
                          {"ring", ring_name}};
            e["generators"] = nlohmann::json::array();
            for (const ZElement& g : generators(f, b, d).gens) {
                nlohmann::json terms = nlohmann::json::array();
                for (const auto& [c, coeff] : g.coeffs)
                    terms.push_back({detail::to_ll(coeff), f.f_class_label(c)});
                e["generators"].push_back(terms);
            }
            arr.push_back(e);
        }
        return detail::dump_json(arr);
    }
    std::ostringstream out;
    out << "prime ideals of A(F)" << (ring == Ring::PLocal ? "_(" + std::to_string(f.p) + ")" : "")
        << ", F = F_S(" << (f.ambient_name.empty() ? "G" : f.ambient_name) << "), p = " << f.p
        << "\n";
    if (descs.empty()) {
        out << "no ideals\n";
        return out.str();
    }
    auto emit_one = [&](const IdealDescriptor& d) {
        out << "  " << detail::ideal_name(f, d) << " = < ";
        const auto gens = generators(f, b, d).gens;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            if (i) out << " , ";
            out << detail::alpha_combination(f, gens[i]);
        }
        out << " >\n";
    };
    out << "\nmaximal type " << f.p << " ideal:\n";
    emit_one({ring, s_class_index(f), f.p});
    out << "\nminimal type 0 ideals:\n";
    for (int c = f.class_count() - 1; c >= 0; --c) emit_one({ring, c, 0});
    for (int q : primes) {
        if (q == f.p || ring == Ring::PLocal) continue;
        out << "\nmaximal type " << q << " ideals:\n";
        for (int c = f.class_count() - 1; c >= 0; --c) emit_one({ring, c, q});
    }
    return out.str();
}

}  // namespace burnside

#endif
