#ifndef P2CENSUS_RENDER_HPP
#define P2CENSUS_RENDER_HPP

// Text tables and the machine-readable JSON form of census reports.
//
// JSON schema (stable interface):
//   {"p", "e_k", "f_k", "n",
//    "rows": [{"group": {"kind", "c", "split"?, "order"}, "count"}],
//    "total_classes", "total_extensions"}
// Counts are decimal strings so unbounded values survive any consumer;
// "split" appears on metacyclic2 rows only.

#include "p2census/census.hpp"
#include "p2census/oracles.hpp"
#include "p2census/rep_theory.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace p2census {

using Json = nlohmann::ordered_json;

/// Human name of the Galois group: the groups are determined by (kind, c)
/// plus the split flag, and always act on F_{p^2}^+.
inline std::string group_label(const GroupDescriptor& g, std::int64_t p) {
    std::ostringstream os;
    os << "F_" << p * p << "^+ ⋊ ";
    if (g.kind == GroupDescriptor::Kind::cyclic)
        os << "C_" << g.c;
    else
        os << "H_" << g.c << "^" << (g.split ? "split" : "nonsplit");
    os << " (order " << group_order(g, p) << ")";
    return os.str();
}

inline std::string kind_name(GroupDescriptor::Kind k) {
    return k == GroupDescriptor::Kind::cyclic ? "cyclic" : "metacyclic2";
}

inline std::string render_census_table(const CensusReport& r) {
    std::ostringstream os;
    const LocalFieldParams& K = r.params;
    os << "degree-" << K.p * K.p << " extensions of K with no intermediate field\n";
    os << "K: p=" << K.p << ", e_K=" << K.e_k << ", f_K=" << K.f_k << ", n=" << K.n() << "\n\n";
    std::size_t width = 0;
    for (const CensusRow& row : r.rows) width = std::max(width, group_label(row.group, K.p).size());
    for (const CensusRow& row : r.rows) {
        os << "  " << std::left << std::setw(static_cast<int>(width + 2))
           << group_label(row.group, K.p) << row.count.str() << "\n";
    }
    os << "\ntotal classes: " << r.total_classes.str()
       << ", total extensions: " << r.total_extensions.str() << "\n";
    return os.str();
}

inline Json census_to_json(const CensusReport& r) {
    Json j;
    j["p"] = r.params.p;
    j["e_k"] = r.params.e_k;
    j["f_k"] = r.params.f_k;
    j["n"] = r.params.n();
    j["rows"] = Json::array();
    for (const CensusRow& row : r.rows) {
        Json g;
        g["kind"] = kind_name(row.group.kind);
        g["c"] = row.group.c;
        if (row.group.kind == GroupDescriptor::Kind::metacyclic2) g["split"] = row.group.split;
        g["order"] = group_order(row.group, r.params.p);
        j["rows"].push_back(Json{{"group", g}, {"count", row.count.str()}});
    }
    j["total_classes"] = r.total_classes.str();
    j["total_extensions"] = r.total_extensions.str();
    return j;
}

inline CensusReport census_from_json(const Json& j) {
    try {
        const LocalFieldParams params(j.at("p").get<std::int64_t>(),
                                      j.at("e_k").get<std::int64_t>(),
                                      j.at("f_k").get<std::int64_t>());
        if (j.at("n").get<std::int64_t>() != params.n())
            throw std::invalid_argument("census_from_json: n does not equal e_k*f_k");
        CensusReport r{params, {}, BigInt(j.at("total_classes").get<std::string>()),
                       BigInt(j.at("total_extensions").get<std::string>()),
                       params.p * params.p};
        BigInt sum = 0;
        for (const Json& jr : j.at("rows")) {
            const Json& jg = jr.at("group");
            const std::string kind = jg.at("kind").get<std::string>();
            const std::int64_t c = jg.at("c").get<std::int64_t>();
            GroupDescriptor g = GroupDescriptor::make_cyclic(c);
            if (kind == "metacyclic2")
                g = GroupDescriptor::make_metacyclic2(c, jg.at("split").get<bool>());
            else if (kind != "cyclic")
                throw std::invalid_argument("census_from_json: unknown group kind " + kind);
            if (jg.at("order").get<std::int64_t>() != group_order(g, params.p))
                throw std::invalid_argument("census_from_json: group order is inconsistent");
            const BigInt count(jr.at("count").get<std::string>());
            sum += count;
            r.rows.push_back({g, count});
        }
        if (sum != r.total_classes)
            throw std::invalid_argument("census_from_json: rows do not sum to total_classes");
        if (r.total_extensions != BigInt(params.p) * params.p * r.total_classes)
            throw std::invalid_argument("census_from_json: total_extensions is inconsistent");
        return r;
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("census_from_json: malformed input: ") + e.what());
    }
}

/// One line per irreducible class of T x| U; dim_filter <= 0 disables the
/// filter.
inline std::string render_reps_table(const MetacyclicGroup& H,
                                     const std::vector<CharClass>& classes,
                                     std::int64_t dim_filter = 0) {
    std::ostringstream os;
    os << "irreducible classes of T x| U with e=" << H.e << ", f=" << H.f << ", q=" << H.q()
       << " (p=" << H.p << ", f_K=" << H.f_k << ")\n\n";
    os << "     t     a     b     r     s     w   dim     d  mult/n\n";
    std::int64_t shown = 0;
    for (const CharClass& c : classes) {
        const std::int64_t dim = rep_dimension(c, H.f_k);
        if (dim_filter > 0 && dim != dim_filter) continue;
        ++shown;
        os << std::setw(6) << c.t << std::setw(6) << c.a << std::setw(6) << c.b << std::setw(6)
           << c.r << std::setw(6) << c.s << std::setw(6) << c.w << std::setw(6) << dim
           << std::setw(6) << def_field_degree(c, H.f_k) << std::setw(8) << c.s << "\n";
    }
    os << "\n" << shown << " classes";
    if (dim_filter > 0) os << " of dimension " << dim_filter;
    os << " (of " << classes.size() << ")\n";
    return os.str();
}

/// "suite: N cases, M failures" plus one detail line per failure.
inline std::string render_verify(const VerifyOutcome& o) {
    std::ostringstream os;
    os << o.suite << ": " << o.cases << " cases, " << o.failures.size() << " failures\n";
    for (const VerifyFailure& f : o.failures)
        os << "  " << f.input << ": expected " << f.expected << ", got " << f.got << "\n";
    return os.str();
}

}  // namespace p2census

#endif
