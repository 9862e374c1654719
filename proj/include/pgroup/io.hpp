#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pgroup/families.hpp"
#include "pgroup/group.hpp"

namespace pgroup {

struct PermutationSpec {
    Elem degree = 0;
    std::vector<std::vector<Elem>> generators;  // image arrays, 0-based
};

struct TableSpec {
    std::vector<std::vector<Elem>> table;
};

struct GroupSpec {
    std::variant<PermutationSpec, TableSpec, FamilyDescriptor> body;
};

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

inline GroupSpec parse_group_json(const nlohmann::json& j, const std::string& where) {
    auto fail = [&](const std::string& msg) -> void {
        throw group_error(where + ": " + msg);
    };
    if (!j.is_object()) fail("expected a JSON object");
    if (!j.contains("kind") || !j["kind"].is_string()) fail("missing string field 'kind'");
    const std::string kind = j["kind"].get<std::string>();

    if (kind == "permutations") {
        PermutationSpec ps;
        if (!j.contains("degree") || !j["degree"].is_number_integer())
            fail("permutations: missing integer field 'degree'");
        ps.degree = j["degree"].get<Elem>();
        if (ps.degree < 1) fail("permutations: degree must be >= 1");
        if (!j.contains("generators") || !j["generators"].is_array())
            fail("permutations: missing array field 'generators'");
        for (const auto& g : j["generators"]) {
            if (!g.is_array() || static_cast<Elem>(g.size()) != ps.degree)
                fail("permutations: each generator must list degree-many images");
            std::vector<Elem> imgs;
            std::vector<bool> seen(static_cast<std::size_t>(ps.degree), false);
            for (const auto& v : g) {
                if (!v.is_number_integer()) fail("permutations: images must be integers");
                Elem x = v.get<Elem>();
                if (x < 0 || x >= ps.degree) fail("permutations: image out of range (0-based)");
                if (seen[static_cast<std::size_t>(x)])
                    fail("permutations: generator image array is not a bijection");
                seen[static_cast<std::size_t>(x)] = true;
                imgs.push_back(x);
            }
            ps.generators.push_back(std::move(imgs));
        }
        if (ps.generators.empty()) fail("permutations: at least one generator required");
        return GroupSpec{std::move(ps)};
    }

    if (kind == "table") {
        TableSpec ts;
        if (!j.contains("table") || !j["table"].is_array()) fail("table: missing array field 'table'");
        const Elem n = static_cast<Elem>(j["table"].size());
        if (n < 1) fail("table: empty table");
        if (n > kTableOrderCap) fail("table: explicit tables are limited to order 4096");
        for (const auto& row : j["table"]) {
            if (!row.is_array() || static_cast<Elem>(row.size()) != n)
                fail("table: rows must all have the same length as the table");
            std::vector<Elem> r;
            for (const auto& v : row) {
                if (!v.is_number_integer()) fail("table: entries must be integers");
                Elem x = v.get<Elem>();
                if (x < 0 || x >= n) fail("table: entry out of range");
                r.push_back(x);
            }
            ts.table.push_back(std::move(r));
        }
        // Latin square: rows and columns are permutations
        for (Elem i = 0; i < n; ++i) {
            std::vector<bool> row_seen(static_cast<std::size_t>(n), false);
            std::vector<bool> col_seen(static_cast<std::size_t>(n), false);
            for (Elem k = 0; k < n; ++k) {
                Elem rv = ts.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
                Elem cv = ts.table[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
                if (row_seen[static_cast<std::size_t>(rv)])
                    fail("table: row " + std::to_string(i) + " is not a permutation (not a Latin square)");
                if (col_seen[static_cast<std::size_t>(cv)])
                    fail("table: column " + std::to_string(i) + " is not a permutation (not a Latin square)");
                row_seen[static_cast<std::size_t>(rv)] = true;
                col_seen[static_cast<std::size_t>(cv)] = true;
            }
        }
        return GroupSpec{std::move(ts)};
    }

    if (kind == "family") {
        if (!j.contains("name") || !j["name"].is_string()) fail("family: missing string field 'name'");
        auto fam = family_from_string(j["name"].get<std::string>());
        if (!fam) fail("family: unknown family name '" + j["name"].get<std::string>() + "'");
        FamilyDescriptor desc;
        desc.name = *fam;
        if (j.contains("params")) {
            if (!j["params"].is_object()) fail("family: 'params' must be an object");
            for (auto it = j["params"].begin(); it != j["params"].end(); ++it) {
                if (!it.value().is_number_integer())
                    fail("family: parameter '" + it.key() + "' must be an integer");
                desc.params[it.key()] = it.value().get<long long>();
            }
        }
        return GroupSpec{std::move(desc)};
    }

    fail("unknown kind '" + kind + "' (expected permutations, table or family)");
    return {};  // unreachable
}

inline GroupSpec parse_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw group_error(path + ": cannot open file");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw group_error(path + ": JSON parse error: " + e.what());
    }
    return parse_group_json(j, path);
}

// "family:name,key=value,..." used by the CLI's --group flag
inline GroupSpec parse_inline_family(const std::string& text) {
    std::string rest = text.substr(std::string("family:").size());
    std::stringstream ss(rest);
    std::string tok;
    FamilyDescriptor desc;
    bool first = true;
    while (std::getline(ss, tok, ',')) {
        if (first) {
            auto fam = family_from_string(tok);
            if (!fam) throw group_error("unknown family name '" + tok + "'");
            desc.name = *fam;
            first = false;
            continue;
        }
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw group_error("family parameter needs key=value: " + tok);
        try {
            desc.params[tok.substr(0, eq)] = std::stoll(tok.substr(eq + 1));
        } catch (const std::exception&) {
            throw group_error("family parameter must be an integer: " + tok);
        }
    }
    if (first) throw group_error("empty family spec");
    return GroupSpec{std::move(desc)};
}

// ---------------------------------------------------------------------------
// Construction
// ---------------------------------------------------------------------------

namespace detail {

struct PermKey {
    std::size_t operator()(const std::vector<Elem>& v) const {
        std::uint64_t h = 1469598103934665603ull;
        for (Elem x : v) {
            h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

inline std::string perm_label(const std::vector<Elem>& imgs) {
    if (imgs.size() > 16) return "";
    std::string s = "[";
    for (std::size_t i = 0; i < imgs.size(); ++i) s += (i ? " " : "") + std::to_string(imgs[i]);
    return s + "]";
}

inline Group build_permutation_group(const PermutationSpec& ps) {
    const Elem deg = ps.degree;
    std::vector<Elem> idperm(static_cast<std::size_t>(deg));
    for (Elem i = 0; i < deg; ++i) idperm[static_cast<std::size_t>(i)] = i;

    auto compose = [deg](const std::vector<Elem>& a, const std::vector<Elem>& b) {
        // apply a, then b
        std::vector<Elem> c(static_cast<std::size_t>(deg));
        for (Elem i = 0; i < deg; ++i)
            c[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(a[static_cast<std::size_t>(i)])];
        return c;
    };

    auto elems = std::make_shared<std::vector<std::vector<Elem>>>();
    auto index = std::make_shared<std::unordered_map<std::vector<Elem>, Elem, PermKey>>();
    elems->push_back(idperm);
    (*index)[idperm] = 0;
    for (std::size_t qi = 0; qi < elems->size(); ++qi) {
        for (const auto& g : ps.generators) {
            std::vector<Elem> next = compose((*elems)[qi], g);
            if (!index->count(next)) {
                if (static_cast<Elem>(elems->size()) >= kOrderCap)
                    throw group_error("permutation closure exceeds the engine cap");
                (*index)[next] = static_cast<Elem>(elems->size());
                elems->push_back(std::move(next));
            }
        }
    }

    const Elem n = static_cast<Elem>(elems->size());
    std::vector<Elem> gens;
    for (const auto& g : ps.generators) {
        Elem gi = index->at(g);
        if (gi != 0 && std::find(gens.begin(), gens.end(), gi) == gens.end()) gens.push_back(gi);
    }
    std::vector<std::string> labels(static_cast<std::size_t>(n));
    for (Elem i = 0; i < n; ++i) {
        labels[static_cast<std::size_t>(i)] = perm_label((*elems)[static_cast<std::size_t>(i)]);
        if (labels[static_cast<std::size_t>(i)].empty())
            labels[static_cast<std::size_t>(i)] = "g" + std::to_string(i);
    }

    MulRule rule = [elems, index, compose](Elem a, Elem b) -> Elem {
        return index->at(compose((*elems)[static_cast<std::size_t>(a)],
                                 (*elems)[static_cast<std::size_t>(b)]));
    };
    return Group::create({.n = n,
                          .rule = std::move(rule),
                          .gens = std::move(gens),
                          .labels = std::move(labels),
                          .name = "perm" + std::to_string(deg)});
}

inline Group build_table_group(const TableSpec& ts) {
    const Elem n = static_cast<Elem>(ts.table.size());
    // locate the two-sided identity and relabel it to index 0
    Elem e = -1;
    for (Elem cand = 0; cand < n && e < 0; ++cand) {
        bool ok = true;
        for (Elem a = 0; a < n; ++a)
            if (ts.table[static_cast<std::size_t>(cand)][static_cast<std::size_t>(a)] != a ||
                ts.table[static_cast<std::size_t>(a)][static_cast<std::size_t>(cand)] != a) {
                ok = false;
                break;
            }
        if (ok) e = cand;
    }
    if (e < 0) throw group_error("table: no two-sided identity element");

    std::vector<Elem> to_new(static_cast<std::size_t>(n));
    for (Elem i = 0; i < n; ++i) to_new[static_cast<std::size_t>(i)] = i;
    std::swap(to_new[0], to_new[static_cast<std::size_t>(e)]);  // involution: new<->old

    auto tbl = std::make_shared<std::vector<Elem>>(static_cast<std::size_t>(n) * n);
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            Elem old = ts.table[static_cast<std::size_t>(to_new[static_cast<std::size_t>(a)])]
                               [static_cast<std::size_t>(to_new[static_cast<std::size_t>(b)])];
            (*tbl)[static_cast<std::size_t>(a) * n + b] = to_new[static_cast<std::size_t>(old)];
        }

    MulRule rule = [tbl, n](Elem a, Elem b) -> Elem {
        return (*tbl)[static_cast<std::size_t>(a) * n + b];
    };
    std::vector<Elem> gens;
    for (Elem i = 1; i < n; ++i) gens.push_back(i);  // trivially generating
    return Group::create({.n = n,
                          .rule = std::move(rule),
                          .gens = std::move(gens),
                          .labels = {},
                          .name = "table" + std::to_string(n)});
}

}  // namespace detail

inline Group build_group(const GroupSpec& spec) {
    if (std::holds_alternative<PermutationSpec>(spec.body))
        return detail::build_permutation_group(std::get<PermutationSpec>(spec.body));
    if (std::holds_alternative<TableSpec>(spec.body))
        return detail::build_table_group(std::get<TableSpec>(spec.body));
    return construct(std::get<FamilyDescriptor>(spec.body));
}

}  // namespace pgroup
