#pragma once

#include <chrono>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pgroup/claims.hpp"
#include "pgroup/families.hpp"
#include "pgroup/group.hpp"
#include "pgroup/invariants.hpp"
#include "pgroup/maxclass.hpp"

namespace pgroup {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr std::size_t kTextListingLimit = 20;

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyOptions {
    std::vector<std::string> claims;  // empty or {"all"} means the whole registry
    std::vector<Elem> primes{2, 3};
    Elem max_order = 81;
    std::string mutant;  // fault-injection hook; empty in normal runs
};

struct VerifyRun {
    VerifyOptions options;
    std::vector<std::string> claim_ids;
    std::vector<std::string> group_ids;
    std::vector<ClaimReport> results;   // canonical order: claim, then group
    std::vector<std::string> skipped;   // out-of-budget cells, "claim/group"
    Elem holds = 0, vacuous = 0, refuted = 0;
    double wall_ms = 0;
};

inline std::vector<std::string> resolve_claim_selection(const std::vector<std::string>& sel) {
    std::vector<std::string> ids;
    bool all = sel.empty();
    for (const std::string& s : sel)
        if (s == "all") all = true;
    if (all) {
        for (const ClaimDef& c : claim_registry()) ids.push_back(c.id);
        return ids;
    }
    for (const std::string& s : sel) {
        if (!find_claim(s)) throw group_error("unknown claim id: " + s);
        ids.push_back(s);
    }
    return ids;
}

inline VerifyRun run_verify(const VerifyOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    VerifyRun run;
    run.options = opt;
    run.claim_ids = resolve_claim_selection(opt.claims);

    std::vector<Group> corpus;
    for (Elem p : opt.primes)
        for (Group& g : census(p, opt.max_order, opt.mutant)) corpus.push_back(std::move(g));
    for (const Group& g : corpus) run.group_ids.push_back(g.name());

    for (const std::string& id : run.claim_ids) {
        const ClaimDef* def = find_claim(id);
        for (const Group& g : corpus) {
            if (!def->in_budget(g)) {
                run.skipped.push_back(id + "/" + g.name());
                continue;
            }
            ClaimReport rep;
            try {
                rep = run_claim(id, g);
            } catch (const budget_error&) {
                // quantifier blow-up inside an in-budget order (subgroup-rich
                // elementary abelian inputs); report the cell as skipped
                run.skipped.push_back(id + "/" + g.name());
                continue;
            }
            switch (rep.status) {
                case ClaimStatus::holds: ++run.holds; break;
                case ClaimStatus::vacuous: ++run.vacuous; break;
                case ClaimStatus::refuted: ++run.refuted; break;
            }
            run.results.push_back(std::move(rep));
        }
    }

    run.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                      .count();
    return run;
}

inline int verify_exit_code(const VerifyRun& run) { return run.refuted > 0 ? 1 : 0; }

inline nlohmann::json verify_report_json(const VerifyRun& run) {
    nlohmann::json j;
    j["schema"] = kReportSchemaVersion;
    j["command"] = "verify";
    j["claims"] = run.claim_ids;
    j["primes"] = run.options.primes;
    j["max_order"] = run.options.max_order;
    if (!run.options.mutant.empty()) j["mutant"] = run.options.mutant;
    j["groups"] = run.group_ids;
    nlohmann::json cells = nlohmann::json::array();
    for (const ClaimReport& r : run.results) {
        nlohmann::json c;
        c["claim"] = r.claim;
        c["group"] = r.group;
        c["status"] = claim_status_name(r.status);
        if (!r.witness.is_null()) c["witness"] = r.witness;
        cells.push_back(std::move(c));
    }
    j["results"] = std::move(cells);
    j["skipped"] = run.skipped;
    j["summary"] = {{"holds", run.holds}, {"vacuous", run.vacuous}, {"refuted", run.refuted}};
    // isolated so byte-comparisons of reports can drop it in one step
    nlohmann::json timing;
    timing["wall_ms"] = run.wall_ms;
    nlohmann::json per_cell = nlohmann::json::array();
    for (const ClaimReport& r : run.results)
        per_cell.push_back({{"claim", r.claim}, {"group", r.group}, {"us", r.elapsed.count()}});
    timing["cells"] = std::move(per_cell);
    j["timing"] = std::move(timing);
    return j;
}

inline std::string verify_report_text(const VerifyRun& run) {
    std::ostringstream os;
    os << "verify: " << run.claim_ids.size() << " claims x " << run.group_ids.size()
       << " groups\n";
    std::string cur;
    for (const ClaimReport& r : run.results) {
        if (r.claim != cur) {
            cur = r.claim;
            os << cur << "\n";
        }
        os << "  " << r.group << ": " << claim_status_name(r.status);
        if (r.status == ClaimStatus::refuted) os << "  witness=" << r.witness.dump();
        os << "\n";
    }
    os << "summary: holds=" << run.holds << " vacuous=" << run.vacuous
       << " refuted=" << run.refuted;
    if (!run.skipped.empty()) os << " skipped=" << run.skipped.size();
    os << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

struct AnalyzeReport {
    std::string group_id;
    Elem order = 0;
    Elem p = 0;
    int m = 0;
    int cls = 0;
    Elem exponent_value = 0;
    int rank = 0;
    Elem center_order = 0;
    Elem commutator_index = 0;
    std::vector<Elem> lower_central_orders;
    std::vector<Elem> upper_central_orders;
    std::vector<Elem> derived_orders;
    MaxClassReport maxclass;
};

inline AnalyzeReport analyze_group(const Group& G, bool include_p2 = false) {
    auto pp = G.prime_power();
    if (!pp) throw group_error("analyze requires a p-group");
    AnalyzeReport rep;
    rep.group_id = G.name();
    rep.order = G.order();
    rep.p = pp->p;
    rep.m = pp->m;
    rep.cls = nilpotency_class(G);
    rep.exponent_value = exponent(G);
    rep.rank = generator_rank(G);
    rep.center_order = center(G).size;
    rep.commutator_index = G.order() / derived_subgroup(G).size;
    for (const Subgroup& t : lower_central_series(G).terms) rep.lower_central_orders.push_back(t.size);
    for (const Subgroup& t : upper_central_series(G).terms) rep.upper_central_orders.push_back(t.size);
    for (const Subgroup& t : derived_series(G).terms) rep.derived_orders.push_back(t.size);
    rep.maxclass = analyze_maxclass(G, include_p2);
    return rep;
}

inline nlohmann::json subgroup_json(const Subgroup& H) {
    nlohmann::json j;
    j["size"] = H.size;
    j["members"] = H.members.to_vector();
    return j;
}

inline nlohmann::json maxclass_report_json(const MaxClassReport& rep) {
    nlohmann::json j;
    j["group"] = rep.group_id;
    j["is_maximal_class"] = rep.is_maximal_class;
    j["class"] = rep.cls;
    j["m"] = rep.m;
    j["p"] = rep.p;
    j["sections"] = rep.sections;
    if (rep.fundamental) j["fundamental"] = subgroup_json(*rep.fundamental);
    if (rep.gamma1) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [sub, role] : *rep.gamma1) {
            nlohmann::json e = subgroup_json(sub);
            e["role"] = role == Gamma1Role::fundamental ? "fundamental" : "maximal_class_member";
            arr.push_back(std::move(e));
        }
        j["gamma1"] = std::move(arr);
    }
    if (!rep.two_step.empty()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const Subgroup& s : rep.two_step) arr.push_back(subgroup_json(s));
        j["two_step"] = std::move(arr);
    }
    return j;
}

inline nlohmann::json analyze_report_json(const AnalyzeReport& rep) {
    nlohmann::json j;
    j["schema"] = kReportSchemaVersion;
    j["command"] = "analyze";
    j["group"] = rep.group_id;
    j["order"] = rep.order;
    j["p"] = rep.p;
    j["m"] = rep.m;
    j["class"] = rep.cls;
    j["exponent"] = rep.exponent_value;
    j["rank"] = rep.rank;
    j["center_order"] = rep.center_order;
    j["commutator_index"] = rep.commutator_index;
    j["lower_central_orders"] = rep.lower_central_orders;
    j["upper_central_orders"] = rep.upper_central_orders;
    j["derived_orders"] = rep.derived_orders;
    j["maxclass"] = maxclass_report_json(rep.maxclass);
    return j;
}

inline std::string subgroup_text(const Subgroup& H) {
    std::vector<Elem> members = H.members.to_vector();
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < members.size() && i < kTextListingLimit; ++i)
        os << (i ? " " : "") << H.parent.label(members[i]);
    if (members.size() > kTextListingLimit)
        os << " ... (" << members.size() << " elements)";
    os << "}";
    return os.str();
}

inline std::string analyze_report_text(const AnalyzeReport& rep) {
    std::ostringstream os;
    os << "group " << rep.group_id << "\n";
    os << "  order " << rep.order << " = " << rep.p << "^" << rep.m << "\n";
    os << "  class " << rep.cls << ", exponent " << rep.exponent_value << ", rank " << rep.rank
       << "\n";
    os << "  |Z(G)| = " << rep.center_order << ", |G:G'| = " << rep.commutator_index << "\n";
    auto orders = [&](const std::vector<Elem>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
        return s;
    };
    os << "  lower central orders: " << orders(rep.lower_central_orders) << "\n";
    os << "  upper central orders: " << orders(rep.upper_central_orders) << "\n";
    os << "  derived orders:       " << orders(rep.derived_orders) << "\n";
    os << "  maximal class: " << (rep.maxclass.is_maximal_class ? "yes" : "no") << "\n";
    if (rep.maxclass.fundamental)
        os << "  fundamental subgroup (order " << rep.maxclass.fundamental->size
           << "): " << subgroup_text(*rep.maxclass.fundamental) << "\n";
    if (rep.maxclass.gamma1) {
        os << "  gamma1:\n";
        for (const auto& [sub, role] : *rep.maxclass.gamma1)
            os << "    order " << sub.size << " "
               << (role == Gamma1Role::fundamental ? "[fundamental]" : "[maximal class]") << " "
               << subgroup_text(sub) << "\n";
    }
    return os.str();
}

inline std::string catalogue_text() {
    std::ostringstream os;
    os << "families (usable in group files and with --group family:...):\n";
    for (const FamilyDoc& d : catalogue_listing())
        os << "  " << d.name << " (" << d.params << "): " << d.notes << "\n";
    return os.str();
}

inline nlohmann::json catalogue_json() {
    nlohmann::json j;
    j["schema"] = kReportSchemaVersion;
    j["command"] = "catalogue";
    nlohmann::json arr = nlohmann::json::array();
    for (const FamilyDoc& d : catalogue_listing())
        arr.push_back({{"name", d.name}, {"params", d.params}, {"notes", d.notes}});
    j["families"] = std::move(arr);
    return j;
}

}  // namespace pgroup
