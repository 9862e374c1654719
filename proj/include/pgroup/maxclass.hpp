#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgroup/group.hpp"
#include "pgroup/invariants.hpp"

namespace pgroup {

// Order p^m with nilpotency class m-1. The default predicate asks for
// m >= 3 (so class >= 2); `include_p2` additionally accepts every group of
// order p^2, the reading some of the registry claims need.
inline bool is_maximal_class(const Group& G, bool include_p2 = false) {
    auto pp = G.prime_power();
    if (!pp) throw group_error("maximal-class predicate requires a p-group");
    if (pp->m < 2) return false;
    if (pp->m == 2) return include_p2;
    return nilpotency_class(G) == pp->m - 1;
}

// Same predicate for a subgroup, evaluated inside the parent via the lower
// central series (no re-indexing needed).
inline bool is_maximal_class_sub(const Group& G, const Subgroup& H, bool include_p2 = false) {
    auto gp = G.prime_power();
    if (!gp) throw group_error("maximal-class predicate requires a p-group");
    const Elem p = gp->p;
    int k = 0;
    Elem s = H.size;
    while (s > 1) {
        if (s % p != 0) throw group_error("subgroup size is not a power of p");
        s /= p;
        ++k;
    }
    if (k < 2) return false;
    if (k == 2) return include_p2;
    if (is_abelian_sub(G, H)) return false;  // class 1 < k - 1; cheap rejection
    return nilpotency_class_in(G, H) == k - 1;
}

namespace detail {

inline Subgroup lcs_term(const Series& lcs, const Group& G, std::size_t i) {
    // K_i, with K_i = 1 beyond the series length
    if (i - 1 < lcs.terms.size()) return lcs.terms[i - 1];
    return trivial_subgroup(G);
}

// {x : [x, S] <= M} for a generating set S of K; a subgroup whenever M is
// normal, and exactly the preimage of the section centralizer.
inline Subgroup section_centralizer(const Group& G, const Subgroup& K, const Subgroup& M) {
    std::vector<Elem> kg = generating_set(K);
    Bitset memb(static_cast<std::size_t>(G.order()));
    for (Elem x = 0; x < G.order(); ++x) {
        bool ok = true;
        for (Elem s : kg) {
            if (!M.contains(G.commutator(x, s))) {
                ok = false;
                break;
            }
        }
        if (ok) memb.set(static_cast<std::size_t>(x));
    }
    return subgroup_from_members(G, std::move(memb));
}

}  // namespace detail

// The distinguished maximal subgroup: elements acting trivially on K_2/K_4.
inline Subgroup fundamental_subgroup(const Group& G) {
    auto pp = G.prime_power();
    if (!pp || pp->m < 4) throw group_error("fundamental subgroup needs a p-group of order >= p^4");
    if (!is_maximal_class(G)) throw group_error("fundamental subgroup needs a maximal-class group");
    Series lcs = lower_central_series(G);
    Subgroup k2 = detail::lcs_term(lcs, G, 2);
    Subgroup k4 = detail::lcs_term(lcs, G, 4);
    return detail::section_centralizer(G, k2, k4);
}

// Oracle route through the explicit quotient; equal to the direct form.
inline Subgroup fundamental_subgroup_via_quotient(const Group& G) {
    auto pp = G.prime_power();
    if (!pp || pp->m < 4) throw group_error("fundamental subgroup needs a p-group of order >= p^4");
    if (!is_maximal_class(G)) throw group_error("fundamental subgroup needs a maximal-class group");
    Series lcs = lower_central_series(G);
    Subgroup k2 = detail::lcs_term(lcs, G, 2);
    Subgroup k4 = detail::lcs_term(lcs, G, 4);
    Quotient q = quotient_group(G, k4);
    Subgroup k2q = image(q.projection, k2);
    Subgroup c = centralizer(q.group, k2q);
    return preimage(q.projection, c);
}

// M_i = elements acting trivially on K_i/K_{i+2}, for i = 2..m-2.
inline std::vector<Subgroup> two_step_centralizers(const Group& G) {
    auto pp = G.prime_power();
    if (!pp || pp->m < 4) throw group_error("two-step centralizers need order >= p^4");
    if (!is_maximal_class(G)) throw group_error("two-step centralizers need a maximal-class group");
    Series lcs = lower_central_series(G);
    std::vector<Subgroup> out;
    for (int i = 2; i <= pp->m - 2; ++i) {
        Subgroup ki = detail::lcs_term(lcs, G, static_cast<std::size_t>(i));
        Subgroup ki2 = detail::lcs_term(lcs, G, static_cast<std::size_t>(i + 2));
        out.push_back(detail::section_centralizer(G, ki, ki2));
    }
    return out;
}

enum class Gamma1Role { fundamental, maximal_class_member };

struct MaxClassReport {
    std::string group_id;
    bool is_maximal_class = false;
    int cls = 0;
    int m = 0;
    Elem p = 0;
    std::vector<Elem> sections;  // |K_i : K_{i+1}| down the lower central series
    std::optional<Subgroup> fundamental;
    std::optional<std::vector<std::pair<Subgroup, Gamma1Role>>> gamma1;
    std::vector<Subgroup> two_step;
};

// For p > 2 and order p^m with m > p+1: the maximal subgroups are the
// fundamental subgroup plus p maximal-class members.
inline MaxClassReport classify_gamma1(const Group& G) {
    auto pp = G.prime_power();
    if (!pp || pp->p <= 2) throw group_error("gamma1 classification needs an odd prime");
    if (pp->m <= pp->p + 1) throw group_error("gamma1 classification needs order > p^{p+1}");
    if (!is_maximal_class(G)) throw group_error("gamma1 classification needs a maximal-class group");

    MaxClassReport rep;
    rep.group_id = G.name();
    rep.is_maximal_class = true;
    rep.m = pp->m;
    rep.p = pp->p;
    rep.cls = nilpotency_class(G);
    Subgroup g1 = fundamental_subgroup(G);
    rep.fundamental = g1;
    std::vector<std::pair<Subgroup, Gamma1Role>> entries;
    bool found_g1 = false;
    for (Subgroup& M : maximal_subgroups(G)) {
        if (M.members == g1.members) {
            entries.emplace_back(std::move(M), Gamma1Role::fundamental);
            found_g1 = true;
        } else {
            if (!is_maximal_class_sub(G, M))
                throw group_error("gamma1: a non-fundamental maximal subgroup is not of maximal class");
            entries.emplace_back(std::move(M), Gamma1Role::maximal_class_member);
        }
    }
    if (!found_g1) throw group_error("gamma1: fundamental subgroup is not maximal");
    rep.gamma1 = std::move(entries);
    rep.two_step = two_step_centralizers(G);
    return rep;
}

// Full report for reporting/CLI use; never throws on gate failures, it just
// leaves the optional parts empty.
inline MaxClassReport analyze_maxclass(const Group& G, bool include_p2 = false) {
    MaxClassReport rep;
    rep.group_id = G.name();
    auto pp = G.prime_power();
    if (!pp) throw group_error("analysis requires a p-group");
    rep.m = pp->m;
    rep.p = pp->p;
    rep.cls = nilpotency_class(G);
    rep.is_maximal_class = is_maximal_class(G, include_p2);

    Series lcs = lower_central_series(G);
    for (std::size_t i = 0; i + 1 < lcs.terms.size(); ++i)
        rep.sections.push_back(lcs.terms[i].size / lcs.terms[i + 1].size);

    if (is_maximal_class(G) && pp->m >= 4) {
        rep.fundamental = fundamental_subgroup(G);
        rep.two_step = two_step_centralizers(G);
        if (pp->p > 2 && pp->m > pp->p + 1) {
            MaxClassReport g = classify_gamma1(G);
            rep.gamma1 = std::move(g.gamma1);
        }
    }
    return rep;
}

}  // namespace pgroup
