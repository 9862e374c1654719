#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_set>
#include <vector>

#include "pgroup/group.hpp"

namespace pgroup {

enum class SeriesKind { lower_central, upper_central, derived };

struct Series {
    SeriesKind kind;
    std::vector<Subgroup> terms;
    bool stabilized = true;
};

// (size, lexicographic member list): the ordering used for every subgroup
// listing the engine emits.
inline bool subgroup_less(const Subgroup& a, const Subgroup& b) {
    if (a.size != b.size) return a.size < b.size;
    return Bitset::lex_less(a.members, b.members);
}

inline void sort_subgroups(std::vector<Subgroup>& v) {
    std::sort(v.begin(), v.end(), subgroup_less);
}

// ---------------------------------------------------------------------------
// Centralizers and normalizers
// ---------------------------------------------------------------------------

// {g : gh = hg for every h in a generating set of H}
inline Subgroup centralizer(const Group& G, const Subgroup& H) {
    std::vector<Elem> hg = generating_set(H);
    Bitset m(static_cast<std::size_t>(G.order()));
    for (Elem g = 0; g < G.order(); ++g) {
        bool ok = true;
        for (Elem h : hg) {
            if (G.mul(g, h) != G.mul(h, g)) {
                ok = false;
                break;
            }
        }
        if (ok) m.set(static_cast<std::size_t>(g));
    }
    return subgroup_from_members(G, std::move(m));
}

// Oracle variant quantifying over every member of H.
inline Subgroup centralizer_full(const Group& G, const Subgroup& H) {
    Bitset m(static_cast<std::size_t>(G.order()));
    for (Elem g = 0; g < G.order(); ++g) {
        bool ok = true;
        H.members.for_each([&](Elem h) {
            if (ok && G.mul(g, h) != G.mul(h, g)) ok = false;
        });
        if (ok) m.set(static_cast<std::size_t>(g));
    }
    return subgroup_from_members(G, std::move(m));
}

inline Subgroup centralizer_of_element(const Group& G, Elem x) {
    Bitset m(static_cast<std::size_t>(G.order()));
    for (Elem g = 0; g < G.order(); ++g)
        if (G.mul(g, x) == G.mul(x, g)) m.set(static_cast<std::size_t>(g));
    return subgroup_from_members(G, std::move(m));
}

inline Subgroup center(const Group& G) { return centralizer(G, whole_group(G)); }

inline Subgroup normalizer(const Group& G, const Subgroup& H) {
    std::vector<Elem> hg = generating_set(H);
    Bitset m(static_cast<std::size_t>(G.order()));
    for (Elem g = 0; g < G.order(); ++g) {
        bool ok = true;
        for (Elem h : hg) {
            if (!H.contains(G.conjugate(h, g))) {
                ok = false;
                break;
            }
        }
        if (ok) m.set(static_cast<std::size_t>(g));
    }
    return subgroup_from_members(G, std::move(m));
}

inline bool is_abelian_sub(const Group& G, const Subgroup& H) {
    std::vector<Elem> hg = generating_set(H);
    for (std::size_t i = 0; i < hg.size(); ++i)
        for (std::size_t j = i + 1; j < hg.size(); ++j)
            if (G.mul(hg[i], hg[j]) != G.mul(hg[j], hg[i])) return false;
    return true;
}

inline bool is_abelian(const Group& G) { return is_abelian_sub(G, whole_group(G)); }

inline bool is_cyclic_sub(const Group& G, const Subgroup& H) {
    bool cyclic = false;
    H.members.for_each([&](Elem x) {
        if (!cyclic && element_order(G, x) == H.size) cyclic = true;
    });
    return cyclic;
}

// ---------------------------------------------------------------------------
// Central and derived series
// ---------------------------------------------------------------------------

inline Series lower_central_series(const Group& G) {
    Series s{SeriesKind::lower_central, {}, true};
    Subgroup whole = whole_group(G);
    s.terms.push_back(whole);
    for (;;) {
        Subgroup next = commutator_subgroup(G, s.terms.back(), whole);
        if (next.members == s.terms.back().members) break;
        s.terms.push_back(std::move(next));
    }
    return s;
}

inline Series upper_central_series(const Group& G) {
    Series s{SeriesKind::upper_central, {}, true};
    s.terms.push_back(trivial_subgroup(G));
    for (;;) {
        const Subgroup& zi = s.terms.back();
        if (zi.size == G.order()) break;
        Quotient q = quotient_group(G, zi);
        Subgroup zq = center(q.group);
        Subgroup next = preimage(q.projection, zq);
        if (next.members == zi.members) break;  // stabilized below G
        s.terms.push_back(std::move(next));
    }
    return s;
}

inline Series derived_series(const Group& G) {
    Series s{SeriesKind::derived, {}, true};
    s.terms.push_back(whole_group(G));
    for (;;) {
        Subgroup next = commutator_subgroup(G, s.terms.back(), s.terms.back());
        if (next.members == s.terms.back().members) break;
        s.terms.push_back(std::move(next));
    }
    return s;
}

inline Subgroup derived_subgroup(const Group& G) {
    Subgroup whole = whole_group(G);
    return commutator_subgroup(G, whole, whole);
}

inline int nilpotency_class(const Group& G) {
    int memo = G.memoized_class();
    if (memo >= 0) return memo;
    Series u = upper_central_series(G);
    if (u.terms.back().size != G.order())
        throw group_error("group is not nilpotent: upper central series stabilizes early");
    int c = static_cast<int>(u.terms.size()) - 1;
    G.memoize_class(c);
    return c;
}

// Lower central series of a subgroup, computed inside the parent.
inline std::vector<Subgroup> lower_central_series_in(const Group& G, const Subgroup& H) {
    std::vector<Subgroup> terms{H};
    for (;;) {
        Subgroup next = commutator_subgroup(G, terms.back(), H);
        if (next.members == terms.back().members) break;
        terms.push_back(std::move(next));
    }
    return terms;
}

inline int nilpotency_class_in(const Group& G, const Subgroup& H) {
    std::vector<Subgroup> terms = lower_central_series_in(G, H);
    if (terms.back().size != 1)
        throw group_error("subgroup is not nilpotent: lower central series stabilizes early");
    return static_cast<int>(terms.size()) - 1;
}

inline Elem exponent(const Group& G) {
    long long e = 1;
    for (Elem x = 0; x < G.order(); ++x)
        e = std::lcm(e, static_cast<long long>(element_order(G, x)));
    return static_cast<Elem>(e);
}

inline Elem exponent_of_subgroup(const Group& G, const Subgroup& H) {
    long long e = 1;
    H.members.for_each([&](Elem x) { e = std::lcm(e, static_cast<long long>(element_order(G, x))); });
    return static_cast<Elem>(e);
}

// ---------------------------------------------------------------------------
// Normal subgroup enumeration
// ---------------------------------------------------------------------------

inline std::vector<std::vector<Elem>> conjugacy_classes(const Group& G) {
    Bitset seen(static_cast<std::size_t>(G.order()));
    std::vector<std::vector<Elem>> classes;
    for (Elem x = 0; x < G.order(); ++x) {
        if (seen.test(static_cast<std::size_t>(x))) continue;
        std::vector<Elem> orbit{x};
        seen.set(static_cast<std::size_t>(x));
        for (std::size_t qi = 0; qi < orbit.size(); ++qi) {
            for (Elem g : G.generators()) {
                Elem y = G.conjugate(orbit[qi], g);
                if (!seen.test(static_cast<std::size_t>(y))) {
                    seen.set(static_cast<std::size_t>(y));
                    orbit.push_back(y);
                }
            }
        }
        std::sort(orbit.begin(), orbit.end());
        classes.push_back(std::move(orbit));
    }
    return classes;
}

namespace detail {

// Closures of single conjugacy classes: every normal subgroup is a join of
// these, so saturating them under single-seed joins enumerates them all.
inline std::vector<Subgroup> normal_closure_seeds(const Group& G) {
    std::vector<Subgroup> base;
    for (const auto& cls : conjugacy_classes(G)) {
        Bitset seed(static_cast<std::size_t>(G.order()));
        for (Elem x : cls) seed.set(static_cast<std::size_t>(x));
        Subgroup h = subgroup_generated_set(G, seed);
        h.normal_cached = true;  // generated by a conjugation-closed set
        base.push_back(std::move(h));
    }
    return base;
}

// Saturation with an optional result bound. Returns false when the bound was
// hit (out != complete in that case).
inline bool saturate_normals(const Group& G, std::size_t bound, std::vector<Subgroup>& out) {
    std::vector<Subgroup> base = normal_closure_seeds(G);
    std::unordered_set<Bitset, BitsetHash> seen;
    std::vector<std::size_t> work;
    auto push = [&](Subgroup h) {
        if (!seen.insert(h.members).second) return true;
        if (out.size() >= bound) return false;
        h.normal_cached = true;
        out.push_back(std::move(h));
        work.push_back(out.size() - 1);
        return true;
    };
    for (const Subgroup& b : base)
        if (!push(b)) return false;

    while (!work.empty()) {
        std::size_t idx = work.back();
        work.pop_back();
        for (const Subgroup& b : base) {
            if (out[idx].members.contains(b.members)) continue;
            Bitset u = out[idx].members;
            u |= b.members;
            if (!push(subgroup_generated_set(G, u))) return false;
        }
    }
    return true;
}

}  // namespace detail

inline std::vector<Subgroup> normal_subgroups(const Group& G) {
    if (G.order() > kNormalEnumOrderCap)
        throw budget_error("normal subgroup enumeration is limited to order 4096");
    std::vector<Subgroup> found;
    if (!detail::saturate_normals(G, 200000, found))
        throw budget_error("normal subgroup enumeration exceeded the result guard");
    sort_subgroups(found);
    return found;
}

// Exact count of normal subgroups when it does not exceed cap; cap + 1
// otherwise. Lets counting claims decide "more than expected" without paying
// for a full enumeration on subgroup-rich groups.
inline Elem normal_subgroup_count_capped(const Group& G, Elem cap) {
    if (G.order() > kNormalEnumOrderCap)
        throw budget_error("normal subgroup enumeration is limited to order 4096");
    std::vector<Subgroup> found;
    if (!detail::saturate_normals(G, static_cast<std::size_t>(cap), found))
        return cap + 1;
    return static_cast<Elem>(found.size());
}

// ---------------------------------------------------------------------------
// Maximal subgroups, Frattini subgroup, rank
// ---------------------------------------------------------------------------

namespace detail {

// <[G,G], p-th powers>: the sieve that turns maximal-subgroup enumeration
// into hyperplane enumeration over the elementary abelian top quotient.
inline Subgroup frattini_sieve(const Group& G, Elem p) {
    Subgroup der = derived_subgroup(G);
    Bitset seed = der.members;
    for (Elem x = 0; x < G.order(); ++x) seed.set(static_cast<std::size_t>(G.power(x, p)));
    Subgroup h = subgroup_generated_set(G, seed);
    h.normal_cached = true;  // derived subgroup joined with a conjugation-closed power set
    return h;
}

}  // namespace detail

inline std::vector<Subgroup> maximal_subgroups(const Group& G) {
    auto pp = G.prime_power();
    if (!pp) throw group_error("maximal subgroup enumeration requires a p-group");
    const Elem p = pp->p;
    if (G.order() == 1) return {};

    Subgroup phi0 = detail::frattini_sieve(G, p);
    Quotient q = quotient_group(G, phi0);
    const Group& Q = q.group;

    // Coordinatize the elementary abelian quotient over F_p.
    std::vector<Elem> basis;
    {
        Bitset spanned = trivial_subgroup(Q).members;
        for (Elem x = 1; x < Q.order(); ++x) {
            if (spanned.test(static_cast<std::size_t>(x))) continue;
            basis.push_back(x);
            spanned = subgroup_generated(Q, std::span<const Elem>(basis)).members;
        }
    }
    const int d = static_cast<int>(basis.size());
    std::vector<std::vector<Elem>> coord(static_cast<std::size_t>(Q.order()));
    {
        coord[0] = std::vector<Elem>(static_cast<std::size_t>(d), 0);
        std::vector<Elem> frontier{0};
        for (std::size_t qi = 0; qi < frontier.size(); ++qi) {
            Elem x = frontier[qi];
            for (int i = 0; i < d; ++i) {
                Elem y = Q.mul(x, basis[static_cast<std::size_t>(i)]);
                if (coord[static_cast<std::size_t>(y)].empty() && y != 0) {
                    coord[static_cast<std::size_t>(y)] = coord[static_cast<std::size_t>(x)];
                    coord[static_cast<std::size_t>(y)][static_cast<std::size_t>(i)] =
                        (coord[static_cast<std::size_t>(x)][static_cast<std::size_t>(i)] + 1) % p;
                    frontier.push_back(y);
                }
            }
        }
    }

    // Functionals with leading coefficient 1, one per hyperplane.
    std::vector<Subgroup> out;
    std::vector<Elem> phi(static_cast<std::size_t>(d), 0);
    auto emit = [&]() {
        Bitset m(static_cast<std::size_t>(G.order()));
        for (Elem x = 0; x < G.order(); ++x) {
            const auto& c = coord[static_cast<std::size_t>(q.projection(x))];
            Elem dot = 0;
            for (int i = 0; i < d; ++i) dot = (dot + phi[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(i)]) % p;
            if (dot == 0) m.set(static_cast<std::size_t>(x));
        }
        out.push_back(subgroup_from_members(G, std::move(m)));
    };
    for (int lead = 0; lead < d; ++lead) {
        std::fill(phi.begin(), phi.end(), 0);
        phi[static_cast<std::size_t>(lead)] = 1;
        // enumerate the free coordinates after the leading 1
        const int free = d - lead - 1;
        long long total = 1;
        for (int i = 0; i < free; ++i) total *= p;
        for (long long t = 0; t < total; ++t) {
            long long v = t;
            for (int i = 0; i < free; ++i) {
                phi[static_cast<std::size_t>(lead + 1 + i)] = static_cast<Elem>(v % p);
                v /= p;
            }
            emit();
        }
    }
    sort_subgroups(out);
    return out;
}

inline Subgroup frattini_subgroup(const Group& G) {
    std::vector<Subgroup> maxs = maximal_subgroups(G);
    if (maxs.empty()) return whole_group(G);  // trivial group
    Bitset m = maxs[0].members;
    for (std::size_t i = 1; i < maxs.size(); ++i) m &= maxs[i].members;
    return subgroup_from_members(G, std::move(m));
}

inline int generator_rank(const Group& G) {
    auto pp = G.prime_power();
    if (!pp) throw group_error("generator rank requires a p-group");
    if (G.order() == 1) return 0;
    Subgroup phi = frattini_subgroup(G);
    Elem index = G.order() / phi.size;
    int d = 0;
    while (index > 1) {
        index /= pp->p;
        ++d;
    }
    return d;
}

// ---------------------------------------------------------------------------
// Full subgroup lattice
// ---------------------------------------------------------------------------

inline std::vector<Subgroup> all_subgroups_of(const Group& G, const Subgroup& top) {
    if (top.size > kLatticeOrderCap)
        throw budget_error("subgroup lattice enumeration is limited to order 512");
    constexpr std::size_t kGuard = 50000;

    struct Node {
        Bitset members;
        std::vector<Elem> gens;
    };
    std::unordered_set<Bitset, BitsetHash> seen;
    std::vector<Node> nodes;
    Subgroup triv = trivial_subgroup(G);
    seen.insert(triv.members);
    nodes.push_back({triv.members, {}});

    std::vector<Elem> universe = top.members.to_vector();
    for (std::size_t qi = 0; qi < nodes.size(); ++qi) {
        Node cur = nodes[qi];  // copy: nodes may reallocate
        for (Elem x : universe) {
            if (x == 0 || cur.members.test(static_cast<std::size_t>(x))) continue;
            std::vector<Elem> g = cur.gens;
            g.push_back(x);
            Subgroup ext = subgroup_generated(G, std::span<const Elem>(g));
            if (seen.insert(ext.members).second) {
                if (nodes.size() >= kGuard)
                    throw budget_error("subgroup lattice exceeded the result guard");
                nodes.push_back({ext.members, std::move(ext.gens)});
            }
        }
    }

    std::vector<Subgroup> out;
    out.reserve(nodes.size());
    for (auto& nd : nodes)
        out.push_back(subgroup_from_members(G, std::move(nd.members), std::move(nd.gens)));
    sort_subgroups(out);
    return out;
}

inline std::vector<Subgroup> all_subgroups(const Group& G) {
    return all_subgroups_of(G, whole_group(G));
}

inline bool is_minimal_nonabelian(const Group& G, const Subgroup& H) {
    if (is_abelian_sub(G, H)) return false;
    for (const Subgroup& s : all_subgroups_of(G, H)) {
        if (s.size == H.size || !H.members.contains(s.members)) continue;
        if (!is_abelian_sub(G, s)) return false;
    }
    return true;
}

}  // namespace pgroup
