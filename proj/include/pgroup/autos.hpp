#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "pgroup/group.hpp"
#include "pgroup/invariants.hpp"

namespace pgroup {

inline constexpr Elem kAutoOrderCap = 256;
inline constexpr int kAutoRankCap = 3;
inline constexpr Elem kAutoSmallOrder = 24;  // tiny groups allowed at any rank

struct AutomorphismSet {
    Group group;
    std::vector<std::vector<Elem>> autos;
    bool complete = false;
};

inline bool autos_budget_ok(const Group& G) {
    if (G.order() > kAutoOrderCap) return false;
    if (G.order() <= kAutoSmallOrder) return true;
    return generator_rank(G) <= kAutoRankCap;
}

namespace detail {

// Minimal generating sequence: greedy picks outside <chosen, Phi(G)>, so the
// sequence length is exactly the generator rank. Elements are tried by
// decreasing order, then index, which also fixes the search order.
inline std::vector<Elem> minimal_generating_sequence(const Group& G) {
    if (G.order() == 1) return {};
    Subgroup phi = frattini_subgroup(G);
    std::vector<Elem> by_order(static_cast<std::size_t>(G.order() - 1));
    for (Elem i = 1; i < G.order(); ++i) by_order[static_cast<std::size_t>(i - 1)] = i;
    std::stable_sort(by_order.begin(), by_order.end(), [&](Elem a, Elem b) {
        return element_order(G, a) > element_order(G, b);
    });

    std::vector<Elem> picked;
    std::vector<Elem> span_seed = phi.members.to_vector();
    Bitset spanned = phi.members;
    while (static_cast<Elem>(subgroup_generated(G, std::span<const Elem>(picked)).size) != G.order()) {
        Elem next = -1;
        for (Elem x : by_order) {
            if (!spanned.test(static_cast<std::size_t>(x))) {
                next = x;
                break;
            }
        }
        if (next < 0) throw group_error("generating sequence search failed");
        picked.push_back(next);
        std::vector<Elem> seed = span_seed;
        seed.insert(seed.end(), picked.begin(), picked.end());
        spanned = subgroup_generated(G, std::span<const Elem>(seed)).members;
    }
    return picked;
}

// Extends a partial map by one generator image through breadth-first word
// closure. All products inside the closed set are checked as they appear, so
// a completed full-size map is a verified endomorphism.
struct ExtendState {
    std::vector<Elem> map;      // -1 where unknown
    std::vector<Elem> domain;   // discovery order
};

inline bool extend_by_generator(const Group& G, ExtendState& st, Elem gen, Elem image) {
    if (st.map[gen] != -1) return st.map[gen] == image;
    st.map[gen] = image;
    st.domain.push_back(gen);
    for (std::size_t qi = st.domain.size() - 1; qi < st.domain.size(); ++qi) {
        Elem z = st.domain[qi];
        for (std::size_t di = 0; di < st.domain.size(); ++di) {
            Elem y = st.domain[di];
            const Elem prods[2] = {G.mul(y, z), G.mul(z, y)};
            const Elem imgs[2] = {G.mul(st.map[y], st.map[z]), G.mul(st.map[z], st.map[y])};
            for (int t = 0; t < 2; ++t) {
                Elem w = prods[t], wi = imgs[t];
                if (st.map[w] == -1) {
                    st.map[w] = wi;
                    st.domain.push_back(w);
                } else if (st.map[w] != wi) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline bool is_bijection(const std::vector<Elem>& map) {
    Bitset seen(map.size());
    for (Elem v : map) {
        if (v < 0 || seen.test(static_cast<std::size_t>(v))) return false;
        seen.set(static_cast<std::size_t>(v));
    }
    return true;
}

}  // namespace detail

// Backtracking over images of a minimal generating sequence, candidates
// bucketed by element order.
inline AutomorphismSet automorphism_set(const Group& G) {
    if (!autos_budget_ok(G)) throw budget_error("automorphism search budget exceeded");

    AutomorphismSet result;
    result.group = G;
    const Elem n = G.order();
    if (n == 1) {
        result.autos.push_back({0});
        result.complete = true;
        return result;
    }

    std::vector<Elem> gens = detail::minimal_generating_sequence(G);
    std::vector<Elem> orders(static_cast<std::size_t>(n));
    for (Elem x = 0; x < n; ++x) orders[static_cast<std::size_t>(x)] = element_order(G, x);
    std::vector<std::vector<Elem>> candidates(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (Elem x = 1; x < n; ++x)
            if (orders[static_cast<std::size_t>(x)] == orders[static_cast<std::size_t>(gens[i])])
                candidates[i].push_back(x);

    detail::ExtendState root;
    root.map.assign(static_cast<std::size_t>(n), -1);
    root.map[0] = 0;
    root.domain.push_back(0);

    std::vector<detail::ExtendState> stack{root};
    std::vector<std::size_t> cand_pos{0};
    while (!stack.empty()) {
        std::size_t depth = stack.size() - 1;
        if (depth == gens.size()) {
            const auto& st = stack.back();
            if (static_cast<Elem>(st.domain.size()) == n && detail::is_bijection(st.map))
                result.autos.push_back(st.map);
            stack.pop_back();
            cand_pos.pop_back();
            continue;
        }
        if (cand_pos[depth] >= candidates[depth].size()) {
            stack.pop_back();
            cand_pos.pop_back();
            continue;
        }
        Elem image = candidates[depth][cand_pos[depth]++];
        detail::ExtendState next = stack.back();
        if (detail::extend_by_generator(G, next, gens[depth], image)) {
            stack.push_back(std::move(next));
            cand_pos.push_back(0);
        }
    }

    std::sort(result.autos.begin(), result.autos.end());
    result.complete = true;
    return result;
}

// Independent oracle: depth-first scan over all order-preserving bijections,
// element by element, with a full multiplicativity check at each leaf.
// Exhaustive and free of any generator logic.
inline AutomorphismSet automorphism_set_bruteforce(const Group& G) {
    if (G.order() > kAutoSmallOrder)
        throw budget_error("brute-force automorphism scan is limited to order 24");
    AutomorphismSet result;
    result.group = G;
    const Elem n = G.order();

    std::vector<Elem> orders(static_cast<std::size_t>(n));
    for (Elem x = 0; x < n; ++x) orders[static_cast<std::size_t>(x)] = element_order(G, x);

    std::vector<Elem> map(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    map[0] = 0;
    used[0] = true;

    // partial pruning: products already inside the assigned prefix must agree
    auto consistent = [&](Elem x) {
        for (Elem a = 0; a < n; ++a) {
            if (map[static_cast<std::size_t>(a)] == -1) continue;
            Elem ax = G.mul(a, x), xa = G.mul(x, a);
            if (map[static_cast<std::size_t>(ax)] != -1 &&
                map[static_cast<std::size_t>(ax)] !=
                    G.mul(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(x)]))
                return false;
            if (map[static_cast<std::size_t>(xa)] != -1 &&
                map[static_cast<std::size_t>(xa)] !=
                    G.mul(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(a)]))
                return false;
        }
        return true;
    };

    std::function<void(Elem)> search = [&](Elem at) {
        if (at == n) {
            for (Elem a = 0; a < n; ++a)
                for (Elem b = 0; b < n; ++b)
                    if (map[static_cast<std::size_t>(G.mul(a, b))] !=
                        G.mul(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]))
                        return;
            result.autos.push_back(map);
            return;
        }
        for (Elem y = 0; y < n; ++y) {
            if (used[static_cast<std::size_t>(y)]) continue;
            if (orders[static_cast<std::size_t>(y)] != orders[static_cast<std::size_t>(at)]) continue;
            map[static_cast<std::size_t>(at)] = y;
            if (consistent(at)) {
                used[static_cast<std::size_t>(y)] = true;
                search(at + 1);
                used[static_cast<std::size_t>(y)] = false;
            }
            map[static_cast<std::size_t>(at)] = -1;
        }
    };
    search(1);

    std::sort(result.autos.begin(), result.autos.end());
    result.complete = true;
    return result;
}

inline bool is_characteristic(const Group& G, const Subgroup& H) {
    AutomorphismSet aut = automorphism_set(G);
    for (const auto& phi : aut.autos) {
        bool fixed = true;
        H.members.for_each([&](Elem h) {
            if (fixed && !H.contains(phi[static_cast<std::size_t>(h)])) fixed = false;
        });
        if (!fixed) return false;
    }
    return true;
}

// Conjugation action N_G(H) -> Aut(H): kernel must be C_G(H), the image must
// land inside the enumerated automorphism set and be closed under
// composition. Implies |N/C| divides |Aut(H)|.
inline bool nc_embedding_check(const Group& G, const Subgroup& H) {
    auto [Hg, elems] = subgroup_as_group(H);
    AutomorphismSet aut = automorphism_set(Hg);

    std::vector<Elem> idx_of(static_cast<std::size_t>(G.order()), -1);
    for (Elem i = 0; i < Hg.order(); ++i)
        idx_of[static_cast<std::size_t>(elems[static_cast<std::size_t>(i)])] = i;

    Subgroup N = normalizer(G, H);
    Subgroup C = centralizer(G, H);

    std::vector<std::vector<Elem>> images;
    bool ok = true;
    N.members.for_each([&](Elem g) {
        if (!ok) return;
        std::vector<Elem> phi(static_cast<std::size_t>(Hg.order()));
        for (Elem i = 0; i < Hg.order(); ++i) {
            Elem conj = G.mul(G.mul(g, elems[static_cast<std::size_t>(i)]), G.inv(g));
            Elem t = idx_of[static_cast<std::size_t>(conj)];
            if (t < 0) {
                ok = false;
                return;
            }
            phi[static_cast<std::size_t>(i)] = t;
        }
        bool identity = true;
        for (Elem i = 0; i < Hg.order(); ++i)
            if (phi[static_cast<std::size_t>(i)] != i) identity = false;
        if (identity != C.contains(g)) ok = false;  // kernel must equal the centralizer
        if (!std::binary_search(aut.autos.begin(), aut.autos.end(), phi)) ok = false;
        images.push_back(std::move(phi));
    });
    if (!ok) return false;

    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());
    if (static_cast<Elem>(images.size()) != N.size / C.size) return false;
    if (aut.autos.size() % images.size() != 0) return false;
    for (const auto& f : images) {
        for (const auto& g : images) {
            std::vector<Elem> comp(f.size());
            for (std::size_t i = 0; i < f.size(); ++i) comp[i] = f[g[i]];
            if (!std::binary_search(images.begin(), images.end(), comp)) return false;
        }
    }
    return true;
}

}  // namespace pgroup
