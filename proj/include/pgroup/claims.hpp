#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "pgroup/autos.hpp"
#include "pgroup/group.hpp"
#include "pgroup/invariants.hpp"
#include "pgroup/maxclass.hpp"

namespace pgroup {

enum class ClaimStatus { holds, vacuous, refuted };

inline const char* claim_status_name(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::holds: return "holds";
        case ClaimStatus::vacuous: return "vacuous";
        case ClaimStatus::refuted: return "refuted";
    }
    return "?";
}

struct ClaimReport {
    std::string claim;
    std::string group;
    ClaimStatus status = ClaimStatus::vacuous;
    nlohmann::json witness;  // populated on refutation
    std::chrono::microseconds elapsed{0};
};

struct ClaimOutcome {
    ClaimStatus status;
    nlohmann::json witness;
};

struct ClaimDef {
    std::string id;
    std::string statement;
    std::function<bool(const Group&)> in_budget;
    std::function<ClaimOutcome(const Group&)> eval;
};

namespace claim_detail {

inline ClaimOutcome holds() { return {ClaimStatus::holds, nullptr}; }
inline ClaimOutcome vacuous() { return {ClaimStatus::vacuous, nullptr}; }
inline ClaimOutcome refuted(nlohmann::json witness) {
    return {ClaimStatus::refuted, std::move(witness)};
}

inline nlohmann::json subgroup_witness(const Subgroup& H) {
    nlohmann::json j;
    j["size"] = H.size;
    std::vector<Elem> members = H.members.to_vector();
    if (members.size() > 32) {
        members.resize(32);
        j["truncated"] = true;
    }
    j["members"] = members;
    return j;
}

inline nlohmann::json element_witness(const Group& G, Elem x) {
    return nlohmann::json{{"index", x}, {"label", G.label(x)}};
}

inline PrimePower pp_of(const Group& G) {
    auto pp = G.prime_power();
    if (!pp) throw group_error("claim registry requires p-groups");
    return *pp;
}

inline long long int_pow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

inline Elem log_p(Elem p, Elem value) {
    int k = 0;
    while (value > 1) {
        value /= p;
        ++k;
    }
    return k;
}

// K_i with i past the computed series meaning the trivial subgroup.
inline Subgroup kterm(const Series& lcs, const Group& G, int i) {
    if (static_cast<std::size_t>(i - 1) < lcs.terms.size())
        return lcs.terms[static_cast<std::size_t>(i - 1)];
    return trivial_subgroup(G);
}

// Memoizes the subgroup maximal-class predicate by member set; the lattice
// claims revisit the same subgroups many times.
struct McSubCache {
    const Group& G;
    std::unordered_map<Bitset, bool, BitsetHash> memo;

    bool operator()(const Subgroup& H) {
        auto it = memo.find(H.members);
        if (it != memo.end()) return it->second;
        bool v = is_maximal_class_sub(G, H);
        memo.emplace(H.members, v);
        return v;
    }
};

inline bool has_nontrivial_direct_factor(const Group& G) {
    std::vector<Subgroup> normals = normal_subgroups(G);
    for (std::size_t i = 0; i < normals.size(); ++i) {
        const Subgroup& A = normals[i];
        if (A.size <= 1 || A.size >= G.order()) continue;
        for (std::size_t j = i + 1; j < normals.size(); ++j) {
            const Subgroup& B = normals[j];
            if (B.size <= 1 || B.size >= G.order()) continue;
            if (static_cast<long long>(A.size) * B.size != G.order()) continue;
            if (intersect(A, B).size != 1) continue;
            Bitset u = A.members;
            u |= B.members;
            if (subgroup_generated_set(G, u).size == G.order()) return true;
        }
    }
    return false;
}

inline std::vector<ClaimDef> build_registry() {
    std::vector<ClaimDef> reg;
    auto any_budget = [](const Group&) { return true; };
    auto normal_budget = [](const Group& G) { return G.order() <= kNormalEnumOrderCap; };
    auto lattice_budget = [](const Group& G) { return G.order() <= kLatticeOrderCap; };

    // --- basic nilpotency facts -------------------------------------------

    reg.push_back(ClaimDef{
        "T2.4",
        "p-groups of order >= p^2: class <= m-1; |G : Z_{c-1}| >= p^2; maximal subgroups "
        "normal of index p; |G : G'| >= p^2",
        normal_budget,
        [](const Group& G) -> ClaimOutcome {
            PrimePower pp = pp_of(G);
            if (pp.m < 2) return vacuous();
            const int c = nilpotency_class(G);
            if (c > pp.m - 1) return refuted({{"class", c}, {"m", pp.m}});
            Series ucs = upper_central_series(G);
            const Subgroup& zc1 = ucs.terms[static_cast<std::size_t>(c - 1)];
            if (G.order() / zc1.size < pp.p * pp.p)
                return refuted({{"part", 2}, {"index_of_Z_{c-1}", G.order() / zc1.size}});
            std::vector<Subgroup> maxs = maximal_subgroups(G);
            for (const Subgroup& M : maxs) {
                if (G.order() / M.size != pp.p)
                    return refuted({{"part", 3}, {"maximal", subgroup_witness(M)}});
                Subgroup fresh = subgroup_from_members(G, M.members);
                if (!is_normal(G, fresh))
                    return refuted({{"part", 3}, {"non_normal", subgroup_witness(M)}});
            }
            // Maximality sweep: every proper subgroup must lie inside an
            // index-p subgroup. Kept to sizes whose lattices stay small
            // (elementary abelian groups explode combinatorially), with the
            // guard as a backstop on unusual inputs.
            bool sweep = is_abelian(G) ? G.order() <= 64 : G.order() <= kLatticeOrderCap;
            if (sweep) {
                try {
                    for (const Subgroup& H : all_subgroups(G)) {
                        if (H.size == G.order()) continue;
                        bool covered = false;
                        for (const Subgroup& M : maxs)
                            if (M.members.contains(H.members)) {
                                covered = true;
                                break;
                            }
                        if (!covered)
                            return refuted({{"part", 3}, {"uncovered", subgroup_witness(H)}});
                    }
                } catch (const budget_error&) {
                }
            }
            Subgroup der = derived_subgroup(G);
            if (G.order() / der.size < pp.p * pp.p)
                return refuted({{"part", 4}, {"commutator_index", G.order() / der.size}});
            return holds();
        }});

    reg.push_back(ClaimDef{
        "C2.5",
        "normal N of index p^i >= p^2 contains K_i(G)",
        normal_budget,
        [](const Group& G) -> ClaimOutcome {
            PrimePower pp = pp_of(G);
            if (pp.m < 2) return vacuous();
            // abelian: K_i is trivial for i >= 2, so containment is automatic
            if (is_abelian(G)) return holds();
            Series lcs = lower_central_series(G);
            for (const Subgroup& N : normal_subgroups(G)) {
                Elem index = G.order() / N.size;
                if (index < pp.p * pp.p) continue;
                int i = log_p(pp.p, index);
                Subgroup ki = kterm(lcs, G, i);
                if (!N.members.contains(ki.members))
                    return refuted({{"normal", subgroup_witness(N)}, {"i", i}});
            }
            return holds();
        }});

    reg.push_back(ClaimDef{
        "SERIES-COINCIDE",
        "maximal class: lower and upper central series coincide, K_i = Z_{m-i}",
        any_budget,
        [](const Group& G) -> ClaimOutcome {
            PrimePower pp = pp_of(G);
            if (pp.m < 3 || !is_maximal_class(G)) return vacuous();
            Series lcs = lower_central_series(G);
            Series ucs = upper_central_series(G);
            if (ucs.terms.size() != static_cast<std::size_t>(pp.m))
                return refuted({{"upper_length", ucs.terms.size()}});
            for (int i = 2; i <= pp.m; ++i) {
                Subgroup ki = kterm(lcs, G, i);
                const Subgroup& z = ucs.terms[static_cast<std::size_t>(pp.m - i)];
                if (!(ki.members == z.members))
                    return refuted({{"i", i},
                                    {"K_i", subgroup_witness(ki)},
                                    {"Z_{m-i}", subgroup_witness(z)}});
            }
            return holds();
        }});

    // --- maximal class structure ------------------------------------------

    reg.push_back(ClaimDef{
        "P3.2",
        "maximal class: |G:G'| = p^2, |Z| = p, sections of size p, a unique normal subgroup "
        "of each order p^i (i < m-1), and p+1 maximal subgroups",
        normal_budget,
        [](const Group& G) -> ClaimOutcome {
            PrimePower pp = pp_of(G);
            if (pp.m < 3 || !is_maximal_class(G)) return vacuous();
            Series lcs = lower_central_series(G);
            Subgroup der = kterm(lcs, G, 2);
            if (G.order() / der.size != pp.p * pp.p)
                return refuted({{"commutator_index", G.order() / der.size}});
            if (center(G).size != pp.p) return refuted({{"center_order", center(G).size}});
            for (int i = 2; i <= pp.m - 1; ++i) {
                Elem sec = kterm(lcs, G, i).size / kterm(lcs, G, i + 1).size;
                if (sec != pp.p) return refuted({{"section", i}, {"size", sec}});
            }
            std::vector<Subgroup> normals = normal_subgroups(G);
            for (int i = 1; i < pp.m - 1; ++i) {
                Elem target = static_cast<Elem>(int_pow(pp.p, i));
                int count = 0;
                for (const Subgroup& N : normals)
                    if (N.size == target) ++count;
                if (count != 1) return refuted({{"order", target}, {"normal_count", count}});
                if (G.order() / target >= pp.p * pp.p) {
                    // the unique one of index >= p^2 is the central-series term
                    Subgroup ki = kterm(lcs, G, pp.m - i);
                    for (const Subgroup& N : normals)
                        if (N.size == target && !(N.members == ki.members))
                            return refuted({{"order", target}, {"not_series_term", true}});
                }
            }
            if (static_cast<Elem>(maximal_subgroups(G).size()) != pp.p + 1)
                return refuted({{"maximal_count", maximal_subgroups(G).size()}});
            return holds();
        }});

    reg.push_back(ClaimDef{
        "R3.3.1",
        "noncyclic of order > p^2 with one normal subgroup of each order p^i, i < m-1, "
        "is of maximal class",
        normal_budget,
        [](const Group& G) -> ClaimOutcome {
            PrimePower pp = pp_of(G);
            if (pp.m < 3) return vacuous();
            if (is_cyclic_sub(G, whole_group(G))) return vacuous();
            // a noncyclic abelian group already has p+1 normal subgroups of
            // order p, so its hypothesis can never be satisfied
            if (is_abelian(G)) return vacuous();
            std::vector<Subgroup> normals = normal_subgroups(G);
            for (int i = 1; i < pp.m - 1; ++i) {
                Elem target = static_cast<Elem>(int_pow(pp.p, i));
                int count = 0;
                for (const Subgroup& N : normals)
                    if (N.size == target) ++count;
                if (count != 1) return vacuous();
            }
            if (!is_maximal_class(G)) return refuted({{"class", nilpotency_class(G)}});
            return holds();
        }});

    reg.push_back(ClaimDef{
        "R3.3.2",
        "order p^n, n >= 3: maximal class iff exactly n+p-1 normal subgroups N with 1 < N < G",
        normal_budget,
        [](const Group& G) -> ClaimOutcome {
            PrimePower pp = pp_of(G);
            if (pp.m < 3) return vacuous();
            // the count includes the trivial subgroup and G, so the cap
            // leaves one unit of slack past expected + 2; an overshoot
            // decides the comparison without full enumeration
            Elem expected = pp.m + pp.p - 1;
            Elem total = normal_subgroup_count_capped(G, expected + 3);
            bool capped_out = (total == expected + 4);
            bool count_matches = (total - 2 == expected);
            bool mc = is_maximal_class(G);
            if (count_matches != mc)
                return refuted({{"normal_count_nontrivial_proper",
                                 capped_out ? nlohmann::json("> " + std::to_string(expected + 1))
                                            : nlohmann::json(total - 2)},
                                {"expected", expected},
                                {"maximal_class", mc}});
            return holds();
        }});

    reg.push_back(ClaimDef{
        "QUOT-MC",
        "quotients of a maximal-class group by normal subgroups of index >= p^2 are of "
        "maximal class",
        normal_budget,
        [](const Group& G) -> ClaimOutcome {
            PrimePower pp = pp_of(G);
            if (pp.m < 3 || !is_maximal_class(G)) return vacuous();
            for (const Subgroup& N : normal_subgroups(G)) {
                if (G.order() / N.size < pp.p * pp.p) continue;
                Quotient q = quotient_group(G, N);
                if (!is_maximal_class(q.group, /*include_p2=*/true))
                    return refuted({{"normal", subgroup_witness(N)},
                                    {"quotient_order", q.group.order()}});
            }
            return holds();
        }});

    reg.push_back(ClaimDef{
        "P3.4",
        "nonabelian of order p^m > p^p with a unique normal subgroup of index p^k for "
        "every k in {2..p+1} is of maximal class",
        normal_budget,
        [](const Group& G) -> ClaimOutcome {
            PrimePower pp = pp_of(G);
            if (pp.m <= pp.p || is_abelian(G)) return vacuous();
            std::vector<Subgroup> normals = normal_subgroups(G);
            for (int k = 2; k <= pp.p + 1; ++k) {
                long long index = int_pow(pp.p, k);
                int count = 0;
                for (const Subgroup& N : normals)
                    if (static_cast<long long>(G.order()) == index * N.size) ++count;
                if (count != 1) return vacuous();
            }
            if (!is_maximal_class(G)) return refuted({{"class", nilpotency_class(G)}});
            return holds();
        }});

    reg.push_back(ClaimDef{
        "P3.5",
        "nonabelian with a self-centralizing subgroup of order p^2 is of maximal class",
        lattice_budget,
        [](const Group& G) -> ClaimOutcome {
            PrimePower pp = pp_of(G);
            if (is_abelian(G)) return vacuous();
            Elem p2 = pp.p * pp.p;
            std::optional<Subgroup> witness;
            for (const Subgroup& A : all_subgroups(G)) {
                if (A.size != p2 || A.size == G.order()) continue;
                if (centralizer(G, A).members == A.members) {
                    witness = A;
                    break;
                }
            }
            if (!witness) return vacuous();
            if (!is_maximal_class(G))
                return refuted({{"self_centralizing", subgroup_witness(*witness)},
                                {"class", nilpotency_class(G)}});
            return holds();
        }});

    reg.push_back(ClaimDef{
        "C3.6",
        "maximal class (order p^2 admitted) iff some element has centralizer of order p^2",
        normal_budget,
        [](const Group& G) -> ClaimOutcome {
            PrimePower pp = pp_of(G);
            Elem p2 = pp.p * pp.p;
            std::optional<Elem> witness;
            for (Elem x = 0; x < G.order(); ++x) {
                if (centralizer_of_element(G, x).size == p2) {
                    witness = x;
                    break;
                }
            }
            bool mc = is_maximal_class(G, /*include_p2=*/true);
            if (witness.has_value() != mc)
                return refuted({{"element_with_p2_centralizer", witness.has_value()},
                                {"maximal_class", mc}});
            return holds();
        }});

    reg.push_back(ClaimDef{
        "P3.7",
        "a nonabelian subgroup B of order p^3 with C_G(B) < B forces maximal class",
        lattice_budget,
        [](const Group& G) -> ClaimOutcome {
            PrimePower pp = pp_of(G);
            if (is_abelian(G)) return vacuous();
            Elem p3 = pp.p * pp.p * pp.p;
            std::optional<Subgroup> witness;
            for (const Subgroup& B : all_subgroups(G)) {
                if (B.size != p3 || is_abelian_sub(G, B)) continue;
                Subgroup c = centralizer(G, B);
                if (B.members.contains(c.members) && c.size < B.size) {
                    witness = B;
                    break;
                }
            }
            if (!witness) return vacuous();
            if (!is_maximal_class(G))
                return refuted({{"B", subgroup_witness(*witness)}, {"class", nilpotency_class(G)}});
            return holds();
        }});

    reg.push_back(ClaimDef{
        "P3.8",
        "a subgroup whose normalizer is of maximal class forces maximal class",
        lattice_budget,
        [](const Group& G) -> ClaimOutcome {
            pp_of(G);
            if (is_abelian(G)) return vacuous();  // N_G(H) = G is never maximal class here
            McSubCache mc_sub{G};
            std::optional<Subgroup> witness;
            for (const Subgroup& H : all_subgroups(G)) {
                Subgroup N = normalizer(G, H);
                if (mc_sub(N)) {
                    witness = H;
                    break;
                }
            }
            if (!witness) return vacuous();
            if (!is_maximal_class(G))
                return refuted({{"H", subgroup_witness(*witness)}, {"class", nilpotency_class(G)}});
            return holds();
        }});

    reg.push_back(ClaimDef{
        "L3.9",
        "N normal of order > p with G/N of order > p and cyclic center: preimages of "
        "order-p normal subgroups of G/N are not of maximal class",
        normal_budget,
        [](const Group& G) -> ClaimOutcome {
            PrimePower pp = pp_of(G);
            if (is_abelian(G)) {
                // preimages are abelian of order >= p^3, never of maximal
                // class; a qualifying pair exists exactly when some cyclic
                // quotient of order p^2 has a kernel larger than p
                bool qualifying = exponent(G) >= pp.p * pp.p && pp.m >= 4;
                return qualifying ? holds() : vacuous();
            }
            bool any = false;
            for (const Subgroup& N : normal_subgroups(G)) {
                if (N.size <= pp.p || G.order() / N.size <= pp.p) continue;
                Quotient q = quotient_group(G, N);
                Subgroup zq = center(q.group);
                if (!is_cyclic_sub(q.group, zq)) continue;
                // normal order-p subgroups of the quotient are central
                for (Elem z : zq.members.to_vector()) {
                    if (z == 0 || element_order(q.group, z) != pp.p) continue;
                    any = true;
                    Subgroup rq = subgroup_generated(q.group, {z});
                    Subgroup R = preimage(q.projection, rq);
                    if (is_maximal_class_sub(G, R))
                        return refuted({{"N", subgroup_witness(N)}, {"R", subgroup_witness(R)}});
                }
            }
            return any ? holds() : vacuous();
        }});

    reg.push_back(ClaimDef{
        "P3.10",
        "A of order > p: if every subgroup holding A at index p is of maximal class, so is G "
        "(and the same two steps up)",
        lattice_budget,
        [](const Group& G) -> ClaimOutcome {
            PrimePower pp = pp_of(G);
            if (is_abelian(G)) return vacuous();  // index-p oversubgroups are abelian
            std::vector<Subgroup> lattice = all_subgroups(G);
            McSubCache mc_sub{G};
            const bool g_mc = is_maximal_class(G);
            bool any = false;
            for (const Subgroup& A : lattice) {
                if (A.size <= pp.p || A.size == G.order()) continue;
                bool all_mc = true, some = false;
                for (const Subgroup& H : lattice) {
                    if (H.size != A.size * pp.p || !H.members.contains(A.members)) continue;
                    some = true;
                    if (!mc_sub(H)) {
                        all_mc = false;
                        break;
                    }
                }
                if (some && all_mc) {
                    any = true;
                    if (!g_mc)
                        return refuted({{"A", subgroup_witness(A)}, {"step", "index p"}});
                }
            }
            // index p^2 version
            for (const Subgroup& H : lattice) {
                if (H.size < pp.p) continue;
                long long target = static_cast<long long>(H.size) * pp.p * pp.p;
                if (target * pp.p > G.order()) continue;  // index > p^2 required
                bool all_mc = true, some = false;
                for (const Subgroup& M : lattice) {
                    if (M.size != target || !M.members.contains(H.members)) continue;
                    some = true;
                    if (!mc_sub(M)) {
                        all_mc = false;
                        break;
                    }
                }
                if (some && all_mc) {
                    any = true;
                    if (!g_mc)
                        return refuted({{"H", subgroup_witness(H)}, {"step", "index p^2"}});
                }
            }
            return any ? holds() : vacuous();
        }});

    reg.push_back(ClaimDef{
        "P3.11",
        "maximal class, p > 2, m > 3: the quotient by the normal subgroup of index p^3 "
        "has exponent p",
        normal_budget,
        [](const Group& G) -> ClaimOutcome {
            PrimePower pp = pp_of(G);
            if (pp.p <= 2 || pp.m <= 3 || !is_maximal_class(G)) return vacuous();
            Series lcs = lower_central_series(G);
            Subgroup k3 = kterm(lcs, G, 3);
            Quotient q = quotient_group(G, k3);
            if (exponent(q.group) != pp.p)
                return refuted({{"exponent", exponent(q.group)}});
            return holds();
        }});

    reg.push_back(ClaimDef{
        "L1.1",
        "nonabelian with an abelian maximal subgroup: |G| = p |G'| |Z(G)|",
        any_budget,
        [](const Group& G) -> ClaimOutcome {
            PrimePower pp = pp_of(G);
            if (is_abelian(G)) return vacuous();
            bool has_abelian_maximal = false;
            for (const Subgroup& M : maximal_subgroups(G))
                if (is_abelian_sub(G, M)) {
                    has_abelian_maximal = true;
                    break;
                }
            if (!has_abelian_maximal) return vacuous();
            long long rhs = static_cast<long long>(pp.p) * derived_subgroup(G).size * center(G).size;
            if (rhs != G.order())
                return refuted({{"order", G.order()}, {"p|G'||Z|", rhs}});
            return holds();
        }});

    reg.push_back(ClaimDef{
        "P3.13",
        "nonabelian with an abelian maximal subgroup and |G:G'| = p^2 is of maximal class",
        any_budget,
        [](const Group& G) -> ClaimOutcome {
            PrimePower pp = pp_of(G);
            if (is_abelian(G)) return vacuous();
            if (G.order() / derived_subgroup(G).size != pp.p * pp.p) return vacuous();
            bool has_abelian_maximal = false;
            for (const Subgroup& M : maximal_subgroups(G))
                if (is_abelian_sub(G, M)) {
                    has_abelian_maximal = true;
                    break;
                }
            if (!has_abelian_maximal) return vacuous();
            if (!is_maximal_class(G)) return refuted({{"class", nilpotency_class(G)}});
            return holds();
        }});

    reg.push_back(ClaimDef{
        "E3.14",
        "order p^4: maximal class iff |G:G'| = p^2",
        any_budget,
        [](const Group& G) -> ClaimOutcome {
            PrimePower pp = pp_of(G);
            if (pp.m != 4) return vacuous();
            bool idx = (G.order() / derived_subgroup(G).size == pp.p * pp.p);
            bool mc = is_maximal_class(G);
            if (idx != mc)
                return refuted({{"commutator_index_p2", idx}, {"maximal_class", mc}});
            return holds();
        }});

    reg.push_back(ClaimDef{
        "E3.15",
        "order p^4, exponent p, no nontrivial direct factor: maximal class",
        normal_budget,
        [](const Group& G) -> ClaimOutcome {
            PrimePower pp = pp_of(G);
            if (pp.m != 4 || exponent(G) != pp.p) return vacuous();
            // exponent p and abelian means elementary abelian: decomposable
            if (is_abelian(G)) return vacuous();
            if (has_nontrivial_direct_factor(G)) return vacuous();
            if (!is_maximal_class(G)) return refuted({{"class", nilpotency_class(G)}});
            return holds();
        }});

    reg.push_back(ClaimDef{
        "E3.16",
        "order p^4, exponent p, two generators: maximal class",
        any_budget,
        [](const Group& G) -> ClaimOutcome {
            PrimePower pp = pp_of(G);
            if (pp.m != 4 || exponent(G) != pp.p || generator_rank(G) != 2) return vacuous();
            if (!is_maximal_class(G)) return refuted({{"class", nilpotency_class(G)}});
            return holds();
        }});

    // --- fundamental subgroup ---------------------------------------------

    reg.push_back(ClaimDef{
        "P4.PROPS",
        "maximal class, order >= p^4: G/K_2 elementary abelian of order p^2, the chain "
        "G > G_1 > K_2 > ... has sections of size p, and K_i is the unique normal subgroup "
        "of index p^i (i >= 2)",
        normal_budget,
        [](const Group& G) -> ClaimOutcome {
            PrimePower pp = pp_of(G);
            if (pp.m < 4 || !is_maximal_class(G)) return vacuous();
            Series lcs = lower_central_series(G);
            Subgroup k2 = kterm(lcs, G, 2);
            Quotient top = quotient_group(G, k2);
            if (top.group.order() != pp.p * pp.p || exponent(top.group) != pp.p)
                return refuted({{"top_order", top.group.order()},
                                {"top_exponent", exponent(top.group)}});
            Subgroup g1 = fundamental_subgroup(G);
            if (G.order() / g1.size != pp.p) return refuted({{"G1_index", G.order() / g1.size}});
            if (g1.size / k2.size != pp.p)
                return refuted({{"G1_over_K2", g1.size / k2.size}});
            for (int i = 2; i < pp.m; ++i) {
                if (kterm(lcs, G, i).size / kterm(lcs, G, i + 1).size != pp.p)
                    return refuted({{"section", i}});
                if (G.order() / kterm(lcs, G, i).size != static_cast<Elem>(int_pow(pp.p, i)))
                    return refuted({{"index_at", i}});
            }
            std::vector<Subgroup> normals = normal_subgroups(G);
            for (int i = 2; i < pp.m; ++i) {
                Elem target = G.order() / static_cast<Elem>(int_pow(pp.p, i));
                Subgroup ki = kterm(lcs, G, i);
                for (const Subgroup& N : normals)
                    if (N.size == target && !(N.members == ki.members))
                        return refuted({{"index", i}, {"other_normal", subgroup_witness(N)}});
            }
            return holds();
        }});

    reg.push_back(ClaimDef{
        "L4.2",
        "the fundamental subgroup is characteristic",
        [](const Group& G) { return autos_budget_ok(G); },
        [](const Group& G) -> ClaimOutcome {
            PrimePower pp = pp_of(G);
            if (pp.m < 4 || !is_maximal_class(G)) return vacuous();
            Subgroup g1 = fundamental_subgroup(G);
            if (!is_characteristic(G, g1)) return refuted({{"G1", subgroup_witness(g1)}});
            return holds();
        }});

    reg.push_back(ClaimDef{
        "R4.3.1",
        "for normal N with |G/N| >= p^4, the fundamental subgroup of G/N is the image of G_1",
        normal_budget,
        [](const Group& G) -> ClaimOutcome {
            PrimePower pp = pp_of(G);
            if (pp.m < 4 || !is_maximal_class(G)) return vacuous();
            Subgroup g1 = fundamental_subgroup(G);
            long long p4 = int_pow(pp.p, 4);
            for (const Subgroup& N : normal_subgroups(G)) {
                if (static_cast<long long>(G.order() / N.size) < p4) continue;
                Quotient q = quotient_group(G, N);
                Subgroup qg1 = fundamental_subgroup(q.group);
                Subgroup img = image(q.projection, g1);
                if (!(qg1.members == img.members))
                    return refuted({{"N", subgroup_witness(N)}});
            }
            return holds();
        }});

    reg.push_back(ClaimDef{
        "R4.3.2",
        "order > p^4: for every maximal-class maximal subgroup M, its fundamental subgroup "
        "is G_1 meet M, equals Phi(G), and has index p^2",
        normal_budget,
        [](const Group& G) -> ClaimOutcome {
            PrimePower pp = pp_of(G);
            if (pp.m <= 4 || !is_maximal_class(G)) return vacuous();
            Subgroup g1 = fundamental_subgroup(G);
            Subgroup phi = frattini_subgroup(G);
            bool any = false;
            for (const Subgroup& M : maximal_subgroups(G)) {
                if (!is_maximal_class_sub(G, M)) continue;
                any = true;
                auto [Mg, elems] = subgroup_as_group(M);
                Subgroup m1_local = fundamental_subgroup(Mg);
                Bitset m1(static_cast<std::size_t>(G.order()));
                m1_local.members.for_each(
                    [&](Elem i) { m1.set(static_cast<std::size_t>(elems[static_cast<std::size_t>(i)])); });
                Subgroup M1 = subgroup_from_members(G, std::move(m1));
                Subgroup meet = intersect(g1, M);
                if (!(M1.members == meet.members))
                    return refuted({{"M", subgroup_witness(M)}, {"reason", "M1 != G1 meet M"}});
                if (G.order() / M1.size != pp.p * pp.p)
                    return refuted({{"M", subgroup_witness(M)}, {"index", G.order() / M1.size}});
                if (!(M1.members == phi.members))
                    return refuted({{"M", subgroup_witness(M)}, {"reason", "M1 != Phi(G)"}});
            }
            return any ? holds() : vacuous();
        }});

    reg.push_back(ClaimDef{
        "L4.4",
        "p > 2, order p^m with m > p+1: the maximal subgroups are G_1 and p maximal-class "
        "members",
        normal_budget,
        [](const Group& G) -> ClaimOutcome {
            PrimePower pp = pp_of(G);
            if (pp.p <= 2 || pp.m <= pp.p + 1) return vacuous();
            if (!is_maximal_class(G)) return vacuous();
            MaxClassReport rep = classify_gamma1(G);  // throws into refutation on failure
            if (!rep.gamma1 || static_cast<Elem>(rep.gamma1->size()) != pp.p + 1)
                return refuted({{"gamma1_size", rep.gamma1 ? rep.gamma1->size() : 0}});
            int fundamentals = 0;
            for (const auto& [sub, role] : *rep.gamma1)
                if (role == Gamma1Role::fundamental) ++fundamentals;
            if (fundamentals != 1) return refuted({{"fundamental_count", fundamentals}});
            return holds();
        }});

    reg.push_back(ClaimDef{
        "P4.5",
        "order > p^{p+1}: subgroups of order > p^p not inside G_1 are of maximal class",
        lattice_budget,
        [](const Group& G) -> ClaimOutcome {
            PrimePower pp = pp_of(G);
            if (pp.m <= pp.p + 1 || !is_maximal_class(G)) return vacuous();
            Subgroup g1 = fundamental_subgroup(G);
            McSubCache mc_sub{G};
            long long ppow = int_pow(pp.p, pp.p);
            bool any = false;
            for (const Subgroup& H : all_subgroups(G)) {
                if (H.size == G.order() || H.size <= ppow) continue;
                if (g1.members.contains(H.members)) continue;
                any = true;
                if (!mc_sub(H)) return refuted({{"H", subgroup_witness(H)}});
            }
            return any ? holds() : vacuous();
        }});

    reg.push_back(ClaimDef{
        "P4.6",
        "order > p^{p+1}: subgroups of order > p^2 lie in G_1 or are of maximal class",
        lattice_budget,
        [](const Group& G) -> ClaimOutcome {
            PrimePower pp = pp_of(G);
            if (pp.m <= pp.p + 1 || !is_maximal_class(G)) return vacuous();
            Subgroup g1 = fundamental_subgroup(G);
            McSubCache mc_sub{G};
            bool any = false;
            for (const Subgroup& H : all_subgroups(G)) {
                if (H.size == G.order() || H.size <= pp.p * pp.p) continue;
                any = true;
                if (!g1.members.contains(H.members) && !mc_sub(H))
                    return refuted({{"H", subgroup_witness(H)}});
            }
            return any ? holds() : vacuous();
        }});

    reg.push_back(ClaimDef{
        "E4.7",
        "order > p^{p+1}: exp(G_1) = exp(G), and elements of order >= p^3 lie in G_1",
        any_budget,
        [](const Group& G) -> ClaimOutcome {
            PrimePower pp = pp_of(G);
            if (pp.m <= pp.p + 1 || !is_maximal_class(G)) return vacuous();
            Subgroup g1 = fundamental_subgroup(G);
            if (exponent_of_subgroup(G, g1) != exponent(G))
                return refuted({{"exp_G1", exponent_of_subgroup(G, g1)}, {"exp_G", exponent(G)}});
            Elem p3 = pp.p * pp.p * pp.p;
            for (Elem x = 0; x < G.order(); ++x)
                if (element_order(G, x) >= p3 && !g1.contains(x))
                    return refuted({{"element", element_witness(G, x)},
                                    {"order", element_order(G, x)}});
            return holds();
        }});

    return reg;
}

}  // namespace claim_detail

inline const std::vector<ClaimDef>& claim_registry() {
    static const std::vector<ClaimDef> reg = claim_detail::build_registry();
    return reg;
}

inline const ClaimDef* find_claim(const std::string& id) {
    for (const ClaimDef& c : claim_registry())
        if (c.id == id) return &c;
    return nullptr;
}

// Evaluates one claim on one group. Structural breakage inside the engine
// (a corrupted multiplication, a coset partition failure) surfaces as a
// refutation with the failure as witness rather than aborting the sweep.
inline ClaimReport run_claim(const std::string& id, const Group& G) {
    const ClaimDef* def = find_claim(id);
    if (!def) throw group_error("unknown claim id: " + id);
    if (!G.prime_power()) throw group_error("the claim suite requires p-groups");
    if (!def->in_budget(G)) throw budget_error("claim " + id + " exceeds its budget on " + G.name());

    ClaimReport rep;
    rep.claim = id;
    rep.group = G.name();
    auto t0 = std::chrono::steady_clock::now();
    try {
        ClaimOutcome out = def->eval(G);
        rep.status = out.status;
        rep.witness = std::move(out.witness);
    } catch (const budget_error&) {
        throw;
    } catch (const group_error& e) {
        rep.status = ClaimStatus::refuted;
        rep.witness = nlohmann::json{{"engine_invariant_violated", e.what()}};
    }
    rep.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - t0);
    return rep;
}

}  // namespace pgroup
