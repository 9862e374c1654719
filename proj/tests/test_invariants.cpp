#include <doctest.h>

#include <set>

#include "pgroup/families.hpp"
#include "pgroup/invariants.hpp"

#include "support.hpp"

using namespace pgroup;
using testsupport::family;

namespace {

std::vector<Elem> term_sizes(const Series& s) {
    std::vector<Elem> out;
    for (const Subgroup& t : s.terms) out.push_back(t.size);
    return out;
}

}  // namespace

TEST_CASE("centralizers") {
    Group d8 = family(Family::dihedral, {{"m", 3}});
    CHECK(centralizer(d8, trivial_subgroup(d8)).size == 8);
    CHECK(center(d8).size == 2);
    Subgroup r = subgroup_generated(d8, {1});
    Subgroup c = centralizer(d8, r);
    CHECK(c.size == 4);
    CHECK(c.members == r.members);
}

TEST_CASE("centralizer generating-set method equals the exhaustive method") {
    for (Elem p : {2, 3}) {
        for (const Group& g : census(p, 64)) {
            std::vector<Subgroup> probes = maximal_subgroups(g);
            probes.push_back(center(g));
            probes.push_back(derived_subgroup(g));
            probes.push_back(subgroup_generated(g, {g.order() > 1 ? 1 : 0}));
            for (const Subgroup& h : probes)
                CHECK(centralizer(g, h).members == centralizer_full(g, h).members);
        }
    }
}

TEST_CASE("normalizers") {
    Group d16 = family(Family::dihedral, {{"m", 4}});
    Subgroup r = subgroup_generated(d16, {1});
    CHECK(normalizer(d16, r).size == 16);  // normal subgroup
    Elem s = -1;
    for (Elem i = 0; i < 16; ++i)
        if (d16.label(i) == "s") s = i;
    REQUIRE(s >= 0);
    CHECK(normalizer(d16, subgroup_generated(d16, {s})).size == 4);
    CHECK(normalizer(d16, whole_group(d16)).size == 16);
}

TEST_CASE("lower central series") {
    Group ab = family(Family::cyclic, {{"p", 3}, {"m", 2}});
    CHECK(term_sizes(lower_central_series(ab)) == std::vector<Elem>{9, 1});

    Group d8 = family(Family::dihedral, {{"m", 3}});
    CHECK(term_sizes(lower_central_series(d8)) == std::vector<Elem>{8, 2, 1});

    // rotations r^i sit at indices i, reflections r^i s at 8 + i
    Group d16 = family(Family::dihedral, {{"m", 4}});
    Series lcs = lower_central_series(d16);
    CHECK(term_sizes(lcs) == std::vector<Elem>{16, 4, 2, 1});
    CHECK(lcs.terms[1].members.to_vector() == std::vector<Elem>{0, 2, 4, 6});  // <r^2>
    CHECK(lcs.terms[2].members.to_vector() == std::vector<Elem>{0, 4});        // <r^4>
}

TEST_CASE("upper central series") {
    Group ab = family(Family::elementary_abelian, {{"p", 2}, {"k", 2}});
    CHECK(term_sizes(upper_central_series(ab)) == std::vector<Elem>{1, 4});

    Group d8 = family(Family::dihedral, {{"m", 3}});
    CHECK(term_sizes(upper_central_series(d8)) == std::vector<Elem>{1, 2, 8});

    Group d16 = family(Family::dihedral, {{"m", 4}});
    Series ucs = upper_central_series(d16);
    CHECK(term_sizes(ucs) == std::vector<Elem>{1, 2, 4, 16});
    CHECK(ucs.terms[1].members.to_vector() == std::vector<Elem>{0, 4});        // <r^4>
    CHECK(ucs.terms[2].members.to_vector() == std::vector<Elem>{0, 2, 4, 6});  // <r^2>
}

TEST_CASE("derived series") {
    Group ab = family(Family::cyclic, {{"p", 5}, {"m", 1}});
    CHECK(term_sizes(derived_series(ab)) == std::vector<Elem>{5, 1});

    Group d16 = family(Family::dihedral, {{"m", 4}});
    CHECK(term_sizes(derived_series(d16)) == std::vector<Elem>{16, 4, 1});

    // p-groups are solvable: the derived series always reaches the identity
    for (const Group& g : census(3, 81)) CHECK(derived_series(g).terms.back().size == 1);
}

TEST_CASE("nilpotency class") {
    CHECK(nilpotency_class(family(Family::elementary_abelian, {{"p", 3}, {"k", 2}})) == 1);
    CHECK(nilpotency_class(family(Family::dihedral, {{"m", 3}})) == 2);
    Group w3 = family(Family::wreath_cpcp, {{"p", 3}});
    CHECK(nilpotency_class(w3) == 3);
    CHECK(static_cast<int>(lower_central_series(w3).terms.size()) - 1 == 3);
}

TEST_CASE("class agrees between the two series over a census sweep") {
    for (Elem p : {2, 3}) {
        for (const Group& g : census(p, 81)) {
            int via_upper = nilpotency_class(g);
            int via_lower = static_cast<int>(lower_central_series(g).terms.size()) - 1;
            CHECK(via_upper == via_lower);
        }
    }
}

TEST_CASE("exponent") {
    CHECK(exponent(family(Family::elementary_abelian, {{"p", 5}, {"k", 2}})) == 5);
    CHECK(exponent(family(Family::dihedral, {{"m", 3}})) == 4);
    CHECK(exponent(family(Family::quaternion, {{"m", 3}})) == 4);
}

TEST_CASE("normal subgroup enumeration") {
    Group cp = family(Family::cyclic, {{"p", 7}, {"m", 1}});
    CHECK(normal_subgroups(cp).size() == 2);

    Group d16 = family(Family::dihedral, {{"m", 4}});
    std::vector<Subgroup> n16 = normal_subgroups(d16);
    CHECK(n16.size() == 7);
    int proper_nontrivial = 0;
    for (const Subgroup& n : n16)
        if (n.size > 1 && n.size < 16) ++proper_nontrivial;
    CHECK(proper_nontrivial == 5);

    Group klein = family(Family::elementary_abelian, {{"p", 2}, {"k", 2}});
    CHECK(normal_subgroups(klein).size() == 5);
}

TEST_CASE("normal subgroup enumeration agrees with the lattice filter") {
    for (Group g : {family(Family::dihedral, {{"m", 4}}), family(Family::quaternion, {{"m", 3}}),
                    family(Family::heisenberg, {{"p", 3}}),
                    family(Family::modular_pgroup, {{"p", 2}, {"m", 4}})}) {
        std::vector<Subgroup> by_saturation = normal_subgroups(g);
        std::vector<Subgroup> by_filter;
        for (Subgroup& h : all_subgroups(g)) {
            Subgroup fresh = subgroup_from_members(g, h.members);
            if (is_normal(g, fresh)) by_filter.push_back(std::move(fresh));
        }
        REQUIRE(by_saturation.size() == by_filter.size());
        for (std::size_t i = 0; i < by_filter.size(); ++i)
            CHECK(by_saturation[i].members == by_filter[i].members);
    }
}

TEST_CASE("maximal subgroups") {
    CHECK(maximal_subgroups(family(Family::cyclic, {{"p", 2}, {"m", 2}})).size() == 1);
    CHECK(maximal_subgroups(family(Family::dihedral, {{"m", 3}})).size() == 3);
    CHECK(maximal_subgroups(family(Family::elementary_abelian, {{"p", 3}, {"k", 2}})).size() == 4);
    for (const Subgroup& m : maximal_subgroups(family(Family::wreath_cpcp, {{"p", 3}})))
        CHECK(m.size == 27);
}

TEST_CASE("full subgroup lattice") {
    CHECK(all_subgroups(family(Family::cyclic, {{"p", 5}, {"m", 1}})).size() == 2);
    CHECK(all_subgroups(family(Family::dihedral, {{"m", 3}})).size() == 10);
    CHECK(all_subgroups(family(Family::quaternion, {{"m", 3}})).size() == 6);
}

TEST_CASE("subgroup listings are sorted by size then member list") {
    std::vector<Subgroup> subs = all_subgroups(family(Family::dihedral, {{"m", 3}}));
    for (std::size_t i = 1; i < subs.size(); ++i) {
        CHECK_FALSE(subgroup_less(subs[i], subs[i - 1]));
        CHECK(subs[i - 1].size <= subs[i].size);
    }
}

TEST_CASE("Frattini subgroup") {
    CHECK(frattini_subgroup(family(Family::elementary_abelian, {{"p", 3}, {"k", 3}})).size == 1);
    CHECK(frattini_subgroup(family(Family::cyclic, {{"p", 2}, {"m", 2}})).size == 2);

    Group d16 = family(Family::dihedral, {{"m", 4}});
    Subgroup phi = frattini_subgroup(d16);
    Series lcs = lower_central_series(d16);
    CHECK(phi.members == lcs.terms[1].members);  // K_2
}

TEST_CASE("Frattini subgroup equals the derived-and-powers sieve") {
    for (Elem p : {2, 3}) {
        for (const Group& g : census(p, 32)) {
            Subgroup by_intersection = frattini_subgroup(g);
            Subgroup der = derived_subgroup(g);
            Bitset seed = der.members;
            for (Elem x = 0; x < g.order(); ++x)
                seed.set(static_cast<std::size_t>(g.power(x, p)));
            Subgroup sieve = subgroup_generated_set(g, seed);
            CHECK(by_intersection.members == sieve.members);
        }
    }
}

TEST_CASE("generator rank") {
    CHECK(generator_rank(family(Family::cyclic, {{"p", 3}, {"m", 4}})) == 1);
    CHECK(generator_rank(family(Family::dihedral, {{"m", 5}})) == 2);
    CHECK(generator_rank(family(Family::semidihedral, {{"m", 4}})) == 2);
    CHECK(generator_rank(family(Family::elementary_abelian, {{"p", 2}, {"k", 3}})) == 3);
}

TEST_CASE("minimal nonabelian subgroups") {
    Group d16 = family(Family::dihedral, {{"m", 4}});
    CHECK_FALSE(is_minimal_nonabelian(d16, subgroup_generated(d16, {1})));  // abelian
    CHECK_FALSE(is_minimal_nonabelian(d16, whole_group(d16)));  // contains a D8

    Group d8 = family(Family::dihedral, {{"m", 3}});
    CHECK(is_minimal_nonabelian(d8, whole_group(d8)));
    CHECK(is_minimal_nonabelian(family(Family::quaternion, {{"m", 3}}),
                                whole_group(family(Family::quaternion, {{"m", 3}}))));
}

TEST_CASE("nilpotency bounds across the census") {
    for (Elem p : {2, 3}) {
        for (const Group& g : census(p, 64)) {
            auto pp = g.prime_power();
            REQUIRE(pp);
            if (pp->m < 2) continue;
            int c = nilpotency_class(g);
            CHECK(c <= pp->m - 1);
            Series ucs = upper_central_series(g);
            CHECK(g.order() / ucs.terms[static_cast<std::size_t>(c - 1)].size >= pp->p * pp->p);
            for (const Subgroup& m : maximal_subgroups(g)) {
                CHECK(g.order() / m.size == pp->p);
                Subgroup fresh = subgroup_from_members(g, m.members);
                CHECK(is_normal(g, fresh));
            }
            CHECK(g.order() / derived_subgroup(g).size >= pp->p * pp->p);
        }
    }
}

TEST_CASE("normal subgroups of small index contain the central series terms") {
    for (Elem p : {2, 3}) {
        for (const Group& g : census(p, 64)) {
            auto pp = g.prime_power();
            Series lcs = lower_central_series(g);
            for (const Subgroup& n : normal_subgroups(g)) {
                Elem index = g.order() / n.size;
                if (index < pp->p * pp->p) continue;
                int i = 0;
                for (Elem v = index; v > 1; v /= pp->p) ++i;
                Subgroup ki = static_cast<std::size_t>(i - 1) < lcs.terms.size()
                                  ? lcs.terms[static_cast<std::size_t>(i - 1)]
                                  : trivial_subgroup(g);
                CHECK(n.members.contains(ki.members));
            }
        }
    }
}

TEST_CASE("central series sections are central in the quotient") {
    for (Group g : {family(Family::dihedral, {{"m", 5}}), family(Family::wreath_cpcp, {{"p", 3}})}) {
        Series lcs = lower_central_series(g);
        for (std::size_t i = 0; i + 1 < lcs.terms.size(); ++i) {
            Quotient q = quotient_group(g, lcs.terms[i + 1]);
            Subgroup sec = image(q.projection, lcs.terms[i]);
            Subgroup zq = center(q.group);
            CHECK(zq.members.contains(sec.members));
        }
    }
}

TEST_CASE("lower central terms are monotone in the subgroup") {
    for (Group g : {family(Family::dihedral, {{"m", 4}}), family(Family::heisenberg, {{"p", 3}}),
                    family(Family::quaternion, {{"m", 4}})}) {
        Series lcs = lower_central_series(g);
        for (const Subgroup& h : all_subgroups(g)) {
            std::vector<Subgroup> hterms = lower_central_series_in(g, h);
            for (std::size_t i = 0; i < hterms.size(); ++i) {
                Subgroup gi = i < lcs.terms.size() ? lcs.terms[i] : trivial_subgroup(g);
                CHECK(gi.members.contains(hterms[i].members));
            }
        }
    }
}

TEST_CASE("budgets") {
    Group big = family(Family::cyclic, {{"p", 2}, {"m", 10}});  // order 1024
    CHECK_THROWS_AS(all_subgroups(big), budget_error);
    Group big2 = family(Family::elementary_abelian, {{"p", 2}, {"k", 13}});  // order 8192
    CHECK_THROWS_AS(normal_subgroups(big2), budget_error);
}
