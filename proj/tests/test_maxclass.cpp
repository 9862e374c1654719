#include <doctest.h>

#include "pgroup/families.hpp"
#include "pgroup/invariants.hpp"
#include "pgroup/maxclass.hpp"

#include "support.hpp"

using namespace pgroup;
using testsupport::family;

TEST_CASE("maximal-class predicate") {
    CHECK(is_maximal_class(family(Family::dihedral, {{"m", 3}})));
    CHECK_FALSE(is_maximal_class(family(Family::elementary_abelian, {{"p", 2}, {"k", 3}})));
    CHECK(is_maximal_class(family(Family::wreath_cpcp, {{"p", 3}})));
    CHECK_FALSE(is_maximal_class(family(Family::modular_pgroup, {{"p", 2}, {"m", 4}})));
}

TEST_CASE("order p^2 is accepted only behind the flag") {
    Group c4 = family(Family::cyclic, {{"p", 2}, {"m", 2}});
    Group klein = family(Family::elementary_abelian, {{"p", 2}, {"k", 2}});
    for (const Group& g : {c4, klein}) {
        CHECK_FALSE(is_maximal_class(g));
        CHECK(is_maximal_class(g, /*include_p2=*/true));
    }
    Group c2 = family(Family::cyclic, {{"p", 2}, {"m", 1}});
    CHECK_FALSE(is_maximal_class(c2, true));
}

TEST_CASE("subgroup-level predicate matches the group-level one") {
    for (Group g : {family(Family::dihedral, {{"m", 5}}), family(Family::wreath_cpcp, {{"p", 3}})}) {
        for (const Subgroup& h : all_subgroups(g)) {
            if (h.size < 8) continue;
            auto [hg, elems] = subgroup_as_group(h);
            CHECK(is_maximal_class_sub(g, h) == is_maximal_class(hg));
        }
    }
}

TEST_CASE("fundamental subgroup of the order-16 maximal-class groups") {
    Group d16 = family(Family::dihedral, {{"m", 4}});
    Subgroup g1 = fundamental_subgroup(d16);
    CHECK(d16.order() / g1.size == 2);
    CHECK(is_cyclic_sub(d16, g1));  // <r>
    CHECK(g1.contains(1));          // r itself

    Group q16 = family(Family::quaternion, {{"m", 4}});
    Subgroup q1 = fundamental_subgroup(q16);
    CHECK(q1.size == 8);
    CHECK(is_cyclic_sub(q16, q1));
}

TEST_CASE("fundamental subgroup of the order-81 wreath product is the abelian base") {
    Group w3 = family(Family::wreath_cpcp, {{"p", 3}});
    Subgroup g1 = fundamental_subgroup(w3);
    CHECK(g1.size == 27);
    CHECK(is_abelian_sub(w3, g1));
}

TEST_CASE("fundamental subgroup: direct form equals the quotient form") {
    for (Group g : {family(Family::dihedral, {{"m", 4}}), family(Family::quaternion, {{"m", 5}}),
                    family(Family::semidihedral, {{"m", 5}}), family(Family::wreath_cpcp, {{"p", 3}}),
                    family(Family::cyclotomic_maxclass, {{"p", 3}, {"n", 5}})}) {
        CHECK(fundamental_subgroup(g).members == fundamental_subgroup_via_quotient(g).members);
    }
}

TEST_CASE("fundamental subgroup always contains the derived subgroup at index p") {
    for (Elem p : {2, 3}) {
        for (const Group& g : census(p, 243)) {
            auto pp = g.prime_power();
            if (pp->m < 4 || !is_maximal_class(g)) continue;
            Subgroup g1 = fundamental_subgroup(g);
            CHECK(g.order() / g1.size == pp->p);
            CHECK(g1.members.contains(derived_subgroup(g).members));
        }
    }
}

TEST_CASE("fundamental subgroup preconditions") {
    CHECK_THROWS_AS(fundamental_subgroup(family(Family::dihedral, {{"m", 3}})), group_error);
    CHECK_THROWS_AS(fundamental_subgroup(family(Family::elementary_abelian, {{"p", 2}, {"k", 4}})),
                    group_error);
}

TEST_CASE("two-step centralizers") {
    Group d16 = family(Family::dihedral, {{"m", 4}});
    std::vector<Subgroup> ms = two_step_centralizers(d16);
    REQUIRE(ms.size() == 1);  // i ranges over {2} at order p^4
    CHECK(ms[0].members == fundamental_subgroup(d16).members);

    Group w3 = family(Family::wreath_cpcp, {{"p", 3}});
    std::vector<Subgroup> w_ms = two_step_centralizers(w3);
    REQUIRE(w_ms.size() == 1);
    CHECK(w3.order() / w_ms[0].size == 3);

    Group cy = family(Family::cyclotomic_maxclass, {{"p", 3}, {"n", 5}});
    std::vector<Subgroup> cy_ms = two_step_centralizers(cy);
    REQUIRE(cy_ms.size() == 2);  // i in {2, 3}
    for (const Subgroup& m : cy_ms) CHECK(cy.order() / m.size == 3);
    CHECK(cy_ms[0].members == fundamental_subgroup(cy).members);  // M_2 = G_1
}

TEST_CASE("gamma1 classification of the order-243 cyclotomic group") {
    Group cy = family(Family::cyclotomic_maxclass, {{"p", 3}, {"n", 5}});
    MaxClassReport rep = classify_gamma1(cy);
    REQUIRE(rep.gamma1);
    CHECK(rep.gamma1->size() == 4);  // p + 1
    int fundamentals = 0, members = 0;
    for (const auto& [sub, role] : *rep.gamma1) {
        CHECK(cy.order() / sub.size == 3);
        if (role == Gamma1Role::fundamental) ++fundamentals;
        else ++members;
    }
    CHECK(fundamentals == 1);
    CHECK(members == 3);
}

TEST_CASE("gamma1 classification gates") {
    CHECK_THROWS_AS(classify_gamma1(family(Family::dihedral, {{"m", 4}})), group_error);  // p = 2
    CHECK_THROWS_AS(classify_gamma1(family(Family::wreath_cpcp, {{"p", 3}})), group_error);  // m = p+1
}

TEST_CASE("maximal-class section pattern across the census") {
    for (Elem p : {2, 3}) {
        for (const Group& g : census(p, 243)) {
            if (!is_maximal_class(g)) continue;
            MaxClassReport rep = analyze_maxclass(g);
            auto pp = g.prime_power();
            REQUIRE(static_cast<int>(rep.sections.size()) == pp->m - 1);
            CHECK(rep.sections[0] == pp->p * pp->p);
            for (std::size_t i = 1; i < rep.sections.size(); ++i) CHECK(rep.sections[i] == pp->p);
            CHECK(center(g).size == pp->p);
        }
    }
}

TEST_CASE("analyze report on a non-maximal-class group") {
    Group e = family(Family::elementary_abelian, {{"p", 3}, {"k", 2}});
    MaxClassReport rep = analyze_maxclass(e);
    CHECK_FALSE(rep.is_maximal_class);
    CHECK_FALSE(rep.fundamental.has_value());
    CHECK(rep.cls == 1);
}
