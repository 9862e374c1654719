#include <doctest.h>

#include "pgroup/families.hpp"
#include "pgroup/invariants.hpp"
#include "pgroup/io.hpp"

#include "support.hpp"

using namespace pgroup;
using testsupport::family;

namespace {

GroupSpec perm_spec(Elem degree, std::vector<std::vector<Elem>> gens) {
    PermutationSpec ps;
    ps.degree = degree;
    ps.generators = std::move(gens);
    return GroupSpec{std::move(ps)};
}

Elem find_by_label(const Group& g, const std::string& label) {
    for (Elem i = 0; i < g.order(); ++i)
        if (g.label(i) == label) return i;
    FAIL("label not found: " << label);
    return -1;
}

}  // namespace

TEST_CASE("permutation closure: a single involution gives C2") {
    Group g = build_group(perm_spec(2, {{1, 0}}));
    CHECK(g.order() == 2);
    CHECK(g.mul(1, 1) == 0);
    REQUIRE(g.prime_power());
    CHECK(g.prime_power()->p == 2);
}

TEST_CASE("permutation closure: D8 on 4 points") {
    Group g = build_group(perm_spec(4, {{1, 2, 3, 0}, {0, 3, 2, 1}}));
    CHECK(g.order() == 8);
    CHECK_FALSE(is_abelian(g));
}

TEST_CASE("permutation closure: wreath generators on 9 points give order 81") {
    // block 3-cycle and the block-permuting 3-cycle
    Group g = build_group(perm_spec(9, {{1, 2, 0, 3, 4, 5, 6, 7, 8},
                                        {3, 4, 5, 6, 7, 8, 0, 1, 2}}));
    CHECK(g.order() == 81);
    REQUIRE(g.prime_power());
    CHECK(g.prime_power()->p == 3);
    CHECK(g.prime_power()->m == 4);
}

TEST_CASE("permutation closure stops at the order cap") {
    // a transposition and a 9-cycle generate all 362880 permutations of 9 points
    Group g;  // unused
    CHECK_THROWS_AS(build_group(perm_spec(9, {{1, 0, 2, 3, 4, 5, 6, 7, 8},
                                              {1, 2, 3, 4, 5, 6, 7, 8, 0}})),
                    group_error);
}

TEST_CASE("permutation spec validation") {
    PermutationSpec ps;
    ps.degree = 3;
    ps.generators = {{0, 0, 1}};
    nlohmann::json j = {{"kind", "permutations"}, {"degree", 3}, {"generators", {{0, 0, 1}}}};
    CHECK_THROWS_AS(parse_group_json(j, "test"), group_error);
}

TEST_CASE("table spec: C2, and rejection of non-Latin squares") {
    nlohmann::json good = {{"kind", "table"}, {"table", {{0, 1}, {1, 0}}}};
    Group g = build_group(parse_group_json(good, "test"));
    CHECK(g.order() == 2);

    nlohmann::json bad = {{"kind", "table"}, {"table", {{0, 1}, {1, 1}}}};
    CHECK_THROWS_AS(parse_group_json(bad, "test"), group_error);
}

TEST_CASE("table spec relabels the identity to index 0") {
    // Z/3 with the identity listed second
    nlohmann::json j = {{"kind", "table"}, {"table", {{2, 0, 1}, {0, 1, 2}, {1, 2, 0}}}};
    Group g = build_group(parse_group_json(j, "test"));
    CHECK(g.order() == 3);
    for (Elem a = 0; a < 3; ++a) CHECK(g.mul(0, a) == a);
}

TEST_CASE("dihedral family: order and prime power") {
    Group d8 = family(Family::dihedral, {{"m", 3}});
    CHECK(d8.order() == 8);
    REQUIRE(d8.prime_power());
    CHECK(d8.prime_power()->p == 2);
    CHECK(d8.prime_power()->m == 3);
}

TEST_CASE("element orders") {
    Group d8 = family(Family::dihedral, {{"m", 3}});
    CHECK(element_order(d8, 0) == 1);
    CHECK(element_order(d8, find_by_label(d8, "r")) == 4);
    Group e = family(Family::elementary_abelian, {{"p", 3}, {"k", 3}});
    for (Elem x = 1; x < e.order(); ++x) CHECK(element_order(e, x) == 3);
}

TEST_CASE("commutators") {
    Group d8 = family(Family::dihedral, {{"m", 3}});
    Elem r = find_by_label(d8, "r");
    Elem s = find_by_label(d8, "s");
    for (Elem x = 0; x < d8.order(); ++x) CHECK(d8.commutator(x, x) == 0);
    CHECK(d8.commutator(r, s) == d8.mul(r, r));  // [r, s] = r^2

    Group ab = family(Family::cyclic, {{"p", 2}, {"m", 3}});
    for (Elem x = 0; x < ab.order(); ++x)
        for (Elem y = 0; y < ab.order(); ++y) CHECK(ab.commutator(x, y) == 0);
}

TEST_CASE("generated subgroups") {
    Group d8 = family(Family::dihedral, {{"m", 3}});
    CHECK(subgroup_generated(d8, {}).size == 1);
    CHECK(subgroup_generated(d8, {find_by_label(d8, "r")}).size == 4);
    CHECK(subgroup_generated(d8, std::span<const Elem>(d8.generators())).size == 8);
}

TEST_CASE("closure idempotence") {
    Group q16 = family(Family::quaternion, {{"m", 4}});
    for (Elem x = 0; x < q16.order(); x += 3) {
        Subgroup h = subgroup_generated(q16, {x, 5});
        Subgroup again = subgroup_generated(q16, std::span<const Elem>(h.members.to_vector()));
        CHECK(h.members == again.members);
    }
}

TEST_CASE("commutator subgroups") {
    Group d8 = family(Family::dihedral, {{"m", 3}});
    Subgroup whole = whole_group(d8);
    Subgroup der = commutator_subgroup(d8, whole, whole);
    CHECK(der.size == 2);
    CHECK(der.contains(d8.mul(find_by_label(d8, "r"), find_by_label(d8, "r"))));

    Group ab = family(Family::elementary_abelian, {{"p", 2}, {"k", 3}});
    CHECK(commutator_subgroup(ab, whole_group(ab), whole_group(ab)).size == 1);

    Subgroup triv = trivial_subgroup(d8);
    CHECK(commutator_subgroup(d8, whole, triv).size == 1);
}

TEST_CASE("commutator subgroup symmetry") {
    Group g = family(Family::quaternion, {{"m", 4}});
    std::vector<Subgroup> subs = all_subgroups(g);
    for (const Subgroup& x : subs)
        for (const Subgroup& y : subs) {
            Subgroup xy = commutator_subgroup(g, x, y);
            Subgroup yx = commutator_subgroup(g, y, x);
            CHECK(xy.members == yx.members);
        }
}

TEST_CASE("commutator subgroup: pairwise route equals generator-closure route") {
    for (Group g : {family(Family::dihedral, {{"m", 4}}), family(Family::wreath_cpcp, {{"p", 3}}),
                    family(Family::heisenberg, {{"p", 5}})}) {
        Subgroup whole = whole_group(g);
        // pairwise route (forced by the small pair count)
        Subgroup brute = commutator_subgroup(g, whole, whole);
        // generator-closure route, forced by the helper
        std::vector<Elem> seeds;
        for (Elem a : g.generators())
            for (Elem b : g.generators()) seeds.push_back(g.commutator(a, b));
        Subgroup fast = subgroup_generated(g, std::span<const Elem>(seeds));
        for (;;) {
            std::vector<Elem> extra;
            fast.members.for_each([&](Elem w) {
                for (Elem c : g.generators()) {
                    Elem t = g.conjugate(w, c);
                    if (!fast.contains(t)) extra.push_back(t);
                }
            });
            if (extra.empty()) break;
            std::vector<Elem> next = fast.members.to_vector();
            next.insert(next.end(), extra.begin(), extra.end());
            fast = subgroup_generated(g, std::span<const Elem>(next));
        }
        CHECK(brute.members == fast.members);
    }
}

TEST_CASE("quotients") {
    Group d16 = family(Family::dihedral, {{"m", 4}});
    SUBCASE("by the whole group") {
        Quotient q = quotient_group(d16, whole_group(d16));
        CHECK(q.group.order() == 1);
    }
    SUBCASE("by the trivial subgroup") {
        Quotient q = quotient_group(d16, trivial_subgroup(d16));
        CHECK(q.group.order() == 16);
        for (Elem x = 0; x < 16; ++x) CHECK(q.projection(x) == x);
    }
    SUBCASE("D16 modulo the order-2 central subgroup is nonabelian of order 8") {
        Elem r = 1;  // label "r"
        REQUIRE(d16.label(r) == "r");
        Subgroup n = subgroup_generated(d16, {d16.power(r, 4)});
        REQUIRE(n.size == 2);
        Quotient q = quotient_group(d16, n);
        CHECK(q.group.order() == 8);
        CHECK_FALSE(is_abelian(q.group));
    }
    SUBCASE("exactness: surjective projection with kernel N") {
        Subgroup n = subgroup_generated(d16, {d16.power(1, 2)});
        Quotient q = quotient_group(d16, n);
        CHECK(q.group.order() * n.size == d16.order());
        Subgroup ker = preimage(q.projection, trivial_subgroup(q.group));
        CHECK(ker.members == n.members);
        Subgroup img = image(q.projection, whole_group(d16));
        CHECK(img.size == q.group.order());
    }
    SUBCASE("quotient by a non-normal subgroup fails") {
        Elem s = find_by_label(d16, "s");
        Subgroup h = subgroup_generated(d16, {s});
        CHECK_THROWS_AS(quotient_group(d16, h), group_error);
    }
}

TEST_CASE("direct products") {
    Group d8 = family(Family::dihedral, {{"m", 3}});
    Group triv = family(Family::cyclic, {{"p", 2}, {"m", 1}});

    Group d8xtriv = direct_product(d8, subgroup_as_group(trivial_subgroup(triv)).first);
    CHECK(d8xtriv.order() == 8);

    Group c2 = family(Family::cyclic, {{"p", 2}, {"m", 1}});
    Group klein = direct_product(c2, c2);
    CHECK(klein.order() == 4);
    CHECK(exponent(klein) == 2);

    Group heis_c3 = direct_product(family(Family::heisenberg, {{"p", 3}}),
                                   family(Family::cyclic, {{"p", 3}, {"m", 1}}));
    CHECK(heis_c3.order() == 81);
    CHECK(nilpotency_class(heis_c3) == 2);
}

TEST_CASE("normality") {
    Group d8 = family(Family::dihedral, {{"m", 3}});
    Group ab = family(Family::elementary_abelian, {{"p", 3}, {"k", 2}});
    for (const Subgroup& h : all_subgroups(ab)) CHECK(is_normal(ab, h));
    Elem s = find_by_label(d8, "s");
    CHECK_FALSE(is_normal(d8, subgroup_generated(d8, {s})));
    CHECK(is_normal(d8, subgroup_generated(d8, {find_by_label(d8, "r")})));
}

TEST_CASE("Lagrange over generated subgroups") {
    for (Group g : {family(Family::semidihedral, {{"m", 5}}), family(Family::wreath_cpcp, {{"p", 3}})}) {
        for (Elem x = 0; x < g.order(); x += 5)
            for (Elem y = 1; y < g.order(); y += 7) {
                Subgroup h = subgroup_generated(g, {x, y});
                CHECK(g.order() % h.size == 0);
            }
    }
}

TEST_CASE("order cap") {
    Group big = family(Family::cyclic, {{"p", 2}, {"m", 12}});  // 4096
    Group big2 = family(Family::cyclic, {{"p", 5}, {"m", 5}});  // 3125
    CHECK_THROWS_AS(direct_product(direct_product(big, big2), big2), group_error);
}

TEST_CASE("subgroup extraction keeps arithmetic") {
    Group d16 = family(Family::dihedral, {{"m", 4}});
    Subgroup h = subgroup_generated(d16, {1});  // <r>, cyclic of order 8
    auto [hg, elems] = subgroup_as_group(h);
    CHECK(hg.order() == 8);
    for (Elem a = 0; a < 8; ++a)
        for (Elem b = 0; b < 8; ++b) {
            Elem parent = d16.mul(elems[static_cast<std::size_t>(a)], elems[static_cast<std::size_t>(b)]);
            CHECK(elems[static_cast<std::size_t>(hg.mul(a, b))] == parent);
        }
}

TEST_CASE("homomorphism verification catches bad maps") {
    Group c4 = family(Family::cyclic, {{"p", 2}, {"m", 2}});
    Group c2 = family(Family::cyclic, {{"p", 2}, {"m", 1}});
    Homomorphism good{c4, c2, {0, 1, 0, 1}};
    CHECK_NOTHROW(verify_homomorphism(good));
    Homomorphism bad{c4, c2, {0, 1, 1, 0}};
    CHECK_THROWS_AS(verify_homomorphism(bad), group_error);
}
