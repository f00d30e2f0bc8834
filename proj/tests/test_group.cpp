#include <catch2/catch_amalgamated.hpp>

#include "test_util.hpp"

using namespace burnside;
using testutil::make_cyclic;
using testutil::make_d8;
using testutil::make_klein4;
using testutil::make_q8;

TEST_CASE("from_cayley accepts valid groups") {
    FiniteGroup triv = FiniteGroup::from_cayley({{0}});
    CHECK(triv.order() == 1);
    CHECK(triv.identity() == 0);

    FiniteGroup c2 = FiniteGroup::from_cayley({{0, 1}, {1, 0}});
    CHECK(c2.order() == 2);
    CHECK(c2.inv(1) == 1);
    CHECK(c2.element_order(1) == 2);

    FiniteGroup d8 = make_d8();
    CHECK(d8.order() == 8);
    CHECK(d8.identity() == 0);
    CHECK(d8.inv(1) == 3);              // r^-1 = r^3
    CHECK(d8.mul(6, 1) == 5);           // s r = r^3 s
    CHECK(d8.conj(6, 1) == 3);          // s r s^-1 = r^-1
    CHECK(d8.element_order(1) == 4);
    CHECK(d8.element_order(2) == 2);
    CHECK(d8.element_order(6) == 2);
}

TEST_CASE("from_cayley rejects non-groups with a witness") {
    // not a Latin square
    CHECK_THROWS_AS(FiniteGroup::from_cayley({{0, 0}, {1, 0}}), NotAGroup);
    // Latin square without identity (rows are shifts but no two-sided unit):
    // this 5x5 table is a quasigroup, x*y = 2x+y mod 5.
    std::vector<std::vector<int>> q(5, std::vector<int>(5));
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) q[a][b] = (2 * a + b) % 5;
    CHECK_THROWS_AS(FiniteGroup::from_cayley(q), NotAGroup);
    CHECK_THROWS_WITH(FiniteGroup::from_cayley(q), Catch::Matchers::ContainsSubstring("identity"));
    // entry out of range
    CHECK_THROWS_AS(FiniteGroup::from_cayley({{0, 1}, {1, 2}}), NotAGroup);
    // non-square
    CHECK_THROWS_AS(FiniteGroup::from_cayley({{0, 1}}), NotAGroup);
    // label count mismatch
    CHECK_THROWS_AS(FiniteGroup::from_cayley({{0, 1}, {1, 0}}, {"1"}), NotAGroup);
}

TEST_CASE("from_permutations enumerates the closure") {
    FiniteGroup c3 = FiniteGroup::from_permutations(3, {{1, 2, 0}});
    CHECK(c3.order() == 3);
    CHECK(c3.identity() == 0);

    FiniteGroup s4 = FiniteGroup::from_permutations(4, {{1, 0, 2, 3}, {1, 2, 3, 0}});
    CHECK(s4.order() == 24);

    FiniteGroup a6 = FiniteGroup::from_permutations(
        6, {{1, 2, 0, 3, 4, 5}, {0, 2, 3, 1, 4, 5}, {0, 1, 3, 4, 2, 5}, {0, 1, 2, 4, 5, 3}});
    CHECK(a6.order() == 360);
    // every element of A6 is an even permutation
    for (const auto& perm : a6.permutations()) {
        int inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inversions;
        CHECK(inversions % 2 == 0);
    }

    CHECK_THROWS_AS(FiniteGroup::from_permutations(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}, 10),
                    OrderCapExceeded);
    CHECK_THROWS_AS(FiniteGroup::from_permutations(3, {{0, 0, 1}}), NotAGroup);
}

TEST_CASE("permutation products compose right-to-left") {
    // a = (01), b = (012): a*b means b first, then a.
    FiniteGroup g = FiniteGroup::from_permutations(3, {{1, 0, 2}, {1, 2, 0}});
    REQUIRE(g.order() == 6);
    const auto& perms = g.permutations();
    // find indices of a and b
    int ia = -1, ib = -1;
    for (int i = 0; i < 6; ++i) {
        if (perms[i] == std::vector<int>{1, 0, 2}) ia = i;
        if (perms[i] == std::vector<int>{1, 2, 0}) ib = i;
    }
    REQUIRE(ia >= 0);
    REQUIRE(ib >= 0);
    // (01)(012) sends 0 -> 1 -> 0, 1 -> 2, 2 -> 0 -> 1 : that is (12)
    CHECK(perms[g.mul(ia, ib)] == std::vector<int>{0, 2, 1});
}

TEST_CASE("subgroup construction and validation") {
    FiniteGroup d8 = make_d8();
    Subgroup z = Subgroup::from_members(d8, {0, 2});
    CHECK(z.order() == 2);
    CHECK(Subgroup::generated(d8, {1}).members() == std::vector<int>{0, 1, 2, 3});
    CHECK(Subgroup::generated(d8, {2, 6}).members() == std::vector<int>{0, 2, 6, 7});
    CHECK(Subgroup::generated(d8, {4, 6}).order() == 8);
    CHECK(Subgroup::trivial(d8).members() == std::vector<int>{0});
    CHECK(Subgroup::whole(d8).order() == 8);

    CHECK_THROWS_AS(Subgroup::from_members(d8, {0, 1}), NotAGroup);  // r not closed
    CHECK_THROWS_AS(Subgroup::from_members(d8, {1, 2, 3}), NotAGroup);  // no identity
}

TEST_CASE("subgroup enumeration matches brute force on tiny groups") {
    for (const FiniteGroup& g : {make_klein4(), make_d8(), make_cyclic(6), make_q8()}) {
        auto subs = all_subgroups(g);
        auto oracle = testutil::subgroups_by_subsets(g);
        auto key = [](const Subgroup& s) { return s.members(); };
        std::set<std::vector<int>> a, b;
        for (const auto& s : subs) a.insert(key(s));
        for (const auto& s : oracle) b.insert(key(s));
        CHECK(a == b);
    }
}

TEST_CASE("subgroup class tables: known counts") {
    FiniteGroup triv = FiniteGroup::from_cayley({{0}});
    CHECK(enumerate_subgroups(triv).size() == 1);

    SubgroupClassTable v4 = enumerate_subgroups(make_klein4());
    CHECK(v4.size() == 5);  // 1, three C2, V4 — all normal
    int v4_total = 0;
    for (const auto& c : v4.classes) v4_total += static_cast<int>(c.size());
    CHECK(v4_total == 5);

    SubgroupClassTable d8 = enumerate_subgroups(make_d8());
    CHECK(d8.size() == 8);
    int d8_total = 0;
    for (const auto& c : d8.classes) d8_total += static_cast<int>(c.size());
    CHECK(d8_total == 10);

    SubgroupClassTable q8 = enumerate_subgroups(make_q8());
    CHECK(q8.size() == 6);  // 1, <-1>, <i>, <j>, <k>, Q8

    // classes are sorted by canonical order and closed under conjugation
    for (int c = 0; c + 1 < d8.size(); ++c)
        CHECK(canonical_less(d8.rep(c), d8.rep(c + 1)));
    FiniteGroup g = make_d8();
    for (int c = 0; c < d8.size(); ++c)
        for (int x = 0; x < g.order(); ++x)
            CHECK(d8.class_of(d8.rep(c).conjugate(g, x)) == c);
}

TEST_CASE("D8 class order matches the canonical convention") {
    FiniteGroup g = make_d8();
    SubgroupClassTable cls = enumerate_subgroups(g);
    std::vector<std::string> labels;
    for (int c = 0; c < cls.size(); ++c) labels.push_back(subgroup_label(g, cls.rep(c)));
    CHECK(labels == std::vector<std::string>{"1", "<r^2>", "<rs>", "<s>", "<r>", "<r^2,rs>",
                                             "<r^2,s>", "D8"});
}

TEST_CASE("normalizer, transporter, double cosets") {
    FiniteGroup g = make_d8();
    Subgroup z = Subgroup::from_members(g, {0, 2});
    Subgroup rs = Subgroup::from_members(g, {0, 4});
    Subgroup s = Subgroup::from_members(g, {0, 6});
    Subgroup c4 = Subgroup::from_members(g, {0, 1, 2, 3});

    CHECK(normalizer(g, z).order() == 8);        // center is normal
    CHECK(normalizer(g, rs).order() == 4);       // <r^2, rs>
    CHECK(normalizer(g, rs).members() == std::vector<int>{0, 2, 4, 5});
    CHECK(normalizer(g, s).members() == std::vector<int>{0, 2, 6, 7});
    CHECK(normalizer(g, c4).order() == 8);

    // transporter nonempty iff subconjugate; size divisible by |N_G(target)|
    CHECK(transporter(g, rs, s).empty());        // not conjugate in D8
    CHECK(transporter(g, z, c4).size() == 8);    // z central, inside C4
    CHECK(transporter(g, rs, Subgroup::from_members(g, {0, 5})).size() == 4);
    CHECK(transporter(g, c4, rs).empty());       // order obstruction

    SubgroupClassTable cls = enumerate_subgroups(g);
    for (int i = 0; i < cls.size(); ++i)
        for (int j = 0; j < cls.size(); ++j) {
            auto t = transporter(g, cls.rep(i), cls.rep(j));
            CHECK(t.empty() == !cls.subconj[i][j]);
            if (!t.empty()) CHECK(t.size() % normalizer(g, cls.rep(j)).order() == 0);
        }

    // double cosets partition G: sum of |PgQ| equals |G|
    for (int i = 0; i < cls.size(); ++i)
        for (int j = 0; j < cls.size(); ++j) {
            const Subgroup& p = cls.rep(i);
            const Subgroup& q = cls.rep(j);
            auto reps = double_cosets(g, p, q);
            CHECK(!reps.empty());
            CHECK(std::is_sorted(reps.begin(), reps.end()));
            int total = 0;
            for (int r : reps) {
                Subgroup meet = intersect(g, p, q.conjugate(g, r));
                total += p.order() * q.order() / meet.order();
            }
            CHECK(total == g.order());
        }
}

TEST_CASE("sylow subgroups") {
    FiniteGroup s4 = FiniteGroup::from_permutations(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}, 10000, "S4");
    Subgroup syl2 = sylow_subgroup(s4, 2);
    REQUIRE(syl2.order() == 8);
    // verify it is dihedral: an element of order 4 inverted by an involution
    SubgroupAsGroup sg = subgroup_as_group(s4, syl2);
    int r = -1;
    for (int x = 0; x < 8; ++x)
        if (sg.group.element_order(x) == 4) r = x;
    REQUIRE(r >= 0);
    bool dihedral = false;
    for (int y = 0; y < 8; ++y)
        if (sg.group.element_order(y) == 2 && !Subgroup::generated(sg.group, {r}).contains(y) &&
            sg.group.conj(y, r) == sg.group.inv(r))
            dihedral = true;
    CHECK(dihedral);

    CHECK(sylow_subgroup(s4, 3).order() == 3);
    CHECK(sylow_subgroup(s4, 5).order() == 1);  // p does not divide |G|

    FiniteGroup a6 = FiniteGroup::from_permutations(
        6, {{1, 2, 0, 3, 4, 5}, {0, 2, 3, 1, 4, 5}, {0, 1, 3, 4, 2, 5}, {0, 1, 2, 4, 5, 3}},
        10000, "A6");
    CHECK(sylow_subgroup(a6, 2).order() == 8);
    CHECK(sylow_subgroup(a6, 3).order() == 9);
    CHECK(sylow_subgroup(a6, 5).order() == 5);

    // determinism: repeated calls give the identical member set
    CHECK(sylow_subgroup(s4, 2).members() == sylow_subgroup(s4, 2).members());

    // whole-group and trivial edge cases
    FiniteGroup c2 = make_cyclic(2);
    CHECK(sylow_subgroup(c2, 2).order() == 2);
    CHECK(sylow_subgroup(c2, 3).order() == 1);
}

TEST_CASE("subgroup labels") {
    FiniteGroup g = make_d8();
    CHECK(subgroup_label(g, Subgroup::trivial(g)) == "1");
    CHECK(subgroup_label(g, Subgroup::whole(g)) == "D8");
    CHECK(subgroup_label(g, Subgroup::from_members(g, {0, 2})) == "<r^2>");
    CHECK(subgroup_label(g, Subgroup::from_members(g, {0, 1, 2, 3})) == "<r>");
    CHECK(subgroup_label(g, Subgroup::from_members(g, {0, 2, 4, 5})) == "<r^2,rs>");
    CHECK(subgroup_label(g, Subgroup::from_members(g, {0, 2, 6, 7})) == "<r^2,s>");
}
