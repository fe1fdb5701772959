#include <doctest.h>

#include "bgs/duality.hpp"
#include "bgs/identities.hpp"
#include "fixtures.hpp"

using namespace bgs;

TEST_CASE("derived_elements on ACT3") {
    auto a = fixtures::act3();
    auto d = derived_elements(a, 1);
    // field oracle: ACT3's non-identity element has p = 2 in GF(3);
    // bar corresponds to (1-p)^-1 = (-1)^-1 = 2, i.e. the same element
    CHECK(d.bar == 1);
    CHECK(d.hat == a.group.inv(d.bar));
    CHECK_THROWS_AS(derived_elements(a, 0), DegenerateElement);
}

TEST_CASE("bar matches the field oracle (1-p)^-1 for q up to 27") {
    for (int q : {3, 4, 5, 7, 8, 9, 16, 25, 27}) {
        auto f = gf(q);
        auto mg = multiplicative_group(f);
        auto a = field_to_action(f);
        for (int g = 0; g < mg.group.order; ++g) {
            int p = mg.elem_of_index[g];
            if (p == 1) continue;  // g = identity
            int inv_1mp = f.recip(f.sub(1, p));
            auto d = derived_elements(a, g);
            CHECK(d.bar == mg.index_of_elem[inv_1mp]);
        }
    }
}

TEST_CASE("GF(5): bar of p=3 has p=2") {
    auto f = gf(5, 1);
    auto mg = multiplicative_group(f);
    auto a = field_to_action(f);
    auto d = derived_elements(a, mg.index_of_elem[3]);
    CHECK(mg.elem_of_index[d.bar] == 2);
}

TEST_CASE("hat swaps the arguments") {
    for (int q : {3, 4, 5, 7}) {
        auto a = field_to_action(gf(q));
        for (int g = 1; g < a.group.order; ++g) {
            auto d = derived_elements(a, g);
            for (int x = 0; x < q; ++x)
                for (int y = 0; y < q; ++y) CHECK(a.at(g, x, y) == a.at(d.hat, y, x));
        }
    }
}

TEST_CASE("tilde reproduces the corollary construction") {
    for (int q : {3, 4, 5, 7, 8, 9}) {
        auto a = field_to_action(gf(q));
        for (int g = 1; g < a.group.order; ++g) {
            auto d = derived_elements(a, g);
            auto dbar = derived_elements(a, d.bar);
            CHECK(d.tilde == a.group.inv(dbar.bar));
            for (int x = 0; x < q; ++x)
                for (int y = 0; y < q; ++y) CHECK(a.at(g, a.at(d.tilde, y, x), x) == y);
        }
    }
}

TEST_CASE("bar is unique: exactly one group element satisfies the identity") {
    for (int q : {4, 5, 7}) {
        auto a = field_to_action(gf(q));
        for (int g = 1; g < a.group.order; ++g) {
            auto d = derived_elements(a, g);
            int hits = 0;
            for (int t = 0; t < a.group.order; ++t) {
                bool all = true;
                for (int x = 0; x < q && all; ++x)
                    for (int y = 0; y < q && all; ++y)
                        if (a.at(g, a.at(t, x, y), x) != y) all = false;
                if (all) {
                    ++hits;
                    CHECK(t == d.bar);
                }
            }
            CHECK(hits == 1);
        }
    }
}

TEST_CASE("derived_elements rejects non-qualifying actions") {
    CHECK_THROWS_AS(derived_elements(conjugate_left_translation(make_cyclic(3)), 1), PreconditionFailed);
    CHECK_THROWS_AS(derived_elements(identity_only_action(make_cyclic(2), 3), 1), PreconditionFailed);
}

TEST_CASE("verify_lemma_suite passes on ACT3 and field-derived actions") {
    for (const auto& a : {fixtures::act3(), field_to_action(gf(4)), field_to_action(gf(5, 1)),
                          field_to_action(gf(8)), field_to_action(gf(9))}) {
        auto suite = verify_lemma_suite(a);
        REQUIRE(suite.size() == 5);
        for (const auto& check : suite) {
            INFO(check.name);
            CHECK(check.ok());
            CHECK(check.tuples > 0);
        }
    }
    CHECK_THROWS_AS(verify_lemma_suite(conjugate_left_translation(make_cyclic(3))), PreconditionFailed);
}

TEST_CASE("interchange with y=z holds as a special case") {
    for (int q : {3, 4, 5, 7, 8, 9}) {
        auto a = field_to_action(gf(q));
        int n = a.group.order, m = a.space_size;
        for (int g = 1; g < n; ++g)
            for (int h = 1; h < n; ++h)
                for (int x = 0; x < m; ++x)
                    for (int y = 0; y < m; ++y)
                        for (int t = 0; t < m; ++t)
                            CHECK(a.at(g, a.at(h, x, y), a.at(h, y, t)) == a.at(h, a.at(g, x, y), a.at(g, y, t)));
    }
}

TEST_CASE("quasigroup_check") {
    auto a = fixtures::act3();
    CHECK(quasigroup_check(a, 1));
    CHECK_FALSE(quasigroup_check(a, 0));  // e(x,y)=y has constant columns

    auto f5 = field_to_action(gf(5, 1));
    for (int g = 1; g < 4; ++g) CHECK(quasigroup_check(f5, g));
    CHECK_FALSE(quasigroup_check(f5, 0));
}
