#include <doctest.h>

#include <algorithm>
#include <array>

#include "bgs/duality.hpp"
#include "bgs/search.hpp"
#include "fixtures.hpp"

using namespace bgs;

TEST_CASE("Z/2 on 3 points: exactly ACT3") {
    auto r = search_semitransitive(make_cyclic(2), 3);
    REQUIRE(r.count_raw == 1);
    CHECK(r.found.size() == 1);
    CHECK(r.found[0] == fixtures::act3());
    CHECK(r.count_up_to_biequimorphism == 1);
    CHECK(r.count_up_to_twisted_biequimorphism == 1);
    CHECK(r.pruned_reason.empty());

    SearchOptions noprune;
    noprune.prune_size = noprune.prune_abelian = false;
    auto r2 = search_semitransitive(make_cyclic(2), 3, noprune);
    CHECK(r2.found == r.found);
}

TEST_CASE("trivial group on 1 point") {
    auto r = search_semitransitive(make_cyclic(1), 1);
    CHECK(r.count_raw == 1);
    CHECK(r.found[0].space_size == 1);
}

TEST_CASE("prime-power obstruction: Z/5 on 6 points is empty, even unpruned") {
    SearchOptions noprune;
    noprune.prune_size = noprune.prune_abelian = false;
    auto r = search_semitransitive(make_cyclic(5), 6, noprune);
    CHECK(r.count_raw == 0);
    CHECK(r.found.empty());
    CHECK(r.pruned_reason.empty());
    CHECK(r.nodes_explored > 0);
}

TEST_CASE("size short-circuit") {
    auto r = search_semitransitive(make_cyclic(2), 4);
    CHECK(r.count_raw == 0);
    CHECK_FALSE(r.pruned_reason.empty());

    SearchOptions noprune;
    noprune.prune_size = noprune.prune_abelian = false;
    auto r2 = search_semitransitive(make_cyclic(2), 4, noprune);
    CHECK(r2.count_raw == 0);
    CHECK(r2.pruned_reason.empty());
}

TEST_CASE("abelianness obstruction: S3 on 7 points") {
    auto pruned = search_semitransitive(make_symmetric(3), 7);
    CHECK(pruned.count_raw == 0);
    CHECK(pruned.pruned_reason.find("abelian") != std::string::npos);

    SearchOptions noprune;
    noprune.prune_size = noprune.prune_abelian = false;
    auto full = search_semitransitive(make_symmetric(3), 7, noprune);
    CHECK(full.count_raw == 0);
    CHECK(full.found == pruned.found);
}

TEST_CASE("found actions carry all the structural facts") {
    for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {4, 5}, {6, 7}}) {
        auto r = search_semitransitive(make_cyclic(n), m);
        REQUIRE(r.count_raw >= 1);
        CHECK(std::is_sorted(r.found.begin(), r.found.end(),
                             [](const auto& a, const auto& b) { return flatten(a) < flatten(b); }));
        for (const auto& a : r.found) {
            CHECK(verify_action(a.group, a.space_size, a.table).ok());
            CHECK(is_effective(a));
            CHECK(is_distributive(a));
            CHECK(is_semitransitive(a));
            CHECK(a.group.order == a.space_size - 1);
            for (int x = 0; x < m; ++x)
                for (int y = 0; y < m; ++y)
                    if (x != y) CHECK(stationary_subgroup(a, x, y).subgroup.size() == 1);
        }
    }
}

TEST_CASE("induced fields match the expected GF(q)") {
    auto check_induced = [](int n, int m, int q) {
        auto r = search_semitransitive(make_cyclic(n), m);
        REQUIRE(r.count_raw >= 1);
        for (const auto& a : r.found) {
            auto bf = action_to_field(a, FieldParams{0, 1, 1});
            CHECK(fields_isomorphic(bf.field, gf(q)).has_value());
        }
        return r;
    };
    check_induced(2, 3, 3);
    auto r3 = check_induced(3, 4, 4);
    CHECK(r3.count_raw == 2);  // the two slice labelings swapped by Frobenius
    CHECK(r3.count_up_to_twisted_biequimorphism == 1);
    check_induced(4, 5, 5);
}

TEST_CASE("duality closure: field_to_action of each induced field is in the found set") {
    for (auto [n, m, q] : std::vector<std::array<int, 3>>{{2, 3, 3}, {3, 4, 4}, {4, 5, 5}}) {
        auto r = search_semitransitive(make_cyclic(n), m);
        for (const auto& a : r.found) {
            auto bf = action_to_field(a, FieldParams{0, 1, 1});
            auto back = field_to_action(bf.field);
            bool member = false;
            for (const auto& b : r.found)
                if (are_twisted_biequimorphic(back, b).has_value()) member = true;
            CHECK(member);
        }
    }
}

TEST_CASE("determinism: repeated runs are identical") {
    auto r1 = search_semitransitive(make_cyclic(3), 4);
    auto r2 = search_semitransitive(make_cyclic(3), 4);
    CHECK(r1.found == r2.found);
    CHECK(r1.nodes_explored == r2.nodes_explored);
}

TEST_CASE("bounds") {
    CHECK_THROWS_AS(search_semitransitive(make_cyclic(2), 9), BoundsError);
    CHECK_THROWS_AS(search_semitransitive(make_symmetric(4), 5), BoundsError);
}

TEST_CASE("classify_transitive") {
    auto t1 = classify_transitive(make_cyclic(1));
    CHECK(t1.count == 1);
    CHECK(t1.all_biequimorphic_to_translation);

    auto t2 = classify_transitive(make_cyclic(2));
    CHECK(t2.count >= 1);
    CHECK(t2.all_biequimorphic_to_translation);
    for (const auto& a : t2.found) {
        CHECK(is_transitive(a));
        CHECK(is_distributive(a));
        CHECK(is_effective(a));
        CHECK(are_biequimorphic(a, conjugate_left_translation(make_cyclic(2))).has_value());
    }

    auto t3 = classify_transitive(make_cyclic(3));
    CHECK(t3.count >= 1);
    CHECK(t3.all_biequimorphic_to_translation);
    CHECK(t3.candidates_scanned > 0);

    CHECK_THROWS_AS(classify_transitive(make_symmetric(3)), BoundsError);
}

TEST_CASE("realizable_as_mult_group") {
    for (int n : {1, 2, 3, 4, 6}) {
        auto r = realizable_as_mult_group(make_cyclic(n));
        CHECK(r.realizable);
        REQUIRE(r.witness.has_value());
        REQUIRE(r.induced_field.has_value());
        CHECK(verify_field(r.induced_field->add, r.induced_field->mul, n + 1).ok());
        CHECK(is_semitransitive(*r.witness));
    }
    CHECK_FALSE(realizable_as_mult_group(make_cyclic(5)).realizable);
    CHECK_FALSE(realizable_as_mult_group(fixtures::klein()).realizable);
}
