#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "cubepal/constructions.hpp"
#include "cubepal/search.hpp"
#include "cubepal/verify.hpp"

using namespace cubepal;

namespace {

// test-side enumeration of every (n, k) coloring; used as a local oracle for
// deterministic-witness checks, independent of the search implementation
template <typename Fn>
void for_each_coloring(int n, int k, Fn&& fn) {
    const std::uint64_t edges = make_hypercube(n).edge_count;
    std::vector<Color> colors(edges, 1);
    for (;;) {
        fn(colors);
        std::size_t pos = 0;
        while (pos < colors.size() && colors[pos] == k) colors[pos++] = 1;
        if (pos == colors.size()) return;
        ++colors[pos];
    }
}

bool coloring_ok(int n, Mode mode, const std::vector<Color>& colors) {
    const Coloring c = make_coloring(n, static_cast<int>(*std::max_element(
                                             colors.begin(), colors.end())),
                                     mode, colors);
    if (mode == Mode::Proper && !is_proper(c).ok) return false;
    return distinguishes(c).ok;
}

SearchOptions no_breaking() {
    SearchOptions opts;
    opts.symmetry_breaking = false;
    return opts;
}

} // namespace

TEST_CASE("feasibility of the headline instances") {
    CHECK(feasible(2, Mode::General, 2).status == Status::Feasible);
    CHECK(feasible(2, Mode::Proper, 3).status == Status::Infeasible);
    CHECK(feasible(3, Mode::Proper, 3).status == Status::Infeasible);
    CHECK(feasible(4, Mode::Proper, 4).status == Status::Infeasible);
    CHECK(feasible(4, Mode::Proper, 5).status == Status::Feasible);
}

TEST_CASE("feasible witnesses satisfy the verifier") {
    for (int n : {2, 3})
        for (int mode_idx : {0, 1})
            for (int k = 1; k <= 5; ++k) {
                const Mode mode = mode_idx ? Mode::Proper : Mode::General;
                const SearchOutcome outcome = feasible(n, mode, k);
                REQUIRE(outcome.status != Status::Unknown);
                if (outcome.status == Status::Feasible) {
                    REQUIRE(outcome.witness.has_value());
                    CHECK(distinguishes(*outcome.witness).ok);
                    if (mode == Mode::Proper) CHECK(is_proper(*outcome.witness).ok);
                    CHECK(outcome.witness->k == k);
                } else {
                    CHECK_FALSE(outcome.witness.has_value());
                }
            }
}

TEST_CASE("search argument guards") {
    CHECK_THROWS_AS(feasible(1, Mode::General, 2), RangeError);
    CHECK_THROWS_AS(feasible(25, Mode::General, 2), RangeError);
    CHECK_THROWS_AS(feasible(3, Mode::General, 0), RangeError);
    CHECK_THROWS_AS(feasible(3, Mode::General, 64), RangeError);
    CHECK_THROWS_AS(permutation_csp(1), RangeError);
    CHECK_THROWS_AS(permutation_csp(7), RangeError);
}

TEST_CASE("minimal color counts") {
    const MinColorsOutcome p2 = min_colors(2, Mode::Proper);
    CHECK(p2.status == Status::Feasible);
    CHECK(p2.k_min == 4);
    REQUIRE(p2.probes.size() == 3);
    CHECK(p2.probes[0] == std::pair<int, Status>{2, Status::Infeasible});
    CHECK(p2.probes[1] == std::pair<int, Status>{3, Status::Infeasible});
    CHECK(p2.probes[2] == std::pair<int, Status>{4, Status::Feasible});

    CHECK(min_colors(3, Mode::Proper).k_min == 4);
    CHECK(min_colors(4, Mode::Proper).k_min == 5);
    CHECK(min_colors(3, Mode::General).k_min == 2);
    // the index-order general search stays desk-scale through n=4
    CHECK(min_colors(4, Mode::General).k_min == 2);

    // too small a cap means a decisive "none in range"
    CHECK(min_colors(2, Mode::Proper, 3).status == Status::Infeasible);
}

TEST_CASE("permutation search settles the small cases") {
    const SearchOutcome n2 = permutation_csp(2);
    CHECK(n2.status == Status::Infeasible);
    CHECK(n2.nodes_explored == 1);

    const SearchOutcome n3 = permutation_csp(3);
    CHECK(n3.status == Status::Infeasible);
    CHECK(n3.nodes_explored == 4);

    const SearchOutcome n5 = permutation_csp(5);
    CHECK(n5.status == Status::Feasible);
    REQUIRE(n5.witness.has_value());
    CHECK(is_proper(*n5.witness).ok);
    CHECK(distinguishes(*n5.witness).ok);
    CHECK(palette_permutation_check(*n5.witness));
    // deterministic search, deterministic count
    CHECK(n5.nodes_explored == 2049476);
}

TEST_CASE("4-cube permutation search is infeasible, with and without class pruning") {
    const SearchOutcome with_pruning = permutation_csp(4);
    CHECK(with_pruning.status == Status::Infeasible);
    // regression pin for the default configuration (symmetry breaking +
    // class pruning); see the no-pruning count below for the raw tree
    CHECK(with_pruning.nodes_explored == 1006);

    SearchOptions no_pruning;
    no_pruning.parallel_class_pruning = false;
    const SearchOutcome without = permutation_csp(4, {}, no_pruning);
    CHECK(without.status == Status::Infeasible);
    CHECK(without.nodes_explored == 2984);
}

TEST_CASE("symmetry breaking never changes the status") {
    for (int k = 1; k <= 4; ++k) {
        CHECK(feasible(2, Mode::General, k).status ==
              feasible(2, Mode::General, k, {}, no_breaking()).status);
        CHECK(feasible(2, Mode::Proper, k).status ==
              feasible(2, Mode::Proper, k, {}, no_breaking()).status);
    }
    for (int k = 1; k <= 2; ++k)
        CHECK(feasible(3, Mode::General, k).status ==
              feasible(3, Mode::General, k, {}, no_breaking()).status);
    for (int k = 3; k <= 4; ++k)
        CHECK(feasible(3, Mode::Proper, k).status ==
              feasible(3, Mode::Proper, k, {}, no_breaking()).status);
}

TEST_CASE("feasibility is monotone in the color count") {
    const std::vector<std::tuple<int, Mode, int>> feasible_instances = {
        {2, Mode::General, 2}, {3, Mode::General, 2},
        {2, Mode::Proper, 4},  {3, Mode::Proper, 4},
        {4, Mode::Proper, 5},
    };
    for (const auto& [n, mode, k] : feasible_instances) {
        CHECK(feasible(n, mode, k).status == Status::Feasible);
        CHECK(feasible(n, mode, k + 1).status == Status::Feasible);
    }
}

TEST_CASE("budgets starve to Unknown, never to a fake verdict") {
    Budget tiny;
    tiny.max_nodes = 10;
    const SearchOutcome starved = feasible(3, Mode::General, 2, tiny);
    CHECK(starved.status == Status::Unknown);
    CHECK_FALSE(starved.witness.has_value());
    CHECK(starved.nodes_explored <= 11);

    const MinColorsOutcome min_starved = min_colors(2, Mode::Proper, 4, tiny);
    CHECK(min_starved.status == Status::Unknown);

    // a time budget starves the same way on an instance the index-order
    // search cannot finish quickly
    Budget brief;
    brief.max_millis = 50;
    const SearchOutcome timed = feasible(5, Mode::General, 2, brief);
    CHECK(timed.status == Status::Unknown);
    CHECK_FALSE(timed.witness.has_value());
}

TEST_CASE("brute force oracle on its stated domain") {
    CHECK(brute_force_oracle(2, Mode::General, 1).status == Status::Infeasible);
    CHECK(brute_force_oracle(2, Mode::Proper, 4).status == Status::Feasible);
    const SearchOutcome small = brute_force_oracle(2, Mode::General, 2);
    CHECK(small.status == Status::Feasible);
    CHECK(brute_force_oracle(2, Mode::General, 2).nodes_explored <= 16);
    CHECK_THROWS_AS(brute_force_oracle(4, Mode::General, 3), RangeError);
}

TEST_CASE("oracle equivalence on the full oracle domain") {
    for (int k = 1; k <= 4; ++k) {
        CHECK(feasible(2, Mode::General, k).status ==
              brute_force_oracle(2, Mode::General, k).status);
        CHECK(feasible(2, Mode::Proper, k).status ==
              brute_force_oracle(2, Mode::Proper, k).status);
    }
    CHECK(feasible(3, Mode::General, 2).status ==
          brute_force_oracle(3, Mode::General, 2).status);
}

TEST_CASE("deterministic witness is the lexicographically smallest solution") {
    SearchOptions canonical;
    canonical.deterministic_witness = true;

    // expected witnesses from plain enumeration, minimized by array order
    std::optional<std::vector<Color>> expected_proper;
    for_each_coloring(2, 4, [&](const std::vector<Color>& colors) {
        if (!coloring_ok(2, Mode::Proper, colors)) return;
        if (!expected_proper || colors < *expected_proper) expected_proper = colors;
    });
    const SearchOutcome proper = feasible(2, Mode::Proper, 4, {}, canonical);
    REQUIRE(proper.status == Status::Feasible);
    CHECK(proper.witness->colors == *expected_proper);

    std::optional<std::vector<Color>> expected_general;
    for_each_coloring(3, 2, [&](const std::vector<Color>& colors) {
        if (!coloring_ok(3, Mode::General, colors)) return;
        if (!expected_general || colors < *expected_general) expected_general = colors;
    });
    const SearchOutcome general = feasible(3, Mode::General, 2, {}, canonical);
    REQUIRE(general.status == Status::Feasible);
    CHECK(general.witness->colors == *expected_general);

    // repeated runs are byte-identical either way
    CHECK(feasible(3, Mode::General, 2).witness->colors ==
          feasible(3, Mode::General, 2).witness->colors);
}
