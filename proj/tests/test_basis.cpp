#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "focklab/basis.hpp"
#include "support.hpp"

using namespace focklab;
using namespace focklab::testing;

namespace {

std::vector<int> twice(const std::vector<HalfInt>& xs) {
    std::vector<int> out;
    for (auto x : xs) out.push_back(x.twice());
    return out;
}

MayaSpec maya(int window_lo_twice, std::vector<int> blacks_twice) {
    MayaSpec m{hi(window_lo_twice), {}};
    for (int b : blacks_twice) m.blacks.push_back(hi(b));
    return m;
}

}  // namespace

TEST_CASE("half-integers") {
    CHECK(HalfInt::parse("7/2").twice() == 7);
    CHECK(HalfInt::parse(" -1/2 ").twice() == -1);
    CHECK_THROWS_AS(HalfInt::parse("4/2"), std::invalid_argument);
    CHECK_THROWS_AS(HalfInt::parse("3"), std::invalid_argument);
    CHECK_THROWS_AS(HalfInt::from_twice(2), std::invalid_argument);
    CHECK(hi(-13).str() == "-13/2");
}

TEST_CASE("partitions validate and print") {
    CHECK(Partition({3, 1, 0, 0}).parts() == std::vector<int>{3, 1});
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK(Partition({4, 3, 3, 1, 1}).conjugate() == Partition({5, 3, 3, 1}));
    CHECK(ChargedPartition::parse("(4, 3,3,1,1);-1") == cp({4, 3, 3, 1, 1}, -1));
    CHECK(ChargedPartition::parse("();0") == cp({}, 0));
    CHECK(cp({1}, 2).str() == "(1);2");
    CHECK_THROWS_AS(ChargedPartition::parse("(1,2);0"), std::invalid_argument);
    CHECK_THROWS_AS(ChargedPartition::parse("1;0"), std::invalid_argument);
    CHECK_THROWS_AS(ChargedPartition::parse("(1);x"), std::invalid_argument);
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_up_to(10).size() == 1 + 1 + 2 + 3 + 5 + 7 + 11 + 15 + 22 + 30 + 42);
}

TEST_CASE("black_positions") {
    CHECK(twice(black_positions(cp({4, 3, 3, 1, 1}, -1), 6)) == std::vector<int>{5, 1, -1, -7, -9, -13});
    CHECK(twice(black_positions(cp({}, 0), 3)) == std::vector<int>{-1, -3, -5});
    CHECK(twice(black_positions(cp({1}, 2), 4)) == std::vector<int>{5, 1, -1, -3});
}

TEST_CASE("maya_to_partition") {
    CHECK(maya_to_partition(maya(-11, {5, 1, -1, -7, -9})) == cp({4, 3, 3, 1, 1}, -1));
    CHECK(maya_to_partition(maya(1, {})) == cp({}, 0));
    CHECK(maya_to_partition(maya(-1, {-1})) == cp({}, 0));
    // The window start is inclusive: -1/2 unlisted is white.
    CHECK(maya_to_partition(maya(1, {5, 1})) == cp({1}, 2));
    CHECK(maya_to_partition(maya(-1, {5, 1})) == cp({2, 1}, 1));
    CHECK_THROWS_AS(maya_to_partition(maya(-3, {5, -5})), std::invalid_argument);
    CHECK(twice(partition_to_maya(cp({4, 3, 3, 1, 1}, -1)).blacks) == std::vector<int>{5, 1, -1, -7, -9});
    CHECK(partition_to_maya(cp({4, 3, 3, 1, 1}, -1)).window_lo.twice() == -11);
}

TEST_CASE("normalize_wedge") {
    auto w = normalize_wedge({hi(1), hi(5)});
    REQUIRE(w);
    CHECK(w->sign == -1);
    CHECK(twice(w->indices) == std::vector<int>{5, 1});
    w = normalize_wedge({hi(5), hi(1)});
    REQUIRE(w);
    CHECK(w->sign == 1);
    w = normalize_wedge({hi(-1), hi(5), hi(1)});
    REQUIRE(w);
    CHECK(w->sign == 1);
    CHECK(twice(w->indices) == std::vector<int>{5, 1, -1});
    CHECK_FALSE(normalize_wedge({hi(3), hi(1), hi(3)}).has_value());
}

TEST_CASE("box colors match every label of the level-3 example diagram") {
    struct Label { int r, c, color; };
    // (4,3,3,1,1) at charge -1, level 3.
    const Label labels[] = {{1, 4, 2}, {1, 3, 1}, {1, 2, 0}, {2, 3, 0}, {3, 3, 2}, {2, 2, 2},
                            {1, 1, 2}, {2, 1, 1}, {3, 2, 1}, {3, 1, 0}, {4, 1, 2}, {5, 1, 1}};
    for (const auto& l : labels) CHECK(box_color(-1, {l.r, l.c}, 3).residue == l.color);
    for (int level = 2; level < 6; ++level)
        for (int r = 1; r < 5; ++r) CHECK(box_color(0, {r, r}, level).residue == 0);
    CHECK(count_colored_boxes(cp({4, 3, 3, 1, 1}, -1), Color{0}, 3) == 3);
}

TEST_CASE("addable and removable boxes") {
    using V = std::vector<BoxCoord>;
    CHECK(addable_boxes(cp({}, 0), Color{0}, 2) == V{{1, 1}});
    CHECK(addable_boxes(cp({1}, 0), Color{1}, 2) == V{{1, 2}, {2, 1}});
    CHECK(addable_boxes(cp({2}, 0), Color{0}, 2) == V{{1, 3}});
    CHECK(removable_boxes(cp({}, 0), Color{0}, 2).empty());
    CHECK(removable_boxes(cp({}, 0), Color{1}, 2).empty());
    CHECK(removable_boxes(cp({1}, 0), Color{0}, 2) == V{{1, 1}});
    CHECK(removable_boxes(cp({2}, 0), Color{1}, 2) == V{{1, 2}});
    CHECK(add_box(Partition({2}), {2, 1}) == Partition({2, 1}));
    CHECK_THROWS(add_box(Partition({2}), {2, 2}));
    CHECK_THROWS(remove_box(Partition({2, 2}), {1, 2}));
}

TEST_CASE("ribbon removals") {
    auto as_set = [](const std::vector<RibbonRemoval>& rs) {
        std::set<Partition> s;
        for (const auto& r : rs) s.insert(r.remainder);
        return s;
    };
    CHECK(as_set(ribbon_removals(Partition({4, 3, 3, 1, 1}), 2)) ==
          std::set<Partition>{Partition({4, 2, 2, 1, 1}), Partition({4, 3, 1, 1, 1}), Partition({4, 3, 3})});
    const auto one = ribbon_removals(Partition({1}), 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].remainder.empty());
    CHECK(one[0].rows_spanned == 1);
    const auto hook = ribbon_removals(Partition({2, 1}), 3);
    REQUIRE(hook.size() == 1);
    CHECK(hook[0].remainder.empty());
    CHECK(hook[0].rows_spanned == 2);
    CHECK(ribbon_removals(Partition({2, 2}), 3).size() == 1);
    CHECK(ribbon_removals(Partition({2, 2}), 4).empty());
}

TEST_CASE("ribbon removals agree with brute-force skew-shape search") {
    // A rim hook is a connected skew shape without a 2x2 square.
    auto is_ribbon = [](const Partition& lam, const Partition& mu) {
        std::vector<std::pair<int, int>> cells;
        for (std::size_t r = 1; r <= lam.length(); ++r)
            for (int c = mu.row(r) + 1; c <= lam.row(r); ++c) cells.emplace_back(static_cast<int>(r), c);
        auto in = [&](int r, int c) { return std::find(cells.begin(), cells.end(), std::pair{r, c}) != cells.end(); };
        for (auto [r, c] : cells)
            if (in(r + 1, c) && in(r, c + 1) && in(r + 1, c + 1)) return false;
        std::vector<std::pair<int, int>> stack{cells.front()}, seen{cells.front()};
        while (!stack.empty()) {
            auto [r, c] = stack.back();
            stack.pop_back();
            for (auto [dr, dc] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
                std::pair nb{r + dr, c + dc};
                if (in(nb.first, nb.second) && std::find(seen.begin(), seen.end(), nb) == seen.end()) {
                    seen.push_back(nb);
                    stack.push_back(nb);
                }
            }
        }
        return seen.size() == cells.size();
    };
    for (const auto& lam : partitions_up_to(9)) {
        for (int k = 1; k <= lam.size(); ++k) {
            std::set<Partition> expected;
            for (const auto& mu : partitions_of(lam.size() - k))
                if (lam.contains(mu) && is_ribbon(lam, mu)) expected.insert(mu);
            std::set<Partition> got;
            for (const auto& r : ribbon_removals(lam, k)) {
                got.insert(r.remainder);
                int rows = 0;
                for (std::size_t i = 1; i <= lam.length(); ++i)
                    if (lam.row(i) != r.remainder.row(i)) ++rows;
                CHECK(rows == r.rows_spanned);
            }
            CHECK(got == expected);
        }
    }
}

TEST_CASE("bijection invariants on random charged partitions") {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 10000; ++iter) {
        const auto state = random_state(rng, 30, 10);
        const auto n = state.lambda.length() + 4;
        const auto beads = black_positions(state, n);
        // Regular: strictly decreasing and eventually consecutive.
        for (std::size_t i = 1; i < beads.size(); ++i) REQUIRE(beads[i] < beads[i - 1]);
        REQUIRE(beads[n - 1].twice() == beads[n - 2].twice() - 2);
        // Charge: positive blacks minus negative whites.
        int charge = 0;
        for (auto b : beads)
            if (b.twice() > 0) ++charge;
        for (int p = beads.back().twice(); p < 0; p += 2)
            if (std::find(beads.begin(), beads.end(), hi(p)) == beads.end()) --charge;
        for (int p = 1; p < beads.back().twice(); p += 2) ++charge;  // unlisted blacks below the window
        REQUIRE(charge == state.charge);
        const MayaSpec m{beads.back(), beads};
        REQUIRE(maya_to_partition(m) == state);
        REQUIRE(maya_to_partition(partition_to_maya(state)) == state);
        REQUIRE(Maya(state).to_charged() == state);
    }
}

TEST_CASE("removing a box of content d moves the bead at d+h+1/2 down one step") {
    for (const auto& state : charged_states(7, 2)) {
        for (BoxCoord b : removable_boxes(state.lambda)) {
            Maya m(state);
            const int from = 2 * (b.content() + state.charge) + 1;
            REQUIRE(m.black(from));
            REQUIRE_FALSE(m.black(from - 2));
            m.set(from, false);
            m.set(from - 2, true);
            CHECK(m.to_charged() == ChargedPartition{remove_box(state.lambda, b), state.charge});
        }
    }
}
