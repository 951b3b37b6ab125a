#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "dpcolor/chromatic.hpp"
#include "dpcolor/cover.hpp"
#include "oracles.hpp"

using namespace dpcolor;

namespace {

std::mt19937_64 rng(20240901);

int rnd(int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); }

Perm random_perm(int m) {
    Perm p = identity_perm(m);
    for (int i = m - 1; i > 0; --i) std::swap(p[i], p[rnd(0, i)]);
    return p;
}

Graph random_connected(int n) {
    const int bits = n * (n - 1) / 2;
    for (;;) {
        std::uint32_t mask = static_cast<std::uint32_t>(rng()) & ((1u << bits) - 1);
        std::vector<std::pair<int, int>> e;
        int b = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++b)
                if (mask >> b & 1) e.emplace_back(u, v);
        Graph g = Graph::from_edges(n, std::move(e));
        if (is_connected(g)) return g;
    }
}

FullCover random_cover(const Graph& g, int m) {
    FullCover h = identity_cover(g, m);
    for (auto& p : h.sigma) p = random_perm(m);
    return h;
}

} // namespace

TEST_CASE("identity cover counts equal proper colorings") {
    CHECK(count_colorings(identity_cover(make_family(Family::wheel, {4}), 3)) == 6);
    CHECK(count_colorings(identity_cover(make_family(Family::cycle, {4}), 3)) == 18);
    CHECK(count_colorings(identity_cover(make_family(Family::complete, {1}), 5)) == 5);
    CHECK(count_colorings(identity_cover(make_family(Family::cycle, {3}), 3)) == 6);
}

TEST_CASE("twisted cycles: frozen counts from direct enumeration") {
    // C_3, one transposed edge.
    Graph c3 = make_family(Family::cycle, {3});
    FullCover h = identity_cover(c3, 3);
    h.sigma[0] = {1, 0, 2};
    CHECK(count_colorings_reference(h) == 8);
    CHECK(count_colorings(h) == 8);

    // C_4, one fixed-point-free 3-cycle twist.
    Graph c4 = make_family(Family::cycle, {4});
    FullCover h4 = identity_cover(c4, 3);
    h4.sigma[0] = {1, 2, 0};
    CHECK(count_colorings(h4) == 15);
    CHECK(count_colorings_reference(h4) == 15);
}

TEST_CASE("counting kernel agrees with the reference on random covers") {
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = random_connected(rnd(2, 5));
        int m = rnd(1, 3);
        FullCover h = random_cover(g, m);
        CHECK(count_colorings(h) == count_colorings_reference(h));
    }
}

TEST_CASE("cover validation") {
    Graph c3 = make_family(Family::cycle, {3});
    FullCover h = identity_cover(c3, 3);
    h.sigma[1] = {0, 0, 2};
    CHECK_THROWS_AS(count_colorings(h), ParameterError);
    h.sigma.pop_back();
    CHECK_THROWS_AS(validate_cover(h), ParameterError);
    CHECK_THROWS_AS(identity_cover(c3, 0), ParameterError);
}

TEST_CASE("pinned counts") {
    Graph p2 = make_family(Family::path, {2});
    CHECK(count_colorings_pinned(identity_cover(p2, 3), {{0, 0}}) == 2);

    // G = C_3, e = (0,1): the remainder is the path 0-2-1.
    Graph rest = Graph::from_edges(3, {{0, 2}, {1, 2}});
    FullCover h = identity_cover(rest, 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(count_colorings_pinned(h, {{0, i}, {1, i}}) == 2);
        for (int j = 0; j < 3; ++j)
            if (j != i) CHECK(count_colorings_pinned(h, {{0, i}, {1, j}}) == 1);
    }

    // Pinned counts over all index pairs sum to the unpinned count.
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_connected(rnd(2, 4));
        int m = rnd(2, 3);
        FullCover cover = random_cover(g, m);
        long long total = 0;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) total += count_colorings_pinned(cover, {{0, i}, {g.n - 1, j}});
        CHECK(total == count_colorings(cover));
    }

    CHECK_THROWS_AS(count_colorings_pinned(identity_cover(p2, 3), {{0, 7}}), ParameterError);
}

TEST_CASE("gauge transforms preserve counts and invert cleanly") {
    Graph c3 = make_family(Family::cycle, {3});
    FullCover h = identity_cover(c3, 3);
    h.sigma[0] = {1, 0, 2};

    CHECK(apply_gauge(h, identity_relabeling(3, 3)).sigma == h.sigma);

    // Move the twist to a different edge with a vertex relabeling.
    GaugeRelabeling pi = identity_relabeling(3, 3);
    pi.pi[0] = {1, 0, 2};
    FullCover moved = apply_gauge(h, pi);
    CHECK(is_identity(moved.sigma[0]));
    CHECK(count_colorings(moved) == 8);
    CHECK(count_colorings_reference(moved) == 8);

    FullCover back = apply_gauge(moved, inverse_relabeling(pi));
    CHECK(back.sigma == h.sigma);

    for (int trial = 0; trial < 200; ++trial) {
        Graph g = random_connected(rnd(2, 6));
        int m = rnd(1, 4);
        FullCover cover = random_cover(g, m);
        GaugeRelabeling rl;
        for (int v = 0; v < g.n; ++v) rl.pi.push_back(random_perm(m));
        CHECK(count_colorings(apply_gauge(cover, rl)) == count_colorings(cover));
    }
}

TEST_CASE("gauge normalization fixes the forest and preserves counts") {
    Graph c4 = make_family(Family::cycle, {4});
    FullCover h = identity_cover(c4, 3);
    for (auto& p : h.sigma) p = random_perm(3);
    long long before = count_colorings_reference(h);

    auto tree = spanning_tree(c4);
    auto [norm, pi] = gauge_normalize(h, tree);
    for (auto [u, v] : tree) CHECK(is_identity(norm.sigma[c4.edge_index(u, v)]));
    CHECK(count_colorings_reference(norm) == before);
    CHECK(apply_gauge(h, pi).sigma == norm.sigma);

    // Identity cover is untouched.
    FullCover id = identity_cover(c4, 3);
    CHECK(gauge_normalize(id, tree).first.sigma == id.sigma);

    CHECK_THROWS_AS(gauge_normalize(h, std::vector<std::pair<int, int>>{{0, 2}}), ParameterError);
    CHECK_THROWS_AS(
        gauge_normalize(h, std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}, {0, 3}}),
        ParameterError);
}

TEST_CASE("canonical labeling detection") {
    Graph c3 = make_family(Family::cycle, {3});
    CHECK(find_canonical_labeling(identity_cover(c3, 3)).has_value());

    FullCover twisted = identity_cover(c3, 3);
    twisted.sigma[0] = {1, 0, 2};
    CHECK_FALSE(find_canonical_labeling(twisted).has_value());

    // Any cover of a tree has one, and the labeling actually trivializes it.
    for (int trial = 0; trial < 50; ++trial) {
        int n = rnd(2, 6);
        auto trees = enumerate_graphs(n, GraphClass::tree);
        Graph t = trees[rnd(0, static_cast<int>(trees.size()) - 1)];
        int m = rnd(1, 4);
        FullCover h = random_cover(t, m);
        auto pi = find_canonical_labeling(h);
        REQUIRE(pi.has_value());
        FullCover fixed = apply_gauge(h, *pi);
        for (const Perm& p : fixed.sigma) CHECK(is_identity(p));
    }

    // Canonical implies the count matches the chromatic value.
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_connected(rnd(2, 5));
        int m = rnd(1, 3);
        FullCover h = random_cover(g, m);
        auto pi = find_canonical_labeling(h);
        if (pi)
            CHECK(mpz_class(static_cast<long>(count_colorings(h))) ==
                  chromatic_polynomial(g).evaluate(m));
    }

    // Holonomy detection agrees with exhaustive relabeling search.
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_connected(rnd(2, 4));
        int m = rnd(1, 3);
        FullCover h = random_cover(g, m);
        CHECK(find_canonical_labeling(h).has_value() ==
              oracles::has_canonical_labeling_brute_force(h));
    }
}

TEST_CASE("two-path classification") {
    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});

    FullCover id5 = identity_cover(p3, 5);
    CHECK(classify_two_path(id5, 0, 1, 2) == std::array<int, 5>{5, 0, 0, 0, 0});

    FullCover h = identity_cover(p3, 3);
    h.sigma[1] = {1, 0, 2}; // second edge transposed
    CHECK(classify_two_path(h, 0, 1, 2) == std::array<int, 5>{1, 2, 0, 0, 0});

    FullCover hh = identity_cover(p3, 3);
    hh.sigma[0] = {1, 0, 2};
    hh.sigma[1] = {1, 0, 2};
    CHECK(classify_two_path(hh, 0, 1, 2) == std::array<int, 5>{1, 0, 0, 2, 0});
}

TEST_CASE("two-path classification: reversing the path swaps cases 2 and 3") {
    Graph p3 = Graph::from_edges(3, {{0, 1}, {1, 2}});
    for (int trial = 0; trial < 100; ++trial) {
        int m = rnd(2, 5);
        FullCover h = identity_cover(p3, m);
        h.sigma[0] = random_perm(m);
        h.sigma[1] = random_perm(m);
        auto fwd = classify_two_path(h, 0, 1, 2);
        auto rev = classify_two_path(h, 2, 1, 0);
        CHECK(fwd[0] == rev[0]);
        CHECK(fwd[1] == rev[2]);
        CHECK(fwd[2] == rev[1]);
        CHECK(fwd[3] == rev[3]);
        CHECK(fwd[4] == rev[4]);
        CHECK(fwd[0] + fwd[1] + fwd[2] + fwd[3] + fwd[4] == m);
    }
}

TEST_CASE("two-path classification preconditions") {
    Graph c3 = make_family(Family::cycle, {3});
    CHECK_THROWS_AS(classify_two_path(identity_cover(c3, 3), 0, 1, 2), ParameterError); // a1a3 edge

    Graph p4 = make_family(Family::path, {4});
    CHECK_THROWS_AS(classify_two_path(identity_cover(p4, 3), 0, 1, 3), ParameterError); // not a path

    FullCover h = identity_cover(p4, 3);
    h.sigma[2] = {1, 0, 2}; // off-path twist
    CHECK_THROWS_AS(classify_two_path(h, 0, 1, 2), NormalizationError);
}

TEST_CASE("cover text format round-trips") {
    Graph c4 = make_family(Family::cycle, {4});
    FullCover h = identity_cover(c4, 3);
    h.sigma[2] = {2, 0, 1};
    std::ostringstream out;
    write_cover(out, h);
    std::istringstream in(out.str());
    FullCover parsed = read_cover(c4, in);
    CHECK(parsed.m == 3);
    CHECK(parsed.sigma == h.sigma);
}

TEST_CASE("cover text format errors") {
    Graph c3 = make_family(Family::cycle, {3});
    std::istringstream missing("3\n0 1 0 1 2\n0 2 0 1 2\n");
    CHECK_THROWS_AS(read_cover(c3, missing), ParseError);
    std::istringstream dup("3\n0 1 0 1 2\n0 1 0 1 2\n1 2 0 1 2\n");
    CHECK_THROWS_AS(read_cover(c3, dup), ParseError);
    std::istringstream notperm("3\n0 1 0 0 2\n0 2 0 1 2\n1 2 0 1 2\n");
    CHECK_THROWS_AS(read_cover(c3, notperm), ParseError);
    std::istringstream notedge("3\n0 1 0 1 2\n0 2 0 1 2\n2 0 0 1 2\n");
    CHECK_THROWS_AS(read_cover(c3, notedge), ParseError);
    std::istringstream badm("0\n");
    CHECK_THROWS_AS(read_cover(c3, badm), ParseError);
}

TEST_CASE("wheel cover with shifted rim twists counts 6 and has no canonical labeling") {
    // Rim 0-1-2-3, hub 4. Shifts on rim edges (1,2) and (2,3), identity
    // elsewhere; the six valid colorings are known by hand.
    Graph w4 = make_family(Family::wheel, {4});
    FullCover h = identity_cover(w4, 3);
    h.sigma[w4.edge_index(1, 2)] = {1, 2, 0};
    h.sigma[w4.edge_index(2, 3)] = {1, 2, 0};

    CHECK(count_colorings(h) == 6);
    CHECK_FALSE(find_canonical_labeling(h).has_value());

    std::set<ColoringAssignment> got;
    for (const auto& a : enumerate_colorings(h)) got.insert(a);
    std::set<ColoringAssignment> want = {{0, 1, 1, 1, 2}, {1, 0, 0, 0, 2}, {2, 0, 0, 0, 1},
                                         {0, 2, 2, 2, 1}, {1, 2, 2, 2, 0}, {2, 1, 1, 1, 0}};
    CHECK(got == want);
}

TEST_CASE("validity predicate matches the edge constraints") {
    Graph c3 = make_family(Family::cycle, {3});
    FullCover h = identity_cover(c3, 2);
    CHECK_FALSE(is_valid_coloring(h, {0, 0, 0}));
    CHECK_FALSE(is_valid_coloring(h, {0, 1, 0}));
    CHECK_FALSE(is_valid_coloring(h, {0, 1}));
    CHECK(enumerate_colorings(h).empty());
}
