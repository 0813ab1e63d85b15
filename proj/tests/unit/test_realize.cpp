#include <doctest.h>

#include <random>

#include "degseq/criteria.hpp"
#include "degseq/oracle.hpp"
#include "degseq/realize.hpp"
#include "util.hpp"

using namespace degseq;
using testutil::thrown_code;

namespace {

DegreeSequence ds(std::vector<i64> v) { return DegreeSequence::from_values(std::move(v)); }

std::vector<i64> sums_to_vector(const std::vector<i64>& sums) { return sums; }

}  // namespace

TEST_CASE("greedy matrix construction on the fixtures") {
    const auto full = realize_pair(ds({2, 2}), ds({2, 2}));
    CHECK(full.to_text() == "11\n11\n");

    // Hand-run of the greedy rule: rows (1,1), (1,0), (0,1).
    const auto uneven = realize_pair(ds({2, 1, 1}), ds({2, 2}));
    CHECK(uneven.to_text() == "11\n10\n01\n");

    CHECK(thrown_code([] { realize_pair(ds({3, 3, 1}), ds({3, 3, 1})); }) == Errc::not_realizable);
}

TEST_CASE("greedy matrices reproduce the requested margins") {
    testutil::for_each_corpus_sequence(8, 8, [](const DegreeSequence& d) {
        if (!gale_ryser_pair(d, d).accepted) return;
        const auto m = realize_pair(d, d);
        CHECK(sums_to_vector(m.row_sums()) == d.values());
        CHECK(sums_to_vector(m.col_sums()) == d.values());
    });
}

TEST_CASE("havel-hakimi produces the classic small graphs") {
    const auto triangle = realize_graphic(ds({2, 2, 2}));
    CHECK(triangle.edges == std::vector<std::pair<i64, i64>>{{0, 1}, {0, 2}, {1, 2}});

    const auto star = realize_graphic(ds({3, 1, 1, 1}));
    CHECK(star.edges == std::vector<std::pair<i64, i64>>{{0, 1}, {0, 2}, {0, 3}});

    CHECK(thrown_code([] { realize_graphic(ds({3, 1})); }) == Errc::not_realizable);
    CHECK(thrown_code([] { realize_graphic(ds({1, 1, 1})); }) == Errc::not_realizable);
}

TEST_CASE("labeled targets are met position by position") {
    const std::vector<i64> targets{2, 1, 2, 1};
    const auto g = realize_graphic_labeled(targets);
    CHECK(g.degrees() == targets);

    const std::vector<i64> with_isolated{2, 0, 1, 1};
    CHECK(realize_graphic_labeled(with_isolated).degrees() == with_isolated);

    CHECK(thrown_code([] {
              const std::vector<i64> bad{3, 1};
              realize_graphic_labeled(bad);
          }) == Errc::not_realizable);
}

TEST_CASE("loops pipeline on the worked fixture") {
    const auto d = ds({3, 2, 2, 1});
    REQUIRE(loops_applicable(d));
    const auto r = realize_via_loops(d);

    // One vertex carries the maximum, but the parity fix reduces one more.
    CHECK(r.s_used == 2);
    CHECK(r.loop_graph.loops == std::vector<i64>{0, 1});
    CHECK(r.loop_graph.reduced_degrees() == d.values());
    CHECK(r.matrix.symmetric());
    CHECK(sums_to_vector(r.matrix.row_sums()) == d.values());
    CHECK(sums_to_vector(r.matrix.col_sums()) == d.values());
    CHECK(r.matrix.at(0, 0));
    CHECK(r.matrix.at(1, 1));
    CHECK_FALSE(r.matrix.at(2, 2));
    CHECK_FALSE(r.matrix.at(3, 3));
}

TEST_CASE("loops pipeline preconditions") {
    CHECK(thrown_code([] { realize_via_loops(ds({2, 2})); }) == Errc::precondition_failed);
    CHECK(thrown_code([] { realize_via_loops(ds({4, 4, 4, 2})); }) == Errc::precondition_failed);
    CHECK_FALSE(loops_applicable(ds({2, 2})));
    CHECK_FALSE(loops_applicable(ds({4, 4, 4, 2})));
}

TEST_CASE("loops pipeline is sound for every applicable sequence up to n = 7") {
    testutil::for_each_corpus_sequence(7, 7, [](const DegreeSequence& d) {
        if (!loops_applicable(d)) return;
        const auto r = realize_via_loops(d);
        CHECK(r.matrix.symmetric());
        CHECK(sums_to_vector(r.matrix.row_sums()) == d.values());
        CHECK(sums_to_vector(r.matrix.col_sums()) == d.values());
        CHECK(r.loop_graph.reduced_degrees() == d.values());
        CHECK((r.s_used >= 1 && r.s_used <= d.n()));
    });
}

TEST_CASE("loop graph conversion fixtures") {
    LoopGraph single;
    single.n = 1;
    single.loops = {0};
    CHECK(loops_to_biadjacency(single).to_text() == "1\n");

    LoopGraph edge;
    edge.n = 2;
    edge.edges = {{0, 1}};
    CHECK(loops_to_biadjacency(edge).to_text() == "01\n10\n");
}

TEST_CASE("loop graph round-trips through its matrix") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        LoopGraph g;
        g.n = 1 + static_cast<i64>(rng() % 7);
        for (i64 u = 0; u < g.n; ++u) {
            if (rng() % 3 == 0) g.loops.push_back(u);
            for (i64 v = u + 1; v < g.n; ++v)
                if (rng() % 2 == 0) g.edges.emplace_back(u, v);
        }
        const auto m = loops_to_biadjacency(g);
        CHECK(biadjacency_to_loops(m) == g);

        i64 reduced_total = 0;
        for (const i64 deg : g.reduced_degrees()) reduced_total += deg;
        CHECK(reduced_total ==
              2 * static_cast<i64>(g.edges.size()) + static_cast<i64>(g.loops.size()));
    }
}

TEST_CASE("loop reading rejects asymmetric matrices") {
    BiadjacencyMatrix m(2, 2);
    m.set(0, 1, true);
    CHECK(thrown_code([&] { biadjacency_to_loops(m); }) == Errc::domain_error);
}

TEST_CASE("realization is deterministic") {
    const auto d = ds({4, 3, 3, 2, 2, 2});
    CHECK(realize_pair(d, d) == realize_pair(d, d));
    const auto a = realize_via_loops(ds({3, 2, 2, 1}));
    const auto b = realize_via_loops(ds({3, 2, 2, 1}));
    CHECK(a.matrix == b.matrix);
    CHECK(a.loop_graph == b.loop_graph);
    CHECK(a.s_used == b.s_used);
}

TEST_CASE("public entry point records the path taken") {
    const auto via_loops = realize(ds({3, 2, 2, 1}));
    CHECK(via_loops.method == "loops");
    CHECK(via_loops.loop_graph.has_value());
    CHECK(via_loops.s_used == 2);

    // Accepted but outside the pipeline's hypotheses: silent fallback.
    const auto fallback = realize(ds({2, 2}));
    CHECK(fallback.method == "gale-ryser");
    CHECK_FALSE(fallback.loop_graph.has_value());
    CHECK(fallback.matrix.to_text() == "11\n11\n");

    const auto forced = realize(ds({2, 2}), RealizeMethod::gale_ryser);
    CHECK(forced.method == "gale-ryser");
    CHECK(thrown_code([&] { realize(ds({2, 2}), RealizeMethod::loops); }) ==
          Errc::precondition_failed);
    CHECK(thrown_code([&] { realize(ds({4, 4, 4, 2})); }) == Errc::not_realizable);

    testutil::for_each_corpus_sequence(6, 6, [](const DegreeSequence& d) {
        if (!check_full_fast(d).accepted) return;
        const auto r = realize(d);
        CHECK(sums_to_vector(r.matrix.row_sums()) == d.values());
        CHECK(sums_to_vector(r.matrix.col_sums()) == d.values());
        CHECK(r.method == (loops_applicable(d) ? "loops" : "gale-ryser"));
    });
}
