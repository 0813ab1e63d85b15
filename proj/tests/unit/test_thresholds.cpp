#include <doctest.h>

#include <random>

#include "degseq/criteria.hpp"
#include "degseq/oracle.hpp"
#include "degseq/thresholds.hpp"
#include "util.hpp"

using namespace degseq;
using testutil::thrown_code;

TEST_CASE("parametric condition with exact rational arithmetic") {
    CHECK(abk_x(Triple(4, 2, 9), Rational(2, 1)));
    CHECK(abk_x(Triple(3, 3, 5), Rational(1, 1)));
    CHECK_FALSE(abk_x(Triple(4, 1, 6), Rational(4, 1)));
    CHECK(thrown_code([] { abk_x(Triple(3, 1, 4), Rational(1, 2)); }) == Errc::x_less_than_one);
}

TEST_CASE("rational parsing and reduction") {
    CHECK(Rational(4, 2).num() == 2);
    CHECK(Rational(4, 2).den() == 1);
    CHECK(Rational::parse("7/3").num() == 7);
    CHECK(Rational::parse("5").den() == 1);
    CHECK(Rational::parse("6/4").str() == "3/2");
    CHECK(thrown_code([] { Rational::parse("x/2"); }) == Errc::syntax_error);
    CHECK(thrown_code([] { Rational::parse("3/"); }) == Errc::syntax_error);
    CHECK(thrown_code([] { Rational(0, 1); }) == Errc::domain_error);
}

TEST_CASE("parameter-free condition") {
    CHECK(abk_simple(Triple(4, 2, 9)));
    CHECK_FALSE(abk_simple(Triple(4, 1, 6)));
    CHECK(abk_simple(Triple(5, 5, 7)));
}

TEST_CASE("sharp bipartite threshold") {
    CHECK(sharp_bipartite(Triple(4, 1, 6)));       // floor refinement: 6 >= floor(25/4)
    CHECK_FALSE(sharp_bipartite(Triple(4, 2, 4)));  // 8 < 9
    CHECK_FALSE(sharp_bipartite(Triple(5, 1, 8)));  // equal parity keeps the exact quarter
}

TEST_CASE("sharp graphic threshold") {
    CHECK_FALSE(sharp_graphic(Triple(3, 1, 4)));  // odd b: T = 5, nb = 4
    CHECK(sharp_graphic(Triple(2, 2, 4)));        // T = 6, nb = 8
    CHECK(sharp_graphic(Triple(3, 2, 6)));        // a+b = 1 mod 4: T = 8, nb = 12
}

TEST_CASE("two-element quadratic criterion") {
    CHECK_FALSE(two_element_is_bipartite(4, 2, 4, 3));  // 9 - 18 + 8 = -1
    for (i64 s = 1; s <= 3; ++s) CHECK(two_element_is_bipartite(3, 1, 4, s));  // (s-2)^2 >= 0

    // At s = a and s = b the quadratic evaluates to (n-a)*b, never negative.
    auto quadratic = [](i64 a, i64 b, i64 n, i64 s) { return s * s - (a + b) * s + n * b; };
    CHECK(quadratic(4, 2, 9, 4) == (9 - 4) * 2);
    CHECK(quadratic(4, 2, 9, 2) == (9 - 4) * 2);
    CHECK(two_element_is_bipartite(4, 2, 9, 4));
    CHECK(two_element_is_bipartite(4, 2, 9, 2));
}

TEST_CASE("two-element domain errors") {
    CHECK(thrown_code([] { two_element_is_bipartite(3, 3, 5, 2); }) == Errc::domain_error);
    CHECK(thrown_code([] { two_element_is_bipartite(6, 2, 5, 2); }) == Errc::domain_error);
    CHECK(thrown_code([] { two_element_is_bipartite(3, 1, 5, 6); }) == Errc::domain_error);
    CHECK(thrown_code([] { two_element_forms(3, 3, 5, 2); }) == Errc::domain_error);
}

TEST_CASE("two-element inequality forms on the worked fixture") {
    const auto f = two_element_forms(4, 2, 4, 3);
    CHECK(f.ineq1_lhs == 13);
    CHECK(f.ineq1_rhs == 12);
    CHECK(f.ineq2_lhs == 16);
    CHECK(f.ineq2_rhs == 16);
    CHECK(f.ineqf_lhs == 1);
    CHECK(f.ineqf_rhs == 0);
}

TEST_CASE("two-element forms: second inequality is always an identity") {
    for (i64 n = 2; n <= 10; ++n)
        for (i64 a = 2; a <= n; ++a)
            for (i64 b = 1; b < a; ++b)
                for (i64 s = 1; s <= n; ++s) {
                    const auto f = two_element_forms(a, b, n, s);
                    CHECK(f.ineq2_lhs == n * n);
                    CHECK(f.ineq2_rhs == n * n);

                    // Violations coincide across the three equivalent views.
                    const bool quad = two_element_is_bipartite(a, b, n, s);
                    CHECK((f.ineq1_lhs <= f.ineq1_rhs) == quad);
                    CHECK((f.ineqf_lhs <= f.ineqf_rhs) == quad);
                }
}

TEST_CASE("two-element criterion matches gale-ryser on expanded sequences") {
    for (i64 n = 2; n <= 10; ++n)
        for (i64 a = 2; a <= n; ++a)
            for (i64 b = 1; b < a; ++b)
                for (i64 s = 1; s <= n - 1; ++s) {
                    std::vector<i64> values(static_cast<std::size_t>(n), b);
                    std::fill_n(values.begin(), static_cast<std::size_t>(s), a);
                    const auto d = DegreeSequence::from_values(std::move(values));
                    CHECK(two_element_is_bipartite(a, b, n, s) == gale_ryser_pair(d, d).accepted);
                }
}

TEST_CASE("counterexample construction") {
    const auto even = counterexample(Triple(4, 2, 4));
    CHECK(even.render() == "4^3,2");
    CHECK_FALSE(check_full_fast(even).accepted);
    CHECK_FALSE(oracle_bipartite_pair(even, even));

    const auto odd = counterexample(Triple(5, 1, 8));
    CHECK(odd.render() == "5^3,1^5");
    CHECK(odd.n() == 8);
    CHECK_FALSE(check_full_fast(odd).accepted);

    CHECK(thrown_code([] { counterexample(Triple(4, 1, 6)); }) == Errc::not_applicable);
    CHECK(thrown_code([] { counterexample(Triple(3, 3, 4)); }) == Errc::domain_error);
    CHECK(thrown_code([] { counterexample(Triple(5, 2, 4)); }) == Errc::domain_error);
}

TEST_CASE("counterexamples carry the requested statistics and fail the check") {
    for (i64 n = 2; n <= 14; ++n)
        for (i64 a = 2; a <= n; ++a)
            for (i64 b = 1; b < a; ++b) {
                const Triple t(a, b, n);
                if (sharp_bipartite(t)) continue;
                const auto d = counterexample(t);
                CHECK(d.n() == n);
                CHECK(d.max_value() == a);
                CHECK(d.min_value() == b);
                CHECK_FALSE(check_full_fast(d).accepted);
            }
}

TEST_CASE("strong index bound fixtures") {
    const auto tight = strong_index_bound(DegreeSequence::from_values({4, 4, 4, 2}), 3);
    CHECK(tight.lhs == 13);
    CHECK(tight.bound == 13);

    const auto loose = strong_index_bound(DegreeSequence::from_values({3, 2, 2, 1}), 2);
    CHECK(loose.lhs == 6);
    CHECK(loose.bound == 8);
}

TEST_CASE("strong index bound domain errors") {
    const auto d = DegreeSequence::from_values({3, 2, 2, 1});
    CHECK(thrown_code([&] { strong_index_bound(d, 3); }) == Errc::domain_error);  // not strong
    CHECK(thrown_code([&] { strong_index_bound(d, 1); }) == Errc::domain_error);  // k <= b
    const auto big = DegreeSequence::from_values({5, 3, 2});
    CHECK(thrown_code([&] { strong_index_bound(big, 1); }) == Errc::domain_error);  // a > n
}

TEST_CASE("bound dominates the lhs at every applicable index") {
    testutil::for_each_corpus_sequence(7, 7, [](const DegreeSequence& d) {
        if (d.max_value() > d.n()) return;
        const i64 largest = strong_profile(d).largest_strong;
        for (i64 k = d.min_value() + 1; k <= largest; ++k) {
            const auto bc = strong_index_bound(d, k);
            CHECK(bc.lhs <= bc.bound);
        }
    });
}

TEST_CASE("the two parametric forms are equivalent") {
    for (i64 n = 1; n <= 25; ++n)
        for (i64 a = 1; a <= n; ++a)
            for (i64 b = 1; b <= a; ++b) {
                const Triple t(a, b, n);
                CHECK(abk_simple(t) == abk_x(t, Rational(a, b)));
            }
}

TEST_CASE("any parametric witness implies the parameter-free condition") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 2000; ++i) {
        const i64 n = 1 + static_cast<i64>(rng() % 40);
        const i64 a = 1 + static_cast<i64>(rng() % static_cast<std::uint64_t>(n));
        const i64 b = 1 + static_cast<i64>(rng() % static_cast<std::uint64_t>(a));
        const i64 q = 1 + static_cast<i64>(rng() % 8);
        const i64 p = q + static_cast<i64>(rng() % static_cast<std::uint64_t>(7 * q + 1));
        const Triple t(a, b, n);
        if (abk_x(t, Rational(p, q))) CHECK(abk_simple(t));
    }
}

TEST_CASE("the simple condition implies the sharp one") {
    for (i64 n = 1; n <= 30; ++n)
        for (i64 a = 1; a <= n + 4; ++a)
            for (i64 b = 1; b <= a; ++b) {
                const Triple t(a, b, n);
                if (abk_simple(t)) CHECK(sharp_bipartite(t));
            }
}

TEST_CASE("sharp threshold forces every two-element section to pass") {
    for (i64 n = 2; n <= 20; ++n)
        for (i64 a = 2; a <= n; ++a)
            for (i64 b = 1; b < a; ++b) {
                if (!sharp_bipartite(Triple(a, b, n))) continue;
                for (i64 s = 1; s <= n - 1; ++s) CHECK(two_element_is_bipartite(a, b, n, s));
            }
}

TEST_CASE("random even-sum sequences under the graphic threshold pass erdos-gallai") {
    std::mt19937_64 rng(31);
    int generated = 0;
    while (generated < 300) {
        const i64 n = 2 + static_cast<i64>(rng() % 30);
        const i64 a = 2 + static_cast<i64>(rng() % 10);
        if (a > n) continue;
        const i64 b = 1 + static_cast<i64>(rng() % static_cast<std::uint64_t>(a));
        if (!sharp_graphic(Triple(a, b, n))) continue;

        std::vector<i64> values(static_cast<std::size_t>(n));
        values.front() = a;
        values.back() = b;
        for (std::size_t i = 1; i + 1 < values.size(); ++i)
            values[i] = b + static_cast<i64>(rng() % static_cast<std::uint64_t>(a - b + 1));
        const auto d = DegreeSequence::from_values(std::move(values));
        if (d.sum() % 2 != 0) continue;  // resample; parity is a hypothesis, not a failure
        if (d.max_value() != a || d.min_value() != b) continue;

        CHECK(erdos_gallai(d).accepted);
        ++generated;
    }
}

TEST_CASE("threshold reports carry the comparison the CLI prints") {
    const auto sharp = evaluate_threshold(Predicate::sharp_bipartite, Triple(4, 1, 6));
    CHECK(sharp.holds);
    CHECK(sharp.threshold == 6);
    CHECK(sharp.lhs == 6);

    const auto simple = evaluate_threshold(Predicate::abk_simple, Triple(4, 1, 6));
    CHECK_FALSE(simple.holds);
    CHECK(simple.threshold == 7);  // ceil(25/4)
    CHECK(simple.lhs == 6);

    const auto param = evaluate_threshold(Predicate::abk, Triple(4, 2, 9), Rational(2, 1));
    CHECK(param.holds);
    CHECK(param.lhs == 4);
    CHECK(param.threshold == 4);  // min(floor(2*2), floor(72/9))

    const auto graphic = evaluate_threshold(Predicate::sharp_graphic, Triple(3, 1, 4));
    CHECK_FALSE(graphic.holds);
    CHECK(graphic.threshold == 5);
    CHECK(graphic.lhs == 4);

    CHECK(thrown_code([] { evaluate_threshold(Predicate::abk, Triple(4, 2, 9)); }) ==
          Errc::domain_error);
}

TEST_CASE("triple_of extracts the statistics") {
    const auto t = triple_of(DegreeSequence::from_values({5, 4, 4, 2}));
    CHECK(t.a == 5);
    CHECK(t.b == 2);
    CHECK(t.n == 4);
    CHECK(thrown_code([] { Triple(2, 3, 4); }) == Errc::domain_error);
}
