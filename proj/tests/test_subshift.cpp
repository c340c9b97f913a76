#include <doctest.h>

#include "projdim/automaton.hpp"
#include "projdim/subshift.hpp"

#include <cmath>

using namespace projdim;

namespace {

const BSymbol k00{0, 0}, k10{1, 0}, k01{0, 1}, k11{1, 1};

bool has_edge(const SubshiftPresentation& sp, int from, BSymbol b, int to) {
    for (const auto& e : sp.edges)
        if (e.from == from && e.label == b && e.to == to) return true;
    return false;
}

}  // namespace

TEST_CASE("build_line_subshift") {
    const auto one = build_line_subshift(make_slope(1, 1));
    // the rule keeps -q as well (self-loop on (0,1))
    CHECK(one.states == std::vector<int>{-1, 0, 1});
    CHECK(has_edge(one, 0, k00, 0));
    CHECK(has_edge(one, 0, k11, 0));
    CHECK(has_edge(one, 0, k01, 1));
    CHECK(has_edge(one, 1, k10, 1));
    CHECK(has_edge(one, -1, k01, -1));

    const auto half = build_line_subshift(make_slope(1, 2));
    CHECK(half.states == std::vector<int>{-2, -1, 0, 1});
    CHECK(has_edge(half, 0, k00, 0));
    CHECK(has_edge(half, 0, k10, -1));
    CHECK(has_edge(half, 0, k11, 1));
    CHECK_FALSE(half.step(0, k01).has_value());

    for (const auto& s : slopes_up_to(12)) {
        const auto sp = build_line_subshift(s);
        CHECK(sp.index_of(0) >= 0);
        CHECK(has_edge(sp, 0, k00, 0));
        for (int m : sp.states) {
            bool in = false, out = false;
            for (const auto& e : sp.edges) {
                in = in || e.to == m;
                out = out || e.from == m;
            }
            CHECK(in);
            CHECK(out);
        }
    }
}

TEST_CASE("admissible") {
    const auto half = build_line_subshift(make_slope(1, 2));
    for (auto b : kBAlphabet) CHECK(admissible(half, {b}));
    CHECK(admissible(half, {}));
    const auto one = build_line_subshift(make_slope(1, 1));
    CHECK(one.step(0, k10) == -1);
    CHECK_FALSE(one.step(-1, k10).has_value());
    CHECK(admissible(one, {k10}));
}

TEST_CASE("geometric_cylinder_test") {
    for (const auto& s : slopes_up_to(6)) CHECK(geometric_cylinder_test(s, BWord(7, k00)));
    CHECK(geometric_cylinder_test(make_slope(1, 2), {k11}));
    const auto one = make_slope(1, 1);
    CHECK(geometric_cylinder_test(one, {k10}));
    CHECK_FALSE(geometric_cylinder_test(one, {k10}, SquareTest::Open));
    CHECK(corner_touch(one, {k10}));
}

TEST_CASE("admissibility against squares, q <= 5, n <= 8") {
    for (const auto& s : slopes_up_to(5)) {
        const auto sp = build_line_subshift(s);
        std::size_t closed_mismatch = 0, open_mismatch = 0, corners = 0;
        for (std::size_t n = 1; n <= 8; ++n)
            for (const auto& z : all_bwords(n)) {
                const bool a = admissible(sp, z);
                closed_mismatch += a != geometric_cylinder_test(s, z, SquareTest::Closed);
                open_mismatch += a != geometric_cylinder_test(s, z, SquareTest::Open);
                corners += corner_touch(s, z);
            }
        CHECK(closed_mismatch == 0);
        CHECK(open_mismatch == corners);
    }
}

TEST_CASE("Z_n lies in the language") {
    for (const auto& s : slopes_up_to(6)) {
        const auto sp = build_line_subshift(s);
        for (std::size_t n = 1; n <= 10; ++n)
            for (const auto& z : enumerate_exact_words(s, n).words) CHECK(admissible(sp, z));
    }
}

TEST_CASE("pressure_partial") {
    // p/q = 1, n = 1: every label is admissible once
    const auto one = pressure_partial(make_slope(1, 1), 1);
    BigInt expect = 0;
    for (auto b : kBAlphabet) {
        const auto& m = a_matrix(b);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) expect += m(i, j);
    }
    CHECK(one.full_sum == expect);
    CHECK(one.full == doctest::Approx(std::log(expect.convert_to<double>())));

    const auto half = pressure_partial(make_slope(1, 2), 2);
    CHECK(half.lower >= 0.5 * std::log(13.0) - 1e-12);

    for (const auto& s : slopes_up_to(6)) {
        const auto seq = pressure_sequence(s, 12, true);
        for (const auto& e : seq) {
            CHECK(e.lower <= e.full + 1e-12);
            REQUIRE(e.max_column.has_value());
            CHECK(std::abs(e.full - *e.max_column) <= std::log(4.0) / e.n + 1e-12);
        }
    }
    CHECK_THROWS_AS(pressure_partial(make_slope(1, 2), 41), Error);

    // brute-force sum over admissible words at small n
    for (const auto& s : slopes_up_to(4)) {
        const auto sp = build_line_subshift(s);
        for (std::size_t n = 1; n <= 6; ++n) {
            BigInt lower = 0, full = 0;
            for (const auto& z : all_bwords(n)) {
                if (!admissible(sp, z)) continue;
                const auto m = cocycle_product(z);
                for (int i = 0; i < 4; ++i) {
                    lower += m(i, 0);
                    for (int j = 0; j < 4; ++j) full += m(i, j);
                }
            }
            const auto e = pressure_partial(s, n);
            CHECK(e.lower_sum == lower);
            CHECK(e.full_sum == full);
        }
    }
}

TEST_CASE("spectral_pressure") {
    const auto one = spectral_pressure(make_slope(1, 1));
    CHECK(std::abs(one.spectral->mid() - std::log(5.0)) < 1e-9);
    const double n_half = std::log((5 + std::sqrt(17.0)) / 2);
    CHECK(spectral_pressure(make_slope(1, 2)).spectral->upper >= n_half - 1e-9);
    for (const auto& s : slopes_up_to(8)) {
        const auto p = spectral_pressure(s);
        CHECK(p.spectral->lower >= kLog3 - 1e-9);
        CHECK(p.spectral->width() <= 1e-9);
    }
    // S_n approaches the spectral value with a monotone gap trend
    const auto seq = pressure_sequence(make_slope(1, 2), 40);
    const double p = spectral_pressure(make_slope(1, 2)).spectral->mid();
    double prev = INFINITY;
    for (std::size_t n = 10; n <= 40; n += 5) {
        const double gap = std::abs(seq[n - 1].full - p);
        CHECK(gap <= prev + 1e-12);
        prev = gap;
    }
}

TEST_CASE("pressure_gap_check") {
    const auto one = pressure_gap_check(make_slope(1, 1));
    CHECK(one.ok);
    CHECK(one.N.mid() == doctest::Approx(std::log(5.0)).epsilon(1e-12));
    CHECK(one.P.mid() == doctest::Approx(std::log(5.0)).epsilon(1e-9));
    CHECK(pressure_gap_check(make_slope(1, 2)).ok);
}

TEST_CASE("exports") {
    const auto dot = to_dot(build_line_subshift(make_slope(1, 2)));
    CHECK(dot.find("\"0\" -> \"0\" [label=\"00\"]") != std::string::npos);
    const auto csv = pressure_csv(pressure_sequence(make_slope(1, 2), 3));
    CHECK(csv.rfind("n,L_n,S_n\n1,", 0) == 0);
}
