#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle_helpers.hpp"
#include "stringart/net.hpp"

#include <stdexcept>
#include <vector>

using namespace stringart;

namespace {

NetConfig skew_config(int n) {
    return NetConfig::with_frame(n, FrameParams{Rational(3, 5), Rational(4, 5)});
}

Spacing squares_spacing() {
    return Spacing({Rational(0), Rational(1, 16), Rational(1, 4), Rational(9, 16), Rational(1)});
}

} // namespace

TEST_CASE("spacing validation") {
    CHECK_THROWS_AS(Spacing({Rational(0)}), std::invalid_argument);
    CHECK_THROWS_AS(Spacing({Rational(1, 10), Rational(1)}), std::invalid_argument);
    CHECK_THROWS_AS(Spacing({Rational(0), Rational(9, 10)}), std::invalid_argument);
    CHECK_THROWS_AS(Spacing({Rational(0), Rational(1, 2), Rational(1, 2), Rational(1)}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Spacing({Rational(0), Rational(2, 3), Rational(1, 3), Rational(1)}),
                    std::invalid_argument);
    CHECK(Spacing::equidistant(4).is_equidistant());
    CHECK(Spacing({Rational(0), Rational(1, 2), Rational(1)}).is_equidistant());
    CHECK_FALSE(squares_spacing().is_equidistant());
    CHECK(squares_spacing().n() == 4);
}

TEST_CASE("config validation") {
    CHECK_THROWS_AS(NetConfig(0, FrameParams::right(), Spacing::equidistant(1)), std::invalid_argument);
    CHECK_THROWS_AS(NetConfig(3, FrameParams::right(), Spacing::equidistant(4)), std::invalid_argument);
    CHECK_THROWS_AS(NetConfig(4, FrameParams{Rational(0), Rational(0)}, Spacing::equidistant(4)),
                    std::invalid_argument);
    CHECK_THROWS_AS(NetConfig(4, FrameParams{Rational(-1), Rational(0)}, Spacing::equidistant(4)),
                    std::invalid_argument);
    // A skew frame is only defined together with equidistant spacing.
    CHECK_THROWS_AS(NetConfig(4, FrameParams{Rational(3, 5), Rational(4, 5)}, squares_spacing()),
                    std::invalid_argument);
    CHECK_NOTHROW(NetConfig(4, FrameParams{Rational(3, 5), Rational(-4, 5)}, Spacing::equidistant(4)));
    CHECK_NOTHROW(NetConfig::with_spacing(squares_spacing()));
    CHECK_NOTHROW(NetConfig::equidistant(1));
}

TEST_CASE("intercepts") {
    NetConfig cfg = NetConfig::equidistant(4);
    auto [x1, y1] = intercepts(cfg, 1);
    CHECK((x1 == Point{Rational(1, 4), Rational(0)}));
    CHECK((y1 == Point{Rational(0), Rational(3, 4)}));
    auto [x0, y0] = intercepts(cfg, 0);
    CHECK((x0 == Point{Rational(0), Rational(0)}));
    CHECK((y0 == Point{Rational(0), Rational(1)}));

    auto [sx, sy] = intercepts(skew_config(4), 2);
    CHECK((sx == Point{Rational(3, 10), Rational(2, 5)}));
    CHECK((sy == Point{Rational(0), Rational(1, 2)}));

    CHECK_THROWS_AS(intercepts(cfg, -1), std::invalid_argument);
    CHECK_THROWS_AS(intercepts(cfg, 5), std::invalid_argument);
}

TEST_CASE("line_through_points") {
    LineEq diag = line_through_points(Point{Rational(0), Rational(1)}, Point{Rational(1), Rational(0)});
    CHECK((diag == LineEq{Rational(-1), Rational(1)}));
    LineEq l1 = line_through_points(Point{Rational(1, 4), Rational(0)}, Point{Rational(0), Rational(3, 4)});
    CHECK((l1 == LineEq{Rational(-3), Rational(3, 4)}));
    LineEq skew = line_through_points(Point{Rational(0), Rational(0)}, Point{Rational(3, 5), Rational(4, 5)});
    CHECK((skew == LineEq{Rational(4, 3), Rational(0)}));
    CHECK_THROWS_AS(line_through_points(Point{Rational(1, 2), Rational(0)}, Point{Rational(1, 2), Rational(1)}),
                    std::domain_error);
}

TEST_CASE("vertex closed form") {
    NetConfig cfg = NetConfig::equidistant(4);
    CHECK((vertex(cfg, 1, 3) == Point{Rational(3, 16), Rational(3, 16)}));
    CHECK(vertex(cfg, 3, 1) == vertex(cfg, 1, 3));
    CHECK((vertex(skew_config(4), 1, 3) == Point{Rational(9, 80), Rational(27, 80)}));

    // l_0 is the axis x = 0, so P_{0,k} is the k-th axis intercept.
    for (int k = 1; k <= 4; ++k) {
        CHECK((vertex(cfg, 0, k) == Point{Rational(0), Rational(1) - Rational(k, 4)}));
    }

    NetConfig general = NetConfig::with_spacing(squares_spacing());
    CHECK((vertex(general, 1, 2) == Point{Rational(1, 64), Rational(45, 64)}));

    CHECK_THROWS_AS(vertex(cfg, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(vertex(cfg, -1, 2), std::invalid_argument);
    CHECK_THROWS_AS(vertex(cfg, 1, 5), std::invalid_argument);
}

TEST_CASE("vertex agrees with the two-line elimination oracle") {
    std::vector<NetConfig> configs;
    configs.push_back(NetConfig::equidistant(4));
    configs.push_back(NetConfig::equidistant(7));
    configs.push_back(skew_config(5));
    configs.push_back(NetConfig::with_frame(6, FrameParams{Rational(1, 2), Rational(-1, 3)}));
    configs.push_back(NetConfig::with_spacing(squares_spacing()));
    configs.push_back(NetConfig::with_spacing(
        Spacing({Rational(0), Rational(3, 10), Rational(7, 10), Rational(1)})));
    for (const NetConfig& cfg : configs) {
        for (int i = 0; i <= cfg.n(); ++i) {
            for (int j = i + 1; j <= cfg.n(); ++j) {
                CHECK(vertex(cfg, i, j) == oracle::intersect_lines(cfg, i, j));
                CHECK(oracle::point_on_line(cfg, i, vertex(cfg, i, j)));
                CHECK(oracle::point_on_line(cfg, j, vertex(cfg, i, j)));
            }
        }
    }
}

TEST_CASE("build_net materializes the full lattice") {
    CHECK(build_net(NetConfig::equidistant(1)).size() == 1);
    CHECK(build_net(NetConfig::equidistant(2)).size() == 3);
    Net net = build_net(NetConfig::equidistant(4));
    CHECK(net.size() == 10);
    for (int i = 0; i <= 4; ++i) {
        for (int j = i + 1; j <= 4; ++j) {
            CHECK(net.at(i, j) == oracle::intersect_lines(net.config(), i, j));
            CHECK(net.at(j, i) == net.at(i, j));
        }
    }
    CHECK_THROWS_AS(net.at(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(net.at(0, 5), std::invalid_argument);
}

TEST_CASE("segment_vector_a") {
    CHECK((segment_vector_a(NetConfig::equidistant(5), 2, 0) == Vec2{Rational(2, 25), Rational(-3, 25)}));
    CHECK((segment_vector_a(NetConfig::equidistant(5), 2, 3) == Vec2{Rational(2, 25), Rational(-3, 25)}));
    CHECK((segment_vector_a(skew_config(4), 1, 2) == Vec2{Rational(3, 80), Rational(-11, 80)}));
    CHECK((segment_vector_a(NetConfig::with_spacing(squares_spacing()), 1, 2) ==
           Vec2{Rational(5, 256), Rational(-75, 256)}));

    NetConfig cfg = NetConfig::equidistant(5);
    CHECK_THROWS_AS(segment_vector_a(cfg, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(segment_vector_a(cfg, 2, 1), std::invalid_argument); // j == i-1
    CHECK_THROWS_AS(segment_vector_a(cfg, 2, 5), std::invalid_argument);     // j == N
    CHECK_THROWS_AS(segment_vector_a(cfg, 2, -1), std::invalid_argument);
}

TEST_CASE("a-vectors do not depend on j for equidistant spacing") {
    for (const NetConfig& cfg : {NetConfig::equidistant(7), skew_config(7)}) {
        for (int i = 0; i <= 7; ++i) {
            Vec2 first{Rational(0), Rational(0)};
            bool have = false;
            for (int j = 0; j < 7; ++j) {
                if (j == i || j == i - 1) continue;
                Vec2 a = segment_vector_a(cfg, i, j);
                if (!have) {
                    first = a;
                    have = true;
                } else {
                    CHECK(a == first);
                }
            }
        }
    }
}

TEST_CASE("segment_vector_b") {
    CHECK((segment_vector_b(NetConfig::equidistant(5), 2) == Vec2{Rational(4, 25), Rational(-6, 25)}));
    CHECK((segment_vector_b(NetConfig::equidistant(2), 1) == Vec2{Rational(1, 2), Rational(-1, 2)}));
    NetConfig three = NetConfig::with_spacing(
        Spacing({Rational(0), Rational(3, 10), Rational(7, 10), Rational(1)}));
    CHECK((segment_vector_b(three, 1) == Vec2{Rational(21, 100), Rational(-49, 100)}));

    CHECK_THROWS_AS(segment_vector_b(NetConfig::equidistant(5), 0), std::invalid_argument);
    CHECK_THROWS_AS(segment_vector_b(NetConfig::equidistant(5), 5), std::invalid_argument);
}

TEST_CASE("b equals twice a for equidistant spacing in any frame") {
    for (const NetConfig& cfg :
         {NetConfig::equidistant(6), skew_config(6),
          NetConfig::with_frame(6, FrameParams{Rational(3, 5), Rational(-4, 5)})}) {
        for (int i = 1; i < cfg.n(); ++i) {
            Vec2 twice_a = Rational(2) * segment_vector_a(cfg, i, i == 1 ? 2 : 0);
            CHECK(segment_vector_b(cfg, i) == twice_a);
        }
    }
}

TEST_CASE("segment_length_sq") {
    NetConfig cfg = NetConfig::equidistant(4);
    CHECK(segment_length_sq(cfg, 2) == Rational(1, 2));
    CHECK(segment_length_sq(cfg, 1) == Rational(5, 8));
    CHECK(segment_length_sq(cfg, 3) == Rational(5, 8));
    CHECK(segment_length_sq(NetConfig::equidistant(2), 1) == Rational(1, 2));

    // The values carry a common scale of N^2 relative to the a-vectors,
    // so every comparison made of them is unaffected.
    for (int n : {2, 3, 4, 7, 11}) {
        NetConfig c = NetConfig::equidistant(n);
        for (int i = 1; i < n; ++i) {
            CHECK(segment_length_sq(c, i) == segment_length_sq(c, n - i));
            int j = (i == 1 && n > 2) ? 2 : 0;
            if (n == 2) continue;
            CHECK(segment_length_sq(c, i) ==
                  Rational(static_cast<long long>(n) * n) * segment_vector_a(c, i, j).length_sq());
        }
    }

    CHECK_THROWS_AS(segment_length_sq(cfg, 0), std::invalid_argument);
    CHECK_THROWS_AS(segment_length_sq(cfg, 4), std::invalid_argument);
    CHECK_THROWS_AS(segment_length_sq(skew_config(4), 1), std::domain_error);
    CHECK_THROWS_AS(segment_length_sq(NetConfig::with_spacing(squares_spacing()), 1), std::domain_error);
}
