#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stringart/invariants.hpp"
#include "stringart/spacing_solver.hpp"

#include <stdexcept>
#include <string>
#include <vector>

using namespace stringart;

TEST_CASE("status names") {
    CHECK(to_string(SolveStatus::unique) == "unique");
    CHECK(to_string(SolveStatus::one_parameter_family) == "one_parameter_family");
    CHECK(to_string(SolveStatus::vacuous) == "vacuous");
}

TEST_CASE("one or two lines leave nothing to solve") {
    for (int n : {1, 2}) {
        SolveOutcome out = solve_spacing(n);
        CHECK(out.status == SolveStatus::vacuous);
        CHECK(!out.solution.has_value());
        CHECK(!out.family.has_value());
        CHECK(out.steps.empty());
    }
    CHECK_THROWS_AS(solve_spacing(0), std::invalid_argument);
}

TEST_CASE("three lines leave a one-parameter family") {
    SolveOutcome out = solve_spacing(3);
    CHECK(out.status == SolveStatus::one_parameter_family);
    CHECK(!out.solution.has_value());
    REQUIRE(out.family.has_value());
    CHECK(out.family->relation == "x_2 = 1 - x_1");
    CHECK(out.family->x1_low == Rational(0));
    CHECK(out.family->x1_high == Rational(1, 2));
    std::vector<std::string> expected{"x_3 = x_1 + x_2", "x_2 = 1 - x_1"};
    CHECK(out.steps == expected);
}

TEST_CASE("family members satisfy the constraint system") {
    for (const Rational& t :
         {Rational(1, 10), Rational(1, 5), Rational(3, 10), Rational(2, 5), Rational(49, 100)}) {
        Spacing member({Rational(0), t, Rational(1) - t, Rational(1)});
        CHECK(satisfies_equal_area_constraints(member));
    }
    Spacing outsider({Rational(0), Rational(1, 5), Rational(1, 2), Rational(1)});
    CHECK_FALSE(satisfies_equal_area_constraints(outsider));
}

TEST_CASE("five lines solve to the equidistant spacing") {
    SolveOutcome out = solve_spacing(5);
    CHECK(out.status == SolveStatus::unique);
    REQUIRE(out.solution.has_value());
    CHECK(*out.solution == Spacing::equidistant(5));
    std::vector<std::string> expected{"x_3 = x_1 + x_2", "x_4 = 2*x_2", "x_5 = x_1 + 2*x_2",
                                      "x_2 = 2*x_1",     "x_1 = 1/5",   "x_2 = 2/5"};
    CHECK(out.steps == expected);
}

TEST_CASE("uniqueness for n = 4..30") {
    for (int n = 4; n <= 30; ++n) {
        SolveOutcome out = solve_spacing(n);
        CHECK(out.status == SolveStatus::unique);
        REQUIRE(out.solution.has_value());
        const Spacing& solution = *out.solution;
        CHECK(solution.is_equidistant());
        for (int i = 0; i <= n; ++i) {
            CHECK(solution[i] == Rational(i, n));
        }
        // The recurrence that drove the derivation holds on the result.
        for (int k = 2; k <= n - 1; ++k) {
            CHECK(solution[k + 1] == solution[k - 1] + solution[k] - solution[k - 2]);
        }
        for (int i = 1; i <= n; ++i) {
            CHECK(claim_formula(n, solution[1], solution[2], i) == solution[i]);
        }
        CHECK(satisfies_equal_area_constraints(solution));
    }
}

TEST_CASE("first derived relations match the hand derivation") {
    SolveOutcome out = solve_spacing(8);
    REQUIRE(out.steps.size() >= 3);
    CHECK(out.steps[0] == "x_3 = x_1 + x_2");
    CHECK(out.steps[1] == "x_4 = 2*x_2");
    CHECK(out.steps[2] == "x_5 = x_1 + 2*x_2");
    REQUIRE(out.steps.size() == 9);
    CHECK(out.steps[6] == "x_2 = 2*x_1");
    CHECK(out.steps[7] == "x_1 = 1/8");
    CHECK(out.steps[8] == "x_2 = 1/4");
}

TEST_CASE("claim formula") {
    CHECK(claim_formula(5, Rational(1, 5), Rational(2, 5), 4) == Rational(4, 5));
    CHECK(claim_formula(5, Rational(1, 7), Rational(3, 7), 1) == Rational(1, 7));
    CHECK(claim_formula(7, Rational(1, 7), Rational(2, 7), 5) == Rational(5, 7));
    CHECK_THROWS_AS(claim_formula(5, Rational(1, 5), Rational(2, 5), 0), std::invalid_argument);
    CHECK_THROWS_AS(claim_formula(5, Rational(1, 5), Rational(2, 5), 6), std::invalid_argument);

    // Against iterating the recurrence from (x_0, x_1, x_2) directly.
    std::vector<Rational> x{Rational(0), Rational(1, 7), Rational(2, 7)};
    for (int k = 2; k <= 6; ++k) {
        x.push_back(x[static_cast<std::size_t>(k - 1)] + x[static_cast<std::size_t>(k)] -
                    x[static_cast<std::size_t>(k - 2)]);
    }
    for (int i = 1; i <= 7; ++i) {
        CHECK(claim_formula(7, Rational(1, 7), Rational(2, 7), i) == x[static_cast<std::size_t>(i)]);
    }
}

TEST_CASE("solver output passes the invariant suite") {
    SolveOutcome out = solve_spacing(12);
    REQUIRE(out.solution.has_value());
    PropertyReport report = check_all(build_net(NetConfig::with_spacing(*out.solution)));
    CHECK(report.all_hold());
}

TEST_CASE("equidistant spacings satisfy the constraints") {
    for (int n = 1; n <= 10; ++n) {
        CHECK(satisfies_equal_area_constraints(Spacing::equidistant(n)));
    }
}

TEST_CASE("bruteforce recovers the unique solution") {
    std::vector<Spacing> found = verify_uniqueness_bruteforce(4, 20);
    REQUIRE(found.size() == 1);
    CHECK(found[0] == Spacing::equidistant(4));

    found = verify_uniqueness_bruteforce(5, 15);
    REQUIRE(found.size() == 1);
    CHECK(found[0] == Spacing::equidistant(5));

    // A grid that cannot express i/4 finds nothing.
    CHECK(verify_uniqueness_bruteforce(4, 15).empty());
}

TEST_CASE("bruteforce recovers the three-line family") {
    std::vector<Spacing> found = verify_uniqueness_bruteforce(3, 10);
    REQUIRE(found.size() == 4);
    for (std::size_t k = 0; k < found.size(); ++k) {
        Rational t(static_cast<long long>(k) + 1, 10);
        Spacing expected({Rational(0), t, Rational(1) - t, Rational(1)});
        CHECK(found[k] == expected);
    }
}

TEST_CASE("bruteforce guards") {
    CHECK_THROWS_AS(verify_uniqueness_bruteforce(7, 10), std::invalid_argument);
    CHECK_THROWS_AS(verify_uniqueness_bruteforce(0, 10), std::invalid_argument);
    CHECK_THROWS_AS(verify_uniqueness_bruteforce(4, 61), std::invalid_argument);
    CHECK_THROWS_AS(verify_uniqueness_bruteforce(4, 0), std::invalid_argument);
}

TEST_CASE("bruteforce agrees with plain enumeration") {
    const int grid = 12;
    std::vector<Spacing> plain;
    for (int c1 = 1; c1 < grid; ++c1) {
        for (int c2 = c1 + 1; c2 < grid; ++c2) {
            for (int c3 = c2 + 1; c3 < grid; ++c3) {
                Spacing candidate({Rational(0), Rational(c1, grid), Rational(c2, grid),
                                   Rational(c3, grid), Rational(1)});
                if (satisfies_equal_area_constraints(candidate)) plain.push_back(candidate);
            }
        }
    }
    CHECK(verify_uniqueness_bruteforce(4, grid) == plain);

    std::vector<Spacing> pairs;
    for (int c1 = 1; c1 < 8; ++c1) {
        for (int c2 = c1 + 1; c2 < 8; ++c2) {
            Spacing candidate({Rational(0), Rational(c1, 8), Rational(c2, 8), Rational(1)});
            if (satisfies_equal_area_constraints(candidate)) pairs.push_back(candidate);
        }
    }
    CHECK(verify_uniqueness_bruteforce(3, 8) == pairs);
}
