#pragma once

#include "stringart/net.hpp"
#include "stringart/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stringart {

enum class SolveStatus { unique, one_parameter_family, vacuous };

std::string to_string(SolveStatus status);

// One-parameter family of admissible spacings, n=3 only: x_2 is pinned to
// x_1 by `relation` and x_1 ranges over the open interval (x1_low, x1_high).
struct FamilyDescription {
    std::string relation;
    Rational x1_low;
    Rational x1_high;
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::vacuous;
    std::optional<Spacing> solution;
    std::optional<FamilyDescription> family;
    // Derived relations in order, e.g. "x_3 = x_1 + x_2", "x_2 = 2*x_1".
    std::vector<std::string> steps;
};

// Solves the equal-area system a(T_i)=a(T_{i+1}) for i=0..n-3 plus
// a(Q_{0,2})=a(Q_{1,3}) for n>=4, over strictly increasing spacings with
// x_0=0, x_n=1. Unique (equidistant) for n>=4, a family for n=3, vacuous
// below that. Throws std::logic_error if the derivation ever leaves the
// admissible region; std::invalid_argument for n < 1.
SolveOutcome solve_spacing(int n);

// x_1 + ((i-1)/2) x_2 for odd i, (i/2) x_2 for even i; 1 <= i <= n.
Rational claim_formula(int n, const Rational& x1, const Rational& x2, int i);

// The constraint system solve_spacing targets, evaluated on a concrete
// spacing through the geometric area routines.
bool satisfies_equal_area_constraints(const Spacing& spacing);

// Exhaustively enumerates strictly increasing interior intercepts with
// denominator grid_denominator and returns every admissible spacing.
// Guards: n <= 6, grid_denominator <= 60.
std::vector<Spacing> verify_uniqueness_bruteforce(int n, int grid_denominator);

} // namespace stringart
