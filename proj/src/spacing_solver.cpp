#include "stringart/spacing_solver.hpp"

#include "stringart/areas.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace stringart {

namespace {

// c0 + c1*x_1 + c2*x_2. Every intercept the derivation produces is such a
// form; the constant part only appears once boundary values enter.
struct Affine {
    Rational c0;
    Rational c1;
    Rational c2;
};

Affine operator+(const Affine& a, const Affine& b) {
    return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2};
}

Affine operator-(const Affine& a, const Affine& b) {
    return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2};
}

Rational evaluate(const Affine& f, const Rational& x1, const Rational& x2) {
    return f.c0 + f.c1 * x1 + f.c2 * x2;
}

std::string format_affine(const Affine& f) {
    std::string out;
    auto append = [&out](const Rational& c, const char* var) {
        if (c.is_zero()) return;
        Rational magnitude = abs(c);
        std::string piece;
        if (var[0] == '\0') {
            piece = magnitude.to_string();
        } else if (magnitude == Rational(1)) {
            piece = var;
        } else {
            piece = magnitude.to_string() + "*" + var;
        }
        if (out.empty()) {
            out = (c.sign() < 0 ? "-" : "") + piece;
        } else {
            out += (c.sign() < 0 ? " - " : " + ") + piece;
        }
    };
    append(f.c0, "");
    append(f.c1, "x_1");
    append(f.c2, "x_2");
    return out.empty() ? "0" : out;
}

// Bivariate polynomials in (x_1, x_2), exponent pair -> coefficient.
using Monomial = std::pair<int, int>;
using Poly = std::map<Monomial, Rational>;

void add_term(Poly& p, Monomial m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = p.try_emplace(m, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) p.erase(it);
    }
}

Poly to_poly(const Affine& f) {
    Poly p;
    add_term(p, {0, 0}, f.c0);
    add_term(p, {1, 0}, f.c1);
    add_term(p, {0, 1}, f.c2);
    return p;
}

Poly multiply(const Poly& a, const Poly& b) {
    Poly p;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) {
            add_term(p, {ma.first + mb.first, ma.second + mb.second}, ca * cb);
        }
    }
    return p;
}

Poly subtract(const Poly& a, const Poly& b) {
    Poly p = a;
    for (const auto& [m, c] : b) add_term(p, m, Rational(0) - c);
    return p;
}

// Quadrilateral area in product form, doubled (the common factor 1/2
// cancels across the equation): (x_{i+1}-x_i)(x_{j+1}-x_j)(x_j+x_{j+1}-x_i-x_{i+1}).
Poly quad_poly(const std::vector<Affine>& x, int i, int j) {
    Poly p = multiply(to_poly(x[i + 1] - x[i]), to_poly(x[j + 1] - x[j]));
    return multiply(p, to_poly((x[j] + x[j + 1]) - (x[i] + x[i + 1])));
}

// Divides out the largest common monomial. Any monomial in x_1, x_2 is
// positive on the admissible region (0 < x_1 < x_2), so this cancellation
// loses no solutions.
Poly strip_common_monomial(const Poly& p) {
    int e1 = -1;
    int e2 = -1;
    for (const auto& [m, c] : p) {
        e1 = (e1 < 0) ? m.first : std::min(e1, m.first);
        e2 = (e2 < 0) ? m.second : std::min(e2, m.second);
    }
    Poly out;
    for (const auto& [m, c] : p) out.emplace(Monomial{m.first - e1, m.second - e2}, c);
    return out;
}

Rational coefficient(const Poly& p, Monomial m) {
    auto it = p.find(m);
    return it == p.end() ? Rational(0) : it->second;
}

std::string step(int k, const Affine& f) {
    return "x_" + std::to_string(k) + " = " + format_affine(f);
}

} // namespace

std::string to_string(SolveStatus status) {
    switch (status) {
    case SolveStatus::unique: return "unique";
    case SolveStatus::one_parameter_family: return "one_parameter_family";
    case SolveStatus::vacuous: return "vacuous";
    }
    throw std::logic_error("unhandled SolveStatus");
}

SolveOutcome solve_spacing(int n) {
    if (n < 1) throw std::invalid_argument("solve_spacing: n must be positive");

    SolveOutcome outcome;
    if (n <= 2) {
        outcome.status = SolveStatus::vacuous;
        return outcome;
    }

    // Intercepts as affine forms in (x_1, x_2). a(T_{k-2}) = a(T_{k-1})
    // factors as (x_{k+1} - x_{k-2}) * (x_{k-1} + x_k - x_{k-2} - x_{k+1}) = 0,
    // and the first factor is positive on a strictly increasing sequence
    // (k+1 > k-2), so each step cancels it and keeps the linear factor.
    std::vector<Affine> x(static_cast<std::size_t>(n) + 1);
    x[0] = {Rational(0), Rational(0), Rational(0)};
    x[1] = {Rational(0), Rational(1), Rational(0)};
    x[2] = {Rational(0), Rational(0), Rational(1)};
    for (int k = 2; k <= n - 1; ++k) {
        x[k + 1] = (x[k - 1] + x[k]) - x[k - 2];
        outcome.steps.push_back(step(k + 1, x[k + 1]));
    }

    if (n == 3) {
        // Closure x_3 = 1 is the only remaining equation; one degree of
        // freedom survives. x_3 = x_1 + x_2 gives x_2 = 1 - x_1, and strict
        // increase 0 < x_1 < x_2 pins x_1 to (0, 1/2).
        const Affine& closure = x[3];
        if (closure.c2.is_zero()) throw std::logic_error("solve_spacing: degenerate closure");
        Affine relation{(Rational(1) - closure.c0) / closure.c2, (Rational(0) - closure.c1) / closure.c2,
                        Rational(0)};
        outcome.steps.push_back("x_2 = " + format_affine(relation));
        outcome.status = SolveStatus::one_parameter_family;
        outcome.family =
            FamilyDescription{"x_2 = " + format_affine(relation), Rational(0), Rational(1, 2)};
        return outcome;
    }

    // a(Q_{0,2}) = a(Q_{1,3}) closes the system for n >= 4. The difference
    // reduces to a single linear relation once common monomials cancel.
    Poly difference = subtract(quad_poly(x, 0, 2), quad_poly(x, 1, 3));
    if (difference.empty()) throw std::logic_error("solve_spacing: quad equation is trivial");
    Poly reduced = strip_common_monomial(difference);
    for (const auto& [m, c] : reduced) {
        if (m.first + m.second > 1) {
            throw std::logic_error("solve_spacing: quad equation did not reduce to a linear relation");
        }
    }
    Rational r2 = coefficient(reduced, {0, 1});
    if (r2.is_zero()) throw std::logic_error("solve_spacing: quad equation does not involve x_2");
    Affine relation{(Rational(0) - coefficient(reduced, {0, 0})) / r2,
                    (Rational(0) - coefficient(reduced, {1, 0})) / r2, Rational(0)};
    outcome.steps.push_back("x_2 = " + format_affine(relation));

    // Closure x_n = 1 with x_2 eliminated pins x_1.
    const Affine& closure = x[n];
    Rational slope = closure.c1 + closure.c2 * relation.c1;
    Rational constant = closure.c0 + closure.c2 * relation.c0;
    if (slope.is_zero()) throw std::logic_error("solve_spacing: closure does not determine x_1");
    Rational x1 = (Rational(1) - constant) / slope;
    Rational x2 = relation.c0 + relation.c1 * x1;
    outcome.steps.push_back("x_1 = " + x1.to_string());
    outcome.steps.push_back("x_2 = " + x2.to_string());

    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) values.push_back(evaluate(x[k], x1, x2));
    for (int k = 0; k < n; ++k) {
        if (!(values[k] < values[k + 1])) {
            throw std::logic_error("solve_spacing: no admissible solution");
        }
    }
    Spacing solution{values};
    if (!satisfies_equal_area_constraints(solution)) {
        throw std::logic_error("solve_spacing: solution fails the constraint system");
    }
    outcome.status = SolveStatus::unique;
    outcome.solution = std::move(solution);
    return outcome;
}

Rational claim_formula(int n, const Rational& x1, const Rational& x2, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("claim_formula: index out of range");
    if (i % 2 == 1) return x1 + Rational((i - 1) / 2) * x2;
    return Rational(i / 2) * x2;
}

bool satisfies_equal_area_constraints(const Spacing& spacing) {
    const int n = spacing.n();
    NetConfig config = NetConfig::with_spacing(spacing);
    for (int i = 0; i + 3 <= n; ++i) {
        if (area_Tboundary(config, i) != area_Tboundary(config, i + 1)) return false;
    }
    if (n >= 4 && area_Q(config, 0, 2) != area_Q(config, 1, 3)) return false;
    return true;
}

std::vector<Spacing> verify_uniqueness_bruteforce(int n, int grid_denominator) {
    if (n < 1 || n > 6) throw std::invalid_argument("verify_uniqueness_bruteforce: n out of range");
    if (grid_denominator < 1 || grid_denominator > 60) {
        throw std::invalid_argument("verify_uniqueness_bruteforce: grid_denominator out of range");
    }

    std::vector<Spacing> admissible;
    std::vector<Rational> values{Rational(0)};
    // Prefix pruning: once x_m is placed, a(T_{m-3}) = a(T_{m-2}) involves
    // only known values and must already hold (areas in product form,
    // common factor 1/2 dropped).
    auto prefix_ok = [&values](int m) {
        if (m < 3) return true;
        const int i = m - 3;
        Rational lhs = (values[i + 1] - values[i]) * (values[i + 2] - values[i]) *
                       (values[i + 2] - values[i + 1]);
        Rational rhs = (values[i + 2] - values[i + 1]) * (values[i + 3] - values[i + 1]) *
                       (values[i + 3] - values[i + 2]);
        return lhs == rhs;
    };
    auto extend = [&](auto&& self, int m, int lowest_numerator) -> void {
        if (m == n) {
            values.push_back(Rational(1));
            if (prefix_ok(n)) {
                Spacing candidate(values);
                if (satisfies_equal_area_constraints(candidate)) admissible.push_back(candidate);
            }
            values.pop_back();
            return;
        }
        for (int c = lowest_numerator; c <= grid_denominator - (n - m); ++c) {
            values.push_back(Rational(c, grid_denominator));
            if (prefix_ok(m)) self(self, m + 1, c + 1);
            values.pop_back();
        }
    };
    extend(extend, 1, 1);
    return admissible;
}

} // namespace stringart
