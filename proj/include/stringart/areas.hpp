#pragma once

// Exact area accounting for the pieces the net cuts out of the first
// quadrant.
//
// Adjacent lines l_i, l_{i+1}, l_j, l_{j+1} (i+1 < j) bound the
// quadrilateral Q_{i,j} with vertices P_{i,j}, P_{i+1,j}, P_{i+1,j+1},
// P_{i,j+1}.  Its diagonal P_{i,j+1}P_{i+1,j} splits it into T_{i,j} and
// T'_{i,j}; the other diagonal P_{i,j}P_{i+1,j+1} splits it into Tbar and
// Tbar'.  Boundary triangles T_i have vertices P_{i,i+1}, P_{i,i+2},
// P_{i+1,i+2}.  Every area below is computed from the vertex lattice by
// the shoelace rule, exactly.

#include "stringart/geometry.hpp"
#include "stringart/net.hpp"
#include "stringart/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace stringart {

enum class PieceKind { T, TPrime, TBar, TBarPrime, Q, TBoundary };

struct PieceId {
    PieceKind kind;
    int i;
    int j = -1; // unused for TBoundary

    std::string label() const;
};

// One half of the absolute shoelace value.
Rational triangle_area(const Point& p1, const Point& p2, const Point& p3);
Rational quadrilateral_area(const Point& p1, const Point& p2, const Point& p3, const Point& p4);

// Quadrilateral pieces exist for 0 <= i, i+1 < j, j+1 <= N.
Rational area_T(const NetConfig& config, int i, int j);
Rational area_Tprime(const NetConfig& config, int i, int j);
Rational area_Tbar(const NetConfig& config, int i, int j);
Rational area_Tbarprime(const NetConfig& config, int i, int j);
Rational area_Q(const NetConfig& config, int i, int j);

// Boundary triangles exist for 0 <= i <= N-2.
Rational area_Tboundary(const NetConfig& config, int i);

// Squared length of the diagonal P_{i,j+1}P_{i+1,j} shared by T and T'.
Rational diagonal_length_sq(const NetConfig& config, int i, int j);

// The tiling of the net's interior: N-1 boundary triangles followed by
// the quadrilaterals in (i, j) order.
std::vector<PieceId> tiling_pieces(const NetConfig& config);
Rational piece_area(const NetConfig& config, const PieceId& id);

Rational boundary_triangle_sum(const NetConfig& config);
Rational quad_sum(const NetConfig& config);
Rational diagonal_sum(const NetConfig& config, int d);

// Sum over the full tiling.  For equidistant spacing this is checked
// against the closed form a(N-1)(N+1)/(6N^2) before returning.
Rational total_area(const NetConfig& config);
Rational total_area_closed_form(const NetConfig& config);

// Envelope of the equidistant net as N grows: y = x - 2*sqrt(x) + 1,
// rendering and reports only; the enclosed area below the envelope is
// exactly 1/6.
double envelope_y(double x);
Rational envelope_area();

// (sum of 1..n, sum of squares 1..n), the two identities the total-area
// closed form rests on.
std::pair<BigInt, BigInt> closed_form_sums(long long n);

} // namespace stringart
