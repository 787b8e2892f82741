#include "stringart/areas.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace stringart {

namespace {

const Rational half(1, 2);

void check_quad_indices(const NetConfig& config, int i, int j, const char* op) {
    if (i < 0 || j < i + 2 || j + 1 > config.n()) {
        throw std::invalid_argument(std::string(op) + ": need 0 <= i, i+1 < j, j+1 <= N");
    }
}

void check_boundary_index(const NetConfig& config, int i, const char* op) {
    if (i < 0 || i > config.n() - 2) {
        throw std::invalid_argument(std::string(op) + ": need 0 <= i <= N-2");
    }
}

} // namespace

std::string PieceId::label() const {
    switch (kind) {
        case PieceKind::T: return "T(" + std::to_string(i) + "," + std::to_string(j) + ")";
        case PieceKind::TPrime: return "T'(" + std::to_string(i) + "," + std::to_string(j) + ")";
        case PieceKind::TBar: return "Tbar(" + std::to_string(i) + "," + std::to_string(j) + ")";
        case PieceKind::TBarPrime: return "Tbar'(" + std::to_string(i) + "," + std::to_string(j) + ")";
        case PieceKind::Q: return "Q(" + std::to_string(i) + "," + std::to_string(j) + ")";
        case PieceKind::TBoundary: return "T_" + std::to_string(i);
    }
    return {};
}

Rational triangle_area(const Point& p1, const Point& p2, const Point& p3) {
    Rational twice = p1.x * (p2.y - p3.y) + p2.x * (p3.y - p1.y) + p3.x * (p1.y - p2.y);
    return abs(twice) * half;
}

Rational quadrilateral_area(const Point& p1, const Point& p2, const Point& p3, const Point& p4) {
    Rational twice = (p1.x * p2.y - p2.x * p1.y) + (p2.x * p3.y - p3.x * p2.y) +
                     (p3.x * p4.y - p4.x * p3.y) + (p4.x * p1.y - p1.x * p4.y);
    return abs(twice) * half;
}

Rational area_T(const NetConfig& config, int i, int j) {
    check_quad_indices(config, i, j, "area_T");
    return triangle_area(vertex(config, i, j), vertex(config, i + 1, j), vertex(config, i, j + 1));
}

Rational area_Tprime(const NetConfig& config, int i, int j) {
    check_quad_indices(config, i, j, "area_Tprime");
    return triangle_area(vertex(config, i + 1, j), vertex(config, i, j + 1), vertex(config, i + 1, j + 1));
}

Rational area_Tbar(const NetConfig& config, int i, int j) {
    check_quad_indices(config, i, j, "area_Tbar");
    return triangle_area(vertex(config, i, j), vertex(config, i + 1, j), vertex(config, i + 1, j + 1));
}

Rational area_Tbarprime(const NetConfig& config, int i, int j) {
    check_quad_indices(config, i, j, "area_Tbarprime");
    return triangle_area(vertex(config, i, j), vertex(config, i + 1, j + 1), vertex(config, i, j + 1));
}

Rational area_Q(const NetConfig& config, int i, int j) {
    check_quad_indices(config, i, j, "area_Q");
    return quadrilateral_area(vertex(config, i, j), vertex(config, i + 1, j), vertex(config, i + 1, j + 1),
                              vertex(config, i, j + 1));
}

Rational area_Tboundary(const NetConfig& config, int i) {
    check_boundary_index(config, i, "area_Tboundary");
    return triangle_area(vertex(config, i, i + 1), vertex(config, i, i + 2), vertex(config, i + 1, i + 2));
}

Rational diagonal_length_sq(const NetConfig& config, int i, int j) {
    check_quad_indices(config, i, j, "diagonal_length_sq");
    return (vertex(config, i, j + 1) - vertex(config, i + 1, j)).length_sq();
}

std::vector<PieceId> tiling_pieces(const NetConfig& config) {
    std::vector<PieceId> pieces;
    int n = config.n();
    for (int i = 0; i + 2 <= n; ++i) pieces.push_back({PieceKind::TBoundary, i});
    for (int i = 0; i + 3 <= n; ++i) {
        for (int j = i + 2; j + 1 <= n; ++j) pieces.push_back({PieceKind::Q, i, j});
    }
    return pieces;
}

Rational piece_area(const NetConfig& config, const PieceId& id) {
    switch (id.kind) {
        case PieceKind::T: return area_T(config, id.i, id.j);
        case PieceKind::TPrime: return area_Tprime(config, id.i, id.j);
        case PieceKind::TBar: return area_Tbar(config, id.i, id.j);
        case PieceKind::TBarPrime: return area_Tbarprime(config, id.i, id.j);
        case PieceKind::Q: return area_Q(config, id.i, id.j);
        case PieceKind::TBoundary: return area_Tboundary(config, id.i);
    }
    throw std::invalid_argument("piece_area: unknown piece kind");
}

Rational boundary_triangle_sum(const NetConfig& config) {
    Rational sum;
    for (int i = 0; i + 2 <= config.n(); ++i) sum += area_Tboundary(config, i);
    return sum;
}

Rational quad_sum(const NetConfig& config) {
    Rational sum;
    for (int i = 0; i + 3 <= config.n(); ++i) {
        for (int j = i + 2; j + 1 <= config.n(); ++j) sum += area_Q(config, i, j);
    }
    return sum;
}

Rational diagonal_sum(const NetConfig& config, int d) {
    if (d < 2 || d > config.n() - 1) {
        throw std::invalid_argument("diagonal_sum: need 2 <= d <= N-1");
    }
    Rational sum;
    for (int i = 0; i + d + 1 <= config.n(); ++i) sum += area_Q(config, i, i + d);
    return sum;
}

Rational total_area_closed_form(const NetConfig& config) {
    if (!config.spacing().is_equidistant()) {
        throw std::domain_error("total_area_closed_form: requires equidistant spacing");
    }
    long long n = config.n();
    return config.frame().a * Rational((n - 1) * (n + 1), 6 * n * n);
}

Rational total_area(const NetConfig& config) {
    Rational total = boundary_triangle_sum(config) + quad_sum(config);
    if (config.spacing().is_equidistant() && total != total_area_closed_form(config)) {
        throw std::logic_error("total_area: closed form mismatch");
    }
    return total;
}

double envelope_y(double x) { return x - 2.0 * std::sqrt(x) + 1.0; }

Rational envelope_area() { return Rational(1, 6); }

std::pair<BigInt, BigInt> closed_form_sums(long long n) {
    if (n < 1) throw std::invalid_argument("closed_form_sums: n must be positive");
    BigInt bn(n);
    BigInt linear = bn * (bn + 1) / 2;
    BigInt square = bn * (bn + 1) * (2 * bn + 1) / 6;
    return {linear, square};
}

} // namespace stringart
