#pragma once

// Plane primitives over exact rationals.

#include "stringart/rational.hpp"

#include <string>

namespace stringart {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point&, const Point&) = default;
};

struct Vec2 {
    Rational dx;
    Rational dy;

    Rational length_sq() const { return dx * dx + dy * dy; }

    friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline Vec2 operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
inline Vec2 operator*(const Rational& s, const Vec2& v) { return {s * v.dx, s * v.dy}; }

inline std::string to_string(const Point& p) {
    return "(" + p.x.to_string() + ", " + p.y.to_string() + ")";
}

inline std::string to_string(const Vec2& v) {
    return "(" + v.dx.to_string() + ", " + v.dy.to_string() + ")";
}

} // namespace stringart
