#pragma once

// String-art line net.
//
// N+1 lines l_0..l_N connect intercepts X_i = (x_i*a, x_i*b) on one frame
// axis to Y_i = (0, 1 - x_i) on the other, where 0 = x_0 < x_1 < ... <
// x_N = 1 is the spacing function.  The right frame is (a, b) = (1, 0);
// b < 0 gives the obtuse mirror.  A skew frame (b != 0) is only defined
// together with equidistant spacing x_i = i/N.
//
// Lines l_i and l_j (i != j) meet in exactly one point P_{i,j}; the net
// stores the full vertex lattice.

#include "stringart/geometry.hpp"
#include "stringart/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace stringart {

struct FrameParams {
    Rational a;
    Rational b;

    static FrameParams right() { return {Rational(1), Rational(0)}; }
    bool is_right() const { return a == Rational(1) && b.is_zero(); }

    friend bool operator==(const FrameParams&, const FrameParams&) = default;
};

// Strictly increasing x_0 = 0 < x_1 < ... < x_n = 1.
class Spacing {
public:
    explicit Spacing(std::vector<Rational> values);

    static Spacing equidistant(int n);

    int n() const { return static_cast<int>(values_.size()) - 1; }
    const Rational& operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
    const std::vector<Rational>& values() const { return values_; }
    bool is_equidistant() const;

    friend bool operator==(const Spacing&, const Spacing&) = default;

private:
    std::vector<Rational> values_;
};

class NetConfig {
public:
    NetConfig(int n, FrameParams frame, Spacing spacing);

    static NetConfig equidistant(int n) { return NetConfig(n, FrameParams::right(), Spacing::equidistant(n)); }
    static NetConfig with_frame(int n, FrameParams frame) { return NetConfig(n, frame, Spacing::equidistant(n)); }
    static NetConfig with_spacing(Spacing spacing) {
        int n = spacing.n();
        return NetConfig(n, FrameParams::right(), std::move(spacing));
    }

    int n() const { return n_; }
    const FrameParams& frame() const { return frame_; }
    const Spacing& spacing() const { return spacing_; }

private:
    int n_;
    FrameParams frame_;
    Spacing spacing_;
};

// (X_i, Y_i) for 0 <= i <= N.
std::pair<Point, Point> intercepts(const NetConfig& config, int i);

// Intersection of l_i and l_j, closed form
//   P_{i,j} = (a x_i x_j, (1 - x_i)(1 - x_j) + b x_i x_j).
// Symmetric in (i, j); i == j is an error.
Point vertex(const NetConfig& config, int i, int j);

// Slope/intercept form through two points with distinct x coordinates;
// vertical input is an error.  l_0 (the segment x = 0) is the one net
// line this cannot represent.
struct LineEq {
    Rational slope;
    Rational intercept;

    friend bool operator==(const LineEq&, const LineEq&) = default;
};
LineEq line_through_points(const Point& p, const Point& q);

// a_i^{j+} = P_{i,j+1} - P_{i,j}, defined for j not in {i-1, i, N}.
Vec2 segment_vector_a(const NetConfig& config, int i, int j);

// b_i = P_{i,i+1} - P_{i,i-1}, defined for 1 <= i <= N-1.
Vec2 segment_vector_b(const NetConfig& config, int i);

// s_i^2 = (i^2 + (N-i)^2) / N^2 for the right frame with equidistant
// spacing (1 <= i <= N-1); this is N^2 times the squared a-vector norm,
// a common scale that cancels in every comparison made of it.
Rational segment_length_sq(const NetConfig& config, int i);

// Vertex lattice, stored once per unordered pair 0 <= i < j <= N.
class Net {
public:
    explicit Net(NetConfig config);

    const NetConfig& config() const { return config_; }
    int n() const { return config_.n(); }
    std::size_t size() const { return vertices_.size(); }

    // Symmetric lookup; i == j is an error.
    const Point& at(int i, int j) const;

private:
    NetConfig config_;
    std::vector<Point> vertices_;
};

inline Net build_net(const NetConfig& config) { return Net(config); }

} // namespace stringart
