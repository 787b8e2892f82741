#include "stringart/net.hpp"

#include <stdexcept>
#include <string>

namespace stringart {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

void check_line_index(const NetConfig& config, int i, const char* op) {
    if (i < 0 || i > config.n()) {
        throw std::invalid_argument(std::string(op) + ": line index " + std::to_string(i) + " out of range");
    }
}

} // namespace

Spacing::Spacing(std::vector<Rational> values) : values_(std::move(values)) {
    require(values_.size() >= 2, "spacing: need at least x_0 and x_n");
    require(values_.front().is_zero(), "spacing: x_0 must be 0");
    require(values_.back() == Rational(1), "spacing: x_n must be 1");
    for (std::size_t k = 1; k < values_.size(); ++k) {
        require(values_[k - 1] < values_[k], "spacing: values must be strictly increasing");
    }
}

Spacing Spacing::equidistant(int n) {
    require(n >= 1, "spacing: n must be positive");
    std::vector<Rational> values;
    values.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) values.emplace_back(i, n);
    return Spacing(std::move(values));
}

bool Spacing::is_equidistant() const {
    int count = n();
    for (int i = 1; i < count; ++i) {
        if (values_[static_cast<std::size_t>(i)] != Rational(i, count)) return false;
    }
    return true;
}

NetConfig::NetConfig(int n, FrameParams frame, Spacing spacing)
    : n_(n), frame_(std::move(frame)), spacing_(std::move(spacing)) {
    require(n_ >= 1, "config: n must be positive");
    require(spacing_.n() == n_, "config: spacing has wrong length");
    require(frame_.a.sign() > 0, "config: frame a must be positive");
    if (!frame_.b.is_zero()) {
        require(spacing_.is_equidistant(), "config: a skew frame requires equidistant spacing");
    }
}

std::pair<Point, Point> intercepts(const NetConfig& config, int i) {
    check_line_index(config, i, "intercepts");
    const Rational& xi = config.spacing()[i];
    Point on_frame{config.frame().a * xi, config.frame().b * xi};
    Point on_axis{Rational(0), Rational(1) - xi};
    return {on_frame, on_axis};
}

Point vertex(const NetConfig& config, int i, int j) {
    check_line_index(config, i, "vertex");
    check_line_index(config, j, "vertex");
    if (i == j) throw std::invalid_argument("vertex: lines coincide, no single intersection");
    const Rational& xi = config.spacing()[i];
    const Rational& xj = config.spacing()[j];
    Rational cross = xi * xj;
    Rational one(1);
    Rational y = (one - xi) * (one - xj);
    if (!config.frame().b.is_zero()) y += config.frame().b * cross;
    return {config.frame().a * cross, std::move(y)};
}

LineEq line_through_points(const Point& p, const Point& q) {
    if (p.x == q.x) throw std::domain_error("line_through_points: vertical line has no slope form");
    Rational slope = (q.y - p.y) / (q.x - p.x);
    Rational intercept = p.y - slope * p.x;
    return {std::move(slope), std::move(intercept)};
}

Vec2 segment_vector_a(const NetConfig& config, int i, int j) {
    check_line_index(config, i, "segment_vector_a");
    if (j < 0 || j >= config.n() || j == i || j == i - 1) {
        throw std::invalid_argument("segment_vector_a: j must avoid i-1, i, and N");
    }
    return vertex(config, i, j + 1) - vertex(config, i, j);
}

Vec2 segment_vector_b(const NetConfig& config, int i) {
    if (i < 1 || i > config.n() - 1) {
        throw std::invalid_argument("segment_vector_b: need 1 <= i <= N-1");
    }
    return vertex(config, i, i + 1) - vertex(config, i, i - 1);
}

Rational segment_length_sq(const NetConfig& config, int i) {
    if (!config.frame().is_right() || !config.spacing().is_equidistant()) {
        throw std::domain_error("segment_length_sq: defined for the right frame with equidistant spacing");
    }
    if (i < 1 || i > config.n() - 1) {
        throw std::invalid_argument("segment_length_sq: need 1 <= i <= N-1");
    }
    long long n = config.n();
    long long k = i;
    return Rational(k * k + (n - k) * (n - k), n * n);
}

namespace {

// Row-major triangular index for pairs 0 <= i < j <= N.
std::size_t pair_index(int n, int i, int j) {
    auto in = static_cast<std::size_t>(i);
    auto nn = static_cast<std::size_t>(n);
    return in * nn - in * (in - 1) / 2 + static_cast<std::size_t>(j - i - 1);
}

} // namespace

Net::Net(NetConfig config) : config_(std::move(config)) {
    int n = config_.n();
    vertices_.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            vertices_.push_back(vertex(config_, i, j));
        }
    }
}

const Point& Net::at(int i, int j) const {
    if (i > j) std::swap(i, j);
    if (i < 0 || j > config_.n() || i == j) throw std::invalid_argument("net: bad vertex pair");
    return vertices_[pair_index(config_.n(), i, j)];
}

} // namespace stringart
