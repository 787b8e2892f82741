#pragma once

// Exact rational scalar on an unbounded integer.
//
// Canonical form is maintained after every operation: denominator > 0,
// gcd(|num|, den) == 1, and zero is stored as 0/1.  Equality is exact
// memberwise comparison of the canonical members; ordering is exact
// cross-multiplication.  There is no floating point anywhere in the
// arithmetic.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace stringart {

using BigInt = boost::multiprecision::cpp_int;

class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    friend Rational operator-(const Rational& a) {
        return Rational(canonical{}, -a.num_, a.den_);
    }

    // Knuth 4.5.1: reduce through gcd(den, den) so intermediates stay small
    // and the result is canonical without a final renormalization.
    friend Rational operator+(const Rational& a, const Rational& b) {
        BigInt d1 = gcd_(a.den_, b.den_);
        if (d1 == 1) {
            return Rational(canonical{}, a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
        }
        BigInt t = a.num_ * (b.den_ / d1) + b.num_ * (a.den_ / d1);
        BigInt d2 = gcd_(t, d1);
        return Rational(canonical{}, t / d2, (a.den_ / d1) * (b.den_ / d2));
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        BigInt d1 = gcd_(a.den_, b.den_);
        if (d1 == 1) {
            return Rational(canonical{}, a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
        }
        BigInt t = a.num_ * (b.den_ / d1) - b.num_ * (a.den_ / d1);
        BigInt d2 = gcd_(t, d1);
        return Rational(canonical{}, t / d2, (a.den_ / d1) * (b.den_ / d2));
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        BigInt d1 = gcd_(a.num_, b.den_);
        BigInt d2 = gcd_(b.num_, a.den_);
        return Rational(canonical{}, (a.num_ / d1) * (b.num_ / d2), (a.den_ / d2) * (b.den_ / d1));
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_.is_zero()) throw std::domain_error("rational: division by zero");
        BigInt d1 = gcd_(a.num_, b.num_);
        BigInt d2 = gcd_(a.den_, b.den_);
        BigInt n = (a.num_ / d1) * (b.den_ / d2);
        BigInt d = (a.den_ / d2) * (b.num_ / d1);
        if (d < 0) { n = -n; d = -d; }
        return Rational(canonical{}, std::move(n), std::move(d));
    }

    Rational& operator+=(const Rational& b) { *this = *this + b; return *this; }
    Rational& operator-=(const Rational& b) { *this = *this - b; return *this; }
    Rational& operator*=(const Rational& b) { *this = *this * b; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int sa = a.num_.sign(), sb = b.num_.sign();
        if (sa != sb) return sa <=> sb;
        BigInt lhs = a.num_ * b.den_;
        BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // "p/q" with the "/q" omitted for integers; always canonical.
    std::string to_string() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    // Accepts "p" or "p/q" with optional leading '-' on either part.
    static Rational from_string(std::string_view text);

    double to_double() const {
        return num_.convert_to<double>() / den_.convert_to<double>();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.to_string();
    }

private:
    struct canonical {};
    Rational(canonical, BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {}

    static BigInt gcd_(const BigInt& a, const BigInt& b) {
        return boost::multiprecision::gcd(a, b);
    }

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("rational: division by zero");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        if (num_.is_zero()) { den_ = 1; return; }
        BigInt g = gcd_(num_, den_);
        if (g != 1) { num_ /= g; den_ /= g; }
    }

    BigInt num_;
    BigInt den_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

inline BigInt parse_integer(std::string_view s) {
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw std::invalid_argument("rational: malformed integer");
    BigInt v{std::string(s)};
    return neg ? BigInt(-v) : v;
}

} // namespace detail

inline Rational Rational::from_string(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(detail::parse_integer(text));
    }
    BigInt n = detail::parse_integer(text.substr(0, slash));
    BigInt d = detail::parse_integer(text.substr(slash + 1));
    return Rational(std::move(n), std::move(d));
}

// Exact value of a double: every finite double is mantissa * 2^exponent.
inline Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw std::domain_error("rational: value is not finite");
    if (x == 0.0) return Rational();
    int exp = 0;
    double m = std::frexp(x, &exp);
    auto mant = static_cast<long long>(std::ldexp(m, 53));
    exp -= 53;
    BigInt num(mant);
    if (exp >= 0) return Rational(num << exp);
    return Rational(std::move(num), BigInt(1) << -exp);
}

// Best rational approximation of `value` among all fractions with
// denominator <= max_denominator, by exact distance; continued-fraction
// convergents plus the final semiconvergent are the only candidates.
// Exact ties resolve to the smaller denominator.
inline Rational approximate_real(double value, long long max_denominator) {
    if (max_denominator < 1) throw std::invalid_argument("approximate_real: max_denominator must be positive");
    Rational exact = rational_from_double(value);
    if (exact.denominator() <= max_denominator) return exact;

    const bool negative = exact.sign() < 0;
    const Rational target = abs(exact);
    const BigInt bound(max_denominator);

    BigInt p = target.numerator(), q = target.denominator();
    BigInt h1 = 1, h2 = 0, k1 = 0, k2 = 1;
    while (!q.is_zero()) {
        BigInt a = p / q;
        BigInt h = a * h1 + h2;
        BigInt k = a * k1 + k2;
        if (k > bound) {
            Rational best(h1, k1);
            BigInt t = (bound - k2) / k1;
            if (t > 0) {
                Rational semi(t * h1 + h2, t * k1 + k2);
                Rational db = abs(target - best);
                Rational ds = abs(target - semi);
                if (ds < db || (ds == db && semi.denominator() < best.denominator())) best = semi;
            }
            return negative ? -best : best;
        }
        h2 = std::exchange(h1, h);
        k2 = std::exchange(k1, k);
        BigInt r = p - a * q;
        p = std::exchange(q, r);
    }
    // Terminated within the bound: the value itself is representable.
    Rational best(h1, k1);
    return negative ? -best : best;
}

} // namespace stringart
