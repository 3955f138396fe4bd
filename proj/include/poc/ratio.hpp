#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace poc {

using BigInt = boost::multiprecision::cpp_int;

/// Exact non-negative rational in lowest terms with a positive denominator.
/// Ordering is by cross-multiplication; there is no implicit conversion to
/// floating point.
class Ratio {
public:
    Ratio() : num_(0), den_(1) {}
    Ratio(std::int64_t value) : num_(value), den_(1) { check_sign(); }
    Ratio(BigInt num, BigInt den);
    Ratio(std::int64_t num, std::int64_t den) : Ratio(BigInt(num), BigInt(den)) {}

    /// "p/q" or "p".
    static Ratio parse(std::string_view text);

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    /// Always "p/q", also for integers ("1/1").
    std::string to_string() const;
    /// For display only.
    double approximate() const;

    friend Ratio operator+(const Ratio& a, const Ratio& b);
    friend Ratio operator-(const Ratio& a, const Ratio& b);
    friend Ratio operator*(const Ratio& a, const Ratio& b);
    friend Ratio operator/(const Ratio& a, const Ratio& b);

    friend bool operator==(const Ratio& a, const Ratio& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b);

    friend std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.to_string(); }

private:
    void check_sign() const;

    BigInt num_;
    BigInt den_;
};

} // namespace poc
