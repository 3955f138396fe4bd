#include "poc/ratio.hpp"

namespace poc {

Ratio::Ratio(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_ == 0)
        throw std::domain_error("ratio with zero denominator");
    check_sign();
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

void Ratio::check_sign() const
{
    if (num_ < 0 || den_ < 0)
        throw std::domain_error("ratio must be non-negative");
}

Ratio Ratio::parse(std::string_view text)
{
    auto slash = text.find('/');
    auto parse_int = [&](std::string_view digits) {
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
            throw std::invalid_argument("malformed ratio \"" + std::string(text) + "\"");
        return BigInt(std::string(digits));
    };
    if (slash == std::string_view::npos)
        return {parse_int(text), BigInt(1)};
    return {parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1))};
}

std::string Ratio::to_string() const { return num_.str() + "/" + den_.str(); }

double Ratio::approximate() const
{
    return static_cast<double>(num_) / static_cast<double>(den_);
}

Ratio operator+(const Ratio& a, const Ratio& b) { return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_}; }

Ratio operator-(const Ratio& a, const Ratio& b)
{
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

Ratio operator*(const Ratio& a, const Ratio& b) { return {a.num_ * b.num_, a.den_ * b.den_}; }

Ratio operator/(const Ratio& a, const Ratio& b)
{
    if (b.num_ == 0)
        throw std::domain_error("division by zero ratio");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b)
{
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

} // namespace poc
