#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "errors.hpp"

namespace essvar {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. Always normalized: positive denominator,
// numerator and denominator coprime, zero stored as 0/1.
class Rational {
public:
    Rational() = default;
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long long n) : v_(static_cast<std::int64_t>(n)) {}
    Rational(BigInt n) : v_(std::move(n)) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) {
            throw ZeroDenominator("rational with zero denominator");
        }
        v_ = Value(num);
        v_ /= Value(den);  // division reduces and keeps the denominator positive
    }

    // Accepts "a" or "a/b", each side an optionally signed decimal integer.
    static Rational from_string(std::string_view text) {
        const auto slash = text.find('/');
        if (slash == std::string_view::npos) {
            return Rational(parse_integer(text));
        }
        BigInt num = parse_integer(text.substr(0, slash));
        BigInt den = parse_integer(text.substr(slash + 1));
        return Rational(num, den);
    }

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return v_ < 0; }
    bool is_integer() const { return denominator() == 1; }

    Rational operator-() const { return Rational(Value(-v_)); }

    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        v_ -= o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        v_ *= o.v_;
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) {
            throw ZeroDenominator("division by zero");
        }
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    // "a" when integral, otherwise "a/b".
    std::string str() const {
        if (is_integer()) {
            return numerator().str();
        }
        return numerator().str() + "/" + denominator().str();
    }

private:
    using Value = boost::multiprecision::cpp_rational;

    explicit Rational(Value v) : v_(std::move(v)) {}

    static BigInt parse_integer(std::string_view text) {
        std::size_t i = 0;
        bool neg = false;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
            neg = text[i] == '-';
            ++i;
        }
        if (i == text.size()) {
            throw Error("invalid rational literal: '" + std::string(text) + "'");
        }
        BigInt value = 0;
        for (; i < text.size(); ++i) {
            if (text[i] < '0' || text[i] > '9') {
                throw Error("invalid rational literal: '" + std::string(text) + "'");
            }
            value = value * 10 + (text[i] - '0');
        }
        return neg ? BigInt(-value) : value;
    }

    Value v_;
};

inline Rational abs(const Rational& r) { return r.is_negative() ? -r : r; }

inline Rational pow(const Rational& base, int exponent) {
    Rational result = 1;
    for (int i = 0; i < exponent; ++i) {
        result *= base;
    }
    return result;
}

}  // namespace essvar
