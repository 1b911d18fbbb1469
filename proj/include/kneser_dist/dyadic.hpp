#pragma once

// Exact numbers of the form numerator / 2^exponent.  Canonical form keeps the
// numerator odd (or zero) whenever the exponent is positive.

#include "kneser_dist/numeric.hpp"

#include <compare>
#include <cstdint>
#include <utility>

namespace kneser_dist {

class DyadicRational {
public:
    DyadicRational() : num_(0), exp_(0) {}
    DyadicRational(BigInt numerator, std::int64_t exponent)
        : num_(std::move(numerator)), exp_(exponent) {
        if (exponent < 0) throw std::invalid_argument("DyadicRational: negative exponent");
        canonicalize();
    }
    explicit DyadicRational(long v) : num_(v), exp_(0) {}
    explicit DyadicRational(BigInt v) : num_(std::move(v)), exp_(0) {}

    static DyadicRational half_pow(std::int64_t e) { return DyadicRational(BigInt(1), e); }

    const BigInt& numerator() const { return num_; }
    std::int64_t exponent() const { return exp_; }

    Rational to_rational() const { return Rational(num_, pow2(exp_)); }

    DyadicRational operator+(const DyadicRational& o) const {
        const std::int64_t e = exp_ > o.exp_ ? exp_ : o.exp_;
        BigInt n = (num_ << static_cast<unsigned>(e - exp_)) +
                   (o.num_ << static_cast<unsigned>(e - o.exp_));
        return DyadicRational(std::move(n), e);
    }
    DyadicRational operator-(const DyadicRational& o) const {
        const std::int64_t e = exp_ > o.exp_ ? exp_ : o.exp_;
        BigInt n = (num_ << static_cast<unsigned>(e - exp_)) -
                   (o.num_ << static_cast<unsigned>(e - o.exp_));
        return DyadicRational(std::move(n), e);
    }
    DyadicRational operator*(const DyadicRational& o) const {
        return DyadicRational(num_ * o.num_, exp_ + o.exp_);
    }
    DyadicRational operator*(const BigInt& k) const { return DyadicRational(num_ * k, exp_); }
    DyadicRational& operator+=(const DyadicRational& o) { return *this = *this + o; }

    std::strong_ordering operator<=>(const DyadicRational& o) const {
        const std::int64_t e = exp_ > o.exp_ ? exp_ : o.exp_;
        const BigInt a = num_ << static_cast<unsigned>(e - exp_);
        const BigInt b = o.num_ << static_cast<unsigned>(e - o.exp_);
        if (a < b) return std::strong_ordering::less;
        if (a > b) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    bool operator==(const DyadicRational& o) const { return (*this <=> o) == 0; }

    bool operator<(long v) const { return to_rational() < v; }
    bool operator<=(long v) const { return to_rational() <= v; }

    std::string decimal(int sig = 10) const { return decimal_string(to_rational(), sig); }
    std::string fraction() const { return num_.str() + "/" + pow2(exp_).str(); }

private:
    void canonicalize() {
        if (num_ == 0) { exp_ = 0; return; }
        while (exp_ > 0 && (num_ & 1) == 0) { num_ >>= 1; --exp_; }
    }

    BigInt num_;
    std::int64_t exp_;  // value = num_ / 2^exp_
};

}  // namespace kneser_dist
