#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace hdsb {

// Exact rational with int64 parts, always reduced, denominator positive.
// Large enough for every pairing that occurs at desk scale; all arithmetic
// in this library is exact, there is no floating point anywhere.
class Rat {
    long long num_ = 0;
    long long den_ = 1;

    void reduce() {
        if (den_ == 0) throw std::domain_error("Rat: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

public:
    Rat() = default;
    Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) : num_(n), den_(d) { reduce(); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_integer() const { return den_ == 1; }

    friend Rat operator+(Rat a, Rat b) { return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_); }
    friend Rat operator-(Rat a, Rat b) { return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_); }
    friend Rat operator*(Rat a, Rat b) { return Rat(a.num_ * b.num_, a.den_ * b.den_); }
    friend Rat operator/(Rat a, Rat b) {
        if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
        return Rat(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(Rat a, Rat b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(Rat a, Rat b) { return !(a == b); }
    friend bool operator<(Rat a, Rat b) { return a.num_ * b.den_ < b.num_ * a.den_; }
    friend bool operator<=(Rat a, Rat b) { return a.num_ * b.den_ <= b.num_ * a.den_; }

    friend std::ostream& operator<<(std::ostream& os, Rat r) {
        os << r.num_;
        if (r.den_ != 1) os << '/' << r.den_;
        return os;
    }
};

} // namespace hdsb
