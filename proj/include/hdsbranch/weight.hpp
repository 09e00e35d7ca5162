#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hdsbranch/rational.hpp"

namespace hdsb {

// Weight in a fixed orthonormal basis, stored as doubled integer coordinates:
// a stored coordinate c represents c/2.  The doubling makes rho and the
// half-sums (gamma_i +- gamma_j)/2 exact integers.
class Weight {
    std::vector<long long> c_;

public:
    Weight() = default;
    explicit Weight(std::size_t n) : c_(n, 0) {}
    explicit Weight(std::vector<long long> doubled) : c_(std::move(doubled)) {}

    // From undoubled integer coordinates.
    static Weight from_plain(const std::vector<long long>& plain) {
        std::vector<long long> d(plain.size());
        for (std::size_t i = 0; i < plain.size(); ++i) d[i] = 2 * plain[i];
        return Weight(std::move(d));
    }
    static Weight from_plain(std::initializer_list<long long> plain) {
        return from_plain(std::vector<long long>(plain));
    }

    std::size_t rank() const { return c_.size(); }
    long long operator[](std::size_t i) const { return c_[i]; }
    long long& operator[](std::size_t i) { return c_[i]; }
    const std::vector<long long>& stored() const { return c_; }

    bool is_zero() const {
        for (long long x : c_) if (x != 0) return false;
        return true;
    }

    friend Weight operator+(const Weight& a, const Weight& b) {
        check_rank(a, b);
        Weight r(a.rank());
        for (std::size_t i = 0; i < a.rank(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend Weight operator-(const Weight& a, const Weight& b) {
        check_rank(a, b);
        Weight r(a.rank());
        for (std::size_t i = 0; i < a.rank(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend Weight operator-(const Weight& a) {
        Weight r(a.rank());
        for (std::size_t i = 0; i < a.rank(); ++i) r.c_[i] = -a.c_[i];
        return r;
    }
    friend Weight operator*(long long k, const Weight& a) {
        Weight r(a.rank());
        for (std::size_t i = 0; i < a.rank(); ++i) r.c_[i] = k * a.c_[i];
        return r;
    }

    // Lexicographic order on stored coordinates; this is the total order used
    // for every "lowest root" / "maximal weight" selection in the library.
    friend bool operator<(const Weight& a, const Weight& b) { return a.c_ < b.c_; }
    friend bool operator==(const Weight& a, const Weight& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Weight& a, const Weight& b) { return a.c_ != b.c_; }

    // 4*(a,b) under the /2 convention; exact integer.
    friend long long pairing4(const Weight& a, const Weight& b) {
        check_rank(a, b);
        long long s = 0;
        for (std::size_t i = 0; i < a.rank(); ++i) s += a.c_[i] * b.c_[i];
        return s;
    }

    // (a,b) as an exact rational.
    friend Rat pairing(const Weight& a, const Weight& b) { return Rat(pairing4(a, b), 4); }

    // Undoubled display: "x" or "x/2" per coordinate.
    std::string plain_string() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) os << ',';
            if (c_[i] % 2 == 0) os << c_[i] / 2;
            else os << c_[i] << "/2";
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Weight& w) {
        return os << '(' << w.plain_string() << ')';
    }

private:
    static void check_rank(const Weight& a, const Weight& b) {
        if (a.rank() != b.rank()) throw std::invalid_argument("Weight: rank mismatch");
    }
};

} // namespace hdsb
