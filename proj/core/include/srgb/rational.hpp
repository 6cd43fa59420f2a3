#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace srgb {

/// Exact rational scalar for the connection/curvature table algebra. The
/// table chain (Koszul, projections, affine combination, curvature products)
/// is closed over Q when the deformation parameter and L are rational, which
/// makes table comparisons exact instead of ulp-sensitive.
class Rat {
  public:
    Rat() = default;
    Rat(long long n) : num_(n), den_(1) {}
    Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

    static Rat from_ratio(long long n, long long d) { return Rat(n, d); }

    long long num() const { return num_; }
    long long den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rat operator-() const { return raw(-num_, den_); }
    Rat operator+(const Rat& o) const {
        return make(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rat operator-(const Rat& o) const {
        return make(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
    }
    Rat operator*(const Rat& o) const { return make(i128(num_) * o.num_, i128(den_) * o.den_); }
    Rat operator/(const Rat& o) const {
        if (o.num_ == 0) throw std::domain_error("Rat: division by zero");
        return make(i128(num_) * o.den_, i128(den_) * o.num_);
    }
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }

    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool is_zero() const { return num_ == 0; }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

  private:
    using i128 = __int128;

    static Rat make(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("Rat: zero denominator");
        if (d < 0) { n = -n; d = -d; }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("Rat: overflow");
        return raw(static_cast<long long>(n), static_cast<long long>(d));
    }
    static Rat raw(long long n, long long d) {
        Rat r;
        r.num_ = n; r.den_ = d;
        return r;
    }
    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) { i128 t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }
    void normalize() { *this = make(num_, den_); }

    long long num_ = 0;
    long long den_ = 1;
};

inline Rat abs(const Rat& r) { return r.num() < 0 ? -r : r; }

}  // namespace srgb
