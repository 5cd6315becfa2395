#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace beanbound {

/// Arbitrary-precision signed integer, sign-magnitude with base-2^32 limbs.
/// Covers what exact rational series arithmetic needs: add/sub/mul,
/// Knuth-D divmod, gcd, decimal I/O, double conversion.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    explicit BigInt(const std::string& decimal);

    static BigInt from_string(const std::string& decimal);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    /// Truncated division: a = q*b + r with |r| < |b| and sign(r) = sign(a).
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    BigInt& operator+=(const BigInt& o) { *this = *this + o; return *this; }
    BigInt& operator-=(const BigInt& o) { *this = *this - o; return *this; }
    BigInt& operator*=(const BigInt& o) { *this = *this * o; return *this; }

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b);
    friend bool operator>(const BigInt& a, const BigInt& b) { return b < a; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return !(b < a); }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return !(a < b); }

    static BigInt gcd(BigInt a, BigInt b);

    std::string to_string() const;
    double to_double() const;
    /// Magnitude as m * 2^e with m in [0.5, 1); m = 0 for zero.
    void frexp_abs(double& m, long& e) const;

    std::size_t limb_count() const { return limbs_.size(); }

private:
    // limbs_ little-endian, no trailing zero limbs; sign_ == 0 iff limbs_ empty
    std::vector<uint32_t> limbs_;
    int sign_ = 0;

    void trim();
    static int cmp_abs(const BigInt& a, const BigInt& b);
    static std::vector<uint32_t> add_abs(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_abs(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_abs(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b);
    static void divmod_abs(const std::vector<uint32_t>& a,
                           const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

} // namespace beanbound
