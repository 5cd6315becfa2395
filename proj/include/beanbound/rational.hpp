#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "beanbound/bigint.hpp"

namespace beanbound {

/// Exact rational number. Always kept in lowest terms with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    /// Parses "p/q" or "p" (decimal integers, optional leading '-').
    static Rational parse(const std::string& s);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_negative() const { return num_.is_negative(); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }
    Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }
    Rational& operator-=(const Rational& o) { *this = *this - o; return *this; }
    Rational& operator*=(const Rational& o) { *this = *this * o; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    Rational abs() const { return is_negative() ? -*this : *this; }

    double to_double() const {
        double mn, md;
        long en, ed;
        num_.frexp_abs(mn, en);
        den_.frexp_abs(md, ed);
        if (mn == 0.0) return 0.0;
        long diff = en - ed;
        if (diff > 4000) diff = 4000;
        if (diff < -4000) diff = -4000;
        double v = (mn / md) * std::ldexp(1.0, static_cast<int>(diff));
        return num_.is_negative() ? -v : v;
    }

    /// "p/q", or plain "p" when the denominator is 1.
    std::string to_string() const {
        std::string s = num_.to_string();
        if (!(den_ == BigInt(1))) s += "/" + den_.to_string();
        return s;
    }

private:
    BigInt num_, den_;

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        if (den_.is_negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (!(g == BigInt(1))) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }
};

inline Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt::from_string(s), BigInt(1));
    return Rational(BigInt::from_string(s.substr(0, slash)),
                    BigInt::from_string(s.substr(slash + 1)));
}

/// Gaussian rational: exact complex number with rational real/imaginary parts.
/// Needed because the Caratheodory parameters tau2, tau3 range over the
/// complex unit disk and the identity tests must stay exact.
class CRational {
public:
    CRational() = default;
    CRational(long long re) : re_(re) {}
    CRational(Rational re) : re_(std::move(re)) {}
    CRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    const Rational& real() const { return re_; }
    const Rational& imag() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    CRational conj() const { return CRational(re_, -im_); }
    /// |z|^2, exact.
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    friend CRational operator+(const CRational& a, const CRational& b) {
        return CRational(a.re_ + b.re_, a.im_ + b.im_);
    }
    friend CRational operator-(const CRational& a, const CRational& b) {
        return CRational(a.re_ - b.re_, a.im_ - b.im_);
    }
    friend CRational operator*(const CRational& a, const CRational& b) {
        return CRational(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
    }
    friend CRational operator/(const CRational& a, const CRational& b) {
        Rational n2 = b.norm2();
        if (n2.is_zero()) throw std::domain_error("CRational: division by zero");
        return CRational((a.re_ * b.re_ + a.im_ * b.im_) / n2,
                         (a.im_ * b.re_ - a.re_ * b.im_) / n2);
    }
    CRational operator-() const { return CRational(-re_, -im_); }
    CRational& operator+=(const CRational& o) { *this = *this + o; return *this; }
    CRational& operator-=(const CRational& o) { *this = *this - o; return *this; }
    CRational& operator*=(const CRational& o) { *this = *this * o; return *this; }
    CRational& operator/=(const CRational& o) { *this = *this / o; return *this; }

    friend bool operator==(const CRational& a, const CRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const CRational& a, const CRational& b) { return !(a == b); }

    std::string to_string() const {
        return re_.to_string() + (im_.is_negative() ? "" : "+") + im_.to_string() + "i";
    }

private:
    Rational re_, im_;
};

} // namespace beanbound
