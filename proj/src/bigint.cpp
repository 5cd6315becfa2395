#include "beanbound/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace beanbound {

namespace {
constexpr uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    // avoid overflow on LLONG_MIN
    unsigned long long m = v > 0 ? static_cast<unsigned long long>(v)
                                 : ~static_cast<unsigned long long>(v) + 1ull;
    while (m) {
        limbs_.push_back(static_cast<uint32_t>(m & 0xffffffffu));
        m >>= 32;
    }
}

BigInt::BigInt(const std::string& decimal) { *this = from_string(decimal); }

BigInt BigInt::from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("BigInt: empty string");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: no digits");
    BigInt r;
    BigInt chunk_scale(1000000000ll);
    // consume in 9-digit chunks: r = r*10^k + chunk
    while (i < s.size()) {
        std::size_t take = std::min<std::size_t>(9, s.size() - i);
        uint64_t chunk = 0;
        uint64_t scale = 1;
        for (std::size_t k = 0; k < take; ++k) {
            char c = s[i + k];
            if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
            chunk = chunk * 10 + static_cast<uint64_t>(c - '0');
            scale *= 10;
        }
        r = r * BigInt(static_cast<long long>(scale)) + BigInt(static_cast<long long>(chunk));
        i += take;
    }
    if (neg && !r.is_zero()) r.sign_ = -1;
    return r;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) sign_ = 0;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

int BigInt::cmp_abs(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_abs(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<uint32_t> out(big.size() + 1, 0);
    uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0u);
        out[i] = static_cast<uint32_t>(s & 0xffffffffu);
        carry = s >> 32;
    }
    out[big.size()] = static_cast<uint32_t>(carry);
    return out;
}

std::vector<uint32_t> BigInt::sub_abs(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out(a.size(), 0);
    int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int64_t d = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0u);
        if (d < 0) {
            d += static_cast<int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<uint32_t>(d);
    }
    return out;
}

std::vector<uint32_t> BigInt::mul_abs(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> out(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        uint64_t ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = out[i + j] + ai * b[j] + carry;
            out[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            uint64_t cur = out[k] + carry;
            out[k] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    return out;
}

// Knuth algorithm D on normalized limbs.
void BigInt::divmod_abs(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    q.clear();
    r.clear();
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    if (a.empty()) return;
    if (b.size() == 1) {
        uint64_t d = b[0];
        q.assign(a.size(), 0);
        uint64_t rem = 0;
        for (std::size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        if (rem) r.push_back(static_cast<uint32_t>(rem));
        return;
    }
    if (a.size() < b.size()) {
        r = a;
        return;
    }

    int shift = 0;
    {
        uint32_t top = b.back();
        while (!(top & 0x80000000u)) {
            top <<= 1;
            ++shift;
        }
    }
    auto shl = [&](const std::vector<uint32_t>& v) {
        std::vector<uint32_t> out(v.size() + 1, 0);
        uint32_t carry = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            out[i] = (v[i] << shift) | carry;
            carry = shift ? static_cast<uint32_t>(static_cast<uint64_t>(v[i]) >> (32 - shift)) : 0;
        }
        out[v.size()] = carry;
        return out;
    };
    std::vector<uint32_t> u = shl(a);
    std::vector<uint32_t> v = shl(b);
    while (!v.empty() && v.back() == 0) v.pop_back();
    const std::size_t n = v.size();
    const std::size_t m = u.size() - n; // u has one extra limb from shl
    q.assign(m, 0);

    const uint64_t vtop = v[n - 1];
    const uint64_t vsec = n >= 2 ? v[n - 2] : 0;
    for (std::size_t j = m; j-- > 0;) {
        uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        uint64_t qhat = num / vtop;
        uint64_t rhat = num % vtop;
        if (qhat >= kBase) {
            qhat = kBase - 1;
            rhat = num - qhat * vtop;
        }
        while (rhat < kBase && qhat * vsec > ((rhat << 32) | (n >= 2 ? u[j + n - 2] : 0))) {
            --qhat;
            rhat += vtop;
        }
        // multiply-subtract qhat*v from u[j..j+n]
        int64_t borrow = 0;
        uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            uint64_t p = qhat * v[i] + carry;
            carry = p >> 32;
            int64_t d = static_cast<int64_t>(u[i + j]) - borrow - static_cast<int64_t>(p & 0xffffffffu);
            if (d < 0) {
                d += static_cast<int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<uint32_t>(d);
        }
        int64_t d = static_cast<int64_t>(u[j + n]) - borrow - static_cast<int64_t>(carry);
        if (d < 0) {
            // qhat one too large: add v back
            d += static_cast<int64_t>(kBase);
            --qhat;
            uint64_t c2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<uint32_t>(s & 0xffffffffu);
                c2 = s >> 32;
            }
            d += static_cast<int64_t>(c2);
            d &= static_cast<int64_t>(kBase) - 1;
        }
        u[j + n] = static_cast<uint32_t>(d);
        q[j] = static_cast<uint32_t>(qhat);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    // remainder = u[0..n) >> shift
    r.assign(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(n));
    if (shift) {
        uint32_t carry = 0;
        for (std::size_t i = r.size(); i-- > 0;) {
            uint32_t cur = r[i];
            r[i] = (cur >> shift) | carry;
            carry = static_cast<uint32_t>(static_cast<uint64_t>(cur) << (32 - shift));
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
        r.limbs_ = BigInt::add_abs(a.limbs_, b.limbs_);
        r.sign_ = a.sign_;
    } else {
        int c = BigInt::cmp_abs(a, b);
        if (c == 0) return BigInt();
        const BigInt& big = c > 0 ? a : b;
        const BigInt& small = c > 0 ? b : a;
        r.limbs_ = BigInt::sub_abs(big.limbs_, small.limbs_);
        r.sign_ = big.sign_;
    }
    r.trim();
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.sign_ == 0 || b.sign_ == 0) return r;
    r.limbs_ = BigInt::mul_abs(a.limbs_, b.limbs_);
    r.sign_ = a.sign_ * b.sign_;
    r.trim();
    return r;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    std::vector<uint32_t> ql, rl;
    divmod_abs(a.limbs_, b.limbs_, ql, rl);
    q.limbs_ = std::move(ql);
    q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
    r.limbs_ = std::move(rl);
    r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
}

bool operator<(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_;
    int c = BigInt::cmp_abs(a, b);
    return a.sign_ >= 0 ? c < 0 : c > 0;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return BigInt(0);
    return a;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::vector<uint32_t> chunks;
    std::vector<uint32_t> cur = limbs_;
    while (!cur.empty()) {
        // divide by 10^9
        uint64_t rem = 0;
        for (std::size_t i = cur.size(); i-- > 0;) {
            uint64_t v = (rem << 32) | cur[i];
            cur[i] = static_cast<uint32_t>(v / 1000000000ull);
            rem = v % 1000000000ull;
        }
        while (!cur.empty() && cur.back() == 0) cur.pop_back();
        chunks.push_back(static_cast<uint32_t>(rem));
    }
    std::string s = sign_ < 0 ? "-" : "";
    s += std::to_string(chunks.back());
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::string part = std::to_string(chunks[i]);
        s += std::string(9 - part.size(), '0') + part;
    }
    return s;
}

void BigInt::frexp_abs(double& m, long& e) const {
    if (sign_ == 0) {
        m = 0.0;
        e = 0;
        return;
    }
    // take up to top 3 limbs (96 bits) as mantissa
    double v = 0.0;
    std::size_t top = limbs_.size();
    std::size_t used = std::min<std::size_t>(3, top);
    for (std::size_t i = 0; i < used; ++i)
        v = v * 4294967296.0 + static_cast<double>(limbs_[top - 1 - i]);
    int ex = 0;
    m = std::frexp(v, &ex);
    e = static_cast<long>(ex) + 32l * static_cast<long>(top - used);
}

double BigInt::to_double() const {
    double m;
    long e;
    frexp_abs(m, e);
    double v = std::ldexp(m, static_cast<int>(std::min<long>(e, 4096)));
    return sign_ < 0 ? -v : v;
}

} // namespace beanbound
