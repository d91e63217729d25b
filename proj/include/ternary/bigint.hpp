#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ternary {

// Unsigned big integer, little-endian 64-bit limbs. Schoolbook arithmetic;
// operands in this library stay below a few thousand bits (factorials to 170,
// binomials to n=400), so asymptotics are irrelevant.
class BigUint {
public:
    BigUint() : limbs_{0} {}
    BigUint(std::uint64_t v) : limbs_{v} {}

    static BigUint one() { return BigUint(1); }

    bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }

    friend bool operator==(const BigUint& a, const BigUint& b) { return a.limbs_ == b.limbs_; }
    friend bool operator!=(const BigUint& a, const BigUint& b) { return !(a == b); }
    friend bool operator<(const BigUint& a, const BigUint& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const BigUint& a, const BigUint& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const BigUint& a, const BigUint& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const BigUint& a, const BigUint& b) { return cmp(a, b) >= 0; }

    friend BigUint operator+(const BigUint& a, const BigUint& b) {
        BigUint r;
        const auto& x = a.limbs_;
        const auto& y = b.limbs_;
        const std::size_t n = std::max(x.size(), y.size());
        r.limbs_.assign(n + 1, 0);
        unsigned __int128 carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            unsigned __int128 s = carry;
            if (i < x.size()) s += x[i];
            if (i < y.size()) s += y[i];
            r.limbs_[i] = std::uint64_t(s);
            carry = s >> 64;
        }
        r.limbs_[n] = std::uint64_t(carry);
        r.trim();
        return r;
    }

    // Requires a >= b.
    friend BigUint operator-(const BigUint& a, const BigUint& b) {
        if (a < b) throw std::underflow_error("BigUint: negative result");
        BigUint r;
        r.limbs_.assign(a.limbs_.size(), 0);
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            unsigned __int128 x = a.limbs_[i];
            unsigned __int128 y = (i < b.limbs_.size() ? b.limbs_[i] : 0);
            y += std::uint64_t(borrow);
            if (x >= y) {
                r.limbs_[i] = std::uint64_t(x - y);
                borrow = 0;
            } else {
                r.limbs_[i] = std::uint64_t((x + ((unsigned __int128)1 << 64)) - y);
                borrow = 1;
            }
        }
        r.trim();
        return r;
    }

    friend BigUint operator*(const BigUint& a, const BigUint& b) {
        BigUint r;
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            unsigned __int128 carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                unsigned __int128 cur = r.limbs_[i + j];
                cur += (unsigned __int128)a.limbs_[i] * b.limbs_[j];
                cur += carry;
                r.limbs_[i + j] = std::uint64_t(cur);
                carry = cur >> 64;
            }
            std::size_t k = i + b.limbs_.size();
            while (carry != 0) {
                unsigned __int128 cur = r.limbs_[k];
                cur += carry;
                r.limbs_[k] = std::uint64_t(cur);
                carry = cur >> 64;
                ++k;
            }
        }
        r.trim();
        return r;
    }

    BigUint& operator+=(const BigUint& o) { return *this = *this + o; }
    BigUint& operator*=(const BigUint& o) { return *this = *this * o; }

    void mul_small(std::uint64_t m) {
        unsigned __int128 carry = 0;
        for (auto& limb : limbs_) {
            unsigned __int128 cur = (unsigned __int128)limb * m + carry;
            limb = std::uint64_t(cur);
            carry = cur >> 64;
        }
        while (carry != 0) {
            limbs_.push_back(std::uint64_t(carry));
            carry >>= 64;
        }
        trim();
    }

    // Exact division by a small divisor; throws if a remainder would be lost.
    void div_small_exact(std::uint64_t d) {
        std::uint64_t rem = div_small(d);
        if (rem != 0) throw std::domain_error("BigUint: inexact division");
    }

    // In-place division; returns the remainder.
    std::uint64_t div_small(std::uint64_t d) {
        if (d == 0) throw std::domain_error("BigUint: division by zero");
        unsigned __int128 rem = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) {
            unsigned __int128 cur = (rem << 64) | limbs_[i];
            limbs_[i] = std::uint64_t(cur / d);
            rem = cur % d;
        }
        trim();
        return std::uint64_t(rem);
    }

    void shift_left_bits(unsigned bits) {
        const unsigned whole = bits / 64, part = bits % 64;
        if (is_zero()) return;
        limbs_.insert(limbs_.begin(), whole, 0);
        if (part != 0) {
            std::uint64_t carry = 0;
            for (std::size_t i = whole; i < limbs_.size(); ++i) {
                std::uint64_t nc = limbs_[i] >> (64 - part);
                limbs_[i] = (limbs_[i] << part) | carry;
                carry = nc;
            }
            if (carry) limbs_.push_back(carry);
        }
    }

    unsigned bit_length() const {
        if (is_zero()) return 0;
        std::uint64_t top = limbs_.back();
        unsigned bits = unsigned(64 * (limbs_.size() - 1));
        while (top != 0) {
            ++bits;
            top >>= 1;
        }
        return bits;
    }

    // ln of the exact value from the top 192 bits; ~1e-18 relative error in
    // the mantissa, dwarfed by every log-domain gate this library checks.
    long double ln() const {
        if (is_zero()) throw std::domain_error("BigUint: ln(0)");
        const std::size_t take = std::min<std::size_t>(3, limbs_.size());
        long double mant = 0.0L;
        for (std::size_t i = 0; i < take; ++i)
            mant = mant * 0x1.0p64L + (long double)limbs_[limbs_.size() - 1 - i];
        const long double dropped_bits = 64.0L * (long double)(limbs_.size() - take);
        return logl(mant) + dropped_bits * 0.6931471805599453094L;
    }

    long double log2() const { return ln() / 0.6931471805599453094L; }

    double to_double() const {
        double v = 0.0;
        for (std::size_t i = limbs_.size(); i-- > 0;) v = v * 0x1.0p64 + double(limbs_[i]);
        return v;
    }

    std::uint64_t to_u64() const {
        if (limbs_.size() > 1) throw std::overflow_error("BigUint: does not fit u64");
        return limbs_[0];
    }

    bool fits_u64() const { return limbs_.size() == 1; }

    std::string str() const {
        if (is_zero()) return "0";
        BigUint tmp = *this;
        std::string digits;
        while (!tmp.is_zero()) {
            std::uint64_t rem = tmp.div_small(10);
            digits.push_back(char('0' + rem));
        }
        return std::string(digits.rbegin(), digits.rend());
    }

private:
    static int cmp(const BigUint& a, const BigUint& b) {
        if (a.limbs_.size() != b.limbs_.size())
            return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
        for (std::size_t i = a.limbs_.size(); i-- > 0;) {
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
        }
        return 0;
    }

    void trim() {
        while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
    }

    std::vector<std::uint64_t> limbs_;
};

// Exact binomial coefficient by multiplicative accumulation; every
// intermediate division is exact.
inline BigUint big_binomial(unsigned n, unsigned k) {
    if (k > n) throw std::domain_error("big_binomial: k out of range");
    if (k > n - k) k = n - k;
    BigUint r(1);
    for (unsigned i = 1; i <= k; ++i) {
        r.mul_small(n - k + i);
        r.div_small_exact(i);
    }
    return r;
}

inline BigUint big_factorial(unsigned n) {
    BigUint r(1);
    for (unsigned i = 2; i <= n; ++i) r.mul_small(i);
    return r;
}

inline BigUint big_pow(std::uint64_t base, unsigned exp) {
    BigUint r(1);
    for (unsigned i = 0; i < exp; ++i) r.mul_small(base);
    return r;
}

// Exact dyadic rational num / 2^shift. Enough arithmetic for the renewal-count
// dynamic program and fair-sign tail sums, which live entirely over powers of
// two.
struct Dyadic {
    BigUint num;
    unsigned shift = 0;

    Dyadic() = default;
    Dyadic(BigUint n, unsigned s) : num(std::move(n)), shift(s) {}
    static Dyadic from_u64(std::uint64_t v) { return Dyadic(BigUint(v), 0); }

    static Dyadic add(const Dyadic& a, const Dyadic& b) {
        unsigned s = std::max(a.shift, b.shift);
        BigUint x = a.num, y = b.num;
        x.shift_left_bits(s - a.shift);
        y.shift_left_bits(s - b.shift);
        return Dyadic(x + y, s);
    }

    static Dyadic sub(const Dyadic& a, const Dyadic& b) {
        unsigned s = std::max(a.shift, b.shift);
        BigUint x = a.num, y = b.num;
        x.shift_left_bits(s - a.shift);
        y.shift_left_bits(s - b.shift);
        return Dyadic(x - y, s);
    }

    static Dyadic mul(const Dyadic& a, const Dyadic& b) {
        return Dyadic(a.num * b.num, a.shift + b.shift);
    }

    double to_double() const {
        if (num.is_zero()) return 0.0;
        return double(expl(num.ln() - (long double)shift * 0.6931471805599453094L));
    }
};

}  // namespace ternary
