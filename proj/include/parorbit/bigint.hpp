#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace parorbit {

// Arbitrary-precision signed integer, sign + magnitude in base 10^9 limbs.
// Only what exact rational arithmetic needs: ring ops, divmod, gcd, compare.
class BigInt {
public:
    BigInt() = default;
    BigInt(int64_t v) {
        if (v < 0) { neg_ = true; }
        uint64_t m = neg_ ? (~static_cast<uint64_t>(v) + 1) : static_cast<uint64_t>(v);
        while (m) { limb_.push_back(static_cast<uint32_t>(m % BASE)); m /= BASE; }
    }

    static BigInt from_string(const std::string& s) {
        BigInt r;
        size_t i = 0;
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) { neg = s[i] == '-'; ++i; }
        if (i == s.size()) throw std::invalid_argument("BigInt: empty literal");
        std::vector<uint32_t> digits;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
            digits.push_back(static_cast<uint32_t>(s[i] - '0'));
        }
        for (uint32_t d : digits) {
            r.mul_small_inplace(10);
            r.add_small_inplace(d);
        }
        r.neg_ = neg && !r.is_zero();
        return r;
    }

    bool is_zero() const { return limb_.empty(); }
    bool is_negative() const { return neg_; }
    bool is_one() const { return !neg_ && limb_.size() == 1 && limb_[0] == 1; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.neg_ == b.neg_ && a.limb_ == b.limb_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }

    // total order
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    static int cmp(const BigInt& a, const BigInt& b) {
        if (a.neg_ != b.neg_) return a.neg_ ? -1 : 1;
        int c = cmp_mag(a.limb_, b.limb_);
        return a.neg_ ? -c : c;
    }

    BigInt operator-() const {
        BigInt r = *this;
        if (!r.is_zero()) r.neg_ = !r.neg_;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.neg_ == b.neg_) {
            BigInt r;
            r.limb_ = add_mag(a.limb_, b.limb_);
            r.neg_ = a.neg_ && !r.limb_.empty();
            return r;
        }
        int c = cmp_mag(a.limb_, b.limb_);
        BigInt r;
        if (c == 0) return r;
        if (c > 0) { r.limb_ = sub_mag(a.limb_, b.limb_); r.neg_ = a.neg_; }
        else       { r.limb_ = sub_mag(b.limb_, a.limb_); r.neg_ = b.neg_; }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        BigInt r;
        if (a.is_zero() || b.is_zero()) return r;
        r.limb_.assign(a.limb_.size() + b.limb_.size(), 0);
        for (size_t i = 0; i < a.limb_.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.limb_.size(); ++j) {
                uint64_t cur = r.limb_[i + j] +
                               static_cast<uint64_t>(a.limb_[i]) * b.limb_[j] + carry;
                r.limb_[i + j] = static_cast<uint32_t>(cur % BASE);
                carry = cur / BASE;
            }
            size_t k = i + b.limb_.size();
            while (carry) {
                uint64_t cur = r.limb_[k] + carry;
                r.limb_[k] = static_cast<uint32_t>(cur % BASE);
                carry = cur / BASE;
                ++k;
            }
        }
        r.trim();
        r.neg_ = (a.neg_ != b.neg_) && !r.is_zero();
        return r;
    }

    // truncated quotient and remainder; remainder has the sign of the dividend
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
        q = BigInt();
        r = BigInt();
        if (cmp_mag(a.limb_, b.limb_) < 0) { r = a; return; }
        std::vector<uint32_t> quo(a.limb_.size(), 0);
        BigInt rem;  // running non-negative remainder
        for (size_t i = a.limb_.size(); i-- > 0;) {
            rem.mul_small_inplace(BASE);
            rem.add_small_inplace(a.limb_[i]);
            // binary search for the quotient digit in [0, BASE)
            uint32_t lo = 0, hi = BASE - 1, digit = 0;
            while (lo <= hi) {
                uint32_t mid = lo + (hi - lo) / 2;
                BigInt t = abs(b);
                t.mul_small_inplace(mid);
                if (cmp_mag(t.limb_, rem.limb_) <= 0) {
                    digit = mid;
                    lo = mid + 1;
                } else {
                    if (mid == 0) break;
                    hi = mid - 1;
                }
            }
            if (digit) {
                BigInt t = abs(b);
                t.mul_small_inplace(digit);
                rem.limb_ = sub_mag(rem.limb_, t.limb_);
            }
            quo[i] = digit;
        }
        q.limb_ = std::move(quo);
        q.trim();
        q.neg_ = (a.neg_ != b.neg_) && !q.is_zero();
        r = std::move(rem);
        r.neg_ = a.neg_ && !r.is_zero();
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    static BigInt abs(const BigInt& a) {
        BigInt r = a;
        r.neg_ = false;
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.neg_ = false;
        b.neg_ = false;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    // value fits in int64? (used by finite-field reductions and JSON)
    bool fits_int64() const {
        static const BigInt lo(INT64_MIN), hi(INT64_MAX);
        return cmp(*this, lo) >= 0 && cmp(*this, hi) <= 0;
    }
    int64_t to_int64() const {
        if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
        int64_t v = 0;
        for (size_t i = limb_.size(); i-- > 0;) v = v * BASE + limb_[i];
        return neg_ ? -v : v;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s = neg_ ? "-" : "";
        s += std::to_string(limb_.back());
        for (size_t i = limb_.size() - 1; i-- > 0;) {
            std::string part = std::to_string(limb_[i]);
            s += std::string(9 - part.size(), '0') + part;
        }
        return s;
    }

private:
    static constexpr uint32_t BASE = 1000000000u;
    std::vector<uint32_t> limb_;  // little-endian, no trailing zeros
    bool neg_ = false;

    void trim() {
        while (!limb_.empty() && limb_.back() == 0) limb_.pop_back();
        if (limb_.empty()) neg_ = false;
    }
    void mul_small_inplace(uint32_t m) {
        uint64_t carry = 0;
        for (auto& l : limb_) {
            uint64_t cur = static_cast<uint64_t>(l) * m + carry;
            l = static_cast<uint32_t>(cur % BASE);
            carry = cur / BASE;
        }
        while (carry) {
            limb_.push_back(static_cast<uint32_t>(carry % BASE));
            carry /= BASE;
        }
        trim();
    }
    void add_small_inplace(uint32_t v) {
        uint64_t carry = v;
        for (size_t i = 0; carry && i < limb_.size(); ++i) {
            uint64_t cur = limb_[i] + carry;
            limb_[i] = static_cast<uint32_t>(cur % BASE);
            carry = cur / BASE;
        }
        while (carry) {
            limb_.push_back(static_cast<uint32_t>(carry % BASE));
            carry /= BASE;
        }
    }
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(std::max(a.size(), b.size()) + 1, 0);
        uint64_t carry = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            uint64_t cur = carry;
            if (i < a.size()) cur += a[i];
            if (i < b.size()) cur += b[i];
            r[i] = static_cast<uint32_t>(cur % BASE);
            carry = cur / BASE;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            int64_t cur = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
            if (cur < 0) { cur += BASE; borrow = 1; } else borrow = 0;
            r[i] = static_cast<uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
};

}  // namespace parorbit
