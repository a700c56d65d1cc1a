#pragma once

#include <string>
#include <vector>

#include "parorbit/rational.hpp"

namespace parorbit {

// Dense univariate polynomial over Q, used for identities in a formal
// parameter t.
struct PolyQ {
    std::vector<Rat> c;  // c[i] = coefficient of t^i, no trailing zeros

    PolyQ() = default;
    PolyQ(Rat r) {
        if (!r.is_zero()) c.push_back(std::move(r));
    }
    static PolyQ t() {
        PolyQ p;
        p.c = {Rat(0), Rat(1)};
        return p;
    }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    Rat lead() const { return c.empty() ? Rat(0) : c.back(); }

    friend PolyQ operator+(const PolyQ& a, const PolyQ& b) {
        PolyQ r;
        r.c.resize(std::max(a.c.size(), b.c.size()), Rat(0));
        for (size_t i = 0; i < r.c.size(); ++i) {
            if (i < a.c.size()) r.c[i] = r.c[i] + a.c[i];
            if (i < b.c.size()) r.c[i] = r.c[i] + b.c[i];
        }
        r.trim();
        return r;
    }
    friend PolyQ operator-(const PolyQ& a, const PolyQ& b) {
        PolyQ nb = b;
        for (auto& x : nb.c) x = -x;
        return a + nb;
    }
    friend PolyQ operator*(const PolyQ& a, const PolyQ& b) {
        if (a.is_zero() || b.is_zero()) return {};
        PolyQ r;
        r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
        r.trim();
        return r;
    }
    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c == b.c; }

    static void divmod(const PolyQ& a, const PolyQ& b, PolyQ& q, PolyQ& r) {
        if (b.is_zero()) throw std::domain_error("PolyQ: division by zero");
        q = {};
        r = a;
        while (!r.is_zero() && r.deg() >= b.deg()) {
            int d = r.deg() - b.deg();
            Rat coef = r.lead() / b.lead();
            PolyQ mono;
            mono.c.assign(d + 1, Rat(0));
            mono.c[d] = coef;
            q = q + mono;
            r = r - mono * b;
        }
    }

    static PolyQ gcd(PolyQ a, PolyQ b) {
        while (!b.is_zero()) {
            PolyQ q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.is_zero()) {  // monic normalization
            Rat inv = Rat(1) / a.lead();
            for (auto& x : a.c) x = x * inv;
        }
        return a;
    }

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
        return acc;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = c.size(); i-- > 0;) {
            if (c[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += c[i].to_string();
            if (i == 1) s += "*t";
            if (i > 1) s += "*t^" + std::to_string(i);
        }
        return s;
    }
};

// Reduced fraction of polynomials over Q, with monic denominator. Provides the
// field interface so the exact matrix algorithms run unchanged over Q(t).
struct RatFun {
    PolyQ num, den;  // den monic, gcd(num, den) = 1

    RatFun() : num(), den(Rat(1)) {}
    RatFun(PolyQ n, PolyQ d) : num(std::move(n)), den(std::move(d)) { normalize(); }

    void normalize() {
        if (den.is_zero()) throw std::domain_error("RatFun: zero denominator");
        if (num.is_zero()) {
            den = PolyQ(Rat(1));
            return;
        }
        PolyQ g = PolyQ::gcd(num, den);
        if (g.deg() > 0) {
            PolyQ q, r;
            PolyQ::divmod(num, g, q, r);
            num = q;
            PolyQ::divmod(den, g, q, r);
            den = q;
        }
        Rat lead = den.lead();
        if (!(lead == Rat(1))) {
            Rat inv = Rat(1) / lead;
            for (auto& x : num.c) x = x * inv;
            for (auto& x : den.c) x = x * inv;
        }
    }
    bool is_zero() const { return num.is_zero(); }
    bool operator==(const RatFun& o) const { return num == o.num && den == o.den; }
};

struct RatFunField {
    using Elem = RatFun;
    Elem zero() const { return RatFun(); }
    Elem one() const { return RatFun(PolyQ(Rat(1)), PolyQ(Rat(1))); }
    Elem from_int(int64_t v) const { return RatFun(PolyQ(Rat(v)), PolyQ(Rat(1))); }
    Elem t() const { return RatFun(PolyQ::t(), PolyQ(Rat(1))); }
    Elem add(const Elem& a, const Elem& b) const {
        return RatFun(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    Elem sub(const Elem& a, const Elem& b) const {
        return RatFun(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    Elem mul(const Elem& a, const Elem& b) const { return RatFun(a.num * b.num, a.den * b.den); }
    Elem div(const Elem& a, const Elem& b) const {
        if (b.is_zero()) throw std::domain_error("RatFunField: division by zero");
        return RatFun(a.num * b.den, a.den * b.num);
    }
    Elem neg(const Elem& a) const {
        RatFun r = a;
        for (auto& x : r.num.c) x = -x;
        return r;
    }
    Elem inv(const Elem& a) const { return div(one(), a); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::string str(const Elem& a) const {
        if (a.den == PolyQ(Rat(1))) return a.num.str();
        return "(" + a.num.str() + ")/(" + a.den.str() + ")";
    }
    std::string name() const { return "Q(t)"; }
    bool operator==(const RatFunField&) const { return true; }
};

}  // namespace parorbit
