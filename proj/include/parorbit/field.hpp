#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "parorbit/rational.hpp"

namespace parorbit {

// Fields are small value objects passed alongside element data, so that the
// fast case (prime fields) stores elements as plain machine words.
//
// A field type F provides:
//   using Elem = ...;
//   Elem zero(), one(), from_int(int64_t);
//   Elem add/sub/mul/div(a, b), neg(a), inv(a);
//   bool is_zero(a), eq(a, b);
//   std::string str(a);

struct Rationals {
    using Elem = Rat;
    Elem zero() const { return Rat(); }
    Elem one() const { return Rat(1); }
    Elem from_int(int64_t v) const { return Rat(v); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem div(const Elem& a, const Elem& b) const { return a / b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const { return Rat(1) / a; }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    std::string str(const Elem& a) const { return a.to_string(); }
    std::string name() const { return "Q"; }
    bool operator==(const Rationals&) const { return true; }
};

struct PrimeField {
    uint32_t p = 0;
    using Elem = uint64_t;  // reduced representative in [0, p)

    explicit PrimeField(uint32_t q) : p(q) {
        if (q < 2) throw std::invalid_argument("PrimeField: modulus must be >= 2");
        for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= q; ++d)
            if (q % d == 0) throw std::invalid_argument("PrimeField: modulus must be prime");
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    Elem from_int(int64_t v) const {
        int64_t m = v % static_cast<int64_t>(p);
        if (m < 0) m += p;
        return static_cast<Elem>(m);
    }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
        return pow(a, p - 2);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, uint64_t e) const {
        Elem r = one(), base = a % p;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    std::string str(Elem a) const { return std::to_string(a); }
    std::string name() const { return "GF(" + std::to_string(p) + ")"; }
    bool operator==(const PrimeField& o) const { return p == o.p; }

    // smallest generator of the multiplicative group
    Elem primitive_root() const {
        if (p == 2) return 1;
        std::vector<uint32_t> fac;
        uint32_t m = p - 1;
        for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= m; ++d)
            while (m % d == 0) { fac.push_back(d); while (m % d == 0) m /= d; break; }
        if (m > 1) fac.push_back(m);
        for (Elem g = 2; g < p; ++g) {
            bool ok = true;
            for (uint32_t f : fac)
                if (pow(g, (p - 1) / f) == one()) { ok = false; break; }
            if (ok) return g;
        }
        throw std::logic_error("PrimeField: no primitive root found");
    }
};

// Runtime tag mirroring the JSON "field" attribute ("Q" or "GF(q)").
struct FieldTag {
    enum class Kind { rational, prime } kind = Kind::rational;
    uint32_t q = 0;

    static FieldTag rational() { return {Kind::rational, 0}; }
    static FieldTag prime(uint32_t q) { return {Kind::prime, q}; }
    static FieldTag parse(const std::string& s) {
        if (s == "Q") return rational();
        if (s.size() > 4 && s.substr(0, 3) == "GF(" && s.back() == ')')
            return prime(static_cast<uint32_t>(std::stoul(s.substr(3, s.size() - 4))));
        throw std::invalid_argument("FieldTag: expected \"Q\" or \"GF(q)\", got " + s);
    }
    std::string str() const {
        return kind == Kind::rational ? "Q" : "GF(" + std::to_string(q) + ")";
    }
    bool operator==(const FieldTag& o) const { return kind == o.kind && q == o.q; }
};

}  // namespace parorbit
