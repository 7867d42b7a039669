#pragma once
// Coefficient fields for the chain computations: exact rationals as the
// reference path and word-sized prime fields as the fast path. Both expose
// the same tiny interface so the elimination code is written once.

#include "error.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace vartop {

struct Rationals {
    using elem_t = boost::multiprecision::cpp_rational;
    elem_t zero() const { return 0; }
    elem_t one() const { return 1; }
    elem_t from_int(long long v) const { return v; }
    elem_t neg(const elem_t& a) const { return -a; }
    elem_t add(const elem_t& a, const elem_t& b) const { return a + b; }
    elem_t sub(const elem_t& a, const elem_t& b) const { return a - b; }
    elem_t mul(const elem_t& a, const elem_t& b) const { return a * b; }
    elem_t div(const elem_t& a, const elem_t& b) const { return a / b; }
    bool is_zero(const elem_t& a) const { return a == 0; }
    std::string name() const { return "Q"; }
};

class PrimeField {
public:
    using elem_t = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p < 2 || !is_prime(p)) throw Error("NotPrime", std::to_string(p));
        if (p >= (1ull << 31)) throw Error("BadRange", "modulus too large");
    }

    std::uint64_t modulus() const { return p_; }
    elem_t zero() const { return 0; }
    elem_t one() const { return 1 % p_; }
    elem_t from_int(long long v) const {
        long long r = v % (long long)p_;
        return r < 0 ? r + p_ : r;
    }
    elem_t neg(elem_t a) const { return a ? p_ - a : 0; }
    elem_t add(elem_t a, elem_t b) const {
        elem_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    elem_t sub(elem_t a, elem_t b) const { return add(a, neg(b)); }
    elem_t mul(elem_t a, elem_t b) const { return a * b % p_; }
    elem_t div(elem_t a, elem_t b) const {
        if (!b) throw Error("DivideByZero");
        return mul(a, pow(b, p_ - 2));
    }
    bool is_zero(elem_t a) const { return a == 0; }
    std::string name() const { return "F" + std::to_string(p_); }

    static bool is_prime(std::uint64_t p) {
        if (p < 2) return false;
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }

private:
    std::uint64_t p_;

    elem_t pow(elem_t b, std::uint64_t e) const {
        elem_t r = one();
        for (; e; e >>= 1, b = mul(b, b))
            if (e & 1) r = mul(r, b);
        return r;
    }
};

// field selector as it appears on the command line: "Q", "F3", or "Fp:3"
struct FieldSpec {
    bool rational = true;
    std::uint64_t p = 0;

    std::string name() const { return rational ? "Q" : "F" + std::to_string(p); }

    static FieldSpec parse(const std::string& s) {
        if (s == "Q" || s == "q") return {};
        std::string digits;
        if (s.rfind("Fp:", 0) == 0) digits = s.substr(3);
        else if (s.size() > 1 && (s[0] == 'F' || s[0] == 'f')) digits = s.substr(1);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw Error("BadField", s);
        FieldSpec f;
        f.rational = false;
        f.p = std::stoull(digits);
        if (!PrimeField::is_prime(f.p)) throw Error("NotPrime", digits);
        return f;
    }
};

} // namespace vartop
