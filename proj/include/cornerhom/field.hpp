#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cornerhom {

/// Runtime description of the ground field: a prime field F_p or the rationals.
struct FieldSpec {
    enum class Kind { prime, rational };
    Kind kind = Kind::rational;
    std::int64_t p = 0;  // modulus when kind == prime

    static bool is_prime(std::int64_t n)
    {
        if (n < 2)
            return false;
        for (std::int64_t d = 2; d * d <= n; ++d)
            if (n % d == 0)
                return false;
        return true;
    }

    static FieldSpec prime(std::int64_t p)
    {
        if (!is_prime(p))
            throw std::invalid_argument("FieldSpec: modulus " + std::to_string(p) + " is not prime");
        return FieldSpec{Kind::prime, p};
    }

    static FieldSpec rational() { return FieldSpec{Kind::rational, 0}; }

    bool operator==(const FieldSpec&) const = default;

    std::string str() const
    {
        return kind == Kind::prime ? "F_" + std::to_string(p) : "Q";
    }
};

/// Arithmetic in F_p. Elements are canonical representatives in [0, p).
class Fp {
public:
    using Elem = std::int64_t;

    Fp() : p_(2) {}
    explicit Fp(std::int64_t p) : p_(p)
    {
        if (!FieldSpec::is_prime(p))
            throw std::invalid_argument("Fp: modulus " + std::to_string(p) + " is not prime");
    }

    FieldSpec spec() const { return FieldSpec::prime(p_); }
    std::int64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(std::int64_t n) const
    {
        Elem r = n % p_;
        return r < 0 ? r + p_ : r;
    }
    Elem from_fraction(std::int64_t num, std::int64_t den) const
    {
        if (den % p_ == 0)
            throw std::invalid_argument("Fp: denominator divisible by modulus");
        return mul(from_int(num), inv(from_int(den)));
    }

    Elem add(Elem a, Elem b) const { Elem r = a + b; return r >= p_ ? r - p_ : r; }
    Elem sub(Elem a, Elem b) const { Elem r = a - b; return r < 0 ? r + p_ : r; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
    Elem inv(Elem a) const
    {
        if (a == 0)
            throw std::domain_error("Fp: inverse of zero");
        // extended Euclid
        Elem t = 0, newt = 1, r = p_, newr = a;
        while (newr != 0) {
            Elem q = r / newr;
            Elem tmp = t - q * newt; t = newt; newt = tmp;
            tmp = r - q * newr; r = newr; newr = tmp;
        }
        return t < 0 ? t + p_ : t;
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }

    std::string str(Elem a) const { return std::to_string(a); }

    bool operator==(const Fp& o) const { return p_ == o.p_; }

private:
    std::int64_t p_;
};

/// Arithmetic in Q with exact big-integer rationals.
class Rationals {
public:
    using Elem = boost::multiprecision::cpp_rational;

    FieldSpec spec() const { return FieldSpec::rational(); }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_int(std::int64_t n) const { return Elem(n); }
    Elem from_fraction(std::int64_t num, std::int64_t den) const
    {
        if (den == 0)
            throw std::invalid_argument("Rationals: zero denominator");
        return Elem(num) / Elem(den);
    }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const
    {
        if (a == 0)
            throw std::domain_error("Rationals: inverse of zero");
        return Elem(1) / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    std::string str(const Elem& a) const
    {
        using boost::multiprecision::denominator;
        using boost::multiprecision::numerator;
        if (denominator(a) == 1)
            return numerator(a).str();
        return numerator(a).str() + "/" + denominator(a).str();
    }

    bool operator==(const Rationals&) const { return true; }

private:
    const Elem& inv_guard(const Elem& b) const
    {
        if (b == 0)
            throw std::domain_error("Rationals: division by zero");
        return b;
    }
};

}  // namespace cornerhom
