#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace permucell {

using BigInt = mpz_class;

/// Exact rational scalar. Always kept in canonical form: denominator > 0,
/// gcd(numerator, denominator) = 1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d) : v_(n, d) { canonicalize(); }
    Rational(const BigInt& n) : v_(n) {}
    Rational(const BigInt& n, const BigInt& d) : v_(mpq_class(n) / mpq_class(d)) {}
    explicit Rational(const mpq_class& q) : v_(q) { canonicalize(); }

    static Rational parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(BigInt(s));
        return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    }

    BigInt num() const { return v_.get_num(); }
    BigInt den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    /// "num/den", or just "num" when the denominator is 1.
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

private:
    void canonicalize() { v_.canonicalize(); }
    mpq_class v_;
};

inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline BigInt factorial(long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

}  // namespace permucell
