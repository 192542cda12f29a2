#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qmf {

using Integer = mpz_class;

/// Arbitrary-precision rational, always canonical: lowest terms, denominator > 0,
/// zero stored as 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den) : v_(num, den) { v_.canonicalize(); }
    Rational(long num, long den) : v_(num, den) { v_.canonicalize(); }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "num", "num/den", or "-num/den" in base 10.
    static Rational from_string(const std::string& s) {
        mpq_class q(s, 10);
        q.canonicalize();
        return Rational(q);
    }

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    std::string to_string() const { return v_.get_str(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return wrap(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return wrap(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return wrap(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) { return wrap(a.v_ / b.v_); }
    Rational operator-() const { return wrap(-v_); }

    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
    Rational& operator/=(const Rational& b) { v_ /= b.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    const mpq_class& raw() const { return v_; }

private:
    // GMP keeps results canonical as long as the operands are.
    static Rational wrap(const mpq_class& q) {
        Rational r;
        r.v_ = q;
        return r;
    }

    mpq_class v_;
};

inline Rational pochhammer(const Rational& a, int n) {
    Rational p(1);
    for (int i = 0; i < n; ++i)
        p *= a + Rational(i);
    return p;
}

} // namespace qmf
