#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "p1dyn/errors.hpp"

namespace p1dyn {

using BigInt = mpz_class;

/// Exact rational scalar. Always kept reduced with positive denominator, so
/// equality is plain value comparison.
class BigRational {
  public:
    BigRational() : v_(0) {}
    BigRational(long n) : v_(n) {}  // NOLINT: implicit by design
    BigRational(const BigInt& n) : v_(n) {}
    BigRational(long num, long den) : v_(num, den) {
        if (den == 0) throw Error("BigRational: zero denominator");
        v_.canonicalize();
    }
    BigRational(const BigInt& num, const BigInt& den) : v_(num, den) {
        if (den == 0) throw Error("BigRational: zero denominator");
        v_.canonicalize();
    }

    /// Parses "p", "-p" or "p/q".
    static BigRational from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw Error("BigRational: cannot parse '" + s + "'");
        q.canonicalize();
        BigRational r;
        r.v_ = q;
        return r;
    }

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    BigRational operator-() const { return wrap(-v_); }
    BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
    BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
    BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
    BigRational& operator/=(const BigRational& o) {
        if (o.is_zero()) throw Error("BigRational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const BigRational& a, const BigRational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return a.v_ >= b.v_; }

    BigRational inv() const {
        if (is_zero()) throw Error("BigRational: inverse of zero");
        return wrap(1 / v_);
    }

    BigRational abs() const { return sign() < 0 ? -*this : *this; }

    BigRational pow(long e) const {
        if (e < 0) return inv().pow(-e);
        mpq_class r(1), b = v_;
        while (e > 0) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return wrap(r);
    }

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_str();
    }

  private:
    static BigRational wrap(const mpq_class& q) {
        BigRational r;
        r.v_ = q;
        return r;
    }
    mpq_class v_;  // invariant: canonical (reduced, positive denominator)
};

inline BigInt gcd_int(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline BigInt lcm_int(const BigInt& a, const BigInt& b) {
    BigInt l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

}  // namespace p1dyn
