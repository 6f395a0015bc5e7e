#pragma once

#include <string>
#include <utility>
#include <vector>

#include "p1dyn/rational.hpp"

namespace p1dyn {

/// Dense univariate polynomial over BigRational in one named variable.
/// Coefficients are stored by ascending exponent; the highest stored
/// coefficient is nonzero unless the polynomial is zero.
class UniPoly {
  public:
    explicit UniPoly(std::string var = "t") : var_(std::move(var)) {}

    static UniPoly constant(const std::string& var, const BigRational& c);
    static UniPoly variable(const std::string& var);
    static UniPoly monomial(const std::string& var, const BigRational& c, std::size_t e);
    static UniPoly from_coeffs(const std::string& var, std::vector<BigRational> ascending);

    const std::string& var() const { return var_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    BigRational coeff(std::size_t i) const {
        return i < c_.size() ? c_[i] : BigRational(0);
    }
    const std::vector<BigRational>& coeffs() const { return c_; }
    BigRational leading() const;
    BigRational trailing_nonzero() const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(const BigRational& c) const;
    UniPoly pow(unsigned long e) const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.var_ == b.var_ && a.c_ == b.c_;
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    /// Quotient and remainder; the divisor must be nonzero.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den);

    /// Certified exact division: returns q with q*den == num (the product is
    /// checked), throws NonDivisibleError otherwise.
    static UniPoly exact_div(const UniPoly& num, const UniPoly& den);

    UniPoly derivative() const;
    UniPoly monic() const;
    /// t -> t^k.
    UniPoly inflate(std::size_t k) const;
    UniPoly with_var(const std::string& var) const;

    BigRational eval(const BigRational& x) const;

    /// Monic gcd.
    static UniPoly gcd(const UniPoly& a, const UniPoly& b);
    /// g = gcd(a,b) monic together with u, v such that u*a + v*b = g.
    static std::tuple<UniPoly, UniPoly, UniPoly> xgcd(const UniPoly& a, const UniPoly& b);

    /// Descending powers, reduced-fraction coefficients, e.g. "z^2 + z + 1".
    std::string str() const;

  private:
    void trim();
    static void require_same_var(const UniPoly& a, const UniPoly& b);

    std::string var_;
    std::vector<BigRational> c_;
};

}  // namespace p1dyn
