#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "p1dyn/unipoly.hpp"

namespace p1dyn {

/// Element of Q[t]/(m(t)) for a caller-supplied monic modulus m of degree
/// >= 1. The representative is kept reduced modulo m. The modulus is not
/// required to be irreducible: operations that need invertibility throw
/// NotInvertibleError (carrying the nontrivial gcd) instead of assuming a
/// field. Elements with different moduli never mix; that is a hard error.
class NFElem {
  public:
    NFElem(UniPoly modulus, UniPoly representative);

    static NFElem from_rational(const UniPoly& modulus, const BigRational& q);
    /// The class of t itself.
    static NFElem generator(const UniPoly& modulus);

    const UniPoly& modulus() const { return mod_; }
    const UniPoly& rep() const { return rep_; }

    bool is_zero() const { return rep_.is_zero(); }
    bool is_one() const { return rep_.is_one(); }
    bool is_rational() const { return rep_.degree() <= 0; }
    /// The value as a rational; requires is_rational().
    BigRational rational_value() const;

    NFElem operator-() const;
    friend NFElem operator+(const NFElem& a, const NFElem& b);
    friend NFElem operator-(const NFElem& a, const NFElem& b);
    friend NFElem operator*(const NFElem& a, const NFElem& b);

    friend bool operator==(const NFElem& a, const NFElem& b);
    friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }

    /// Multiplicative inverse via extended Euclid; NotInvertibleError when
    /// gcd(rep, modulus) is nontrivial.
    NFElem inv() const;
    NFElem pow(long e) const;

    /// "rep mod m".
    std::string str() const;

  private:
    static void require_same_modulus(const NFElem& a, const NFElem& b);

    UniPoly mod_;
    UniPoly rep_;
};

/// Regular trace of multiplication by x on Q[t]/(m) in the power basis.
BigRational nf_trace(const NFElem& x);

/// Smallest r <= bound with x^r = 1, or nullopt. Rejects x = 0 and bound = 0.
std::optional<std::uint64_t> root_of_unity_order(const NFElem& x, std::uint64_t bound);
std::optional<std::uint64_t> root_of_unity_order(const BigRational& x, std::uint64_t bound);

}  // namespace p1dyn
