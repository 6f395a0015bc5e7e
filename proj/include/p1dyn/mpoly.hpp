#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "p1dyn/rational.hpp"
#include "p1dyn/unipoly.hpp"

namespace p1dyn {

/// Fixed precedence of variable names for rosters and the graded-lex order:
/// x, y, a, b, c, t, z first, anything else after, alphabetically.
int var_rank(const std::string& name);

/// Sorts by var_rank (ties alphabetically) and removes duplicates.
std::vector<std::string> canonical_roster(std::vector<std::string> vars);

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order on exponent vectors of equal length: total
/// degree first, then lexicographic with the first roster variable most
/// significant.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over BigRational with an ordered variable
/// roster. No zero coefficients are stored; exponent vectors always have the
/// roster's length. Values are immutable in practice: every operation returns
/// a fresh polynomial.
class MPoly {
  public:
    using TermMap = std::map<Exponents, BigRational, GrlexLess>;

    explicit MPoly(std::vector<std::string> vars = {});

    static MPoly constant(std::vector<std::string> vars, const BigRational& c);
    static MPoly variable(std::vector<std::string> vars, const std::string& name);
    static MPoly monomial(std::vector<std::string> vars, Exponents e, const BigRational& c);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// The constant value; requires is_constant().
    BigRational constant_value() const;

    /// -1 for the zero polynomial.
    int total_degree() const;
    int degree_in(const std::string& name) const;
    BigRational coeff(const Exponents& e) const;
    /// Graded-lex maximal term; requires a nonzero polynomial.
    std::pair<Exponents, BigRational> leading_term() const;

    int var_index(const std::string& name) const;  // -1 when absent

    void add_term(const Exponents& e, const BigRational& c);

    MPoly operator-() const;
    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly scaled(const BigRational& c) const;
    MPoly pow(unsigned long e) const;

    friend bool operator==(const MPoly& a, const MPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

    /// Same polynomial over a superset roster (canonical order enforced).
    MPoly embedded(const std::vector<std::string>& roster) const;
    /// Drops roster variables that do not occur.
    MPoly compacted() const;

    /// True iff every term has the same x-degree + y-degree; that common
    /// value is written to *deg (0 when the polynomial involves neither).
    bool is_homogeneous_xy(int* deg = nullptr) const;

    /// Sum of terms in descending graded-lex order, e.g. "-x^2 + x*y - y^2".
    std::string str() const;

  private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

/// Certified exact division: returns q with q*den == num (the product is
/// re-multiplied and checked), or throws NonDivisibleError carrying the first
/// obstructing term.
MPoly exact_div(const MPoly& num, const MPoly& den);

using Binding = std::variant<BigRational, MPoly>;

/// Substitutes the bound variables and renormalizes the roster. Bound
/// variables must exist in the roster (UnknownVariableError otherwise).
MPoly specialize(const MPoly& p, const std::map<std::string, Binding>& bindings);

/// content * primitive == p; the primitive part has coprime integer
/// coefficients and positive graded-lex leading coefficient. Throws
/// ZeroPolynomialError on 0.
std::pair<BigRational, MPoly> content_primitive(const MPoly& p);

/// Binary form in the two distinguished variables x, y, homogeneous of the
/// recorded degree (checked at construction), with coefficients possibly
/// polynomial in the remaining roster variables.
class HomForm {
  public:
    explicit HomForm(MPoly p);

    const MPoly& poly() const { return p_; }
    int degree() const { return deg_; }

    friend bool operator==(const HomForm& a, const HomForm& b) { return a.p_ == b.p_; }
    friend bool operator!=(const HomForm& a, const HomForm& b) { return !(a == b); }

  private:
    MPoly p_;
    int deg_;
};

/// Determinant of the 2d x 2d Sylvester matrix of two binary forms of equal
/// degree d >= 1; an element of the parameter ring (the roster without x, y).
/// Zero iff the forms share a projective root over the algebraic closure.
MPoly resultant2(const HomForm& F, const HomForm& G);

/// p(x -> z, y -> 1) for a polynomial in x, y only.
UniPoly dehomogenize_xy(const MPoly& p, const std::string& zvar = "z");

/// Homogenizes a univariate polynomial to the binary form of the given
/// degree: u(x/y) * y^deg. Requires deg >= deg(u).
MPoly homogenize_to_xy(const UniPoly& u, int deg);

/// Embeds a univariate polynomial as an MPoly in the named roster variable.
MPoly mpoly_from_unipoly(const UniPoly& u, const std::string& var);

}  // namespace p1dyn
