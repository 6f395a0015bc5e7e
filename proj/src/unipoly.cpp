#include "p1dyn/unipoly.hpp"

#include <sstream>
#include <tuple>

#include "p1dyn/errors.hpp"

namespace p1dyn {

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void UniPoly::require_same_var(const UniPoly& a, const UniPoly& b) {
    if (a.var_ != b.var_)
        throw Error("UniPoly: variable mismatch '" + a.var_ + "' vs '" + b.var_ + "'");
}

UniPoly UniPoly::constant(const std::string& var, const BigRational& c) {
    UniPoly p(var);
    if (!c.is_zero()) p.c_ = {c};
    return p;
}

UniPoly UniPoly::variable(const std::string& var) {
    return monomial(var, BigRational(1), 1);
}

UniPoly UniPoly::monomial(const std::string& var, const BigRational& c, std::size_t e) {
    UniPoly p(var);
    if (!c.is_zero()) {
        p.c_.assign(e + 1, BigRational(0));
        p.c_[e] = c;
    }
    return p;
}

UniPoly UniPoly::from_coeffs(const std::string& var, std::vector<BigRational> ascending) {
    UniPoly p(var);
    p.c_ = std::move(ascending);
    p.trim();
    return p;
}

BigRational UniPoly::leading() const {
    if (is_zero()) throw ZeroPolynomialError("UniPoly: leading coefficient of zero");
    return c_.back();
}

BigRational UniPoly::trailing_nonzero() const {
    if (is_zero()) throw ZeroPolynomialError("UniPoly: trailing coefficient of zero");
    for (const auto& c : c_)
        if (!c.is_zero()) return c;
    return c_.back();
}

UniPoly UniPoly::operator-() const {
    UniPoly r(var_);
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(-c);
    return r;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly::require_same_var(a, b);
    UniPoly r(a.var_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), BigRational(0));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
    r.trim();
    return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    UniPoly::require_same_var(a, b);
    UniPoly r(a.var_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), BigRational(0));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.coeff(i) - b.coeff(i);
    r.trim();
    return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly::require_same_var(a, b);
    UniPoly r(a.var_);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, BigRational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

UniPoly UniPoly::scaled(const BigRational& c) const {
    if (c.is_zero()) return UniPoly(var_);
    UniPoly r(var_);
    r.c_.reserve(c_.size());
    for (const auto& x : c_) r.c_.push_back(x * c);
    return r;
}

UniPoly UniPoly::pow(unsigned long e) const {
    UniPoly r = constant(var_, 1);
    UniPoly b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& num, const UniPoly& den) {
    require_same_var(num, den);
    if (den.is_zero()) throw Error("UniPoly: division by zero polynomial");
    UniPoly q(num.var_), r = num;
    const int dd = den.degree();
    const BigRational lead_inv = den.leading().inv();
    if (r.degree() >= dd) q.c_.assign(r.degree() - dd + 1, BigRational(0));
    while (!r.is_zero() && r.degree() >= dd) {
        const int k = r.degree() - dd;
        const BigRational f = r.leading() * lead_inv;
        q.c_[k] = f;
        for (int i = 0; i <= dd; ++i)
            if (!den.c_[i].is_zero()) r.c_[i + k] -= f * den.c_[i];
        r.trim();
    }
    q.trim();
    return {q, r};
}

UniPoly UniPoly::exact_div(const UniPoly& num, const UniPoly& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero())
        throw NonDivisibleError("UniPoly: not divisible, remainder " + r.str(),
                                r.str());
    if (q * den != num)
        throw NonDivisibleError("UniPoly: division verification failed", num.str());
    return q;
}

UniPoly UniPoly::derivative() const {
    UniPoly r(var_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1, BigRational(0));
    for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * BigRational(static_cast<long>(i));
    r.trim();
    return r;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inv());
}

UniPoly UniPoly::inflate(std::size_t k) const {
    if (k == 0) throw Error("UniPoly: inflate by 0");
    UniPoly r(var_);
    if (is_zero()) return r;
    r.c_.assign((c_.size() - 1) * k + 1, BigRational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
    return r;
}

UniPoly UniPoly::with_var(const std::string& var) const {
    UniPoly r(var);
    r.c_ = c_;
    return r;
}

BigRational UniPoly::eval(const BigRational& x) const {
    BigRational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
    require_same_var(a, b);
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = divmod(x, y);
        x = y;
        y = r;
    }
    return x.monic();
}

std::tuple<UniPoly, UniPoly, UniPoly> UniPoly::xgcd(const UniPoly& a, const UniPoly& b) {
    require_same_var(a, b);
    UniPoly r0 = a, r1 = b;
    UniPoly s0 = constant(a.var_, 1), s1(a.var_);
    UniPoly t0(a.var_), t1 = constant(a.var_, 1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        UniPoly s = s0 - q * s1;
        UniPoly t = t0 - q * t1;
        r0 = r1; r1 = r;
        s0 = s1; s1 = s;
        t0 = t1; t1 = t;
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const BigRational inv = r0.leading().inv();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

std::string UniPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigRational& c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        const BigRational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << var_;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace p1dyn
