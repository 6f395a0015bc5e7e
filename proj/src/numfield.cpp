#include "p1dyn/numfield.hpp"

#include "p1dyn/errors.hpp"

namespace p1dyn {

NFElem::NFElem(UniPoly modulus, UniPoly representative)
    : mod_(std::move(modulus)), rep_(std::move(representative)) {
    if (mod_.degree() < 1) throw Error("NFElem: modulus must have degree >= 1");
    if (!mod_.leading().is_one()) throw Error("NFElem: modulus must be monic");
    if (rep_.var() != mod_.var()) rep_ = rep_.with_var(mod_.var());
    if (rep_.degree() >= mod_.degree()) rep_ = UniPoly::divmod(rep_, mod_).second;
}

NFElem NFElem::from_rational(const UniPoly& modulus, const BigRational& q) {
    return NFElem(modulus, UniPoly::constant(modulus.var(), q));
}

NFElem NFElem::generator(const UniPoly& modulus) {
    return NFElem(modulus, UniPoly::variable(modulus.var()));
}

BigRational NFElem::rational_value() const {
    if (!is_rational()) throw Error("NFElem: not a rational value: " + str());
    return rep_.coeff(0);
}

void NFElem::require_same_modulus(const NFElem& a, const NFElem& b) {
    if (a.mod_ != b.mod_)
        throw Error("NFElem: modulus mismatch (" + a.mod_.str() + " vs " + b.mod_.str() + ")");
}

NFElem NFElem::operator-() const { return NFElem(mod_, -rep_); }

NFElem operator+(const NFElem& a, const NFElem& b) {
    NFElem::require_same_modulus(a, b);
    return NFElem(a.mod_, a.rep_ + b.rep_);
}

NFElem operator-(const NFElem& a, const NFElem& b) {
    NFElem::require_same_modulus(a, b);
    return NFElem(a.mod_, a.rep_ - b.rep_);
}

NFElem operator*(const NFElem& a, const NFElem& b) {
    NFElem::require_same_modulus(a, b);
    return NFElem(a.mod_, a.rep_ * b.rep_);
}

bool operator==(const NFElem& a, const NFElem& b) {
    NFElem::require_same_modulus(a, b);
    return a.rep_ == b.rep_;
}

NFElem NFElem::inv() const {
    if (is_zero()) throw NotInvertibleError("NFElem: inverse of zero", mod_.str());
    auto [g, u, v] = UniPoly::xgcd(rep_, mod_);
    if (g.degree() != 0)
        throw NotInvertibleError("NFElem: zero divisor, gcd = " + g.str(), g.str());
    // g == 1 after normalization, so u * rep == 1 (mod m).
    return NFElem(mod_, u);
}

NFElem NFElem::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    NFElem r = from_rational(mod_, 1);
    NFElem b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

std::string NFElem::str() const { return rep_.str() + " mod " + mod_.str(); }

BigRational nf_trace(const NFElem& x) {
    const int n = x.modulus().degree();
    BigRational tr(0);
    UniPoly cur = x.rep();  // x * t^i, reduced
    const UniPoly t = UniPoly::variable(x.modulus().var());
    for (int i = 0; i < n; ++i) {
        tr += cur.coeff(static_cast<std::size_t>(i));
        if (i + 1 < n) cur = UniPoly::divmod(cur * t, x.modulus()).second;
    }
    return tr;
}

std::optional<std::uint64_t> root_of_unity_order(const NFElem& x, std::uint64_t bound) {
    if (bound == 0) throw Error("root_of_unity_order: bound must be positive");
    if (x.is_zero()) throw Error("root_of_unity_order: zero element");
    if (x.is_rational()) return root_of_unity_order(x.rational_value(), bound);
    NFElem acc = x;
    for (std::uint64_t r = 1; r <= bound; ++r) {
        if (acc.is_one()) return r;
        if (r < bound) acc = acc * x;
    }
    return std::nullopt;
}

std::optional<std::uint64_t> root_of_unity_order(const BigRational& x, std::uint64_t bound) {
    if (bound == 0) throw Error("root_of_unity_order: bound must be positive");
    if (x.is_zero()) throw Error("root_of_unity_order: zero element");
    if (x.is_one()) return 1;
    if (x == BigRational(-1)) return bound >= 2 ? std::optional<std::uint64_t>(2) : std::nullopt;
    return std::nullopt;  // the only rational roots of unity are +-1
}

}  // namespace p1dyn
