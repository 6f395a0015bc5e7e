#include "p1dyn/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "p1dyn/errors.hpp"

namespace p1dyn {

int var_rank(const std::string& name) {
    static const char* kNamed[] = {"x", "y", "a", "b", "c", "t", "z"};
    for (int i = 0; i < 7; ++i)
        if (name == kNamed[i]) return i;
    return 7;
}

std::vector<std::string> canonical_roster(std::vector<std::string> vars) {
    std::sort(vars.begin(), vars.end(), [](const std::string& u, const std::string& v) {
        const int ru = var_rank(u), rv = var_rank(v);
        return ru != rv ? ru < rv : u < v;
    });
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    const std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    const std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) return da < db;
    // Same total degree: first variable most significant.
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

MPoly::MPoly(std::vector<std::string> vars) : vars_(canonical_roster(std::move(vars))) {}

MPoly MPoly::constant(std::vector<std::string> vars, const BigRational& c) {
    MPoly p(std::move(vars));
    if (!c.is_zero()) p.terms_.emplace(Exponents(p.vars_.size(), 0), c);
    return p;
}

MPoly MPoly::variable(std::vector<std::string> vars, const std::string& name) {
    MPoly p(std::move(vars));
    const int i = p.var_index(name);
    if (i < 0) throw UnknownVariableError("MPoly: variable '" + name + "' not in roster");
    Exponents e(p.vars_.size(), 0);
    e[static_cast<std::size_t>(i)] = 1;
    p.terms_.emplace(std::move(e), BigRational(1));
    return p;
}

MPoly MPoly::monomial(std::vector<std::string> vars, Exponents e, const BigRational& c) {
    MPoly p(std::move(vars));
    if (e.size() != p.vars_.size())
        throw Error("MPoly: exponent vector length mismatch");
    if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exponents& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](std::uint32_t v) { return v == 0; });
}

BigRational MPoly::constant_value() const {
    if (terms_.empty()) return BigRational(0);
    if (!is_constant()) throw Error("MPoly: not a constant");
    return terms_.begin()->second;
}

int MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const Exponents& e = terms_.rbegin()->first;  // grlex max has max total degree
    return static_cast<int>(std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
}

int MPoly::degree_in(const std::string& name) const {
    const int i = var_index(name);
    if (i < 0) return 0;
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(i)]);
    return terms_.empty() ? 0 : static_cast<int>(d);
}

BigRational MPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigRational(0) : it->second;
}

std::pair<Exponents, BigRational> MPoly::leading_term() const {
    if (terms_.empty()) throw ZeroPolynomialError("MPoly: leading term of zero");
    return *terms_.rbegin();
}

int MPoly::var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

void MPoly::add_term(const Exponents& e, const BigRational& c) {
    if (e.size() != vars_.size()) throw Error("MPoly: exponent vector length mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly MPoly::embedded(const std::vector<std::string>& roster) const {
    const auto target = canonical_roster(roster);
    if (target == vars_) return *this;
    std::vector<int> pos(vars_.size(), -1);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(target.begin(), target.end(), vars_[i]);
        if (it == target.end())
            throw UnknownVariableError("MPoly: roster embedding drops variable '" + vars_[i] + "'");
        pos[i] = static_cast<int>(it - target.begin());
    }
    MPoly r(target);
    for (const auto& [e, c] : terms_) {
        Exponents ne(target.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[static_cast<std::size_t>(pos[i])] = e[i];
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

MPoly MPoly::compacted() const {
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) used[i] = true;
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) kept.push_back(vars_[i]);
    if (kept.size() == vars_.size()) return *this;
    MPoly r(kept);
    for (const auto& [e, c] : terms_) {
        Exponents ne;
        ne.reserve(kept.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            if (used[i]) ne.push_back(e[i]);
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

namespace {

std::vector<std::string> union_roster(const MPoly& a, const MPoly& b) {
    std::vector<std::string> u = a.vars();
    u.insert(u.end(), b.vars().begin(), b.vars().end());
    return canonical_roster(std::move(u));
}

// a op b over a shared roster.
template <typename Op>
MPoly combine(const MPoly& a, const MPoly& b, Op op) {
    if (a.vars() != b.vars()) {
        const auto roster = union_roster(a, b);
        return combine(a.embedded(roster), b.embedded(roster), op);
    }
    MPoly r(a.vars());
    for (const auto& [e, c] : a.terms()) r.add_term(e, c);
    for (const auto& [e, c] : b.terms()) r.add_term(e, op(c));
    return r;
}

bool pure_xy(const MPoly& p) {
    for (const auto& v : p.vars())
        if (v != "x" && v != "y") return false;
    return true;
}

}  // namespace

MPoly MPoly::operator-() const {
    MPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    return combine(a, b, [](const BigRational& c) { return c; });
}

MPoly operator-(const MPoly& a, const MPoly& b) {
    return combine(a, b, [](const BigRational& c) { return -c; });
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.vars() != b.vars()) {
        const auto roster = union_roster(a, b);
        return a.embedded(roster) * b.embedded(roster);
    }
    // Dense path for parameter-free homogeneous binary forms.
    int da = 0, db = 0;
    if (pure_xy(a) && pure_xy(b) && !a.is_zero() && !b.is_zero() &&
        a.is_homogeneous_xy(&da) && b.is_homogeneous_xy(&db)) {
        const UniPoly ua = dehomogenize_xy(a, "x");
        const UniPoly ub = dehomogenize_xy(b, "x");
        return homogenize_to_xy(ua * ub, da + db).embedded(a.vars());
    }
    MPoly r(a.vars());
    const std::size_t n = a.vars().size();
    Exponents e(n);
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MPoly MPoly::scaled(const BigRational& c) const {
    MPoly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

MPoly MPoly::pow(unsigned long e) const {
    MPoly r = constant(vars_, 1);
    MPoly b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

bool MPoly::is_homogeneous_xy(int* deg) const {
    const int ix = var_index("x"), iy = var_index("y");
    std::int64_t d = -1;
    for (const auto& [e, c] : terms_) {
        std::int64_t t = 0;
        if (ix >= 0) t += e[static_cast<std::size_t>(ix)];
        if (iy >= 0) t += e[static_cast<std::size_t>(iy)];
        if (d < 0)
            d = t;
        else if (d != t)
            return false;
    }
    if (deg) *deg = d < 0 ? 0 : static_cast<int>(d);
    return true;
}

namespace {

std::string term_str(const std::vector<std::string>& vars, const Exponents& e,
                     const BigRational& abs_coef) {
    std::ostringstream os;
    bool printed = false;
    if (!abs_coef.is_one()) {
        os << abs_coef.str();
        printed = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (printed) os << "*";
        os << vars[i];
        if (e[i] > 1) os << "^" << e[i];
        printed = true;
    }
    if (!printed) os << abs_coef.str();
    return os.str();
}

}  // namespace

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const BigRational& c = it->second;
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        os << term_str(vars_, it->first, c.abs());
    }
    return os.str();
}

namespace {

std::string monomial_str(const std::vector<std::string>& vars, const Exponents& e,
                         const BigRational& c) {
    std::string s = c.sign() < 0 ? "-" : "";
    return s + term_str(vars, e, c.abs());
}

}  // namespace

MPoly exact_div(const MPoly& num, const MPoly& den) {
    if (den.is_zero()) throw Error("exact_div: division by zero polynomial");
    if (num.vars() != den.vars()) {
        const auto roster = union_roster(num, den);
        return exact_div(num.embedded(roster), den.embedded(roster));
    }
    if (num.is_zero()) return MPoly(num.vars());

    // Dense path for parameter-free homogeneous binary forms.
    int dn = 0, dd = 0;
    if (pure_xy(num) && pure_xy(den) && num.is_homogeneous_xy(&dn) &&
        den.is_homogeneous_xy(&dd)) {
        if (dn < dd)
            throw NonDivisibleError("exact_div: quotient degree would be negative",
                                    num.leading_term().second.str());
        const UniPoly un = dehomogenize_xy(num, "x");
        const UniPoly ud = dehomogenize_xy(den, "x");
        auto [q, r] = UniPoly::divmod(un, ud);
        if (!r.is_zero())
            throw NonDivisibleError("exact_div: remainder " + r.str(), r.str());
        MPoly quotient = homogenize_to_xy(q, dn - dd).embedded(num.vars());
        if (quotient * den != num)
            throw NonDivisibleError("exact_div: verification failed", num.str());
        return quotient;
    }

    const std::size_t n = num.vars().size();
    const auto [lt_e, lt_c] = den.leading_term();
    MPoly q(num.vars());
    MPoly rem = num;
    Exponents shift(n);
    while (!rem.is_zero()) {
        const auto [re, rc] = rem.leading_term();
        for (std::size_t i = 0; i < n; ++i) {
            if (re[i] < lt_e[i])
                throw NonDivisibleError(
                    "exact_div: obstructing term " + monomial_str(num.vars(), re, rc),
                    monomial_str(num.vars(), re, rc));
            shift[i] = re[i] - lt_e[i];
        }
        const BigRational f = rc / lt_c;
        q.add_term(shift, f);
        rem = rem - den.scaled(f) * MPoly::monomial(num.vars(), shift, BigRational(1));
    }
    if (q * den != num)
        throw NonDivisibleError("exact_div: verification failed", num.str());
    return q;
}

MPoly specialize(const MPoly& p, const std::map<std::string, Binding>& bindings) {
    std::vector<int> bound_idx;
    std::vector<const Binding*> bound_val;
    std::vector<std::string> result_vars;
    for (const auto& [name, val] : bindings) {
        const int i = p.var_index(name);
        if (i < 0)
            throw UnknownVariableError("specialize: variable '" + name + "' not in roster");
        bound_idx.push_back(i);
        bound_val.push_back(&val);
    }
    std::vector<bool> is_bound(p.vars().size(), false);
    for (int i : bound_idx) is_bound[static_cast<std::size_t>(i)] = true;
    for (std::size_t i = 0; i < p.vars().size(); ++i)
        if (!is_bound[i]) result_vars.push_back(p.vars()[i]);
    for (const Binding* b : bound_val)
        if (std::holds_alternative<MPoly>(*b)) {
            const auto& bv = std::get<MPoly>(*b).vars();
            result_vars.insert(result_vars.end(), bv.begin(), bv.end());
        }
    const auto roster = canonical_roster(result_vars);

    MPoly result(roster);
    for (const auto& [e, c] : p.terms()) {
        Exponents ne(roster.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (is_bound[i] || e[i] == 0) continue;
            auto it = std::find(roster.begin(), roster.end(), p.vars()[i]);
            ne[static_cast<std::size_t>(it - roster.begin())] = e[i];
        }
        MPoly term = MPoly::monomial(roster, ne, c);
        for (std::size_t k = 0; k < bound_idx.size(); ++k) {
            const std::uint32_t exp = e[static_cast<std::size_t>(bound_idx[k])];
            if (exp == 0) continue;
            if (std::holds_alternative<BigRational>(*bound_val[k])) {
                term = term.scaled(std::get<BigRational>(*bound_val[k]).pow(exp));
            } else {
                term = term * std::get<MPoly>(*bound_val[k]).embedded(roster).pow(exp);
            }
            if (term.is_zero()) break;
        }
        result = result + term;
    }
    return result;
}

std::pair<BigRational, MPoly> content_primitive(const MPoly& p) {
    if (p.is_zero()) throw ZeroPolynomialError("content_primitive: zero polynomial");
    BigInt num_gcd(0), den_lcm(1);
    for (const auto& [e, c] : p.terms()) {
        num_gcd = gcd_int(num_gcd, c.numerator());
        den_lcm = lcm_int(den_lcm, c.denominator());
    }
    BigRational content(num_gcd, den_lcm);
    if (p.leading_term().second.sign() < 0) content = -content;
    return {content, p.scaled(content.inv())};
}

HomForm::HomForm(MPoly p) : p_(std::move(p)) {
    if (p_.is_zero()) throw ZeroPolynomialError("HomForm: zero form");
    if (!p_.is_homogeneous_xy(&deg_))
        throw Error("HomForm: not homogeneous in (x, y): " + p_.str());
}

MPoly resultant2(const HomForm& F, const HomForm& G) {
    const int d = F.degree();
    if (d != G.degree() || d < 1)
        throw DegreeMismatchError("resultant2: forms must have equal degree >= 1");

    const auto roster = union_roster(F.poly(), G.poly());
    const MPoly pf = F.poly().embedded(roster);
    const MPoly pg = G.poly().embedded(roster);
    std::vector<std::string> params;
    for (const auto& v : roster)
        if (v != "x" && v != "y") params.push_back(v);

    // Coefficient of x^i y^{d-i} as an element of the parameter ring.
    auto xcoeffs = [&](const MPoly& p) {
        std::vector<MPoly> cs(static_cast<std::size_t>(d) + 1, MPoly(params));
        const int ix = p.var_index("x");
        for (const auto& [e, c] : p.terms()) {
            const std::uint32_t i = ix >= 0 ? e[static_cast<std::size_t>(ix)] : 0;
            Exponents pe;
            pe.reserve(params.size());
            for (std::size_t k = 0; k < e.size(); ++k)
                if (roster[k] != "x" && roster[k] != "y") pe.push_back(e[k]);
            cs[i].add_term(pe, c);
        }
        return cs;
    };
    const auto fc = xcoeffs(pf), gc = xcoeffs(pg);

    // Sylvester matrix, rows of F then rows of G, descending coefficients.
    const int n = 2 * d;
    auto entry = [&](int r, int col) -> MPoly {
        const std::vector<MPoly>& cs = r < d ? fc : gc;
        const int off = r < d ? r : r - d;
        const int j = d - (col - off);  // coefficient index x^j
        if (col < off || j < 0 || j > d) return MPoly(params);
        return cs[static_cast<std::size_t>(j)];
    };

    // Expansion by rows with memoization over used-column subsets; exact in
    // any coefficient ring.
    std::map<std::uint32_t, MPoly> minors{{0u, MPoly::constant(params, 1)}};
    for (int r = 0; r < n; ++r) {
        std::map<std::uint32_t, MPoly> next;
        for (const auto& [mask, val] : minors) {
            if (val.is_zero()) continue;
            int below = 0;
            for (int col = 0; col < n; ++col) {
                const std::uint32_t bit = 1u << col;
                if (mask & bit) {
                    ++below;
                    continue;
                }
                MPoly e = entry(r, col);
                if (e.is_zero()) continue;
                MPoly contrib = val * e;
                if ((r - below) % 2 != 0) contrib = -contrib;
                auto [it, inserted] = next.emplace(mask | bit, contrib);
                if (!inserted) it->second = it->second + contrib;
            }
        }
        minors = std::move(next);
        if (minors.empty()) return MPoly(params);
    }
    const auto it = minors.find((n >= 32 ? 0xffffffffu : (1u << n) - 1u));
    return it == minors.end() ? MPoly(params) : it->second;
}

UniPoly dehomogenize_xy(const MPoly& p, const std::string& zvar) {
    const int ix = p.var_index("x");
    for (const auto& v : p.vars())
        if (v != "x" && v != "y")
            throw Error("dehomogenize_xy: polynomial has parameter '" + v + "'");
    std::vector<BigRational> cs;
    for (const auto& [e, c] : p.terms()) {
        const std::uint32_t i = ix >= 0 ? e[static_cast<std::size_t>(ix)] : 0;
        if (cs.size() <= i) cs.resize(i + 1, BigRational(0));
        cs[i] += c;
    }
    return UniPoly::from_coeffs(zvar, std::move(cs));
}

MPoly homogenize_to_xy(const UniPoly& u, int deg) {
    if (u.degree() > deg) throw Error("homogenize_to_xy: degree too small");
    MPoly r(std::vector<std::string>{"x", "y"});
    for (int i = 0; i <= u.degree(); ++i) {
        const BigRational c = u.coeff(static_cast<std::size_t>(i));
        if (c.is_zero()) continue;
        r.add_term({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(deg - i)}, c);
    }
    return r;
}

MPoly mpoly_from_unipoly(const UniPoly& u, const std::string& var) {
    MPoly r(std::vector<std::string>{var});
    for (int i = 0; i <= u.degree(); ++i) {
        const BigRational c = u.coeff(static_cast<std::size_t>(i));
        if (!c.is_zero()) r.add_term({static_cast<std::uint32_t>(i)}, c);
    }
    return r;
}

}  // namespace p1dyn
