#include <random>

#include "doctest.h"
#include "p1dyn/errors.hpp"
#include "p1dyn/numfield.hpp"

using namespace p1dyn;

namespace {

UniPoly upoly(std::vector<long> ascending) {
    std::vector<BigRational> c;
    for (long v : ascending) c.emplace_back(v);
    return UniPoly::from_coeffs("t", std::move(c));
}

const UniPoly kC6 = upoly({1, -1, 1});      // t^2 - t + 1
const UniPoly kI = upoly({1, 0, 1});        // t^2 + 1
const UniPoly kT2 = upoly({0, 0, 1});       // t^2
const UniPoly kSwapFix = upoly({-1, 0, 1}); // t^2 - 1 (reducible on purpose)

}  // namespace

TEST_CASE("nf_invert") {
    NFElem t = NFElem::generator(kC6);
    NFElem inv = t.inv();
    CHECK(inv == NFElem(kC6, upoly({1, -1})));  // 1 - t
    CHECK((t * inv).is_one());

    NFElem two = NFElem::from_rational(kI, 2);
    CHECK(two.inv() == NFElem::from_rational(kI, BigRational(1, 2)));

    NFElem nil = NFElem::generator(kT2);
    CHECK_THROWS_AS(nil.inv(), NotInvertibleError);
    try {
        nil.inv();
    } catch (const NotInvertibleError& e) {
        CHECK(e.gcd == "t");
    }
}

TEST_CASE("modulus mixing is a hard error") {
    NFElem a = NFElem::generator(kC6);
    NFElem b = NFElem::generator(kI);
    CHECK_THROWS_AS(a + b, Error);
    CHECK_THROWS_AS(a * b, Error);
}

TEST_CASE("root_of_unity_order") {
    CHECK(root_of_unity_order(BigRational(-1), 10) == 2);
    CHECK(root_of_unity_order(BigRational(1), 10) == 1);
    CHECK_FALSE(root_of_unity_order(BigRational(2), 100).has_value());

    NFElem t = NFElem::generator(kC6);
    CHECK(root_of_unity_order(t, 12) == 6);
    // Repeated-squaring spot check: t^2 = t - 1, t^3 = -1, t^6 = 1.
    CHECK(t * t == NFElem(kC6, upoly({-1, 1})));
    CHECK(t.pow(3) == NFElem::from_rational(kC6, -1));
    CHECK(t.pow(6).is_one());

    CHECK_THROWS_AS(root_of_unity_order(BigRational(0), 5), Error);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<int> cd(-6, 6);
    auto rand_elem = [&](const UniPoly& m) {
        return NFElem(m, upoly({cd(rng), cd(rng)}));
    };
    for (int i = 0; i < 200; ++i) {
        const UniPoly& m = (i % 2) ? kC6 : kI;
        NFElem x = rand_elem(m), y = rand_elem(m), z = rand_elem(m);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        if (!x.is_zero()) {
            try {
                CHECK((x.inv() * x).is_one());
            } catch (const NotInvertibleError&) {
                // both moduli are irreducible, so this cannot happen
                CHECK(false);
            }
        }
    }
}

TEST_CASE("multiplier of an automorphism at its fixed points") {
    // h = [y:x], i.e. h(z) = 1/z, fixes the roots of t^2 - 1; h'(z) = -1/z^2.
    {
        NFElem q = NFElem::generator(kSwapFix);
        NFElem lambda = -(q * q).inv();
        CHECK(lambda.pow(2).is_one());
        CHECK_FALSE(lambda.is_one());
    }
    // g = [x-y:x], i.e. g(z) = (z-1)/z of order 3, fixes roots of t^2 - t + 1;
    // g'(z) = 1/z^2.
    {
        NFElem q = NFElem::generator(kC6);
        NFElem lambda = (q * q).inv();
        CHECK(lambda.pow(3).is_one());
        CHECK_FALSE(lambda.is_one());
    }
}

TEST_CASE("trace on the quotient algebra") {
    // Q[t]/(t^2 - t + 1): Tr(1) = 2, Tr(t) = 1 (sum of the two roots of C_6).
    CHECK(nf_trace(NFElem::from_rational(kC6, 1)) == BigRational(2));
    CHECK(nf_trace(NFElem::generator(kC6)) == BigRational(1));
    // Tr(t^2) = Tr(t - 1) = 1 - 2 = -1.
    CHECK(nf_trace(NFElem::generator(kC6).pow(2)) == BigRational(-1));
}
