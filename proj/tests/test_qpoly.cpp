#include <doctest.h>

#include "csplab/qpoly.hpp"

using namespace csplab;
using namespace csplab::qexact;

namespace {

QPoly poly(std::initializer_list<long> cs) {
    std::vector<Int> v;
    for (long c : cs) v.push_back(c);
    return QPoly(std::move(v));
}

}  // namespace

TEST_CASE("q-integers") {
    CHECK(q_integer(0, 1).is_zero());
    CHECK(q_integer(3, 1) == poly({1, 1, 1}));
    CHECK(q_integer(3, 2) == poly({1, 0, 1, 0, 1}));
    CHECK(q_integer(1, 5) == QPoly::one());
}

TEST_CASE("q-binomials and multinomials") {
    CHECK(q_binomial(4, 2) == poly({1, 1, 2, 1, 1}));
    for (long n = 0; n <= 8; ++n) {
        CHECK(q_binomial(n, 0) == QPoly::one());
    }
    CHECK(q_multinomial(6, {2, 4}, 2) == q_binomial(6, 2, 2));

    // Specialization at q = 1 gives the ordinary coefficients.
    for (long n = 0; n <= 9; ++n) {
        for (long k = 0; k <= n; ++k) {
            CHECK(q_binomial(n, k).value_at_one() == binomial(n, k));
            CHECK(q_binomial(n, k, 3).value_at_one() == binomial(n, k));
        }
    }
    CHECK(q_multinomial(9, {2, 3, 4}).value_at_one() == multinomial(9, {2, 3, 4}));
}

TEST_CASE("binomial coefficient symmetry and positivity") {
    for (long n = 1; n <= 10; ++n) {
        for (long k = 0; k <= n; ++k) {
            const QPoly b = q_binomial(n, k);
            const long top = k * (n - k);
            CHECK(b.degree() == top);
            for (long i = 0; i <= top; ++i) {
                CHECK(b.coeff(i) > 0);
                CHECK(b.coeff(i) == b.coeff(top - i));
            }
        }
    }
}

TEST_CASE("double factorial") {
    CHECK(q_double_factorial(0) == QPoly::one());
    CHECK(q_double_factorial(2) == q_integer(2) * q_integer(4));
}

TEST_CASE("arithmetic and division") {
    const QPoly a = q_factorial(6);
    const QPoly b = q_factorial(4);
    auto q = a.divide_exact(b);
    REQUIRE(q.has_value());
    CHECK(*q == q_integer(5) * q_integer(6));
    CHECK_FALSE(q_integer(5).divide_exact(q_integer(3)).has_value());

    auto [quot, rem] = (a + QPoly::one()).divmod_monic(b);
    CHECK(quot * b + rem == a + QPoly::one());
    CHECK(rem.degree() < b.degree());
}

TEST_CASE("printing") {
    CHECK(poly({1, 0, 1, 0, 1}).to_string() == "1 + q^2 + q^4");
    CHECK(poly({0, -2, 3}).to_string() == "-2*q + 3*q^2");
    CHECK(QPoly::zero().to_string() == "0");
}
