#include <doctest.h>

#include <random>

#include "csplab/errors.hpp"
#include "csplab/qproduct.hpp"

using namespace csplab;
using namespace csplab::qexact;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == QPoly(std::vector<Int>{-1, 1}));
    CHECK(cyclotomic(2) == QPoly(std::vector<Int>{1, 1}));
    CHECK(cyclotomic(6) == QPoly(std::vector<Int>{1, -1, 1}));

    for (long d = 1; d <= 64; ++d) {
        QPoly prod = QPoly::one();
        for (long e = 1; e <= d; ++e) {
            if (d % e == 0) prod = prod * cyclotomic(e);
        }
        CHECK(prod == QPoly::monomial(1, d) - QPoly::one());
    }
}

TEST_CASE("evaluation at roots of unity by residue reduction") {
    const QPoly p = q_integer(3, 2);  // 1 + q^2 + q^4
    auto r2 = eval_at_primitive_root(p, 2);
    REQUIRE(r2.is_integer);
    CHECK(r2.value == 3);
    auto r3 = eval_at_primitive_root(p, 3);
    REQUIRE(r3.is_integer);
    CHECK(r3.value == 0);

    auto rq = eval_at_primitive_root(QPoly::monomial(1, 1), 4);
    CHECK_FALSE(rq.is_integer);
    REQUIRE(rq.residue.has_value());
    CHECK(*rq.residue == QPoly::monomial(1, 1));

    // d = 1 recovers the coefficient sum.
    const QPoly big = q_binomial(9, 4) * q_integer(7, 3);
    auto r1 = eval_at_primitive_root(big, 1);
    REQUIRE(r1.is_integer);
    CHECK(r1.value == big.value_at_one());
}

TEST_CASE("expand") {
    QProduct p1;
    p1.mul(6).div(2);
    CHECK(expand(p1) == q_integer(3, 2));

    QProduct h3row;  // [16][12] / [2][2]
    h3row.mul(16).mul(12).div(2).div(2);
    CHECK(expand(h3row).value_at_one() == 48);

    QProduct bad;
    bad.mul(5).div(3);
    CHECK_THROWS_AS(expand(bad), NotPolynomialError);
}

TEST_CASE("product evaluation via the factor calculus") {
    QProduct p1;
    p1.mul(6).div(2);
    auto r = eval_product_at_root(p1, 2);
    REQUIRE(r.is_integer);
    CHECK(r.value == 3);

    QProduct binom42;  // [4][3] / [2][1]
    binom42.mul(4).mul(3).div(2).div(1);
    auto r2 = eval_product_at_root(binom42, 2);
    REQUIRE(r2.is_integer);
    CHECK(r2.value == 2);

    // d = 1 is the plain ratio of the indices.
    QProduct any;
    any.mul(10, 2).mul(9).div(6).div(3);
    auto r1 = eval_product_at_root(any, 1);
    REQUIRE(r1.is_integer);
    CHECK(r1.value == Int(10) * 9 / 6 / 3);

    QProduct negative;  // [2]/[4] vanishes to negative order at d = 4
    negative.mul(2).div(4);
    CHECK_THROWS_AS(eval_product_at_root(negative, 4), MultiplicityNegativeError);
}

namespace {

// Random products that are guaranteed to expand: q-binomials, q-integers,
// q-Catalan blocks, and double-factorial cancellations, with random
// substitutions.
QProduct random_polynomial_product(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> small(1, 6), mid(1, 12), subs(1, 3), blocks(1, 4);
    QProduct prod;
    const int nblocks = blocks(rng);
    for (int b = 0; b < nblocks; ++b) {
        const int s = subs(rng);
        switch (rng() % 4) {
            case 0: {  // [x+y choose x]_{q^s} in factorial form
                const int x = small(rng), y = small(rng);
                for (int i = 1; i <= x + y; ++i) prod.mul(i, s);
                for (int i = 1; i <= x; ++i) prod.div(i, s);
                for (int i = 1; i <= y; ++i) prod.div(i, s);
                break;
            }
            case 1:
                prod.mul(mid(rng), s);
                break;
            case 2: {  // [2a]!!_{q^s} = [2]_{q^s}^a * [a]!_{q^{2s}}
                const int a = small(rng);
                for (int i = 1; i <= a; ++i) prod.mul(2 * i, s).div(2, s);
                for (int i = 1; i <= a; ++i) prod.div(i, 2 * s);
                break;
            }
            default: {  // q-Catalan: [2x]! / ([x]! [x+1]!)
                const int x = small(rng);
                for (int i = 1; i <= 2 * x; ++i) prod.mul(i, s);
                for (int i = 1; i <= x; ++i) prod.div(i, s);
                for (int i = 1; i <= x + 1; ++i) prod.div(i, s);
                break;
            }
        }
    }
    return prod;
}

}  // namespace

TEST_CASE("the two evaluation routes agree on random polynomial products") {
    std::mt19937_64 rng(0xC0FFEE);
    int checked = 0;
    for (int trial = 0; trial < 520; ++trial) {
        const QProduct prod = random_polynomial_product(rng);
        QPoly expanded;
        try {
            expanded = expand(prod);
        } catch (const NotPolynomialError&) {
            continue;  // the double-factorial block can miss; skip those rare draws
        }
        ++checked;
        for (long d = 1; d <= 30; ++d) {
            const auto direct = eval_at_primitive_root(expanded, d);
            const auto calc = eval_product_at_root(prod, d);
            CHECK(direct.is_integer == calc.is_integer);
            if (direct.is_integer && calc.is_integer) {
                CHECK(direct.value == calc.value);
            }
        }
    }
    CHECK(checked >= 500);
}

TEST_CASE("q-Lucas reduction of binomials at roots of unity") {
    std::mt19937_64 rng(0x5EED);
    std::uniform_int_distribution<long> ns(0, 40), ds(2, 12);
    for (int trial = 0; trial < 200; ++trial) {
        const long n = ns(rng);
        std::uniform_int_distribution<long> ks(0, n);
        const long k = ks(rng);
        const long d = ds(rng);
        const long a = n / d, b = n % d, r = k / d, s = k % d;
        const auto lhs = eval_at_primitive_root(q_binomial(n, k), d);
        const QPoly rhs_poly = QPoly::constant(binomial(a, r)) * q_binomial(b, s);
        const auto rhs = eval_at_primitive_root(rhs_poly, d);
        CHECK(lhs.is_integer == rhs.is_integer);
        if (lhs.is_integer) {
            CHECK(lhs.value == rhs.value);
        } else {
            CHECK(*lhs.residue == *rhs.residue);
        }
    }
}
