#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csplab/qpoly.hpp"

namespace csplab::qexact {

/// The d-th cyclotomic polynomial, computed by exact division of q^d - 1 by
/// the cyclotomic polynomials of the proper divisors of d.  Cached.
QPoly cyclotomic(long d);

/// Outcome of evaluating an integer polynomial at a primitive d-th root of
/// unity.  The evaluation is a rational integer exactly when the residue
/// modulo the d-th cyclotomic polynomial is constant.
struct RootEvalResult {
    bool is_integer = false;
    Int value = 0;                  // meaningful iff is_integer
    std::optional<QPoly> residue;   // the non-constant residue, when available

    static RootEvalResult integer(Int v) {
        RootEvalResult r;
        r.is_integer = true;
        r.value = std::move(v);
        return r;
    }
    static RootEvalResult non_constant(QPoly res) {
        RootEvalResult r;
        r.residue = std::move(res);
        return r;
    }
};

/// Reduce p modulo the d-th cyclotomic polynomial; constant residue means
/// p(zeta_d) equals that constant for every primitive d-th root zeta_d.
RootEvalResult eval_at_primitive_root(const QPoly& p, long d);

/// One factor [n]_{q^s} of a formal product of q-integers.
struct QFactor {
    long n = 1;
    long s = 1;
    std::string to_string() const;
};

/// Formal quotient of products of q-integers with power substitutions.
/// Only meaningful as a polynomial when `expand` succeeds.
struct QProduct {
    std::vector<QFactor> num;
    std::vector<QFactor> den;

    QProduct& mul(long n, long s = 1) { num.push_back({n, s}); return *this; }
    QProduct& div(long n, long s = 1) { den.push_back({n, s}); return *this; }
    /// Append [2]_{q^s}[4]_{q^s}...[2n]_{q^s} to the denominator.
    QProduct& div_double_factorial(long n, long s = 1);
    /// Append [2]_{q^s}[3]_{q^s}...[n]_{q^s} to the denominator.
    QProduct& div_factorial(long n, long s = 1);

    std::string to_string() const;
};

/// Multiply out the numerator and divide by the denominator, checking
/// exactness.  Throws NotPolynomialError (carrying the offending factor)
/// if the quotient is not a polynomial.
QPoly expand(const QProduct& prod);

/// Evaluate the product at a primitive d-th root of unity without expanding,
/// via the root-of-unity calculus for q-integers: tally vanishing factors by
/// divisibility, take the n/k limit on the matched vanishing part, and reduce
/// the small surviving product modulo the cyclotomic polynomial.  Returns the
/// same outcome as eval_at_primitive_root(expand(prod), d) for every product
/// that expands to a polynomial.  Throws MultiplicityNegativeError when the
/// denominator vanishes to higher order (the input cannot be a polynomial).
RootEvalResult eval_product_at_root(const QProduct& prod, long d);

}  // namespace csplab::qexact
