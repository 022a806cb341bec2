#pragma once

#include <optional>
#include <string>

#include "csplab/coxeter.hpp"
#include "csplab/qproduct.hpp"

namespace csplab::sieving {

/// A sieving polynomial: the factored form it was assembled from, its
/// expansion (expansion failure is a hard error), and which construction
/// produced it.
struct SievingPolynomial {
    qexact::QProduct product;
    qexact::QPoly expanded;
    std::string provenance;
};

/// The sieving polynomial of a class.  Throws UnsupportedClassError when the
/// class has no reflection-group quotient, NotPolynomialError if expansion
/// fails (which signals a data or formula bug).
SievingPolynomial mu(const cox::CoxType& W, int m, const cox::ParabolicClass& cls);

/// The generic factored form assembled directly from restriction exponents
/// and quotient degrees; expands to the same polynomial as mu().
qexact::QProduct generic_product(const cox::CoxType& W, int m, const cox::ParabolicClass& cls);

/// The facet-count q-analogue prod [mh + e_i + 1]_q / [e_i + 1]_q.
qexact::QProduct fuss_catalan_product(const cox::CoxType& W, int m);

struct MuEval {
    bool is_integer = false;
    Int value = 0;
};

/// mu evaluated at a primitive d-th root of unity, by cyclotomic-residue
/// reduction with the factor-calculus route run as a shadow check; the two
/// routes disagreeing is an internal error.
MuEval mu_eval(const cox::CoxType& W, int m, const cox::ParabolicClass& cls, long d);
MuEval mu_eval(const SievingPolynomial& sp, long d);

/// The explicit fixed-face counts for the cases where a direct formula is
/// known (B, D, I2); absent for type A and the exceptional types.
/// Requires d | mh + 2.
std::optional<Int> closed_form_fixed(const cox::CoxType& W, int m,
                                     const cox::ParabolicClass& cls, long d);

}  // namespace csplab::sieving
