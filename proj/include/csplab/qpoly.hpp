#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csplab/bigint.hpp"

namespace csplab::qexact {

/// Dense integer polynomial in q, coefficient of q^i stored at index i.
/// The zero polynomial stores an empty coefficient vector; otherwise the
/// leading coefficient is nonzero.  Values are immutable after construction.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static QPoly zero() { return QPoly{}; }
    static QPoly one() { return constant(1); }
    static QPoly constant(Int c);
    /// c * q^e
    static QPoly monomial(Int c, long e);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    const std::vector<Int>& coeffs() const { return coeffs_; }
    /// Coefficient of q^i (0 outside the stored range).
    const Int& coeff(long i) const;

    Int eval(const Int& x) const;
    Int value_at_one() const { return eval(1); }

    QPoly operator+(const QPoly& rhs) const;
    QPoly operator-(const QPoly& rhs) const;
    QPoly operator*(const QPoly& rhs) const;
    QPoly operator-() const;

    bool operator==(const QPoly& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const QPoly& rhs) const { return !(*this == rhs); }

    /// Quotient and remainder; the divisor must be monic so everything stays
    /// in integer coefficients.
    std::pair<QPoly, QPoly> divmod_monic(const QPoly& divisor) const;

    /// Exact division by an arbitrary nonzero integer polynomial.
    /// Returns nothing if the division leaves a remainder.
    std::optional<QPoly> divide_exact(const QPoly& divisor) const;

    /// Remainder modulo a monic divisor.
    QPoly mod_monic(const QPoly& divisor) const { return divmod_monic(divisor).second; }

    /// Canonical ascending-degree form, e.g. "1 + q + 2*q^2".
    std::string to_string() const;

private:
    void trim();
    std::vector<Int> coeffs_;
};

/// [n]_{q^s} = 1 + q^s + ... + q^{s(n-1)}; [0] is the zero polynomial.
QPoly q_integer(long n, long s = 1);
/// [n]_{q^s}! = [1][2]...[n], empty product = 1.
QPoly q_factorial(long n, long s = 1);
/// [2n]_{q^s}!! = [2][4]...[2n], empty product = 1.
QPoly q_double_factorial(long n, long s = 1);
/// Gaussian binomial; requires 0 <= k <= n (returns 0 for k outside).
QPoly q_binomial(long n, long k, long s = 1);
/// q-multinomial; requires sum(parts) == n.
QPoly q_multinomial(long n, const std::vector<long>& parts, long s = 1);

}  // namespace csplab::qexact
