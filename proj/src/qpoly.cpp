#include "csplab/qpoly.hpp"

#include <sstream>
#include <stdexcept>

#include "csplab/errors.hpp"

namespace csplab::qexact {

Int binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;  // exact at every step
    }
    return r;
}

Int multinomial(long n, const std::vector<long>& parts) {
    long sum = 0;
    for (long p : parts) sum += p;
    if (sum != n) throw std::invalid_argument("multinomial: parts do not sum to n");
    Int r = 1;
    long top = n;
    for (long p : parts) {
        r *= binomial(top, p);
        top -= p;
    }
    return r;
}

QPoly QPoly::constant(Int c) {
    if (c == 0) return QPoly{};
    std::vector<Int> v(1);
    v[0] = std::move(c);
    return QPoly(std::move(v));
}

QPoly QPoly::monomial(Int c, long e) {
    if (c == 0) return QPoly{};
    std::vector<Int> v(static_cast<size_t>(e) + 1);
    v.back() = std::move(c);
    return QPoly(std::move(v));
}

const Int& QPoly::coeff(long i) const {
    static const Int kZero = 0;
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(i)];
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int QPoly::eval(const Int& x) const {
    Int r = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
}

QPoly QPoly::operator+(const QPoly& rhs) const {
    std::vector<Int> v(std::max(coeffs_.size(), rhs.coeffs_.size()));
    for (size_t i = 0; i < v.size(); ++i) {
        if (i < coeffs_.size()) v[i] += coeffs_[i];
        if (i < rhs.coeffs_.size()) v[i] += rhs.coeffs_[i];
    }
    return QPoly(std::move(v));
}

QPoly QPoly::operator-() const {
    std::vector<Int> v = coeffs_;
    for (auto& c : v) c = -c;
    return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& rhs) const { return *this + (-rhs); }

QPoly QPoly::operator*(const QPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return QPoly{};
    std::vector<Int> v(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            v[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return QPoly(std::move(v));
}

std::pair<QPoly, QPoly> QPoly::divmod_monic(const QPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("divmod_monic: zero divisor");
    if (divisor.coeffs_.back() != 1) throw std::invalid_argument("divmod_monic: divisor is not monic");
    const long dd = divisor.degree();
    if (degree() < dd) return {QPoly{}, *this};
    std::vector<Int> rem = coeffs_;
    std::vector<Int> quot(static_cast<size_t>(degree() - dd) + 1);
    for (long i = degree(); i >= dd; --i) {
        Int c = rem[static_cast<size_t>(i)];
        if (c == 0) continue;
        quot[static_cast<size_t>(i - dd)] = c;
        for (long j = 0; j <= dd; ++j) {
            rem[static_cast<size_t>(i - dd + j)] -= c * divisor.coeffs_[static_cast<size_t>(j)];
        }
    }
    return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

std::optional<QPoly> QPoly::divide_exact(const QPoly& divisor) const {
    if (divisor.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
    if (is_zero()) return QPoly{};
    const long dd = divisor.degree();
    if (degree() < dd) return std::nullopt;
    const Int& lead = divisor.coeffs_.back();
    std::vector<Int> rem = coeffs_;
    std::vector<Int> quot(static_cast<size_t>(degree() - dd) + 1);
    for (long i = degree(); i >= dd; --i) {
        Int c = rem[static_cast<size_t>(i)];
        if (c == 0) continue;
        if (c % lead != 0) return std::nullopt;
        c /= lead;
        quot[static_cast<size_t>(i - dd)] = c;
        for (long j = 0; j <= dd; ++j) {
            rem[static_cast<size_t>(i - dd + j)] -= c * divisor.coeffs_[static_cast<size_t>(j)];
        }
    }
    for (const Int& c : rem) {
        if (c != 0) return std::nullopt;
    }
    return QPoly(std::move(quot));
}

std::string QPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Int& c = coeffs_[i];
        if (c == 0) continue;
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << a.str();
        } else {
            if (a != 1) os << a.str() << "*";
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

QPoly q_integer(long n, long s) {
    if (n < 0) throw std::invalid_argument("q_integer: negative n");
    if (s < 1) throw std::invalid_argument("q_integer: s must be positive");
    if (n == 0) return QPoly::zero();
    std::vector<Int> v(static_cast<size_t>(s) * (n - 1) + 1);
    for (long i = 0; i < n; ++i) v[static_cast<size_t>(s * i)] = 1;
    return QPoly(std::move(v));
}

QPoly q_factorial(long n, long s) {
    QPoly r = QPoly::one();
    for (long i = 2; i <= n; ++i) r = r * q_integer(i, s);
    return r;
}

QPoly q_double_factorial(long n, long s) {
    QPoly r = QPoly::one();
    for (long i = 1; i <= n; ++i) r = r * q_integer(2 * i, s);
    return r;
}

QPoly q_binomial(long n, long k, long s) {
    if (k < 0 || k > n) return QPoly::zero();
    return q_multinomial(n, {k, n - k}, s);
}

QPoly q_multinomial(long n, const std::vector<long>& parts, long s) {
    long sum = 0;
    for (long p : parts) {
        if (p < 0) throw std::invalid_argument("q_multinomial: negative part");
        sum += p;
    }
    if (sum != n) throw std::invalid_argument("q_multinomial: parts do not sum to n");
    QPoly num = q_factorial(n, s);
    for (long p : parts) {
        auto q = num.divide_exact(q_factorial(p, s));
        if (!q) throw ModelAssertionError("q_multinomial: factorial division left a remainder");
        num = std::move(*q);
    }
    return num;
}

}  // namespace csplab::qexact
