#include "csplab/qproduct.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "csplab/errors.hpp"

namespace csplab::qexact {

QPoly cyclotomic(long d) {
    if (d < 1) throw std::invalid_argument("cyclotomic: d must be positive");
    static std::map<long, QPoly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);

    // Fill the cache bottom-up over the divisors of d: Phi_e is q^e - 1
    // divided exactly by Phi_f for every proper divisor f of e.
    for (long e = 1; e <= d; ++e) {
        if (d % e != 0 || cache.count(e)) continue;
        std::vector<Int> c(static_cast<size_t>(e) + 1);
        c[0] = -1;
        c.back() = 1;
        QPoly phi(std::move(c));
        for (long f = 1; f < e; ++f) {
            if (e % f == 0) phi = phi.divmod_monic(cache.at(f)).first;
        }
        cache[e] = std::move(phi);
    }
    return cache.at(d);
}

RootEvalResult eval_at_primitive_root(const QPoly& p, long d) {
    QPoly r = p.mod_monic(cyclotomic(d));
    if (r.is_constant()) return RootEvalResult::integer(r.coeff(0));
    return RootEvalResult::non_constant(std::move(r));
}

std::string QFactor::to_string() const {
    std::ostringstream os;
    os << "[" << n << "]";
    if (s != 1) os << "_{q^" << s << "}";
    return os.str();
}

QProduct& QProduct::div_double_factorial(long n, long s) {
    for (long i = 1; i <= n; ++i) den.push_back({2 * i, s});
    return *this;
}

QProduct& QProduct::div_factorial(long n, long s) {
    for (long i = 2; i <= n; ++i) den.push_back({i, s});
    return *this;
}

std::string QProduct::to_string() const {
    std::ostringstream os;
    if (num.empty()) {
        os << "1";
    } else {
        for (const auto& f : num) os << f.to_string();
    }
    if (!den.empty()) {
        os << " / ";
        for (const auto& f : den) os << f.to_string();
    }
    return os.str();
}

namespace {

void check_factor(const QFactor& f) {
    if (f.n < 1 || f.s < 1) {
        throw std::invalid_argument("QProduct factor requires n >= 1 and s >= 1: " + f.to_string());
    }
}

}  // namespace

QPoly expand(const QProduct& prod) {
    for (const auto& f : prod.num) check_factor(f);
    for (const auto& f : prod.den) check_factor(f);

    QPoly acc = QPoly::one();
    for (const auto& f : prod.num) acc = acc * q_integer(f.n, f.s);

    // Divide factor by factor, largest degree first; that order succeeds for
    // every product built in this project.  If a step fails, retry against
    // the fully multiplied denominator before declaring a non-polynomial.
    std::vector<QFactor> den = prod.den;
    std::stable_sort(den.begin(), den.end(), [](const QFactor& a, const QFactor& b) {
        return (a.n - 1) * a.s > (b.n - 1) * b.s;
    });
    QPoly cur = acc;
    for (size_t i = 0; i < den.size(); ++i) {
        auto q = cur.divide_exact(q_integer(den[i].n, den[i].s));
        if (!q) {
            QPoly full = QPoly::one();
            for (const auto& f : den) full = full * q_integer(f.n, f.s);
            auto qq = acc.divide_exact(full);
            if (qq) return *qq;
            throw NotPolynomialError("division by " + den[i].to_string() +
                                     " leaves a remainder in " + prod.to_string());
        }
        cur = std::move(*q);
    }
    return cur;
}

namespace {

// (q^a - 1) reduced modulo phi, accumulated into r.
QPoly mul_qa_minus_one_mod(const QPoly& r, long a, const QPoly& phi) {
    QPoly f = QPoly::monomial(1, a) - QPoly::one();
    return (r * f).mod_monic(phi);
}

}  // namespace

RootEvalResult eval_product_at_root(const QProduct& prod, long d) {
    if (d < 1) throw std::invalid_argument("eval_product_at_root: d must be positive");
    for (const auto& f : prod.num) check_factor(f);
    for (const auto& f : prod.den) check_factor(f);

    // Write each [n]_{q^s} as (q^{sn} - 1)/(q^s - 1) and collect the signed
    // exponent multiset.  At a primitive d-th root, q^a - 1 vanishes iff d | a.
    std::vector<long> pos, neg;
    for (const auto& f : prod.num) {
        pos.push_back(f.s * f.n);
        neg.push_back(f.s);
    }
    for (const auto& f : prod.den) {
        pos.push_back(f.s);
        neg.push_back(f.s * f.n);
    }

    long net_vanishing = 0;
    Int lim_num = 1, lim_den = 1;  // the n/k limit on matched vanishing factors
    std::vector<long> live_pos, live_neg;
    for (long a : pos) {
        if (a % d == 0) {
            ++net_vanishing;
            lim_num *= a;
        } else {
            live_pos.push_back(a);
        }
    }
    for (long a : neg) {
        if (a % d == 0) {
            --net_vanishing;
            lim_den *= a;
        } else {
            live_neg.push_back(a);
        }
    }

    if (net_vanishing > 0) return RootEvalResult::integer(0);
    if (net_vanishing < 0) {
        throw MultiplicityNegativeError("denominator vanishes to higher order at d=" +
                                        std::to_string(d) + " in " + prod.to_string());
    }

    // The value is (lim_num/lim_den) * N(zeta)/D(zeta) with N, D built from the
    // surviving factors.  It is a rational integer exactly when lim_num*N and
    // lim_den*D are proportional as residues modulo the cyclotomic polynomial.
    const QPoly phi = cyclotomic(d);
    QPoly rnum = QPoly::constant(lim_num);
    for (long a : live_pos) rnum = mul_qa_minus_one_mod(rnum, a % d, phi);
    QPoly rden = QPoly::constant(lim_den);
    for (long a : live_neg) rden = mul_qa_minus_one_mod(rden, a % d, phi);

    if (rden.is_zero()) {
        throw ModelAssertionError("surviving denominator reduced to zero mod cyclotomic");
    }
    // Find t with rnum == t * rden; bail out to the non-integer outcome if the
    // two residues are not proportional by an integer.
    long pivot = -1;
    for (long i = 0; i <= rden.degree(); ++i) {
        if (rden.coeff(i) != 0) { pivot = i; break; }
    }
    const Int& pn = rnum.coeff(pivot);
    const Int& pd = rden.coeff(pivot);
    if (pn % pd != 0) return RootEvalResult::non_constant(QPoly{});
    Int t = pn / pd;
    QPoly check = rden * QPoly::constant(t);
    if (check != rnum) return RootEvalResult::non_constant(QPoly{});
    return RootEvalResult::integer(std::move(t));
}

}  // namespace csplab::qexact
