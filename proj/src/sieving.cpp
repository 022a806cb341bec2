#include "csplab/sieving.hpp"

#include <algorithm>
#include <map>

#include "csplab/errors.hpp"
#include "csplab/exceptional.hpp"

namespace csplab::sieving {

using cox::CoxType;
using cox::DCase;
using cox::Family;
using cox::ParabolicClass;
using qexact::QProduct;

namespace {

// Multiplicities of the distinct part sizes, ascending by size.
std::vector<std::pair<int, int>> size_mults(const std::vector<int>& lambda) {
    std::map<int, int> m;
    for (int p : lambda) ++m[p];
    return {m.begin(), m.end()};
}

// [top + i]_{q^2} for i = 1..l over the factorials of the multiplicities:
// the q^2-multinomial shared by the B and D constructions.
void push_q2_multinomial(QProduct& prod, long top, long l, const std::vector<int>& mults) {
    for (long i = 1; i <= l; ++i) prod.mul(top + i, 2);
    for (int mult : mults) prod.div_factorial(mult, 2);
}

QProduct product_a(const CoxType& W, int m, const ParabolicClass& cls) {
    const long n = W.param + 1;
    const long l = cls.parts_count();
    QProduct prod;
    for (long i = 2; i <= l; ++i) prod.mul(m * n + i);
    for (auto [size, mult] : size_mults(cls.lambda)) prod.div_factorial(mult);
    return prod;
}

QProduct product_b(const CoxType& W, int m, const ParabolicClass& cls) {
    const long n = W.param;
    const long l = cls.parts_count();
    QProduct prod;
    std::vector<int> mults;
    for (auto [size, mult] : size_mults(cls.lambda)) mults.push_back(mult);
    push_q2_multinomial(prod, m * n, l, mults);
    return prod;
}

QProduct product_d(const CoxType& W, int m, const ParabolicClass& cls, DCase dc) {
    const long n = W.param;
    const long M = static_cast<long>(m) * (n - 1);
    const long l = cls.parts_count();
    QProduct prod;
    std::vector<int> mults;
    for (auto [size, mult] : size_mults(cls.lambda)) mults.push_back(mult);
    push_q2_multinomial(prod, M, l, mults);
    if (dc == DCase::Case3) {
        int odd_mult = 0;
        for (auto [size, mult] : size_mults(cls.lambda)) {
            if (size % 2 == 1) odd_mult = mult;
        }
        prod.mul(2L * odd_mult).div(odd_mult);
    } else if (dc == DCase::Case4) {
        const long n1 = cls.mult(1);
        prod.mul(2 * M + 2 * l - n1).div(2 * M + 2 * l);
        prod.mul(2 * n1).div(n1);
    }
    return prod;
}

QProduct product_i2(const CoxType& W, int m, const ParabolicClass& cls) {
    const long k = W.param;
    QProduct prod;
    switch (cls.i2) {
        case cox::I2Class::Full: break;
        case cox::I2Class::Rank1:
            prod.mul(m * k + 2);
            if (k % 2 == 0) prod.div(2);
            break;
        case cox::I2Class::Trivial:
            prod.mul(m * k + 2).mul((m + 1) * k).div(2).div(k);
            break;
    }
    return prod;
}

QProduct product_exceptional(const CoxType& W, int m, const ParabolicClass& cls) {
    if (m != 1) {
        throw UnsupportedClassError("exceptional types are supported at m = 1 only");
    }
    if (cls.label == "W") return {};
    if (cls.label == "trivial") return fuss_catalan_product(W, 1);
    const cox::ExceptionalRow* row = cox::find_exceptional_row(W.family, cls.label);
    if (!row) throw UnsupportedClassError("no table row for class " + cls.label);
    QProduct prod;
    for (long a : row->num) prod.mul(a);
    for (long a : row->den) prod.div(a);
    return prod;
}

}  // namespace

QProduct fuss_catalan_product(const CoxType& W, int m) {
    const long h = W.coxeter_number();
    QProduct prod;
    for (long e : W.exponents()) prod.mul(m * h + e + 1).div(e + 1);
    return prod;
}

QProduct generic_product(const CoxType& W, int m, const ParabolicClass& cls) {
    const cox::ClassData data = cox::class_data(W, cls, m);
    const long h = W.coxeter_number();
    QProduct prod;
    for (long e : data.restriction_exponents) prod.mul(e + 1 + m * h);
    for (const auto& f : data.quotient_degrees) prod.den.push_back(f);
    return prod;
}

SievingPolynomial mu(const CoxType& W, int m, const ParabolicClass& cls) {
    if (!cox::has_reflection_property(cls)) {
        throw UnsupportedClassError("no sieving polynomial for class " + cls.canonical_string() +
                                    " in " + W.name());
    }
    SievingPolynomial sp;
    switch (W.family) {
        case Family::A:
            sp.product = product_a(W, m, cls);
            sp.provenance = "type A multinomial";
            break;
        case Family::B:
            sp.product = product_b(W, m, cls);
            sp.provenance = "type B q2-multinomial";
            break;
        case Family::D: {
            const DCase dc = cls.d_case();
            sp.product = product_d(W, m, cls, dc);
            sp.provenance = dc == DCase::Case3   ? "type D q2-multinomial with odd-block tail"
                            : dc == DCase::Case4 ? "type D q2-multinomial with singleton tail"
                                                 : "type D q2-multinomial";
            break;
        }
        case Family::I2:
            sp.product = product_i2(W, m, cls);
            sp.provenance = "dihedral table";
            break;
        default:
            sp.product = product_exceptional(W, m, cls);
            sp.provenance = cls.label == "trivial" ? "facet q-analogue" : "exceptional table";
            break;
    }
    sp.expanded = qexact::expand(sp.product);
    return sp;
}

MuEval mu_eval(const SievingPolynomial& sp, long d) {
    const auto direct = qexact::eval_at_primitive_root(sp.expanded, d);
    const auto shadow = qexact::eval_product_at_root(sp.product, d);
    if (direct.is_integer != shadow.is_integer ||
        (direct.is_integer && direct.value != shadow.value)) {
        throw ModelAssertionError("evaluation routes disagree at d=" + std::to_string(d) +
                                  " for " + sp.product.to_string());
    }
    return {direct.is_integer, direct.value};
}

MuEval mu_eval(const CoxType& W, int m, const ParabolicClass& cls, long d) {
    return mu_eval(mu(W, m, cls), d);
}

namespace {

// Fixed faces of a centrally symmetric dissection class under d-fold
// rotation, in terms of the polygon size, the number of parts and the part
// multiplicities.  Counts for odd d coincide with those for 2d.
Int closed_symmetric(long Ncap, long l, const std::vector<long>& mults, long d) {
    if (d % 2 == 1) d *= 2;
    if (Ncap % d != 0) throw std::invalid_argument("closed_symmetric: d does not divide N");
    std::vector<long> scaled;
    for (long mult : mults) {
        if ((2 * mult) % d != 0) return 0;
        scaled.push_back(2 * mult / d);
    }
    const long L = 2 * l / d;
    return qexact::multinomial(L, scaled) * qexact::binomial(Ncap / d + L - 1, L);
}

// The diameter-bearing D classes: a common multinomial with the top block
// and a factor 2, guarded by divisibility of the multiplicities and of one
// distinguished multiplicity (the odd-size block, or the singleton block).
Int closed_d_diameter(long Ncap, long l, const std::vector<long>& mults, long special_mult, long d) {
    if (d % 2 == 1) {
        for (long mult : mults) {
            if (mult % d != 0) return 0;
        }
        std::vector<long> parts;
        for (long mult : mults) parts.push_back(mult / d);
        parts.push_back(Ncap / 2 / d - 1);
        return 2 * qexact::multinomial(Ncap / 2 / d + l / d - 1, parts);
    }
    for (long mult : mults) {
        if ((2 * mult) % d != 0) return 0;
    }
    if (special_mult % d != 0) return 0;
    std::vector<long> parts;
    for (long mult : mults) parts.push_back(2 * mult / d);
    parts.push_back(Ncap / d - 1);
    return 2 * qexact::multinomial(Ncap / d + 2 * l / d - 1, parts);
}

}  // namespace

std::optional<Int> closed_form_fixed(const CoxType& W, int m, const ParabolicClass& cls, long d) {
    const long N = m * W.coxeter_number() + 2;
    if (W.is_classical() && N % d != 0) {
        throw std::invalid_argument("closed_form_fixed: d must divide mh+2");
    }
    if (cls.is_full()) return Int(1);

    switch (W.family) {
        case Family::A:
            return std::nullopt;
        case Family::B: {
            std::vector<long> mults;
            for (auto [size, mult] : size_mults(cls.lambda)) mults.push_back(mult);
            return closed_symmetric(N, cls.parts_count(), mults, d);
        }
        case Family::I2: {
            const long k = W.param;
            switch (cls.i2) {
                case cox::I2Class::Full: return Int(1);
                case cox::I2Class::Rank1:
                    if (d == 1) return Int(k % 2 == 0 ? N / 2 : N);
                    if (d == 2) return Int(k % 2 == 0 ? N / 2 : 0);
                    return Int(0);
                case cox::I2Class::Trivial:
                    if (d == 1) return Int((m + 1) * N / 2);
                    if (d == 2) return Int(k % 2 == 0 ? (m + 1) * N / 2 : N / 2);
                    return Int(0);
            }
            return std::nullopt;
        }
        case Family::D: {
            const long n = W.param;
            const long M = static_cast<long>(m) * (n - 1);
            const long l = cls.parts_count();
            std::vector<long> mults;
            for (auto [size, mult] : size_mults(cls.lambda)) mults.push_back(mult);
            switch (cls.d_case()) {
                case DCase::Case1:
                    return closed_symmetric(N, l, mults, d);
                case DCase::Case2:
                    return closed_symmetric(N, l, mults, d);
                case DCase::Case3: {
                    long odd_mult = 0;
                    for (auto [size, mult] : size_mults(cls.lambda)) {
                        if (size % 2 == 1) odd_mult = mult;
                    }
                    return closed_d_diameter(N, l, mults, odd_mult, d);
                }
                case DCase::Case4: {
                    const long n1 = cls.mult(1);
                    if (d == 1 || d == 2) {
                        // A bicolored diameter is the only way to survive a
                        // half-turn when n is odd; everything survives when n
                        // is even.
                        std::vector<long> parts;
                        Int value;
                        if (d == 2 && n % 2 == 1) {
                            parts.push_back(n1 - 1);
                            for (auto [size, mult] : size_mults(cls.lambda)) {
                                if (size >= 2) parts.push_back(mult);
                            }
                            parts.push_back(M);
                            value = qexact::multinomial(M + l - 1, parts);
                        } else {
                            for (long mult : mults) parts.push_back(mult);
                            parts.push_back(M);
                            value = qexact::multinomial(M + l, parts);
                            value *= 2 * (2 * M + 2 * l - n1);
                            if (value % (2 * M + 2 * l) != 0) {
                                throw ModelAssertionError("case 4 count is not integral");
                            }
                            value /= 2 * M + 2 * l;
                        }
                        return value;
                    }
                    return closed_d_diameter(N, l, mults, n1, d);
                }
                default:
                    return std::nullopt;
            }
        }
        default:
            return std::nullopt;  // exceptional types have table checks only
    }
}

}  // namespace csplab::sieving
