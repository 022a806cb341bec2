// Acceptance suite: runs every gate criterion end to end and prints one
// PASS/FAIL line per criterion.  Exits nonzero if any criterion fails.

#include <chrono>
#include <map>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>

#include "csplab/errors.hpp"
#include "csplab/verify.hpp"

using namespace csplab;
using cox::CoxType;
using cox::ParabolicClass;
using verify::GroupReport;
using verify::Verdict;

namespace {

int g_failures = 0;

class Criterion {
public:
    explicit Criterion(std::string name) : name_(std::move(name)), start_(clock_t::now()) {}

    void require(bool ok, const std::string& what) {
        if (!ok) {
            ok_ = false;
            if (detail_.empty()) detail_ = what;
        }
    }

    ~Criterion() {
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(clock_t::now() - start_).count();
        if (ok_) {
            std::printf("[PASS] %s (%lld ms)\n", name_.c_str(), static_cast<long long>(ms));
        } else {
            std::printf("[FAIL] %s: %s (%lld ms)\n", name_.c_str(), detail_.c_str(),
                        static_cast<long long>(ms));
            ++g_failures;
        }
        std::fflush(stdout);
    }

private:
    using clock_t = std::chrono::steady_clock;
    std::string name_;
    clock_t::time_point start_;
    bool ok_ = true;
    std::string detail_;
};

std::string row_context(const CoxType& W, int m, const verify::ClassReport& r, long d) {
    std::ostringstream os;
    os << W.name() << " m=" << m << " lambda=" << r.cls.canonical_string() << " d=" << d;
    return os.str();
}

// Checks brute == poly (and closed where present) on every class of a group.
void check_group(Criterion& crit, const CoxType& W, int m, bool expect_closed) {
    GroupReport group;
    try {
        group = verify::verify_group(W, m, {}, 2);
    } catch (const std::exception& e) {
        crit.require(false, W.name() + ": " + e.what());
        return;
    }
    crit.require(group.partition_complete, W.name() + ": face partition incomplete");
    for (const auto& r : group.classes) {
        if (r.verdict == Verdict::Unsupported) continue;
        for (const auto& row : r.rows) {
            crit.require(row.brute.has_value() && row.poly.has_value(),
                         row_context(W, m, r, row.d) + ": missing column");
            if (row.brute && row.poly) {
                crit.require(*row.brute == *row.poly,
                             row_context(W, m, r, row.d) + ": brute " + row.brute->str() +
                                 " != poly " + row.poly->str());
            }
            if (expect_closed && !r.cls.is_full()) {
                crit.require(row.closed.has_value(),
                             row_context(W, m, r, row.d) + ": closed form missing");
            }
            if (row.closed && row.brute) {
                crit.require(*row.closed == *row.brute,
                             row_context(W, m, r, row.d) + ": closed " + row.closed->str() +
                                 " != brute " + row.brute->str());
            }
        }
    }
}

long count_faces_of_size(const polygon::Model& model, const std::vector<polygon::Face>& faces,
                         size_t size) {
    long c = 0;
    for (const auto& f : faces) c += f.size() == size;
    return c;
}

}  // namespace

int main() {
    // 1. Type A full cyclic sieving, m = 1 and m = 2.
    {
        Criterion crit("criterion 1: type A cyclic sieving (m=1 n=3..7, m=2 n=3..5)");
        for (int n = 3; n <= 7; ++n) check_group(crit, CoxType::A(n - 1), 1, false);
        for (int n = 3; n <= 5; ++n) check_group(crit, CoxType::A(n - 1), 2, false);
        // Spot target: the hexagon long-diagonal class.
        const auto report = verify::verify_class(CoxType::A(3), 1, {CoxType::A(3), {2, 2}}, true);
        const std::vector<long> expect{3, 3, 0, 0};
        for (size_t i = 0; i < 4; ++i) {
            crit.require(report.rows[i].brute && *report.rows[i].brute == expect[i] &&
                             report.rows[i].poly && *report.rows[i].poly == expect[i],
                         "hexagon spot target row " + std::to_string(i));
        }
    }

    // 2. Type B full cyclic sieving with closed forms.
    {
        Criterion crit("criterion 2: type B cyclic sieving (m=1 n=2..5, m=2 n=2..4)");
        for (int n = 2; n <= 5; ++n) check_group(crit, CoxType::B(n), 1, true);
        for (int n = 2; n <= 4; ++n) check_group(crit, CoxType::B(n), 2, true);
        const GroupReport b2 = verify::verify_group(CoxType::B(2), 1);
        crit.require(b2.total_faces == 13, "B2 total faces");
        std::map<std::string, Int> sizes;
        for (const auto& r : b2.classes) sizes[r.cls.canonical_string()] = *r.rows[0].brute;
        crit.require(sizes.at("-") == 1 && sizes.at("1") == 3 && sizes.at("2") == 3 &&
                         sizes.at("1,1") == 6,
                     "B2 class sizes");
    }

    // 3. Dihedral models: vertex and facet counts, half-turn counts, full sweeps.
    {
        Criterion crit("criterion 3: dihedral sweeps (k=3..12, m=1..3)");
        for (int k = 3; k <= 12; ++k) {
            for (int m = 1; m <= 3; ++m) {
                const CoxType W = CoxType::I2(k);
                check_group(crit, W, m, true);
                const auto model = polygon::build_model(W, m);
                const auto faces = polygon::enumerate_faces(model);
                const long N = model.N;
                crit.require(static_cast<long>(model.verts.size()) == N,
                             W.name() + " vertex count");
                crit.require(model.num_orbits == (k % 2 == 0 ? 2 : 1),
                             W.name() + " class split");
                if (k % 2 == 0) {
                    std::map<int, long> orbit_sizes;
                    for (int id : model.orbit_id) ++orbit_sizes[id];
                    for (const auto& [id, size] : orbit_sizes) {
                        crit.require(size == N / 2, W.name() + " unequal vertex classes");
                    }
                }
                crit.require(count_faces_of_size(model, faces, 2) == (m + 1) * N / 2,
                             W.name() + " facet count");
                if (k % 2 == 1 && (m * k) % 2 == 0) {
                    long stable = 0;
                    for (const auto& f : faces) {
                        if (f.size() == 2 && polygon::rotate_face_steps(model, f, N / 2) == f) ++stable;
                    }
                    crit.require(stable == N / 2,
                                 W.name() + " m=" + std::to_string(m) + " half-turn facet count");
                }
            }
        }
    }

    // 4. Type D at m = 1, including the unsupported classes and the partition.
    {
        Criterion crit("criterion 4: type D cyclic sieving (m=1, n=4..6)");
        for (int n = 4; n <= 6; ++n) {
            const CoxType W = CoxType::D(n);
            check_group(crit, W, 1, true);
            const GroupReport group = verify::verify_group(W, 1, {}, 2);
            bool has_unsupported = false;
            Int classified = 0;
            for (const auto& r : group.classes) {
                if (r.verdict == Verdict::Unsupported) {
                    has_unsupported = true;
                    crit.require(!r.rows.empty() && r.rows[0].brute.has_value(),
                                 W.name() + " unsupported class lacks brute counts");
                }
                if (!r.rows.empty() && r.rows[0].brute) classified += *r.rows[0].brute;
            }
            crit.require(classified == group.total_faces, W.name() + " census partition");
            if (n >= 5) crit.require(has_unsupported, W.name() + " expected unsupported classes");
        }
    }

    // 5. Evaluation oracle equivalence on randomized products, plus the
    //    binomial reduction identity at roots of unity.
    {
        Criterion crit("criterion 5: dual evaluation routes on random products");
        std::mt19937_64 rng(20260810);
        std::uniform_int_distribution<int> small(1, 6), mid(1, 12), subs(1, 3), blocks(1, 4);
        int checked = 0;
        for (int trial = 0; trial < 520; ++trial) {
            qexact::QProduct prod;
            const int nblocks = blocks(rng);
            for (int b = 0; b < nblocks; ++b) {
                const int s = subs(rng);
                switch (rng() % 4) {
                    case 0: {
                        const int x = small(rng), y = small(rng);
                        for (int i = 1; i <= x + y; ++i) prod.mul(i, s);
                        for (int i = 1; i <= x; ++i) prod.div(i, s);
                        for (int i = 1; i <= y; ++i) prod.div(i, s);
                        break;
                    }
                    case 1: prod.mul(mid(rng), s); break;
                    case 2: {
                        const int a = small(rng);
                        for (int i = 1; i <= a; ++i) prod.mul(2 * i, s).div(2, s);
                        for (int i = 1; i <= a; ++i) prod.div(i, 2 * s);
                        break;
                    }
                    default: {
                        const int x = small(rng);
                        for (int i = 1; i <= 2 * x; ++i) prod.mul(i, s);
                        for (int i = 1; i <= x; ++i) prod.div(i, s);
                        for (int i = 1; i <= x + 1; ++i) prod.div(i, s);
                        break;
                    }
                }
            }
            qexact::QPoly expanded;
            try {
                expanded = qexact::expand(prod);
            } catch (const NotPolynomialError&) {
                crit.require(false, "generator produced a non-polynomial product");
                continue;
            }
            ++checked;
            for (long d = 1; d <= 30; ++d) {
                const auto direct = qexact::eval_at_primitive_root(expanded, d);
                const auto calc = qexact::eval_product_at_root(prod, d);
                crit.require(direct.is_integer == calc.is_integer &&
                                 (!direct.is_integer || direct.value == calc.value),
                             "route mismatch at trial " + std::to_string(trial) +
                                 " d=" + std::to_string(d));
            }
        }
        crit.require(checked >= 500, "fewer than 500 products checked");

        std::uniform_int_distribution<long> ns(0, 40), ds(2, 12);
        for (int trial = 0; trial < 200; ++trial) {
            const long n = ns(rng);
            std::uniform_int_distribution<long> ks(0, n);
            const long k = ks(rng);
            const long d = ds(rng);
            const auto lhs = qexact::eval_at_primitive_root(qexact::q_binomial(n, k), d);
            const auto rhs_poly = qexact::QPoly::constant(qexact::binomial(n / d, k / d)) *
                                  qexact::q_binomial(n % d, k % d);
            const auto rhs = qexact::eval_at_primitive_root(rhs_poly, d);
            const bool same = lhs.is_integer == rhs.is_integer &&
                              (lhs.is_integer ? lhs.value == rhs.value : *lhs.residue == *rhs.residue);
            crit.require(same, "binomial reduction failed at trial " + std::to_string(trial));
        }
    }

    // 6. Exceptional tables: polynomiality, integrality, nonnegativity,
    //    realizability, and the printed spot values.
    {
        Criterion crit("criterion 6: exceptional tables H3 H4 F4 E6 E7 E8");
        for (const char* name : {"H3", "H4", "F4", "E6", "E7", "E8"}) {
            const CoxType W = cox::parse_cox_type(name, 0);
            std::vector<verify::ClassReport> reports;
            try {
                reports = verify::exceptional_table_check(W);
            } catch (const std::exception& e) {
                crit.require(false, std::string(name) + ": " + e.what());
                continue;
            }
            for (const auto& r : reports) {
                crit.require(r.verdict == Verdict::Pass,
                             std::string(name) + " " + r.cls.canonical_string() + ": " + r.note);
            }
        }
        const auto h3 = verify::exceptional_table_check(CoxType::H3());
        Int vertices = 0, edges = 0, facets = 0;
        for (const auto& r : h3) {
            const std::string name = r.cls.canonical_string();
            if (!r.rows[0].poly) continue;
            if (name == "A_1") edges = *r.rows[0].poly;
            if (name == "A_1^2" || name == "A_2" || name == "I_2(5)") vertices += *r.rows[0].poly;
            if (name == "trivial") facets = *r.rows[0].poly;
        }
        crit.require(edges == 48, "H3 edge class value");
        crit.require(vertices == 18, "H3 vertex classes sum");
        crit.require(vertices - edges + facets == 2, "H3 Euler characteristic");
    }

    // 7. Invariants: rotation-stable typing, the corank relation, and the
    //    odd/even divisor equivalences on every in-budget type B instance.
    {
        Criterion crit("criterion 7: invariant suite");
        std::vector<std::pair<CoxType, int>> models = {
            {CoxType::A(2), 1}, {CoxType::A(4), 1}, {CoxType::A(6), 1}, {CoxType::A(4), 2},
            {CoxType::B(3), 1}, {CoxType::B(4), 1}, {CoxType::B(3), 2},
            {CoxType::D(4), 1}, {CoxType::D(5), 1}, {CoxType::D(6), 1}, {CoxType::D(4), 2},
            {CoxType::I2(8), 2}, {CoxType::I2(9), 3},
        };
        for (const auto& [W, m] : models) {
            const auto model = polygon::build_model(W, m);
            const auto faces = polygon::enumerate_faces(model);
            for (const auto& f : faces) {
                const auto t0 = polygon::parabolic_type(model, f);
                const auto t1 = polygon::parabolic_type(model, polygon::rotate_face(model, f));
                if (!(t0 == t1)) {
                    crit.require(false, W.name() + ": rotation changed a parabolic type");
                    break;
                }
                if (static_cast<int>(f.size()) != W.rank() - t0.rank()) {
                    crit.require(false, W.name() + ": corank relation violated");
                    break;
                }
            }
        }
        // Odd-divisor counts agree with the doubled divisor on type B.
        for (int n = 2; n <= 5; ++n) {
            for (int m = 1; m <= (n <= 4 ? 2 : 1); ++m) {
                const CoxType W = CoxType::B(n);
                const auto model = polygon::build_model(W, m);
                const auto faces = polygon::enumerate_faces(model);
                for (const auto& cls : cox::enumerate_classes(W, true)) {
                    const auto sp = sieving::mu(W, m, cls);
                    for (long d : cox::divisors_of(model.N)) {
                        if (d % 2 == 0) continue;
                        const long f1 = polygon::fixed_face_count(model, faces, cls, d);
                        const long f2 = polygon::fixed_face_count(model, faces, cls, 2 * d);
                        crit.require(f1 == f2, W.name() + " m=" + std::to_string(m) +
                                                   " count equivalence at d=" + std::to_string(d));
                        crit.require(sieving::mu_eval(sp, d).value == sieving::mu_eval(sp, 2 * d).value,
                                     W.name() + " m=" + std::to_string(m) +
                                         " evaluation equivalence at d=" + std::to_string(d));
                    }
                }
            }
        }
    }

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", g_failures);
    return 1;
}
