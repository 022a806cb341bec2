#pragma once

#include <optional>
#include <string>
#include <vector>

#include "csplab/qproduct.hpp"

namespace csplab::cox {

enum class Family { A, B, D, I2, H3, H4, F4, E6, E7, E8 };

/// An irreducible finite Coxeter type.  `param` is the Coxeter rank for
/// A/B/D (so A(3) is the symmetric group on 4 letters) and the dihedral
/// order parameter k for I2(k); it is ignored for the exceptional types.
struct CoxType {
    Family family;
    int param = 0;

    static CoxType A(int rank) { return {Family::A, rank}; }
    static CoxType B(int n) { return {Family::B, n}; }
    static CoxType D(int n) { return {Family::D, n}; }
    static CoxType I2(int k) { return {Family::I2, k}; }
    static CoxType H3() { return {Family::H3, 3}; }
    static CoxType H4() { return {Family::H4, 4}; }
    static CoxType F4() { return {Family::F4, 4}; }
    static CoxType E6() { return {Family::E6, 6}; }
    static CoxType E7() { return {Family::E7, 7}; }
    static CoxType E8() { return {Family::E8, 8}; }

    bool is_classical() const {
        return family == Family::A || family == Family::B || family == Family::D ||
               family == Family::I2;
    }
    bool is_exceptional() const { return !is_classical(); }

    int rank() const;
    long coxeter_number() const;
    /// Exponents of the group itself (ascending).
    std::vector<long> exponents() const;
    std::string name() const;

    bool operator==(const CoxType& o) const { return family == o.family && param == o.param; }
};

CoxType parse_cox_type(const std::string& family, int rank_or_k);

enum class DCase {
    None,    // not type D
    Case1,   // lambda |- t <= n-2 together with a D-component of size n-t
    Case2,   // lambda |- n, all parts even, carries a +/- decoration
    Case3,   // lambda |- n, exactly one odd part size and it is > 1
    Case4,   // lambda |- n, parts of size 1 allowed, every other part even
    NoReflection  // lambda |- n with two or more distinct odd part sizes
};

enum class I2Class { Full, Rank1, Trivial };

/// A parabolic conjugacy class: a decorated integer partition for the
/// classical families, or a table label for the exceptional types.
struct ParabolicClass {
    CoxType W;
    std::vector<int> lambda;  // weakly decreasing parts
    int sign = 0;             // +1 / -1 for D Case2, else 0
    I2Class i2 = I2Class::Full;
    int i2_class_id = -1;     // 0/1 when I2 rank-1 classes split (k even)
    std::string label;        // exceptional table label, "trivial", or "W"

    int mult(int part) const;
    /// Number of parts.
    int parts_count() const { return static_cast<int>(lambda.size()); }
    /// Sum of parts.
    int parts_sum() const;
    /// Rank of a parabolic subgroup in this class.
    int rank() const;
    /// Implicit B/D-component size n - |lambda| (B and D Case1 only).
    int tail_component() const;

    DCase d_case() const;
    bool is_full() const;     // the class of W itself
    bool is_trivial() const;  // the class of the trivial subgroup

    std::string canonical_string() const;
    bool operator==(const ParabolicClass& o) const;
    bool operator<(const ParabolicClass& o) const;  // deterministic report order
};

/// Restriction exponents and quotient degrees attached to a class.
struct ClassData {
    std::vector<long> restriction_exponents;
    std::vector<qexact::QFactor> quotient_degrees;  // ready for a QProduct denominator
    bool reflection_property = true;
};

/// Whether the normalizer quotient acts as a reflection group (so a sieving
/// polynomial exists for the class).
bool has_reflection_property(const ParabolicClass& cls);

/// All parabolic classes of W, ordered deterministically (W itself first when
/// include_full, trivial class last).
std::vector<ParabolicClass> enumerate_classes(const CoxType& W, bool include_full);

/// Exponent/degree data for a supported class.  Throws UnsupportedClassError
/// when the reflection property fails; callers pre-filter via
/// has_reflection_property.
ClassData class_data(const CoxType& W, const ParabolicClass& cls, int m);

/// Parse the CLI partition syntax, e.g. "2,2", "2,2:+", "1:j1", "-" (empty),
/// "rank1:0", or an exceptional label.  Returns nothing on malformed input.
std::optional<ParabolicClass> parse_lambda(const CoxType& W, const std::string& text);

std::vector<long> divisors_of(long n);

}  // namespace csplab::cox
