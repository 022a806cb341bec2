#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "csplab/polygon.hpp"
#include "csplab/sieving.hpp"

namespace csplab::verify {

enum class Verdict { Pass, Fail, Unsupported };

struct DivisorRow {
    long d = 1;
    std::optional<Int> brute;   // absent when brute force was not requested / not possible
    std::optional<Int> poly;    // absent when the evaluation is not an integer
    std::optional<Int> closed;  // absent when no direct formula exists
    bool agree = true;
};

struct ClassReport {
    cox::ParabolicClass cls;
    int m = 1;
    std::vector<DivisorRow> rows;
    Verdict verdict = Verdict::Pass;
    std::string note;                      // first mismatch, or why the class is unsupported
    std::optional<bool> realizable;        // orbit-profile check (exceptional sweeps)
    std::vector<std::string> witnesses;    // fixed faces behind a mismatching brute count
};

struct GroupReport {
    cox::CoxType W;
    int m = 1;
    std::vector<ClassReport> classes;
    long total_faces = -1;
    bool partition_complete = false;  // every face typed, class counts sum to the total
    bool all_pass = false;
};

/// Divisor sweep for a single class: polynomial evaluations, closed forms,
/// and (optionally) brute-force fixed-face counts.  Budget and non-integer
/// evaluations are folded into the report instead of thrown.
ClassReport verify_class(const cox::CoxType& W, int m, const cox::ParabolicClass& cls,
                         bool with_brute, const polygon::Budget& budget = {});

/// Enumerate the whole complex once, type every face, and verify every class;
/// `jobs` class sweeps run in parallel with deterministic output.
GroupReport verify_group(const cox::CoxType& W, int m, const polygon::Budget& budget = {},
                         int jobs = 1);

/// Orbit counts recovered from a fixed-point profile by Moebius inversion
/// over the divisor lattice; realizable iff every count is a nonnegative
/// integer.  values[d] is the number of fixed points of the order-d element.
struct OrbitProfile {
    std::map<long, Int> orbit_counts;  // only the nonzero ones, when realizable
    bool realizable = false;
};
OrbitProfile csp_realizability(const std::map<long, Int>& values, long N);

/// Property checks for the exceptional tables: every class expands to a
/// polynomial, evaluates to nonnegative integers at every divisor of h+2,
/// and has a realizable fixed-point profile.
std::vector<ClassReport> exceptional_table_check(const cox::CoxType& W);

// Deterministic report rendering (sorted keys, no timestamps).
std::string reports_to_json(const std::vector<ClassReport>& reports, const std::string& command,
                            const std::string& config_summary);
std::string reports_to_csv(const std::vector<ClassReport>& reports);
std::string reports_to_markdown(const std::vector<ClassReport>& reports);

bool all_pass(const std::vector<ClassReport>& reports);

}  // namespace csplab::verify
