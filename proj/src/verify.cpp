#include "csplab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "csplab/errors.hpp"
#include "csplab/exceptional.hpp"

namespace csplab::verify {

using cox::CoxType;
using cox::ParabolicClass;
using polygon::Face;
using polygon::Model;

namespace {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Unsupported: return "unsupported";
    }
    return "?";
}

// Fills poly/closed columns and the agreement verdict; `brute` may be absent.
ClassReport sweep_class(const CoxType& W, int m, const ParabolicClass& cls,
                        const std::map<long, Int>* brute, std::string brute_note) {
    ClassReport report;
    report.cls = cls;
    report.m = m;
    const long N = m * W.coxeter_number() + 2;
    const bool supported = cox::has_reflection_property(cls);
    std::optional<sieving::SievingPolynomial> sp;
    if (supported) {
        try {
            sp = sieving::mu(W, m, cls);
        } catch (const NotPolynomialError& e) {
            report.verdict = Verdict::Fail;
            report.note = std::string("expansion failed: ") + e.what();
            return report;
        }
    } else {
        report.verdict = Verdict::Unsupported;
        report.note = "class has no reflection-group quotient; brute-force counts only";
    }

    for (long d : cox::divisors_of(N)) {
        DivisorRow row;
        row.d = d;
        if (brute) {
            auto it = brute->find(d);
            if (it != brute->end()) row.brute = it->second;
        }
        if (sp) {
            const auto ev = sieving::mu_eval(*sp, d);
            if (ev.is_integer) {
                row.poly = ev.value;
            } else if (report.note.empty()) {
                report.note = "non-integer evaluation at d=" + std::to_string(d);
            }
            row.closed = sieving::closed_form_fixed(W, m, cls, d);
        }
        // Agreement across whichever columns are present.
        std::vector<const Int*> vals;
        if (row.brute) vals.push_back(&*row.brute);
        if (sp) {
            if (row.poly) vals.push_back(&*row.poly);
            else row.agree = false;  // a supported class must evaluate to integers
        }
        if (row.closed) vals.push_back(&*row.closed);
        for (size_t i = 1; i < vals.size(); ++i) {
            if (*vals[i] != *vals[0]) row.agree = false;
        }
        if (!row.agree && report.verdict != Verdict::Unsupported) {
            report.verdict = Verdict::Fail;
            if (report.note.empty()) {
                std::ostringstream os;
                os << "mismatch at d=" << d;
                if (row.brute) os << " brute=" << row.brute->str();
                if (row.poly) os << " poly=" << row.poly->str();
                if (row.closed) os << " closed=" << row.closed->str();
                report.note = os.str();
            }
        }
        report.rows.push_back(std::move(row));
    }
    if (!brute_note.empty() && report.note.empty()) report.note = std::move(brute_note);
    return report;
}

// Brute-force per-divisor fixed counts for every class of the model, computed
// from one shared face enumeration.
struct BruteCensus {
    long total_faces = 0;
    std::map<std::string, std::map<long, Int>> by_class;  // canonical class -> d -> count
    std::map<std::string, ParabolicClass> classes;
};

BruteCensus brute_census(const Model& model, const std::vector<Face>& faces) {
    BruteCensus census;
    census.total_faces = static_cast<long>(faces.size());
    const long N = model.N;
    const auto divisors = cox::divisors_of(N);

    std::vector<std::string> keys(faces.size());
    for (size_t i = 0; i < faces.size(); ++i) {
        try {
            const ParabolicClass cls = polygon::parabolic_type(model, faces[i]);
            keys[i] = cls.canonical_string();
            census.classes.emplace(keys[i], cls);
        } catch (const TypingAmbiguityError& e) {
            throw TypingAmbiguityError(std::string(e.what()) + " on face [" +
                                       polygon::face_to_line(model, faces[i]) + "]");
        }
    }
    for (const auto& [key, cls] : census.classes) {
        for (long d : divisors) census.by_class[key][d] = 0;
    }
    for (size_t i = 0; i < faces.size(); ++i) {
        for (long d : divisors) {
            if (polygon::rotate_face_steps(model, faces[i], N / d) == faces[i]) {
                census.by_class[keys[i]][d] += 1;
            }
        }
    }
    return census;
}

}  // namespace

ClassReport verify_class(const CoxType& W, int m, const ParabolicClass& cls, bool with_brute,
                         const polygon::Budget& budget) {
    std::map<long, Int> brute;
    std::string brute_note;
    bool have_brute = false;
    if (with_brute && W.is_classical()) {
        try {
            const Model model = polygon::build_model(W, m, budget);
            const auto faces = polygon::enumerate_faces(model, budget);
            const BruteCensus census = brute_census(model, faces);
            auto it = census.by_class.find(cls.canonical_string());
            if (it != census.by_class.end()) {
                brute = it->second;
            } else {
                for (long d : cox::divisors_of(model.N)) brute[d] = 0;  // empty class
            }
            have_brute = true;
        } catch (const BudgetExceededError& e) {
            brute_note = std::string("brute force skipped: ") + e.what();
        }
    }
    return sweep_class(W, m, cls, have_brute ? &brute : nullptr, brute_note);
}

GroupReport verify_group(const CoxType& W, int m, const polygon::Budget& budget, int jobs) {
    if (!W.is_classical()) {
        throw std::invalid_argument("verify_group: face enumeration exists for classical types only");
    }
    GroupReport group;
    group.W = W;
    group.m = m;

    const Model model = polygon::build_model(W, m, budget);
    const auto faces = polygon::enumerate_faces(model, budget);
    const BruteCensus census = brute_census(model, faces);
    group.total_faces = census.total_faces;

    // Union of the classified classes and everything brute force observed;
    // observing a class outside the classification is a partition failure.
    std::vector<ParabolicClass> classes = cox::enumerate_classes(W, true);
    bool unknown_class = false;
    for (const auto& [key, cls] : census.classes) {
        if (std::find(classes.begin(), classes.end(), cls) == classes.end()) {
            classes.push_back(cls);
            unknown_class = true;
        }
    }
    std::sort(classes.begin(), classes.end());

    group.classes.resize(classes.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            const size_t i = next.fetch_add(1);
            if (i >= classes.size()) return;
            const auto it = census.by_class.find(classes[i].canonical_string());
            std::map<long, Int> zeros;
            const std::map<long, Int>* counts;
            if (it != census.by_class.end()) {
                counts = &it->second;
            } else {
                for (long d : cox::divisors_of(model.N)) zeros[d] = 0;
                counts = &zeros;
            }
            group.classes[i] = sweep_class(W, m, classes[i], counts, "");
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // Attach fixed-face witnesses to any mismatching row, so a failure report
    // identifies the faces behind the brute-force count.
    for (size_t i = 0; i < classes.size(); ++i) {
        ClassReport& report = group.classes[i];
        if (report.verdict != Verdict::Fail) continue;
        for (const auto& row : report.rows) {
            if (row.agree || !row.brute) continue;
            for (size_t fi = 0; fi < faces.size() && report.witnesses.size() < 5; ++fi) {
                if (!(polygon::parabolic_type(model, faces[fi]) == classes[i])) continue;
                if (polygon::rotate_face_steps(model, faces[fi], model.N / row.d) == faces[fi]) {
                    report.witnesses.push_back("d=" + std::to_string(row.d) + " " +
                                               polygon::face_to_line(model, faces[fi]));
                }
            }
            break;
        }
    }

    Int classified = 0;
    for (const auto& [key, counts] : census.by_class) classified += counts.at(1);
    group.partition_complete = !unknown_class && classified == census.total_faces;
    group.all_pass = group.partition_complete && all_pass(group.classes);
    return group;
}

OrbitProfile csp_realizability(const std::map<long, Int>& values, long N) {
    // values[d] counts the fixed points of g^{N/d}; with F(s) := values[N/s]
    // the elements on orbits of size e satisfy F(s) = sum_{e | s} e*orbits[e],
    // so e*orbits[e] = sum_{s | e} moebius(e/s) F(s).
    OrbitProfile profile;
    profile.realizable = true;
    auto moebius = [](long n) {
        long result = 1;
        for (long p = 2; p * p <= n; ++p) {
            if (n % p != 0) continue;
            n /= p;
            if (n % p == 0) return 0L;
            result = -result;
        }
        if (n > 1) result = -result;
        return result;
    };
    for (long e : cox::divisors_of(N)) {
        Int acc = 0;
        for (long s : cox::divisors_of(e)) {
            auto it = values.find(N / s);
            if (it == values.end()) throw std::invalid_argument("csp_realizability: missing divisor value");
            acc += Int(moebius(e / s)) * it->second;
        }
        if (acc < 0 || acc % e != 0) {
            profile.realizable = false;
            continue;
        }
        if (acc != 0) profile.orbit_counts[e] = acc / e;
    }
    return profile;
}

std::vector<ClassReport> exceptional_table_check(const CoxType& W) {
    if (!W.is_exceptional()) {
        throw std::invalid_argument("exceptional_table_check: exceptional types only");
    }
    const long N = W.coxeter_number() + 2;
    const auto& table = cox::exceptional_table(W.family);
    if (table.divisors != cox::divisors_of(N)) {
        throw ModelAssertionError("table divisor line differs from the divisors of h+2");
    }

    std::vector<ClassReport> reports;
    for (const auto& cls : cox::enumerate_classes(W, true)) {
        ClassReport report;
        report.cls = cls;
        report.m = 1;
        std::optional<sieving::SievingPolynomial> sp;
        try {
            sp = sieving::mu(W, 1, cls);
        } catch (const NotPolynomialError& e) {
            report.verdict = Verdict::Fail;
            report.note = std::string("expansion failed: ") + e.what();
            reports.push_back(std::move(report));
            continue;
        }
        std::map<long, Int> values;
        for (long d : cox::divisors_of(N)) {
            DivisorRow row;
            row.d = d;
            const auto ev = sieving::mu_eval(*sp, d);
            if (!ev.is_integer || ev.value < 0) {
                row.agree = false;
                report.verdict = Verdict::Fail;
                if (report.note.empty()) {
                    report.note = "evaluation at d=" + std::to_string(d) +
                                  (ev.is_integer ? " is negative" : " is not an integer");
                }
            } else {
                row.poly = ev.value;
                values[d] = ev.value;
            }
            report.rows.push_back(std::move(row));
        }
        if (report.verdict == Verdict::Pass) {
            const OrbitProfile profile = csp_realizability(values, N);
            report.realizable = profile.realizable;
            if (!profile.realizable) {
                report.verdict = Verdict::Fail;
                report.note = "fixed-point profile is not realizable by a cyclic action";
            }
        }
        reports.push_back(std::move(report));
    }
    return reports;
}

bool all_pass(const std::vector<ClassReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const ClassReport& r) { return r.verdict != Verdict::Fail; });
}

namespace {

nlohmann::ordered_json report_to_json(const ClassReport& r) {
    nlohmann::ordered_json j;
    j["type"] = r.cls.W.name();
    j["m"] = r.m;
    j["lambda"] = r.cls.canonical_string();
    nlohmann::ordered_json divisors = nlohmann::ordered_json::array();
    nlohmann::ordered_json brute = nlohmann::ordered_json::array();
    nlohmann::ordered_json poly = nlohmann::ordered_json::array();
    nlohmann::ordered_json closed = nlohmann::ordered_json::array();
    for (const auto& row : r.rows) {
        divisors.push_back(row.d);
        brute.push_back(row.brute ? nlohmann::ordered_json(row.brute->str()) : nlohmann::ordered_json());
        poly.push_back(row.poly ? nlohmann::ordered_json(row.poly->str()) : nlohmann::ordered_json());
        closed.push_back(row.closed ? nlohmann::ordered_json(row.closed->str()) : nlohmann::ordered_json());
    }
    j["divisors"] = divisors;
    j["brute"] = brute;
    j["poly"] = poly;
    j["closed"] = closed;
    j["verdict"] = verdict_name(r.verdict);
    if (!r.note.empty()) j["note"] = r.note;
    if (r.realizable.has_value()) j["realizable"] = *r.realizable;
    if (!r.witnesses.empty()) j["witnesses"] = r.witnesses;
    return j;
}

}  // namespace

std::string reports_to_json(const std::vector<ClassReport>& reports, const std::string& command,
                            const std::string& config_summary) {
    nlohmann::ordered_json j;
    j["version"] = "1.0.0";
    j["command"] = command;
    j["config"] = config_summary;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    long passed = 0, failed = 0, unsupported = 0;
    for (const auto& r : reports) {
        arr.push_back(report_to_json(r));
        switch (r.verdict) {
            case Verdict::Pass: ++passed; break;
            case Verdict::Fail: ++failed; break;
            case Verdict::Unsupported: ++unsupported; break;
        }
    }
    j["reports"] = arr;
    j["summary"] = {{"classes", reports.size()},
                    {"passed", passed},
                    {"failed", failed},
                    {"unsupported", unsupported}};
    return j.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<ClassReport>& reports) {
    std::ostringstream os;
    os << "type,m,lambda,d,brute,poly,closed,agree\n";
    for (const auto& r : reports) {
        for (const auto& row : r.rows) {
            os << r.cls.W.name() << "," << r.m << "," << '"' << r.cls.canonical_string() << '"' << ","
               << row.d << "," << (row.brute ? row.brute->str() : "") << ","
               << (row.poly ? row.poly->str() : "") << "," << (row.closed ? row.closed->str() : "")
               << "," << (row.agree ? "yes" : "no") << "\n";
        }
    }
    return os.str();
}

std::string reports_to_markdown(const std::vector<ClassReport>& reports) {
    std::ostringstream os;
    os << "| type | m | lambda | d | brute | poly | closed | verdict |\n";
    os << "|---|---|---|---|---|---|---|---|\n";
    for (const auto& r : reports) {
        for (const auto& row : r.rows) {
            os << "| " << r.cls.W.name() << " | " << r.m << " | " << r.cls.canonical_string()
               << " | " << row.d << " | " << (row.brute ? row.brute->str() : "-") << " | "
               << (row.poly ? row.poly->str() : "-") << " | "
               << (row.closed ? row.closed->str() : "-") << " | "
               << (row.agree ? verdict_name(r.verdict) : "mismatch") << " |\n";
        }
    }
    return os.str();
}

}  // namespace csplab::verify
