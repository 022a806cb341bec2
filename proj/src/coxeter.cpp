#include "csplab/coxeter.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "csplab/errors.hpp"
#include "csplab/exceptional.hpp"

namespace csplab::cox {

int CoxType::rank() const {
    switch (family) {
        case Family::A:
        case Family::B:
        case Family::D: return param;
        case Family::I2: return 2;
        case Family::H3: return 3;
        case Family::H4: return 4;
        case Family::F4: return 4;
        case Family::E6: return 6;
        case Family::E7: return 7;
        case Family::E8: return 8;
    }
    return 0;
}

long CoxType::coxeter_number() const {
    switch (family) {
        case Family::A: return param + 1;
        case Family::B: return 2L * param;
        case Family::D: return 2L * param - 2;
        case Family::I2: return param;
        case Family::H3: return 10;
        case Family::H4: return 30;
        case Family::F4: return 12;
        case Family::E6: return 12;
        case Family::E7: return 18;
        case Family::E8: return 30;
    }
    return 0;
}

std::vector<long> CoxType::exponents() const {
    std::vector<long> e;
    switch (family) {
        case Family::A:
            for (int i = 1; i <= param; ++i) e.push_back(i);
            break;
        case Family::B:
            for (int i = 1; i <= param; ++i) e.push_back(2L * i - 1);
            break;
        case Family::D:
            for (int i = 1; i < param; ++i) e.push_back(2L * i - 1);
            e.push_back(param - 1);
            std::sort(e.begin(), e.end());
            break;
        case Family::I2:
            e = {1, param - 1};
            break;
        case Family::H3: e = {1, 5, 9}; break;
        case Family::H4: e = {1, 11, 19, 29}; break;
        case Family::F4: e = {1, 5, 7, 11}; break;
        case Family::E6: e = {1, 4, 5, 7, 8, 11}; break;
        case Family::E7: e = {1, 5, 7, 9, 11, 13, 17}; break;
        case Family::E8: e = {1, 7, 11, 13, 17, 19, 23, 29}; break;
    }
    return e;
}

std::string CoxType::name() const {
    std::ostringstream os;
    switch (family) {
        case Family::A: os << "A" << param; break;
        case Family::B: os << "B" << param; break;
        case Family::D: os << "D" << param; break;
        case Family::I2: os << "I2(" << param << ")"; break;
        case Family::H3: os << "H3"; break;
        case Family::H4: os << "H4"; break;
        case Family::F4: os << "F4"; break;
        case Family::E6: os << "E6"; break;
        case Family::E7: os << "E7"; break;
        case Family::E8: os << "E8"; break;
    }
    return os.str();
}

CoxType parse_cox_type(const std::string& family, int rank_or_k) {
    if (family == "A") return CoxType::A(rank_or_k);
    if (family == "B") return CoxType::B(rank_or_k);
    if (family == "D") return CoxType::D(rank_or_k);
    if (family == "I2") return CoxType::I2(rank_or_k);
    if (family == "H3") return CoxType::H3();
    if (family == "H4") return CoxType::H4();
    if (family == "F4") return CoxType::F4();
    if (family == "E6") return CoxType::E6();
    if (family == "E7") return CoxType::E7();
    if (family == "E8") return CoxType::E8();
    throw std::invalid_argument("unknown type: " + family);
}

int ParabolicClass::mult(int part) const {
    return static_cast<int>(std::count(lambda.begin(), lambda.end(), part));
}

int ParabolicClass::parts_sum() const {
    int s = 0;
    for (int p : lambda) s += p;
    return s;
}

int ParabolicClass::tail_component() const { return W.param - parts_sum(); }

DCase ParabolicClass::d_case() const {
    if (W.family != Family::D) return DCase::None;
    const int n = W.param;
    if (parts_sum() < n) return DCase::Case1;
    std::set<int> odd_sizes;
    for (int p : lambda) {
        if (p % 2 == 1) odd_sizes.insert(p);
    }
    if (odd_sizes.empty()) return DCase::Case2;
    if (odd_sizes.size() > 1) return DCase::NoReflection;
    return *odd_sizes.begin() == 1 ? DCase::Case4 : DCase::Case3;
}

bool ParabolicClass::is_full() const {
    switch (W.family) {
        case Family::A: return lambda.size() == 1 && lambda[0] == W.param + 1;
        case Family::B:
        case Family::D: return lambda.empty();
        case Family::I2: return i2 == I2Class::Full;
        default: return label == "W";
    }
}

bool ParabolicClass::is_trivial() const {
    switch (W.family) {
        case Family::A: return static_cast<int>(lambda.size()) == W.param + 1;
        case Family::B:
        case Family::D:
            return static_cast<int>(lambda.size()) == W.param && parts_sum() == W.param;
        case Family::I2: return i2 == I2Class::Trivial;
        default: return label == "trivial";
    }
}

int ParabolicClass::rank() const {
    switch (W.family) {
        case Family::A: {
            int r = 0;
            for (int p : lambda) r += p - 1;
            return r;
        }
        case Family::B:
        case Family::D: {
            int r = 0;
            for (int p : lambda) r += p - 1;
            if (W.family == Family::B || d_case() == DCase::Case1) r += tail_component();
            return r;
        }
        case Family::I2:
            return i2 == I2Class::Full ? 2 : (i2 == I2Class::Rank1 ? 1 : 0);
        default: {
            if (label == "W") return W.rank();
            if (label == "trivial") return 0;
            const ExceptionalRow* row = find_exceptional_row(W.family, label);
            if (!row) throw UnsupportedClassError("unknown exceptional class " + label);
            return W.rank() - static_cast<int>(row->num.size());
        }
    }
}

std::string ParabolicClass::canonical_string() const {
    if (W.family == Family::I2) {
        switch (i2) {
            case I2Class::Full: return "W";
            case I2Class::Trivial: return "trivial";
            case I2Class::Rank1:
                return i2_class_id < 0 ? "rank1" : ("rank1:" + std::to_string(i2_class_id));
        }
    }
    if (W.is_exceptional()) return label;
    if (lambda.empty()) return "-";
    std::ostringstream os;
    for (size_t i = 0; i < lambda.size(); ++i) {
        if (i) os << ",";
        os << lambda[i];
    }
    if (sign > 0) os << ":+";
    if (sign < 0) os << ":-";
    return os.str();
}

bool ParabolicClass::operator==(const ParabolicClass& o) const {
    return W == o.W && lambda == o.lambda && sign == o.sign && i2 == o.i2 &&
           i2_class_id == o.i2_class_id && label == o.label;
}

bool ParabolicClass::operator<(const ParabolicClass& o) const {
    if (rank() != o.rank()) return rank() > o.rank();  // W first, trivial last
    return canonical_string() < o.canonical_string();
}

bool has_reflection_property(const ParabolicClass& cls) {
    if (cls.W.family == Family::D) return cls.d_case() != DCase::NoReflection;
    if (cls.W.is_exceptional()) {
        return cls.label == "W" || cls.label == "trivial" ||
               find_exceptional_row(cls.W.family, cls.label) != nullptr;
    }
    return true;
}

namespace {

void partitions_of(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_of(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_of(n, n, cur, out);
    return out;
}

// Distinct part sizes with multiplicities, ascending by size.
std::vector<std::pair<int, int>> size_multiplicities(const std::vector<int>& lambda) {
    std::map<int, int> m;
    for (int p : lambda) ++m[p];
    return {m.begin(), m.end()};
}

}  // namespace

std::vector<ParabolicClass> enumerate_classes(const CoxType& W, bool include_full) {
    std::vector<ParabolicClass> out;
    auto push = [&](ParabolicClass c) {
        if (!include_full && c.is_full()) return;
        out.push_back(std::move(c));
    };
    switch (W.family) {
        case Family::A: {
            for (auto& lam : partitions_of(W.param + 1)) push({W, lam});
            break;
        }
        case Family::B: {
            for (int t = 0; t <= W.param; ++t) {
                for (auto& lam : partitions_of(t)) push({W, lam});
            }
            break;
        }
        case Family::D: {
            // D-component classes: lambda |- t with a D-part of size n-t >= 2.
            for (int t = 0; t <= W.param - 2; ++t) {
                for (auto& lam : partitions_of(t)) push({W, lam});
            }
            // Classes without a D-component: lambda |- n, all-even ones split.
            for (auto& lam : partitions_of(W.param)) {
                bool all_even = std::all_of(lam.begin(), lam.end(), [](int p) { return p % 2 == 0; });
                if (all_even) {
                    push({W, lam, +1});
                    push({W, lam, -1});
                } else {
                    push({W, lam});
                }
            }
            break;
        }
        case Family::I2: {
            ParabolicClass full{W};
            full.i2 = I2Class::Full;
            push(full);
            if (W.param % 2 == 0) {
                for (int id = 0; id < 2; ++id) {
                    ParabolicClass c{W};
                    c.i2 = I2Class::Rank1;
                    c.i2_class_id = id;
                    push(c);
                }
            } else {
                ParabolicClass c{W};
                c.i2 = I2Class::Rank1;
                push(c);
            }
            ParabolicClass triv{W};
            triv.i2 = I2Class::Trivial;
            push(triv);
            break;
        }
        default: {
            ParabolicClass full{W};
            full.label = "W";
            push(full);
            for (const auto& row : exceptional_table(W.family).rows) {
                ParabolicClass c{W};
                c.label = row.label;
                out.push_back(std::move(c));
            }
            ParabolicClass triv{W};
            triv.label = "trivial";
            out.push_back(std::move(triv));
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ClassData class_data(const CoxType& W, const ParabolicClass& cls, int m) {
    if (!has_reflection_property(cls)) {
        throw UnsupportedClassError("no reflection-group quotient for class " +
                                    cls.canonical_string() + " in " + W.name());
    }
    ClassData data;
    const int l = cls.parts_count();
    auto add_symmetric_degrees = [&](int mult) {  // degrees of the symmetric group S_mult
        for (int j = 2; j <= mult; ++j) data.quotient_degrees.push_back({j, 1});
    };
    auto add_signed_degrees = [&](int mult) {  // degrees of the hyperoctahedral group B_mult
        for (int j = 1; j <= mult; ++j) data.quotient_degrees.push_back({2L * j, 1});
    };
    auto add_even_signed_degrees = [&](int mult) {  // degrees of D_mult; empty for mult <= 1
        if (mult <= 1) return;
        for (int j = 1; j < mult; ++j) data.quotient_degrees.push_back({2L * j, 1});
        data.quotient_degrees.push_back({mult, 1});
    };

    switch (W.family) {
        case Family::A: {
            for (int i = 1; i < l; ++i) data.restriction_exponents.push_back(i);
            for (auto [size, mult] : size_multiplicities(cls.lambda)) add_symmetric_degrees(mult);
            (void)m;
            break;
        }
        case Family::B: {
            for (int i = 1; i <= l; ++i) data.restriction_exponents.push_back(2L * i - 1);
            for (auto [size, mult] : size_multiplicities(cls.lambda)) add_signed_degrees(mult);
            break;
        }
        case Family::D: {
            const DCase dc = cls.d_case();
            if (dc == DCase::Case4) {
                const int n1 = cls.mult(1);
                for (int i = 1; i < l; ++i) data.restriction_exponents.push_back(2L * i - 1);
                data.restriction_exponents.push_back(2L * l - n1 - 1);
                std::sort(data.restriction_exponents.begin(), data.restriction_exponents.end());
                add_even_signed_degrees(n1);
                for (auto [size, mult] : size_multiplicities(cls.lambda)) {
                    if (size >= 2) add_signed_degrees(mult);
                }
            } else {
                for (int i = 1; i <= l; ++i) data.restriction_exponents.push_back(2L * i - 1);
                for (auto [size, mult] : size_multiplicities(cls.lambda)) {
                    if (dc == DCase::Case3 && size % 2 == 1) {
                        add_even_signed_degrees(mult);
                    } else {
                        add_signed_degrees(mult);
                    }
                }
            }
            break;
        }
        case Family::I2: {
            const int k = W.param;
            switch (cls.i2) {
                case I2Class::Full: break;
                case I2Class::Rank1:
                    data.restriction_exponents = {1};
                    if (k % 2 == 0) data.quotient_degrees.push_back({2, 1});
                    break;
                case I2Class::Trivial:
                    data.restriction_exponents = {1, k - 1};
                    data.quotient_degrees.push_back({2, 1});
                    data.quotient_degrees.push_back({static_cast<long>(k), 1});
                    break;
            }
            break;
        }
        default: {
            const long h = W.coxeter_number();
            if (cls.label == "W") break;
            if (cls.label == "trivial") {
                for (long e : W.exponents()) {
                    data.restriction_exponents.push_back(e);
                    data.quotient_degrees.push_back({e + 1, 1});
                }
                break;
            }
            const ExceptionalRow* row = find_exceptional_row(W.family, cls.label);
            if (!row) throw UnsupportedClassError("unknown exceptional class " + cls.label);
            for (long a : row->num) data.restriction_exponents.push_back(a - 1 - h);
            for (long a : row->den) data.quotient_degrees.push_back({a, 1});
            break;
        }
    }
    return data;
}

std::optional<ParabolicClass> parse_lambda(const CoxType& W, const std::string& text) {
    if (W.family == Family::I2) {
        ParabolicClass c{W};
        if (text == "W" || text == "full") {
            c.i2 = I2Class::Full;
            return c;
        }
        if (text == "trivial") {
            c.i2 = I2Class::Trivial;
            return c;
        }
        if (text.rfind("rank1", 0) == 0) {
            c.i2 = I2Class::Rank1;
            if (text == "rank1") {
                if (W.param % 2 == 0) return std::nullopt;  // needs a class id when classes split
                return c;
            }
            if (text == "rank1:0" || text == "rank1:1") {
                if (W.param % 2 == 1) return std::nullopt;
                c.i2_class_id = text.back() - '0';
                return c;
            }
        }
        return std::nullopt;
    }
    if (W.is_exceptional()) {
        ParabolicClass c{W};
        if (text == "W" || text == "trivial" || find_exceptional_row(W.family, text)) {
            c.label = text;
            return c;
        }
        return std::nullopt;
    }

    // Classical syntax: comma-separated parts with optional ':+', ':-', ':jN'.
    ParabolicClass c{W};
    std::string parts_text = text;
    std::optional<int> explicit_tail;
    while (true) {
        auto pos = parts_text.rfind(':');
        if (pos == std::string::npos) break;
        std::string suffix = parts_text.substr(pos + 1);
        parts_text = parts_text.substr(0, pos);
        if (suffix == "+") {
            c.sign = +1;
        } else if (suffix == "-") {
            c.sign = -1;
        } else if (!suffix.empty() && suffix[0] == 'j') {
            try {
                explicit_tail = std::stoi(suffix.substr(1));
            } catch (...) {
                return std::nullopt;
            }
        } else {
            return std::nullopt;
        }
    }
    if (parts_text != "-" && !parts_text.empty()) {
        std::istringstream is(parts_text);
        std::string tok;
        while (std::getline(is, tok, ',')) {
            try {
                int p = std::stoi(tok);
                if (p < 1) return std::nullopt;
                c.lambda.push_back(p);
            } catch (...) {
                return std::nullopt;
            }
        }
    }
    std::sort(c.lambda.rbegin(), c.lambda.rend());

    const int n = W.param;
    const int t = c.parts_sum();
    switch (W.family) {
        case Family::A:
            if (c.sign != 0 || explicit_tail || t != n + 1) return std::nullopt;
            return c;
        case Family::B:
            if (c.sign != 0 || t > n) return std::nullopt;
            if (explicit_tail && *explicit_tail != n - t) return std::nullopt;
            return c;
        case Family::D: {
            if (explicit_tail && *explicit_tail != n - t) return std::nullopt;
            if (t > n || t == n - 1) return std::nullopt;
            const bool all_even =
                t == n && std::all_of(c.lambda.begin(), c.lambda.end(), [](int p) { return p % 2 == 0; });
            if (all_even != (c.sign != 0)) return std::nullopt;  // sign exactly when it splits
            return c;
        }
        default: return std::nullopt;
    }
}

std::vector<long> divisors_of(long n) {
    std::vector<long> out;
    for (long d = 1; d <= n; ++d) {
        if (n % d == 0) out.push_back(d);
    }
    return out;
}

}  // namespace csplab::cox
