#include "csplab/polygon.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "csplab/errors.hpp"

namespace csplab::polygon {

using cox::CoxType;
using cox::Family;
using cox::ParabolicClass;

namespace {

long mod1(long x, long N) {  // reduce into 1..N
    long r = x % N;
    return r <= 0 ? r + N : r;
}

}  // namespace

Chord make_chord(long N, long x, long y) {
    int a = static_cast<int>(mod1(x, N));
    int b = static_cast<int>(mod1(y, N));
    if (a > b) std::swap(a, b);
    if (a == b) throw ModelAssertionError("degenerate chord");
    return {a, b};
}

bool chords_cross(const Chord& c1, const Chord& c2) {
    if (c1.a == c2.a || c1.a == c2.b || c1.b == c2.a || c1.b == c2.b) return false;
    const bool in1 = c1.a < c2.a && c2.a < c1.b;
    const bool in2 = c1.a < c2.b && c2.b < c1.b;
    return in1 != in2;
}

bool ModelElement::operator==(const ModelElement& o) const {
    return kind == o.kind && chords == o.chords && color == o.color;
}

bool ModelElement::operator<(const ModelElement& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (chords != o.chords) return chords < o.chords;
    return color < o.color;
}

std::string ModelElement::to_string() const {
    std::ostringstream os;
    auto chord_str = [](const Chord& c) {
        return "(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")";
    };
    switch (kind) {
        case Kind::Diag: os << chord_str(chords[0]); break;
        case Kind::SymPair: os << "{" << chord_str(chords[0]) << "," << chord_str(chords[1]) << "}"; break;
        case Kind::Diameter: os << "diam(" << position() << ")"; break;
        case Kind::ColoredDiameter: os << "diam(" << position() << ";" << color << ")"; break;
        case Kind::ParallelFamily: {
            os << "{";
            for (size_t i = 0; i < chords.size(); ++i) {
                if (i) os << ",";
                os << chord_str(chords[i]);
            }
            os << "}";
            break;
        }
    }
    return os.str();
}

int Model::vertex_index(const ModelElement& e) const {
    auto it = std::lower_bound(verts.begin(), verts.end(), e);
    if (it == verts.end() || !(*it == e)) {
        throw ModelAssertionError("element is not a model vertex: " + e.to_string());
    }
    return static_cast<int>(it - verts.begin());
}

long model_size(const CoxType& W, int m) {
    if (!W.is_classical()) throw std::invalid_argument("model_size: classical types only");
    return m * W.coxeter_number() + 2;
}

// ---------------------------------------------------------------------------
// Region decomposition of a path with noncrossing chords.
//
// The path visits L polygon vertices; a virtual edge closes it (the polygon
// edge (N,1) for a full-cycle scan, the diameter or the two half-diameters
// through the centre for half/sector scans).  `outer` is the region adjacent
// to that virtual edge.  Sizes count polygon vertices on the region boundary.
// ---------------------------------------------------------------------------

namespace {

struct Regions {
    long outer = 0;
    std::vector<long> inner;
};

Regions scan_regions(long L, std::vector<std::pair<int, int>> chords) {
    std::vector<std::vector<int>> opens(L), closes(L);
    for (auto [i, j] : chords) {
        if (i >= j) throw ModelAssertionError("scan_regions: bad chord ordering");
        opens[i].push_back(j);
        closes[j].push_back(i);
    }
    for (long v = 0; v < L; ++v) {
        std::sort(opens[v].rbegin(), opens[v].rend());    // wider chord opens first
        std::sort(closes[v].rbegin(), closes[v].rend());  // inner chord closes first
    }
    Regions out;
    std::vector<std::pair<int, long>> stack;  // (opening vertex, vertex count)
    auto add_to_top = [&](long k) {
        if (stack.empty()) out.outer += k;
        else stack.back().second += k;
    };
    for (int v = 0; v < L; ++v) {
        for (int u : closes[v]) {
            if (stack.empty() || stack.back().first != u) {
                throw ModelAssertionError("scan_regions: chords are not noncrossing");
            }
            out.inner.push_back(stack.back().second + 1);
            stack.pop_back();
        }
        add_to_top(1);
        for (size_t i = 0; i < opens[v].size(); ++i) stack.push_back({v, 1});
    }
    if (!stack.empty()) throw ModelAssertionError("scan_regions: unclosed chord");
    return out;
}

// Full-cycle scan: positions 1..N, chords in polygon coordinates.
Regions scan_cycle(long N, const std::vector<Chord>& chords) {
    std::vector<std::pair<int, int>> mapped;
    mapped.reserve(chords.size());
    for (const Chord& c : chords) mapped.push_back({c.a - 1, c.b - 1});
    return scan_regions(N, std::move(mapped));
}

// Arc scan: path start, start+1, ..., start+len (cyclic positions).
Regions scan_arc(long N, long start, long len, const std::vector<Chord>& chords) {
    std::vector<std::pair<int, int>> mapped;
    mapped.reserve(chords.size());
    for (const Chord& c : chords) {
        long i = mod1(c.a - start, N) % N;
        long j = mod1(c.b - start, N) % N;
        if (c.a == start) i = 0;
        if (c.b == start) j = 0;
        if (i > j) std::swap(i, j);
        if (j > len) throw ModelAssertionError("scan_arc: chord outside arc");
        mapped.push_back({static_cast<int>(i), static_cast<int>(j)});
    }
    return scan_regions(len + 1, std::move(mapped));
}

bool in_closed_arc(long N, long x, long start, long len) {
    return mod1(x - start, N) % N <= len || x == start;
}

bool chord_in_arc(long N, const Chord& c, long start, long len) {
    return in_closed_arc(N, c.a, start, len) && in_closed_arc(N, c.b, start, len);
}

bool allowable_arc(long N, int m, long arc) {
    return arc >= 2 && arc <= N - 2 && arc % m == 1 % m;
}

Chord antipode(long N, const Chord& c) { return make_chord(N, c.a + N / 2, c.b + N / 2); }

Chord shift_chord(long N, const Chord& c) { return make_chord(N, c.a - 1, c.b - 1); }

std::vector<Chord> element_chords(const ModelElement& e) { return e.chords; }

// Switching edges of the type D model: edge (e, e+1) switches diameter colors
// exactly for e in {m*j + 1 : 0 <= j <= n-1}.  All of them sit on the closed
// arc from vertex 1 to vertex N/2 + 1, so one rotation step flips a diameter
// through at most one switching edge.
std::vector<char> d_switch_edges(long N, int m, int n) {
    std::vector<char> sw(static_cast<size_t>(N) + 1, 0);
    for (int j = 0; j <= n - 1; ++j) sw[static_cast<size_t>(m) * j + 1] = 1;
    return sw;
}

int d_flip_one_step(long N, const std::vector<char>& sw, int pos) {
    const int e1 = pos == 1 ? static_cast<int>(N) : pos - 1;
    const int e2 = pos + static_cast<int>(N / 2) - 1;
    return (sw[e1] ? 1 : 0) + (sw[e2] ? 1 : 0);
}

int d_prev_pos(long N, int pos) { return pos == 1 ? static_cast<int>(N / 2) : pos - 1; }

int d_flips_over(long N, const std::vector<char>& sw, int pos, long steps) {
    int f = 0;
    for (long s = 0; s < steps; ++s) {
        f += d_flip_one_step(N, sw, pos);
        pos = d_prev_pos(N, pos);
    }
    return f & 1;
}

}  // namespace

// ---------------------------------------------------------------------------
// Model construction
// ---------------------------------------------------------------------------

namespace {

void check_budget(const CoxType& W, long N, const Budget& budget) {
    const long cap = W.family == Family::I2 ? budget.max_polygon_i2 : budget.max_polygon;
    if (N > cap) {
        throw BudgetExceededError(W.name() + " needs a " + std::to_string(N) +
                                  "-gon, over the cap " + std::to_string(cap));
    }
}

std::vector<ModelElement> build_verts_a(long N, int m) {
    std::vector<ModelElement> verts;
    for (int a = 1; a <= N; ++a) {
        for (int b = a + 1; b <= N; ++b) {
            if (allowable_arc(N, m, b - a)) verts.push_back({ModelElement::Kind::Diag, {{a, b}}});
        }
    }
    return verts;
}

std::vector<ModelElement> build_verts_b(long N, int m) {
    std::vector<ModelElement> verts;
    std::set<std::vector<Chord>> seen;
    for (int a = 1; a <= N; ++a) {
        for (int b = a + 1; b <= N; ++b) {
            if (!allowable_arc(N, m, b - a)) continue;
            if (b - a == N / 2) continue;  // diameters are their own element kind
            Chord c{a, b};
            std::vector<Chord> pair{c, antipode(N, c)};
            std::sort(pair.begin(), pair.end());
            if (seen.insert(pair).second) {
                verts.push_back({ModelElement::Kind::SymPair, pair});
            }
        }
    }
    for (int p = 1; p <= N / 2; ++p) {
        verts.push_back({ModelElement::Kind::Diameter, {{p, p + static_cast<int>(N / 2)}}});
    }
    return verts;
}

std::vector<ModelElement> build_verts_d(long N, int m) {
    std::vector<ModelElement> verts;
    for (auto& e : build_verts_b(N, m)) {
        if (e.kind == ModelElement::Kind::SymPair) verts.push_back(e);
    }
    for (int p = 1; p <= N / 2; ++p) {
        for (int color = 0; color < 2; ++color) {
            ModelElement e{ModelElement::Kind::ColoredDiameter, {{p, p + static_cast<int>(N / 2)}}};
            e.color = color;
            verts.push_back(e);
        }
    }
    return verts;
}

// Dihedral vertices: maximal ladders of parallel disjoint allowable diagonals
// in which consecutive rungs bound a (2m+2)-gon.  A ladder is generated from
// its widest rung; it is maximal iff no wider rung fits, and rungs shrink by
// 2m until they would stop being diagonals.
std::vector<ModelElement> build_verts_i2(long N, int m) {
    std::set<std::vector<Chord>> seen;
    std::vector<ModelElement> verts;
    for (long t = N - 3 * m; t <= N - m - 1; ++t) {
        if (t < m + 1 || t % m != 1 % m) continue;
        for (int a = 1; a <= N; ++a) {
            std::vector<Chord> chords;
            for (long i = 0, arc = t; arc >= m + 1; ++i, arc -= 2 * m) {
                chords.push_back(make_chord(N, a + i * m, a + t - i * m));
            }
            std::sort(chords.begin(), chords.end());
            if (seen.insert(chords).second) {
                verts.push_back({ModelElement::Kind::ParallelFamily, chords});
            }
        }
    }
    return verts;
}

bool noncrossing_sets(const std::vector<Chord>& xs, const std::vector<Chord>& ys) {
    for (const Chord& x : xs) {
        for (const Chord& y : ys) {
            if (x == y || chords_cross(x, y)) return false;
        }
    }
    return true;
}

bool regions_allowable(long N, int m, const std::vector<Chord>& chords) {
    Regions r = scan_cycle(N, chords);
    if ((r.outer - 2) % m != 0) return false;
    for (long s : r.inner) {
        if ((s - 2) % m != 0) return false;
    }
    return true;
}

}  // namespace

Model build_model(const CoxType& W, int m, const Budget& budget) {
    if (!W.is_classical()) throw std::invalid_argument("build_model: classical types only");
    if (m < 1) throw std::invalid_argument("build_model: m must be positive");
    Model model;
    model.W = W;
    model.m = m;
    model.N = model_size(W, m);
    check_budget(W, model.N, budget);
    const long N = model.N;

    switch (W.family) {
        case Family::A: model.verts = build_verts_a(N, m); break;
        case Family::B: model.verts = build_verts_b(N, m); break;
        case Family::D: model.verts = build_verts_d(N, m); break;
        case Family::I2: model.verts = build_verts_i2(N, m); break;
        default: break;
    }
    std::sort(model.verts.begin(), model.verts.end());
    const size_t V = model.verts.size();
    if (static_cast<long>(V) > budget.max_vertices) {
        throw BudgetExceededError(W.name() + " model has " + std::to_string(V) +
                                  " vertices, over the cap " + std::to_string(budget.max_vertices));
    }
    if (W.family == Family::I2 && static_cast<long>(V) != N) {
        throw ModelAssertionError("dihedral vertex count " + std::to_string(V) +
                                  " differs from expected " + std::to_string(N));
    }

    // Type D diameter color bookkeeping.
    std::vector<char> sw;
    std::vector<std::vector<char>> same_color_required;
    if (W.family == Family::D) {
        sw = d_switch_edges(N, m, W.param);
        const int H = static_cast<int>(N / 2);
        same_color_required.assign(H + 1, std::vector<char>(H + 1, 0));
        for (int p = 1; p <= H; ++p) {
            for (int q = p + 1; q <= H; ++q) {
                // Rotate the pair until one diameter sits at position 1 and
                // compare colors there.  All four normalizing rotations must
                // agree for the relation to be well defined.
                int verdict = -1;
                for (long k : {static_cast<long>(p - 1), static_cast<long>(q - 1),
                               p - 1 + N / 2, q - 1 + N / 2}) {
                    const int eq = (d_flips_over(N, sw, p, k) ^ d_flips_over(N, sw, q, k)) == 0;
                    if (verdict == -1) verdict = eq;
                    if (verdict != eq) {
                        throw ModelAssertionError("diameter compatibility depends on the rotation chosen");
                    }
                }
                same_color_required[p][q] = same_color_required[q][p] = static_cast<char>(verdict);
            }
        }
    }

    // Compatibility matrix.
    model.compat.assign(V * V, 0);
    auto set_compat = [&](size_t i, size_t j, bool v) {
        model.compat[i * V + j] = model.compat[j * V + i] = v ? 1 : 0;
    };
    for (size_t i = 0; i < V; ++i) {
        for (size_t j = i + 1; j < V; ++j) {
            const ModelElement& x = model.verts[i];
            const ModelElement& y = model.verts[j];
            bool ok = false;
            switch (W.family) {
                case Family::A:
                    ok = noncrossing_sets(x.chords, y.chords);
                    break;
                case Family::B: {
                    ok = noncrossing_sets(x.chords, y.chords);
                    if (ok && m > 1) {
                        std::vector<Chord> all = x.chords;
                        all.insert(all.end(), y.chords.begin(), y.chords.end());
                        ok = regions_allowable(N, m, all);
                    }
                    break;
                }
                case Family::D: {
                    const bool xd = x.kind == ModelElement::Kind::ColoredDiameter;
                    const bool yd = y.kind == ModelElement::Kind::ColoredDiameter;
                    if (!xd || !yd) {
                        ok = noncrossing_sets(x.chords, y.chords);
                    } else if (x.position() == y.position()) {
                        ok = x.color != y.color;  // confounded diameters of different color
                    } else {
                        const bool same = x.color == y.color;
                        ok = same == static_cast<bool>(same_color_required[x.position()][y.position()]);
                    }
                    break;
                }
                case Family::I2: {
                    if (!noncrossing_sets(x.chords, y.chords)) break;
                    std::vector<Chord> all = x.chords;
                    all.insert(all.end(), y.chords.begin(), y.chords.end());
                    Regions r = scan_cycle(N, all);
                    ok = r.outer == m + 2 &&
                         std::all_of(r.inner.begin(), r.inner.end(), [&](long s) { return s == m + 2; });
                    break;
                }
                default: break;
            }
            set_compat(i, j, ok);
        }
    }

    // Rotation permutation, orbits, and the structural self-checks.
    model.rot.resize(V);
    for (size_t i = 0; i < V; ++i) {
        model.rot[i] = model.vertex_index(rotate_element(model, model.verts[i]));
    }
    model.orbit_id.assign(V, -1);
    for (size_t i = 0; i < V; ++i) {
        if (model.orbit_id[i] >= 0) continue;
        int id = model.num_orbits++;
        for (int j = static_cast<int>(i); model.orbit_id[j] < 0; j = model.rot[j]) {
            model.orbit_id[j] = id;
        }
    }
    for (size_t i = 0; i < V; ++i) {
        for (size_t j = i + 1; j < V; ++j) {
            if (model.compatible(static_cast<int>(i), static_cast<int>(j)) !=
                model.compatible(model.rot[i], model.rot[j])) {
                throw ModelAssertionError("rotation is not a compatibility automorphism");
            }
        }
    }
    {
        // rotate^N is the identity (for D this also checks color restoration).
        std::vector<int> cur(V);
        for (size_t i = 0; i < V; ++i) cur[i] = static_cast<int>(i);
        for (long s = 0; s < N; ++s) {
            for (size_t i = 0; i < V; ++i) cur[i] = model.rot[cur[i]];
        }
        for (size_t i = 0; i < V; ++i) {
            if (cur[i] != static_cast<int>(i)) throw ModelAssertionError("rotation order does not divide N");
        }
    }

    if (W.family == Family::D && W.param % 2 == 0) {
        ModelElement ref{ModelElement::Kind::ColoredDiameter, {{1, 1 + static_cast<int>(N / 2)}}};
        ref.color = 0;
        model.plus_orbit = model.orbit_id[model.vertex_index(ref)];
        std::set<int> diam_orbits;
        for (size_t i = 0; i < V; ++i) {
            if (model.verts[i].kind == ModelElement::Kind::ColoredDiameter) {
                diam_orbits.insert(model.orbit_id[i]);
            }
        }
        if (diam_orbits.size() != 2) {
            throw ModelAssertionError("expected exactly two diameter orbits for even rank");
        }
    }
    if (W.family == Family::I2) {
        std::set<int> orbits(model.orbit_id.begin(), model.orbit_id.end());
        const bool even_k = W.param % 2 == 0;
        if (orbits.size() != (even_k ? 2u : 1u)) {
            throw ModelAssertionError("dihedral vertex orbits do not match the class split");
        }
        model.i2_orbit0 = model.orbit_id[0];
    }
    return model;
}

ModelElement rotate_element(const Model& model, const ModelElement& e) {
    const long N = model.N;
    ModelElement r = e;
    for (Chord& c : r.chords) c = shift_chord(N, c);
    std::sort(r.chords.begin(), r.chords.end());
    if (e.kind == ModelElement::Kind::ColoredDiameter) {
        const auto sw = d_switch_edges(N, model.m, model.W.param);
        r.color = e.color ^ (d_flip_one_step(N, sw, e.position()) & 1);
    }
    return r;
}

Face rotate_face(const Model& model, const Face& f) {
    Face out;
    out.reserve(f.size());
    for (int v : f) out.push_back(model.rot[v]);
    std::sort(out.begin(), out.end());
    return out;
}

Face rotate_face_steps(const Model& model, const Face& f, long steps) {
    Face out = f;
    for (long s = 0; s < steps; ++s) out = rotate_face(model, out);
    return out;
}

std::vector<Face> enumerate_faces(const Model& model, const Budget& budget) {
    (void)budget;
    std::vector<Face> out;
    out.push_back({});
    const int V = static_cast<int>(model.verts.size());
    std::vector<int> all(V);
    for (int i = 0; i < V; ++i) all[i] = i;
    Face cur;
    std::function<void(const std::vector<int>&)> rec = [&](const std::vector<int>& cands) {
        for (size_t idx = 0; idx < cands.size(); ++idx) {
            const int v = cands[idx];
            cur.push_back(v);
            out.push_back(cur);
            std::vector<int> next;
            for (size_t j = idx + 1; j < cands.size(); ++j) {
                if (model.compatible(v, cands[j])) next.push_back(cands[j]);
            }
            if (!next.empty()) rec(next);
            cur.pop_back();
        }
    };
    rec(all);
    return out;
}

// ---------------------------------------------------------------------------
// Parabolic typing
// ---------------------------------------------------------------------------

namespace {

std::vector<int> halve_multiplicities(const std::vector<int>& parts) {
    std::map<int, int> mult;
    for (int p : parts) ++mult[p];
    std::vector<int> lambda;
    for (auto [size, count] : mult) {
        for (int i = 0; i < count / 2; ++i) lambda.push_back(size);
    }
    std::sort(lambda.rbegin(), lambda.rend());
    return lambda;
}

int exact_part(long s, int m, const char* where) {
    if ((s - 2) % m != 0) {
        throw TypingAmbiguityError(std::string("region size ") + std::to_string(s) +
                                   " is not allowable in " + where);
    }
    return static_cast<int>((s - 2) / m);
}

ParabolicClass type_a(const Model& model, const Face& f) {
    std::vector<Chord> chords;
    for (int v : f) {
        auto cs = element_chords(model.verts[v]);
        chords.insert(chords.end(), cs.begin(), cs.end());
    }
    Regions r = scan_cycle(model.N, chords);
    std::vector<int> lambda;
    lambda.push_back(exact_part(r.outer, model.m, "type A"));
    for (long s : r.inner) lambda.push_back(exact_part(s, model.m, "type A"));
    std::sort(lambda.rbegin(), lambda.rend());
    return {model.W, lambda};
}

ParabolicClass type_b(const Model& model, const Face& f) {
    std::vector<Chord> chords;
    for (int v : f) {
        auto cs = element_chords(model.verts[v]);
        chords.insert(chords.end(), cs.begin(), cs.end());
    }
    Regions r = scan_cycle(model.N, chords);
    std::vector<int> parts;
    parts.push_back(exact_part(r.outer, model.m, "type B"));
    for (long s : r.inner) parts.push_back(exact_part(s, model.m, "type B"));
    return {model.W, halve_multiplicities(parts)};
}

ParabolicClass type_i2(const Model& model, const Face& f) {
    ParabolicClass cls{model.W};
    switch (f.size()) {
        case 0: cls.i2 = cox::I2Class::Full; break;
        case 1:
            cls.i2 = cox::I2Class::Rank1;
            if (model.W.param % 2 == 0) {
                cls.i2_class_id = model.orbit_id[f[0]] == model.i2_orbit0 ? 0 : 1;
            }
            break;
        case 2: cls.i2 = cox::I2Class::Trivial; break;
        default: throw TypingAmbiguityError("dihedral face with more than two vertices");
    }
    return cls;
}

// Type D.  Faces without diameters are typed like type B dissections of one
// lower rank; every face with a diameter gets a full-support partition.  The
// regions cut out by diameters are read off sector by sector: the region
// touching the centre (equivalently, bounded by two diameter radii) gets its
// part bumped by one, a unique unicolored diameter bumps its two neighbours,
// and the two degenerate slivers of a bicolored diameter each contribute a
// part equal to 1.  See docs/d_model.md for a worked example.
ParabolicClass type_d(const Model& model, const Face& f) {
    const long N = model.N;
    const int m = model.m;
    const int n = model.W.param;

    std::vector<std::pair<int, int>> copies;  // (position, color)
    std::vector<Chord> chords;
    for (int v : f) {
        const ModelElement& e = model.verts[v];
        if (e.kind == ModelElement::Kind::ColoredDiameter) {
            copies.push_back({e.position(), e.color});
        } else {
            chords.insert(chords.end(), e.chords.begin(), e.chords.end());
        }
    }
    std::sort(copies.begin(), copies.end());

    std::vector<int> parts;
    std::vector<int> chord_uses(chords.size(), 0);
    auto scan_sector = [&](long start, long len, bool bump, bool floor_bump) {
        std::vector<Chord> inside;
        for (size_t ci = 0; ci < chords.size(); ++ci) {
            if (chord_in_arc(N, chords[ci], start, len)) {
                inside.push_back(chords[ci]);
                ++chord_uses[ci];
            }
        }
        Regions r = scan_arc(N, start, len, inside);
        if (bump) {
            if (floor_bump) {
                if (r.outer < 2) throw TypingAmbiguityError("sector region too small");
                parts.push_back(static_cast<int>((r.outer - 2) / m) + 1);
            } else {
                parts.push_back(exact_part(r.outer, m, "type D half") + 1);
            }
        } else {
            parts.push_back(exact_part(r.outer, m, "type D"));
        }
        for (long s : r.inner) parts.push_back(exact_part(s, m, "type D"));
    };

    if (copies.empty()) {
        Regions r = scan_cycle(N, chords);
        parts.push_back(exact_part(r.outer, m, "type D"));
        for (long s : r.inner) parts.push_back(exact_part(s, m, "type D"));
    } else if (copies.size() == 1) {
        const long p = copies[0].first;
        scan_sector(p, N / 2, /*bump=*/true, /*floor_bump=*/false);
        scan_sector(p + N / 2, N / 2, /*bump=*/true, /*floor_bump=*/false);
    } else if (copies.size() == 2 && copies[0].first == copies[1].first) {
        // A bicolored diameter: two ordinary halves plus two degenerate slivers.
        const long p = copies[0].first;
        scan_sector(p, N / 2, /*bump=*/false, /*floor_bump=*/false);
        scan_sector(p + N / 2, N / 2, /*bump=*/false, /*floor_bump=*/false);
        parts.push_back(1);
        parts.push_back(1);
    } else {
        for (size_t i = 0; i + 1 < copies.size(); ++i) {
            if (copies[i].first == copies[i + 1].first) {
                throw TypingAmbiguityError("confounded diameters mixed with others");
            }
        }
        const size_t r = copies.size();
        std::vector<long> radii;
        for (const auto& [p, c] : copies) radii.push_back(p);
        for (const auto& [p, c] : copies) radii.push_back(p + N / 2);
        for (size_t i = 0; i < 2 * r; ++i) {
            const long start = radii[i];
            const long end = radii[(i + 1) % (2 * r)];
            const long len = mod1(end - start, N) % N;
            if (len < 1) throw TypingAmbiguityError("coincident diameter radii");
            scan_sector(start, len, /*bump=*/true, /*floor_bump=*/true);
        }
    }

    if (!copies.empty()) {
        for (size_t ci = 0; ci < chords.size(); ++ci) {
            if (chord_uses[ci] != 1) {
                throw TypingAmbiguityError("chord not assigned to exactly one sector");
            }
        }
    }

    std::vector<int> lambda = halve_multiplicities(parts);
    ParabolicClass cls{model.W, lambda};
    int sum = 0;
    for (int p : lambda) sum += p;
    if (copies.empty()) {
        if (sum > n - 2) throw TypingAmbiguityError("diameter-free face typed past rank n-2");
        return cls;
    }
    if (sum != n) throw TypingAmbiguityError("diameter face does not have full support");
    const bool all_even = std::all_of(lambda.begin(), lambda.end(), [](int p) { return p % 2 == 0; });
    if (all_even) {
        int orbit = -1;
        for (const auto& [p, c] : copies) {
            ModelElement e{ModelElement::Kind::ColoredDiameter, {{static_cast<int>(p), static_cast<int>(p + N / 2)}}};
            e.color = c;
            const int o = model.orbit_id[model.vertex_index(e)];
            if (orbit == -1) orbit = o;
            if (o != orbit) throw TypingAmbiguityError("diameters of one face in different orbits");
        }
        cls.sign = orbit == model.plus_orbit ? +1 : -1;
    }
    return cls;
}

}  // namespace

ParabolicClass parabolic_type(const Model& model, const Face& f) {
    switch (model.W.family) {
        case Family::A: return type_a(model, f);
        case Family::B: return type_b(model, f);
        case Family::D: return type_d(model, f);
        case Family::I2: return type_i2(model, f);
        default: throw std::invalid_argument("parabolic_type: classical types only");
    }
}

long fixed_face_count(const Model& model, const std::vector<Face>& faces,
                      const cox::ParabolicClass& cls, long d) {
    if (model.N % d != 0) throw std::invalid_argument("fixed_face_count: d must divide N");
    const long step = model.N / d;
    long count = 0;
    for (const Face& f : faces) {
        if (!(parabolic_type(model, f) == cls)) continue;
        if (rotate_face_steps(model, f, step) == f) ++count;
    }
    return count;
}

std::string face_to_line(const Model& model, const Face& f) {
    std::ostringstream os;
    for (size_t i = 0; i < f.size(); ++i) {
        if (i) os << " ";
        os << model.verts[f[i]].to_string();
    }
    return os.str();
}

}  // namespace csplab::polygon
