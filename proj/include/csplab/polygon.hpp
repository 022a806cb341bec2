#pragma once

#include <string>
#include <vector>

#include "csplab/coxeter.hpp"

namespace csplab::polygon {

/// Enumeration caps.  A/B/D models refuse polygons larger than max_polygon;
/// the dihedral model is linear-size and gets its own, larger cap.
struct Budget {
    long max_polygon = 30;
    long max_polygon_i2 = 48;
    long max_vertices = 200;
};

/// A chord of the N-gon between positions a < b (positions run 1..N).
struct Chord {
    int a = 0;
    int b = 0;
    bool operator==(const Chord& o) const { return a == o.a && b == o.b; }
    bool operator<(const Chord& o) const { return a != o.a ? a < o.a : b < o.b; }
};

Chord make_chord(long N, long x, long y);
bool chords_cross(const Chord& c1, const Chord& c2);

/// One vertex of a model complex.
struct ModelElement {
    enum class Kind { Diag, SymPair, Diameter, ColoredDiameter, ParallelFamily };
    Kind kind = Kind::Diag;
    std::vector<Chord> chords;  // Diag/Diameter/ColoredDiameter: 1; SymPair: 2; ParallelFamily: >=1
    int color = -1;             // ColoredDiameter only

    /// Diameter position (smaller endpoint).
    int position() const { return chords[0].a; }

    bool operator==(const ModelElement& o) const;
    bool operator<(const ModelElement& o) const;
    std::string to_string() const;
};

/// A face is a sorted list of vertex indices into Model::verts.
using Face = std::vector<int>;

/// An immutable snapshot of one model: vertices, compatibility, rotation.
struct Model {
    cox::CoxType W;
    int m = 1;
    long N = 0;

    std::vector<ModelElement> verts;
    std::vector<uint8_t> compat;  // |verts| x |verts|, row-major
    std::vector<int> rot;         // vertex permutation realizing one rotation step
    std::vector<int> orbit_id;    // rotation orbit of each vertex
    int num_orbits = 0;
    int plus_orbit = -1;          // type D, n even: orbit carrying the '+' decoration
    int i2_orbit0 = -1;           // dihedral, k even: orbit carrying class id 0

    bool compatible(int i, int j) const { return compat[static_cast<size_t>(i) * verts.size() + j] != 0; }
    int vertex_index(const ModelElement& e) const;
};

long model_size(const cox::CoxType& W, int m);

/// Build the vertex set, compatibility graph and rotation action for a
/// classical type.  Throws BudgetExceededError when the polygon exceeds the
/// cap, and ModelAssertionError when a structural self-check fails.
Model build_model(const cox::CoxType& W, int m, const Budget& budget = {});

ModelElement rotate_element(const Model& model, const ModelElement& e);
Face rotate_face(const Model& model, const Face& f);
Face rotate_face_steps(const Model& model, const Face& f, long steps);

/// All faces of the flag complex (including the empty face), each exactly once.
std::vector<Face> enumerate_faces(const Model& model, const Budget& budget = {});

/// Parabolic type of a face, via the dissection shape of its chords.
cox::ParabolicClass parabolic_type(const Model& model, const Face& f);

/// Number of faces of type `cls` fixed by the rotation of order d (d | N).
long fixed_face_count(const Model& model, const std::vector<Face>& faces,
                      const cox::ParabolicClass& cls, long d);

/// Line-oriented text form: one face per line, elements sorted.
std::string face_to_line(const Model& model, const Face& f);

}  // namespace csplab::polygon
