#pragma once

#include <string>
#include <vector>

#include "surfq/triangulation.hpp"

namespace surfq {

struct unflippable_arc : validation_error {
    explicit unflippable_arc(const std::string& what) : validation_error(what) {}
};

inline bool is_flippable(const Triangulation& t, int arc) {
    auto slots = t.arc_slots();
    auto [t1, s1] = slots[static_cast<std::size_t>(arc)][0];
    auto [t2, s2] = slots[static_cast<std::size_t>(arc)][1];
    (void)s1;
    (void)s2;
    return !(t1 == t2 && t.triangle(t1).self_folded); // radius
}

// Flip: replace the arc by the other diagonal of the quadrilateral formed by
// its two triangle slots.  The surgery is purely on the slot structure, so
// degenerate quadrilaterals (double- or triple-glued pairs, self-folded
// loops) are handled uniformly; a repeated side in the result folds the new
// triangle.  The flipped arc keeps its id and is renamed.
inline Triangulation flip(const Triangulation& t, int arc) {
    if (arc < 0 || arc >= t.arc_count()) throw validation_error("flip: no such arc");
    auto slots = t.arc_slots();
    auto [t1, s1] = slots[static_cast<std::size_t>(arc)][0];
    auto [t2, s2] = slots[static_cast<std::size_t>(arc)][1];
    if (t1 == t2 && t.triangle(t1).self_folded)
        throw unflippable_arc("arc " + t.arc_name(arc) + " is the radius of a self-folded triangle");
    if (t1 == t2) throw validation_error("flip: arc " + t.arc_name(arc) + " fills two slots of one plain triangle");

    auto rotated = [&](int tri, int pos) {
        const Triangle& tr = t.triangle(tri);
        std::array<SideRef, 3> s;
        for (int i = 0; i < 3; ++i) s[static_cast<std::size_t>(i)] = tr.sides[static_cast<std::size_t>((pos + i) % 3)];
        return s;
    };
    // for a self-folded neighbor the arc is its loop, stored at slot 0
    std::array<SideRef, 3> a = rotated(t1, s1); // (arc, x, y)
    std::array<SideRef, 3> b = rotated(t2, s2); // (arc, z, w)
    SideRef x = a[1], y = a[2], z = b[1], w = b[2];

    Triangulation out = t;
    // toggling the prime keeps flipping at the same arc an involution
    std::string name = t.arc_name(arc);
    if (name.size() >= 1 && name.back() == '\'')
        name.pop_back();
    else
        name += '\'';
    out.rename_arc(arc, name);
    SideRef d = SideRef::arc(arc);
    auto make = [&](SideRef p, SideRef q) {
        // triangle (d, p, q); a repeated arc side folds it
        if (p.is_arc() && p == q) return Triangle::folded(arc, p.id);
        return Triangle::plain(d, p, q);
    };
    out.triangle_mut(t1) = make(y, z);
    out.triangle_mut(t2) = make(w, x);
    out.declared_sig = t.declared_sig;
    return out;
}

// One entry per flippable arc.
inline std::vector<std::pair<int, Triangulation>> flip_neighbors(const Triangulation& t) {
    std::vector<std::pair<int, Triangulation>> out;
    for (int a = 0; a < t.arc_count(); ++a)
        if (is_flippable(t, a)) out.push_back({a, flip(t, a)});
    return out;
}

// ---------------------------------------------------------------------------
// Canonical form under arc relabeling and triangle reordering, with boundary
// segments kept fixed.  For every starting flag (triangle, rotation) a
// deterministic traversal serializes the complex with arcs numbered in
// first-visit order; the minimal serialization is the certificate.
inline std::vector<int> canonical_serialization(const Triangulation& t, bool boundary_labeled = true) {
    int T = t.triangle_count();
    auto slots = t.arc_slots();
    std::vector<int> best;
    for (int root = 0; root < T; ++root) {
        for (int rot = 0; rot < 3; ++rot) {
            std::vector<int> arc_num(static_cast<std::size_t>(t.arc_count()), -1);
            std::vector<int> entry(static_cast<std::size_t>(T), -1);
            std::vector<int> order;
            int next_arc = 0;
            entry[static_cast<std::size_t>(root)] = rot;
            order.push_back(root);
            std::vector<int> ser;
            for (std::size_t qi = 0; qi < order.size(); ++qi) {
                int tri = order[qi];
                const Triangle& tr = t.triangle(tri);
                ser.push_back(tr.self_folded ? 1 : 0);
                int start = entry[static_cast<std::size_t>(tri)];
                for (int i = 0; i < 3; ++i) {
                    const SideRef& s = tr.sides[static_cast<std::size_t>((start + i) % 3)];
                    if (!s.is_arc()) {
                        ser.push_back(boundary_labeled ? -2 - s.id : -1);
                        continue;
                    }
                    if (arc_num[static_cast<std::size_t>(s.id)] < 0) {
                        arc_num[static_cast<std::size_t>(s.id)] = next_arc++;
                        // discover the neighbor through this arc
                        auto [u1, p1] = slots[static_cast<std::size_t>(s.id)][0];
                        auto [u2, p2] = slots[static_cast<std::size_t>(s.id)][1];
                        int nb = (u1 == tri && p1 == (start + i) % 3) ? u2 : u1;
                        int np = (u1 == tri && p1 == (start + i) % 3) ? p2 : p1;
                        if (entry[static_cast<std::size_t>(nb)] < 0) {
                            entry[static_cast<std::size_t>(nb)] = np;
                            order.push_back(nb);
                        }
                    }
                    ser.push_back(arc_num[static_cast<std::size_t>(s.id)]);
                }
            }
            if (best.empty() || ser < best) best = std::move(ser);
        }
    }
    return best;
}

inline std::string canonical_key(const Triangulation& t) {
    std::string s;
    for (int v : canonical_serialization(t)) {
        s += std::to_string(v);
        s += ',';
    }
    return s;
}

// combinatorial isomorphism with boundary segments relabelable as well
inline bool isomorphic_triangulations(const Triangulation& a, const Triangulation& b) {
    return canonical_serialization(a, false) == canonical_serialization(b, false);
}

} // namespace surfq
