#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "surfq/errors.hpp"
#include "surfq/surface.hpp"

namespace surfq {

enum class SideKind { Arc, Boundary };

struct SideRef {
    SideKind kind = SideKind::Arc;
    int id = -1;

    static SideRef arc(int id) { return {SideKind::Arc, id}; }
    static SideRef boundary(int id) { return {SideKind::Boundary, id}; }
    bool is_arc() const { return kind == SideKind::Arc; }

    friend bool operator==(const SideRef& a, const SideRef& b) { return a.kind == b.kind && a.id == b.id; }
    friend bool operator!=(const SideRef& a, const SideRef& b) { return !(a == b); }
    friend bool operator<(const SideRef& a, const SideRef& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.id < b.id;
    }
};

// One triangle with clockwise-ordered side slots.  Side slot s runs from
// corner s to corner (s+1)%3.  Self-folded triangles use the fixed slot
// convention (loop, radius, radius); the corner between the two radius slots
// is the enclosed puncture.
struct Triangle {
    bool self_folded = false;
    std::array<SideRef, 3> sides;

    static Triangle plain(SideRef a, SideRef b, SideRef c) { return {false, {a, b, c}}; }
    static Triangle folded(int loop_arc, int radius_arc) {
        return {true, {SideRef::arc(loop_arc), SideRef::arc(radius_arc), SideRef::arc(radius_arc)}};
    }

    SideRef loop() const { return sides[0]; }
    SideRef radius() const { return sides[1]; }
};

enum class TriangleKind { Face, Wedge, Cap, SelfFolded };

// Combinatorial ideal triangulation.  Arcs and boundary segments are indexed
// densely and carry external names for the file formats.
class Triangulation {
public:
    int add_arc(const std::string& name) {
        arc_names_.push_back(name);
        return static_cast<int>(arc_names_.size()) - 1;
    }
    int add_boundary(const std::string& name) {
        boundary_names_.push_back(name);
        return static_cast<int>(boundary_names_.size()) - 1;
    }
    void add_triangle(Triangle t) { triangles_.push_back(t); }
    void add_plain(SideRef a, SideRef b, SideRef c) { triangles_.push_back(Triangle::plain(a, b, c)); }
    void add_folded(int loop_arc, int radius_arc) { triangles_.push_back(Triangle::folded(loop_arc, radius_arc)); }

    int arc_count() const { return static_cast<int>(arc_names_.size()); }
    int boundary_count() const { return static_cast<int>(boundary_names_.size()); }
    int triangle_count() const { return static_cast<int>(triangles_.size()); }

    const std::vector<Triangle>& triangles() const { return triangles_; }
    const Triangle& triangle(int i) const { return triangles_[static_cast<std::size_t>(i)]; }
    Triangle& triangle_mut(int i) { return triangles_[static_cast<std::size_t>(i)]; }

    const std::string& arc_name(int id) const { return arc_names_[static_cast<std::size_t>(id)]; }
    const std::string& boundary_name(int id) const { return boundary_names_[static_cast<std::size_t>(id)]; }
    void rename_arc(int id, const std::string& name) { arc_names_[static_cast<std::size_t>(id)] = name; }
    int arc_id(const std::string& name) const {
        for (int i = 0; i < arc_count(); ++i)
            if (arc_names_[static_cast<std::size_t>(i)] == name) return i;
        return -1;
    }

    std::optional<SurfaceSig> declared_sig;

    // slots of each arc as (triangle, position) pairs, in triangle order
    std::vector<std::vector<std::pair<int, int>>> arc_slots() const {
        std::vector<std::vector<std::pair<int, int>>> slots(arc_names_.size());
        for (int t = 0; t < triangle_count(); ++t)
            for (int s = 0; s < 3; ++s) {
                const SideRef& r = triangles_[static_cast<std::size_t>(t)].sides[static_cast<std::size_t>(s)];
                if (r.is_arc()) slots[static_cast<std::size_t>(r.id)].push_back({t, s});
            }
        return slots;
    }

    // arc id of the loop -> triangle index of its self-folded triangle
    std::map<int, int> folded_loops() const {
        std::map<int, int> m;
        for (int t = 0; t < triangle_count(); ++t)
            if (triangles_[static_cast<std::size_t>(t)].self_folded)
                m[triangles_[static_cast<std::size_t>(t)].loop().id] = t;
        return m;
    }

    int boundary_sides(int tri) const {
        int c = 0;
        for (const auto& s : triangles_[static_cast<std::size_t>(tri)].sides)
            if (!s.is_arc()) ++c;
        return c;
    }

    TriangleKind kind(int tri) const {
        if (triangles_[static_cast<std::size_t>(tri)].self_folded) return TriangleKind::SelfFolded;
        switch (boundary_sides(tri)) {
            case 0: return TriangleKind::Face;
            case 1: return TriangleKind::Wedge;
            default: return TriangleKind::Cap;
        }
    }

private:
    std::vector<std::string> arc_names_;
    std::vector<std::string> boundary_names_;
    std::vector<Triangle> triangles_;
};

inline TriangleKind triangle_kind(const Triangulation& t, int tri) { return t.kind(tri); }

// ---------------------------------------------------------------------------
// Gluing.  Corner (t,c) sits between side slots c-1 and c.  Gluing two slots
// of the same arc identifies them with opposite traversal, which is the
// unique orientation-compatible choice; the assembled complex is therefore
// always oriented and the marked points are the corner orbits.

namespace detail {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
        for (int i = 0; i < n; ++i) parent_[static_cast<std::size_t>(i)] = i;
    }
    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

private:
    std::vector<int> parent_;
};

} // namespace detail

struct Assembly {
    int vertex_count = 0;
    std::vector<int> corner_class;                          // 3*T entries
    std::vector<std::vector<std::pair<int, int>>> boundary_cycles; // boundary slots in cyclic order
    std::vector<int> puncture_classes;                      // sorted class ids
    std::vector<char> class_on_boundary;
    SurfaceSig sig;
};

// Low-level structural check: slot counts and reference sanity.  Returns a
// diagnostic naming the first violation, or nullopt.
inline std::optional<std::string> check_slots(const Triangulation& t) {
    std::vector<int> arc_use(static_cast<std::size_t>(t.arc_count()), 0);
    std::vector<int> bnd_use(static_cast<std::size_t>(t.boundary_count()), 0);
    for (int i = 0; i < t.triangle_count(); ++i) {
        const Triangle& tr = t.triangle(i);
        for (const auto& s : tr.sides) {
            if (s.is_arc()) {
                if (s.id < 0 || s.id >= t.arc_count()) return "triangle " + std::to_string(i) + ": bad arc reference";
                ++arc_use[static_cast<std::size_t>(s.id)];
            } else {
                if (s.id < 0 || s.id >= t.boundary_count())
                    return "triangle " + std::to_string(i) + ": bad boundary reference";
                ++bnd_use[static_cast<std::size_t>(s.id)];
            }
        }
        if (tr.self_folded) {
            if (!tr.sides[0].is_arc() || !tr.sides[1].is_arc())
                return "triangle " + std::to_string(i) + ": self-folded sides must be arcs";
            if (tr.sides[1] != tr.sides[2] || tr.sides[0] == tr.sides[1])
                return "triangle " + std::to_string(i) + ": self-folded triangle needs distinct loop and doubled radius";
        } else {
            for (int a = 0; a < 3; ++a)
                for (int b = a + 1; b < 3; ++b)
                    if (tr.sides[static_cast<std::size_t>(a)].is_arc() &&
                        tr.sides[static_cast<std::size_t>(a)] == tr.sides[static_cast<std::size_t>(b)])
                        return "triangle " + std::to_string(i) +
                               ": repeated arc in a plain triangle (store it self-folded)";
        }
    }
    for (int a = 0; a < t.arc_count(); ++a)
        if (arc_use[static_cast<std::size_t>(a)] != 2)
            return "arc " + t.arc_name(a) + " fills " + std::to_string(arc_use[static_cast<std::size_t>(a)]) +
                   " slots, expected 2";
    for (int b = 0; b < t.boundary_count(); ++b)
        if (bnd_use[static_cast<std::size_t>(b)] != 1)
            return "boundary segment " + t.boundary_name(b) + " fills " +
                   std::to_string(bnd_use[static_cast<std::size_t>(b)]) + " slots, expected 1";
    // a loop belongs to exactly one self-folded triangle
    std::set<int> loops;
    for (int i = 0; i < t.triangle_count(); ++i)
        if (t.triangle(i).self_folded && !loops.insert(t.triangle(i).loop().id).second)
            return "arc " + t.arc_name(t.triangle(i).loop().id) + " is the loop of two self-folded triangles";
    // names are the external identity, so they must be unique
    std::set<std::string> names;
    for (int a = 0; a < t.arc_count(); ++a)
        if (!names.insert(t.arc_name(a)).second) return "duplicate arc name " + t.arc_name(a);
    names.clear();
    for (int b = 0; b < t.boundary_count(); ++b)
        if (!names.insert(t.boundary_name(b)).second) return "duplicate boundary name " + t.boundary_name(b);
    return std::nullopt;
}

inline bool triangles_connected(const Triangulation& t) {
    if (t.triangle_count() == 0) return false;
    auto slots = t.arc_slots();
    std::vector<char> seen(static_cast<std::size_t>(t.triangle_count()), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& s : t.triangle(v).sides) {
            if (!s.is_arc()) continue;
            for (auto [u, pos] : slots[static_cast<std::size_t>(s.id)]) {
                (void)pos;
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = 1;
                    ++visited;
                    stack.push_back(u);
                }
            }
        }
    }
    return visited == t.triangle_count();
}

// Glue the complex and recover the topology: corner orbits are marked
// points, Euler characteristic gives the genus, boundary traces give the
// marked-point counts per boundary component.
inline Assembly assemble(const Triangulation& t) {
    if (auto err = check_slots(t)) throw validation_error(*err);
    if (!triangles_connected(t)) throw validation_error("triangulation is not connected");

    int T = t.triangle_count();
    auto corner = [&](int tri, int c) { return 3 * tri + ((c % 3) + 3) % 3; };
    detail::UnionFind uf(3 * T);
    auto slots = t.arc_slots();
    for (int a = 0; a < t.arc_count(); ++a) {
        auto [t1, s1] = slots[static_cast<std::size_t>(a)][0];
        auto [t2, s2] = slots[static_cast<std::size_t>(a)][1];
        // side s runs corner s -> corner s+1; opposite traversal gluing
        uf.unite(corner(t1, s1), corner(t2, s2 + 1));
        uf.unite(corner(t1, s1 + 1), corner(t2, s2));
    }

    Assembly out;
    std::map<int, int> class_id;
    out.corner_class.resize(static_cast<std::size_t>(3 * T));
    for (int c = 0; c < 3 * T; ++c) {
        int root = uf.find(c);
        auto it = class_id.find(root);
        if (it == class_id.end()) it = class_id.insert({root, static_cast<int>(class_id.size())}).first;
        out.corner_class[static_cast<std::size_t>(c)] = it->second;
    }
    out.vertex_count = static_cast<int>(class_id.size());

    // boundary trace: each boundary vertex has exactly one outgoing and one
    // incoming boundary slot
    std::vector<std::pair<int, int>> bslots;
    for (int tri = 0; tri < T; ++tri)
        for (int s = 0; s < 3; ++s)
            if (!t.triangle(tri).sides[static_cast<std::size_t>(s)].is_arc()) bslots.push_back({tri, s});
    std::map<int, int> start_at; // class -> index into bslots
    for (std::size_t i = 0; i < bslots.size(); ++i) {
        int cls = out.corner_class[static_cast<std::size_t>(corner(bslots[i].first, bslots[i].second))];
        if (!start_at.insert({cls, static_cast<int>(i)}).second)
            throw validation_error("non-manifold boundary: two boundary segments leave one marked point");
    }
    out.class_on_boundary.assign(static_cast<std::size_t>(out.vertex_count), 0);
    std::vector<char> used(bslots.size(), 0);
    for (std::size_t i = 0; i < bslots.size(); ++i) {
        if (used[i]) continue;
        std::vector<std::pair<int, int>> cycle;
        std::size_t cur = i;
        while (!used[cur]) {
            used[cur] = 1;
            cycle.push_back(bslots[cur]);
            int end_cls = out.corner_class[static_cast<std::size_t>(corner(bslots[cur].first, bslots[cur].second + 1))];
            out.class_on_boundary[static_cast<std::size_t>(end_cls)] = 1;
            int start_cls = out.corner_class[static_cast<std::size_t>(corner(bslots[cur].first, bslots[cur].second))];
            out.class_on_boundary[static_cast<std::size_t>(start_cls)] = 1;
            auto it = start_at.find(end_cls);
            if (it == start_at.end())
                throw validation_error("non-manifold boundary: a boundary segment ends at an interior point");
            cur = static_cast<std::size_t>(it->second);
        }
        out.boundary_cycles.push_back(std::move(cycle));
    }

    for (int cls = 0; cls < out.vertex_count; ++cls)
        if (!out.class_on_boundary[static_cast<std::size_t>(cls)]) out.puncture_classes.push_back(cls);

    int V = out.vertex_count;
    int E = t.arc_count() + t.boundary_count();
    int F = T;
    int chi = V - E + F;
    int b = static_cast<int>(out.boundary_cycles.size());
    int two_g = 2 - b - chi;
    if (two_g < 0 || two_g % 2 != 0)
        throw validation_error("gluing does not close up to an oriented surface (chi=" + std::to_string(chi) + ")");
    std::vector<int> h;
    for (const auto& cyc : out.boundary_cycles) h.push_back(static_cast<int>(cyc.size()));
    out.sig = SurfaceSig(two_g / 2, static_cast<int>(out.puncture_classes.size()), std::move(h));
    return out;
}

inline SurfaceSig surface_signature(const Triangulation& t) { return assemble(t).sig; }

// Full validation: slot structure, connectivity, a valid assembled surface,
// agreement with the declared signature, and the arc-count identity.
inline std::optional<std::string> check(const Triangulation& t) {
    if (auto err = check_slots(t)) return err;
    if (!triangles_connected(t)) return "triangulation is not connected";
    Assembly a;
    try {
        a = assemble(t);
    } catch (const validation_error& e) {
        return std::string(e.what());
    }
    if (!is_valid(a.sig)) return "assembled surface " + a.sig.str() + " is not an admissible marked surface";
    if (t.declared_sig && !(a.sig == *t.declared_sig))
        return "assembled surface " + a.sig.str() + " differs from declared " + t.declared_sig->str();
    if (t.arc_count() != rank(a.sig))
        return "arc count " + std::to_string(t.arc_count()) + " differs from rank " + std::to_string(rank(a.sig));
    return std::nullopt;
}

inline void validate(const Triangulation& t) {
    if (auto err = check(t)) throw validation_error(*err);
}

// ---------------------------------------------------------------------------
// Statistics

struct TriangStats {
    int f = 0, w = 0, c = 0;
    int d_neg = 0, d_pos = 0;
    int s_f = 0, s_w = 0;
};

inline TriangStats stats(const Triangulation& t) {
    validate(t);
    TriangStats st;
    auto loops = t.folded_loops();
    for (int i = 0; i < t.triangle_count(); ++i) {
        TriangleKind k = t.kind(i);
        bool has_loop = false;
        if (!t.triangle(i).self_folded)
            for (const auto& s : t.triangle(i).sides)
                if (s.is_arc() && loops.count(s.id)) has_loop = true;
        switch (k) {
            case TriangleKind::SelfFolded: ++st.f; break;
            case TriangleKind::Face:
                ++st.f;
                if (has_loop) ++st.s_f;
                break;
            case TriangleKind::Wedge:
                ++st.w;
                if (has_loop) ++st.s_w;
                break;
            case TriangleKind::Cap: ++st.c; break;
        }
    }
    // double-glued pairs: exactly two distinct arcs shared by two triangles;
    // the pair is negative when the two clockwise traversals induce opposite
    // arrows between the shared arcs
    auto slots = t.arc_slots();
    std::map<std::pair<int, int>, std::vector<int>> shared; // (t1,t2) -> arcs
    for (int a = 0; a < t.arc_count(); ++a) {
        int t1 = slots[static_cast<std::size_t>(a)][0].first;
        int t2 = slots[static_cast<std::size_t>(a)][1].first;
        if (t1 == t2) continue; // radius of a self-folded triangle
        shared[{std::min(t1, t2), std::max(t1, t2)}].push_back(a);
    }
    for (const auto& [pair, arcs] : shared) {
        if (arcs.size() != 2) continue;
        // arrow direction between arcs u,v inside triangle tri: +1 for u->v
        auto dir = [&](int tri, int u, int v) {
            const Triangle& tr = t.triangle(tri);
            for (int s = 0; s < 3; ++s) {
                const SideRef& a0 = tr.sides[static_cast<std::size_t>(s)];
                const SideRef& a1 = tr.sides[static_cast<std::size_t>((s + 1) % 3)];
                if (a0.is_arc() && a1.is_arc() && a0.id == u && a1.id == v) return +1;
                if (a0.is_arc() && a1.is_arc() && a0.id == v && a1.id == u) return -1;
            }
            return 0;
        };
        int d1 = dir(pair.first, arcs[0], arcs[1]);
        int d2 = dir(pair.second, arcs[0], arcs[1]);
        if (d1 == 0 || d2 == 0) continue;
        if (d1 == d2)
            ++st.d_pos;
        else
            ++st.d_neg;
    }
    return st;
}

// Structural equality up to rotation of side triples and reordering of
// triangles; arc and boundary identities must match exactly.
inline bool same_triangulation(const Triangulation& a, const Triangulation& b) {
    if (a.arc_count() != b.arc_count() || a.boundary_count() != b.boundary_count() ||
        a.triangle_count() != b.triangle_count())
        return false;
    for (int i = 0; i < a.arc_count(); ++i)
        if (a.arc_name(i) != b.arc_name(i)) return false;
    for (int i = 0; i < a.boundary_count(); ++i)
        if (a.boundary_name(i) != b.boundary_name(i)) return false;
    auto key = [](const Triangle& t) {
        std::array<std::pair<int, int>, 3> best{};
        bool have = false;
        for (int r = 0; r < 3; ++r) {
            std::array<std::pair<int, int>, 3> cand;
            for (int s = 0; s < 3; ++s) {
                const SideRef& ref = t.sides[static_cast<std::size_t>((r + s) % 3)];
                cand[static_cast<std::size_t>(s)] = {ref.is_arc() ? 0 : 1, ref.id};
            }
            if (!have || cand < best) {
                best = cand;
                have = true;
            }
        }
        return std::make_pair(t.self_folded, best);
    };
    std::multiset<std::pair<bool, std::array<std::pair<int, int>, 3>>> ka, kb;
    for (const auto& t : a.triangles()) ka.insert(key(t));
    for (const auto& t : b.triangles()) kb.insert(key(t));
    return ka == kb;
}

} // namespace surfq
