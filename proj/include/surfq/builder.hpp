#pragma once

#include <map>
#include <string>
#include <vector>

#include "surfq/exchange.hpp"
#include "surfq/flip.hpp"
#include "surfq/triangulation.hpp"

namespace surfq {

// ---------------------------------------------------------------------------
// Base library: explicit connected maximal triangulations with at least two
// faces.  Stored as literal slot data; the tests recompute every signature
// and maximality property rather than trusting the tables.

namespace bases {

inline Triangulation octagon() {
    Triangulation t;
    std::vector<int> b;
    for (int i = 0; i < 8; ++i) b.push_back(t.add_boundary("b" + std::to_string(i)));
    int u02 = t.add_arc("u02"), u24 = t.add_arc("u24"), u46 = t.add_arc("u46"), u60 = t.add_arc("u60");
    int d = t.add_arc("d04");
    t.add_plain(SideRef::boundary(b[0]), SideRef::boundary(b[1]), SideRef::arc(u02));
    t.add_plain(SideRef::boundary(b[2]), SideRef::boundary(b[3]), SideRef::arc(u24));
    t.add_plain(SideRef::boundary(b[4]), SideRef::boundary(b[5]), SideRef::arc(u46));
    t.add_plain(SideRef::boundary(b[6]), SideRef::boundary(b[7]), SideRef::arc(u60));
    t.add_plain(SideRef::arc(u02), SideRef::arc(u24), SideRef::arc(d));
    t.add_plain(SideRef::arc(u46), SideRef::arc(u60), SideRef::arc(d));
    return t;
}

inline Triangulation punctured_pentagon() {
    Triangulation t;
    std::vector<int> b;
    for (int i = 0; i < 5; ++i) b.push_back(t.add_boundary("b" + std::to_string(i)));
    int a02 = t.add_arc("a02"), a24 = t.add_arc("a24");
    int r0 = t.add_arc("r0"), r2 = t.add_arc("r2"), r4 = t.add_arc("r4");
    t.add_plain(SideRef::boundary(b[0]), SideRef::boundary(b[1]), SideRef::arc(a02));
    t.add_plain(SideRef::boundary(b[2]), SideRef::boundary(b[3]), SideRef::arc(a24));
    t.add_plain(SideRef::arc(a02), SideRef::arc(r2), SideRef::arc(r0));
    t.add_plain(SideRef::arc(a24), SideRef::arc(r4), SideRef::arc(r2));
    t.add_plain(SideRef::boundary(b[4]), SideRef::arc(r0), SideRef::arc(r4));
    return t;
}

inline Triangulation twice_punctured_triangle() {
    Triangulation t;
    int b0 = t.add_boundary("b0"), b1 = t.add_boundary("b1"), b2 = t.add_boundary("b2");
    int a = t.add_arc("a");
    int p0 = t.add_arc("p0"), p2 = t.add_arc("p2");
    int q0 = t.add_arc("q0"), q2 = t.add_arc("q2"), pq = t.add_arc("pq");
    t.add_plain(SideRef::boundary(b0), SideRef::boundary(b1), SideRef::arc(a));
    t.add_plain(SideRef::arc(a), SideRef::arc(p2), SideRef::arc(p0));
    t.add_plain(SideRef::arc(p0), SideRef::arc(pq), SideRef::arc(q0));
    t.add_plain(SideRef::arc(pq), SideRef::arc(p2), SideRef::arc(q2));
    t.add_plain(SideRef::arc(q0), SideRef::arc(q2), SideRef::boundary(b2));
    return t;
}

inline Triangulation thrice_punctured_monogon() {
    Triangulation t;
    int b = t.add_boundary("b");
    int x1 = t.add_arc("x1"), x2 = t.add_arc("x2");
    int y = t.add_arc("y"), z = t.add_arc("z");
    int pq = t.add_arc("pq"), qr = t.add_arc("qr"), rp = t.add_arc("rp");
    t.add_plain(SideRef::boundary(b), SideRef::arc(x1), SideRef::arc(x2));
    t.add_plain(SideRef::arc(x1), SideRef::arc(y), SideRef::arc(pq));
    t.add_plain(SideRef::arc(y), SideRef::arc(z), SideRef::arc(qr));
    t.add_plain(SideRef::arc(z), SideRef::arc(x2), SideRef::arc(rp));
    t.add_plain(SideRef::arc(pq), SideRef::arc(qr), SideRef::arc(rp));
    return t;
}

inline Triangulation four_punctured_sphere() {
    Triangulation t;
    int al = t.add_arc("al"), be = t.add_arc("be"), ga = t.add_arc("ga");
    int de = t.add_arc("de"), ze = t.add_arc("ze"), et = t.add_arc("et");
    t.add_plain(SideRef::arc(be), SideRef::arc(ga), SideRef::arc(al));
    t.add_plain(SideRef::arc(ze), SideRef::arc(al), SideRef::arc(de));
    t.add_plain(SideRef::arc(de), SideRef::arc(ga), SideRef::arc(et));
    t.add_plain(SideRef::arc(et), SideRef::arc(be), SideRef::arc(ze));
    return t;
}

inline Triangulation five_punctured_sphere() {
    Triangulation t;
    int na = t.add_arc("na"), nb = t.add_arc("nb"), nc = t.add_arc("nc");
    int sa = t.add_arc("sa"), sb = t.add_arc("sb"), sc = t.add_arc("sc");
    int ab = t.add_arc("ab"), bc = t.add_arc("bc"), ca = t.add_arc("ca");
    t.add_plain(SideRef::arc(na), SideRef::arc(ab), SideRef::arc(nb));
    t.add_plain(SideRef::arc(nb), SideRef::arc(bc), SideRef::arc(nc));
    t.add_plain(SideRef::arc(nc), SideRef::arc(ca), SideRef::arc(na));
    t.add_plain(SideRef::arc(ab), SideRef::arc(sa), SideRef::arc(sb));
    t.add_plain(SideRef::arc(bc), SideRef::arc(sb), SideRef::arc(sc));
    t.add_plain(SideRef::arc(ca), SideRef::arc(sc), SideRef::arc(sa));
    return t;
}

inline Triangulation annulus41() {
    Triangulation t;
    int b01 = t.add_boundary("b01"), b12 = t.add_boundary("b12");
    int b23 = t.add_boundary("b23"), b30 = t.add_boundary("b30");
    int c = t.add_boundary("c");
    int u = t.add_arc("u"), v = t.add_arc("v");
    int x1 = t.add_arc("x1"), x2 = t.add_arc("x2"), y = t.add_arc("y");
    t.add_plain(SideRef::boundary(b01), SideRef::boundary(b12), SideRef::arc(u));
    t.add_plain(SideRef::boundary(b23), SideRef::boundary(b30), SideRef::arc(v));
    t.add_plain(SideRef::arc(u), SideRef::arc(y), SideRef::arc(x2));
    t.add_plain(SideRef::arc(v), SideRef::arc(x1), SideRef::arc(y));
    t.add_plain(SideRef::boundary(c), SideRef::arc(x1), SideRef::arc(x2));
    return t;
}

inline Triangulation annulus22() {
    Triangulation t;
    int t1 = t.add_boundary("t1"), t2 = t.add_boundary("t2");
    int u1 = t.add_boundary("u1"), u2 = t.add_boundary("u2");
    int al = t.add_arc("al"), be = t.add_arc("be"), ga = t.add_arc("ga"), de = t.add_arc("de");
    t.add_plain(SideRef::boundary(t1), SideRef::boundary(t2), SideRef::arc(ga));
    t.add_plain(SideRef::arc(al), SideRef::arc(ga), SideRef::arc(be));
    t.add_plain(SideRef::arc(be), SideRef::arc(al), SideRef::arc(de));
    t.add_plain(SideRef::arc(de), SideRef::boundary(u2), SideRef::boundary(u1));
    return t;
}

inline Triangulation punctured_annulus11() {
    Triangulation t;
    int ba = t.add_boundary("ba"), bb = t.add_boundary("bb");
    int x1 = t.add_arc("x1"), x2 = t.add_arc("x2");
    int y1 = t.add_arc("y1"), y2 = t.add_arc("y2"), z = t.add_arc("z");
    t.add_plain(SideRef::boundary(ba), SideRef::arc(x1), SideRef::arc(x2));
    t.add_plain(SideRef::boundary(bb), SideRef::arc(y2), SideRef::arc(y1));
    t.add_plain(SideRef::arc(x1), SideRef::arc(z), SideRef::arc(y1));
    t.add_plain(SideRef::arc(x2), SideRef::arc(y2), SideRef::arc(z));
    return t;
}

inline Triangulation pair_of_pants() {
    Triangulation t;
    int ba = t.add_boundary("ba"), bb = t.add_boundary("bb"), bc = t.add_boundary("bc");
    int g1 = t.add_arc("g1"), h1 = t.add_arc("h1"), k = t.add_arc("k");
    int z1 = t.add_arc("z1"), z2 = t.add_arc("z2"), e = t.add_arc("e");
    t.add_plain(SideRef::boundary(ba), SideRef::arc(g1), SideRef::arc(h1));
    t.add_plain(SideRef::boundary(bb), SideRef::arc(g1), SideRef::arc(k));
    t.add_plain(SideRef::boundary(bc), SideRef::arc(z1), SideRef::arc(z2));
    t.add_plain(SideRef::arc(h1), SideRef::arc(e), SideRef::arc(z2));
    t.add_plain(SideRef::arc(k), SideRef::arc(z1), SideRef::arc(e));
    return t;
}

// fan triangulation of the 4g-gon with edge word a1 b1 a1 b1 ... ag bg ag bg;
// glued orientation-coherently this closes to the once-punctured genus-g
// surface
inline Triangulation genus_closed(int g) {
    if (g < 1) throw validation_error("genus must be at least 1");
    Triangulation t;
    int m = 4 * g;
    std::vector<int> edge_arc(static_cast<std::size_t>(m));
    for (int k = 0; k < g; ++k) {
        int a = t.add_arc("a" + std::to_string(k + 1));
        int b = t.add_arc("b" + std::to_string(k + 1));
        edge_arc[static_cast<std::size_t>(4 * k)] = a;
        edge_arc[static_cast<std::size_t>(4 * k + 1)] = b;
        edge_arc[static_cast<std::size_t>(4 * k + 2)] = a;
        edge_arc[static_cast<std::size_t>(4 * k + 3)] = b;
    }
    std::vector<int> diag(static_cast<std::size_t>(m), -1);
    for (int i = 2; i <= m - 2; ++i) diag[static_cast<std::size_t>(i)] = t.add_arc("d" + std::to_string(i));
    auto D = [&](int i) {
        if (i == 1) return edge_arc[0];
        if (i == m - 1) return edge_arc[static_cast<std::size_t>(m - 1)];
        return diag[static_cast<std::size_t>(i)];
    };
    for (int i = 1; i <= m - 2; ++i)
        t.add_plain(SideRef::arc(D(i)), SideRef::arc(edge_arc[static_cast<std::size_t>(i)]), SideRef::arc(D(i + 1)));
    return t;
}

// same polygon with one extra boundary side: the unpunctured genus-g surface
// with one boundary component and one marked point
inline Triangulation genus_boundary(int g) {
    if (g < 1) throw validation_error("genus must be at least 1");
    Triangulation t;
    int m = 4 * g;
    std::vector<int> edge_arc(static_cast<std::size_t>(m));
    for (int k = 0; k < g; ++k) {
        int a = t.add_arc("a" + std::to_string(k + 1));
        int b = t.add_arc("b" + std::to_string(k + 1));
        edge_arc[static_cast<std::size_t>(4 * k)] = a;
        edge_arc[static_cast<std::size_t>(4 * k + 1)] = b;
        edge_arc[static_cast<std::size_t>(4 * k + 2)] = a;
        edge_arc[static_cast<std::size_t>(4 * k + 3)] = b;
    }
    int w = t.add_boundary("w");
    std::vector<int> diag(static_cast<std::size_t>(m + 1), -1);
    for (int i = 2; i <= m - 1; ++i) diag[static_cast<std::size_t>(i)] = t.add_arc("d" + std::to_string(i));
    for (int i = 1; i <= m - 1; ++i) {
        SideRef first = (i == 1) ? SideRef::arc(edge_arc[0]) : SideRef::arc(diag[static_cast<std::size_t>(i)]);
        SideRef last = (i == m - 1) ? SideRef::boundary(w) : SideRef::arc(diag[static_cast<std::size_t>(i + 1)]);
        t.add_plain(first, SideRef::arc(edge_arc[static_cast<std::size_t>(i)]), last);
    }
    return t;
}

} // namespace bases

// Explicit bases keyed by signature, genus families included up to genus 4.
inline std::map<SurfaceSig, Triangulation> base_library() {
    std::map<SurfaceSig, Triangulation> lib;
    lib[SurfaceSig(0, 0, {8})] = bases::octagon();
    lib[SurfaceSig(0, 1, {5})] = bases::punctured_pentagon();
    lib[SurfaceSig(0, 2, {3})] = bases::twice_punctured_triangle();
    lib[SurfaceSig(0, 3, {1})] = bases::thrice_punctured_monogon();
    lib[SurfaceSig(0, 4, {})] = bases::four_punctured_sphere();
    lib[SurfaceSig(0, 5, {})] = bases::five_punctured_sphere();
    lib[SurfaceSig(0, 0, {4, 1})] = bases::annulus41();
    lib[SurfaceSig(0, 0, {2, 2})] = bases::annulus22();
    lib[SurfaceSig(0, 1, {1, 1})] = bases::punctured_annulus11();
    lib[SurfaceSig(0, 0, {1, 1, 1})] = bases::pair_of_pants();
    for (int g = 1; g <= 4; ++g) {
        lib[SurfaceSig(g, 1, {})] = bases::genus_closed(g);
        lib[SurfaceSig(g, 0, {1})] = bases::genus_boundary(g);
    }
    return lib;
}

// ---------------------------------------------------------------------------
// Construction surgeries.  Each takes a connected maximal
// triangulation with at least 2 faces and returns another one.

inline int first_face(const Triangulation& t) {
    for (int i = 0; i < t.triangle_count(); ++i)
        if (t.kind(i) == TriangleKind::Face) return i;
    throw validation_error("no face to target");
}

inline std::string fresh_arc_name(const Triangulation& t, const std::string& stem) {
    for (int i = 0;; ++i) {
        std::string name = stem + std::to_string(t.arc_count() + i);
        if (t.arc_id(name) < 0) return name;
    }
}

inline std::string fresh_boundary_name(const Triangulation& t, const std::string& stem) {
    auto taken = [&](const std::string& name) {
        for (int i = 0; i < t.boundary_count(); ++i)
            if (t.boundary_name(i) == name) return true;
        return false;
    };
    for (int i = 0;; ++i) {
        std::string name = stem + std::to_string(t.boundary_count() + i);
        if (!taken(name)) return name;
    }
}

// barycentric subdivision of a face by one new puncture
inline Triangulation add_puncture(const Triangulation& t, int face) {
    if (face < 0 || face >= t.triangle_count() || t.kind(face) != TriangleKind::Face)
        throw validation_error("add_puncture: target is not a face");
    Triangulation out = t;
    const Triangle tr = t.triangle(face);
    int ra = out.add_arc(fresh_arc_name(out, "p"));
    int rb = out.add_arc(fresh_arc_name(out, "p"));
    int rc = out.add_arc(fresh_arc_name(out, "p"));
    out.triangle_mut(face) = Triangle::plain(tr.sides[0], SideRef::arc(rb), SideRef::arc(ra));
    out.add_plain(tr.sides[1], SideRef::arc(rc), SideRef::arc(rb));
    out.add_plain(tr.sides[2], SideRef::arc(ra), SideRef::arc(rc));
    out.declared_sig.reset();
    return out;
}

// replace a face by three faces and a wedge around a new boundary component
// carrying one marked point
inline Triangulation add_boundary_component(const Triangulation& t, int face) {
    if (face < 0 || face >= t.triangle_count() || t.kind(face) != TriangleKind::Face)
        throw validation_error("add_boundary_component: target is not a face");
    Triangulation out = t;
    const Triangle tr = t.triangle(face);
    int p = out.add_arc(fresh_arc_name(out, "c"));
    int q = out.add_arc(fresh_arc_name(out, "c"));
    int m = out.add_arc(fresh_arc_name(out, "c"));
    int s = out.add_arc(fresh_arc_name(out, "c"));
    int bd = out.add_boundary(fresh_boundary_name(out, "bn"));
    out.triangle_mut(face) = Triangle::plain(tr.sides[0], SideRef::arc(q), SideRef::arc(s));
    out.add_plain(tr.sides[1], SideRef::arc(m), SideRef::arc(q));
    out.add_plain(tr.sides[2], SideRef::arc(p), SideRef::arc(m));
    out.add_plain(SideRef::boundary(bd), SideRef::arc(p), SideRef::arc(s));
    out.declared_sig.reset();
    return out;
}

// add one marked point to boundary component `comp` (index into the
// assembly's boundary cycles): an even component splits a cap into cap +
// wedge, an odd one splits its wedge into cap + face
inline Triangulation add_boundary_marked_point(const Triangulation& t, int comp) {
    Assembly as = assemble(t);
    if (comp < 0 || comp >= static_cast<int>(as.boundary_cycles.size()))
        throw validation_error("add_boundary_marked_point: no such boundary component");
    std::set<int> segs;
    for (auto [tri, pos] : as.boundary_cycles[static_cast<std::size_t>(comp)])
        segs.insert(t.triangle(tri).sides[static_cast<std::size_t>(pos)].id);
    int h = static_cast<int>(as.boundary_cycles[static_cast<std::size_t>(comp)].size());
    Triangulation out = t;

    if (h % 2 == 0) {
        // find a cap with both boundary sides on this component
        for (int i = 0; i < t.triangle_count(); ++i) {
            if (t.kind(i) != TriangleKind::Cap) continue;
            const Triangle& tr = t.triangle(i);
            int rot = -1;
            for (int r = 0; r < 3; ++r)
                if (tr.sides[static_cast<std::size_t>(r)].is_arc()) rot = (r + 1) % 3;
            std::array<SideRef, 3> s{tr.sides[static_cast<std::size_t>(rot)],
                                     tr.sides[static_cast<std::size_t>((rot + 1) % 3)],
                                     tr.sides[static_cast<std::size_t>((rot + 2) % 3)]};
            if (!segs.count(s[0].id) || !segs.count(s[1].id)) continue;
            // split s[0] = b1 into b1 + b1', add arc g: cap (b1', b2, g), wedge (b1, g, a)
            int b1b = out.add_boundary(fresh_boundary_name(out, "s"));
            int g = out.add_arc(fresh_arc_name(out, "m"));
            out.triangle_mut(i) = Triangle::plain(SideRef::boundary(b1b), s[1], SideRef::arc(g));
            out.add_plain(s[0], SideRef::arc(g), s[2]);
            out.declared_sig.reset();
            return out;
        }
        throw validation_error("add_boundary_marked_point: no cap on an even component");
    }
    // odd: split the unique wedge attached to this component
    for (int i = 0; i < t.triangle_count(); ++i) {
        if (t.kind(i) != TriangleKind::Wedge) continue;
        const Triangle& tr = t.triangle(i);
        int rot = -1;
        for (int r = 0; r < 3; ++r)
            if (!tr.sides[static_cast<std::size_t>(r)].is_arc()) rot = r;
        std::array<SideRef, 3> s{tr.sides[static_cast<std::size_t>(rot)],
                                 tr.sides[static_cast<std::size_t>((rot + 1) % 3)],
                                 tr.sides[static_cast<std::size_t>((rot + 2) % 3)]};
        if (!segs.count(s[0].id)) continue;
        // split s[0] = b into b + b', add arc g: cap (b, b', g), face (g, u, v)
        int bb = out.add_boundary(fresh_boundary_name(out, "s"));
        int g = out.add_arc(fresh_arc_name(out, "m"));
        out.triangle_mut(i) = Triangle::plain(SideRef::arc(g), s[1], s[2]);
        out.add_plain(s[0], SideRef::boundary(bb), SideRef::arc(g));
        out.declared_sig.reset();
        return out;
    }
    throw validation_error("add_boundary_marked_point: no wedge on an odd component");
}

// ---------------------------------------------------------------------------
// Full construction

struct BuildResult {
    Triangulation triangulation;
    std::vector<std::string> plan;
};

inline BuildResult build_max_connected_with_plan(const SurfaceSig& sig0) {
    SurfaceSig sig = sig0;
    sig.normalize();
    if (!is_valid(sig)) throw validation_error("build: invalid surface " + sig.str());
    ExceptionFlags fl = classify_exceptions(sig);
    if (fl.existence_item > 0)
        throw exception_surface(fl.existence_item,
                                "surface " + sig.str() + " has no connected maximal triangulation with 2 faces (exception item " +
                                    std::to_string(fl.existence_item) + ")");

    BuildResult res;
    Triangulation cur;
    auto lib = base_library();
    auto from_base = [&](const SurfaceSig& key, Triangulation base) {
        cur = std::move(base);
        res.plan.push_back("base " + key.str());
    };

    if (sig.genus >= 1) {
        if (sig.b() == 0)
            from_base(SurfaceSig(sig.genus, 1, {}), bases::genus_closed(sig.genus));
        else
            from_base(SurfaceSig(sig.genus, 0, {1}), bases::genus_boundary(sig.genus));
    } else if (sig.b() == 0) {
        from_base(SurfaceSig(0, 4, {}), bases::four_punctured_sphere());
    } else if (sig.b() == 1) {
        if (sig.punctures == 0)
            from_base(SurfaceSig(0, 0, {8}), bases::octagon());
        else if (sig.punctures == 1)
            from_base(SurfaceSig(0, 1, {5}), bases::punctured_pentagon());
        else if (sig.punctures == 2)
            from_base(SurfaceSig(0, 2, {3}), bases::twice_punctured_triangle());
        else
            from_base(SurfaceSig(0, 3, {1}), bases::thrice_punctured_monogon());
    } else if (sig.b() == 2) {
        if (sig.punctures >= 1)
            from_base(SurfaceSig(0, 1, {1, 1}), bases::punctured_annulus11());
        else if (sig.boundary[1] == 1)
            from_base(SurfaceSig(0, 0, {4, 1}), bases::annulus41());
        else
            from_base(SurfaceSig(0, 0, {2, 2}), bases::annulus22());
    } else {
        from_base(SurfaceSig(0, 0, {1, 1, 1}), bases::pair_of_pants());
    }

    // boundary components
    while (static_cast<int>(assemble(cur).boundary_cycles.size()) < sig.b()) {
        int face = first_face(cur);
        cur = add_boundary_component(cur, face);
        res.plan.push_back("add boundary component in face " + std::to_string(face));
    }
    // punctures
    while (assemble(cur).sig.punctures < sig.punctures) {
        int face = first_face(cur);
        cur = add_puncture(cur, face);
        res.plan.push_back("add puncture in face " + std::to_string(face));
    }
    // boundary marked points: raise the sorted-descending profile pointwise
    for (;;) {
        Assembly as = assemble(cur);
        std::vector<std::pair<int, int>> comps; // (h, comp index)
        for (std::size_t i = 0; i < as.boundary_cycles.size(); ++i)
            comps.push_back({static_cast<int>(as.boundary_cycles[i].size()), static_cast<int>(i)});
        std::sort(comps.rbegin(), comps.rend());
        int deficient = -1;
        for (std::size_t i = 0; i < comps.size(); ++i)
            if (comps[i].first < sig.boundary[i]) {
                deficient = comps[i].second;
                break;
            }
        if (deficient < 0) break;
        cur = add_boundary_marked_point(cur, deficient);
        res.plan.push_back("add marked point on boundary component " + std::to_string(deficient));
    }

    cur.declared_sig = sig;
    validate(cur);
    res.triangulation = std::move(cur);
    return res;
}

inline Triangulation build_max_connected(const SurfaceSig& sig) {
    return build_max_connected_with_plan(sig).triangulation;
}

// ---------------------------------------------------------------------------
// Seeds for flip enumeration: cover the exception surfaces too.

namespace seeds {

inline Triangulation polygon_fan(int n) {
    Triangulation t;
    std::vector<int> b;
    for (int i = 0; i < n; ++i) b.push_back(t.add_boundary("b" + std::to_string(i)));
    std::vector<int> diag(static_cast<std::size_t>(n), -1);
    for (int i = 2; i <= n - 2; ++i) diag[static_cast<std::size_t>(i)] = t.add_arc("d" + std::to_string(i));
    auto D = [&](int i) {
        if (i == 1) return SideRef::boundary(b[0]);
        if (i == n - 1) return SideRef::boundary(b[static_cast<std::size_t>(n - 1)]);
        return SideRef::arc(diag[static_cast<std::size_t>(i)]);
    };
    for (int i = 1; i <= n - 2; ++i) t.add_plain(D(i), SideRef::boundary(b[static_cast<std::size_t>(i)]), D(i + 1));
    return t;
}

inline Triangulation punctured_polygon_fan(int n) {
    Triangulation t;
    std::vector<int> b, r;
    for (int i = 0; i < n; ++i) b.push_back(t.add_boundary("b" + std::to_string(i)));
    for (int i = 0; i < n; ++i) r.push_back(t.add_arc("r" + std::to_string(i)));
    for (int i = 0; i < n; ++i)
        t.add_plain(SideRef::boundary(b[static_cast<std::size_t>(i)]),
                    SideRef::arc(r[static_cast<std::size_t>((i + 1) % n)]), SideRef::arc(r[static_cast<std::size_t>(i)]));
    return t;
}

inline Triangulation twice_punctured_monogon() {
    Triangulation t;
    int b = t.add_boundary("b");
    int al = t.add_arc("al"), be = t.add_arc("be"), ga = t.add_arc("ga"), de = t.add_arc("de");
    t.add_folded(ga, de);
    t.add_plain(SideRef::arc(al), SideRef::arc(ga), SideRef::arc(be));
    t.add_plain(SideRef::boundary(b), SideRef::arc(be), SideRef::arc(al));
    return t;
}

inline Triangulation twice_punctured_digon() {
    Triangulation t;
    int tt = t.add_boundary("t"), u = t.add_boundary("u");
    int a = t.add_arc("a"), b = t.add_arc("b"), c = t.add_arc("c"), d = t.add_arc("d"), e = t.add_arc("e");
    t.add_plain(SideRef::boundary(tt), SideRef::arc(b), SideRef::arc(a));
    t.add_plain(SideRef::arc(a), SideRef::arc(e), SideRef::arc(d));
    t.add_plain(SideRef::arc(b), SideRef::arc(c), SideRef::arc(e));
    t.add_plain(SideRef::boundary(u), SideRef::arc(d), SideRef::arc(c));
    return t;
}

inline Triangulation annulus11() {
    Triangulation t;
    int b = t.add_boundary("b"), tt = t.add_boundary("t");
    int al = t.add_arc("al"), be = t.add_arc("be");
    t.add_plain(SideRef::boundary(b), SideRef::arc(al), SideRef::arc(be));
    t.add_plain(SideRef::arc(be), SideRef::boundary(tt), SideRef::arc(al));
    return t;
}

inline Triangulation annulus21() {
    Triangulation t;
    int b1 = t.add_boundary("b1"), b2 = t.add_boundary("b2"), tt = t.add_boundary("t");
    int al = t.add_arc("al"), be = t.add_arc("be"), ga = t.add_arc("ga");
    t.add_plain(SideRef::boundary(b1), SideRef::arc(be), SideRef::arc(al));
    t.add_plain(SideRef::boundary(b2), SideRef::arc(al), SideRef::arc(ga));
    t.add_plain(SideRef::arc(be), SideRef::arc(ga), SideRef::boundary(tt));
    return t;
}

inline Triangulation annulus31() {
    Triangulation t;
    int b12 = t.add_boundary("b12"), b23 = t.add_boundary("b23"), b31 = t.add_boundary("b31");
    int tt = t.add_boundary("t");
    int a1 = t.add_arc("a1"), d2 = t.add_arc("d2"), d3 = t.add_arc("d3"), d3p = t.add_arc("d3p");
    t.add_plain(SideRef::boundary(b12), SideRef::arc(d2), SideRef::arc(a1));
    t.add_plain(SideRef::boundary(b23), SideRef::arc(d3), SideRef::arc(d2));
    t.add_plain(SideRef::boundary(b31), SideRef::arc(a1), SideRef::arc(d3p));
    t.add_plain(SideRef::arc(d3), SideRef::arc(d3p), SideRef::boundary(tt));
    return t;
}

} // namespace seeds

// Any valid triangulation of the surface: fans for unpunctured polygons,
// explicit tables for the construction exceptions, the builder otherwise.
inline Triangulation seed_triangulation(const SurfaceSig& sig0) {
    SurfaceSig sig = sig0;
    sig.normalize();
    if (!is_valid(sig)) throw validation_error("seed: invalid surface " + sig.str());
    if (sig.genus == 0 && sig.b() == 1 && sig.punctures == 0) return seeds::polygon_fan(sig.boundary[0]);
    if (sig.genus == 0 && sig.b() == 1 && sig.punctures == 1 && sig.boundary[0] <= 4)
        return seeds::punctured_polygon_fan(sig.boundary[0]);
    if (sig == SurfaceSig(0, 2, {1})) return seeds::twice_punctured_monogon();
    if (sig == SurfaceSig(0, 2, {2})) return seeds::twice_punctured_digon();
    if (sig == SurfaceSig(0, 0, {1, 1})) return seeds::annulus11();
    if (sig == SurfaceSig(0, 0, {2, 1})) return seeds::annulus21();
    if (sig == SurfaceSig(0, 0, {3, 1})) return seeds::annulus31();
    return build_max_connected(sig);
}

} // namespace surfq
