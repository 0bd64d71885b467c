#pragma once

#include <string>
#include <vector>

#include "surfq/quiver.hpp"
#include "surfq/triangulation.hpp"

namespace surfq {

// Exchange quiver of a triangulation.  Within every non-self-folded
// triangle each clockwise-consecutive pair of arc sides contributes arrows;
// a side that is the loop of a self-folded triangle stands for both the loop
// and its radius, so all four combinations receive arrows.  2-cycles cancel
// at the end.  Vertex i is arc i and carries the arc name as its label.
inline Quiver exchange_quiver(const Triangulation& t) {
    validate(t);
    auto loops = t.folded_loops();
    Quiver q(t.arc_count());
    std::vector<std::string> labels;
    for (int a = 0; a < t.arc_count(); ++a) labels.push_back(t.arc_name(a));
    q.set_labels(std::move(labels));

    std::vector<std::vector<std::int64_t>> raw(
        static_cast<std::size_t>(t.arc_count()),
        std::vector<std::int64_t>(static_cast<std::size_t>(t.arc_count()), 0));
    auto reps = [&](const SideRef& s) {
        std::vector<int> r;
        if (s.is_arc()) {
            r.push_back(s.id);
            auto it = loops.find(s.id);
            if (it != loops.end()) r.push_back(t.triangle(it->second).radius().id);
        }
        return r;
    };
    for (int i = 0; i < t.triangle_count(); ++i) {
        const Triangle& tr = t.triangle(i);
        if (tr.self_folded) continue;
        for (int s = 0; s < 3; ++s)
            for (int u : reps(tr.sides[static_cast<std::size_t>(s)]))
                for (int v : reps(tr.sides[static_cast<std::size_t>((s + 1) % 3)]))
                    raw[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] += 1;
    }
    for (int i = 0; i < t.arc_count(); ++i)
        for (int j = 0; j < t.arc_count(); ++j) {
            if (i == j) continue;
            std::int64_t m = raw[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (m > 0) q.add_arrow(i, j, m); // add_arrow cancels 2-cycles
        }
    return q;
}

// The three triangulations where the edge-count formula does not apply: the
// self-folded triangulations of the once-punctured digon, twice-punctured
// monogon and 4-punctured sphere.  Detected structurally from the triangle
// that encloses the self-folded loops.
inline std::optional<std::string> edge_formula_exclusion(const Triangulation& t) {
    auto loops = t.folded_loops();
    if (loops.empty()) return std::nullopt;
    for (int i = 0; i < t.triangle_count(); ++i) {
        const Triangle& tr = t.triangle(i);
        if (tr.self_folded) continue;
        int loop_sides = 0, bnd = 0;
        for (const auto& s : tr.sides) {
            if (!s.is_arc())
                ++bnd;
            else if (loops.count(s.id))
                ++loop_sides;
        }
        if (loop_sides >= 1 && bnd == 2) return "once-punctured digon";
        if (loop_sides >= 2 && bnd == 1) return "twice-punctured monogon";
        if (loop_sides == 3) return "4-punctured sphere";
    }
    return std::nullopt;
}

// e(Q) = 3 f + w - 2 d_neg - s_f - 2 s_w, valid outside the three excluded
// triangulations.
inline std::int64_t predicted_edges(const Triangulation& t) {
    if (auto ex = edge_formula_exclusion(t))
        throw validation_error("edge formula does not apply to the self-folded triangulation of the " + *ex);
    TriangStats st = stats(t);
    return 3 * static_cast<std::int64_t>(st.f) + st.w - 2 * st.d_neg - st.s_f - 2 * st.s_w;
}

struct MaximalityReport {
    bool maximal = false;
    std::string reason; // empty when maximal
};

// Maximal: no self-folded triangles, no negatively double-glued pairs, and
// the cap count reaches the capacity of the surface.
inline MaximalityReport is_maximal(const Triangulation& t) {
    TriangStats st = stats(t);
    for (const auto& tr : t.triangles())
        if (tr.self_folded) return {false, "contains a self-folded triangle"};
    if (st.d_neg > 0) return {false, "contains a negatively double-glued pair"};
    int want = cap_capacity(surface_signature(t));
    if (st.c != want)
        return {false, "has " + std::to_string(st.c) + " caps, capacity is " + std::to_string(want)};
    return {true, ""};
}

// Maximal, at least two faces, and the faces form a connected graph under
// shared arcs.
inline bool is_connected_max_2faces(const Triangulation& t) {
    if (!is_maximal(t).maximal) return false;
    std::vector<int> faces;
    for (int i = 0; i < t.triangle_count(); ++i)
        if (t.kind(i) == TriangleKind::Face) faces.push_back(i);
    if (faces.size() < 2) return false;
    auto slots = t.arc_slots();
    std::vector<int> face_index(static_cast<std::size_t>(t.triangle_count()), -1);
    for (std::size_t i = 0; i < faces.size(); ++i) face_index[static_cast<std::size_t>(faces[i])] = static_cast<int>(i);
    std::vector<std::vector<int>> adj(faces.size());
    for (int a = 0; a < t.arc_count(); ++a) {
        int t1 = slots[static_cast<std::size_t>(a)][0].first;
        int t2 = slots[static_cast<std::size_t>(a)][1].first;
        int f1 = face_index[static_cast<std::size_t>(t1)];
        int f2 = face_index[static_cast<std::size_t>(t2)];
        if (f1 >= 0 && f2 >= 0 && f1 != f2) {
            adj[static_cast<std::size_t>(f1)].push_back(f2);
            adj[static_cast<std::size_t>(f2)].push_back(f1);
        }
    }
    std::vector<char> seen(faces.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                ++visited;
                stack.push_back(u);
            }
    }
    return visited == faces.size();
}

} // namespace surfq
