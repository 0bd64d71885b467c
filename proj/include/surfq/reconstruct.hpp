#pragma once

#include <string>
#include <variant>
#include <vector>

#include "surfq/blocks.hpp"
#include "surfq/exchange.hpp"

namespace surfq {

struct Recovered {
    Triangulation triangulation;
    SurfaceSig sig;
    BlockDecomposition decomposition;
};
struct Ambiguous {
    std::vector<Recovered> candidates;
};
struct NotInClass {};

using RecoverResult = std::variant<Recovered, Ambiguous, NotInClass>;

// Recover the surface from a quiver via block decompositions.  The search
// is restricted to blocks of types I and II, which is exhaustive for the
// quivers of connected maximal triangulations with at least two faces; when
// the assembled surface is one of the uniqueness exceptions the full kind
// set is consulted so the ambiguity witnesses are reported.
inline RecoverResult recover(const Quiver& q, std::size_t node_budget = 20'000'000) {
    if (!q.is_connected()) throw validation_error("recover: quiver must be connected");
    EnumerateOptions opt;
    opt.kinds = {BlockKind::II, BlockKind::I};
    opt.node_budget = node_budget;
    EnumerateOutcome out = enumerate_decompositions(q, opt);
    auto assemble_one = [&](const BlockDecomposition& d) {
        Recovered r;
        r.triangulation = decomposition_to_triangulation(d, q);
        r.sig = surface_signature(r.triangulation);
        r.decomposition = d;
        return r;
    };
    if (out.decompositions.empty()) return NotInClass{};
    if (out.decompositions.size() == 1) {
        Recovered r = assemble_one(out.decompositions.front());
        bool exceptional = false;
        for (const auto& x : uniqueness_exception_table()) exceptional |= (x == r.sig);
        if (!exceptional) return r;
        // on an exception surface other decompositions may exist
        EnumerateOptions full;
        full.node_budget = node_budget;
        EnumerateOutcome all = enumerate_decompositions(q, full);
        if (all.decompositions.size() <= 1) return r;
        Ambiguous amb;
        for (const auto& d : all.decompositions) amb.candidates.push_back(assemble_one(d));
        return amb;
    }
    Ambiguous amb;
    for (const auto& d : out.decompositions) amb.candidates.push_back(assemble_one(d));
    return amb;
}

// ---------------------------------------------------------------------------
// Transport of a quiver isomorphism to a triangle correspondence.

struct TriangleCorrespondence {
    std::vector<std::pair<int, int>> pairs; // triangle of t1 -> triangle of t2
};

struct MatchFailure : validation_error {
    int t1_triangle;
    MatchFailure(int tri, const std::string& what) : validation_error(what), t1_triangle(tri) {}
};

inline bool is_quiver_isomorphism(const Quiver& a, const Quiver& b, const std::vector<int>& phi) {
    if (a.size() != b.size() || static_cast<int>(phi.size()) != a.size()) return false;
    std::vector<char> seen(phi.size(), 0);
    for (int v : phi) {
        if (v < 0 || v >= b.size() || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j)
            if (a.mult(i, j) != b.mult(phi[static_cast<std::size_t>(i)], phi[static_cast<std::size_t>(j)]))
                return false;
    return true;
}

// Maximality transfers along quiver isomorphisms outside the exception
// list; this evaluates the conclusion after checking the preconditions.
inline bool check_match1(const Triangulation& t1, const Triangulation& t2, const std::vector<int>& phi) {
    SurfaceSig s1 = surface_signature(t1), s2 = surface_signature(t2);
    for (const auto& x : match1_exception_table())
        if (x == s1 || x == s2) throw validation_error("check_match1: surface is on the exception list");
    if (!is_maximal(t1).maximal) throw validation_error("check_match1: first triangulation is not maximal");
    if (!is_quiver_isomorphism(exchange_quiver(t1), exchange_quiver(t2), phi))
        throw validation_error("check_match1: phi is not a quiver isomorphism");
    return is_maximal(t2).maximal;
}

// Stage 1-3 matching: faces to faces preserving clockwise boundaries under
// phi, then wedges, then caps.  Certifies that t2 is maximal and that the
// surfaces share a signature.
inline TriangleCorrespondence transport(const Triangulation& t1, const std::vector<int>& phi,
                                        const Triangulation& t2) {
    if (!is_connected_max_2faces(t1))
        throw validation_error("transport: first triangulation must be connected maximal with 2 faces");
    SurfaceSig s1 = surface_signature(t1), s2 = surface_signature(t2);
    for (const auto& x : reconstruction_exception_table())
        if (x == s1 || x == s2) throw validation_error("transport: surface is on the exception list");
    Quiver q1 = exchange_quiver(t1), q2 = exchange_quiver(t2);
    if (!is_quiver_isomorphism(q1, q2, phi)) throw validation_error("transport: phi is not a quiver isomorphism");
    if (!is_maximal(t2).maximal)
        throw MatchFailure(-1, "transport: image triangulation is not maximal, contradicting the matching property");
    if (!(s1 == s2)) throw MatchFailure(-1, "transport: surfaces differ: " + s1.str() + " vs " + s2.str());

    auto image_triple = [&](const Triangle& tr) {
        std::array<int, 3> im{};
        for (int s = 0; s < 3; ++s) im[static_cast<std::size_t>(s)] = phi[static_cast<std::size_t>(tr.sides[static_cast<std::size_t>(s)].id)];
        return im;
    };
    auto cyclic_equal = [](const std::array<int, 3>& a, const std::array<int, 3>& b) {
        for (int r = 0; r < 3; ++r)
            if (a[0] == b[static_cast<std::size_t>(r)] && a[1] == b[static_cast<std::size_t>((r + 1) % 3)] &&
                a[2] == b[static_cast<std::size_t>((r + 2) % 3)])
                return true;
        return false;
    };

    TriangleCorrespondence corr;
    std::vector<char> used(static_cast<std::size_t>(t2.triangle_count()), 0);

    // stage 1: faces, in an order where each shares an arc with a previous one
    std::vector<int> faces1;
    for (int i = 0; i < t1.triangle_count(); ++i)
        if (t1.kind(i) == TriangleKind::Face) faces1.push_back(i);
    auto slots1 = t1.arc_slots();
    std::vector<int> order;
    std::vector<char> picked(faces1.size(), 0);
    if (!faces1.empty()) {
        std::vector<char> in_order(static_cast<std::size_t>(t1.triangle_count()), 0);
        order.push_back(faces1[0]);
        in_order[static_cast<std::size_t>(faces1[0])] = 1;
        picked[0] = 1;
        while (order.size() < faces1.size()) {
            bool advanced = false;
            for (std::size_t i = 0; i < faces1.size() && !advanced; ++i) {
                if (picked[i]) continue;
                bool adjacent = false;
                for (const auto& s : t1.triangle(faces1[i]).sides) {
                    if (!s.is_arc()) continue;
                    for (auto [otri, opos] : slots1[static_cast<std::size_t>(s.id)]) {
                        (void)opos;
                        adjacent |= (otri != faces1[i] && in_order[static_cast<std::size_t>(otri)] != 0);
                    }
                }
                if (adjacent) {
                    order.push_back(faces1[i]);
                    in_order[static_cast<std::size_t>(faces1[i])] = 1;
                    picked[i] = 1;
                    advanced = true;
                }
            }
            if (!advanced) throw validation_error("transport: face graph is not connected");
        }
    }
    for (int f1 : order) {
        std::array<int, 3> want = image_triple(t1.triangle(f1));
        int found = -1;
        for (int f2 = 0; f2 < t2.triangle_count(); ++f2) {
            if (used[static_cast<std::size_t>(f2)] || t2.kind(f2) != TriangleKind::Face) continue;
            if (cyclic_equal(want, image_triple(t2.triangle(f2)))) {
                found = f2;
                break;
            }
        }
        if (found < 0)
            throw MatchFailure(f1, "transport: no face of the image triangulation matches the clockwise boundary of face " +
                                       std::to_string(f1));
        used[static_cast<std::size_t>(found)] = 1;
        corr.pairs.push_back({f1, found});
    }

    // stage 2: wedges preserve their clockwise arc pair
    for (int i = 0; i < t1.triangle_count(); ++i) {
        if (t1.kind(i) != TriangleKind::Wedge) continue;
        const Triangle& tr = t1.triangle(i);
        int rot = 0;
        for (int r = 0; r < 3; ++r)
            if (!tr.sides[static_cast<std::size_t>(r)].is_arc()) rot = r;
        int a = phi[static_cast<std::size_t>(tr.sides[static_cast<std::size_t>((rot + 1) % 3)].id)];
        int b = phi[static_cast<std::size_t>(tr.sides[static_cast<std::size_t>((rot + 2) % 3)].id)];
        int found = -1;
        for (int j = 0; j < t2.triangle_count(); ++j) {
            if (used[static_cast<std::size_t>(j)] || t2.kind(j) != TriangleKind::Wedge) continue;
            const Triangle& tw = t2.triangle(j);
            int rot2 = 0;
            for (int r = 0; r < 3; ++r)
                if (!tw.sides[static_cast<std::size_t>(r)].is_arc()) rot2 = r;
            if (tw.sides[static_cast<std::size_t>((rot2 + 1) % 3)].id == a &&
                tw.sides[static_cast<std::size_t>((rot2 + 2) % 3)].id == b) {
                found = j;
                break;
            }
        }
        if (found < 0) throw MatchFailure(i, "transport: unmatched wedge " + std::to_string(i));
        used[static_cast<std::size_t>(found)] = 1;
        corr.pairs.push_back({i, found});
    }

    // stage 3: caps follow their arc
    for (int i = 0; i < t1.triangle_count(); ++i) {
        if (t1.kind(i) != TriangleKind::Cap) continue;
        int a = -1;
        for (const auto& s : t1.triangle(i).sides)
            if (s.is_arc()) a = phi[static_cast<std::size_t>(s.id)];
        int found = -1;
        for (int j = 0; j < t2.triangle_count(); ++j) {
            if (used[static_cast<std::size_t>(j)] || t2.kind(j) != TriangleKind::Cap) continue;
            for (const auto& s : t2.triangle(j).sides)
                if (s.is_arc() && s.id == a) found = j;
            if (found >= 0) break;
        }
        if (found < 0) throw MatchFailure(i, "transport: unmatched cap " + std::to_string(i));
        used[static_cast<std::size_t>(found)] = 1;
        corr.pairs.push_back({i, found});
    }

    if (corr.pairs.size() != static_cast<std::size_t>(t1.triangle_count()) ||
        corr.pairs.size() != static_cast<std::size_t>(t2.triangle_count()))
        throw MatchFailure(-1, "transport: triangle counts do not agree");
    return corr;
}

} // namespace surfq
