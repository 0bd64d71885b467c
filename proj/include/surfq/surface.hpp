#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "surfq/errors.hpp"

namespace surfq {

// Homeomorphism type of a bordered surface with marked points: genus,
// puncture count, and the multiset of marked-point counts per boundary
// component (stored sorted descending).
struct SurfaceSig {
    int genus = 0;
    int punctures = 0;
    std::vector<int> boundary; // h_1 >= h_2 >= ... >= 1

    SurfaceSig() = default;
    SurfaceSig(int g, int p, std::vector<int> h) : genus(g), punctures(p), boundary(std::move(h)) {
        normalize();
    }

    void normalize() { std::sort(boundary.rbegin(), boundary.rend()); }

    int b() const { return static_cast<int>(boundary.size()); }

    int h() const {
        int total = 0;
        for (int hi : boundary) total += hi;
        return total;
    }

    int marked_points() const { return punctures + h(); }

    friend bool operator==(const SurfaceSig& a, const SurfaceSig& b) {
        return a.genus == b.genus && a.punctures == b.punctures && a.boundary == b.boundary;
    }
    friend bool operator!=(const SurfaceSig& a, const SurfaceSig& b) { return !(a == b); }
    friend bool operator<(const SurfaceSig& a, const SurfaceSig& b) {
        if (a.genus != b.genus) return a.genus < b.genus;
        if (a.punctures != b.punctures) return a.punctures < b.punctures;
        return a.boundary < b.boundary;
    }

    std::string str() const {
        std::string s = "g=" + std::to_string(genus) + ",p=" + std::to_string(punctures) + ",h=(";
        for (std::size_t i = 0; i < boundary.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(boundary[i]);
        }
        s += ')';
        return s;
    }
};

// Structurally well formed: non-negative counts, every boundary component
// carries a marked point, and the marked set is non-empty.
inline bool is_well_formed(const SurfaceSig& s) {
    if (s.genus < 0 || s.punctures < 0) return false;
    for (int hi : s.boundary)
        if (hi < 1) return false;
    return s.marked_points() >= 1;
}

// Admissible as a cluster surface: well formed and not one of the excluded
// small cases (sphere with at most 3 marked points, unpunctured disk with at
// most 3 marked points, once-punctured disk with 1 marked point).
inline bool is_valid(const SurfaceSig& s) {
    if (!is_well_formed(s)) return false;
    if (s.genus == 0 && s.b() == 0 && s.punctures <= 3) return false;
    if (s.genus == 0 && s.b() == 1) {
        if (s.punctures == 0 && s.boundary[0] <= 3) return false;
        if (s.punctures == 1 && s.boundary[0] == 1) return false;
    }
    return true;
}

// n = 6(g-1) + 3b + 3p + h: the number of arcs of every triangulation.
inline int rank(const SurfaceSig& s) {
    if (!is_valid(s)) throw validation_error("rank: invalid surface " + s.str());
    return 6 * (s.genus - 1) + 3 * s.b() + 3 * s.punctures + s.h();
}

// c(S,M) = sum over boundary components of floor(h_i / 2).
inline int cap_capacity(const SurfaceSig& s) {
    int c = 0;
    for (int hi : s.boundary) c += hi / 2;
    return c;
}

// Edge bound 2n - h + c attained exactly by maximal triangulations.
inline int edge_bound(const SurfaceSig& s) {
    return 2 * rank(s) - s.h() + cap_capacity(s);
}

namespace detail {

inline SurfaceSig disk(int p, int h) { return SurfaceSig(0, p, {h}); }
inline SurfaceSig annulus(int h1, int h2) { return SurfaceSig(0, 0, {h1, h2}); }
inline SurfaceSig sphere(int p) { return SurfaceSig(0, p, {}); }

} // namespace detail

// Classification data for the small exceptional surfaces.  These tables
// are closed lists; nothing here is computed.
struct ExceptionFlags {
    bool no_maximal = false;               // no maximal triangulation exists
    bool no_connected_max_2faces = false;  // not constructible with 2 faces
    bool block_uniqueness_exception = false;
    bool reconstruction_exception = false;
    std::optional<SurfaceSig> iso_exception_partner;
    // 0 when not a construction exception, otherwise the list item 1-4
    int existence_item = 0;
};

// Surfaces without any maximal triangulation: once-punctured 2-, 3- and
// 4-gons and the twice-punctured monogon.
inline const std::vector<SurfaceSig>& no_maximal_table() {
    static const std::vector<SurfaceSig> t = {
        detail::disk(1, 2), detail::disk(1, 3), detail::disk(1, 4), detail::disk(2, 1)};
    return t;
}

// Surfaces without a connected maximal triangulation with at least two
// faces, keyed by list item.
inline const std::vector<std::pair<SurfaceSig, int>>& existence_exception_table() {
    static const std::vector<std::pair<SurfaceSig, int>> t = {
        {detail::disk(0, 4), 1}, {detail::disk(0, 5), 1}, {detail::disk(0, 6), 1}, {detail::disk(0, 7), 1},
        {detail::disk(1, 2), 2}, {detail::disk(1, 3), 2}, {detail::disk(1, 4), 2},
        {detail::disk(2, 1), 3}, {detail::disk(2, 2), 3},
        {detail::annulus(1, 1), 4}, {detail::annulus(2, 1), 4}, {detail::annulus(3, 1), 4}};
    return t;
}

// Surfaces whose exchange quivers can fail to have unique block
// decompositions.
inline const std::vector<SurfaceSig>& block_uniqueness_exception_table() {
    static const std::vector<SurfaceSig> t = {
        detail::sphere(4),   detail::disk(2, 2),  detail::disk(1, 2), detail::disk(1, 3),
        detail::disk(1, 4),  detail::annulus(2, 2), detail::disk(0, 6)};
    return t;
}

// Surfaces whose topology is not determined by a maximal-triangulation
// quiver.
inline const std::vector<SurfaceSig>& reconstruction_exception_table() {
    static const std::vector<SurfaceSig> t = {detail::sphere(4), detail::disk(2, 1), detail::disk(2, 2)};
    return t;
}

// Non-homeomorphic pairs with isomorphic cluster algebras.
inline const std::vector<std::pair<SurfaceSig, SurfaceSig>>& iso_exception_pairs() {
    static const std::vector<std::pair<SurfaceSig, SurfaceSig>> t = {
        {detail::disk(0, 6), detail::disk(1, 3)},
        {detail::disk(2, 1), detail::annulus(2, 2)}};
    return t;
}

// Surfaces where maximality can fail to transfer along quiver
// isomorphisms.
inline const std::vector<SurfaceSig>& match1_exception_table() {
    static const std::vector<SurfaceSig> t = {
        detail::sphere(4), detail::disk(2, 1), detail::disk(1, 2), detail::disk(1, 3), detail::disk(1, 4)};
    return t;
}

// Surfaces whose connected maximal 2-face triangulations have quivers
// with more than one block decomposition.
inline const std::vector<SurfaceSig>& uniqueness_exception_table() {
    static const std::vector<SurfaceSig> t = {detail::sphere(4), detail::disk(2, 2), detail::annulus(2, 2)};
    return t;
}

inline ExceptionFlags classify_exceptions(const SurfaceSig& s) {
    if (!is_valid(s)) throw validation_error("classify_exceptions: invalid surface " + s.str());
    ExceptionFlags f;
    for (const auto& x : no_maximal_table())
        if (x == s) f.no_maximal = true;
    for (const auto& [x, item] : existence_exception_table())
        if (x == s) {
            f.no_connected_max_2faces = true;
            f.existence_item = item;
        }
    for (const auto& x : block_uniqueness_exception_table())
        if (x == s) f.block_uniqueness_exception = true;
    for (const auto& x : reconstruction_exception_table())
        if (x == s) f.reconstruction_exception = true;
    for (const auto& [a, b] : iso_exception_pairs()) {
        if (a == s) f.iso_exception_partner = b;
        if (b == s) f.iso_exception_partner = a;
    }
    return f;
}

// Parse the textual notation g=G,p=P,h=(h1,...,hb).
inline SurfaceSig parse_signature(const std::string& text) {
    auto fail = [&]() -> SurfaceSig { throw parse_error("cannot parse signature: " + text); };
    SurfaceSig s;
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    std::size_t gpos = t.find("g=");
    std::size_t ppos = t.find(",p=");
    std::size_t hpos = t.find(",h=(");
    if (gpos != 0 || ppos == std::string::npos || hpos == std::string::npos || t.back() != ')') return fail();
    try {
        s.genus = std::stoi(t.substr(2, ppos - 2));
        s.punctures = std::stoi(t.substr(ppos + 3, hpos - ppos - 3));
    } catch (...) {
        return fail();
    }
    std::string hs = t.substr(hpos + 4, t.size() - hpos - 5);
    if (!hs.empty()) {
        std::size_t start = 0;
        while (start <= hs.size()) {
            std::size_t comma = hs.find(',', start);
            std::string item = hs.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
            try {
                s.boundary.push_back(std::stoi(item));
            } catch (...) {
                return fail();
            }
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
    }
    s.normalize();
    return s;
}

} // namespace surfq
