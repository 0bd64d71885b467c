#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "surfq/exchange.hpp"
#include "surfq/triangulation.hpp"

namespace surfq {

enum class Tag { Plain, Notched };

// Tagged triangulation, stored as its underlying ordinary triangulation plus
// a tag map.  A self-folded pair (loop, radius) in the base stands for the
// doubled tagged arc at its enclosed puncture: the radius is the plain copy
// and the loop is the copy notched there, so those punctures have signature
// 0 without explicit tag entries.  Everywhere else tags are per arc end;
// absent entries are plain.
struct TaggedTriangulation {
    Triangulation base;
    std::map<std::pair<int, int>, Tag> tags; // (arc id, end 0/1) -> tag

    Tag tag(int arc, int end) const {
        auto it = tags.find({arc, end});
        return it == tags.end() ? Tag::Plain : it->second;
    }
    void set_tag(int arc, int end, Tag t) {
        if (t == Tag::Plain)
            tags.erase({arc, end});
        else
            tags[{arc, end}] = t;
    }
};

// End classes of every arc: end 0/1 are the start/end corners of the arc's
// first slot.
struct ArcEndpoints {
    Assembly assembly;
    std::vector<std::array<int, 2>> ends; // arc -> {class of end 0, class of end 1}
    std::map<int, int> folded_puncture;   // self-folded triangle -> enclosed class
};

inline ArcEndpoints arc_endpoints(const Triangulation& t) {
    ArcEndpoints out{assemble(t), {}, {}};
    auto slots = t.arc_slots();
    auto cls = [&](int tri, int c) {
        return out.assembly.corner_class[static_cast<std::size_t>(3 * tri + ((c % 3) + 3) % 3)];
    };
    out.ends.resize(static_cast<std::size_t>(t.arc_count()));
    for (int a = 0; a < t.arc_count(); ++a) {
        auto [tri, pos] = slots[static_cast<std::size_t>(a)][0];
        out.ends[static_cast<std::size_t>(a)] = {cls(tri, pos), cls(tri, pos + 1)};
    }
    for (int i = 0; i < t.triangle_count(); ++i)
        if (t.triangle(i).self_folded) out.folded_puncture[i] = cls(i, 2);
    return out;
}

inline bool is_once_punctured_closed(const SurfaceSig& s) {
    return s.b() == 0 && s.punctures == 1;
}

// Validity of the tag data on top of a valid base: plain boundary ends,
// plain radius end at the enclosed puncture, loop tags uniform and matching
// the radius, uniform tags at every other puncture, and all-plain on
// once-punctured closed surfaces.
inline std::optional<std::string> check_tagged(const TaggedTriangulation& t) {
    if (auto err = check(t.base)) return err;
    ArcEndpoints ep = arc_endpoints(t.base);
    for (const auto& [key, tag] : t.tags) {
        auto [arc, end] = key;
        if (arc < 0 || arc >= t.base.arc_count() || end < 0 || end > 1) return "tag on a nonexistent arc end";
        (void)tag;
    }
    if (is_once_punctured_closed(ep.assembly.sig)) {
        for (const auto& [key, tag] : t.tags)
            if (tag == Tag::Notched) return "once-punctured closed surfaces carry plain tags only";
        return std::nullopt;
    }
    std::set<int> folded_classes;
    for (const auto& [tri, cls] : ep.folded_puncture) {
        folded_classes.insert(cls);
        const Triangle& tr = t.base.triangle(tri);
        int radius = tr.radius().id, loop = tr.loop().id;
        // by the slot convention end 1 of a radius is the enclosed corner
        if (t.tag(radius, 1) != Tag::Plain)
            return "radius " + t.base.arc_name(radius) + " must stay plain at its puncture";
        Tag far = t.tag(radius, 0);
        if (t.tag(loop, 0) != far || t.tag(loop, 1) != far)
            return "loop " + t.base.arc_name(loop) + " must carry the tag of its radius base end";
    }
    // uniform tags at every puncture that is not a doubled site
    for (int y : ep.assembly.puncture_classes) {
        if (folded_classes.count(y)) continue;
        int plain = 0, notched = 0;
        for (int a = 0; a < t.base.arc_count(); ++a)
            for (int e = 0; e < 2; ++e)
                if (ep.ends[static_cast<std::size_t>(a)][static_cast<std::size_t>(e)] == y)
                    (t.tag(a, e) == Tag::Plain ? plain : notched)++;
        if (plain > 0 && notched > 0) return "mixed tags at a puncture outside a doubled site";
    }
    // boundary ends plain
    for (int a = 0; a < t.base.arc_count(); ++a)
        for (int e = 0; e < 2; ++e) {
            int cls = ep.ends[static_cast<std::size_t>(a)][static_cast<std::size_t>(e)];
            if (ep.assembly.class_on_boundary[static_cast<std::size_t>(cls)] && t.tag(a, e) == Tag::Notched)
                return "boundary endpoint of arc " + t.base.arc_name(a) + " must be plain";
        }
    return std::nullopt;
}

inline void validate_tagged(const TaggedTriangulation& t) {
    if (auto err = check_tagged(t)) throw validation_error(*err);
}

// Signature of a puncture: +1 all plain, -1 all notched, 0 at doubled sites.
inline int delta_signature(const TaggedTriangulation& t, int puncture_class) {
    validate_tagged(t);
    ArcEndpoints ep = arc_endpoints(t.base);
    bool is_puncture = false;
    for (int y : ep.assembly.puncture_classes) is_puncture |= (y == puncture_class);
    if (!is_puncture) throw validation_error("delta_signature: not a puncture");
    for (const auto& [tri, cls] : ep.folded_puncture)
        if (cls == puncture_class) return 0;
    int plain = 0, notched = 0;
    for (int a = 0; a < t.base.arc_count(); ++a)
        for (int e = 0; e < 2; ++e)
            if (ep.ends[static_cast<std::size_t>(a)][static_cast<std::size_t>(e)] == puncture_class)
                (t.tag(a, e) == Tag::Plain ? plain : notched)++;
    if (notched == 0) return 1;
    if (plain == 0) return -1;
    return 0;
}

// The underlying ordinary triangulation.  Untagging at all-notched
// punctures and folding doubled arcs are both already materialized by the
// representation, so this is a checked projection.
inline Triangulation to_ordinary(const TaggedTriangulation& t) {
    validate_tagged(t);
    return t.base;
}

// Tagged companion of an ordinary triangulation: self-folded pairs become
// doubled arcs notched at their puncture, everything else is plain.
inline TaggedTriangulation tau(const Triangulation& u) {
    validate(u);
    return TaggedTriangulation{u, {}};
}

// Flip the tags at every arc end lying in R.  At a doubled site this
// exchanges the plain and notched copies, realized by swapping the loop and
// radius ids; the exchange quiver is preserved up to that relabeling.
// Identity on once-punctured closed surfaces.
inline TaggedTriangulation retag(const TaggedTriangulation& t, const std::set<int>& R) {
    validate_tagged(t);
    ArcEndpoints ep = arc_endpoints(t.base);
    if (is_once_punctured_closed(ep.assembly.sig)) return t;
    std::set<int> punctures(ep.assembly.puncture_classes.begin(), ep.assembly.puncture_classes.end());
    for (int y : R)
        if (!punctures.count(y)) throw validation_error("retag: " + std::to_string(y) + " is not a puncture");

    TaggedTriangulation out = t;
    std::set<int> doubled;
    for (const auto& [tri, cls] : ep.folded_puncture) {
        (void)tri;
        doubled.insert(cls);
    }
    // flip explicit tags at ends in R outside the doubled sites
    for (int a = 0; a < t.base.arc_count(); ++a)
        for (int e = 0; e < 2; ++e) {
            int cls = ep.ends[static_cast<std::size_t>(a)][static_cast<std::size_t>(e)];
            if (R.count(cls) && !doubled.count(cls))
                out.set_tag(a, e, out.tag(a, e) == Tag::Plain ? Tag::Notched : Tag::Plain);
        }
    // at doubled sites the flip exchanges the plain and notched copies
    std::map<int, int> relabel;
    for (const auto& [tri, cls] : ep.folded_puncture)
        if (R.count(cls)) {
            const Triangle& tr = t.base.triangle(tri);
            relabel[tr.loop().id] = tr.radius().id;
            relabel[tr.radius().id] = tr.loop().id;
        }
    if (!relabel.empty()) {
        Triangulation nb = out.base;
        for (int i = 0; i < nb.triangle_count(); ++i) {
            Triangle tr = nb.triangle(i);
            for (auto& s : tr.sides)
                if (s.is_arc() && relabel.count(s.id)) s.id = relabel.at(s.id);
            nb.triangle_mut(i) = tr;
        }
        std::map<std::pair<int, int>, Tag> ntags;
        for (const auto& [key, tag] : out.tags) {
            auto [arc, end] = key;
            auto it = relabel.find(arc);
            ntags[{it == relabel.end() ? arc : it->second, end}] = tag;
        }
        out.base = nb;
        out.tags = std::move(ntags);
    }
    validate_tagged(out);
    return out;
}

inline Quiver tagged_exchange_quiver(const TaggedTriangulation& t) {
    validate_tagged(t);
    return exchange_quiver(t.base);
}

} // namespace surfq
