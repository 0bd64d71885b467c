#pragma once

#include <sstream>
#include <string>

#include <json.hpp>

#include "surfq/blocks.hpp"
#include "surfq/quiver.hpp"
#include "surfq/tagged.hpp"
#include "surfq/triangulation.hpp"

namespace surfq {

using json = nlohmann::json;

// --- quiver ----------------------------------------------------------------

inline json quiver_to_json(const Quiver& q) {
    json j;
    j["format"] = 1;
    j["n"] = q.size();
    if (!q.labels().empty()) j["labels"] = q.labels();
    json arrows = json::array();
    for (int i = 0; i < q.size(); ++i)
        for (int k = 0; k < q.size(); ++k)
            if (q.mult(i, k) > 0) arrows.push_back({i, k, q.mult(i, k)});
    j["arrows"] = arrows;
    return j;
}

inline Quiver quiver_from_json(const json& j) {
    int n = j.at("n").get<int>();
    Quiver q(n);
    for (const auto& a : j.at("arrows")) {
        if (!a.is_array() || a.size() != 3) throw validation_error("quiver json: arrow must be [i, j, m]");
        q.add_arrow(a[0].get<int>(), a[1].get<int>(), a[2].get<std::int64_t>());
    }
    if (j.contains("labels")) q.set_labels(j["labels"].get<std::vector<std::string>>());
    return q;
}

// one line `n`, then `i j m` per nonzero multiplicity
inline std::string quiver_to_text(const Quiver& q) {
    std::ostringstream os;
    os << q.size() << '\n';
    for (int i = 0; i < q.size(); ++i)
        for (int j = 0; j < q.size(); ++j)
            if (q.mult(i, j) > 0) os << i << ' ' << j << ' ' << q.mult(i, j) << '\n';
    return os.str();
}

inline Quiver quiver_from_text(const std::string& text) {
    std::istringstream is(text);
    int n;
    if (!(is >> n)) throw parse_error("quiver text: missing vertex count");
    Quiver q(n);
    int i, j;
    std::int64_t m;
    while (is >> i >> j >> m) q.add_arrow(i, j, m);
    return q;
}

inline std::string quiver_to_dot(const Quiver& q, const std::string& name = "quiver") {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (int i = 0; i < q.size(); ++i) {
        os << "  v" << i;
        if (!q.label(i).empty()) os << " [label=\"" << q.label(i) << "\"]";
        os << ";\n";
    }
    for (int i = 0; i < q.size(); ++i)
        for (int j = 0; j < q.size(); ++j)
            if (q.mult(i, j) > 0) {
                os << "  v" << i << " -> v" << j;
                if (q.mult(i, j) > 1) os << " [label=\"" << q.mult(i, j) << "\"]";
                os << ";\n";
            }
    os << "}\n";
    return os.str();
}

// --- triangulation ----------------------------------------------------------

inline json triangulation_to_json(const Triangulation& t) {
    json j;
    j["format"] = 1;
    json arcs = json::array(), bnd = json::array(), tris = json::array();
    for (int i = 0; i < t.arc_count(); ++i) arcs.push_back(t.arc_name(i));
    for (int i = 0; i < t.boundary_count(); ++i) bnd.push_back(t.boundary_name(i));
    for (const auto& tr : t.triangles()) {
        if (tr.self_folded) {
            tris.push_back({{"selffolded",
                             {{"loop", t.arc_name(tr.loop().id)}, {"radius", t.arc_name(tr.radius().id)}}}});
        } else {
            json sides = json::array();
            for (const auto& s : tr.sides)
                sides.push_back((s.is_arc() ? "a:" + t.arc_name(s.id) : "b:" + t.boundary_name(s.id)));
            tris.push_back({{"sides", sides}});
        }
    }
    j["arcs"] = arcs;
    j["boundary"] = bnd;
    j["triangles"] = tris;
    if (t.declared_sig) j["sig"] = t.declared_sig->str();
    return j;
}

inline Triangulation triangulation_from_json(const json& j) {
    Triangulation t;
    std::map<std::string, int> arc_ids, bnd_ids;
    for (const auto& a : j.at("arcs")) arc_ids[a.get<std::string>()] = t.add_arc(a.get<std::string>());
    for (const auto& b : j.at("boundary")) bnd_ids[b.get<std::string>()] = t.add_boundary(b.get<std::string>());
    auto side = [&](const std::string& s) {
        if (s.rfind("a:", 0) == 0) {
            auto it = arc_ids.find(s.substr(2));
            if (it == arc_ids.end()) throw validation_error("triangulation json: unknown arc " + s);
            return SideRef::arc(it->second);
        }
        if (s.rfind("b:", 0) == 0) {
            auto it = bnd_ids.find(s.substr(2));
            if (it == bnd_ids.end()) throw validation_error("triangulation json: unknown boundary " + s);
            return SideRef::boundary(it->second);
        }
        throw validation_error("triangulation json: side must start with a: or b:");
    };
    for (const auto& tr : j.at("triangles")) {
        if (tr.contains("selffolded")) {
            const auto& sf = tr["selffolded"];
            auto lit = arc_ids.find(sf.at("loop").get<std::string>());
            auto rit = arc_ids.find(sf.at("radius").get<std::string>());
            if (lit == arc_ids.end() || rit == arc_ids.end())
                throw validation_error("triangulation json: unknown self-folded arc");
            t.add_folded(lit->second, rit->second);
        } else {
            const auto& sides = tr.at("sides");
            if (sides.size() != 3) throw validation_error("triangulation json: triangle needs 3 sides");
            t.add_plain(side(sides[0].get<std::string>()), side(sides[1].get<std::string>()),
                        side(sides[2].get<std::string>()));
        }
    }
    if (j.contains("sig")) t.declared_sig = parse_signature(j["sig"].get<std::string>());
    return t;
}

inline json tagged_to_json(const TaggedTriangulation& t) {
    json j = triangulation_to_json(t.base);
    json tags = json::array();
    for (const auto& [key, tag] : t.tags)
        if (tag == Tag::Notched) tags.push_back({t.base.arc_name(key.first), key.second, "notched"});
    j["tags"] = tags;
    return j;
}

inline TaggedTriangulation tagged_from_json(const json& j) {
    TaggedTriangulation t;
    t.base = triangulation_from_json(j);
    if (j.contains("tags"))
        for (const auto& e : j["tags"]) {
            int arc = t.base.arc_id(e.at(0).get<std::string>());
            if (arc < 0) throw validation_error("tagged json: unknown arc in tags");
            if (e.at(2).get<std::string>() == "notched") t.set_tag(arc, e.at(1).get<int>(), Tag::Notched);
        }
    return t;
}

inline std::string triangulation_to_dot(const Triangulation& t) {
    // triangles as nodes, shared arcs as edges
    std::ostringstream os;
    os << "graph triangulation {\n";
    for (int i = 0; i < t.triangle_count(); ++i) {
        const char* kind = "face";
        switch (t.kind(i)) {
            case TriangleKind::Wedge: kind = "wedge"; break;
            case TriangleKind::Cap: kind = "cap"; break;
            case TriangleKind::SelfFolded: kind = "selffolded"; break;
            default: break;
        }
        os << "  t" << i << " [label=\"" << kind << i << "\"];\n";
    }
    auto slots = t.arc_slots();
    for (int a = 0; a < t.arc_count(); ++a) {
        auto [t1, p1] = slots[static_cast<std::size_t>(a)][0];
        auto [t2, p2] = slots[static_cast<std::size_t>(a)][1];
        (void)p1;
        (void)p2;
        os << "  t" << t1 << " -- t" << t2 << " [label=\"" << t.arc_name(a) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

// --- block decompositions ----------------------------------------------------

inline json decomposition_to_json(const BlockDecomposition& d, const Quiver& q) {
    json blocks = json::array();
    for (const auto& b : d.blocks) {
        json verts = json::array();
        for (int v : b.verts) verts.push_back(q.label(v).empty() ? "v" + std::to_string(v) : q.label(v));
        blocks.push_back({{"kind", block_kind_name(b.kind)}, {"vertices", verts}});
    }
    return json{{"format", 1}, {"blocks", blocks}};
}

} // namespace surfq
