#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "surfq/quiver.hpp"
#include "surfq/triangulation.hpp"

namespace surfq {

enum class BlockKind { I, II, IIIa, IIIb, IV, V };

inline const char* block_kind_name(BlockKind k) {
    switch (k) {
        case BlockKind::I: return "I";
        case BlockKind::II: return "II";
        case BlockKind::IIIa: return "IIIa";
        case BlockKind::IIIb: return "IIIb";
        case BlockKind::IV: return "IV";
        default: return "V";
    }
}

inline std::optional<BlockKind> block_kind_from_name(const std::string& s) {
    if (s == "I") return BlockKind::I;
    if (s == "II") return BlockKind::II;
    if (s == "IIIa") return BlockKind::IIIa;
    if (s == "IIIb") return BlockKind::IIIb;
    if (s == "IV") return BlockKind::IV;
    if (s == "V") return BlockKind::V;
    return std::nullopt;
}

// Slot layout and internal arrows per block type.  Outlets come first:
//   I    (o0 -> o1)
//   II   oriented 3-cycle o0 -> o1 -> o2 -> o0
//   IIIa deads 1,2 -> outlet 0     (wedge enclosing a self-folded triangle)
//   IIIb outlet 0 -> deads 1,2
//   IV   outlets 0,1; deads 2,3 = loop,radius; two 3-cycles sharing 1 -> 0
//   V    outlet 0; deads 1..4 = loop,radius,loop,radius
struct BlockShape {
    int slots;
    std::vector<std::pair<int, int>> arrows;
    std::vector<char> dead;
    // arrow positions up to slot symmetry, used to anchor placements
    std::vector<std::pair<int, int>> arrow_reps;
};

inline const BlockShape& block_shape(BlockKind k) {
    static const BlockShape I{2, {{0, 1}}, {0, 0}, {{0, 1}}};
    static const BlockShape II{3, {{0, 1}, {1, 2}, {2, 0}}, {0, 0, 0}, {{0, 1}}};
    static const BlockShape IIIa{3, {{1, 0}, {2, 0}}, {0, 1, 1}, {{1, 0}}};
    static const BlockShape IIIb{3, {{0, 1}, {0, 2}}, {0, 1, 1}, {{0, 1}}};
    static const BlockShape IV{4, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {1, 0}}, {0, 0, 1, 1}, {{0, 2}, {2, 1}, {1, 0}}};
    static const BlockShape V{5,
                              {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 0}, {4, 0}},
                              {0, 1, 1, 1, 1},
                              {{0, 1}, {1, 3}, {3, 0}}};
    switch (k) {
        case BlockKind::I: return I;
        case BlockKind::II: return II;
        case BlockKind::IIIa: return IIIa;
        case BlockKind::IIIb: return IIIb;
        case BlockKind::IV: return IV;
        default: return V;
    }
}

struct BlockInstance {
    BlockKind kind;
    std::vector<int> verts; // slot -> quiver vertex

    // normalize under the slot symmetries of the block
    BlockInstance canonical() const {
        BlockInstance c = *this;
        switch (kind) {
            case BlockKind::II: {
                std::vector<int> best = c.verts;
                for (int r = 1; r < 3; ++r) {
                    std::vector<int> rot{c.verts[static_cast<std::size_t>(r)],
                                         c.verts[static_cast<std::size_t>((r + 1) % 3)],
                                         c.verts[static_cast<std::size_t>((r + 2) % 3)]};
                    if (rot < best) best = rot;
                }
                c.verts = best;
                break;
            }
            case BlockKind::IIIa:
            case BlockKind::IIIb:
                if (c.verts[1] > c.verts[2]) std::swap(c.verts[1], c.verts[2]);
                break;
            case BlockKind::IV:
                if (c.verts[2] > c.verts[3]) std::swap(c.verts[2], c.verts[3]);
                break;
            case BlockKind::V:
                // the loop/radius pairs are interchangeable within each site
                if (c.verts[1] > c.verts[2]) std::swap(c.verts[1], c.verts[2]);
                if (c.verts[3] > c.verts[4]) std::swap(c.verts[3], c.verts[4]);
                break;
            default: break;
        }
        return c;
    }

    friend bool operator<(const BlockInstance& a, const BlockInstance& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.verts < b.verts;
    }
    friend bool operator==(const BlockInstance& a, const BlockInstance& b) {
        return a.kind == b.kind && a.verts == b.verts;
    }
};

struct BlockDecomposition {
    std::vector<BlockInstance> blocks; // canonical and sorted

    friend bool operator<(const BlockDecomposition& a, const BlockDecomposition& b) { return a.blocks < b.blocks; }
    friend bool operator==(const BlockDecomposition& a, const BlockDecomposition& b) { return a.blocks == b.blocks; }
};

struct EnumerateOptions {
    std::vector<BlockKind> kinds{BlockKind::II, BlockKind::I,    BlockKind::IIIa,
                                 BlockKind::IIIb, BlockKind::IV, BlockKind::V};
    std::size_t max_results = 0;       // 0 = unlimited
    std::size_t node_budget = 20'000'000;
};

struct EnumerateOutcome {
    std::vector<BlockDecomposition> decompositions;
    bool truncated = false;
};

namespace detail_blocks {

struct Search {
    int n;
    std::vector<std::int64_t> target; // signed matrix, row-major
    std::vector<std::int64_t> R;
    std::vector<int> load;
    std::vector<BlockInstance> placed;
    std::set<BlockDecomposition> found;
    const EnumerateOptions& opt;
    std::size_t nodes = 0;
    bool truncated = false;

    explicit Search(const Quiver& q, const EnumerateOptions& o)
        : n(q.size()), target(static_cast<std::size_t>(q.size()) * q.size(), 0),
          R(static_cast<std::size_t>(q.size()) * q.size(), 0), load(static_cast<std::size_t>(q.size()), 0), opt(o) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) target[idx(i, j)] = q.b(i, j);
        R = target;
    }

    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j);
    }

    bool vertex_clear(int v) const {
        for (int u = 0; u < n; ++u)
            if (R[idx(v, u)] != 0) return false;
        return true;
    }

    bool feasible_after(const BlockInstance& inst) {
        for (int v : inst.verts) {
            if (load[static_cast<std::size_t>(v)] == 2 && !vertex_clear(v)) return false;
            for (int u = 0; u < n; ++u) {
                std::int64_t r = R[idx(v, u)];
                if (r == 0) continue;
                int cap = std::min(2 - load[static_cast<std::size_t>(v)], 2 - load[static_cast<std::size_t>(u)]);
                if (std::abs(r) > cap) return false;
            }
        }
        return true;
    }

    void apply(const BlockInstance& inst, int sgn) {
        const BlockShape& sh = block_shape(inst.kind);
        for (auto [a, b] : sh.arrows) {
            int u = inst.verts[static_cast<std::size_t>(a)];
            int v = inst.verts[static_cast<std::size_t>(b)];
            R[idx(u, v)] -= sgn;
            R[idx(v, u)] += sgn;
        }
        for (int s = 0; s < sh.slots; ++s)
            load[static_cast<std::size_t>(inst.verts[static_cast<std::size_t>(s)])] +=
                sgn * (sh.dead[static_cast<std::size_t>(s)] ? 2 : 1);
    }

    bool complete() const {
        for (std::int64_t v : R)
            if (v != 0) return false;
        return true;
    }

    void record() {
        BlockDecomposition d;
        for (const auto& b : placed) d.blocks.push_back(b.canonical());
        std::sort(d.blocks.begin(), d.blocks.end());
        found.insert(std::move(d));
    }

    void run() { dfs(); }

    void dfs() {
        if (opt.max_results && found.size() >= opt.max_results) {
            truncated = true;
            return;
        }
        if (++nodes > opt.node_budget) throw budget_exceeded("block decomposition search budget exceeded");
        if (complete()) {
            record();
            return;
        }
        // anchor: the residual pair of largest magnitude
        int au = -1, av = -1;
        std::int64_t best = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (R[idx(i, j)] > best) {
                    best = R[idx(i, j)];
                    au = i;
                    av = j;
                }
        if (au < 0) return; // residual negative-only cannot happen (skew)

        for (BlockKind kind : opt.kinds) {
            const BlockShape& sh = block_shape(kind);
            for (auto [sa, sb] : sh.arrow_reps) {
                BlockInstance inst{kind, std::vector<int>(static_cast<std::size_t>(sh.slots), -1)};
                inst.verts[static_cast<std::size_t>(sa)] = au;
                inst.verts[static_cast<std::size_t>(sb)] = av;
                assign(inst, sh, 0);
            }
        }
    }

    void assign(BlockInstance& inst, const BlockShape& sh, int slot) {
        if (slot == sh.slots) {
            // load feasibility
            for (int s = 0; s < sh.slots; ++s) {
                int v = inst.verts[static_cast<std::size_t>(s)];
                int need = sh.dead[static_cast<std::size_t>(s)] ? 2 : 1;
                int total = need;
                for (int s2 = 0; s2 < s; ++s2)
                    if (inst.verts[static_cast<std::size_t>(s2)] == v) return; // distinct slots
                if (load[static_cast<std::size_t>(v)] + total > 2) return;
            }
            apply(inst, +1);
            placed.push_back(inst);
            if (feasible_after(inst)) dfs();
            placed.pop_back();
            apply(inst, -1);
            return;
        }
        if (inst.verts[static_cast<std::size_t>(slot)] >= 0) {
            assign(inst, sh, slot + 1);
            return;
        }
        bool dead = sh.dead[static_cast<std::size_t>(slot)] != 0;
        for (int v = 0; v < n; ++v) {
            if (load[static_cast<std::size_t>(v)] > (dead ? 0 : 1)) continue;
            inst.verts[static_cast<std::size_t>(slot)] = v;
            assign(inst, sh, slot + 1);
            inst.verts[static_cast<std::size_t>(slot)] = -1;
        }
    }
};

} // namespace detail_blocks

// Build the triangulation complex of a decomposition: blocks become puzzle
// pieces, matched outlets share an arc, unmatched capacity receives caps.
inline Triangulation assemble_decomposition(const BlockDecomposition& d, int n,
                                            const std::vector<std::string>& labels = {}) {
    Triangulation t;
    for (int v = 0; v < n; ++v) {
        std::string name = (static_cast<int>(labels.size()) == n && !labels[static_cast<std::size_t>(v)].empty())
                               ? labels[static_cast<std::size_t>(v)]
                               : "v" + std::to_string(v);
        t.add_arc(name);
    }
    std::vector<int> used(static_cast<std::size_t>(n), 0);
    int bn = 0;
    auto fresh_b = [&]() { return t.add_boundary("e" + std::to_string(bn++)); };
    for (const auto& blk : d.blocks) {
        const auto& v = blk.verts;
        switch (blk.kind) {
            case BlockKind::I:
                t.add_plain(SideRef::arc(v[0]), SideRef::arc(v[1]), SideRef::boundary(fresh_b()));
                used[static_cast<std::size_t>(v[0])] += 1;
                used[static_cast<std::size_t>(v[1])] += 1;
                break;
            case BlockKind::II:
                t.add_plain(SideRef::arc(v[0]), SideRef::arc(v[1]), SideRef::arc(v[2]));
                for (int s = 0; s < 3; ++s) used[static_cast<std::size_t>(v[static_cast<std::size_t>(s)])] += 1;
                break;
            case BlockKind::IIIa:
                t.add_folded(v[1], v[2]);
                t.add_plain(SideRef::arc(v[0]), SideRef::boundary(fresh_b()), SideRef::arc(v[1]));
                used[static_cast<std::size_t>(v[0])] += 1;
                used[static_cast<std::size_t>(v[1])] += 2;
                used[static_cast<std::size_t>(v[2])] += 2;
                break;
            case BlockKind::IIIb:
                t.add_folded(v[1], v[2]);
                t.add_plain(SideRef::arc(v[0]), SideRef::arc(v[1]), SideRef::boundary(fresh_b()));
                used[static_cast<std::size_t>(v[0])] += 1;
                used[static_cast<std::size_t>(v[1])] += 2;
                used[static_cast<std::size_t>(v[2])] += 2;
                break;
            case BlockKind::IV:
                t.add_folded(v[2], v[3]);
                t.add_plain(SideRef::arc(v[0]), SideRef::arc(v[2]), SideRef::arc(v[1]));
                used[static_cast<std::size_t>(v[0])] += 1;
                used[static_cast<std::size_t>(v[1])] += 1;
                used[static_cast<std::size_t>(v[2])] += 2;
                used[static_cast<std::size_t>(v[3])] += 2;
                break;
            case BlockKind::V:
                t.add_folded(v[1], v[2]);
                t.add_folded(v[3], v[4]);
                t.add_plain(SideRef::arc(v[0]), SideRef::arc(v[1]), SideRef::arc(v[3]));
                used[static_cast<std::size_t>(v[0])] += 1;
                for (int s = 1; s < 5; ++s) used[static_cast<std::size_t>(v[static_cast<std::size_t>(s)])] += 2;
                break;
        }
    }
    for (int v = 0; v < n; ++v) {
        if (used[static_cast<std::size_t>(v)] > 2)
            throw validation_error("decomposition overfills arc " + t.arc_name(v));
        for (int k = used[static_cast<std::size_t>(v)]; k < 2; ++k) {
            int b1 = fresh_b();
            int b2 = fresh_b();
            t.add_plain(SideRef::arc(v), SideRef::boundary(b1), SideRef::boundary(b2));
        }
    }
    return t;
}

inline bool assembles_to_surface(const BlockDecomposition& d, int n) {
    try {
        return !check(assemble_decomposition(d, n)).has_value();
    } catch (const validation_error&) {
        return false;
    }
}

// superposition of the blocks followed by 2-cycle cancellation
inline Quiver superpose(const BlockDecomposition& d, int n) {
    std::vector<std::int64_t> b(static_cast<std::size_t>(n) * n, 0);
    for (const auto& blk : d.blocks)
        for (auto [x, y] : block_shape(blk.kind).arrows) {
            int u = blk.verts[static_cast<std::size_t>(x)];
            int v = blk.verts[static_cast<std::size_t>(y)];
            b[static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v)] += 1;
            b[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] -= 1;
        }
    std::vector<std::int64_t> mult(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            mult[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] =
                std::max<std::int64_t>(b[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)], 0);
    return Quiver::from_multiplicities(n, std::move(mult));
}

// Exhaustive enumeration of block decompositions producing q.  The search
// anchors on a residual arrow of maximal multiplicity; every complete cover
// is verified by superposition before being reported.
inline EnumerateOutcome enumerate_decompositions(const Quiver& q, const EnumerateOptions& opt = {}) {
    EnumerateOutcome out;
    if (q.size() == 0) return out;
    if (!q.is_connected()) throw validation_error("block decomposition: quiver must be connected");
    if (q.size() == 1) {
        out.decompositions.push_back(BlockDecomposition{});
        return out;
    }
    detail_blocks::Search s(q, opt);
    s.run();
    for (const auto& d : s.found) {
        Quiver check = superpose(d, q.size());
        if (check != q) throw validation_error("internal: decomposition does not reproduce the quiver");
        // a decomposition must assemble to an admissible marked surface;
        // covers that close up to one of the excluded small cases are not
        // decompositions of anything
        if (!assembles_to_surface(d, q.size())) continue;
        out.decompositions.push_back(d);
    }
    out.truncated = s.truncated;
    return out;
}

inline Triangulation decomposition_to_triangulation(const BlockDecomposition& d, const Quiver& q) {
    Triangulation t = assemble_decomposition(d, q.size(), q.labels());
    validate(t);
    return t;
}

struct Unique {
    BlockDecomposition decomposition;
};
struct Multiple {
    std::vector<BlockDecomposition> decompositions;
};
struct NoDecomposition {};

using UniquenessResult = std::variant<Unique, Multiple, NoDecomposition>;

inline UniquenessResult is_unique(const Quiver& q, std::size_t node_budget = 20'000'000) {
    EnumerateOptions opt;
    opt.node_budget = node_budget;
    EnumerateOutcome out = enumerate_decompositions(q, opt);
    if (out.decompositions.empty()) return NoDecomposition{};
    if (out.decompositions.size() == 1) return Unique{out.decompositions.front()};
    return Multiple{std::move(out.decompositions)};
}

} // namespace surfq
