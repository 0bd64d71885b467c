#pragma once

#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "surfq/blocks.hpp"
#include "surfq/builder.hpp"
#include "surfq/exchange.hpp"
#include "surfq/flip.hpp"
#include "surfq/reconstruct.hpp"
#include "surfq/tagged.hpp"

namespace surfq {

struct EnumerationResult {
    std::vector<Triangulation> triangulations;
    bool truncated = false;
    // flip edges as (from index, arc, to index) over the deduplicated set
    std::vector<std::tuple<int, int, int>> edges;
};

// Flip closure from the seed, deduplicated by the canonical form (arcs
// relabelable, boundary segments fixed).
inline EnumerationResult enumerate_triangulations(const SurfaceSig& sig, std::size_t cap) {
    EnumerationResult out;
    Triangulation seed = seed_triangulation(sig);
    seed.declared_sig.reset();
    std::map<std::string, int> seen;
    std::deque<int> frontier;
    out.triangulations.push_back(seed);
    seen[canonical_key(seed)] = 0;
    frontier.push_back(0);
    while (!frontier.empty()) {
        int cur = frontier.front();
        frontier.pop_front();
        Triangulation t = out.triangulations[static_cast<std::size_t>(cur)];
        for (auto& [arc, nb] : flip_neighbors(t)) {
            std::string key = canonical_key(nb);
            auto it = seen.find(key);
            if (it == seen.end()) {
                if (out.triangulations.size() >= cap) {
                    out.truncated = true;
                    continue;
                }
                int id = static_cast<int>(out.triangulations.size());
                out.triangulations.push_back(nb);
                seen[key] = id;
                frontier.push_back(id);
                out.edges.push_back({cur, arc, id});
            } else {
                out.edges.push_back({cur, arc, it->second});
            }
        }
    }
    return out;
}

struct MutationClassResult {
    std::vector<Quiver> representatives;
    bool truncated = false;
};

// Mutation closure deduplicated by canonical certificates.
inline MutationClassResult mutation_class(const Quiver& q, std::size_t cap) {
    MutationClassResult out;
    std::set<std::string> seen;
    std::deque<Quiver> frontier;
    seen.insert(q.certificate());
    out.representatives.push_back(q);
    frontier.push_back(q);
    while (!frontier.empty()) {
        Quiver cur = frontier.front();
        frontier.pop_front();
        for (int k = 0; k < cur.size(); ++k) {
            Quiver nb = cur.mutate(k);
            std::string cert = nb.certificate();
            if (seen.count(cert)) continue;
            if (out.representatives.size() >= cap) {
                out.truncated = true;
                continue;
            }
            seen.insert(cert);
            out.representatives.push_back(nb);
            frontier.push_back(nb);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Verification sweep: every identity the combinatorics promises, checked
// over everything enumerated.

struct CheckCounter {
    std::string name;
    long passed = 0;
    long failed = 0;
    std::string first_counterexample{};

    void pass() { ++passed; }
    void fail(const std::string& witness) {
        if (failed == 0) first_counterexample = witness;
        ++failed;
    }
};

struct SweepReport {
    SurfaceSig sig;
    std::size_t triangulations = 0;
    bool truncated = false;
    std::vector<CheckCounter> checks;

    bool ok() const {
        for (const auto& c : checks)
            if (c.failed) return false;
        return true;
    }
};

inline SweepReport verify_sweep(const SurfaceSig& sig, std::size_t cap) {
    SweepReport rep;
    rep.sig = sig;
    CheckCounter fwc;
    fwc.name = "fwc-identities";
    CheckCounter arcs_rank;
    arcs_rank.name = "arc-count-is-rank";
    CheckCounter edges;
    edges.name = "edge-formula";
    CheckCounter bound;
    bound.name = "edge-bound-and-maximality";
    CheckCounter flipmut;
    flipmut.name = "flip-mutation-compatibility";
    CheckCounter flipsym;
    flipsym.name = "flip-involution";
    CheckCounter taggedrt;
    taggedrt.name = "tagged-round-trip";
    CheckCounter uniq;
    uniq.name = "decomposition-uniqueness";
    CheckCounter rec;
    rec.name = "reconstruction-round-trip";

    EnumerationResult en = enumerate_triangulations(sig, cap);
    rep.triangulations = en.triangulations.size();
    rep.truncated = en.truncated;
    int n = rank(sig);
    int ebound = edge_bound(sig);
    ExceptionFlags flags = classify_exceptions(sig);
    bool uniq_exception = false;
    for (const auto& x : uniqueness_exception_table()) uniq_exception |= (x == sig);

    for (const auto& t : en.triangulations) {
        std::string witness = "sig=" + sig.str();
        TriangStats st = stats(t);
        // fwc identities and the cap bound c(T) <= c(S,M)
        if (3 * st.f + 2 * st.w + st.c == 2 * n && st.w + 2 * st.c == sig.h() && st.c <= cap_capacity(sig))
            fwc.pass();
        else
            fwc.fail(witness);
        if (t.arc_count() == n)
            arcs_rank.pass();
        else
            arcs_rank.fail(witness);

        Quiver q = exchange_quiver(t);
        std::int64_t e = q.edge_count();
        if (!edge_formula_exclusion(t)) {
            if (e == predicted_edges(t))
                edges.pass();
            else
                edges.fail(witness + " edges=" + std::to_string(e));
        }
        // edge bound; the self-folded triangulation of the 4-punctured
        // sphere attains it without being maximal
        bool fig_c = false;
        if (auto ex = edge_formula_exclusion(t)) fig_c = (*ex == std::string("4-punctured sphere"));
        if (fig_c) {
            if (e == ebound)
                bound.pass();
            else
                bound.fail(witness + " exceptional triangulation has e=" + std::to_string(e));
        } else {
            bool at_bound = (e == ebound);
            bool maximal = is_maximal(t).maximal;
            if (e <= ebound && at_bound == maximal)
                bound.pass();
            else
                bound.fail(witness + " e=" + std::to_string(e) + " bound=" + std::to_string(ebound) +
                           (maximal ? " maximal" : " non-maximal"));
        }
        // tagged identities
        TaggedTriangulation tg = tau(t);
        if (same_triangulation(to_ordinary(tg), t) && tagged_exchange_quiver(tg) == q)
            taggedrt.pass();
        else
            taggedrt.fail(witness);
        // uniqueness + reconstruction on the reconstructible class
        if (is_connected_max_2faces(t) && !flags.reconstruction_exception && !uniq_exception) {
            UniquenessResult ur = is_unique(q);
            bool only_i_ii = false;
            if (auto* u = std::get_if<Unique>(&ur)) {
                only_i_ii = true;
                for (const auto& blk : u->decomposition.blocks)
                    only_i_ii &= (blk.kind == BlockKind::I || blk.kind == BlockKind::II);
            }
            if (only_i_ii)
                uniq.pass();
            else
                uniq.fail(witness);
            RecoverResult rr = recover(q);
            if (auto* r = std::get_if<Recovered>(&rr); r && r->sig == sig)
                rec.pass();
            else
                rec.fail(witness);
        }
    }
    // flip edges: mutation compatibility and symmetry
    for (auto [from, arc, to] : en.edges) {
        const Triangulation& t = en.triangulations[static_cast<std::size_t>(from)];
        Triangulation flipped = flip(t, arc);
        Quiver lhs = exchange_quiver(flipped);
        Quiver rhs = exchange_quiver(t).mutate(arc);
        if (lhs == rhs)
            flipmut.pass();
        else
            flipmut.fail("sig=" + sig.str() + " arc=" + t.arc_name(arc));
        Triangulation back = flip(flipped, arc);
        if (same_triangulation(back, t))
            flipsym.pass();
        else
            flipsym.fail("sig=" + sig.str() + " arc=" + t.arc_name(arc));
        (void)to;
    }

    rep.checks = {fwc, arcs_rank, edges, bound, flipmut, flipsym, taggedrt, uniq, rec};
    return rep;
}

} // namespace surfq
