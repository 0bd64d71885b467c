#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "surfq/errors.hpp"

namespace surfq {

// Finite multidigraph without loops or 2-cycles.  Arrows are stored as a
// dense matrix of non-negative multiplicities; the no-2-cycle normalization
// min(m[i][j], m[j][i]) = 0 is an invariant, not a convention the caller has
// to maintain.  Vertices optionally carry external labels (arc names).
class Quiver {
public:
    Quiver() = default;

    explicit Quiver(int n) : n_(n), mult_(static_cast<std::size_t>(n) * n, 0) {
        if (n < 0) throw validation_error("quiver size must be non-negative");
    }

    static Quiver from_multiplicities(int n, std::vector<std::int64_t> mult) {
        Quiver q(n);
        if (mult.size() != static_cast<std::size_t>(n) * n)
            throw validation_error("multiplicity matrix has wrong size");
        q.mult_ = std::move(mult);
        q.check_invariants();
        return q;
    }

    int size() const { return n_; }

    std::int64_t mult(int i, int j) const { return mult_[idx(i, j)]; }

    // Signed exchange-matrix view b[i][j] = m[i][j] - m[j][i].
    std::int64_t b(int i, int j) const { return mult_[idx(i, j)] - mult_[idx(j, i)]; }

    const std::vector<std::string>& labels() const { return labels_; }

    void set_labels(std::vector<std::string> labels) {
        if (!labels.empty() && labels.size() != static_cast<std::size_t>(n_))
            throw validation_error("label list must match vertex count");
        labels_ = std::move(labels);
    }

    const std::string& label(int i) const {
        static const std::string empty;
        return labels_.empty() ? empty : labels_[static_cast<std::size_t>(i)];
    }

    void add_arrow(int i, int j, std::int64_t m = 1) {
        if (i == j) throw validation_error("loops are not allowed");
        if (m < 0) throw validation_error("negative multiplicity");
        mult_[idx(i, j)] = checked_add(mult_[idx(i, j)], m);
        cancel_pair(i, j);
    }

    std::int64_t edge_count() const {
        std::int64_t total = 0;
        for (std::int64_t m : mult_) total = checked_add(total, m);
        return total;
    }

    Quiver opposite() const {
        Quiver r(n_);
        r.labels_ = labels_;
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r.mult_[r.idx(j, i)] = mult_[idx(i, j)];
        return r;
    }

    // Quiver mutation at vertex k: complete paths through k, reverse arrows
    // at k, then cancel a maximal set of disjoint 2-cycles.
    Quiver mutate(int k) const {
        if (k < 0 || k >= n_) throw validation_error("mutation vertex out of range");
        Quiver r = *this;
        for (int i = 0; i < n_; ++i) {
            if (i == k) continue;
            std::int64_t in = mult(i, k);
            if (in == 0) continue;
            for (int j = 0; j < n_; ++j) {
                if (j == k || j == i) continue;
                std::int64_t out = mult(k, j);
                if (out == 0) continue;
                r.mult_[r.idx(i, j)] = checked_add(r.mult_[r.idx(i, j)], checked_mul(in, out));
            }
        }
        for (int i = 0; i < n_; ++i) {
            if (i == k) continue;
            std::swap(r.mult_[r.idx(i, k)], r.mult_[r.idx(k, i)]);
        }
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) r.cancel_pair(i, j);
        return r;
    }

    bool is_connected() const {
        if (n_ == 0) return true;
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < n_; ++u)
                if (!seen[u] && (mult(v, u) || mult(u, v))) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
        }
        return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
    }

    bool operator==(const Quiver& o) const { return n_ == o.n_ && mult_ == o.mult_; }
    bool operator!=(const Quiver& o) const { return !(*this == o); }

    // --- isomorphism machinery -------------------------------------------

    // Exact decision by backtracking over color-refined vertex classes.
    // A witness maps every multiplicity onto an equal one.
    static std::optional<std::vector<int>> find_isomorphism(const Quiver& a, const Quiver& b) {
        if (a.n_ != b.n_) return std::nullopt;
        int n = a.n_;
        if (n == 0) return std::vector<int>{};
        auto ca = a.refined_colors();
        auto cb = b.refined_colors();
        {
            auto sa = ca;
            auto sb = cb;
            std::sort(sa.begin(), sa.end());
            std::sort(sb.begin(), sb.end());
            if (sa != sb) return std::nullopt;
        }
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        // most-constrained-first: small color classes early
        std::vector<int> class_size(static_cast<std::size_t>(n), 0);
        for (auto c : ca) ++class_size[static_cast<std::size_t>(c)];
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
            return class_size[static_cast<std::size_t>(ca[static_cast<std::size_t>(x)])] <
                   class_size[static_cast<std::size_t>(ca[static_cast<std::size_t>(y)])];
        });
        std::vector<int> map(static_cast<std::size_t>(n), -1), used(static_cast<std::size_t>(n), 0);
        if (iso_backtrack(a, b, ca, cb, order, 0, map, used)) return map;
        return std::nullopt;
    }

    // Canonical relabeling: a permutation p such that applying p yields the
    // lexicographically minimal multiplicity matrix among all permutations
    // compatible with the refined coloring.  Two quivers have equal
    // certificates exactly when they are isomorphic.
    struct CanonicalForm {
        std::vector<int> perm; // position -> original vertex
        std::string certificate;
    };

    CanonicalForm canonical_form() const {
        CanonicalForm out;
        if (n_ == 0) {
            out.certificate = "0;";
            return out;
        }
        auto colors = refined_colors();
        // target color sequence: sorted ascending
        std::vector<int> want(colors.begin(), colors.end());
        std::sort(want.begin(), want.end());
        std::vector<int> perm;
        std::vector<char> used(static_cast<std::size_t>(n_), 0);
        std::vector<std::int64_t> best;
        std::vector<std::int64_t> cur;
        std::vector<int> best_perm;
        canon_search(colors, want, perm, used, cur, best, best_perm);
        out.perm = best_perm;
        out.certificate = std::to_string(n_) + ";";
        for (std::int64_t v : best) {
            out.certificate += std::to_string(v);
            out.certificate += ',';
        }
        return out;
    }

    std::string certificate() const { return canonical_form().certificate; }

    // Exact count of multiplicity-preserving self-bijections.
    std::int64_t automorphism_count(int limit = 16) const {
        if (n_ > limit) throw validation_error("automorphism_count: vertex count exceeds limit");
        if (n_ == 0) return 1;
        auto colors = refined_colors();
        std::vector<int> order(static_cast<std::size_t>(n_));
        std::iota(order.begin(), order.end(), 0);
        std::vector<int> map(static_cast<std::size_t>(n_), -1), used(static_cast<std::size_t>(n_), 0);
        std::int64_t count = 0;
        auto_backtrack(colors, order, 0, map, used, count);
        return count;
    }

    // Stable coloring used by all three search routines; exposed for reuse.
    std::vector<int> refined_colors() const {
        std::vector<int> colors(static_cast<std::size_t>(n_), 0);
        for (;;) {
            // signature: old color + multiset of (neighbor color, out mult, in mult)
            std::vector<std::pair<std::vector<std::int64_t>, int>> sigs(static_cast<std::size_t>(n_));
            for (int v = 0; v < n_; ++v) {
                std::vector<std::vector<std::int64_t>> nbr;
                for (int u = 0; u < n_; ++u) {
                    if (u == v) continue;
                    std::int64_t o = mult(v, u), in = mult(u, v);
                    if (o == 0 && in == 0) continue;
                    nbr.push_back({colors[static_cast<std::size_t>(u)], o, in});
                }
                std::sort(nbr.begin(), nbr.end());
                std::vector<std::int64_t> flat{colors[static_cast<std::size_t>(v)]};
                for (auto& t : nbr) flat.insert(flat.end(), t.begin(), t.end());
                sigs[static_cast<std::size_t>(v)] = {std::move(flat), v};
            }
            std::vector<std::pair<std::vector<std::int64_t>, int>> sorted = sigs;
            std::sort(sorted.begin(), sorted.end());
            std::vector<int> next(static_cast<std::size_t>(n_), 0);
            int c = 0;
            for (std::size_t i = 0; i < sorted.size(); ++i) {
                if (i > 0 && sorted[i].first != sorted[i - 1].first) ++c;
                next[static_cast<std::size_t>(sorted[i].second)] = c;
            }
            if (next == colors) break;
            colors = std::move(next);
        }
        return colors;
    }

private:
    using multiset_sig = std::vector<int>;

    int n_ = 0;
    std::vector<std::int64_t> mult_;
    std::vector<std::string> labels_;

    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
    }

    void cancel_pair(int i, int j) {
        std::int64_t m = std::min(mult_[idx(i, j)], mult_[idx(j, i)]);
        if (m > 0) {
            mult_[idx(i, j)] -= m;
            mult_[idx(j, i)] -= m;
        }
    }

    void check_invariants() const {
        for (int i = 0; i < n_; ++i) {
            if (mult(i, i) != 0) throw validation_error("loop at vertex " + std::to_string(i));
            for (int j = 0; j < n_; ++j) {
                if (mult(i, j) < 0) throw validation_error("negative multiplicity");
                if (i < j && mult(i, j) > 0 && mult(j, i) > 0)
                    throw validation_error("2-cycle between " + std::to_string(i) + " and " + std::to_string(j));
            }
        }
    }

    static bool iso_backtrack(const Quiver& a, const Quiver& b, const std::vector<int>& ca,
                              const std::vector<int>& cb, const std::vector<int>& order,
                              std::size_t pos, std::vector<int>& map, std::vector<int>& used) {
        if (pos == order.size()) return true;
        int v = order[pos];
        for (int u = 0; u < b.n_; ++u) {
            if (used[static_cast<std::size_t>(u)]) continue;
            if (ca[static_cast<std::size_t>(v)] != cb[static_cast<std::size_t>(u)]) continue;
            bool ok = true;
            for (std::size_t q = 0; q < pos && ok; ++q) {
                int w = order[q];
                int t = map[static_cast<std::size_t>(w)];
                ok = a.mult(v, w) == b.mult(u, t) && a.mult(w, v) == b.mult(t, u);
            }
            if (!ok) continue;
            map[static_cast<std::size_t>(v)] = u;
            used[static_cast<std::size_t>(u)] = 1;
            if (iso_backtrack(a, b, ca, cb, order, pos + 1, map, used)) return true;
            map[static_cast<std::size_t>(v)] = -1;
            used[static_cast<std::size_t>(u)] = 0;
        }
        return false;
    }

    void auto_backtrack(const std::vector<int>& colors, const std::vector<int>& order, std::size_t pos,
                        std::vector<int>& map, std::vector<int>& used, std::int64_t& count) const {
        if (pos == order.size()) {
            ++count;
            return;
        }
        int v = order[pos];
        for (int u = 0; u < n_; ++u) {
            if (used[static_cast<std::size_t>(u)]) continue;
            if (colors[static_cast<std::size_t>(v)] != colors[static_cast<std::size_t>(u)]) continue;
            bool ok = true;
            for (std::size_t q = 0; q < pos && ok; ++q) {
                int w = order[q];
                int t = map[static_cast<std::size_t>(w)];
                ok = mult(v, w) == mult(u, t) && mult(w, v) == mult(t, u);
            }
            if (!ok) continue;
            map[static_cast<std::size_t>(v)] = u;
            used[static_cast<std::size_t>(u)] = 1;
            auto_backtrack(colors, order, pos + 1, map, used, count);
            map[static_cast<std::size_t>(v)] = -1;
            used[static_cast<std::size_t>(u)] = 0;
        }
    }

    // Lexicographically minimal certificate: at every position explore every
    // candidate whose incremental row/column is minimal; ties all recurse.
    void canon_search(const std::vector<int>& colors, const std::vector<int>& want,
                      std::vector<int>& perm, std::vector<char>& used,
                      std::vector<std::int64_t>& cur, std::vector<std::int64_t>& best,
                      std::vector<int>& best_perm) const {
        std::size_t pos = perm.size();
        if (pos == static_cast<std::size_t>(n_)) {
            if (best.empty() || cur < best) {
                best = cur;
                best_perm = perm;
            }
            return;
        }
        int need = want[pos];
        std::vector<std::pair<std::vector<std::int64_t>, int>> cands;
        for (int v = 0; v < n_; ++v) {
            if (used[static_cast<std::size_t>(v)] || colors[static_cast<std::size_t>(v)] != need) continue;
            std::vector<std::int64_t> ext;
            ext.reserve(2 * pos);
            for (std::size_t q = 0; q < pos; ++q) {
                ext.push_back(mult(v, perm[q]));
                ext.push_back(mult(perm[q], v));
            }
            cands.emplace_back(std::move(ext), v);
        }
        std::sort(cands.begin(), cands.end());
        // among tied candidates, skip v when some explored w is a transposable
        // twin (swapping them is an automorphism, so both branches share a
        // minimum)
        std::vector<int> explored;
        for (auto& [ext, v] : cands) {
            if (ext != cands.front().first) break;
            bool twin = false;
            for (int w : explored) twin = twin || transposable(v, w);
            if (twin) continue;
            explored.push_back(v);
            std::size_t n0 = cur.size();
            cur.insert(cur.end(), ext.begin(), ext.end());
            perm.push_back(v);
            used[static_cast<std::size_t>(v)] = 1;
            canon_search(colors, want, perm, used, cur, best, best_perm);
            used[static_cast<std::size_t>(v)] = 0;
            perm.pop_back();
            cur.resize(n0);
        }
    }

    // whether exchanging v and w (fixing everything else) preserves the quiver
    bool transposable(int v, int w) const {
        if (mult(v, w) != mult(w, v)) return false;
        for (int x = 0; x < n_; ++x) {
            if (x == v || x == w) continue;
            if (mult(v, x) != mult(w, x) || mult(x, v) != mult(x, w)) return false;
        }
        return true;
    }
};

} // namespace surfq
