// Wide regression sweep: every identity over the flip closure of every
// admissible surface of rank at most 8 (capped).  Exits nonzero on the
// first failing surface.

#include <cstdio>
#include <functional>
#include <vector>

#include "surfq/explore.hpp"

using namespace surfq;

int main() {
    std::vector<SurfaceSig> sigs;
    for (int g = 0; g <= 2; ++g)
        for (int b = 0; b <= 4; ++b)
            for (int p = 0; p <= 6; ++p) {
                std::vector<std::vector<int>> hs;
                std::vector<int> work(static_cast<std::size_t>(b), 1);
                std::function<void(int, int)> gen = [&](int idx, int mx) {
                    if (idx == b) {
                        hs.push_back(work);
                        return;
                    }
                    for (int v = 1; v <= mx; ++v) {
                        work[static_cast<std::size_t>(idx)] = v;
                        gen(idx + 1, v);
                    }
                };
                gen(0, 10);
                for (auto& h : hs) {
                    SurfaceSig s(g, p, h);
                    if (is_well_formed(s) && is_valid(s) && rank(s) <= 8) sigs.push_back(s);
                }
            }
    int failures = 0;
    long total = 0;
    for (const auto& s : sigs) {
        SweepReport rep = verify_sweep(s, 3000);
        total += static_cast<long>(rep.triangulations);
        if (!rep.ok()) {
            ++failures;
            std::printf("FAIL %s\n", s.str().c_str());
            for (const auto& c : rep.checks)
                if (c.failed) std::printf("  %s: %s\n", c.name.c_str(), c.first_counterexample.c_str());
        }
    }
    std::printf("%zu surfaces, %ld triangulations, %d failing\n", sigs.size(), total, failures);
    return failures;
}
