#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "helpers.hpp"
#include "surfq/builder.hpp"
#include "surfq/io.hpp"

using namespace surfq;
using surfq::testing::make_quiver;
using surfq::testing::markov;

TEST_CASE("quiver json round trip") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng() % 7);
        Quiver q(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 2) {
                    bool fwd = rng() % 2;
                    q.add_arrow(fwd ? i : j, fwd ? j : i, 1 + static_cast<int>(rng() % 3));
                }
        if (rng() % 2) {
            std::vector<std::string> labels;
            for (int i = 0; i < n; ++i) labels.push_back("arc" + std::to_string(i));
            q.set_labels(labels);
        }
        json j = quiver_to_json(q);
        Quiver back = quiver_from_json(json::parse(j.dump()));
        REQUIRE(back == q);
        REQUIRE(back.labels() == q.labels());
        REQUIRE(quiver_from_text(quiver_to_text(q)) == q);
    }
}

TEST_CASE("triangulation json round trip across the base library") {
    for (const auto& [sig, t] : base_library()) {
        json j = triangulation_to_json(t);
        Triangulation back = triangulation_from_json(json::parse(j.dump()));
        REQUIRE(same_triangulation(back, t));
        REQUIRE(surface_signature(back) == sig);
    }
}

TEST_CASE("self-folded triangulations and tags survive serialization") {
    Triangulation t = seeds::twice_punctured_monogon();
    json j = triangulation_to_json(t);
    Triangulation back = triangulation_from_json(j);
    CHECK(same_triangulation(back, t));

    TaggedTriangulation tg = tau(bases::twice_punctured_triangle());
    ArcEndpoints ep = arc_endpoints(tg.base);
    int y = ep.assembly.puncture_classes[0];
    tg = retag(tg, {y});
    json tj = tagged_to_json(tg);
    TaggedTriangulation tback = tagged_from_json(json::parse(tj.dump()));
    CHECK(same_triangulation(tback.base, tg.base));
    CHECK(tback.tags == tg.tags);
}

TEST_CASE("dot output mentions every vertex and multiplicity") {
    std::string dot = quiver_to_dot(markov());
    CHECK(dot.find("v0 -> v1") != std::string::npos);
    CHECK(dot.find("label=\"2\"") != std::string::npos);
    std::string tdot = triangulation_to_dot(bases::octagon());
    CHECK(tdot.find("cap") != std::string::npos);
    CHECK(tdot.find("face") != std::string::npos);
}

TEST_CASE("declared signatures ride along") {
    Triangulation t = bases::octagon();
    t.declared_sig = SurfaceSig(0, 0, {8});
    Triangulation back = triangulation_from_json(triangulation_to_json(t));
    REQUIRE(back.declared_sig.has_value());
    CHECK(*back.declared_sig == SurfaceSig(0, 0, {8}));
    CHECK_FALSE(check(back).has_value());
}
