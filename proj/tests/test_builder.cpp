#include <catch2/catch_amalgamated.hpp>

#include "surfq/builder.hpp"
#include "surfq/exchange.hpp"

using namespace surfq;

TEST_CASE("every base is a connected maximal triangulation with 2 faces of its surface") {
    for (const auto& [sig, t] : base_library()) {
        INFO(sig.str());
        CHECK_FALSE(check(t).has_value());
        CHECK(surface_signature(t) == sig);
        CHECK(is_maximal(t).maximal);
        CHECK(is_connected_max_2faces(t));
        // face count law f = 4(g-1) + 2b + 2p + c
        TriangStats st = stats(t);
        CHECK(st.f == 4 * (sig.genus - 1) + 2 * sig.b() + 2 * sig.punctures + cap_capacity(sig));
        CHECK(st.c == cap_capacity(sig));
    }
}

TEST_CASE("octagon base counts") {
    Triangulation t = bases::octagon();
    TriangStats st = stats(t);
    CHECK(st.f == 2);
    CHECK(st.c == 4);
}

TEST_CASE("add_puncture performs a barycentric subdivision") {
    Triangulation t = bases::octagon();
    int n0 = t.arc_count();
    TriangStats before = stats(t);
    Triangulation out = add_puncture(t, first_face(t));
    CHECK_FALSE(check(out).has_value());
    CHECK(surface_signature(out) == SurfaceSig(0, 1, {8}));
    CHECK(out.arc_count() == n0 + 3);
    TriangStats after = stats(out);
    CHECK(after.f == before.f + 2);
    CHECK(is_connected_max_2faces(out));
    CHECK_THROWS_AS(add_puncture(t, 0), validation_error); // triangle 0 is a cap
}

TEST_CASE("add_boundary_component replaces a face by three faces and a wedge") {
    Triangulation t = bases::octagon();
    TriangStats before = stats(t);
    Triangulation out = add_boundary_component(t, first_face(t));
    CHECK_FALSE(check(out).has_value());
    CHECK(surface_signature(out) == SurfaceSig(0, 0, {8, 1}));
    CHECK(out.arc_count() == t.arc_count() + 4); // rank grows by 4
    TriangStats after = stats(out);
    CHECK(after.f == before.f + 2);
    CHECK(after.w == before.w + 1);
    CHECK(is_connected_max_2faces(out));
}

TEST_CASE("add_boundary_marked_point alternates cap and wedge splits") {
    // even component: cap splits into cap + wedge
    Triangulation t = bases::annulus22();
    Assembly as = assemble(t);
    int comp = 0;
    TriangStats before = stats(t);
    Triangulation out = add_boundary_marked_point(t, comp);
    CHECK_FALSE(check(out).has_value());
    CHECK(surface_signature(out) == SurfaceSig(0, 0, {3, 2}));
    TriangStats mid = stats(out);
    CHECK(mid.w == before.w + 1);
    CHECK(mid.c == before.c);
    CHECK(mid.f == before.f);
    CHECK(is_connected_max_2faces(out));
    // odd component: the wedge splits into cap + face
    Assembly as2 = assemble(out);
    int odd = -1;
    for (std::size_t i = 0; i < as2.boundary_cycles.size(); ++i)
        if (as2.boundary_cycles[i].size() % 2 == 1) odd = static_cast<int>(i);
    REQUIRE(odd >= 0);
    Triangulation out2 = add_boundary_marked_point(out, odd);
    CHECK(surface_signature(out2) == SurfaceSig(0, 0, {4, 2}));
    TriangStats after = stats(out2);
    CHECK(after.f == mid.f + 1);
    CHECK(after.c == mid.c + 1);
    CHECK(after.w == mid.w - 1);
    CHECK(is_connected_max_2faces(out2));
    (void)as;
}

TEST_CASE("build_max_connected: bases are used directly") {
    Triangulation t = build_max_connected(SurfaceSig(0, 2, {3}));
    CHECK(same_triangulation(t, bases::twice_punctured_triangle()));
}

TEST_CASE("build_max_connected rejects the construction exceptions by item") {
    try {
        build_max_connected(SurfaceSig(0, 1, {2}));
        FAIL("expected exception_surface");
    } catch (const exception_surface& e) {
        CHECK(e.item == 2);
    }
    try {
        build_max_connected(SurfaceSig(0, 0, {6}));
        FAIL("expected exception_surface");
    } catch (const exception_surface& e) {
        CHECK(e.item == 1);
    }
    try {
        build_max_connected(SurfaceSig(0, 0, {3, 1}));
        FAIL("expected exception_surface");
    } catch (const exception_surface& e) {
        CHECK(e.item == 4);
    }
}

TEST_CASE("build_max_connected round-trips a large mixed signature") {
    SurfaceSig sig(2, 3, {5});
    BuildResult r = build_max_connected_with_plan(sig);
    CHECK_FALSE(check(r.triangulation).has_value());
    CHECK(surface_signature(r.triangulation) == sig);
    CHECK(is_connected_max_2faces(r.triangulation));
    CHECK(r.plan.size() >= 4);
}

TEST_CASE("build covers the 4-punctured sphere and small spheres") {
    Triangulation t = build_max_connected(SurfaceSig(0, 4, {}));
    CHECK(surface_signature(t) == SurfaceSig(0, 4, {}));
    CHECK(is_connected_max_2faces(t));
    Triangulation t6 = build_max_connected(SurfaceSig(0, 6, {}));
    CHECK(surface_signature(t6) == SurfaceSig(0, 6, {}));
    CHECK(is_connected_max_2faces(t6));
}

TEST_CASE("seed triangulations cover the exception surfaces") {
    for (const auto& [sig, item] : existence_exception_table()) {
        INFO(sig.str());
        (void)item;
        Triangulation t = seed_triangulation(sig);
        CHECK_FALSE(check(t).has_value());
        CHECK(surface_signature(t) == sig);
    }
    CHECK(seed_triangulation(SurfaceSig(0, 0, {5})).triangle_count() == 3);
    // buildable surfaces seed from the builder
    Triangulation t = seed_triangulation(SurfaceSig(1, 1, {}));
    CHECK(is_connected_max_2faces(t));
}
