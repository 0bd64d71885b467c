#include <catch2/catch_amalgamated.hpp>

#include "surfq/builder.hpp"
#include "surfq/exchange.hpp"
#include "surfq/flip.hpp"

using namespace surfq;

TEST_CASE("flipping the pentagon fan gives the other quadrilateral diagonal") {
    Triangulation fan = seeds::polygon_fan(5);
    REQUIRE(fan.arc_count() == 2);
    Triangulation other = flip(fan, 0);
    CHECK_FALSE(check(other).has_value());
    CHECK(surface_signature(other) == SurfaceSig(0, 0, {5}));
    CHECK_FALSE(same_triangulation(other, fan));
    CHECK(same_triangulation(flip(other, 0), fan));
}

TEST_CASE("flip realizes mutation on the quiver") {
    Triangulation fan = seeds::polygon_fan(6);
    for (int a = 0; a < fan.arc_count(); ++a) {
        CHECK(exchange_quiver(flip(fan, a)) == exchange_quiver(fan).mutate(a));
    }
}

TEST_CASE("torus flips stay triple-glued and Markov") {
    Triangulation t;
    int a = t.add_arc("a"), b = t.add_arc("b"), c = t.add_arc("c");
    t.add_plain(SideRef::arc(a), SideRef::arc(b), SideRef::arc(c));
    t.add_plain(SideRef::arc(a), SideRef::arc(b), SideRef::arc(c));
    for (int arc = 0; arc < 3; ++arc) {
        Triangulation f = flip(t, arc);
        CHECK_FALSE(check(f).has_value());
        CHECK(surface_signature(f) == SurfaceSig(1, 1, {}));
        CHECK(exchange_quiver(f).edge_count() == 6);
        CHECK(exchange_quiver(f) == exchange_quiver(t).mutate(arc));
        CHECK(same_triangulation(flip(f, arc), t));
    }
}

TEST_CASE("radius of a self-folded triangle is unflippable") {
    Triangulation t;
    int a = t.add_arc("a"), ga = t.add_arc("ga"), r = t.add_arc("r");
    int b0 = t.add_boundary("b0"), b1 = t.add_boundary("b1"), b2 = t.add_boundary("b2");
    t.add_plain(SideRef::boundary(b0), SideRef::boundary(b1), SideRef::arc(a));
    t.add_plain(SideRef::arc(a), SideRef::boundary(b2), SideRef::arc(ga));
    t.add_folded(ga, r);
    CHECK_FALSE(is_flippable(t, r));
    CHECK(is_flippable(t, ga));
    CHECK_THROWS_AS(flip(t, r), unflippable_arc);
}

TEST_CASE("flipping into and out of a self-folded configuration") {
    // once-punctured digon, ordinary pair of wedges
    Triangulation t = seeds::punctured_polygon_fan(2);
    REQUIRE(surface_signature(t) == SurfaceSig(0, 1, {2}));
    TriangStats st = stats(t);
    CHECK(st.d_neg == 1); // that is why the digon has no maximal triangulation
    Triangulation f = flip(t, 0);
    CHECK_FALSE(check(f).has_value());
    bool has_folded = false;
    for (const auto& tr : f.triangles()) has_folded |= tr.self_folded;
    CHECK(has_folded);
    CHECK(surface_signature(f) == SurfaceSig(0, 1, {2}));
    CHECK(same_triangulation(flip(f, 0), t));
    // the loop is flippable, its radius is not
    int folded_index = -1;
    for (int i = 0; i < f.triangle_count(); ++i)
        if (f.triangle(i).self_folded) folded_index = i;
    REQUIRE(folded_index >= 0);
    CHECK_FALSE(is_flippable(f, f.triangle(folded_index).radius().id));
    CHECK(is_flippable(f, f.triangle(folded_index).loop().id));
}

TEST_CASE("flip neighbor counts") {
    CHECK(flip_neighbors(seeds::polygon_fan(5)).size() == 2);
    CHECK(flip_neighbors(seeds::polygon_fan(4)).size() == 1);
    Triangulation torus;
    int a = torus.add_arc("a"), b = torus.add_arc("b"), c = torus.add_arc("c");
    torus.add_plain(SideRef::arc(a), SideRef::arc(b), SideRef::arc(c));
    torus.add_plain(SideRef::arc(a), SideRef::arc(b), SideRef::arc(c));
    CHECK(flip_neighbors(torus).size() == 3);
}

TEST_CASE("canonical keys identify relabeled triangulations and separate diagonals") {
    Triangulation fan = seeds::polygon_fan(6);
    // relabel arcs by renaming: canonical key ignores arc names entirely
    Triangulation renamed = fan;
    for (int i = 0; i < renamed.arc_count(); ++i) renamed.rename_arc(i, "z" + std::to_string(99 - i));
    CHECK(canonical_key(fan) == canonical_key(renamed));
    // the two diagonals of the square differ with a labeled boundary
    Triangulation sq = seeds::polygon_fan(4);
    CHECK(canonical_key(sq) != canonical_key(flip(sq, 0)));
}
