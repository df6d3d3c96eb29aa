#include "fairsquare/generators.hpp"
#include "fairsquare/geometry.hpp"

#include <doctest.h>

using namespace fairsq;

namespace {

// Membership oracle straight from the definition: a staircase covers (x,y)
// iff some corner has x >= x_j and y >= y_j.
bool stair_member(const Staircase& s, const Rat& x, const Rat& y) {
    for (const auto& [cx, cy] : s.corners)
        if (x >= cx && y >= cy) return true;
    return false;
}

bool region_member(const RectRegion& r, const Rat& x, const Rat& y) {
    return region_contains_point(r, x, y);
}

Staircase stairs(std::vector<std::pair<long, long>> cs) {
    std::vector<std::pair<Rat, Rat>> corners;
    for (auto [x, y] : cs) corners.emplace_back(Rat(x), Rat(y));
    return make_staircase(std::move(corners));
}

}  // namespace

TEST_CASE("fatness predicate") {
    Rect tall = Rect::of(Rat(0), Rat(0), Rat(10), Rat(20));
    CHECK(is_r_fat(tall, Rat(2)));
    CHECK_FALSE(is_r_fat(tall, Rat(1)));
    CHECK(is_r_fat(Rect::of(Rat(0), Rat(0), Rat(1), Rat(1)), Rat(1)));
    CHECK_THROWS_AS(is_r_fat(tall, make_rat(1, 2)), InvalidParameter);

    // Monotone in R.
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        Rect r = Rect::of(Rat(0), Rat(0), Rat(rng.range(1, 40)), Rat(rng.range(1, 40)));
        Rat r1(rng.range(1, 12), rng.range(1, 4));
        if (r1 < 1) r1 = Rat(1);
        Rat r2 = r1 + Rat(rng.range(0, 5));
        if (is_r_fat(r, r1)) CHECK(is_r_fat(r, r2));
    }
}

TEST_CASE("staircase shadow removal reproduces the boundary examples") {
    // Four corners; the winning square sits at the second corner.
    Staircase s = stairs({{50, 0}, {40, 10}, {30, 30}, {0, 50}});
    Staircase after = staircase_remove_shadow(s, 1, ExtRat(Rat(25)));
    REQUIRE(after.corner_count() == 3);
    CHECK(after.corners[0] == std::make_pair(Rat(65), Rat(0)));
    CHECK(after.corners[1] == std::make_pair(Rat(30), Rat(35)));
    CHECK(after.corners[2] == std::make_pair(Rat(0), Rat(50)));

    // Quarter-plane minus its corner square.
    Staircase qp = stairs({{0, 0}});
    Staircase qp_after = staircase_remove_shadow(qp, 0, ExtRat(Rat(1)));
    REQUIRE(qp_after.corner_count() == 2);
    CHECK(qp_after.corners[0] == std::make_pair(Rat(1), Rat(0)));
    CHECK(qp_after.corners[1] == std::make_pair(Rat(0), Rat(1)));

    // Two-corner staircase, box deletes both corners. Expected corners are
    // frozen from the membership oracle below.
    Staircase two = stairs({{1, 0}, {0, 1}});
    Staircase two_after = staircase_remove_shadow(two, 0, ExtRat(Rat(2)));
    REQUIRE(two_after.corner_count() == 2);
    CHECK(two_after.corners[0] == std::make_pair(Rat(3), Rat(0)));
    CHECK(two_after.corners[1] == std::make_pair(Rat(0), Rat(2)));

    // Infinite winning square empties the region.
    CHECK(staircase_remove_shadow(two, 0, ExtRat::pos_inf()).empty());
}

TEST_CASE("shadow removal equals set subtraction on a sample grid") {
    Rng rng(1234);
    for (int iter = 0; iter < 60; ++iter) {
        int k = 1 + static_cast<int>(rng.below(5));
        Staircase s = random_staircase(rng, k);
        int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
        Rat side = make_rat(rng.range(1, 24), 4);
        Staircase after = staircase_remove_shadow(s, j, ExtRat(side));

        // Corner-count bookkeeping: k' = k + 2 - deleted.
        Rat X = s.corners[j].first + side, Y = s.corners[j].second + side;
        int deleted = 0;
        for (const auto& [cx, cy] : s.corners)
            if (cx <= X && cy <= Y) ++deleted;
        CHECK(after.corner_count() == k + 2 - deleted);

        for (int gx = 0; gx < 28; ++gx) {
            for (int gy = 0; gy < 28; ++gy) {
                // Sample off the half- and quarter-grids so closed-boundary
                // points cannot blur membership.
                Rat px = make_rat(8 * gx + 1, 8), py = make_rat(8 * gy + 1, 8);
                bool before = stair_member(s, px, py);
                bool in_box = px <= X && py <= Y;
                bool expect = before && !in_box;
                CHECK(stair_member(after, px, py) == expect);
            }
        }
    }
}

TEST_CASE("region subtraction is exact set difference") {
    RectRegion unit = make_region({Rect::of(Rat(0), Rat(0), Rat(1), Rat(1))});
    RectRegion ell = region_subtract(unit, Rect::of(Rat(0), Rat(0), make_rat(1, 2), make_rat(1, 2)));
    CHECK(area(ell) == make_rat(3, 4));

    RectRegion untouched = region_subtract(unit, Rect::of(Rat(5), Rat(5), Rat(6), Rat(6)));
    CHECK(region_equal(untouched, unit));

    RectRegion strip = make_region({Rect::of(Rat(0), Rat(0), Rat(2), Rat(1))});
    RectRegion east = region_subtract(strip, Rect::of(Rat(0), Rat(0), Rat(1), Rat(1)));
    CHECK(region_equal(east, make_region({Rect::of(Rat(1), Rat(0), Rat(2), Rat(1))})));

    // Area additivity against random cuts, exact.
    Rng rng(99);
    for (int iter = 0; iter < 80; ++iter) {
        Rat x0 = make_rat(rng.range(0, 12), 2), y0 = make_rat(rng.range(0, 12), 2);
        Rect cut = Rect::of(x0, y0, x0 + make_rat(rng.range(1, 8), 2), y0 + make_rat(rng.range(1, 8), 2));
        RectRegion rest = region_subtract(strip, cut);
        Rat cut_area(0);
        for (const auto& part : strip.rects) cut_area += overlap_area(part, cut);
        CHECK(area(strip) == area(rest) + cut_area);
    }
}

TEST_CASE("L-shape cover: three maximal squares with exact union") {
    auto check_cover = [](const Rat& notch) {
        RectRegion unit = make_region({Rect::of(Rat(0), Rat(0), Rat(1), Rat(1))});
        RectRegion ell = region_subtract(unit, Rect::of(Rat(0), Rat(0), notch, notch));
        auto cover = l_shape_cover(ell);
        REQUIRE(cover.size() == 3);
        std::vector<Rect> boxes;
        for (const auto& sq : cover) {
            Rect b = square_to_rect(sq);
            CHECK(region_contains_rect(ell, b));
            boxes.push_back(b);
        }
        // Union check on a 64x64 membership grid.
        for (int gx = 0; gx < 64; ++gx)
            for (int gy = 0; gy < 64; ++gy) {
                Rat px(2 * gx + 1, 128), py(2 * gy + 1, 128);
                bool in_l = region_member(ell, px, py);
                bool in_cover = false;
                for (const auto& b : boxes)
                    if (rect_contains_point(b, px, py)) in_cover = true;
                CHECK(in_cover == in_l);
            }
    };
    check_cover(make_rat(1, 2));
    check_cover(make_rat(1, 4));

    RectRegion unit = make_region({Rect::of(Rat(0), Rat(0), Rat(1), Rat(1))});
    CHECK_THROWS_AS(l_shape_cover(region_subtract(unit, Rect::of(Rat(0), Rat(0), Rat(1), Rat(1)))),
                    InvalidParameter);
    // A notch deeper than half the side leaves thin arms: no 3-square cover.
    CHECK_THROWS_AS(
        l_shape_cover(region_subtract(unit, Rect::of(Rat(0), Rat(0), make_rat(3, 4), make_rat(3, 4)))),
        InvalidParameter);
}

TEST_CASE("disjointness and containment checks") {
    Rect cake = Rect::of(Rat(0), Rat(0), Rat(1), Rat(1));
    std::vector<Rect> halves{Rect::of(Rat(0), Rat(0), make_rat(1, 2), Rat(1)),
                             Rect::of(make_rat(1, 2), Rat(0), Rat(1), Rat(1))};
    CHECK(disjoint_and_contained(halves, Region(cake)));

    std::vector<Rect> overlap{Rect::of(Rat(0), Rat(0), make_rat(3, 4), Rat(1)),
                              Rect::of(make_rat(1, 2), Rat(0), Rat(1), Rat(1))};
    CHECK_FALSE(disjoint_and_contained(overlap, Region(cake)));

    // A piece crossing the staircase boundary: its south-west corner lies
    // outside the region.
    Staircase s = stairs({{2, 0}, {0, 2}});
    Rect crossing = Rect::of(Rat(1), Rat(1), Rat(3), Rat(3));
    CHECK_FALSE(stair_member(s, Rat(1), Rat(1)));
    CHECK_FALSE(disjoint_and_contained({crossing}, Region(s)));
    Rect inside = Rect::of(Rat(2), Rat(0), Rat(4), Rat(5));
    CHECK(disjoint_and_contained({inside}, Region(s)));
}

TEST_CASE("squares, quarter-planes and the two-square cover") {
    CHECK(is_square(Rect::of(Rat(2), Rat(3), Rat(4), Rat(5))));
    CHECK_FALSE(is_square(Rect::of(Rat(0), Rat(0), Rat(2), Rat(1))));
    Rect quarter(ExtRat(Rat(1)), ExtRat(Rat(2)), ExtRat::pos_inf(), ExtRat::pos_inf());
    CHECK(is_square(quarter));
    Rect west_quarter(ExtRat::neg_inf(), ExtRat(Rat(0)), ExtRat(Rat(3)), ExtRat::pos_inf());
    CHECK(is_square(west_quarter));
    Rect slab(ExtRat(Rat(0)), ExtRat::neg_inf(), ExtRat(Rat(1)), ExtRat::pos_inf());
    CHECK_FALSE(is_square(slab));

    Rect fat = Rect::of(Rat(0), Rat(0), make_rat(3, 2), Rat(1));
    auto cover = two_square_cover(fat);
    CHECK(region_contains_rect(make_region({fat}), cover[0]));
    CHECK(region_contains_rect(make_region({fat}), cover[1]));
    CHECK(is_square(cover[0]));
    CHECK(is_square(cover[1]));
    // The two squares span the whole rect.
    CHECK(cover[0].x0 == fat.x0);
    CHECK(cover[1].x1 == fat.x1);
    CHECK(cover[0].x1 >= cover[1].x0);
}
