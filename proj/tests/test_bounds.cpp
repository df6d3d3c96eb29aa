#include "fairsquare/bounds.hpp"
#include "fairsquare/generators.hpp"

#include <doctest.h>

using namespace fairsq;

namespace {

RectRegion box_region(long w2, long h2) {  // dimensions in halves
    return make_region({Rect::of(Rat(0), Rat(0), make_rat(w2, 2), make_rat(h2, 2))});
}

}  // namespace

TEST_CASE("bounds table rows") {
    auto sq3 = prop_bound("square", "squares", 3, {});
    CHECK(*sq3.lower == make_rat(1, 8));
    CHECK(*sq3.upper == make_rat(1, 6));

    auto sq2 = prop_bound("square", "squares", 2, {});
    CHECK(*sq2.lower == make_rat(1, 4));
    CHECK(*sq2.upper == make_rat(1, 4));

    BoundParams qp;
    auto q2 = prop_bound("quarterplane", "squares", 2, qp);
    CHECK(*q2.lower == make_rat(1, 3));
    CHECK(*q2.upper == make_rat(1, 3));

    BoundParams st;
    st.k = 4;
    auto s2 = prop_bound("staircase", "squares", 2, st);
    CHECK(*s2.lower == make_rat(1, 6));
    CHECK(*s2.upper == make_rat(1, 6));

    auto hp4 = prop_bound("halfplane", "squares", 4, {});
    CHECK(*hp4.lower == make_rat(1, 6));
    CHECK(*hp4.upper == make_rat(1, 5));

    auto pl6 = prop_bound("plane", "squares", 6, {});
    CHECK(*pl6.lower == make_rat(1, 8));
    CHECK(*pl6.upper == make_rat(1, 6));

    BoundParams lr;
    lr.L = Rat(3);
    lr.R = Rat(2);
    auto rect2 = prop_bound("rect", "rfat", 2, lr);
    CHECK(*rect2.upper == make_rat(1, 4));   // 2n-2+ceil(3/2) = 4
    CHECK(*rect2.lower == make_rat(1, 4));   // 4n-6+ceil(2/2)... 2+2 = 4

    BoundParams rk;
    rk.k = 3;
    auto rr = prop_bound("rectilinear", "rfat", 3, rk);
    CHECK_FALSE(rr.lower.has_value());
    CHECK(*rr.upper == make_rat(1, 7));

    CHECK_THROWS_AS(prop_bound("dcube", "cubes", 2, {}), InvalidParameter);
}

TEST_CASE("lower bounds never exceed upper bounds") {
    for (int n = 1; n <= 64; ++n) {
        std::vector<PropBound> rows;
        rows.push_back(prop_bound("square", "squares", n, {}));
        rows.push_back(prop_bound("square", "2fat", n, {}));
        rows.push_back(prop_bound("quarterplane", "squares", n, {}));
        rows.push_back(prop_bound("halfplane", "squares", n, {}));
        rows.push_back(prop_bound("plane", "squares", n, {}));
        for (int k : {1, 2, 5}) {
            BoundParams p;
            p.k = k;
            rows.push_back(prop_bound("staircase", "squares", n, p));
        }
        BoundParams lr;
        lr.L = make_rat(7, 2);
        lr.R = Rat(2);
        rows.push_back(prop_bound("rect", "rfat", n, lr));
        for (const auto& row : rows)
            if (row.lower && row.upper) CHECK(*row.lower <= *row.upper);
    }
}

TEST_CASE("pool arrangements have the advertised sizes") {
    Rat eps(1, 64);
    CHECK(pools_quarterplane(1, eps).pools.size() == 1);
    CHECK(pools_quarterplane(2, eps).pools.size() == 3);
    CHECK(pools_quarterplane(3, eps).pools.size() == 5);
    CHECK(pools_quarterplane(3, eps).claimed_bound == make_rat(1, 5));

    CHECK(pools_square(2, eps).pools.size() == 4);
    CHECK(pools_square(3, eps).pools.size() == 6);
    CHECK(pools_square(3, eps).claimed_bound == make_rat(1, 6));

    auto [plate, indep] = notched_plate_example();
    auto inst = pools_rectilinear(plate, 3, eps, indep);
    CHECK(inst.pools.size() == 7);  // 2n-2+k with k = 3
    CHECK(inst.claimed_bound == make_rat(1, 7));

    // A one-pool "independent set" reduces to the quarter-plane counts.
    RectRegion square_region = make_region({Rect::of(Rat(0), Rat(0), Rat(8), Rat(8))});
    auto one = pools_rectilinear(square_region, 2, eps,
                                 {Square(Rat(3), Rat(3), ExtRat(Rat(1)))});
    CHECK(one.pools.size() == 3);  // 2n-2+1

    // Every pool carries value exactly one.
    Measure pm = pool_measure(inst);
    CHECK(pm.total() == Rat(7));
    for (const auto& p : inst.pools)
        CHECK(pm.eval(Region(square_to_rect(p))) == Rat(1));
}

TEST_CASE("independence number oracle") {
    CHECK(independence_number_bruteforce(box_region(2, 2), ShapeFamily::Squares) == 1);
    // 3x1 strip: ceil(L) small squares spaced along the long side.
    CHECK(independence_number_bruteforce(box_region(6, 2), ShapeFamily::Squares) == 3);
    for (auto [w2, expect] : std::vector<std::pair<long, int>>{
             {2, 1}, {3, 2}, {4, 2}, {5, 3}, {6, 3}}) {
        CHECK(independence_number_bruteforce(box_region(w2, 2), ShapeFamily::Squares) == expect);
    }

    // L-shaped plate: a 5x5 square minus its 2x2 north-east corner.
    RectRegion ell = region_subtract(make_region({Rect::of(Rat(0), Rat(0), Rat(5), Rat(5))}),
                                     Rect::of(Rat(3), Rat(3), Rat(5), Rat(5)));
    CHECK(independence_number_bruteforce(ell, ShapeFamily::Squares) == 3);

    // Fat-rectangle family on the 3x1 strip: ceil(L/R) pools suffice.
    CHECK(independence_number_bruteforce(box_region(6, 2), ShapeFamily::TwoFatRects, Rat(2)) == 2);
}

TEST_CASE("cover number oracle") {
    CHECK(cover_number_bruteforce(box_region(2, 2), ShapeFamily::Squares) == 1);
    RectRegion ell = region_subtract(make_region({Rect::of(Rat(0), Rat(0), Rat(4), Rat(4))}),
                                     Rect::of(Rat(0), Rat(0), Rat(2), Rat(2)));
    CHECK(cover_number_bruteforce(ell, ShapeFamily::Squares) == 3);

    // A staircase with k = 4 inner corners clipped to a window chosen so
    // the k corner squares still cover it (one corner sits on the diagonal
    // and its square reaches the window's far corner).
    RectRegion clipped = make_region({Rect::of(Rat(4), Rat(0), Rat(6), Rat(1)),
                                      Rect::of(Rat(3), Rat(1), Rat(6), Rat(2)),
                                      Rect::of(Rat(2), Rat(2), Rat(6), Rat(4)),
                                      Rect::of(Rat(0), Rat(4), Rat(6), Rat(6))});
    CHECK(cover_number_bruteforce(clipped, ShapeFamily::Squares) == 4);
    CHECK(independence_number_bruteforce(clipped, ShapeFamily::Squares) == 4);
    // Uneven steps keep equality even when the count exceeds the corner
    // count of the unclipped staircase.
    std::vector<Rect> steps;
    for (int j = 0; j < 4; ++j)
        steps.push_back(Rect::of(Rat(j), Rat(0), Rat(j + 1), Rat(4 - j)));
    RectRegion ladder = make_region(steps);
    CHECK(cover_number_bruteforce(ladder, ShapeFamily::Squares) ==
          independence_number_bruteforce(ladder, ShapeFamily::Squares));
}

TEST_CASE("cover equals independence on hole-free polygons") {
    std::vector<RectRegion> corpus;
    corpus.push_back(box_region(2, 2));
    corpus.push_back(box_region(4, 2));
    corpus.push_back(box_region(6, 2));
    corpus.push_back(box_region(5, 4));
    corpus.push_back(region_subtract(make_region({Rect::of(Rat(0), Rat(0), Rat(4), Rat(4))}),
                                     Rect::of(Rat(0), Rat(0), Rat(2), Rat(2))));
    corpus.push_back(region_subtract(make_region({Rect::of(Rat(0), Rat(0), Rat(6), Rat(6))}),
                                     Rect::of(Rat(4), Rat(4), Rat(6), Rat(6))));
    // Staircase-shaped plates.
    corpus.push_back(make_region({Rect::of(Rat(0), Rat(0), Rat(1), Rat(3)),
                                  Rect::of(Rat(1), Rat(0), Rat(2), Rat(2)),
                                  Rect::of(Rat(2), Rat(0), Rat(3), Rat(1))}));
    // Plus-shaped polygon.
    corpus.push_back(make_region({Rect::of(Rat(2), Rat(0), Rat(4), Rat(6)),
                                  Rect::of(Rat(0), Rat(2), Rat(2), Rat(4)),
                                  Rect::of(Rat(4), Rat(2), Rat(6), Rat(4))}));
    // T-shaped polygon.
    corpus.push_back(make_region({Rect::of(Rat(0), Rat(4), Rat(6), Rat(6)),
                                  Rect::of(Rat(2), Rat(0), Rat(4), Rat(4))}));
    // Wide U-shaped polygon.
    corpus.push_back(make_region({Rect::of(Rat(0), Rat(0), Rat(6), Rat(2)),
                                  Rect::of(Rat(0), Rat(2), Rat(2), Rat(5)),
                                  Rect::of(Rat(4), Rat(2), Rat(6), Rat(5))}));
    REQUIRE(corpus.size() == 10);
    for (const auto& region : corpus) {
        int cover = cover_number_bruteforce(region, ShapeFamily::Squares);
        int indep = independence_number_bruteforce(region, ShapeFamily::Squares);
        CHECK(cover == indep);
    }
}

TEST_CASE("two-pool square oracle certifies the constructions") {
    Rat eps(1, 64);
    CHECK(max_disjoint_two_pool_squares(pools_quarterplane(1, eps)) == 0);
    CHECK(max_disjoint_two_pool_squares(pools_quarterplane(2, eps)) == 1);
    CHECK(max_disjoint_two_pool_squares(pools_quarterplane(3, eps)) == 2);
    CHECK(max_disjoint_two_pool_squares(pools_square(2, eps)) == 1);
    CHECK(max_disjoint_two_pool_squares(pools_square(3, eps)) <= 2);

    auto [plate, indep] = notched_plate_example();
    CHECK(max_disjoint_two_pool_squares(pools_rectilinear(plate, 3, eps, indep)) == 2);
}

TEST_CASE("dense sampling never beats the pinned candidate search") {
    // Randomized sanity for the critical-square discretization: grid-placed
    // squares intersecting two pools cannot form a larger disjoint family.
    Rat eps(1, 16);
    for (int n : {2, 3}) {
        PoolInstance inst = pools_quarterplane(n, eps);
        int oracle = max_disjoint_two_pool_squares(inst);
        std::vector<Rect> boxes;
        for (const auto& p : inst.pools) boxes.push_back(square_to_rect(p));
        auto touches = [](const Rect& a, const Rect& b) {
            return ext_max(a.x0, b.x0) <= ext_min(a.x1, b.x1) &&
                   ext_max(a.y0, b.y0) <= ext_min(a.y1, b.y1);
        };
        std::vector<Rect> cand;
        const long G = 24;
        for (long x = 0; x <= G; ++x)
            for (long y = 0; y <= G; ++y)
                for (long s = 1; s <= G; ++s) {
                    Rect sq = Rect::of(make_rat(x, 16), make_rat(y, 16), make_rat(x + s, 16) + Rat(1),
                                       make_rat(y + s, 16) + Rat(1));
                    sq = Rect::of(make_rat(x, 16), make_rat(y, 16), make_rat(x, 16) + make_rat(s, 8),
                                  make_rat(y, 16) + make_rat(s, 8));
                    int hit = 0;
                    for (const auto& b : boxes)
                        if (touches(sq, b)) ++hit;
                    if (hit >= 2) cand.push_back(sq);
                }
        // Greedy packing over the dense grid candidates.
        int best = 0;
        Rng rng(17);
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<Rect> chosen;
            std::vector<std::size_t> order(cand.size());
            for (std::size_t i = 0; i < cand.size(); ++i) order[i] = i;
            for (std::size_t i = order.size(); i > 1; --i)
                std::swap(order[i - 1], order[rng.below(i)]);
            for (std::size_t idx : order) {
                bool ok = true;
                for (const auto& c : chosen)
                    if (interiors_overlap(c, cand[idx])) ok = false;
                if (ok) chosen.push_back(cand[idx]);
            }
            best = std::max(best, static_cast<int>(chosen.size()));
        }
        CHECK(best <= oracle);
    }
}

TEST_CASE("running a guillotine protocol on a pool instance hits both bounds") {
    // The pools lower-bound the protocol's guarantee and upper-bound what
    // any allocation can give the worst-off player.
    Rat eps(1, 64);
    for (int n : {2, 3}) {
        PoolInstance inst = pools_square(n, eps);
        Measure pm = pool_measure(inst);
        std::vector<PlayerSpec> players;
        for (int i = 0; i < n; ++i) {
            PlayerSpec p;
            p.honest = true;
            p.measure = pm;
            players.push_back(std::move(p));
        }
        Rect cake = std::get<Rect>(inst.cake);
        auto a = divide_square_to_squares(cake, players);
        Rat worst(1);
        for (const auto& piece : a.pieces) {
            Rat share = piece ? pm.eval(Region(*piece)) / pm.total() : Rat(0);
            if (share < worst) worst = share;
        }
        CHECK(worst >= Rat(1) / a.bound_denominator);
        CHECK(worst <= inst.claimed_bound);
    }
}

TEST_CASE("allocation verification catches structural and value failures") {
    Rect cake = Rect::of(Rat(0), Rat(0), Rat(1), Rat(1));
    std::vector<PlayerSpec> players;
    for (int i = 0; i < 2; ++i) {
        PlayerSpec p;
        p.honest = true;
        p.measure = Measure({{cake, Rat(1)}});
        players.push_back(std::move(p));
    }
    auto a = divide_two_player_square(cake, players);
    CHECK(verify_allocation(a, players, make_rat(1, 4), ShapeFamily::Squares).pass);

    // Tampering: overlap one piece onto the other.
    Allocation bad = a;
    bad.pieces[1] = bad.pieces[0];
    VerifyReport rep = verify_allocation(bad, players, make_rat(1, 4), ShapeFamily::Squares);
    CHECK_FALSE(rep.structure_ok);

    // An impossible bound fails the value check.
    VerifyReport rep2 = verify_allocation(a, players, Rat(1), ShapeFamily::Squares);
    CHECK_FALSE(rep2.value_ok);

    // Wrong shape family flags non-square pieces.
    Allocation squished = a;
    squished.pieces[0] = Rect::of(Rat(0), Rat(0), make_rat(1, 2), make_rat(1, 4));
    CHECK_FALSE(verify_allocation(squished, players, make_rat(1, 4), ShapeFamily::Squares).shapes_ok);
}
