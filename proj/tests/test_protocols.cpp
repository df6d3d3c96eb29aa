#include "fairsquare/bounds.hpp"
#include "fairsquare/generators.hpp"

#include <doctest.h>

using namespace fairsq;

namespace {

Rect unit_square() { return Rect::of(Rat(0), Rat(0), Rat(1), Rat(1)); }

PlayerSpec honest_player(Measure m) {
    PlayerSpec p;
    p.honest = true;
    p.measure = std::move(m);
    return p;
}

std::vector<PlayerSpec> uniform_players(int n, const Rect& support) {
    std::vector<PlayerSpec> out;
    for (int i = 0; i < n; ++i) out.push_back(honest_player(Measure({{support, Rat(1)}})));
    return out;
}

// Every honest player's share is at least V_i(C)/denominator, exactly.
void check_guarantee(const Allocation& a, const std::vector<PlayerSpec>& players,
                     ShapeFamily family) {
    VerifyReport rep = verify_allocation(a, players, Rat(1) / a.bound_denominator, family);
    CHECK(rep.pass);
}

}  // namespace

TEST_CASE("room partition follows the greedy last-room-first flow") {
    auto g1 = partition_to_rooms({{1}});
    REQUIRE(g1.size() == 1);
    CHECK(g1[0] == std::vector<int>{0});

    // Two indifferent players: the index tie-break sends player 0 to the
    // last room and player 1 to the first.
    auto g2 = partition_to_rooms({{1, 1}, {1, 1}});
    CHECK(g2[1] == std::vector<int>{0});
    CHECK(g2[0] == std::vector<int>{1});

    auto g3 = partition_to_rooms({{3, 0}, {0, 3}, {1, 2}});
    CHECK(g3[1] == std::vector<int>{1, 2});
    CHECK(g3[0] == std::vector<int>{0});

    CHECK_THROWS_AS(partition_to_rooms({{1, 0}, {0, 0}}), ProtocolRuleViolation);
}

TEST_CASE("room partition invariant on random matrices") {
    Rng rng(77);
    for (int iter = 0; iter < 1000; ++iter) {
        int n = 1 + static_cast<int>(rng.below(10));
        int m = 1 + static_cast<int>(rng.below(5));
        auto partners = random_partner_matrix(rng, n, m);
        auto groups = partition_to_rooms(partners);
        REQUIRE(groups.size() == static_cast<std::size_t>(m));
        std::vector<bool> seen(n, false);
        for (int j = 0; j < m; ++j) {
            for (int i : groups[j]) {
                CHECK_FALSE(seen[i]);
                seen[i] = true;
                CHECK(partners[i][j] >= static_cast<long>(groups[j].size()));
            }
        }
        for (int i = 0; i < n; ++i) CHECK(seen[i]);
    }
}

TEST_CASE("square-to-squares protocol") {
    // Single player receives the whole cake.
    auto a1 = divide_square_to_squares(unit_square(), uniform_players(1, unit_square()));
    REQUIRE(a1.pieces[0].has_value());
    CHECK(*a1.pieces[0] == unit_square());

    // Two uniform players: threshold 6n-8 = 4 coincides with the 1/4 bound.
    auto a2 = divide_square_to_squares(unit_square(), uniform_players(2, unit_square()));
    check_guarantee(a2, uniform_players(2, unit_square()), ShapeFamily::Squares);

    // Four uniform players: every piece worth exactly 1/16 of the total.
    auto players4 = uniform_players(4, unit_square());
    auto a4 = divide_square_to_squares(unit_square(), players4);
    VerifyReport rep = verify_allocation(a4, players4, make_rat(1, 16), ShapeFamily::Squares);
    CHECK(rep.pass);

    CHECK_THROWS_AS(divide_square_to_squares(Rect::of(Rat(0), Rat(0), Rat(2), Rat(1)),
                                             uniform_players(1, unit_square())),
                    PreconditionError);
}

TEST_CASE("2-fat protocol yields 2-fat pieces at 1/(4n-5)") {
    Rect cake = Rect::of(Rat(0), Rat(0), Rat(2), Rat(1));
    auto p1 = uniform_players(1, cake);
    auto a1 = divide_2fat(cake, p1);
    CHECK(*a1.pieces[0] == cake);

    for (int n : {2, 3}) {
        auto players = uniform_players(n, cake);
        auto a = divide_2fat(cake, players);
        CHECK(a.bound_denominator == Rat(4 * n - 5));
        check_guarantee(a, players, ShapeFamily::TwoFatRects);
    }
}

TEST_CASE("4-walls protocol allocates squares at 1/(4n-4)") {
    // One player extracts a square worth at least half the cake value.
    Rect cake = Rect::of(Rat(0), Rat(0), make_rat(3, 2), Rat(1));
    auto p1 = uniform_players(1, cake);
    auto a1 = divide_4walls(cake, p1);
    REQUIRE(a1.pieces[0].has_value());
    CHECK(is_square(*a1.pieces[0]));
    Measure ref({{cake, Rat(1)}});
    CHECK(ref.eval(Region(*a1.pieces[0])) * 2 >= ref.total());

    for (int n : {2, 5}) {
        auto players = uniform_players(n, unit_square());
        auto a = divide_4walls(unit_square(), players);
        CHECK(a.bound_denominator == Rat(std::max(2, 4 * n - 4)));
        check_guarantee(a, players, ShapeFamily::Squares);
    }
}

TEST_CASE("3-walls protocol may flow over the open side only") {
    // Single player gets the height-side square covering the cake.
    Rect cake = unit_square();
    auto p1 = uniform_players(1, cake);
    auto a1 = divide_3walls(cake, p1);
    CHECK(*a1.pieces[0] == unit_square());

    auto players = uniform_players(2, cake);
    auto a = divide_3walls(cake, players);
    CHECK(a.bound_denominator == Rat(3));
    check_guarantee(a, players, ShapeFamily::Squares);
    // Pieces stay in the widened box [0, 2] x [0, 1].
    for (const auto& piece : a.pieces) {
        REQUIRE(piece.has_value());
        CHECK(rect_contains(Rect::of(Rat(0), Rat(0), Rat(2), Rat(1)), *piece));
    }

    CHECK_THROWS_AS(divide_3walls(Rect::of(Rat(0), Rat(0), Rat(2), Rat(1)), players),
                    PreconditionError);
}

TEST_CASE("staircase winner selection minimizes the taxicab score") {
    // Corner coordinates and sides chosen to give scores 87, 75, 79, 97:
    // the second corner's square wins.
    Staircase s = make_staircase(
        {{Rat(51), Rat(1)}, {Rat(41), Rat(11)}, {Rat(31), Rat(31)}, {Rat(1), Rat(51)}});
    std::vector<std::vector<StairBid>> bids{{{0, ExtRat(Rat(35))}},
                                            {{1, ExtRat(Rat(23))}},
                                            {{2, ExtRat(Rat(17))}},
                                            {{3, ExtRat(Rat(45))}}};
    auto sel = select_staircase_winner(s, bids);
    CHECK(sel.player_pos == 1);
    CHECK(sel.bid.corner == 1);

    // Ties break by player position, then corner index; infinite sides
    // lose to any finite bid.
    std::vector<std::vector<StairBid>> tied{{{1, ExtRat(Rat(23))}}, {{1, ExtRat(Rat(23))}}};
    CHECK(select_staircase_winner(s, tied).player_pos == 0);
    std::vector<std::vector<StairBid>> inf_vs_fin{{{0, ExtRat::pos_inf()}}, {{3, ExtRat(Rat(1))}}};
    CHECK(select_staircase_winner(s, inf_vs_fin).player_pos == 1);
}

TEST_CASE("staircase protocol meets 1/(2n-2+k)") {
    // One player on the quarter-plane: the single value-1 bid wins.
    Staircase qp = make_staircase({{Rat(0), Rat(0)}});
    auto p1 = uniform_players(1, unit_square());
    auto a1 = divide_staircase(qp, p1);
    REQUIRE(a1.pieces[0].has_value());
    CHECK(p1[0].measure.eval(Region(*a1.pieces[0])) == p1[0].measure.total());

    // Three uniform players on the quarter-plane: bound 1/5.
    auto players = uniform_players(3, unit_square());
    auto a = divide_staircase(qp, players);
    CHECK(a.bound_denominator == Rat(5));
    check_guarantee(a, players, ShapeFamily::Squares);

    // A 4-corner staircase with measures tucked into the region.
    Staircase s = make_staircase(
        {{Rat(50), Rat(0)}, {Rat(40), Rat(10)}, {Rat(30), Rat(30)}, {Rat(0), Rat(50)}});
    std::vector<PlayerSpec> far;
    far.push_back(honest_player(Measure({{Rect::of(Rat(50), Rat(0), Rat(60), Rat(10)), Rat(1)}})));
    far.push_back(honest_player(Measure({{Rect::of(Rat(0), Rat(50), Rat(10), Rat(60)), Rat(1)}})));
    far.push_back(honest_player(Measure({{Rect::of(Rat(40), Rat(10), Rat(50), Rat(30)), Rat(1)}})));
    auto a3 = divide_staircase(s, far);
    CHECK(a3.bound_denominator == Rat(2 * 3 - 2 + 4));
    check_guarantee(a3, far, ShapeFamily::Squares);
}

TEST_CASE("half-plane protocol: west quarter then staircase") {
    // Both uniform on a box in the upper half-plane: each at least 1/2.
    Rect box = Rect::of(Rat(-1), Rat(0), Rat(1), Rat(1));
    auto players = uniform_players(2, box);
    auto a = divide_halfplane(players);
    CHECK(a.bound_denominator == Rat(2));
    check_guarantee(a, players, ShapeFamily::Squares);

    // A player with all value far west wins the west quarter-plane intact.
    std::vector<PlayerSpec> two;
    two.push_back(honest_player(Measure({{Rect::of(Rat(-10), Rat(0), Rat(-9), Rat(1)), Rat(1)}})));
    two.push_back(honest_player(Measure({{Rect::of(Rat(5), Rat(0), Rat(6), Rat(1)), Rat(1)}})));
    auto aw = divide_halfplane(two);
    check_guarantee(aw, two, ShapeFamily::Squares);
    REQUIRE(aw.pieces[0].has_value());
    // The west player's mark hits its target of 1 normalized unit exactly:
    // half of its total at the 2n-2 = 2 threshold.
    CHECK(two[0].measure.eval(Region(*aw.pieces[0])) * 2 == two[0].measure.total());
    CHECK(!aw.pieces[0]->x0.finite());

    auto p4 = uniform_players(4, box);
    auto a4 = divide_halfplane(p4);
    CHECK(a4.bound_denominator == Rat(6));
    check_guarantee(a4, p4, ShapeFamily::Squares);

    CHECK_THROWS_AS(divide_halfplane(uniform_players(1, box)), UnsupportedPlayerCount);
}

TEST_CASE("plane protocol splits into two half-planes") {
    // Four players with far-apart supports each keep 1/4 of their value.
    std::vector<PlayerSpec> apart;
    for (int i = 0; i < 4; ++i) {
        Rat cx(20 * i), cy(i % 2 == 0 ? -30 : 25);
        apart.push_back(
            honest_player(Measure({{Rect::of(cx, cy, cx + 1, cy + 1), Rat(1)}})));
    }
    auto a = divide_plane(apart);
    CHECK(a.bound_denominator == Rat(4));
    check_guarantee(a, apart, ShapeFamily::Squares);

    // Identical measures.
    auto same = uniform_players(4, Rect::of(Rat(-2), Rat(-2), Rat(2), Rat(2)));
    check_guarantee(divide_plane(same), same, ShapeFamily::Squares);

    CHECK_THROWS_AS(divide_plane(uniform_players(3, unit_square())), UnsupportedPlayerCount);
}

TEST_CASE("west-strip recursion on rectangles") {
    Rect cake = unit_square();
    auto p2 = uniform_players(2, cake);
    auto a2 = divide_rectangle_1d(cake, p2);
    CHECK(*a2.pieces[0] == Rect::of(Rat(0), Rat(0), make_rat(1, 2), Rat(1)));
    CHECK(*a2.pieces[1] == Rect::of(make_rat(1, 2), Rat(0), Rat(1), Rat(1)));

    auto p3 = uniform_players(3, cake);
    auto a3 = divide_rectangle_1d(cake, p3);
    for (const auto& piece : a3.pieces) CHECK(area(*piece) == make_rat(1, 3));

    // A player whose value sits in a thin west strip takes half of it.
    std::vector<PlayerSpec> mixed;
    mixed.push_back(honest_player(Measure({{Rect::of(Rat(0), Rat(0), make_rat(1, 4), Rat(1)), Rat(4)}})));
    mixed.push_back(honest_player(Measure({{cake, Rat(1)}})));
    auto am = divide_rectangle_1d(cake, mixed);
    REQUIRE(am.pieces[0].has_value());
    CHECK(*am.pieces[0] == Rect::of(Rat(0), Rat(0), make_rat(1, 8), Rat(1)));
    CHECK(mixed[0].measure.eval(Region(*am.pieces[0])) * 2 == mixed[0].measure.total());
    check_guarantee(am, mixed, ShapeFamily::Rectangles);
}

TEST_CASE("archipelago: island evaluation then west-strip recursion") {
    std::vector<Rect> islands{Rect::of(Rat(0), Rat(0), Rat(1), Rat(1)),
                              Rect::of(Rat(2), Rat(0), Rat(3), Rat(1))};
    Measure everywhere({{islands[0], Rat(1)}, {islands[1], Rat(1)}});
    std::vector<PlayerSpec> players{honest_player(everywhere), honest_player(everywhere)};
    auto a = divide_archipelago(islands, players);
    CHECK(a.bound_denominator == Rat(3));
    check_guarantee(a, players, ShapeFamily::Rectangles);

    // Players caring about different islands get their own island's value.
    std::vector<PlayerSpec> split;
    split.push_back(honest_player(Measure({{islands[0], Rat(1)}})));
    split.push_back(honest_player(Measure({{islands[1], Rat(1)}})));
    auto as = divide_archipelago(islands, split);
    for (int i = 0; i < 2; ++i)
        CHECK(split[i].measure.eval(Region(*as.pieces[i])) == split[i].measure.total());
}

TEST_CASE("two-player square puzzle") {
    auto players = uniform_players(2, unit_square());
    auto a = divide_two_player_square(unit_square(), players);
    VerifyReport rep = verify_allocation(a, players, make_rat(1, 4), ShapeFamily::Squares);
    CHECK(rep.pass);
    // With identical uniform measures at least one share is exactly 1/4.
    CHECK((rep.proportions[0] == make_rat(1, 4) || rep.proportions[1] == make_rat(1, 4)));

    // Opposite-corner supports: the winner settles for exactly 1/4 of its
    // value, the loser recovers its whole mass from the cover square.
    std::vector<PlayerSpec> corners;
    corners.push_back(
        honest_player(Measure({{Rect::of(Rat(0), Rat(0), make_rat(1, 8), make_rat(1, 8)), Rat(64)}})));
    corners.push_back(
        honest_player(Measure({{Rect::of(make_rat(7, 8), make_rat(7, 8), Rat(1), Rat(1)), Rat(64)}})));
    auto ac = divide_two_player_square(unit_square(), corners);
    VerifyReport rc = verify_allocation(ac, corners, make_rat(1, 4), ShapeFamily::Squares);
    CHECK(rc.pass);
    CHECK(rc.proportions[0] == make_rat(1, 4));
    CHECK(rc.proportions[1] == Rat(1));

    CHECK_THROWS_AS(divide_two_player_square(unit_square(), uniform_players(3, unit_square())),
                    UnsupportedPlayerCount);
}

TEST_CASE("transcripts are deterministic and scale-invariant") {
    Rng rng(404);
    Rect cake = unit_square();
    for (int iter = 0; iter < 10; ++iter) {
        std::vector<PlayerSpec> players;
        for (int i = 0; i < 3; ++i)
            players.push_back(honest_player(random_measure(rng, Region(cake), cake)));
        auto a1 = divide_square_to_squares(cake, players);
        auto a2 = divide_square_to_squares(cake, players);
        CHECK(a1.transcript.dump() == a2.transcript.dump());

        // Scaling one player's measure must not change any decision.
        auto scaled = players;
        scaled[1].measure = scaled[1].measure.scaled(Rat(7));
        auto a3 = divide_square_to_squares(cake, scaled);
        CHECK(a1.transcript.dump() == a3.transcript.dump());
    }
}

TEST_CASE("degenerate zero-value players cannot break anyone's guarantee") {
    std::vector<PlayerSpec> players = uniform_players(2, unit_square());
    players.push_back(honest_player(Measure({{unit_square(), Rat(0)}})));
    auto a = divide_square_to_squares(unit_square(), players);
    VerifyReport rep = verify_allocation(a, players, Rat(1) / a.bound_denominator,
                                         ShapeFamily::Squares);
    CHECK(rep.pass);
    CHECK(rep.vacuous[2]);
}

TEST_CASE("all-adversarial runs complete with valid structure") {
    Rng rng(909);
    Rect cake = unit_square();
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        auto players = random_players(rng, Region(cake), cake, 2 + (int)(seed % 3), 0);
        for (auto kind : {ProtocolKind::SquareToSquares, ProtocolKind::FourWalls,
                          ProtocolKind::TwoFat, ProtocolKind::Rectangle1D,
                          ProtocolKind::ThreeWalls}) {
            Allocation a;
            switch (kind) {
                case ProtocolKind::SquareToSquares:
                    a = divide_square_to_squares(cake, players);
                    break;
                case ProtocolKind::FourWalls: a = divide_4walls(cake, players); break;
                case ProtocolKind::TwoFat: a = divide_2fat(cake, players); break;
                case ProtocolKind::ThreeWalls: a = divide_3walls(cake, players); break;
                default: a = divide_rectangle_1d(cake, players); break;
            }
            // No honest guarantees at stake, but the allocation must stay
            // structurally sound and every player must receive a piece.
            VerifyReport rep = verify_allocation(a, players, Rat(0), protocol_shape_family(kind));
            CHECK(rep.structure_ok);
            CHECK(rep.shapes_ok);
            for (const auto& piece : a.pieces) CHECK(piece.has_value());
        }
        Staircase qp = make_staircase({{Rat(0), Rat(0)}});
        auto sp = random_players(rng, Region(qp), cake, 3, 0);
        auto sa = divide_staircase(qp, sp);
        CHECK(verify_allocation(sa, sp, Rat(0), ShapeFamily::Squares).structure_ok);
    }
}

TEST_CASE("one honest player among adversaries keeps the bound") {
    Rng rng(11);
    Rect cake = unit_square();
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        for (int n : {2, 4}) {
            std::vector<PlayerSpec> players;
            for (int i = 0; i < n; ++i) {
                PlayerSpec p;
                p.honest = i == static_cast<int>(seed % n);
                p.seed = seed * 1000 + i;
                p.measure = random_measure(rng, Region(cake), cake);
                players.push_back(std::move(p));
            }
            for (auto kind : {ProtocolKind::SquareToSquares, ProtocolKind::FourWalls,
                              ProtocolKind::TwoFat, ProtocolKind::Rectangle1D}) {
                Allocation a;
                switch (kind) {
                    case ProtocolKind::SquareToSquares:
                        a = divide_square_to_squares(cake, players);
                        break;
                    case ProtocolKind::FourWalls: a = divide_4walls(cake, players); break;
                    case ProtocolKind::TwoFat: a = divide_2fat(cake, players); break;
                    default: a = divide_rectangle_1d(cake, players); break;
                }
                VerifyReport rep = verify_allocation(a, players, Rat(1) / a.bound_denominator,
                                                     protocol_shape_family(kind));
                CHECK(rep.pass);
            }
        }
    }
}
