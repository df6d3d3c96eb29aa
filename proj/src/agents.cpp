#include "fairsquare/agents.hpp"

#include <algorithm>
#include <cassert>

namespace fairsq {

const char* stage_name(Stage s) {
    switch (s) {
        case Stage::SquareQuarterEval: return "square_quarter_eval";
        case Stage::SquareLShapeBid: return "square_lshape_bid";
        case Stage::SquareWinnerSelect: return "square_winner_select";
        case Stage::TwoFatHalvesEval: return "two_fat_halves_eval";
        case Stage::TwoFatEastMark: return "two_fat_east_mark";
        case Stage::TwoFatFarWestEval: return "two_fat_far_west_eval";
        case Stage::TwoFatLShapeBid: return "two_fat_lshape_bid";
        case Stage::TwoFatChoice: return "two_fat_choice";
        case Stage::FourWallsHalvesEval: return "four_walls_halves_eval";
        case Stage::FourWallsEastMark: return "four_walls_east_mark";
        case Stage::FourWallsFarWestEval: return "four_walls_far_west_eval";
        case Stage::FourWallsLShapeBid: return "four_walls_lshape_bid";
        case Stage::FourWallsChoice: return "four_walls_choice";
        case Stage::FourWallsSquareSelect: return "four_walls_square_select";
        case Stage::ThreeWallsEastMark: return "three_walls_east_mark";
        case Stage::ThreeWallsFarWestEval: return "three_walls_far_west_eval";
        case Stage::ThreeWallsLShapeBid: return "three_walls_lshape_bid";
        case Stage::ThreeWallsChoice: return "three_walls_choice";
        case Stage::Rect1DMark: return "rect1d_mark";
        case Stage::ArchipelagoEval: return "archipelago_eval";
        case Stage::StaircaseBids: return "staircase_bids";
        case Stage::HalfPlaneMark: return "halfplane_mark";
        case Stage::PlaneMark: return "plane_mark";
        case Stage::TwoPlayerBid: return "two_player_bid";
        case Stage::TwoPlayerLoserSelect: return "two_player_loser_select";
    }
    return "unknown";
}

CornerRef corner_from_index(int idx) {
    switch (idx & 3) {
        case 0: return {0, 0};
        case 1: return {1, 0};
        case 2: return {0, 1};
        default: return {1, 1};
    }
}

namespace {

// Honest eval rule: P_j = n above the high threshold, 0 below the low one,
// otherwise floor((V_j + add) / div).
struct EvalRule {
    Rat high_slack;  // P_j = n when V_j > V(C) - high_slack
    Rat low;         // P_j = 0 when V_j < low
    long add = 0, div = 1;
};

EvalRule eval_rule(Stage s) {
    switch (s) {
        case Stage::SquareQuarterEval: return {Rat(3), Rat(1), 8, 6};
        case Stage::TwoFatHalvesEval: return {Rat(1), Rat(1), 5, 4};
        case Stage::TwoFatFarWestEval: return {Rat(2), Rat(1), 5, 4};
        case Stage::FourWallsHalvesEval: return {Rat(2), Rat(2), 4, 4};
        case Stage::FourWallsFarWestEval: return {Rat(3), Rat(1), 5, 4};
        case Stage::ThreeWallsFarWestEval: return {Rat(2), Rat(1), 5, 4};
        default: throw InvalidParameter("no eval rule for stage");
    }
}

// L-shape bid budgets: the complementary L-shape is bid at this value, the
// corner square at V(C) minus it.
Rat lshape_budget(Stage s) {
    switch (s) {
        case Stage::SquareLShapeBid: return Rat(3);
        case Stage::TwoFatLShapeBid: return Rat(2);
        case Stage::FourWallsLShapeBid: return Rat(3);
        case Stage::ThreeWallsLShapeBid: return Rat(2);
        default: throw InvalidParameter("no L-shape budget for stage");
    }
}

Rat choice_threshold(Stage s) {
    switch (s) {
        case Stage::TwoFatChoice: return Rat(1);
        case Stage::FourWallsChoice: return Rat(2);
        case Stage::ThreeWallsChoice: return Rat(1);
        default: throw InvalidParameter("no choice threshold for stage");
    }
}

std::pair<int, int> inward_orientation(CornerRef c) {
    return {c.cx == 0 ? +1 : -1, c.cy == 0 ? +1 : -1};
}

#ifndef NDEBUG
// Debug-mode bookkeeping audit: whenever an honest player reaches a
// recursion level, its value of the current cake must still meet that
// level's entry threshold (up to the mark-rounding slack).
Rat stage_entry_threshold(Stage s, int n) {
    switch (s) {
        case Stage::SquareQuarterEval:
        case Stage::SquareLShapeBid: return rat_max(Rat(1), Rat(6L * n - 8));
        case Stage::TwoFatHalvesEval:
        case Stage::TwoFatEastMark:
        case Stage::TwoFatFarWestEval:
        case Stage::TwoFatLShapeBid:
        case Stage::ThreeWallsEastMark:
        case Stage::ThreeWallsFarWestEval:
        case Stage::ThreeWallsLShapeBid: return rat_max(Rat(1), Rat(4L * n - 5));
        case Stage::FourWallsHalvesEval:
        case Stage::FourWallsEastMark:
        case Stage::FourWallsFarWestEval:
        case Stage::FourWallsLShapeBid: return rat_max(Rat(2), Rat(4L * n - 4));
        default: return Rat(0);
    }
}

void audit_entry_value(Stage s, int n, const Measure& m, const Rect& cake) {
    if (m.total() == 0) return;  // degenerate players are exempt
    Rat slack(Int(1), Int(1) << 32);
    slack.canonicalize();
    assert(m.eval(Region(cake)) >= stage_entry_threshold(s, n) - slack);
}
#endif

}  // namespace

std::vector<long> HonestAgent::eval_rooms(const EvalQuery& q) {
#ifndef NDEBUG
    if (q.stage != Stage::ArchipelagoEval) audit_entry_value(q.stage, q.n, m_, q.cake);
#endif
    const std::size_t m = q.rooms.size();
    std::vector<Rat> vals(m);
    for (std::size_t j = 0; j < m; ++j) vals[j] = m_.eval(Region(q.rooms[j]));
    std::vector<long> p(m, 0);

    if (q.stage == Stage::ArchipelagoEval) {
        const Rat total = m_.eval(Region(q.cake));
        if (total > 0) {
            const long coef = q.n + static_cast<long>(m) - 1;
            for (std::size_t j = 0; j < m; ++j) p[j] = rat_floor_long(vals[j] / total * coef);
        }
    } else {
        const EvalRule rule = eval_rule(q.stage);
        const Rat total = m_.eval(Region(q.cake));
        for (std::size_t j = 0; j < m; ++j) {
            if (vals[j] > total - rule.high_slack)
                p[j] = q.n;
            else if (vals[j] < rule.low)
                p[j] = 0;
            else
                p[j] = rat_floor_long((vals[j] + rule.add) / rule.div);
        }
    }

    // The strategies above provably sum to >= n whenever the protocol's
    // entry threshold holds; the bump only fires for degenerate
    // (zero-value) players, whose guarantee is vacuous.
    long sum = 0;
    for (long x : p) sum += x;
    if (sum < q.n) {
        std::size_t best = 0;
        for (std::size_t j = 1; j < m; ++j)
            if (vals[j] > vals[best]) best = j;
        p[best] += q.n - sum;
    }
    return p;
}

Rat HonestAgent::cut_mark(const CutMarkQuery& q) {
    Rat target;
    switch (q.stage) {
        case Stage::Rect1DMark: target = m_.eval(Region(q.cake)) / q.n; break;
        case Stage::TwoFatEastMark: target = 1; break;
        case Stage::FourWallsEastMark: target = 2; break;
        case Stage::ThreeWallsEastMark: target = 1; break;
        case Stage::HalfPlaneMark: target = 1; break;
        case Stage::PlaneMark: target = 2; break;
        default: throw InvalidParameter("no cut target for stage");
    }
    MarkDir dir;
    if (q.axis == 0)
        dir = q.keep_low ? MarkDir::West : MarkDir::East;
    else
        dir = q.keep_low ? MarkDir::South : MarkDir::North;
    Rat c;
    try {
        c = mark_vertical(m_, q.cake, target, dir);
    } catch (const TargetExceedsValue&) {
        // Degenerate player; bid the largest piece available.
        return q.keep_low ? q.hi : q.lo;
    }
    if (c < q.lo) c = q.lo;
    if (c > q.hi) c = q.hi;
    return c;
}

Rat HonestAgent::corner_bid(const CornerBidQuery& q) {
#ifndef NDEBUG
    audit_entry_value(q.stage, q.n, m_, q.cake);
#endif
    const Rat total = m_.eval(Region(q.cake));
    const Rat budget = total - lshape_budget(q.stage);
    if (!(budget > 0)) return q.max_side / 2;
    auto [ox, oy] = inward_orientation(q.corner);
    auto [px, py] = corner_point(q.cake, q.corner);
    try {
        // Round the square down so the L-shape keeps at least its budget.
        auto res = mark_corner_square(m_, px, py, ox, oy, budget, RoundMode::Down);
        Rat side = res.side.value();
        if (side > q.max_side) side = q.max_side;
        if (!(side > 0)) side = q.max_side / 2;
        return side;
    } catch (const InsufficientValue&) {
        return q.max_side / 2;
    }
}

std::vector<StairBid> HonestAgent::staircase_bids(const StaircaseBidsQuery& q) {
    std::vector<StairBid> bids;
    for (std::size_t j = 0; j < q.corners.size(); ++j) {
        const auto& [cx, cy] = q.corners[j];
        try {
            auto res = mark_corner_square(m_, cx, cy, +1, +1, Rat(1), RoundMode::Up);
            bids.push_back({static_cast<int>(j), res.side});
        } catch (const InsufficientValue&) {
            // No square drawn at corners whose quarter holds less than 1.
        }
    }
    if (!bids.empty()) return bids;

    // Best-effort bid when no corner reaches value 1 (degenerate players).
    std::size_t best = 0;
    Rat best_val(-1);
    for (std::size_t j = 0; j < q.corners.size(); ++j) {
        Rect quarter(ExtRat(q.corners[j].first), ExtRat(q.corners[j].second), ExtRat::pos_inf(),
                     ExtRat::pos_inf());
        Rat val = m_.eval(Region(quarter));
        if (val > best_val) {
            best_val = val;
            best = j;
        }
    }
    if (best_val > 0) {
        auto res = mark_corner_square(m_, q.corners[best].first, q.corners[best].second, +1, +1,
                                      best_val, RoundMode::Up);
        bids.push_back({static_cast<int>(best), res.side});
    } else {
        bids.push_back({0, ExtRat(Rat(1))});
    }
    return bids;
}

int HonestAgent::choose_east_north(const ChoiceQuery& q) {
    return m_.eval(Region(q.east)) >= choice_threshold(q.stage) ? 0 : 1;
}

Rect HonestAgent::select_square(const SelectSquareQuery& q) {
    std::vector<Rect> candidates;
    if (q.kind == SelectSquareQuery::Box) {
        if (is_square(q.outer)) {
            candidates.push_back(q.outer);
        } else {
            auto two = two_square_cover(q.outer);
            candidates.assign(two.begin(), two.end());
        }
    } else {
        const Rat side = q.outer.width();
        if (2 * q.notch <= side) {
            auto three = l_cover_squares(q.outer, q.corner, q.notch);
            candidates.assign(three.begin(), three.end());
        } else {
            // Thin L (adversarial winner); fall back to the largest square
            // in one arm of the L.
            CornerRef off{1 - q.corner.cx, q.corner.cy};
            candidates.push_back(corner_square(q.outer, off, side - q.notch));
        }
    }
    std::size_t best = 0;
    Rat best_val = m_.eval(Region(candidates[0]));
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        Rat val = m_.eval(Region(candidates[i]));
        if (val > best_val) {
            best_val = val;
            best = i;
        }
    }
    return candidates[best];
}

TwoPlayerBid HonestAgent::two_player_bid(const TwoPlayerBidQuery& q) {
    const Rat total = m_.eval(Region(q.cake));
    const Rat half_side = q.cake.width() / 2;
    if (!(total > 0)) return {0, half_side};
    // Pick a quarter worth at least 1/4 of the cake (the max always is),
    // then shrink it towards its corner to value exactly total/4.
    int best = 0;
    Rat best_val(-1);
    for (int idx = 0; idx < 4; ++idx) {
        CornerRef c = corner_from_index(idx);
        Rat val = m_.eval(Region(corner_square(q.cake, c, half_side)));
        if (val > best_val) {
            best_val = val;
            best = idx;
        }
    }
    CornerRef c = corner_from_index(best);
    auto [ox, oy] = inward_orientation(c);
    auto [px, py] = corner_point(q.cake, c);
    auto res = mark_corner_square(m_, px, py, ox, oy, total / 4, RoundMode::Up);
    Rat side = res.side.value();
    if (side > half_side) side = half_side;  // quarter already holds total/4
    return {best, side};
}

// --- adversarial agent -----------------------------------------------------

namespace {

struct SplitMix {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }
};

std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

struct Fingerprint {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    void add(const std::string& s) { h = fnv1a(h, s); }
    void add(long v) { add(std::to_string(v)); }
    void add(const Rat& r) { add(rat_str(r)); }
    void add(const ExtRat& e) { add(e.inf == 0 ? rat_str(e.v) : (e.inf > 0 ? "inf" : "-inf")); }
    void add(const Rect& r) {
        add(r.x0);
        add(r.y0);
        add(r.x1);
        add(r.y1);
    }
};

// Rationals sampled on a 1/4096 grid keep everything exact.
Rat sample_unit(SplitMix& rng, bool allow_zero) {
    std::uint64_t k = allow_zero ? rng.below(4097) : 1 + rng.below(4096);
    return make_rat(static_cast<long>(k), 4096);
}

}  // namespace

std::vector<long> AdversarialAgent::eval_rooms(const EvalQuery& q) {
    Fingerprint fp;
    fp.add("eval");
    fp.add(static_cast<long>(q.stage));
    fp.add(q.n);
    fp.add(q.cake);
    for (const auto& r : q.rooms) fp.add(r);
    SplitMix rng{seed_ ^ fp.h};
    const std::size_t m = q.rooms.size();
    std::vector<long> p(m);
    long sum = 0;
    for (auto& x : p) {
        x = static_cast<long>(rng.below(static_cast<std::uint64_t>(q.n) + 1));
        sum += x;
    }
    while (sum < q.n) {
        p[rng.below(m)] += 1;
        ++sum;
    }
    return p;
}

Rat AdversarialAgent::cut_mark(const CutMarkQuery& q) {
    Fingerprint fp;
    fp.add("cut");
    fp.add(static_cast<long>(q.stage));
    fp.add(q.n);
    fp.add(q.cake);
    fp.add(q.axis);
    fp.add(q.keep_low ? 1 : 0);
    fp.add(q.lo);
    fp.add(q.hi);
    SplitMix rng{seed_ ^ fp.h};
    return q.lo + (q.hi - q.lo) * sample_unit(rng, true);
}

Rat AdversarialAgent::corner_bid(const CornerBidQuery& q) {
    Fingerprint fp;
    fp.add("corner");
    fp.add(static_cast<long>(q.stage));
    fp.add(q.n);
    fp.add(q.cake);
    fp.add(q.corner.cx);
    fp.add(q.corner.cy);
    fp.add(q.max_side);
    SplitMix rng{seed_ ^ fp.h};
    return q.max_side * sample_unit(rng, false);
}

std::vector<StairBid> AdversarialAgent::staircase_bids(const StaircaseBidsQuery& q) {
    Fingerprint fp;
    fp.add("stair");
    fp.add(q.n);
    for (const auto& [x, y] : q.corners) {
        fp.add(x);
        fp.add(y);
    }
    fp.add(q.scale_hint);
    SplitMix rng{seed_ ^ fp.h};
    std::vector<StairBid> bids;
    for (std::size_t j = 0; j < q.corners.size(); ++j) {
        if (rng.below(2) == 0) continue;
        bids.push_back({static_cast<int>(j), ExtRat(q.scale_hint * sample_unit(rng, false))});
    }
    if (bids.empty()) {
        int j = static_cast<int>(rng.below(q.corners.size()));
        bids.push_back({j, ExtRat(q.scale_hint * sample_unit(rng, false))});
    }
    return bids;
}

int AdversarialAgent::choose_east_north(const ChoiceQuery& q) {
    Fingerprint fp;
    fp.add("choice");
    fp.add(static_cast<long>(q.stage));
    fp.add(q.east);
    fp.add(q.north);
    SplitMix rng{seed_ ^ fp.h};
    return static_cast<int>(rng.below(2));
}

Rect AdversarialAgent::select_square(const SelectSquareQuery& q) {
    Fingerprint fp;
    fp.add("select");
    fp.add(static_cast<long>(q.stage));
    fp.add(q.outer);
    fp.add(q.kind == SelectSquareQuery::LShape ? 1 : 0);
    if (q.kind == SelectSquareQuery::LShape) {
        fp.add(q.corner.cx);
        fp.add(q.corner.cy);
        fp.add(q.notch);
    }
    SplitMix rng{seed_ ^ fp.h};

    Rect zone = q.outer;
    if (q.kind == SelectSquareQuery::LShape) {
        // Random square in one of the two arm slabs of the L.
        bool along_x = rng.below(2) == 0;
        if (along_x) {
            zone = Rect::of(q.corner.cx == 0 ? q.outer.x0.value() + q.notch : q.outer.x0.value(),
                            q.outer.y0.value(),
                            q.corner.cx == 0 ? q.outer.x1.value() : q.outer.x1.value() - q.notch,
                            q.outer.y1.value());
        } else {
            zone = Rect::of(q.outer.x0.value(),
                            q.corner.cy == 0 ? q.outer.y0.value() + q.notch : q.outer.y0.value(),
                            q.outer.x1.value(),
                            q.corner.cy == 0 ? q.outer.y1.value() : q.outer.y1.value() - q.notch);
        }
    }
    Rat max_side = std::min(zone.width(), zone.height(), [](const Rat& a, const Rat& b) { return a < b; });
    Rat side = max_side * sample_unit(rng, false);
    Rat px = zone.x0.value() + (zone.width() - side) * sample_unit(rng, true);
    Rat py = zone.y0.value() + (zone.height() - side) * sample_unit(rng, true);
    return Rect::of(px, py, px + side, py + side);
}

TwoPlayerBid AdversarialAgent::two_player_bid(const TwoPlayerBidQuery& q) {
    Fingerprint fp;
    fp.add("two_player");
    fp.add(q.cake);
    SplitMix rng{seed_ ^ fp.h};
    int corner = static_cast<int>(rng.below(4));
    return {corner, q.cake.width() * sample_unit(rng, false)};
}

}  // namespace fairsq
