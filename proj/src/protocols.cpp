#include "fairsquare/protocols.hpp"

#include <algorithm>
#include <cassert>
#include <memory>

namespace fairsq {

std::vector<std::vector<int>> partition_to_rooms(const std::vector<std::vector<long>>& partners) {
    const int n = static_cast<int>(partners.size());
    if (n == 0) return {};
    const std::size_t m = partners[0].size();
    for (int i = 0; i < n; ++i) {
        if (partners[i].size() != m) throw InvalidParameter("ragged partner matrix");
        long sum = 0;
        for (long p : partners[i]) {
            if (p < 0) throw ProtocolRuleViolation(i, "negative partner count");
            sum += p;
        }
        if (sum < n) throw ProtocolRuleViolation(i, "partner counts sum below player count");
    }

    std::vector<std::vector<int>> groups(m);
    std::vector<int> remaining(n);
    for (int i = 0; i < n; ++i) remaining[i] = i;
    for (std::size_t room = m; room-- > 0;) {
        std::vector<int> order = remaining;
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return partners[a][room] > partners[b][room];
        });
        std::vector<int>& g = groups[room];
        for (int i : order) {
            if (partners[i][room] > static_cast<long>(g.size()))
                g.push_back(i);
            else
                break;
        }
        std::vector<int> rest;
        for (int i : remaining)
            if (std::find(g.begin(), g.end(), i) == g.end()) rest.push_back(i);
        remaining = std::move(rest);
        std::sort(g.begin(), g.end());
    }
    assert(remaining.empty());
    for (std::size_t j = 0; j < m; ++j)
        for (int i : groups[j]) {
            (void)i;
            assert(partners[i][j] >= static_cast<long>(groups[j].size()));
        }
    return groups;
}

const char* protocol_name(ProtocolKind k) {
    switch (k) {
        case ProtocolKind::SquareToSquares: return "square_to_squares";
        case ProtocolKind::TwoFat: return "two_fat";
        case ProtocolKind::FourWalls: return "four_walls";
        case ProtocolKind::ThreeWalls: return "three_walls";
        case ProtocolKind::StaircaseDivision: return "staircase";
        case ProtocolKind::HalfPlane: return "halfplane";
        case ProtocolKind::Plane: return "plane";
        case ProtocolKind::Rectangle1D: return "rectangle1d";
        case ProtocolKind::Archipelago: return "archipelago";
        case ProtocolKind::TwoPlayerSquare: return "two_player_square";
    }
    return "unknown";
}

std::optional<ProtocolKind> protocol_from_name(const std::string& name) {
    for (ProtocolKind k :
         {ProtocolKind::SquareToSquares, ProtocolKind::TwoFat, ProtocolKind::FourWalls,
          ProtocolKind::ThreeWalls, ProtocolKind::StaircaseDivision, ProtocolKind::HalfPlane,
          ProtocolKind::Plane, ProtocolKind::Rectangle1D, ProtocolKind::Archipelago,
          ProtocolKind::TwoPlayerSquare}) {
        if (name == protocol_name(k)) return k;
    }
    return std::nullopt;
}

ShapeFamily protocol_shape_family(ProtocolKind k) {
    switch (k) {
        case ProtocolKind::TwoFat: return ShapeFamily::TwoFatRects;
        case ProtocolKind::Rectangle1D:
        case ProtocolKind::Archipelago: return ShapeFamily::Rectangles;
        default: return ShapeFamily::Squares;
    }
}

const char* shape_family_name(ShapeFamily f) {
    switch (f) {
        case ShapeFamily::Squares: return "squares";
        case ShapeFamily::TwoFatRects: return "2fat";
        case ShapeFamily::Rectangles: return "rectangles";
    }
    return "unknown";
}

std::optional<ShapeFamily> shape_family_from_name(const std::string& name) {
    if (name == "squares") return ShapeFamily::Squares;
    if (name == "2fat") return ShapeFamily::TwoFatRects;
    if (name == "rectangles") return ShapeFamily::Rectangles;
    return std::nullopt;
}

StairSelection select_staircase_winner(const Staircase& s,
                                        const std::vector<std::vector<StairBid>>& bids) {
    StairSelection sel;
    for (std::size_t i = 0; i < bids.size(); ++i) {
        for (const auto& b : bids[i]) {
            if (sel.player_pos < 0) {
                sel.player_pos = static_cast<int>(i);
                sel.bid = b;
                continue;
            }
            if (!b.side.finite()) continue;
            if (!sel.bid.side.finite()) {
                sel.player_pos = static_cast<int>(i);
                sel.bid = b;
                continue;
            }
            const auto& [bx, by] = s.corners[b.corner];
            const auto& [wx, wy] = s.corners[sel.bid.corner];
            Rat tb = bx + by + b.side.value();
            Rat tw = wx + wy + sel.bid.side.value();
            if (tb < tw) {
                sel.player_pos = static_cast<int>(i);
                sel.bid = b;
            }
        }
    }
    if (sel.player_pos < 0) throw InvalidParameter("no staircase bids to select from");
    return sel;
}

Rat guarantee_denominator(ProtocolKind kind, int n, int staircase_corners, int islands) {
    auto at_least = [](long a, long b) { return Rat(std::max(a, b)); };
    switch (kind) {
        case ProtocolKind::SquareToSquares: return at_least(1, 6L * n - 8);
        case ProtocolKind::TwoFat: return at_least(1, 4L * n - 5);
        case ProtocolKind::FourWalls: return at_least(2, 4L * n - 4);
        case ProtocolKind::ThreeWalls: return at_least(1, 4L * n - 5);
        case ProtocolKind::StaircaseDivision: return Rat(2L * n - 2 + staircase_corners);
        case ProtocolKind::HalfPlane: return Rat(2L * n - 2);
        case ProtocolKind::Plane: return Rat(2L * n - 4);
        case ProtocolKind::Rectangle1D: return Rat(n);
        case ProtocolKind::Archipelago: return Rat(n + islands - 1);
        case ProtocolKind::TwoPlayerSquare: return Rat(4);
    }
    throw InvalidParameter("unknown protocol");
}

// --- query panel -------------------------------------------------------

namespace {

Json rooms_to_json(const std::vector<Rect>& rooms) {
    Json out = Json::array();
    for (const auto& r : rooms) out.push_back(rect_to_json(r));
    return out;
}

Json players_to_json(const std::vector<int>& players) {
    Json out = Json::array();
    for (int p : players) out.push_back(p);
    return out;
}

// Runs queries against the agents: maps, validates, repairs non-compliant
// answers (forfeit semantics) and records everything.
class Panel {
public:
    Panel(std::vector<std::unique_ptr<Agent>> agents, bool strict)
        : agents_(std::move(agents)), strict_(strict), violated_(agents_.size(), false) {
        transcript_ = Json::array();
    }

    Json take_transcript() { return std::move(transcript_); }
    const std::vector<bool>& violated() const { return violated_; }

    void decision(Json j) {
        j["type"] = "decision";
        transcript_.push_back(std::move(j));
    }

    std::vector<std::vector<long>> ask_eval(const EvalQuery& q, const std::vector<int>& players) {
        std::vector<std::vector<long>> answers;
        Json ans = Json::array();
        for (int p : players) {
            auto a = agents_[p]->eval_rooms(q);
            if (a.size() != q.rooms.size()) {
                flag(p, "partner vector of wrong length");
                a.assign(q.rooms.size(), 0);
            }
            long sum = 0;
            for (auto& x : a) {
                if (x < 0) {
                    flag(p, "negative partner count");
                    x = 0;
                }
                sum += x;
            }
            if (sum < q.n) {
                flag(p, "partner counts sum below n");
                a[0] += q.n - sum;
            }
            ans.push_back(a);
            answers.push_back(std::move(a));
        }
        transcript_.push_back(Json{{"type", "eval"},
                                   {"stage", stage_name(q.stage)},
                                   {"n", q.n},
                                   {"cake", rect_to_json(q.cake)},
                                   {"rooms", rooms_to_json(q.rooms)},
                                   {"players", players_to_json(players)},
                                   {"answers", ans}});
        return answers;
    }

    std::vector<Rat> ask_cut_marks(const CutMarkQuery& q, const std::vector<int>& players) {
        std::vector<Rat> marks;
        Json ans = Json::array();
        for (int p : players) {
            Rat c = agents_[p]->cut_mark(q);
            if (c < q.lo || c > q.hi) {
                flag(p, "cut mark outside the valid range");
                c = c < q.lo ? q.lo : q.hi;
            }
            ans.push_back(rat_str(c));
            marks.push_back(std::move(c));
        }
        transcript_.push_back(Json{{"type", "cut_mark"},
                                   {"stage", stage_name(q.stage)},
                                   {"n", q.n},
                                   {"cake", rect_to_json(q.cake)},
                                   {"axis", q.axis},
                                   {"keep_low", q.keep_low},
                                   {"lo", rat_str(q.lo)},
                                   {"hi", rat_str(q.hi)},
                                   {"players", players_to_json(players)},
                                   {"answers", ans}});
        return marks;
    }

    std::vector<Rat> ask_corner_bids(const CornerBidQuery& q, const std::vector<int>& players) {
        std::vector<Rat> sides;
        Json ans = Json::array();
        for (int p : players) {
            Rat s = agents_[p]->corner_bid(q);
            if (!(s > 0) || s > q.max_side) {
                flag(p, "corner square bid outside the quarter");
                s = q.max_side / 2;
            }
            ans.push_back(rat_str(s));
            sides.push_back(std::move(s));
        }
        transcript_.push_back(Json{{"type", "corner_bid"},
                                   {"stage", stage_name(q.stage)},
                                   {"n", q.n},
                                   {"cake", rect_to_json(q.cake)},
                                   {"corner", Json::array({q.corner.cx, q.corner.cy})},
                                   {"max_side", rat_str(q.max_side)},
                                   {"players", players_to_json(players)},
                                   {"answers", ans}});
        return sides;
    }

    std::vector<std::vector<StairBid>> ask_stair_bids(const StaircaseBidsQuery& q,
                                                      const std::vector<int>& players) {
        std::vector<std::vector<StairBid>> all;
        Json ans = Json::array();
        for (int p : players) {
            auto bids = agents_[p]->staircase_bids(q);
            std::vector<StairBid> good;
            for (const auto& b : bids) {
                if (b.corner < 0 || b.corner >= static_cast<int>(q.corners.size()) ||
                    !(b.side > ExtRat(Rat(0)))) {
                    flag(p, "invalid staircase corner bid");
                    continue;
                }
                good.push_back(b);
            }
            std::stable_sort(good.begin(), good.end(),
                             [](const StairBid& a, const StairBid& b) { return a.corner < b.corner; });
            good.erase(std::unique(good.begin(), good.end(),
                                   [](const StairBid& a, const StairBid& b) {
                                       return a.corner == b.corner;
                                   }),
                       good.end());
            if (good.empty()) {
                flag(p, "no staircase bid");
                good.push_back({0, ExtRat(q.scale_hint)});
            }
            Json row = Json::array();
            for (const auto& b : good)
                row.push_back(Json{{"corner", b.corner}, {"side", ext_to_json(b.side)}});
            ans.push_back(std::move(row));
            all.push_back(std::move(good));
        }
        Json corners = Json::array();
        for (const auto& [x, y] : q.corners) corners.push_back(Json::array({rat_str(x), rat_str(y)}));
        transcript_.push_back(Json{{"type", "staircase_bids"},
                                   {"n", q.n},
                                   {"corners", corners},
                                   {"players", players_to_json(players)},
                                   {"answers", ans}});
        return all;
    }

    int ask_choice(const ChoiceQuery& q, int player) {
        int c = agents_[player]->choose_east_north(q);
        if (c != 0 && c != 1) {
            flag(player, "invalid east/north choice");
            c = 0;
        }
        transcript_.push_back(Json{{"type", "choice"},
                                   {"stage", stage_name(q.stage)},
                                   {"east", rect_to_json(q.east)},
                                   {"north", rect_to_json(q.north)},
                                   {"player", player},
                                   {"answer", c == 0 ? "east" : "north"}});
        return c;
    }

    Rect ask_select_square(const SelectSquareQuery& q, int player) {
        Rect s = agents_[player]->select_square(q);
        if (!valid_selection(q, s)) {
            flag(player, "selected square outside the offered region");
            s = fallback_selection(q);
        }
        transcript_.push_back(Json{{"type", "select_square"},
                                   {"stage", stage_name(q.stage)},
                                   {"player", player},
                                   {"answer", rect_to_json(s)}});
        return s;
    }

    std::vector<TwoPlayerBid> ask_two_player(const TwoPlayerBidQuery& q,
                                             const std::vector<int>& players) {
        std::vector<TwoPlayerBid> bids;
        Json ans = Json::array();
        for (int p : players) {
            TwoPlayerBid b = agents_[p]->two_player_bid(q);
            if (b.corner < 0 || b.corner > 3 || !(b.side > 0) || b.side > q.cake.width()) {
                flag(p, "invalid corner square bid");
                b = {0, q.cake.width() / 2};
            }
            ans.push_back(Json{{"corner", b.corner}, {"side", rat_str(b.side)}});
            bids.push_back(std::move(b));
        }
        transcript_.push_back(Json{{"type", "two_player_bids"},
                                   {"cake", rect_to_json(q.cake)},
                                   {"players", players_to_json(players)},
                                   {"answers", ans}});
        return bids;
    }

private:
    bool valid_selection(const SelectSquareQuery& q, const Rect& s) const {
        if (!s.finite() || !is_square(s)) return false;
        if (!rect_contains(q.outer, s)) return false;
        if (q.kind == SelectSquareQuery::LShape) {
            Rect notch_sq = corner_square(q.outer, q.corner, q.notch);
            if (interiors_overlap(notch_sq, s)) return false;
        }
        return true;
    }

    Rect fallback_selection(const SelectSquareQuery& q) const {
        if (q.kind == SelectSquareQuery::Box) {
            if (is_square(q.outer)) return q.outer;
            return two_square_cover(q.outer)[0];
        }
        CornerRef off{1 - q.corner.cx, q.corner.cy};
        return corner_square(q.outer, off, q.outer.width() - q.notch);
    }

    void flag(int player, const char* what) {
        if (strict_) throw ProtocolRuleViolation(player, what);
        violated_[player] = true;
        transcript_.push_back(Json{{"type", "violation"}, {"player", player}, {"what", what}});
    }

    std::vector<std::unique_ptr<Agent>> agents_;
    bool strict_;
    std::vector<bool> violated_;
    Json transcript_;
};

struct Ctx {
    Panel& panel;
    std::vector<std::optional<Rect>>& pieces;
};

std::vector<int> without(const std::vector<int>& v, int drop_pos) {
    std::vector<int> out;
    out.reserve(v.size() - 1);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (static_cast<int>(i) != drop_pos) out.push_back(v[i]);
    return out;
}

std::vector<int> pick(const std::vector<int>& active, const std::vector<int>& positions) {
    std::vector<int> out;
    out.reserve(positions.size());
    for (int pos : positions) out.push_back(active[pos]);
    return out;
}

// Sub-rect obtained by replacing the extent on one axis.
Rect axis_slice(const Rect& r, int axis, const Rat& a, const Rat& b) {
    Rect out = r;
    out.lo(axis) = ExtRat(a);
    out.hi(axis) = ExtRat(b);
    return out;
}

// --- square to squares (guillotine, 6n-8) ------------------------------

std::array<Rect, 4> cake_quarters(const Rect& cake) {
    const Rat xm = cake.mid(0), ym = cake.mid(1);
    return {Rect(cake.x0, cake.y0, xm, ym), Rect(xm, cake.y0, cake.x1, ym),
            Rect(cake.x0, ym, xm, cake.y1), Rect(xm, ym, cake.x1, cake.y1)};
}

void recurse_square(Ctx& ctx, const Rect& cake, const std::vector<int>& active) {
    const int n = static_cast<int>(active.size());
    if (n == 0) return;
    if (n == 1) {
        ctx.pieces[active[0]] = cake;
        return;
    }
    auto q = cake_quarters(cake);
    EvalQuery eq{Stage::SquareQuarterEval, n, cake, {q.begin(), q.end()}};
    auto partners = ctx.panel.ask_eval(eq, active);
    auto groups = partition_to_rooms(partners);

    int full = -1;
    for (int j = 0; j < 4; ++j)
        if (static_cast<int>(groups[j].size()) == n) full = j;

    Json gj = Json::array();
    for (const auto& g : groups) gj.push_back(players_to_json(pick(active, g)));
    ctx.panel.decision(Json{{"what", "rooms"}, {"stage", stage_name(eq.stage)}, {"groups", gj}});

    if (full < 0) {
        for (int j = 0; j < 4; ++j) recurse_square(ctx, q[j], pick(active, groups[j]));
        return;
    }

    // All players share one quarter: L-shape mark at its outer corner.
    CornerRef corner = corner_from_index(full);
    CornerBidQuery bq{Stage::SquareLShapeBid, n, cake, corner, cake.width() / 2};
    auto sides = ctx.panel.ask_corner_bids(bq, active);
    int w = 0;
    for (int i = 1; i < n; ++i)
        if (sides[i] > sides[w]) w = i;  // largest square = smallest L-shape
    const Rat b = sides[w];
    Rect winner_square = corner_square(cake, corner, b);
    ctx.panel.decision(Json{{"what", "lshape_winner"},
                            {"player", active[w]},
                            {"corner_square", rect_to_json(winner_square)}});

    SelectSquareQuery sq{Stage::SquareWinnerSelect, n, SelectSquareQuery::LShape, cake, corner, b};
    ctx.pieces[active[w]] = ctx.panel.ask_select_square(sq, active[w]);
    recurse_square(ctx, winner_square, without(active, w));
}

// --- shared guillotine skeleton for the 2-fat and 4-walls flows --------

struct GuillotineHooks {
    Stage halves_eval, east_mark, far_west_eval, lshape_bid, choice;
    // Hands a 2-fat rect to a player; four-walls extracts a square from it.
    virtual Rect finalize_fat_piece(Ctx& ctx, const Rect& piece, int player, int n) const = 0;
    virtual void recurse(Ctx& ctx, const Rect& cake, const std::vector<int>& active) const = 0;
    // Divide a far-west half-square (or the leftover corner square) among a
    // group; 4-walls delegates to 3-walls with the given flow direction.
    virtual void divide_subsquare(Ctx& ctx, const Rect& square, int flow_axis, int flow_sign,
                                  const std::vector<int>& active) const = 0;
    virtual ~GuillotineHooks() = default;
};

void recurse_3walls(Ctx& ctx, const Rect& cake, int flow_axis, int flow_sign,
                    const std::vector<int>& active);

// One round of the halving algorithm; both the 2-fat and the 4-walls
// protocol follow this query sequence with different constants.
void recurse_halving(Ctx& ctx, const Rect& cake, const std::vector<int>& active,
                     const GuillotineHooks& hooks) {
    const int n = static_cast<int>(active.size());
    if (n == 0) return;
    if (n == 1) {
        ctx.pieces[active[0]] = hooks.finalize_fat_piece(ctx, cake, active[0], n);
        return;
    }
    const int A = cake.width() >= cake.height() ? 0 : 1;  // longer side
    const int B = 1 - A;
    const Rat H = cake.extent(B);
    const Rat midA = cake.mid(A);

    std::vector<Rect> halves{axis_slice(cake, A, cake.lo(A).value(), midA),
                             axis_slice(cake, A, midA, cake.hi(A).value())};
    auto partners = ctx.panel.ask_eval({hooks.halves_eval, n, cake, halves}, active);
    auto groups = partition_to_rooms(partners);
    Json gj = Json::array();
    for (const auto& g : groups) gj.push_back(players_to_json(pick(active, g)));
    ctx.panel.decision(Json{{"what", "rooms"}, {"stage", stage_name(hooks.halves_eval)}, {"groups", gj}});

    int full = -1;
    for (int j = 0; j < 2; ++j)
        if (static_cast<int>(groups[j].size()) == n) full = j;
    if (full < 0) {
        for (int j = 0; j < 2; ++j) hooks.recurse(ctx, halves[j], pick(active, groups[j]));
        return;
    }

    // All players on one half; bid cut lines inside it.
    const int F = full;              // side the players crowd on
    const bool keep_low = F == 1;    // bid piece lies on the other side
    const Rat f_end = F == 0 ? cake.lo(A).value() : cake.hi(A).value();
    CutMarkQuery mq{hooks.east_mark, n, cake, A, keep_low,
                    F == 0 ? cake.lo(A).value() : midA, F == 0 ? midA : cake.hi(A).value()};
    auto marks = ctx.panel.ask_cut_marks(mq, active);
    int w = 0;
    for (int i = 1; i < n; ++i) {
        if (F == 0 ? marks[i] > marks[w] : marks[i] < marks[w]) w = i;
    }
    const Rat cut = marks[w];
    const Rat depth = F == 0 ? cut - f_end : f_end - cut;

    if (depth >= H / 2) {
        ctx.panel.decision(Json{{"what", "east_cut"}, {"player", active[w]}, {"at", rat_str(cut)}});
        Rect take = F == 0 ? axis_slice(cake, A, cut, cake.hi(A).value())
                           : axis_slice(cake, A, cake.lo(A).value(), cut);
        ctx.pieces[active[w]] = hooks.finalize_fat_piece(ctx, take, active[w], n);
        Rect rest = F == 0 ? axis_slice(cake, A, cake.lo(A).value(), cut)
                           : axis_slice(cake, A, cut, cake.hi(A).value());
        hooks.recurse(ctx, rest, without(active, w));
        return;
    }

    // Far west: the two corner squares at the crowded end.
    const Rat half = H / 2;
    Rect west_band = F == 0 ? axis_slice(cake, A, f_end, f_end + half)
                            : axis_slice(cake, A, f_end - half, f_end);
    std::vector<Rect> west_squares{
        axis_slice(west_band, B, cake.lo(B).value(), cake.mid(B)),
        axis_slice(west_band, B, cake.mid(B), cake.hi(B).value())};
    auto fw = ctx.panel.ask_eval({hooks.far_west_eval, n, cake, west_squares}, active);
    auto fw_groups = partition_to_rooms(fw);
    Json fgj = Json::array();
    for (const auto& g : fw_groups) fgj.push_back(players_to_json(pick(active, g)));
    ctx.panel.decision(
        Json{{"what", "rooms"}, {"stage", stage_name(hooks.far_west_eval)}, {"groups", fgj}});

    int fw_full = -1;
    for (int j = 0; j < 2; ++j)
        if (static_cast<int>(fw_groups[j].size()) == n) fw_full = j;
    if (fw_full < 0) {
        // Pieces of each half-square run may flow towards the east; the
        // flowed band is unallocated and the two runs are separated along B.
        const int flow_sign = F == 0 ? +1 : -1;
        for (int j = 0; j < 2; ++j)
            hooks.divide_subsquare(ctx, west_squares[j], A, flow_sign, pick(active, fw_groups[j]));
        return;
    }

    // All players on one far-west square: L-shape bids at the cake corner.
    const int cB = fw_full;
    CornerRef corner;
    if (A == 0)
        corner = {F, cB};
    else
        corner = {cB, F};
    CornerBidQuery bq{hooks.lshape_bid, n, cake, corner, half};
    auto sides = ctx.panel.ask_corner_bids(bq, active);
    int lw = 0;
    for (int i = 1; i < n; ++i)
        if (sides[i] > sides[lw]) lw = i;
    const Rat b = sides[lw];
    Rect winner_square = corner_square(cake, corner, b);
    ctx.panel.decision(Json{{"what", "lshape_winner"},
                            {"player", active[lw]},
                            {"corner_square", rect_to_json(winner_square)}});

    // East piece: everything beyond the corner square along A.
    Rect east = F == 0 ? axis_slice(cake, A, f_end + b, cake.hi(A).value())
                       : axis_slice(cake, A, cake.lo(A).value(), f_end - b);
    // North piece: the maximal square hugging the far B side of the arm.
    Rat ns = H - b;
    Rect north = F == 0 ? axis_slice(cake, A, f_end, f_end + ns)
                        : axis_slice(cake, A, f_end - ns, f_end);
    north = cB == 0 ? axis_slice(north, B, cake.lo(B).value() + b, cake.hi(B).value())
                    : axis_slice(north, B, cake.lo(B).value(), cake.hi(B).value() - b);

    int choose = ctx.panel.ask_choice({hooks.choice, n, east, north}, active[lw]);
    if (choose == 0) {
        ctx.pieces[active[lw]] = hooks.finalize_fat_piece(ctx, east, active[lw], n);
        // Remaining players divide the corner square, flowing along B into
        // the unused north arm.
        hooks.divide_subsquare(ctx, winner_square, B, cB == 0 ? +1 : -1, without(active, lw));
    } else {
        ctx.pieces[active[lw]] = north;
        hooks.divide_subsquare(ctx, winner_square, A, F == 0 ? +1 : -1, without(active, lw));
    }
}

struct TwoFatHooks : GuillotineHooks {
    TwoFatHooks() {
        halves_eval = Stage::TwoFatHalvesEval;
        east_mark = Stage::TwoFatEastMark;
        far_west_eval = Stage::TwoFatFarWestEval;
        lshape_bid = Stage::TwoFatLShapeBid;
        choice = Stage::TwoFatChoice;
    }
    Rect finalize_fat_piece(Ctx&, const Rect& piece, int, int) const override { return piece; }
    void recurse(Ctx& ctx, const Rect& cake, const std::vector<int>& active) const override {
        recurse_halving(ctx, cake, active, *this);
    }
    void divide_subsquare(Ctx& ctx, const Rect& square, int, int,
                          const std::vector<int>& active) const override {
        recurse_halving(ctx, square, active, *this);
    }
};

struct FourWallsHooks : GuillotineHooks {
    FourWallsHooks() {
        halves_eval = Stage::FourWallsHalvesEval;
        east_mark = Stage::FourWallsEastMark;
        far_west_eval = Stage::FourWallsFarWestEval;
        lshape_bid = Stage::FourWallsLShapeBid;
        choice = Stage::FourWallsChoice;
    }
    Rect finalize_fat_piece(Ctx& ctx, const Rect& piece, int player, int n) const override {
        SelectSquareQuery q{Stage::FourWallsSquareSelect, n, SelectSquareQuery::Box, piece, {}, Rat(0)};
        return ctx.panel.ask_select_square(q, player);
    }
    void recurse(Ctx& ctx, const Rect& cake, const std::vector<int>& active) const override {
        recurse_halving(ctx, cake, active, *this);
    }
    void divide_subsquare(Ctx& ctx, const Rect& square, int flow_axis, int flow_sign,
                          const std::vector<int>& active) const override {
        recurse_3walls(ctx, square, flow_axis, flow_sign, active);
    }
};

// --- three walls (one open side along flow_axis/flow_sign) -------------

void recurse_3walls(Ctx& ctx, const Rect& cake, int flow_axis, int flow_sign,
                    const std::vector<int>& active) {
    const int n = static_cast<int>(active.size());
    if (n == 0) return;
    const int f = flow_axis, o = 1 - flow_axis;
    const Rat H = cake.extent(o);
    const Rat f_lo = cake.lo(f).value(), f_hi = cake.hi(f).value();
    const Rat wall = flow_sign > 0 ? f_lo : f_hi;  // bounded side opposite the flow

    auto flow_slice = [&](const Rat& from_wall, const Rat& to_wall) {
        // Interval measured from the wall towards the flow direction.
        return flow_sign > 0 ? axis_slice(cake, f, wall + from_wall, wall + to_wall)
                             : axis_slice(cake, f, wall - to_wall, wall - from_wall);
    };

    if (n == 1) {
        ctx.pieces[active[0]] = flow_slice(Rat(0), H);  // side-H square covering the cake
        return;
    }

    CutMarkQuery mq{Stage::ThreeWallsEastMark, n, cake, f, flow_sign < 0, f_lo, f_hi};
    auto marks = ctx.panel.ask_cut_marks(mq, active);
    int w = 0;
    for (int i = 1; i < n; ++i)
        if (flow_sign > 0 ? marks[i] > marks[w] : marks[i] < marks[w]) w = i;
    const Rat cut = marks[w];
    const Rat depth = flow_sign > 0 ? cut - wall : wall - cut;

    if (depth >= H / 2) {
        ctx.panel.decision(Json{{"what", "east_cut"}, {"player", active[w]}, {"at", rat_str(cut)}});
        ctx.pieces[active[w]] = flow_slice(depth, depth + H);
        recurse_halving(ctx, flow_slice(Rat(0), depth), without(active, w), FourWallsHooks());
        return;
    }

    const Rat half = H / 2;
    Rect west_band = flow_slice(Rat(0), half);
    std::vector<Rect> west_squares{
        axis_slice(west_band, o, cake.lo(o).value(), cake.mid(o)),
        axis_slice(west_band, o, cake.mid(o), cake.hi(o).value())};
    auto fw = ctx.panel.ask_eval({Stage::ThreeWallsFarWestEval, n, cake, west_squares}, active);
    auto groups = partition_to_rooms(fw);
    Json gj = Json::array();
    for (const auto& g : groups) gj.push_back(players_to_json(pick(active, g)));
    ctx.panel.decision(
        Json{{"what", "rooms"}, {"stage", stage_name(Stage::ThreeWallsFarWestEval)}, {"groups", gj}});

    int full = -1;
    for (int j = 0; j < 2; ++j)
        if (static_cast<int>(groups[j].size()) == n) full = j;
    if (full < 0) {
        for (int j = 0; j < 2; ++j)
            recurse_3walls(ctx, west_squares[j], f, flow_sign, pick(active, groups[j]));
        return;
    }

    const int cO = full;
    CornerRef corner;
    if (f == 0)
        corner = {flow_sign > 0 ? 0 : 1, cO};
    else
        corner = {cO, flow_sign > 0 ? 0 : 1};
    CornerBidQuery bq{Stage::ThreeWallsLShapeBid, n, cake, corner, half};
    auto sides = ctx.panel.ask_corner_bids(bq, active);
    int lw = 0;
    for (int i = 1; i < n; ++i)
        if (sides[i] > sides[lw]) lw = i;
    const Rat b = sides[lw];
    Rect winner_square = corner_square(cake, corner, b);
    ctx.panel.decision(Json{{"what", "lshape_winner"},
                            {"player", active[lw]},
                            {"corner_square", rect_to_json(winner_square)}});

    // Both offered pieces are squares here: the east one flows over the
    // open side, the north one hugs the far o-wall.
    Rect east = flow_slice(b, b + H);
    Rat ns = H - b;
    Rect north = flow_slice(Rat(0), ns);
    north = cO == 0 ? axis_slice(north, o, cake.lo(o).value() + b, cake.hi(o).value())
                    : axis_slice(north, o, cake.lo(o).value(), cake.hi(o).value() - b);

    int choose = ctx.panel.ask_choice({Stage::ThreeWallsChoice, n, east, north}, active[lw]);
    if (choose == 0) {
        ctx.pieces[active[lw]] = east;
        recurse_3walls(ctx, winner_square, o, cO == 0 ? +1 : -1, without(active, lw));
    } else {
        ctx.pieces[active[lw]] = north;
        recurse_3walls(ctx, winner_square, f, flow_sign, without(active, lw));
    }
}

// --- staircase family ---------------------------------------------------

void recurse_staircase(Ctx& ctx, const Staircase& s, const std::vector<int>& active,
                       const Rat& scale_hint) {
    if (active.empty() || s.empty()) return;
    const int n = static_cast<int>(active.size());
    StaircaseBidsQuery q{Stage::StaircaseBids, n, s.corners, scale_hint};
    auto bids = ctx.panel.ask_stair_bids(q, active);
    StairSelection sel = select_staircase_winner(s, bids);
    const int win_pos = sel.player_pos;
    const StairBid win_bid = sel.bid;
    const auto& [cx, cy] = s.corners[win_bid.corner];
    Rect piece = square_to_rect(Square(cx, cy, win_bid.side));
    ctx.pieces[active[win_pos]] = piece;
    ctx.panel.decision(Json{{"what", "staircase_winner"},
                            {"player", active[win_pos]},
                            {"corner", win_bid.corner},
                            {"square", rect_to_json(piece)}});
    Staircase rest = staircase_remove_shadow(s, win_bid.corner, win_bid.side);
    recurse_staircase(ctx, rest, without(active, win_pos), scale_hint);
}

void run_halfplane(Ctx& ctx, const Rat& y0, const std::vector<int>& active, const Rat& lo,
                   const Rat& hi, const Rat& scale_hint) {
    const int n = static_cast<int>(active.size());
    assert(n >= 2);
    Rect cake(ExtRat::neg_inf(), ExtRat(y0), ExtRat::pos_inf(), ExtRat::pos_inf());
    CutMarkQuery mq{Stage::HalfPlaneMark, n, cake, 0, true, lo, hi};
    auto marks = ctx.panel.ask_cut_marks(mq, active);
    int w = 0;
    for (int i = 1; i < n; ++i)
        if (marks[i] < marks[w]) w = i;
    ctx.panel.decision(
        Json{{"what", "halfplane_cut"}, {"player", active[w]}, {"at", rat_str(marks[w])}});
    ctx.pieces[active[w]] = Rect(ExtRat::neg_inf(), ExtRat(y0), ExtRat(marks[w]), ExtRat::pos_inf());
    Staircase rest;
    rest.corners = {{marks[w], y0}};
    recurse_staircase(ctx, rest, without(active, w), scale_hint);
}

// --- simple one-dimensional protocols -----------------------------------

void recurse_rect1d(Ctx& ctx, const Rect& cake, const std::vector<int>& active) {
    const int n = static_cast<int>(active.size());
    if (n == 0) return;
    if (n == 1) {
        ctx.pieces[active[0]] = cake;
        return;
    }
    CutMarkQuery mq{Stage::Rect1DMark, n, cake, 0, true, cake.x0.value(), cake.x1.value()};
    auto marks = ctx.panel.ask_cut_marks(mq, active);
    int w = 0;
    for (int i = 1; i < n; ++i)
        if (marks[i] < marks[w]) w = i;
    const Rat cut = marks[w];
    ctx.panel.decision(Json{{"what", "west_cut"}, {"player", active[w]}, {"at", rat_str(cut)}});
    if (cut > cake.x0.value())
        ctx.pieces[active[w]] = Rect(cake.x0, cake.y0, ExtRat(cut), cake.y1);
    if (cut < cake.x1.value())
        recurse_rect1d(ctx, Rect(ExtRat(cut), cake.y0, cake.x1, cake.y1), without(active, w));
}

// --- entry helpers -------------------------------------------------------

struct Entry {
    std::unique_ptr<Panel> panel;
    std::vector<Measure> play_measures;  // normalized honest measures
    std::vector<bool> degenerate;
};

Entry build_entry(const std::vector<PlayerSpec>& players, const Region& cake, const Rat& threshold,
                  const RunOptions& opts) {
    Entry e;
    std::vector<std::unique_ptr<Agent>> agents;
    for (const auto& p : players) {
        if (p.honest) {
            Rat total = p.measure.eval(cake);
            if (total > 0) {
                Measure norm = p.measure.scaled(threshold / total);
                e.play_measures.push_back(norm);
                e.degenerate.push_back(false);
                agents.push_back(std::make_unique<HonestAgent>(std::move(norm)));
            } else {
                e.play_measures.push_back(p.measure);
                e.degenerate.push_back(true);
                agents.push_back(std::make_unique<HonestAgent>(p.measure));
            }
        } else {
            e.play_measures.push_back(p.measure);
            e.degenerate.push_back(false);
            agents.push_back(std::make_unique<AdversarialAgent>(p.seed));
        }
    }
    e.panel = std::make_unique<Panel>(std::move(agents), opts.strict);
    return e;
}

std::vector<int> all_players(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i;
    return v;
}

Allocation finish(ProtocolKind kind, int n, Rat denom, Region containment, Entry& entry,
                  std::vector<std::optional<Rect>> pieces) {
    Allocation a;
    a.protocol = kind;
    a.n = n;
    a.bound_denominator = std::move(denom);
    a.containment = std::move(containment);
    a.pieces = std::move(pieces);
    a.violated = entry.panel->violated();
    a.transcript = entry.panel->take_transcript();
    return a;
}

Rect require_square_cake(const Rect& cake) {
    if (!cake.finite() || cake.width() != cake.height())
        throw PreconditionError("cake must be a finite square");
    return cake;
}

Rect require_2fat_cake(const Rect& cake) {
    if (!cake.finite()) throw PreconditionError("cake must be finite");
    if (!is_r_fat(cake, Rat(2))) throw PreconditionError("cake aspect ratio must be at most 2");
    return cake;
}

// Union support box over all players, padded by 1 unit.
Rect padded_support(const std::vector<PlayerSpec>& players) {
    std::optional<Rect> box;
    for (const auto& p : players) {
        auto b = p.measure.support_bbox();
        if (!b) continue;
        if (!box)
            box = b;
        else
            box = Rect(ext_min(box->x0, b->x0), ext_min(box->y0, b->y0), ext_max(box->x1, b->x1),
                       ext_max(box->y1, b->y1));
    }
    if (!box) return Rect::of(Rat(-1), Rat(-1), Rat(1), Rat(1));
    return Rect::of(box->x0.value() - 1, box->y0.value() - 1, box->x1.value() + 1,
                    box->y1.value() + 1);
}

}  // namespace

// --- public protocol entry points ---------------------------------------

Allocation divide_square_to_squares(const Rect& cake, const std::vector<PlayerSpec>& players,
                                    const RunOptions& opts) {
    require_square_cake(cake);
    const int n = static_cast<int>(players.size());
    if (n < 1) throw UnsupportedPlayerCount("need at least one player");
    Rat denom = guarantee_denominator(ProtocolKind::SquareToSquares, n);
    Entry entry = build_entry(players, Region(cake), denom, opts);
    std::vector<std::optional<Rect>> pieces(n);
    Ctx ctx{*entry.panel, pieces};
    recurse_square(ctx, cake, all_players(n));
    return finish(ProtocolKind::SquareToSquares, n, denom, Region(cake), entry, std::move(pieces));
}

Allocation divide_2fat(const Rect& cake, const std::vector<PlayerSpec>& players,
                       const RunOptions& opts) {
    require_2fat_cake(cake);
    const int n = static_cast<int>(players.size());
    if (n < 1) throw UnsupportedPlayerCount("need at least one player");
    Rat denom = guarantee_denominator(ProtocolKind::TwoFat, n);
    Entry entry = build_entry(players, Region(cake), denom, opts);
    std::vector<std::optional<Rect>> pieces(n);
    Ctx ctx{*entry.panel, pieces};
    recurse_halving(ctx, cake, all_players(n), TwoFatHooks());
    return finish(ProtocolKind::TwoFat, n, denom, Region(cake), entry, std::move(pieces));
}

Allocation divide_4walls(const Rect& cake, const std::vector<PlayerSpec>& players,
                         const RunOptions& opts) {
    require_2fat_cake(cake);
    const int n = static_cast<int>(players.size());
    if (n < 1) throw UnsupportedPlayerCount("need at least one player");
    Rat denom = guarantee_denominator(ProtocolKind::FourWalls, n);
    Entry entry = build_entry(players, Region(cake), denom, opts);
    std::vector<std::optional<Rect>> pieces(n);
    Ctx ctx{*entry.panel, pieces};
    recurse_halving(ctx, cake, all_players(n), FourWallsHooks());
    return finish(ProtocolKind::FourWalls, n, denom, Region(cake), entry, std::move(pieces));
}

Allocation divide_3walls(const Rect& cake, const std::vector<PlayerSpec>& players,
                         const RunOptions& opts) {
    if (!cake.finite()) throw PreconditionError("cake must be finite");
    const Rat W = cake.width(), H = cake.height();
    if (W > H) throw PreconditionError("3-walls cake must have aspect at most 1");
    if (2 * W < H)
        throw PreconditionError("3-walls cake must have aspect at least 1/2");
    const int n = static_cast<int>(players.size());
    if (n < 1) throw UnsupportedPlayerCount("need at least one player");
    Rat denom = guarantee_denominator(ProtocolKind::ThreeWalls, n);
    Entry entry = build_entry(players, Region(cake), denom, opts);
    std::vector<std::optional<Rect>> pieces(n);
    Ctx ctx{*entry.panel, pieces};
    recurse_3walls(ctx, cake, 0, +1, all_players(n));
    Rect widened(cake.x0, cake.y0, ExtRat(cake.x1.value() + H), cake.y1);
    return finish(ProtocolKind::ThreeWalls, n, denom, Region(widened), entry, std::move(pieces));
}

Allocation divide_staircase(const Staircase& cake, const std::vector<PlayerSpec>& players,
                            const RunOptions& opts) {
    if (cake.empty()) throw PreconditionError("staircase cake must be non-empty");
    const int n = static_cast<int>(players.size());
    if (n < 1) throw UnsupportedPlayerCount("need at least one player");
    Rat denom = guarantee_denominator(ProtocolKind::StaircaseDivision, n, cake.corner_count());
    Entry entry = build_entry(players, Region(cake), denom, opts);
    std::vector<std::optional<Rect>> pieces(n);
    Ctx ctx{*entry.panel, pieces};
    Rect pad = padded_support(players);
    Rat span = pad.width() + pad.height();
    for (const auto& [x, y] : cake.corners) span += x + y;
    recurse_staircase(ctx, cake, all_players(n), span > 1 ? span : Rat(1));
    return finish(ProtocolKind::StaircaseDivision, n, denom, Region(cake), entry,
                  std::move(pieces));
}

Allocation divide_halfplane(const std::vector<PlayerSpec>& players, const RunOptions& opts) {
    const int n = static_cast<int>(players.size());
    if (n < 2) throw UnsupportedPlayerCount("half-plane division needs at least 2 players");
    HalfPlaneRegion cake{1, +1, Rat(0)};
    Rat denom = guarantee_denominator(ProtocolKind::HalfPlane, n);
    Entry entry = build_entry(players, Region(cake), denom, opts);
    std::vector<std::optional<Rect>> pieces(n);
    Ctx ctx{*entry.panel, pieces};
    Rect pad = padded_support(players);
    Rat span = pad.width() + pad.height();
    run_halfplane(ctx, Rat(0), all_players(n), pad.x0.value(), pad.x1.value(),
                  span > 1 ? span : Rat(1));
    return finish(ProtocolKind::HalfPlane, n, denom, Region(cake), entry, std::move(pieces));
}

Allocation divide_plane(const std::vector<PlayerSpec>& players, const RunOptions& opts) {
    const int n = static_cast<int>(players.size());
    if (n < 4) throw UnsupportedPlayerCount("plane division needs at least 4 players");
    Rat denom = guarantee_denominator(ProtocolKind::Plane, n);
    Entry entry = build_entry(players, Region(PlaneRegion{}), denom, opts);
    std::vector<std::optional<Rect>> pieces(n);
    Ctx ctx{*entry.panel, pieces};

    Rect pad = padded_support(players);
    Rect plane_rect(ExtRat::neg_inf(), ExtRat::neg_inf(), ExtRat::pos_inf(), ExtRat::pos_inf());
    CutMarkQuery mq{Stage::PlaneMark, n, plane_rect, 1, true, pad.y0.value(), pad.y1.value()};
    auto marks = entry.panel->ask_cut_marks(mq, all_players(n));

    // The two southmost marks go south; the cut sits at the second one.
    std::vector<int> order = all_players(n);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return marks[a] < marks[b]; });
    std::vector<int> south{order[0], order[1]};
    std::sort(south.begin(), south.end());
    std::vector<int> north(order.begin() + 2, order.end());
    std::sort(north.begin(), north.end());
    const Rat y_cut = marks[order[1]];
    entry.panel->decision(Json{{"what", "plane_cut"},
                               {"at", rat_str(y_cut)},
                               {"south", players_to_json(south)},
                               {"north", players_to_json(north)}});

    Rat span = pad.width() + pad.height();
    if (!(span > 1)) span = Rat(1);

    // North half-plane handled in place.
    run_halfplane(ctx, y_cut, north, pad.x0.value(), pad.x1.value(), span);

    // South half-plane: reflect about the cut so the same machinery sees a
    // canonical north-facing half-plane, then map the pieces back.
    std::vector<std::unique_ptr<Agent>> south_agents;
    std::vector<int> south_local;
    for (std::size_t i = 0; i < south.size(); ++i) {
        int p = south[i];
        if (players[p].honest)
            south_agents.push_back(
                std::make_unique<HonestAgent>(reflect_measure_y(entry.play_measures[p], y_cut)));
        else
            south_agents.push_back(std::make_unique<AdversarialAgent>(players[p].seed));
        south_local.push_back(static_cast<int>(i));
    }
    Panel south_panel(std::move(south_agents), opts.strict);
    std::vector<std::optional<Rect>> south_pieces(south.size());
    Ctx south_ctx{south_panel, south_pieces};
    run_halfplane(south_ctx, y_cut, south_local, pad.x0.value(), pad.x1.value(), span);

    for (std::size_t i = 0; i < south.size(); ++i) {
        if (!south_pieces[i]) continue;
        const Rect& r = *south_pieces[i];
        auto flip = [&](const ExtRat& e) {
            if (e.inf > 0) return ExtRat::neg_inf();
            if (e.inf < 0) return ExtRat::pos_inf();
            return ExtRat(2 * y_cut - e.v);
        };
        pieces[south[i]] = Rect(r.x0, flip(r.y1), r.x1, flip(r.y0));
    }
    Json south_tr = south_panel.take_transcript();

    Allocation a = finish(ProtocolKind::Plane, n, denom, Region(PlaneRegion{}), entry,
                          std::move(pieces));
    a.transcript.push_back(Json{{"type", "subrun"},
                                {"what", "south_halfplane_reflected"},
                                {"pivot", rat_str(y_cut)},
                                {"players", players_to_json(south)},
                                {"records", south_tr}});
    for (std::size_t i = 0; i < south.size(); ++i)
        if (south_panel.violated()[i]) a.violated[south[i]] = true;
    return a;
}

Allocation divide_rectangle_1d(const Rect& cake, const std::vector<PlayerSpec>& players,
                               const RunOptions& opts) {
    if (!cake.finite()) throw PreconditionError("cake must be finite");
    const int n = static_cast<int>(players.size());
    if (n < 1) throw UnsupportedPlayerCount("need at least one player");
    Rat denom = guarantee_denominator(ProtocolKind::Rectangle1D, n);
    Entry entry = build_entry(players, Region(cake), denom, opts);
    std::vector<std::optional<Rect>> pieces(n);
    Ctx ctx{*entry.panel, pieces};
    recurse_rect1d(ctx, cake, all_players(n));
    return finish(ProtocolKind::Rectangle1D, n, denom, Region(cake), entry, std::move(pieces));
}

Allocation divide_archipelago(const std::vector<Rect>& islands,
                              const std::vector<PlayerSpec>& players, const RunOptions& opts) {
    if (islands.empty()) throw PreconditionError("archipelago needs at least one island");
    for (std::size_t i = 0; i < islands.size(); ++i) {
        if (!islands[i].finite()) throw PreconditionError("islands must be finite");
        for (std::size_t j = i + 1; j < islands.size(); ++j)
            if (interiors_overlap(islands[i], islands[j]))
                throw PreconditionError("islands must be disjoint");
    }
    const int n = static_cast<int>(players.size());
    if (n < 1) throw UnsupportedPlayerCount("need at least one player");
    const int m = static_cast<int>(islands.size());
    RectRegion cake_region = make_region(islands);
    Rat denom = guarantee_denominator(ProtocolKind::Archipelago, n, 1, m);
    Entry entry = build_entry(players, Region(cake_region), denom, opts);
    std::vector<std::optional<Rect>> pieces(n);
    Ctx ctx{*entry.panel, pieces};

    Rect bbox = region_bbox(cake_region);
    EvalQuery eq{Stage::ArchipelagoEval, n, bbox, islands};
    auto partners = entry.panel->ask_eval(eq, all_players(n));
    auto groups = partition_to_rooms(partners);
    Json gj = Json::array();
    for (const auto& g : groups) gj.push_back(players_to_json(g));
    entry.panel->decision(Json{{"what", "rooms"}, {"stage", "archipelago_eval"}, {"groups", gj}});
    for (int j = 0; j < m; ++j) recurse_rect1d(ctx, islands[j], groups[j]);
    return finish(ProtocolKind::Archipelago, n, denom, Region(cake_region), entry,
                  std::move(pieces));
}

Allocation divide_two_player_square(const Rect& cake, const std::vector<PlayerSpec>& players,
                                    const RunOptions& opts) {
    require_square_cake(cake);
    if (players.size() != 2) throw UnsupportedPlayerCount("two-player protocol needs exactly 2 players");
    Rat denom = guarantee_denominator(ProtocolKind::TwoPlayerSquare, 2);
    Entry entry = build_entry(players, Region(cake), denom, opts);
    std::vector<std::optional<Rect>> pieces(2);

    auto bids = entry.panel->ask_two_player({cake}, all_players(2));
    int w = bids[1].side < bids[0].side ? 1 : 0;  // smallest square wins
    int loser = 1 - w;
    CornerRef corner = corner_from_index(bids[w].corner);
    Rect winner_square = corner_square(cake, corner, bids[w].side);
    pieces[w] = winner_square;
    entry.panel->decision(Json{{"what", "two_player_winner"},
                               {"player", w},
                               {"square", rect_to_json(winner_square)}});
    if (bids[w].side < cake.width()) {
        SelectSquareQuery sq{Stage::TwoPlayerLoserSelect, 2, SelectSquareQuery::LShape, cake, corner,
                             bids[w].side};
        pieces[loser] = entry.panel->ask_select_square(sq, loser);
    }
    return finish(ProtocolKind::TwoPlayerSquare, 2, denom, Region(cake), entry, std::move(pieces));
}

}  // namespace fairsq
