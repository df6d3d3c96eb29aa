#pragma once

#include "fairsquare/agents.hpp"
#include "fairsquare/json_io.hpp"

#include <optional>

namespace fairsq {

struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedPlayerCount : PreconditionError {
    explicit UnsupportedPlayerCount(const std::string& what) : PreconditionError(what) {}
};

struct ProtocolRuleViolation : std::runtime_error {
    int player;
    ProtocolRuleViolation(int player_, const std::string& what)
        : std::runtime_error("player " + std::to_string(player_) + ": " + what), player(player_) {}
};

// Algorithm: fill the last room greedily with the players keenest on it,
// then recurse on the remaining players and rooms. Ties break by ascending
// player index. Output satisfies i in G_j => P_j^i >= |G_j|.
std::vector<std::vector<int>> partition_to_rooms(const std::vector<std::vector<long>>& partners);

enum class ProtocolKind {
    SquareToSquares,
    TwoFat,
    FourWalls,
    ThreeWalls,
    StaircaseDivision,
    HalfPlane,
    Plane,
    Rectangle1D,
    Archipelago,
    TwoPlayerSquare,
};

const char* protocol_name(ProtocolKind k);
std::optional<ProtocolKind> protocol_from_name(const std::string& name);

enum class ShapeFamily { Squares, TwoFatRects, Rectangles };
ShapeFamily protocol_shape_family(ProtocolKind k);
const char* shape_family_name(ShapeFamily f);
std::optional<ShapeFamily> shape_family_from_name(const std::string& name);

struct PlayerSpec {
    bool honest = true;
    std::uint64_t seed = 0;  // adversarial only
    Measure measure;
};

struct RunOptions {
    bool strict = false;  // abort on rule violations instead of forfeiting
};

struct Allocation {
    ProtocolKind protocol = ProtocolKind::SquareToSquares;
    int n = 0;
    Rat bound_denominator;  // every honest player gets >= V_i(C)/bound_denominator
    Region containment;     // region all pieces must lie in (3 walls: widened box)
    std::vector<std::optional<Rect>> pieces;
    std::vector<bool> violated;
    Json transcript = Json::array();
};

// Winning staircase bid: minimal taxicab score x_j + y_j + side over all
// (player, corner) bids; ties break by player position then corner index.
// Infinite sides lose to every finite bid.
struct StairSelection {
    int player_pos = -1;
    StairBid bid;
};
StairSelection select_staircase_winner(const Staircase& s,
                                       const std::vector<std::vector<StairBid>>& bids);

// Normalization threshold of each protocol; equals the guarantee
// denominator g in the bound 1/g.
Rat guarantee_denominator(ProtocolKind kind, int n, int staircase_corners = 1, int islands = 1);

Allocation divide_square_to_squares(const Rect& cake, const std::vector<PlayerSpec>& players,
                                    const RunOptions& opts = {});
Allocation divide_2fat(const Rect& cake, const std::vector<PlayerSpec>& players,
                       const RunOptions& opts = {});
Allocation divide_4walls(const Rect& cake, const std::vector<PlayerSpec>& players,
                         const RunOptions& opts = {});
// East side of `cake` is open: pieces may flow over x1 by up to the height.
Allocation divide_3walls(const Rect& cake, const std::vector<PlayerSpec>& players,
                         const RunOptions& opts = {});
Allocation divide_staircase(const Staircase& cake, const std::vector<PlayerSpec>& players,
                            const RunOptions& opts = {});
// Cake is the half-plane y >= 0.
Allocation divide_halfplane(const std::vector<PlayerSpec>& players, const RunOptions& opts = {});
Allocation divide_plane(const std::vector<PlayerSpec>& players, const RunOptions& opts = {});
Allocation divide_rectangle_1d(const Rect& cake, const std::vector<PlayerSpec>& players,
                               const RunOptions& opts = {});
Allocation divide_archipelago(const std::vector<Rect>& islands,
                              const std::vector<PlayerSpec>& players, const RunOptions& opts = {});
Allocation divide_two_player_square(const Rect& cake, const std::vector<PlayerSpec>& players,
                                    const RunOptions& opts = {});

}  // namespace fairsq
