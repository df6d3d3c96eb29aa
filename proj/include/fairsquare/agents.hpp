#pragma once

#include "fairsquare/measure.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace fairsq {

// Protocol stages a query can originate from. Honest strategies key their
// thresholds and targets off this tag; adversarial agents ignore it.
enum class Stage {
    SquareQuarterEval,
    SquareLShapeBid,
    SquareWinnerSelect,
    TwoFatHalvesEval,
    TwoFatEastMark,
    TwoFatFarWestEval,
    TwoFatLShapeBid,
    TwoFatChoice,
    FourWallsHalvesEval,
    FourWallsEastMark,
    FourWallsFarWestEval,
    FourWallsLShapeBid,
    FourWallsChoice,
    FourWallsSquareSelect,
    ThreeWallsEastMark,
    ThreeWallsFarWestEval,
    ThreeWallsLShapeBid,
    ThreeWallsChoice,
    Rect1DMark,
    ArchipelagoEval,
    StaircaseBids,
    HalfPlaneMark,
    PlaneMark,
    TwoPlayerBid,
    TwoPlayerLoserSelect,
};

const char* stage_name(Stage s);

struct EvalQuery {
    Stage stage;
    int n = 0;  // players sharing the current cake
    Rect cake;
    std::vector<Rect> rooms;
};

struct CutMarkQuery {
    Stage stage;
    int n = 0;
    Rect cake;
    int axis = 0;        // 0: vertical cut line, 1: horizontal
    bool keep_low = true;  // which side of the line the bid piece lies on
    Rat lo, hi;          // valid / sampling range for the cut coordinate
};

struct CornerBidQuery {
    Stage stage;
    int n = 0;
    Rect cake;
    CornerRef corner;  // corner of `cake` the bid square is nested into
    Rat max_side;
};

struct StaircaseBidsQuery {
    Stage stage;
    int n = 0;
    std::vector<std::pair<Rat, Rat>> corners;
    Rat scale_hint;  // finite sampling scale for random agents
};

struct StairBid {
    int corner = 0;
    ExtRat side;
};

struct ChoiceQuery {
    Stage stage;
    int n = 0;
    Rect east;
    Rect north;
};

struct SelectSquareQuery {
    Stage stage;
    int n = 0;
    enum Kind { LShape, Box } kind = Box;
    Rect outer;        // L-shape: the outer square; Box: the 2-fat rect
    CornerRef corner;  // L-shape only: the removed corner
    Rat notch;         // L-shape only: removed square side
};

struct TwoPlayerBidQuery {
    Rect cake;
};

struct TwoPlayerBid {
    int corner = 0;  // 0 SW, 1 SE, 2 NW, 3 NE
    Rat side;
};

CornerRef corner_from_index(int idx);

// A player oracle answering mark/eval queries. Implementations must be
// deterministic functions of (measure, query, seed).
class Agent {
public:
    virtual ~Agent() = default;
    virtual std::vector<long> eval_rooms(const EvalQuery& q) = 0;
    virtual Rat cut_mark(const CutMarkQuery& q) = 0;
    virtual Rat corner_bid(const CornerBidQuery& q) = 0;
    virtual std::vector<StairBid> staircase_bids(const StaircaseBidsQuery& q) = 0;
    virtual int choose_east_north(const ChoiceQuery& q) = 0;  // 0 east, 1 north
    virtual Rect select_square(const SelectSquareQuery& q) = 0;
    virtual TwoPlayerBid two_player_bid(const TwoPlayerBidQuery& q) = 0;
};

// Plays the safe strategy of the protocol the query belongs to.
class HonestAgent : public Agent {
public:
    explicit HonestAgent(Measure m) : m_(std::move(m)) {}

    std::vector<long> eval_rooms(const EvalQuery& q) override;
    Rat cut_mark(const CutMarkQuery& q) override;
    Rat corner_bid(const CornerBidQuery& q) override;
    std::vector<StairBid> staircase_bids(const StaircaseBidsQuery& q) override;
    int choose_east_north(const ChoiceQuery& q) override;
    Rect select_square(const SelectSquareQuery& q) override;
    TwoPlayerBid two_player_bid(const TwoPlayerBidQuery& q) override;

    const Measure& measure() const { return m_; }

private:
    Measure m_;
};

// Rule-compliant pseudo-random play; answers depend only on (seed, query).
class AdversarialAgent : public Agent {
public:
    explicit AdversarialAgent(std::uint64_t seed) : seed_(seed) {}

    std::vector<long> eval_rooms(const EvalQuery& q) override;
    Rat cut_mark(const CutMarkQuery& q) override;
    Rat corner_bid(const CornerBidQuery& q) override;
    std::vector<StairBid> staircase_bids(const StaircaseBidsQuery& q) override;
    int choose_east_north(const ChoiceQuery& q) override;
    Rect select_square(const SelectSquareQuery& q) override;
    TwoPlayerBid two_player_bid(const TwoPlayerBidQuery& q) override;

private:
    std::uint64_t seed_;
};

}  // namespace fairsq
