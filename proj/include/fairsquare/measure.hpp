#pragma once

#include "fairsquare/geometry.hpp"

#include <optional>
#include <vector>

namespace fairsq {

struct TargetExceedsValue : std::runtime_error {
    TargetExceedsValue() : std::runtime_error("mark target exceeds available value") {}
};

struct InsufficientValue : std::runtime_error {
    InsufficientValue() : std::runtime_error("corner region holds less value than target") {}
};

struct Cell {
    Rect box;  // finite
    Rat density;  // >= 0
};

// Piecewise-uniform value measure: finitely many interior-disjoint cells
// with constant density. Absolutely continuous by construction.
class Measure {
public:
    Measure() = default;
    explicit Measure(std::vector<Cell> cells);

    const std::vector<Cell>& cells() const { return cells_; }
    const Rat& total() const { return total_; }
    Rat eval(const Region& region) const;
    Rat eval_rect(const Rect& r) const { return eval(Region(r)); }
    Measure scaled(const Rat& factor) const;
    // Smallest finite box containing all cells with positive density, or
    // nullopt for the zero measure.
    std::optional<Rect> support_bbox() const;

private:
    std::vector<Cell> cells_;
    Rat total_ = 0;
};

enum class MarkDir { West, East, South, North };

// Smallest cut coordinate c such that the part of `cake` on the given
// side of the axis-parallel line at c has value exactly `target`. The
// value function is piecewise linear so the root is exact. `cake` may be
// unbounded (half-plane and plane marks).
Rat mark_vertical(const Measure& v, const Rect& cake, const Rat& target, MarkDir dir);

enum class RoundMode { Up, Down };

struct CornerMarkResult {
    ExtRat side;
    bool exact = true;  // value of the returned square equals target exactly
};

// Smallest side l such that the square grown from the corner point along
// orientation (ox, oy) in {-1,+1} has value exactly `target` (> 0). The
// value is piecewise quadratic in l; irrational roots are bracketed by a
// rational within mark_epsilon() of the target value, rounded per `mode`.
CornerMarkResult mark_corner_square(const Measure& v, const Rat& corner_x, const Rat& corner_y,
                                    int ox, int oy, const Rat& target, RoundMode mode);

// Reflection of a measure about the horizontal line y = pivot.
Measure reflect_measure_y(const Measure& v, const Rat& pivot);

}  // namespace fairsq
