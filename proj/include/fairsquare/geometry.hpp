#pragma once

#include "fairsquare/rational.hpp"

#include <array>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace fairsq {

// Rational extended with +/- infinity, for unbounded cake sides and
// infinite square pieces.
struct ExtRat {
    int inf = 0;  // -1 / 0 / +1
    Rat v;

    ExtRat() = default;
    ExtRat(const Rat& r) : inf(0), v(r) {}                 // NOLINT: implicit by design
    ExtRat(long n) : inf(0), v(n) {}                       // NOLINT
    static ExtRat pos_inf() { return ExtRat(+1, Rat(0)); }
    static ExtRat neg_inf() { return ExtRat(-1, Rat(0)); }

    bool finite() const { return inf == 0; }
    const Rat& value() const {
        if (inf != 0) throw InvalidParameter("infinite coordinate used as finite");
        return v;
    }

private:
    ExtRat(int i, Rat r) : inf(i), v(std::move(r)) {}
};

int ext_cmp(const ExtRat& a, const ExtRat& b);
inline bool operator<(const ExtRat& a, const ExtRat& b) { return ext_cmp(a, b) < 0; }
inline bool operator<=(const ExtRat& a, const ExtRat& b) { return ext_cmp(a, b) <= 0; }
inline bool operator>(const ExtRat& a, const ExtRat& b) { return ext_cmp(a, b) > 0; }
inline bool operator>=(const ExtRat& a, const ExtRat& b) { return ext_cmp(a, b) >= 0; }
inline bool operator==(const ExtRat& a, const ExtRat& b) { return ext_cmp(a, b) == 0; }
inline bool operator!=(const ExtRat& a, const ExtRat& b) { return ext_cmp(a, b) != 0; }

ExtRat ext_min(const ExtRat& a, const ExtRat& b);
ExtRat ext_max(const ExtRat& a, const ExtRat& b);
// a + b for finite b; infinities absorb.
ExtRat ext_add(const ExtRat& a, const Rat& b);

// Closed axis-parallel box [x0,x1] x [y0,y1] with positive extent on both
// axes. Cakes and measure cells are finite; allocated pieces may be
// unbounded on any side (quarter-plane pieces are squares with infinite
// side-length).
struct Rect {
    ExtRat x0, y0, x1, y1;

    Rect() : x0(Rat(0)), y0(Rat(0)), x1(Rat(1)), y1(Rat(1)) {}
    Rect(ExtRat x0_, ExtRat y0_, ExtRat x1_, ExtRat y1_);

    static Rect of(const Rat& x0, const Rat& y0, const Rat& x1, const Rat& y1) {
        return Rect(ExtRat(x0), ExtRat(y0), ExtRat(x1), ExtRat(y1));
    }

    bool finite() const { return x0.finite() && y0.finite() && x1.finite() && y1.finite(); }
    Rat width() const { return x1.value() - x0.value(); }
    Rat height() const { return y1.value() - y0.value(); }

    const ExtRat& lo(int axis) const { return axis == 0 ? x0 : y0; }
    const ExtRat& hi(int axis) const { return axis == 0 ? x1 : y1; }
    ExtRat& lo(int axis) { return axis == 0 ? x0 : y0; }
    ExtRat& hi(int axis) { return axis == 0 ? x1 : y1; }
    Rat extent(int axis) const { return hi(axis).value() - lo(axis).value(); }
    Rat mid(int axis) const { return (lo(axis).value() + hi(axis).value()) / 2; }

    bool operator==(const Rect& o) const {
        return x0 == o.x0 && y0 == o.y0 && x1 == o.x1 && y1 == o.y1;
    }
};

Rat area(const Rect& r);  // requires finite
bool rect_contains(const Rect& outer, const Rect& inner);
bool rect_contains_point(const Rect& r, const Rat& x, const Rat& y);
bool interiors_overlap(const Rect& a, const Rect& b);
// Overlap with positive area, or nullopt.
std::optional<Rect> rect_intersection(const Rect& a, const Rect& b);
// Area of the (finite) intersection of a possibly-unbounded region rect
// with a finite cell.
Rat overlap_area(const Rect& region, const Rect& cell);

bool is_square(const Rect& r);  // equal finite sides, or a quarter-plane
// Aspect ratio at most R; requires finite rect, R >= 1.
bool is_r_fat(const Rect& r, const Rat& R);

// Axis-parallel square anchored at its south-western corner, growing
// north-east. side may be +infinity (quarter-plane).
struct Square {
    Rat x, y;
    ExtRat side;

    Square() : x(0), y(0), side(Rat(1)) {}
    Square(Rat x_, Rat y_, ExtRat side_);
};

Rect square_to_rect(const Square& s);

// Corner handle of a rect: c == 0 picks the low end of the axis, c == 1
// the high end.
struct CornerRef {
    int cx = 0, cy = 0;
};
// The square of given side nested into the given corner of r.
Rect corner_square(const Rect& r, CornerRef c, const Rat& side);
std::pair<Rat, Rat> corner_point(const Rect& r, CornerRef c);

// Union of pairwise interior-disjoint finite rects, kept in canonical
// vertical-slab form: sorted by x then y, sliced at every member x-edge.
struct RectRegion {
    std::vector<Rect> rects;
};

RectRegion make_region(std::vector<Rect> parts);  // canonicalizes, parts may touch but not overlap
RectRegion region_subtract(const RectRegion& c, const Rect& p);
Rat area(const RectRegion& r);
bool region_contains_rect(const RectRegion& region, const Rect& r);
bool region_contains_point(const RectRegion& region, const Rat& x, const Rat& y);
bool region_equal(const RectRegion& a, const RectRegion& b);
Rect region_bbox(const RectRegion& r);

// Rectilinear domain with two unbounded sides (east and north):
// { (x,y) : exists j with x >= x_j and y >= y_j }. Corners are listed with
// x strictly decreasing and y strictly increasing. An empty corner list is
// the empty-region sentinel produced by removing an infinite shadow.
struct Staircase {
    std::vector<std::pair<Rat, Rat>> corners;

    bool empty() const { return corners.empty(); }
    int corner_count() const { return static_cast<int>(corners.size()); }
};

Staircase make_staircase(std::vector<std::pair<Rat, Rat>> corners);
// Lowest covered y at abscissa x, or nullopt when the column is outside.
std::optional<Rat> staircase_floor_y(const Staircase& s, const Rat& x);
bool staircase_contains_point(const Staircase& s, const Rat& x, const Rat& y);
bool staircase_contains_rect(const Staircase& s, const Rect& r);
// The quarter-plane hanging at corner j.
Rect staircase_quarter(const Staircase& s, int j);
// Removes the box [<=x_j+side] x [<=y_j+side] spanned by a winning corner
// square. An infinite side empties the region.
Staircase staircase_remove_shadow(const Staircase& s, int corner_idx, const ExtRat& side);

struct HalfPlaneRegion {
    int axis = 1;  // 0: constraint on x, 1: on y
    int dir = +1;  // +1: coord >= c, -1: coord <= c
    Rat c;
};

struct PlaneRegion {};

using Region = std::variant<Rect, RectRegion, Staircase, HalfPlaneRegion, PlaneRegion>;

Rat overlap_area(const Region& region, const Rect& cell);
bool region_contains_rect(const Region& region, const Rect& r);

// True iff pieces are pairwise interior-disjoint and each lies inside the
// cake. Pieces without positive area are ignored.
bool disjoint_and_contained(const std::vector<Rect>& pieces, const Region& cake);

// Three maximal squares covering the L-shape obtained by removing the
// corner square of side `notch` from the square `outer`. Requires
// notch <= side/2 so that the union is exact.
std::array<Rect, 3> l_cover_squares(const Rect& outer, CornerRef corner, const Rat& notch);

// Region-input variant: detects the L-shape decomposition of `l` and
// rejects regions that are not square-minus-corner-square with
// notch <= side/2.
std::vector<Square> l_shape_cover(const RectRegion& l);

// Two squares covering a rectangle of aspect ratio at most 2.
std::array<Rect, 2> two_square_cover(const Rect& r);

}  // namespace fairsq
