#include "fairsquare/geometry.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace fairsq {

int ext_cmp(const ExtRat& a, const ExtRat& b) {
    if (a.inf != 0 || b.inf != 0) {
        if (a.inf == b.inf) return 0;
        int av = a.inf, bv = b.inf;
        return av < bv ? -1 : (av > bv ? 1 : 0);
    }
    return cmp(a.v, b.v);
}

ExtRat ext_min(const ExtRat& a, const ExtRat& b) { return ext_cmp(a, b) <= 0 ? a : b; }
ExtRat ext_max(const ExtRat& a, const ExtRat& b) { return ext_cmp(a, b) >= 0 ? a : b; }

ExtRat ext_add(const ExtRat& a, const Rat& b) {
    if (!a.finite()) return a;
    return ExtRat(a.v + b);
}

Rect::Rect(ExtRat x0_, ExtRat y0_, ExtRat x1_, ExtRat y1_)
    : x0(std::move(x0_)), y0(std::move(y0_)), x1(std::move(x1_)), y1(std::move(y1_)) {
    if (!(x0 < x1) || !(y0 < y1)) throw InvalidParameter("rect with non-positive extent");
    if (x0.inf == +1 || y0.inf == +1 || x1.inf == -1 || y1.inf == -1)
        throw InvalidParameter("rect bounds inverted at infinity");
}

Rat area(const Rect& r) {
    if (!r.finite()) throw InvalidParameter("area of unbounded rect");
    return r.width() * r.height();
}

bool rect_contains(const Rect& outer, const Rect& inner) {
    return outer.x0 <= inner.x0 && outer.y0 <= inner.y0 && inner.x1 <= outer.x1 &&
           inner.y1 <= outer.y1;
}

bool rect_contains_point(const Rect& r, const Rat& x, const Rat& y) {
    ExtRat ex(x), ey(y);
    return r.x0 <= ex && ex <= r.x1 && r.y0 <= ey && ey <= r.y1;
}

bool interiors_overlap(const Rect& a, const Rect& b) {
    return ext_max(a.x0, b.x0) < ext_min(a.x1, b.x1) &&
           ext_max(a.y0, b.y0) < ext_min(a.y1, b.y1);
}

std::optional<Rect> rect_intersection(const Rect& a, const Rect& b) {
    ExtRat x0 = ext_max(a.x0, b.x0), x1 = ext_min(a.x1, b.x1);
    ExtRat y0 = ext_max(a.y0, b.y0), y1 = ext_min(a.y1, b.y1);
    if (!(x0 < x1) || !(y0 < y1)) return std::nullopt;
    return Rect(x0, y0, x1, y1);
}

Rat overlap_area(const Rect& region, const Rect& cell) {
    if (!cell.finite()) throw InvalidParameter("overlap_area needs a finite cell");
    auto isect = rect_intersection(region, cell);
    if (!isect) return Rat(0);
    return area(*isect);  // finite: clipped by the finite cell
}

bool is_square(const Rect& r) {
    int ix = (r.x0.inf != 0 ? 1 : 0) + (r.x1.inf != 0 ? 1 : 0);
    int iy = (r.y0.inf != 0 ? 1 : 0) + (r.y1.inf != 0 ? 1 : 0);
    if (ix == 0 && iy == 0) return r.width() == r.height();
    return ix == 1 && iy == 1;  // quarter-plane
}

bool is_r_fat(const Rect& r, const Rat& R) {
    if (R < 1) throw InvalidParameter("fatness parameter must be >= 1");
    if (!r.finite()) throw InvalidParameter("is_r_fat needs a finite rect");
    Rat w = r.width(), h = r.height();
    if (w < h) std::swap(w, h);
    return w <= R * h;
}

Square::Square(Rat x_, Rat y_, ExtRat side_) : x(std::move(x_)), y(std::move(y_)), side(std::move(side_)) {
    if (!(side > ExtRat(Rat(0)))) throw InvalidParameter("square side must be positive");
}

Rect square_to_rect(const Square& s) {
    return Rect(ExtRat(s.x), ExtRat(s.y), ext_add(s.side, s.x), ext_add(s.side, s.y));
}

Rect corner_square(const Rect& r, CornerRef c, const Rat& side) {
    if (side <= 0) throw InvalidParameter("corner square side must be positive");
    Rat x0 = c.cx == 0 ? r.x0.value() : r.x1.value() - side;
    Rat y0 = c.cy == 0 ? r.y0.value() : r.y1.value() - side;
    return Rect::of(x0, y0, x0 + side, y0 + side);
}

std::pair<Rat, Rat> corner_point(const Rect& r, CornerRef c) {
    return {c.cx == 0 ? r.x0.value() : r.x1.value(), c.cy == 0 ? r.y0.value() : r.y1.value()};
}

namespace {

// Canonical vertical slab decomposition of a y-interval list per x-slab.
RectRegion slabs_to_region(const std::map<std::pair<Rat, Rat>, std::vector<std::pair<Rat, Rat>>>& slabs) {
    RectRegion out;
    for (const auto& [xs, ys] : slabs) {
        auto ivals = ys;
        std::sort(ivals.begin(), ivals.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        std::size_t i = 0;
        while (i < ivals.size()) {
            Rat lo = ivals[i].first, hi = ivals[i].second;
            std::size_t j = i + 1;
            while (j < ivals.size() && ivals[j].first <= hi) {
                hi = std::max(hi, ivals[j].second, [](const Rat& a, const Rat& b) { return a < b; });
                ++j;
            }
            out.rects.push_back(Rect::of(xs.first, lo, xs.second, hi));
            i = j;
        }
    }
    return out;
}

}  // namespace

RectRegion make_region(std::vector<Rect> parts) {
    for (const auto& r : parts)
        if (!r.finite()) throw InvalidParameter("rectilinear region parts must be finite");
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::size_t j = i + 1; j < parts.size(); ++j)
            if (interiors_overlap(parts[i], parts[j]))
                throw InvalidParameter("rectilinear region parts overlap");
    std::vector<Rat> xs;
    for (const auto& r : parts) {
        xs.push_back(r.x0.value());
        xs.push_back(r.x1.value());
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    std::map<std::pair<Rat, Rat>, std::vector<std::pair<Rat, Rat>>> slabs;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        std::pair<Rat, Rat> slab{xs[i], xs[i + 1]};
        for (const auto& r : parts) {
            if (r.x0.value() <= slab.first && slab.second <= r.x1.value())
                slabs[slab].emplace_back(r.y0.value(), r.y1.value());
        }
    }
    return slabs_to_region(slabs);
}

RectRegion region_subtract(const RectRegion& c, const Rect& p) {
    std::vector<Rect> parts;
    for (const auto& r : c.rects) {
        auto cut = rect_intersection(r, p);
        if (!cut) {
            parts.push_back(r);
            continue;
        }
        // Up to four L/frame fragments around the cut.
        if (r.x0 < cut->x0) parts.push_back(Rect(r.x0, r.y0, cut->x0, r.y1));
        if (cut->x1 < r.x1) parts.push_back(Rect(cut->x1, r.y0, r.x1, r.y1));
        if (r.y0 < cut->y0) parts.push_back(Rect(cut->x0, r.y0, cut->x1, cut->y0));
        if (cut->y1 < r.y1) parts.push_back(Rect(cut->x0, cut->y1, cut->x1, r.y1));
    }
    return make_region(std::move(parts));
}

Rat area(const RectRegion& r) {
    Rat s(0);
    for (const auto& part : r.rects) s += area(part);
    return s;
}

bool region_contains_rect(const RectRegion& region, const Rect& r) {
    if (!r.finite()) return false;
    Rat covered(0);
    for (const auto& part : region.rects) covered += overlap_area(part, r);
    return covered == area(r);
}

bool region_contains_point(const RectRegion& region, const Rat& x, const Rat& y) {
    for (const auto& part : region.rects)
        if (rect_contains_point(part, x, y)) return true;
    return false;
}

bool region_equal(const RectRegion& a, const RectRegion& b) {
    RectRegion ca = make_region(a.rects), cb = make_region(b.rects);
    if (ca.rects.size() != cb.rects.size()) return false;
    for (std::size_t i = 0; i < ca.rects.size(); ++i)
        if (!(ca.rects[i] == cb.rects[i])) return false;
    return true;
}

Rect region_bbox(const RectRegion& r) {
    if (r.rects.empty()) throw InvalidParameter("bbox of empty region");
    ExtRat x0 = r.rects[0].x0, y0 = r.rects[0].y0, x1 = r.rects[0].x1, y1 = r.rects[0].y1;
    for (const auto& part : r.rects) {
        x0 = ext_min(x0, part.x0);
        y0 = ext_min(y0, part.y0);
        x1 = ext_max(x1, part.x1);
        y1 = ext_max(y1, part.y1);
    }
    return Rect(x0, y0, x1, y1);
}

Staircase make_staircase(std::vector<std::pair<Rat, Rat>> corners) {
    for (std::size_t i = 0; i + 1 < corners.size(); ++i) {
        if (!(corners[i].first > corners[i + 1].first) ||
            !(corners[i].second < corners[i + 1].second))
            throw InvalidParameter("staircase corners must have strictly decreasing x, increasing y");
    }
    Staircase s;
    s.corners = std::move(corners);
    return s;
}

std::optional<Rat> staircase_floor_y(const Staircase& s, const Rat& x) {
    // x strictly decreasing along the list; y increasing. The first corner
    // (from the front) with x_j <= x has the minimal y among candidates.
    for (const auto& [cx, cy] : s.corners)
        if (cx <= x) return cy;
    return std::nullopt;
}

bool staircase_contains_point(const Staircase& s, const Rat& x, const Rat& y) {
    auto fy = staircase_floor_y(s, x);
    return fy && y >= *fy;
}

bool staircase_contains_rect(const Staircase& s, const Rect& r) {
    if (s.empty()) return false;
    if (!r.x0.finite() || !r.y0.finite()) return false;
    // floor_y is non-increasing in x, so the north-west corner is the
    // binding point.
    auto fy = staircase_floor_y(s, r.x0.value());
    return fy && r.y0.value() >= *fy;
}

Rect staircase_quarter(const Staircase& s, int j) {
    const auto& [x, y] = s.corners.at(static_cast<std::size_t>(j));
    return Rect(ExtRat(x), ExtRat(y), ExtRat::pos_inf(), ExtRat::pos_inf());
}

Staircase staircase_remove_shadow(const Staircase& s, int corner_idx, const ExtRat& side) {
    if (s.empty()) throw InvalidParameter("shadow removal on empty staircase");
    const auto idx = static_cast<std::size_t>(corner_idx);
    if (idx >= s.corners.size()) throw InvalidParameter("bad staircase corner index");
    if (!side.finite()) return Staircase{};  // whole region discarded
    if (!(side.value() > 0)) throw InvalidParameter("shadow square side must be positive");

    const Rat X = s.corners[idx].first + side.value();
    const Rat Y = s.corners[idx].second + side.value();

    // Deleted corners form a contiguous run [a, b] around the winner.
    std::size_t a = s.corners.size(), b = 0;
    for (std::size_t j = 0; j < s.corners.size(); ++j) {
        if (s.corners[j].first <= X && s.corners[j].second <= Y) {
            a = std::min(a, j);
            b = std::max(b, j);
        }
    }
    assert(a <= idx && idx <= b);

    std::vector<std::pair<Rat, Rat>> out;
    for (std::size_t j = 0; j < a; ++j) out.push_back(s.corners[j]);
    // Step down to the easternmost deleted baseline, then across the top of
    // the removed box to the westernmost deleted wall.
    out.emplace_back(X, s.corners[a].second);
    out.emplace_back(s.corners[b].first, Y);
    for (std::size_t j = b + 1; j < s.corners.size(); ++j) out.push_back(s.corners[j]);
    return make_staircase(std::move(out));
}

namespace {

Rat staircase_overlap_area(const Staircase& s, const Rect& cell) {
    if (s.empty()) return Rat(0);
    const Rat a = cell.x0.value(), b = cell.x1.value();
    const Rat c = cell.y0.value(), d = cell.y1.value();
    std::vector<Rat> xs{a, b};
    for (const auto& [cx, cy] : s.corners)
        if (a < cx && cx < b) xs.push_back(cx);
    std::sort(xs.begin(), xs.end());
    Rat total(0);
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        auto fy = staircase_floor_y(s, xs[i]);
        if (!fy) continue;
        Rat ylo = *fy > c ? *fy : c;
        if (ylo < d) total += (xs[i + 1] - xs[i]) * (d - ylo);
    }
    return total;
}

Rat halfplane_overlap_area(const HalfPlaneRegion& h, const Rect& cell) {
    Rat lo = cell.lo(h.axis).value(), hi = cell.hi(h.axis).value();
    if (h.dir > 0)
        lo = lo > h.c ? lo : h.c;
    else
        hi = hi < h.c ? hi : h.c;
    if (!(lo < hi)) return Rat(0);
    int other = 1 - h.axis;
    return (hi - lo) * cell.extent(other);
}

bool halfplane_contains_rect(const HalfPlaneRegion& h, const Rect& r) {
    if (h.dir > 0) return r.lo(h.axis) >= ExtRat(h.c);
    return r.hi(h.axis) <= ExtRat(h.c);
}

}  // namespace

Rat overlap_area(const Region& region, const Rect& cell) {
    return std::visit(
        [&](const auto& reg) -> Rat {
            using T = std::decay_t<decltype(reg)>;
            if constexpr (std::is_same_v<T, Rect>) return overlap_area(reg, cell);
            else if constexpr (std::is_same_v<T, RectRegion>) {
                Rat s(0);
                for (const auto& part : reg.rects) s += overlap_area(part, cell);
                return s;
            } else if constexpr (std::is_same_v<T, Staircase>)
                return staircase_overlap_area(reg, cell);
            else if constexpr (std::is_same_v<T, HalfPlaneRegion>)
                return halfplane_overlap_area(reg, cell);
            else
                return area(cell);
        },
        region);
}

bool region_contains_rect(const Region& region, const Rect& r) {
    return std::visit(
        [&](const auto& reg) -> bool {
            using T = std::decay_t<decltype(reg)>;
            if constexpr (std::is_same_v<T, Rect>) return rect_contains(reg, r);
            else if constexpr (std::is_same_v<T, RectRegion>) return region_contains_rect(reg, r);
            else if constexpr (std::is_same_v<T, Staircase>) return staircase_contains_rect(reg, r);
            else if constexpr (std::is_same_v<T, HalfPlaneRegion>) return halfplane_contains_rect(reg, r);
            else
                return true;
        },
        region);
}

bool disjoint_and_contained(const std::vector<Rect>& pieces, const Region& cake) {
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (!region_contains_rect(cake, pieces[i])) return false;
        for (std::size_t j = i + 1; j < pieces.size(); ++j)
            if (interiors_overlap(pieces[i], pieces[j])) return false;
    }
    return true;
}

std::array<Rect, 3> l_cover_squares(const Rect& outer, CornerRef corner, const Rat& notch) {
    if (!outer.finite() || !is_square(outer)) throw InvalidParameter("L-shape outer must be a square");
    const Rat a = outer.width();
    if (!(notch > 0) || !(notch * 2 <= a))
        throw InvalidParameter("corner notch must satisfy 0 < notch <= side/2");
    const Rat s = a - notch;
    // Away-from-corner corners on each axis.
    CornerRef ox{1 - corner.cx, corner.cy};    // opposite along x
    CornerRef oy{corner.cx, 1 - corner.cy};    // opposite along y
    CornerRef oxy{1 - corner.cx, 1 - corner.cy};
    // Arm squares hug the far walls; the diagonal square fills the rest.
    return {corner_square(outer, oy, s), corner_square(outer, ox, s), corner_square(outer, oxy, s)};
}

std::vector<Square> l_shape_cover(const RectRegion& l) {
    RectRegion canon = make_region(l.rects);
    if (canon.rects.empty()) throw InvalidParameter("empty region is not an L-shape");
    Rect bbox = region_bbox(canon);
    if (!is_square(bbox)) throw InvalidParameter("region is not an L-shape (bbox not square)");
    // Complement of the region inside its bounding box.
    RectRegion missing = make_region({bbox});
    for (const auto& part : canon.rects) missing = region_subtract(missing, part);
    if (missing.rects.size() != 1) throw InvalidParameter("region is not an L-shape");
    Rect notch_rect = missing.rects[0];
    if (!is_square(notch_rect)) throw InvalidParameter("missing corner is not a square");
    CornerRef corner;
    if (notch_rect.x0 == bbox.x0 && notch_rect.y0 == bbox.y0) corner = {0, 0};
    else if (notch_rect.x1 == bbox.x1 && notch_rect.y0 == bbox.y0) corner = {1, 0};
    else if (notch_rect.x0 == bbox.x0 && notch_rect.y1 == bbox.y1) corner = {0, 1};
    else if (notch_rect.x1 == bbox.x1 && notch_rect.y1 == bbox.y1) corner = {1, 1};
    else throw InvalidParameter("missing square is not at a corner");
    auto covers = l_cover_squares(bbox, corner, notch_rect.width());
    std::vector<Square> out;
    for (const auto& c : covers)
        out.emplace_back(c.x0.value(), c.y0.value(), ExtRat(c.width()));
    return out;
}

std::array<Rect, 2> two_square_cover(const Rect& r) {
    if (!r.finite()) throw InvalidParameter("two_square_cover needs a finite rect");
    Rat w = r.width(), h = r.height();
    int axis = w >= h ? 0 : 1;
    Rat side = axis == 0 ? h : w;
    if (r.extent(axis) > 2 * side) throw InvalidParameter("rect is not 2-fat");
    Rect a = r, b = r;
    a.hi(axis) = ExtRat(a.lo(axis).value() + side);
    b.lo(axis) = ExtRat(b.hi(axis).value() - side);
    return {a, b};
}

}  // namespace fairsq
