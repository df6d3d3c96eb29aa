#include "fairsquare/measure.hpp"

#include <algorithm>
#include <cassert>

namespace fairsq {

Measure::Measure(std::vector<Cell> cells) : cells_(std::move(cells)) {
    for (const auto& c : cells_) {
        if (!c.box.finite()) throw InvalidParameter("measure cells must be finite");
        if (c.density < 0) throw InvalidParameter("measure density must be non-negative");
    }
    for (std::size_t i = 0; i < cells_.size(); ++i)
        for (std::size_t j = i + 1; j < cells_.size(); ++j)
            if (interiors_overlap(cells_[i].box, cells_[j].box))
                throw InvalidParameter("measure cells overlap");
    for (const auto& c : cells_) total_ += c.density * area(c.box);
}

Rat Measure::eval(const Region& region) const {
    Rat v(0);
    for (const auto& c : cells_) {
        if (c.density == 0) continue;
        v += c.density * overlap_area(region, c.box);
    }
    return v;
}

Measure Measure::scaled(const Rat& factor) const {
    if (!(factor > 0)) throw InvalidParameter("scale factor must be positive");
    std::vector<Cell> out = cells_;
    for (auto& c : out) c.density *= factor;
    return Measure(std::move(out));
}

std::optional<Rect> Measure::support_bbox() const {
    std::optional<Rect> box;
    for (const auto& c : cells_) {
        if (c.density == 0) continue;
        if (!box) {
            box = c.box;
        } else {
            box = Rect(ext_min(box->x0, c.box.x0), ext_min(box->y0, c.box.y0),
                       ext_max(box->x1, c.box.x1), ext_max(box->y1, c.box.y1));
        }
    }
    return box;
}

namespace {

// Piece of `cake` on the chosen side of the cut at coordinate c.
Rect side_piece(const Rect& cake, int axis, bool keep_low, const Rat& c) {
    Rect piece = cake;
    if (keep_low)
        piece.hi(axis) = ExtRat(c);
    else
        piece.lo(axis) = ExtRat(c);
    return piece;
}

}  // namespace

Rat mark_vertical(const Measure& v, const Rect& cake, const Rat& target, MarkDir dir) {
    const int axis = (dir == MarkDir::West || dir == MarkDir::East) ? 0 : 1;
    const bool keep_low = (dir == MarkDir::West || dir == MarkDir::South);

    if (target < 0) throw InvalidParameter("mark target must be non-negative");
    const Rat total = v.eval(Region(cake));
    if (target > total) throw TargetExceedsValue();

    std::vector<Rat> xs;
    if (cake.lo(axis).finite()) xs.push_back(cake.lo(axis).value());
    if (cake.hi(axis).finite()) xs.push_back(cake.hi(axis).value());
    for (const auto& c : v.cells()) {
        for (const Rat& e : {c.box.lo(axis).value(), c.box.hi(axis).value()}) {
            if (ExtRat(e) >= cake.lo(axis) && ExtRat(e) <= cake.hi(axis)) xs.push_back(e);
        }
    }
    if (xs.empty()) throw InvalidParameter("mark on cake with no finite breakpoints");
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    auto value_at = [&](const Rat& c) {
        if (ExtRat(c) <= cake.lo(axis)) return keep_low ? Rat(0) : total;
        if (ExtRat(c) >= cake.hi(axis)) return keep_low ? total : Rat(0);
        return v.eval(Region(side_piece(cake, axis, keep_low, c)));
    };

    if (keep_low) {
        if (target == 0) return cake.lo(axis).finite() ? cake.lo(axis).value() : xs.front();
        Rat prev_x = xs.front(), prev_v = value_at(xs.front());
        if (prev_v >= target) return prev_x;  // all value west of the first breakpoint is 0 < target
        for (std::size_t i = 1; i < xs.size(); ++i) {
            Rat cur_v = value_at(xs[i]);
            if (cur_v >= target) {
                assert(cur_v > prev_v);
                return prev_x + (target - prev_v) * (xs[i] - prev_x) / (cur_v - prev_v);
            }
            prev_x = xs[i];
            prev_v = cur_v;
        }
        throw TargetExceedsValue();  // unreachable: target <= total
    }

    // keep_high: value decreases with c; return the smallest root.
    if (target == total) return cake.lo(axis).finite() ? cake.lo(axis).value() : xs.front();
    Rat prev_x = xs.front(), prev_v = value_at(xs.front());
    if (prev_v <= target) return prev_x;
    for (std::size_t i = 1; i < xs.size(); ++i) {
        Rat cur_v = value_at(xs[i]);
        if (cur_v <= target) {
            assert(prev_v > cur_v);
            return prev_x + (prev_v - target) * (xs[i] - prev_x) / (prev_v - cur_v);
        }
        prev_x = xs[i];
        prev_v = cur_v;
    }
    return xs.back();  // target == 0 with value vanishing at the last breakpoint
}

namespace {

struct AxisForm {
    // Overlap along one axis as a function of the side l on one segment:
    // either a constant k, or the linear form (l - m).
    bool linear = false;
    Rat k;  // constant value, or the shift m of the linear form
};

struct SegmentPoly {
    Rat a, b, c;  // a*l^2 + b*l + c
    Rat at(const Rat& l) const { return a * l * l + b * l + c; }
};

}  // namespace

CornerMarkResult mark_corner_square(const Measure& v, const Rat& corner_x, const Rat& corner_y,
                                    int ox, int oy, const Rat& target, RoundMode mode) {
    if (!(target > 0)) throw InvalidParameter("corner mark target must be positive");
    if ((ox != 1 && ox != -1) || (oy != 1 && oy != -1))
        throw InvalidParameter("corner orientation must be +/-1");

    // Distance intervals of each cell along the two growth directions.
    struct CellDist {
        Rat x0, x1, y0, y1;  // x0 < x1, y0 < y1 measured from the corner
        Rat density;
    };
    std::vector<CellDist> dists;
    std::vector<Rat> bps{Rat(0)};
    for (const auto& c : v.cells()) {
        if (c.density == 0) continue;
        CellDist d;
        d.density = c.density;
        if (ox > 0) {
            d.x0 = c.box.x0.value() - corner_x;
            d.x1 = c.box.x1.value() - corner_x;
        } else {
            d.x0 = corner_x - c.box.x1.value();
            d.x1 = corner_x - c.box.x0.value();
        }
        if (oy > 0) {
            d.y0 = c.box.y0.value() - corner_y;
            d.y1 = c.box.y1.value() - corner_y;
        } else {
            d.y0 = corner_y - c.box.y1.value();
            d.y1 = corner_y - c.box.y0.value();
        }
        if (d.x1 <= 0 || d.y1 <= 0) continue;  // cell behind the corner
        dists.push_back(d);
        for (const Rat& e : {d.x0, d.x1, d.y0, d.y1})
            if (e > 0) bps.push_back(e);
    }
    std::sort(bps.begin(), bps.end());
    bps.erase(std::unique(bps.begin(), bps.end()), bps.end());

    auto value_at = [&](const Rat& l) {
        Rat s(0);
        for (const auto& d : dists) {
            Rat wx = std::min(l, d.x1, [](const Rat& a, const Rat& b) { return a < b; }) -
                     std::max(Rat(0), d.x0, [](const Rat& a, const Rat& b) { return a < b; });
            if (wx <= 0) continue;
            Rat wy = std::min(l, d.y1, [](const Rat& a, const Rat& b) { return a < b; }) -
                     std::max(Rat(0), d.y0, [](const Rat& a, const Rat& b) { return a < b; });
            if (wy <= 0) continue;
            s += d.density * wx * wy;
        }
        return s;
    };

    const Rat quarter_value = value_at(bps.back());
    if (target > quarter_value) throw InsufficientValue();

    for (std::size_t i = 0; i + 1 <= bps.size(); ++i) {
        const Rat& la = bps[i];
        Rat va = value_at(la);
        if (va == target) {
            if (!(la > 0)) throw InvalidParameter("corner mark target reached at zero side");
            return {ExtRat(la), true};
        }
        if (i + 1 == bps.size()) break;
        const Rat& lb = bps[i + 1];
        Rat vb = value_at(lb);
        if (!(va < target && target <= vb)) continue;

        // Assemble the quadratic on (la, lb).
        SegmentPoly poly{Rat(0), Rat(0), Rat(0)};
        for (const auto& d : dists) {
            auto form = [&](const Rat& d0, const Rat& d1) -> std::optional<AxisForm> {
                Rat lo_eff = d0 > 0 ? d0 : Rat(0);
                if (lb <= lo_eff) return std::nullopt;       // not reached yet
                if (d1 <= la) return AxisForm{false, d1 - lo_eff};  // saturated
                return AxisForm{true, lo_eff};               // overlap = l - lo_eff
            };
            auto fx = form(d.x0, d.x1);
            if (!fx) continue;
            auto fy = form(d.y0, d.y1);
            if (!fy) continue;
            if (!fx->linear && !fy->linear) {
                poly.c += d.density * fx->k * fy->k;
            } else if (fx->linear && !fy->linear) {
                poly.b += d.density * fy->k;
                poly.c -= d.density * fy->k * fx->k;
            } else if (!fx->linear && fy->linear) {
                poly.b += d.density * fx->k;
                poly.c -= d.density * fx->k * fy->k;
            } else {
                poly.a += d.density;
                poly.b -= d.density * (fx->k + fy->k);
                poly.c += d.density * fx->k * fy->k;
            }
        }
        assert(poly.at(la) == va && poly.at(lb) == vb);

        if (poly.a == 0) {
            assert(poly.b != 0);
            Rat root = (target - poly.c) / poly.b;
            assert(root > la && root <= lb);
            return {ExtRat(root), true};
        }
        Rat disc = poly.b * poly.b - 4 * poly.a * (poly.c - target);
        if (auto sq = rat_sqrt_exact(disc)) {
            Rat root = (-poly.b + *sq) / (2 * poly.a);
            assert(root > la && root <= lb);
            return {ExtRat(root), true};
        }
        // Irrational root: dyadic bracket per the configured precision,
        // then snap to the simplest rational inside it so denominators do
        // not compound through recursive protocols.
        Rat lo = la, hi = lb;
        const Rat& eps = mark_epsilon();
        for (int iter = 0; iter < 512; ++iter) {
            if (poly.at(hi) - poly.at(lo) < eps && (mode == RoundMode::Up || lo > 0)) break;
            Rat midp = (lo + hi) / 2;
            if (poly.at(midp) >= target)
                hi = midp;
            else
                lo = midp;
        }
        for (int iter = 0; iter < 32; ++iter) {
            Rat r = simplest_rational_between(lo, hi);
            if (poly.at(r) >= target) {
                if (mode == RoundMode::Up && r > 0) return {ExtRat(r), false};
                hi = r;
            } else {
                if (mode == RoundMode::Down) return {ExtRat(r), false};
                lo = r;
            }
            if (lo == hi) break;
        }
        if (mode == RoundMode::Up) return {ExtRat(hi), false};
        return {ExtRat(lo), false};
    }
    // target == quarter_value but only approached within the last cells:
    // supports are bounded, so the limit is attained at the last breakpoint
    // and the scan above must have caught it.
    throw InsufficientValue();
}

Measure reflect_measure_y(const Measure& v, const Rat& pivot) {
    std::vector<Cell> out;
    out.reserve(v.cells().size());
    for (const auto& c : v.cells()) {
        Rect b = c.box;
        Rat ny0 = 2 * pivot - b.y1.value();
        Rat ny1 = 2 * pivot - b.y0.value();
        out.push_back({Rect(b.x0, ExtRat(ny0), b.x1, ExtRat(ny1)), c.density});
    }
    return Measure(std::move(out));
}

}  // namespace fairsq
