#include "fairsquare/bounds.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <cassert>
#include <functional>

namespace fairsq {

PropBound prop_bound(const std::string& cake, const std::string& family, int n,
                     const BoundParams& params) {
    if (n < 1) throw InvalidParameter("bound rows need n >= 1");
    PropBound row;
    row.cake = cake;
    row.family = family;
    row.n = n;
    // Degenerate denominators at tiny n leave that side of the row open.
    auto inv = [](const Rat& d) -> std::optional<Rat> {
        if (!(d > 0)) return std::nullopt;
        return Rat(Rat(1) / d);
    };

    if (cake == "square" && family == "squares") {
        row.upper_formula = "1/(2n)";
        row.lower_formula = "1/(4n-4)";
        if (n == 1) {
            row.lower = row.upper = Rat(1);
            row.lower_formula = row.upper_formula = "1";
        } else {
            row.upper = inv(Rat(2 * n));
            row.lower = inv(Rat(4 * n - 4));
        }
        return row;
    }
    if (cake == "square" && family == "2fat") {
        row.upper_formula = "1/(2n-1)";
        row.lower_formula = "1/(4n-5)";
        if (n == 1) {
            row.lower = row.upper = Rat(1);
            row.lower_formula = row.upper_formula = "1";
        } else {
            row.upper = inv(Rat(2 * n - 1));
            row.lower = inv(Rat(4 * n - 5));
        }
        return row;
    }
    if (cake == "quarterplane" && (family == "squares" || family == "rfat")) {
        row.upper_formula = "1/(2n-1)";
        row.upper = inv(Rat(2 * n - 1));
        if (family == "squares") {
            row.lower_formula = "1/(2n-1)";
            row.lower = row.upper;
        }
        return row;
    }
    if (cake == "staircase" && family == "squares") {
        if (!params.k || *params.k < 1) throw InvalidParameter("staircase row needs k >= 1");
        row.upper_formula = row.lower_formula = "1/(2n-2+k)";
        row.upper = row.lower = inv(Rat(2 * n - 2 + *params.k));
        return row;
    }
    if (cake == "rectilinear" && (family == "squares" || family == "rfat")) {
        if (!params.k || *params.k < 1) throw InvalidParameter("rectilinear row needs k >= 1");
        row.upper_formula = "1/(2n-2+k)";
        row.upper = inv(Rat(2 * n - 2 + *params.k));
        return row;  // no general protocol known: upper-only row
    }
    if (cake == "rectilinear" && family == "rectangles") {
        if (!params.k || *params.k < 1) throw InvalidParameter("rectilinear row needs k >= 1");
        row.upper_formula = "1/(n-1+k)";
        row.upper = inv(Rat(n - 1 + *params.k));
        return row;
    }
    if (cake == "halfplane" && family == "squares") {
        row.upper_formula = "1/(ceil(3n/2)-1)";
        row.upper = inv(Rat(rat_ceil(Rat(3 * n, 2)) - 1));
        if (n >= 2) {
            row.lower_formula = "1/(2n-2)";
            row.lower = inv(Rat(2 * n - 2));
        }
        return row;
    }
    if (cake == "plane" && family == "squares") {
        row.upper_formula = "1/n";
        row.upper = inv(Rat(n));
        if (n >= 4) {
            row.lower_formula = "1/(2n-4)";
            row.lower = inv(Rat(2 * n - 4));
        }
        return row;
    }
    if (cake == "rect" && family == "rfat") {
        if (!params.L || !params.R || *params.L < 1 || *params.R < 1)
            throw InvalidParameter("L x 1 row needs L >= 1 and R >= 1");
        row.upper_formula = "1/(2n-2+ceil(L/R))";
        row.upper = inv(Rat(2 * n - 2) + Rat(rat_ceil(*params.L / *params.R)));
        Rat mx = *params.L > 2 ? *params.L : Rat(2);
        row.lower_formula = "1/(4n-6+ceil(max(2,L)/R))";
        row.lower = inv(Rat(4 * n - 6) + Rat(rat_ceil(mx / *params.R)));
        return row;
    }
    if ((cake == "rect" || cake == "square") && family == "rectangles") {
        row.upper_formula = row.lower_formula = "1/n";
        row.upper = row.lower = inv(Rat(n));
        return row;
    }
    throw InvalidParameter("unknown bounds row: " + cake + " / " + family);
}

// --- pool instances ------------------------------------------------------

namespace {

void check_pool_instance(const PoolInstance& inst) {
    for (std::size_t i = 0; i < inst.pools.size(); ++i) {
        Rect ri = square_to_rect(inst.pools[i]);
        if (!region_contains_rect(inst.cake, ri)) throw InvalidParameter("pool outside the cake");
        for (std::size_t j = i + 1; j < inst.pools.size(); ++j)
            if (interiors_overlap(ri, square_to_rect(inst.pools[j])))
                throw InvalidParameter("pools overlap");
    }
}

// Largest coordinate reach of an arrangement (all pools are in the first
// quadrant).
Rat arrangement_extent(const std::vector<Square>& pools) {
    Rat m(0);
    for (const auto& p : pools) {
        Rat rx = p.x + p.side.value(), ry = p.y + p.side.value();
        if (rx > m) m = rx;
        if (ry > m) m = ry;
    }
    return m;
}

std::vector<Square> scale_pools(const std::vector<Square>& pools, const Rat& f) {
    std::vector<Square> out;
    out.reserve(pools.size());
    for (const auto& p : pools) out.emplace_back(p.x * f, p.y * f, ExtRat(p.side.value() * f));
    return out;
}

}  // namespace

PoolInstance pools_quarterplane(int n, const Rat& eps) {
    if (n < 1) throw InvalidParameter("need n >= 1");
    if (!(eps > 0) || !(eps < make_rat(1, 4))) throw InvalidParameter("pool size must be in (0, 1/4)");
    std::vector<Square> pools{Square(Rat(0), Rat(0), ExtRat(eps))};
    for (int i = 2; i <= n; ++i) {
        // Shrink the previous arrangement into [0,eps]^2, then add the two
        // distant pools cornered at (1,0) and (0,1).
        pools = scale_pools(pools, eps / arrangement_extent(pools));
        pools.emplace_back(Rat(1), Rat(0), ExtRat(eps));
        pools.emplace_back(Rat(0), Rat(1), ExtRat(eps));
    }
    PoolInstance inst;
    inst.pools = std::move(pools);
    Staircase qp;
    qp.corners = {{Rat(0), Rat(0)}};
    inst.cake = Region(qp);
    inst.cake_desc = Json{{"kind", "quarterplane"}};
    inst.claimed_bound = Rat(1) / Rat(2 * n - 1);
    inst.epsilon = eps;
    check_pool_instance(inst);
    return inst;
}

PoolInstance pools_square(int n, const Rat& eps) {
    if (n < 2) throw InvalidParameter("square arrangement needs n >= 2");
    PoolInstance qp = pools_quarterplane(n, eps);
    Rat f = Rat(1) / arrangement_extent(qp.pools);
    std::vector<Square> pools = scale_pools(qp.pools, f);
    Rat small = eps * f;
    pools.emplace_back(Rat(1) - small, Rat(1) - small, ExtRat(small));
    PoolInstance inst;
    inst.pools = std::move(pools);
    inst.cake = Region(Rect::of(Rat(0), Rat(0), Rat(1), Rat(1)));
    inst.cake_desc = Json{{"kind", "square"}};
    inst.claimed_bound = Rat(1) / Rat(2 * n);
    inst.epsilon = eps;
    check_pool_instance(inst);
    return inst;
}

bool pair_coverable_by_square(const Region& cake, const Rect& a, const Rect& b) {
    // Any covering square can be shrunk to the hull's max extent, and the
    // placement domain is an erosion whose corners sit on pinned coords.
    Rect hull(ext_min(a.x0, b.x0), ext_min(a.y0, b.y0), ext_max(a.x1, b.x1), ext_max(a.y1, b.y1));
    Rat t = hull.width() > hull.height() ? hull.width() : hull.height();

    std::vector<Rat> xs{hull.x1.value() - t, hull.x0.value()};
    std::vector<Rat> ys{hull.y1.value() - t, hull.y0.value()};
    if (const auto* rr = std::get_if<RectRegion>(&cake)) {
        for (const auto& part : rr->rects) {
            for (const Rat& c : {part.x0.value(), part.x1.value()}) {
                xs.push_back(c);
                xs.push_back(c - t);
            }
            for (const Rat& c : {part.y0.value(), part.y1.value()}) {
                ys.push_back(c);
                ys.push_back(c - t);
            }
        }
    }
    auto in_range = [](std::vector<Rat>& v, const Rat& lo, const Rat& hi) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        std::vector<Rat> out;
        for (const auto& c : v)
            if (c >= lo && c <= hi) out.push_back(c);
        return out;
    };
    auto xc = in_range(xs, hull.x1.value() - t, hull.x0.value());
    auto yc = in_range(ys, hull.y1.value() - t, hull.y0.value());
    for (const auto& x0 : xc)
        for (const auto& y0 : yc)
            if (region_contains_rect(cake, Rect::of(x0, y0, x0 + t, y0 + t))) return true;
    return false;
}

PoolInstance pools_rectilinear(const RectRegion& c, int n, const Rat& eps,
                               const std::vector<Square>& independent_set) {
    if (n < 1) throw InvalidParameter("need n >= 1");
    if (independent_set.empty()) throw InvalidParameter("need a non-empty independent set");
    const Region cake(c);
    std::vector<Rect> boxes;
    for (const auto& p : independent_set) {
        boxes.push_back(square_to_rect(p));
        if (!region_contains_rect(cake, boxes.back()))
            throw InvalidParameter("independent-set pool outside the cake");
    }
    for (std::size_t i = 0; i < boxes.size(); ++i)
        for (std::size_t j = i + 1; j < boxes.size(); ++j)
            if (pair_coverable_by_square(cake, boxes[i], boxes[j]))
                throw InvalidParameter("pool set is not square-independent");

    // Deterministic convex corner: the lowest-leftmost region corner whose
    // neighbourhood has exactly one inside quadrant.
    std::vector<Rat> xs, ys;
    for (const auto& part : c.rects) {
        xs.push_back(part.x0.value());
        xs.push_back(part.x1.value());
        ys.push_back(part.y0.value());
        ys.push_back(part.y1.value());
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    Rat probe = xs[1] - xs[0];
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) probe = rat_min(probe, Rat(xs[i + 1] - xs[i]));
    for (std::size_t i = 0; i + 1 < ys.size(); ++i) probe = rat_min(probe, Rat(ys[i + 1] - ys[i]));
    probe /= 4;

    std::optional<std::pair<Rat, Rat>> corner;
    int ox = 1, oy = 1;
    for (const auto& y : ys) {
        for (const auto& x : xs) {
            int inside = 0, qx = 0, qy = 0;
            for (int sx : {-1, +1})
                for (int sy : {-1, +1}) {
                    if (region_contains_point(c, x + sx * probe, y + sy * probe)) {
                        ++inside;
                        qx = sx;
                        qy = sy;
                    }
                }
            if (inside == 1) {
                corner = {x, y};
                ox = qx;
                oy = qy;
                break;
            }
        }
        if (corner) break;
    }
    if (!corner) throw InvalidParameter("region has no convex corner");
    const Rat cx = corner->first, cy = corner->second;

    // Maximal square nested into that corner.
    std::vector<Rat> sides;
    for (const auto& xa : xs)
        for (const auto& xb : xs)
            if (xb > xa) sides.push_back(xb - xa);
    for (const auto& ya : ys)
        for (const auto& yb : ys)
            if (yb > ya) sides.push_back(yb - ya);
    std::sort(sides.begin(), sides.end());
    sides.erase(std::unique(sides.begin(), sides.end()), sides.end());
    auto corner_rect = [&](const Rat& s) {
        Rat x0 = ox > 0 ? cx : Rat(cx - s);
        Rat y0 = oy > 0 ? cy : Rat(cy - s);
        return Rect::of(x0, y0, x0 + s, y0 + s);
    };
    Rat max_side(0);
    for (const auto& s : sides)
        if (region_contains_rect(cake, corner_rect(s))) max_side = s;
    if (!(max_side > 0)) throw InvalidParameter("degenerate corner square");
    Rect corner_sq = corner_rect(max_side);

    // Drop the (at most one) pool covered by the corner square, or the
    // nearest pool if it covers none.
    std::vector<Square> kept;
    int drop = -1;
    for (std::size_t i = 0; i < boxes.size(); ++i)
        if (rect_contains(corner_sq, boxes[i])) {
            if (drop >= 0) throw InvalidParameter("corner square covers two independent pools");
            drop = static_cast<int>(i);
        }
    if (drop < 0) {
        Rat best(-1);
        for (std::size_t i = 0; i < boxes.size(); ++i) {
            Rat dx = rat_max(rat_max(Rat(boxes[i].x0.value() - cx), Rat(cx - boxes[i].x1.value())), Rat(0));
            Rat dy = rat_max(rat_max(Rat(boxes[i].y0.value() - cy), Rat(cy - boxes[i].y1.value())), Rat(0));
            Rat d = rat_max(dx, dy);
            if (best < 0 || d < best) {
                best = d;
                drop = static_cast<int>(i);
            }
        }
    }
    Rat cluster_gap(-1);
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        if (static_cast<int>(i) == drop) continue;
        kept.push_back(independent_set[i]);
        Rat dx = rat_max(rat_max(Rat(boxes[i].x0.value() - cx), Rat(cx - boxes[i].x1.value())), Rat(0));
        Rat dy = rat_max(rat_max(Rat(boxes[i].y0.value() - cy), Rat(cy - boxes[i].y1.value())), Rat(0));
        Rat d = rat_max(dx, dy);
        if (cluster_gap < 0 || d < cluster_gap) cluster_gap = d;
    }

    // Quarter-plane cluster scaled into a small corner neighbourhood that
    // no square containing a kept pool can reach.
    Rat delta = max_side;
    if (cluster_gap > 0 && cluster_gap < delta) delta = cluster_gap;
    delta /= 4;
    PoolInstance qp = pools_quarterplane(n, eps);
    Rat f = delta / arrangement_extent(qp.pools);
    std::vector<Square> pools = kept;
    for (const auto& p : qp.pools) {
        Rat s = p.side.value() * f;
        Rat px = ox > 0 ? Rat(cx + p.x * f) : Rat(cx - p.x * f - s);
        Rat py = oy > 0 ? Rat(cy + p.y * f) : Rat(cy - p.y * f - s);
        pools.emplace_back(px, py, ExtRat(s));
    }

    PoolInstance inst;
    inst.pools = std::move(pools);
    inst.cake = cake;
    inst.cake_desc = Json{{"kind", "rectilinear"}, {"region", region_to_json(c)}};
    inst.claimed_bound = Rat(1) / Rat(2 * n - 2 + static_cast<long>(independent_set.size()));
    inst.epsilon = eps;
    check_pool_instance(inst);
    return inst;
}

Measure pool_measure(const PoolInstance& inst) {
    std::vector<Cell> cells;
    for (const auto& p : inst.pools) {
        Rect box = square_to_rect(p);
        cells.push_back({box, Rat(1) / area(box)});
    }
    return Measure(std::move(cells));
}

// --- desk-scale grid oracles ---------------------------------------------

namespace {

constexpr int kMaxGrid = 26;

// Region rasterized on the half-unit grid.
struct GridRegion {
    int w = 0, h = 0;        // grid dimensions (1 cell = 1/2 x 1/2)
    Rat origin_x, origin_y;
    std::vector<int> prefix;  // (w+1) x (h+1) inclusion prefix sums

    bool cell(int x, int y, const std::vector<char>& cells) const {
        return cells[static_cast<std::size_t>(y) * w + x] != 0;
    }
    int sum(int x0, int y0, int x1, int y1) const {  // half-open cell ranges
        auto at = [&](int x, int y) { return prefix[static_cast<std::size_t>(y) * (w + 1) + x]; };
        return at(x1, y1) - at(x0, y1) - at(x1, y0) + at(x0, y0);
    }
    bool box_inside(int x0, int y0, int x1, int y1) const {
        return sum(x0, y0, x1, y1) == (x1 - x0) * (y1 - y0);
    }
};

GridRegion rasterize(const RectRegion& c) {
    Rect bbox = region_bbox(c);
    const Rat half(1, 2);
    for (const auto& part : c.rects)
        for (const Rat& v : {part.x0.value(), part.y0.value(), part.x1.value(), part.y1.value()})
            if (Rat(rat_floor(v / half)) * half != v)
                throw SizeLimit("grid oracle needs coordinates that are multiples of 1/2");
    GridRegion g;
    g.origin_x = bbox.x0.value();
    g.origin_y = bbox.y0.value();
    Rat w2 = bbox.width() / half, h2 = bbox.height() / half;
    long w = rat_floor_long(w2), h = rat_floor_long(h2);
    if (w > kMaxGrid || h > kMaxGrid) throw SizeLimit("grid oracle bounding box exceeds 12x12");
    g.w = static_cast<int>(w);
    g.h = static_cast<int>(h);
    std::vector<char> cells(static_cast<std::size_t>(g.w) * g.h, 0);
    for (int y = 0; y < g.h; ++y)
        for (int x = 0; x < g.w; ++x) {
            Rect cell = Rect::of(g.origin_x + half * x, g.origin_y + half * y,
                                 g.origin_x + half * (x + 1), g.origin_y + half * (y + 1));
            cells[static_cast<std::size_t>(y) * g.w + x] = region_contains_rect(c, cell) ? 1 : 0;
        }
    g.prefix.assign(static_cast<std::size_t>(g.w + 1) * (g.h + 1), 0);
    for (int y = 0; y < g.h; ++y)
        for (int x = 0; x < g.w; ++x) {
            g.prefix[static_cast<std::size_t>(y + 1) * (g.w + 1) + (x + 1)] =
                g.prefix[static_cast<std::size_t>(y) * (g.w + 1) + (x + 1)] +
                g.prefix[static_cast<std::size_t>(y + 1) * (g.w + 1) + x] -
                g.prefix[static_cast<std::size_t>(y) * (g.w + 1) + x] +
                (cells[static_cast<std::size_t>(y) * g.w + x] ? 1 : 0);
        }
    return g;
}

struct GridBox {
    int x0, y0, x1, y1;  // cell ranges, half-open
};

// Inscribed family shapes at half-unit resolution.
std::vector<GridBox> inscribed_shapes(const GridRegion& g, ShapeFamily family, const Rat& R) {
    std::vector<GridBox> out;
    for (int y0 = 0; y0 < g.h; ++y0)
        for (int x0 = 0; x0 < g.w; ++x0)
            for (int y1 = y0 + 1; y1 <= g.h; ++y1)
                for (int x1 = x0 + 1; x1 <= g.w; ++x1) {
                    int w = x1 - x0, h = y1 - y0;
                    if (family == ShapeFamily::Squares) {
                        if (w != h) continue;
                    } else {
                        long big = std::max(w, h), small = std::min(w, h);
                        if (Rat(big) > R * Rat(small)) continue;
                    }
                    if (g.box_inside(x0, y0, x1, y1)) out.push_back({x0, y0, x1, y1});
                }
    return out;
}

// Keep only shapes not contained in another inscribed shape.
std::vector<GridBox> maximal_shapes(std::vector<GridBox> shapes) {
    std::vector<GridBox> out;
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < shapes.size() && maximal; ++j) {
            if (i == j) continue;
            const auto& a = shapes[i];
            const auto& b = shapes[j];
            if (b.x0 <= a.x0 && b.y0 <= a.y0 && b.x1 >= a.x1 && b.y1 >= a.y1 &&
                (b.x0 != a.x0 || b.y0 != a.y0 || b.x1 != a.x1 || b.y1 != a.y1))
                maximal = false;
        }
        if (maximal) out.push_back(shapes[i]);
    }
    return out;
}

constexpr std::size_t kMaxVerts = 1024;
using VertSet = std::bitset<kMaxVerts>;

// Exact maximum independent set with a simple size-bound prune.
int max_independent_set(const std::vector<VertSet>& adj) {
    const int n = static_cast<int>(adj.size());
    int best = 0;
    VertSet all;
    for (int i = 0; i < n; ++i) all.set(i);

    std::function<void(VertSet, int)> go = [&](VertSet cand, int size) {
        if (size + static_cast<int>(cand.count()) <= best) return;
        int v = -1;
        for (int i = 0; i < n; ++i)
            if (cand.test(i)) {
                v = i;
                break;
            }
        if (v < 0) {
            best = std::max(best, size);
            return;
        }
        VertSet take = cand;
        take.reset(v);
        take &= ~adj[v];
        go(take, size + 1);
        VertSet skip = cand;
        skip.reset(v);
        go(skip, size);
        best = std::max(best, size);
    };
    go(all, 0);
    return best;
}

}  // namespace

int independence_number_bruteforce(const RectRegion& c, ShapeFamily family, const Rat& R) {
    if (family == ShapeFamily::Rectangles)
        throw InvalidParameter("use a finite fatness for the brute-force oracle");
    GridRegion g = rasterize(c);
    auto shapes = maximal_shapes(inscribed_shapes(g, family, family == ShapeFamily::Squares ? Rat(1) : R));

    // Candidate pool positions: centers of the inside half-unit cells.
    std::vector<std::pair<int, int>> pools;
    for (int y = 0; y < g.h; ++y)
        for (int x = 0; x < g.w; ++x)
            if (g.box_inside(x, y, x + 1, y + 1)) pools.emplace_back(x, y);
    if (pools.size() > kMaxVerts) throw SizeLimit("too many candidate pools");

    std::vector<VertSet> adj(pools.size());
    for (const auto& s : shapes) {
        VertSet inside;
        for (std::size_t i = 0; i < pools.size(); ++i) {
            auto [px, py] = pools[i];
            if (px >= s.x0 && px < s.x1 && py >= s.y0 && py < s.y1) inside.set(i);
        }
        if (inside.count() < 2) continue;
        for (std::size_t i = 0; i < pools.size(); ++i)
            if (inside.test(i)) {
                VertSet others = inside;
                others.reset(i);
                adj[i] |= others;
            }
    }
    return max_independent_set(adj);
}

int cover_number_bruteforce(const RectRegion& c, ShapeFamily family) {
    if (family == ShapeFamily::Rectangles)
        throw InvalidParameter("use squares or a finite fatness for the cover oracle");
    GridRegion g = rasterize(c);
    auto shapes =
        maximal_shapes(inscribed_shapes(g, family, family == ShapeFamily::Squares ? Rat(1) : Rat(2)));

    std::vector<std::pair<int, int>> cells;
    for (int y = 0; y < g.h; ++y)
        for (int x = 0; x < g.w; ++x)
            if (g.box_inside(x, y, x + 1, y + 1)) cells.emplace_back(x, y);
    const int m = static_cast<int>(cells.size());
    if (m == 0) return 0;
    if (cells.size() > kMaxVerts) throw SizeLimit("too many cells");

    std::vector<VertSet> covers(shapes.size());
    for (std::size_t s = 0; s < shapes.size(); ++s)
        for (int i = 0; i < m; ++i) {
            auto [px, py] = cells[i];
            if (px >= shapes[s].x0 && px < shapes[s].x1 && py >= shapes[s].y0 && py < shapes[s].y1)
                covers[s].set(i);
        }

    VertSet universe;
    for (int i = 0; i < m; ++i) universe.set(i);
    int best = m + 1;
    std::function<void(VertSet, int)> go = [&](VertSet uncovered, int used) {
        if (used >= best) return;
        if (uncovered.none()) {
            best = used;
            return;
        }
        // Branch on the uncovered cell with the fewest covering shapes.
        int cell = -1;
        std::size_t fewest = shapes.size() + 1;
        for (int i = 0; i < m; ++i) {
            if (!uncovered.test(i)) continue;
            std::size_t cnt = 0;
            for (std::size_t s = 0; s < shapes.size(); ++s)
                if (covers[s].test(i)) ++cnt;
            if (cnt < fewest) {
                fewest = cnt;
                cell = i;
            }
        }
        if (fewest == 0) return;  // uncoverable cell
        for (std::size_t s = 0; s < shapes.size(); ++s) {
            if (!covers[s].test(cell)) continue;
            go(uncovered & ~covers[s], used + 1);
        }
    };
    go(universe, 0);
    if (best > m) throw InvalidParameter("region is not coverable by the shape family");
    return best;
}

int max_disjoint_two_pool_squares(const PoolInstance& inst) {
    const auto& pools = inst.pools;
    if (pools.size() > 16) throw SizeLimit("two-pool square search is desk-scale only");
    std::vector<Rect> boxes;
    for (const auto& p : pools) boxes.push_back(square_to_rect(p));

    auto touches = [](const Rect& a, const Rect& b) {
        return ext_max(a.x0, b.x0) <= ext_min(a.x1, b.x1) &&
               ext_max(a.y0, b.y0) <= ext_min(a.y1, b.y1);
    };

    std::vector<Rat> cake_xs, cake_ys;
    if (const auto* rr = std::get_if<RectRegion>(&inst.cake)) {
        for (const auto& part : rr->rects) {
            cake_xs.push_back(part.x0.value());
            cake_xs.push_back(part.x1.value());
            cake_ys.push_back(part.y0.value());
            cake_ys.push_back(part.y1.value());
        }
    } else if (const auto* rc = std::get_if<Rect>(&inst.cake)) {
        cake_xs = {rc->x0.value(), rc->x1.value()};
        cake_ys = {rc->y0.value(), rc->y1.value()};
    } else if (std::get_if<Staircase>(&inst.cake)) {
        const auto& st = std::get<Staircase>(inst.cake);
        for (const auto& [x, y] : st.corners) {
            cake_xs.push_back(x);
            cake_ys.push_back(y);
        }
    }

    std::vector<Rect> candidates;
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        for (std::size_t j = i + 1; j < boxes.size(); ++j) {
            const Rect& A = boxes[i];
            const Rect& B = boxes[j];
            Rat gx = ext_max(A.x0, B.x0).value() - ext_min(A.x1, B.x1).value();
            Rat gy = ext_max(A.y0, B.y0).value() - ext_min(A.y1, B.y1).value();
            Rat t = gx > gy ? gx : gy;
            if (!(t > 0)) continue;  // touching pools; no minimal square
            Rat lo_x = ext_max(A.x0, B.x0).value() - t, hi_x = ext_min(A.x1, B.x1).value();
            Rat lo_y = ext_max(A.y0, B.y0).value() - t, hi_y = ext_min(A.y1, B.y1).value();
            std::vector<Rat> xs{lo_x, hi_x}, ys{lo_y, hi_y};
            for (const auto& cxv : cake_xs) {
                xs.push_back(cxv);
                xs.push_back(cxv - t);
            }
            for (const auto& cyv : cake_ys) {
                ys.push_back(cyv);
                ys.push_back(cyv - t);
            }
            for (const auto& x0 : xs) {
                if (x0 < lo_x || x0 > hi_x) continue;
                for (const auto& y0 : ys) {
                    if (y0 < lo_y || y0 > hi_y) continue;
                    Rect sq = Rect::of(x0, y0, x0 + t, y0 + t);
                    if (!region_contains_rect(inst.cake, sq)) continue;
                    int hit = 0;
                    for (const auto& pb : boxes)
                        if (touches(sq, pb)) ++hit;
                    if (hit >= 2) candidates.push_back(sq);
                }
            }
        }
    }
    std::sort(candidates.begin(), candidates.end(), [](const Rect& a, const Rect& b) {
        auto key = [](const Rect& r) {
            return std::array<Rat, 4>{r.x0.value(), r.y0.value(), r.x1.value(), r.y1.value()};
        };
        return key(a) < key(b);
    });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    if (candidates.size() > kMaxVerts) throw SizeLimit("too many candidate squares");

    std::vector<VertSet> adj(candidates.size());
    for (std::size_t i = 0; i < candidates.size(); ++i)
        for (std::size_t j = i + 1; j < candidates.size(); ++j)
            if (interiors_overlap(candidates[i], candidates[j])) {
                adj[i].set(j);
                adj[j].set(i);
            }
    return max_independent_set(adj);
}

std::pair<RectRegion, std::vector<Square>> notched_plate_example() {
    RectRegion region = make_region({
        Rect::of(Rat(10), Rat(0), Rat(40), Rat(10)),
        Rect::of(Rat(0), Rat(10), Rat(40), Rat(20)),
        Rect::of(Rat(0), Rat(20), Rat(50), Rat(50)),
    });
    std::vector<Square> indep{Square(Rat(12), Rat(2), ExtRat(Rat(4))),
                              Square(Rat(2), Rat(12), ExtRat(Rat(4))),
                              Square(Rat(46), Rat(22), ExtRat(Rat(4)))};
    return {region, indep};
}

VerifyReport verify_allocation(const Allocation& a, const std::vector<PlayerSpec>& players,
                               const Rat& bound, ShapeFamily family) {
    VerifyReport rep;
    std::vector<Rect> placed;
    for (const auto& p : a.pieces)
        if (p) placed.push_back(*p);
    if (!disjoint_and_contained(placed, a.containment)) {
        rep.structure_ok = false;
        rep.failures.push_back("disjointness");
    }
    for (std::size_t i = 0; i < a.pieces.size(); ++i) {
        if (!a.pieces[i]) continue;
        bool ok = true;
        switch (family) {
            case ShapeFamily::Squares: ok = is_square(*a.pieces[i]); break;
            case ShapeFamily::TwoFatRects:
                ok = a.pieces[i]->finite() && is_r_fat(*a.pieces[i], Rat(2));
                break;
            case ShapeFamily::Rectangles: ok = true; break;
        }
        if (!ok) {
            rep.shapes_ok = false;
            rep.failures.push_back("shape: player " + std::to_string(i));
        }
    }
    for (std::size_t i = 0; i < players.size(); ++i) {
        const Rat total = players[i].measure.total();
        if (total == 0) {
            rep.vacuous.push_back(true);
            rep.proportions.push_back(Rat(0));
            continue;
        }
        rep.vacuous.push_back(false);
        Rat got(0);
        if (i < a.pieces.size() && a.pieces[i])
            got = players[i].measure.eval(Region(*a.pieces[i]));
        rep.proportions.push_back(got / total);
        bool honest_ok = !players[i].honest || a.violated[i] || rep.proportions.back() >= bound;
        if (!honest_ok) {
            rep.value_ok = false;
            rep.failures.push_back("proportionality: player " + std::to_string(i));
        }
    }
    rep.pass = rep.structure_ok && rep.shapes_ok && rep.value_ok;
    return rep;
}

}  // namespace fairsq
