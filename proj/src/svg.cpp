#include "fairsquare/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace fairsq {

namespace {

double to_d(const Rat& r) { return r.get_d(); }

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

const char* kPieceColors[] = {"#4c78a8", "#f58518", "#54a24b", "#e45756", "#72b7b2",
                              "#b279a2", "#9d755d", "#eeca3b", "#bab0ac", "#d67195"};

struct Viewport {
    double x0 = 0, y0 = 0, x1 = 1, y1 = 1;
    void grow(double a, double b, double c, double d) {
        x0 = std::min(x0, a);
        y0 = std::min(y0, b);
        x1 = std::max(x1, c);
        y1 = std::max(y1, d);
    }
};

struct Canvas {
    Viewport vp;
    std::ostringstream body;
    double scale = 1;

    double sx(double x) const { return (x - vp.x0) * scale; }
    // SVG y axis points down; flip so north is up.
    double sy(double y) const { return (vp.y1 - y) * scale; }

    void rect(const Rect& r, const std::string& fill, const std::string& stroke, bool hatch_clip) {
        double x0 = r.x0.finite() ? to_d(r.x0.v) : vp.x0;
        double y0 = r.y0.finite() ? to_d(r.y0.v) : vp.y0;
        double x1 = r.x1.finite() ? to_d(r.x1.v) : vp.x1;
        double y1 = r.y1.finite() ? to_d(r.y1.v) : vp.y1;
        x0 = std::max(x0, vp.x0);
        y0 = std::max(y0, vp.y0);
        x1 = std::min(x1, vp.x1);
        y1 = std::min(y1, vp.y1);
        if (x0 >= x1 || y0 >= y1) return;
        bool clipped = !r.finite() && hatch_clip;
        body << "<rect x=\"" << fmt(sx(x0)) << "\" y=\"" << fmt(sy(y1)) << "\" width=\""
             << fmt((x1 - x0) * scale) << "\" height=\"" << fmt((y1 - y0) * scale) << "\" fill=\""
             << fill << "\" fill-opacity=\"0.55\" stroke=\"" << stroke << "\" stroke-width=\"1\"";
        if (clipped) body << " stroke-dasharray=\"6 3\"";
        body << "/>\n";
    }
};

void grow_by_region(Viewport& vp, const Region& region, bool& seeded) {
    auto grow_rect = [&](const Rect& r) {
        if (!r.finite()) return;
        if (!seeded) {
            vp = Viewport{to_d(r.x0.v), to_d(r.y0.v), to_d(r.x1.v), to_d(r.y1.v)};
            seeded = true;
        } else {
            vp.grow(to_d(r.x0.v), to_d(r.y0.v), to_d(r.x1.v), to_d(r.y1.v));
        }
    };
    if (const auto* r = std::get_if<Rect>(&region)) grow_rect(*r);
    if (const auto* rr = std::get_if<RectRegion>(&region))
        for (const auto& part : rr->rects) grow_rect(part);
    if (const auto* st = std::get_if<Staircase>(&region))
        for (const auto& [x, y] : st->corners)
            grow_rect(Rect::of(x, y, x + 1, y + 1));
}

std::string finish(Canvas& canvas) {
    double w = (canvas.vp.x1 - canvas.vp.x0) * canvas.scale;
    double h = (canvas.vp.y1 - canvas.vp.y0) * canvas.scale;
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(w)
        << "\" height=\"" << fmt(h) << "\" viewBox=\"0 0 " << fmt(w) << " " << fmt(h) << "\">\n"
        << canvas.body.str() << "</svg>\n";
    return out.str();
}

Canvas make_canvas(const Region& cake, const std::vector<PlayerSpec>* players,
                   const std::vector<Square>* pools) {
    Viewport vp;
    bool seeded = false;
    grow_by_region(vp, cake, seeded);
    if (players)
        for (const auto& p : *players)
            if (auto b = p.measure.support_bbox()) {
                Region rb(*b);
                grow_by_region(vp, rb, seeded);
            }
    if (pools)
        for (const auto& p : *pools) {
            Region rb(square_to_rect(p));
            grow_by_region(vp, rb, seeded);
        }
    if (!seeded) vp = Viewport{-1, -1, 1, 1};
    double mx = (vp.x1 - vp.x0) * 0.1 + 1e-9, my = (vp.y1 - vp.y0) * 0.1 + 1e-9;
    vp.x0 -= mx;
    vp.x1 += mx;
    vp.y0 -= my;
    vp.y1 += my;
    Canvas canvas;
    canvas.vp = vp;
    double span = std::max(vp.x1 - vp.x0, vp.y1 - vp.y0);
    canvas.scale = span > 0 ? 640.0 / span : 1.0;
    return canvas;
}

void draw_cake(Canvas& canvas, const Region& cake) {
    const std::string fill = "#e8f0e0", stroke = "#30502c";
    if (const auto* r = std::get_if<Rect>(&cake)) canvas.rect(*r, fill, stroke, true);
    if (const auto* rr = std::get_if<RectRegion>(&cake))
        for (const auto& part : rr->rects) canvas.rect(part, fill, stroke, false);
    if (const auto* st = std::get_if<Staircase>(&cake)) {
        for (int j = 0; j < st->corner_count(); ++j)
            canvas.rect(staircase_quarter(*st, j), fill, "none", false);
        // outline along the boundary polyline
        std::ostringstream pts;
        const auto& cs = st->corners;
        pts << fmt(canvas.sx(canvas.vp.x1)) << "," << fmt(canvas.sy(to_d(cs.front().second))) << " ";
        for (std::size_t j = 0; j < cs.size(); ++j) {
            double x = to_d(cs[j].first), y = to_d(cs[j].second);
            pts << fmt(canvas.sx(x)) << "," << fmt(canvas.sy(y)) << " ";
            if (j + 1 < cs.size())
                pts << fmt(canvas.sx(x)) << "," << fmt(canvas.sy(to_d(cs[j + 1].second))) << " ";
        }
        pts << fmt(canvas.sx(to_d(cs.back().first))) << "," << fmt(canvas.sy(canvas.vp.y1));
        canvas.body << "<polyline points=\"" << pts.str()
                    << "\" fill=\"none\" stroke=\"#30502c\" stroke-width=\"1.5\"/>\n";
    }
    if (std::get_if<HalfPlaneRegion>(&cake) || std::get_if<PlaneRegion>(&cake)) {
        const auto* hp = std::get_if<HalfPlaneRegion>(&cake);
        Rect whole(ExtRat::neg_inf(), hp ? ExtRat(hp->c) : ExtRat::neg_inf(), ExtRat::pos_inf(),
                   ExtRat::pos_inf());
        canvas.rect(whole, fill, stroke, true);
    }
}

}  // namespace

std::string render_allocation_svg(const InstanceFile& inst, const Allocation& a) {
    Canvas canvas = make_canvas(inst.cake, &inst.players, nullptr);
    draw_cake(canvas, inst.cake);
    for (std::size_t i = 0; i < a.pieces.size(); ++i) {
        if (!a.pieces[i]) continue;
        canvas.rect(*a.pieces[i], kPieceColors[i % 10], "#222222", true);
    }
    return finish(canvas);
}

std::string render_pools_svg(const PoolInstance& inst) {
    Canvas canvas = make_canvas(inst.cake, nullptr, &inst.pools);
    draw_cake(canvas, inst.cake);
    for (std::size_t i = 0; i < inst.pools.size(); ++i)
        canvas.rect(square_to_rect(inst.pools[i]), "#2a6fdb", "#10336b", false);
    return finish(canvas);
}

}  // namespace fairsq
