#include "fairsquare/generators.hpp"

#include <algorithm>

namespace fairsq {

std::uint64_t Rng::next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

long Rng::range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
}

Measure random_measure(Rng& rng, const Region& cake, const Rect& window, int max_cells) {
    const long grid = 8;
    const Rat stepx = window.width() / grid;
    const Rat stepy = window.height() / grid;
    const int want = static_cast<int>(1 + rng.below(static_cast<std::uint64_t>(max_cells)));

    std::vector<Cell> cells;
    for (int attempts = 0; attempts < 64 && static_cast<int>(cells.size()) < want; ++attempts) {
        long gx0 = rng.range(0, grid - 1), gy0 = rng.range(0, grid - 1);
        long gx1 = gx0 + rng.range(1, std::max(1L, grid / 2));
        long gy1 = gy0 + rng.range(1, std::max(1L, grid / 2));
        gx1 = std::min(gx1, grid);
        gy1 = std::min(gy1, grid);
        Rect box = Rect::of(window.x0.value() + stepx * gx0, window.y0.value() + stepy * gy0,
                            window.x0.value() + stepx * gx1, window.y0.value() + stepy * gy1);
        if (!region_contains_rect(cake, box)) continue;
        bool overlaps = false;
        for (const auto& c : cells)
            if (interiors_overlap(c.box, box)) overlaps = true;
        if (overlaps) continue;
        cells.push_back({box, Rat(rng.range(1, 16))});
    }
    if (cells.empty()) {
        // Fall back to one guaranteed-inside cell around a cake anchor.
        Rect box = window;
        if (const auto* st = std::get_if<Staircase>(&cake)) {
            const auto& [x, y] = st->corners.front();
            box = Rect::of(x, y, x + 1, y + 1);
        } else if (!region_contains_rect(cake, box)) {
            throw InvalidParameter("sampling window incompatible with cake");
        }
        cells.push_back({box, Rat(1)});
    }
    return Measure(std::move(cells));
}

Staircase random_staircase(Rng& rng, int k) {
    if (k < 1) throw InvalidParameter("staircase needs k >= 1");
    const long span = 4 * k;
    auto pick_strict = [&](int count) {
        std::vector<long> vals;
        while (static_cast<int>(vals.size()) < count) {
            long v = rng.range(0, span);
            if (std::find(vals.begin(), vals.end(), v) == vals.end()) vals.push_back(v);
        }
        std::sort(vals.begin(), vals.end());
        return vals;
    };
    auto xs = pick_strict(k);
    auto ys = pick_strict(k);
    std::vector<std::pair<Rat, Rat>> corners;
    for (int j = 0; j < k; ++j)
        corners.emplace_back(make_rat(xs[k - 1 - j], 2), make_rat(ys[j], 2));
    return make_staircase(std::move(corners));
}

std::vector<std::vector<long>> random_partner_matrix(Rng& rng, int n, int m) {
    std::vector<std::vector<long>> p(n, std::vector<long>(m, 0));
    for (int i = 0; i < n; ++i) {
        long sum = 0;
        for (int j = 0; j < m; ++j) {
            p[i][j] = rng.range(0, n);
            sum += p[i][j];
        }
        while (sum < n) {
            p[i][static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(m)))] += 1;
            ++sum;
        }
    }
    return p;
}

std::vector<PlayerSpec> random_players(Rng& rng, const Region& cake, const Rect& window, int n,
                                       int honest_count, int max_cells) {
    std::vector<PlayerSpec> players;
    for (int i = 0; i < n; ++i) {
        PlayerSpec spec;
        spec.honest = i < honest_count;
        spec.seed = rng.next();
        spec.measure = random_measure(rng, cake, window, max_cells);
        players.push_back(std::move(spec));
    }
    return players;
}

}  // namespace fairsq
