#pragma once

#include "fairsquare/protocols.hpp"

#include <optional>
#include <string>

namespace fairsq {

struct SizeLimit : std::runtime_error {
    explicit SizeLimit(const std::string& what) : std::runtime_error(what) {}
};

// One row of the bounds table: lower = best known protocol guarantee,
// upper = impossibility bound. Either side may be open.
struct PropBound {
    std::string cake;
    std::string family;
    int n = 0;
    std::optional<Rat> lower;
    std::optional<Rat> upper;
    std::string lower_formula;
    std::string upper_formula;
};

struct BoundParams {
    std::optional<int> k;   // independence number / staircase corners
    std::optional<Rat> L;   // cake aspect for L x 1 rows
    std::optional<Rat> R;   // fatness of the usable shapes
};

PropBound prop_bound(const std::string& cake, const std::string& family, int n,
                     const BoundParams& params = {});

// A water-pool impossibility instance: every pool carries value exactly 1.
struct PoolInstance {
    std::vector<Square> pools;
    Json cake_desc;
    Region cake;
    Rat claimed_bound;
    Rat epsilon;
};

// Recursive quarter-plane arrangement: 2n-1 pools certifying 1/(2n-1).
PoolInstance pools_quarterplane(int n, const Rat& eps);
// Unit-square arrangement: the quarter-plane pools shrunk into the square
// plus one pool at the north-eastern corner; 2n pools certifying 1/(2n).
PoolInstance pools_square(int n, const Rat& eps);
// Rectilinear arrangement: an independent set with one pool swapped for a
// quarter-plane cluster near a convex corner; 2n-2+k pools.
PoolInstance pools_rectilinear(const RectRegion& c, int n, const Rat& eps,
                               const std::vector<Square>& independent_set);

// Piecewise-uniform measure with value exactly 1 on each pool.
Measure pool_measure(const PoolInstance& inst);

// True iff some square inside `cake` contains both pool boxes.
bool pair_coverable_by_square(const Region& cake, const Rect& a, const Rect& b);

// Exact brute-force oracles on desk-scale polygons whose coordinates are
// multiples of 1/2 with a bounding box of at most 12x12.
int independence_number_bruteforce(const RectRegion& c, ShapeFamily family, const Rat& R = Rat(1));
int cover_number_bruteforce(const RectRegion& c, ShapeFamily family);

// Maximum number of pairwise interior-disjoint axis-parallel squares inside
// the instance cake, each intersecting at least two pools. Exhaustive over
// the critical squares pinned by pool boundaries.
int max_disjoint_two_pool_squares(const PoolInstance& inst);

// Demo fixture: a 50x50 plate with a 10x10 south-west notch and a 10x20
// south-east notch, together with a 3-pool square-independent set.
std::pair<RectRegion, std::vector<Square>> notched_plate_example();

struct VerifyReport {
    bool structure_ok = true;
    bool shapes_ok = true;
    bool value_ok = true;
    bool pass = true;
    std::vector<Rat> proportions;      // V_i(piece)/V_i(C); 0 for missing pieces
    std::vector<bool> vacuous;         // zero-total players
    std::vector<std::string> failures;
};

VerifyReport verify_allocation(const Allocation& a, const std::vector<PlayerSpec>& players,
                               const Rat& bound, ShapeFamily family);

}  // namespace fairsq
