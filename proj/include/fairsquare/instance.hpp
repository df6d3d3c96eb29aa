#pragma once

#include "fairsquare/bounds.hpp"

namespace fairsq {

// A runnable division instance: cake descriptor, players, protocol.
struct InstanceFile {
    ProtocolKind protocol = ProtocolKind::SquareToSquares;
    Json cake_desc;                // parsed descriptor, kept for reports
    Region cake;                   // the cake itself
    std::vector<Rect> islands;     // archipelago only
    std::vector<PlayerSpec> players;
    std::uint64_t seed = 0;        // modulates adversarial seeds
};

InstanceFile instance_from_json(const Json& j,
                                std::optional<std::uint64_t> seed_override = std::nullopt);
Json instance_to_json(const InstanceFile& inst);

struct RunResult {
    Allocation allocation;
    VerifyReport report;
    Rat bound;  // 1 / guarantee denominator
};

RunResult run_instance(const InstanceFile& inst, const RunOptions& opts = {});

Json allocation_to_json(const InstanceFile& inst, const RunResult& result);
// Re-checks a serialized allocation against its instance.
VerifyReport verify_allocation_json(const InstanceFile& inst, const Json& allocation,
                                    const Rat& bound);

}  // namespace fairsq
