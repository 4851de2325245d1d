#pragma once

#include <cstddef>
#include <vector>

#include "cqg/fusion_ring.hpp"

namespace cqg {

/// Outcome of a torsion test for one irreducible. Torsion verdicts carry the
/// finite closure; a cap that ran out on a lazy ring yields Inconclusive,
/// never "non-torsion" (no finite certificate of non-torsion exists).
struct TorsionVerdict {
    enum class Outcome { Torsion, Inconclusive };
    Outcome outcome;
    std::vector<Index> closure;    // Torsion only
    std::size_t stage = 0;         // Inconclusive: sweeps completed
    std::size_t support_seen = 0;  // Inconclusive: set size when the cap broke

    bool is_torsion() const { return outcome == Outcome::Torsion; }
};

TorsionVerdict torsion_check(const RingElement& u, std::size_t cap = kDefaultCap);

struct ConnectednessReport {
    struct TorsionEntry {
        Index irreducible;
        std::vector<Index> closure;
    };
    bool connected = false;
    std::vector<TorsionEntry> torsion;  // nontrivial torsion irreducibles
};

/// Finite presentations only: connected iff rank == 1, otherwise every
/// nontrivial irreducible is torsion and gets listed with its closure.
ConnectednessReport connectedness_report(const RingPtr& ring);

}  // namespace cqg
