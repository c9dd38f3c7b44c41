#pragma once

#include "tsurf/arith.hpp"

namespace tsurf {

// Cyclic quotient singularity 1/delta(1, omega).
struct Fraction {
    Int delta;
    Int omega;

    bool operator==(const Fraction&) const = default;
};

Fraction make_fraction(const Int& delta, const Int& omega);

struct Continuant {
    Int p;
    Int q;

    bool operator==(const Continuant&) const = default;
};

Chain hj_expand(const Int& delta, const Int& omega);
Continuant evaluate(const Chain& chain);
Chain dual(const Int& delta, const Int& omega);

// Intermediate state of the (-1)-curve contraction. Only the single entry
// [0] may contain a zero.
struct GenChain {
    std::vector<std::int64_t> entries;

    bool terminal() const { return entries.size() == 1 && entries[0] == 0; }
};

// Leftmost-first contraction of entries equal to 1. Throws StructuralError
// when a zero shows up anywhere except as the terminal [0].
GenChain blow_down(GenChain gen);

// Same reduction, but a structural error counts as "does not reach [0]".
bool reduces_to_zero(const Chain& chain);

bool is_zero_chain(const Chain& chain);

}  // namespace tsurf
