#pragma once

#include <array>
#include <cstddef>

#include "tdkit/strings.hpp"

namespace tdkit {

/// A substitution on the ternary alphabet {0,1,2}.
struct Morphism {
    std::array<TDString, 3> images;

    /// Iterate from the seed "0" the given number of times.
    TDString iterate(std::size_t depth) const;
};

/// Leech's 13-uniform ternary square-free morphism.
Morphism leech_morphism();

/// Deterministic ternary square-free string of exactly min_len characters:
/// the length-min_len prefix of the Leech fixed point (prefixes of square-free
/// strings are square-free).
TDString squarefree_generate(std::size_t min_len);

/// True iff every iterate of m from "0" up to `depth` is square-free. Build
/// gate for the hard-coded morphism images.
bool verify_square_free_preserving(const Morphism& m, std::size_t depth);

}  // namespace tdkit
