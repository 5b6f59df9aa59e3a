#pragma once

#include "swmap/solver.hpp"

namespace swmap {

/// Cocycle g_l = z + d' o c + d_l c that may be added to f_l.
/// z: head carries xi, every slot a zeta slot with d z = 0 (slots in Z_{-1}).
/// c: head without xi, every slot a zeta slot (degree -1 map, normal).
struct AmbiguityCocycle {
    int order = 1;
    TensorSymbol z;
    TensorSymbol c;
    TensorSymbol g;  // assembled
};

/// Throws std::invalid_argument when z or c has the wrong shape, and
/// SolverError if the assembled g is not closed.
AmbiguityCocycle make_cocycle(int order, const TensorSymbol& z, const TensorSymbol& c);

/// f_l + g at order l; orders above l solved again by the recursion.
Morphism shift_by_cocycle(const Morphism& f, const AmbiguityCocycle& g);

struct CohomologyClassReport {
    int order = 0;  // first differing order, 0 if the morphisms agree
    bool zero = true;
    TensorSymbol representative;  // pi-fixed; zero symbol when the class vanishes
};

/// Class of f~_l - f_l at the first order where they differ.
CohomologyClassReport obstruction_class(const Morphism& f, const Morphism& ft);

/// True when z (head xi, zeta slots) equals d' o c' for some c' with head
/// without xi, compared up to slot degree valid_degree.
bool is_d_exact(const TensorSymbol& z, int valid_degree);

/// f^g = g^{-1} * f * g + g^{-1} * D g with g = exp(c) in the convolution
/// algebra, truncated at arity L. c is a degree -1 cochain of one order
/// (shape of the c-part of a cocycle).
Morphism gauge_transform(const Morphism& f, const TensorSymbol& c, int L);

}  // namespace swmap
