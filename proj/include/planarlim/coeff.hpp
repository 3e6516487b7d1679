#pragma once

#include "planarlim/bigfloat.hpp"
#include "planarlim/rat.hpp"

namespace planarlim {

// Coefficient-ring glue shared by the generic polynomial and series templates. Each
// coefficient type K supplies is_zero(K), and embed(Rat, like) builds a constant of type K
// in the same context (precision, number field) as `like`.

inline bool is_zero(const Rat& r) { return r.is_zero(); }
inline bool is_zero(const BigFloat& x) { return x.is_zero(); }

inline Rat embed(const Rat& r, const Rat&) { return r; }
inline BigFloat embed(const Rat& r, const BigFloat& like) { return BigFloat(r, like.precision()); }

inline Rat inverse(const Rat& r) { return Rat(1) / r; }
inline BigFloat inverse(const BigFloat& x) { return BigFloat(1L, x.precision()) / x; }

}  // namespace planarlim
