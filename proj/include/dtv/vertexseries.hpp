#pragma once

#include "dtv/character.hpp"
#include "dtv/qseries.hpp"

namespace dtv {

// Unreduced DT vertex series: sum over box configurations of
// weight(V(pi)) q^{n(pi)}, n = renormalized volume, through q^cutoff.
QSeries dt_vertex_series(const std::array<Partition, 3>& legs, const WeightFrame& frame,
                         int cutoff, int threads = 1);

// divided by the empty-legs series at the same weights (the reduced vertex)
QSeries dt_vertex_series_reduced(const std::array<Partition, 3>& legs,
                                 const WeightFrame& frame, int cutoff, int threads = 1);

// localized integral of c3(T tensor K) at a single vertex frame
ExactScalar vertex_c3_term(const WeightFrame& frame);

// sum_eta s_{la^t/eta}(q^rho) s_{mu/eta}(q^rho): the CY topological vertex
// with two legs, up to the usual invertible prefactors.
ExactScalar two_leg_topvertex(const Partition& la, const Partition& mu);

} // namespace dtv
