#include "dtv/vertexseries.hpp"

#include "dtv/symfunc.hpp"

#include <future>

namespace dtv {

QSeries dt_vertex_series(const std::array<Partition, 3>& legs, const WeightFrame& frame,
                         int cutoff, int threads) {
    auto e = enumerate_legged(legs, cutoff);
    int off = 2 * e.minimal_volume;
    int trunc = 2 * cutoff;
    // one weight per configuration, collected per q power, then summed
    // pairwise; the reduction order is fixed by the enumeration order
    std::vector<ExactScalar> weights(e.configs.size());
    auto work = [&](size_t begin, size_t step) {
        for (size_t i = begin; i < e.configs.size(); i += step)
            weights[i] = weight_product(vertex_virtual_character(e.configs[i]), frame);
    };
    if (threads <= 1) {
        work(0, 1);
    } else {
        std::vector<std::future<void>> futs;
        for (int t = 0; t < threads; ++t)
            futs.push_back(std::async(std::launch::async, work, (size_t)t, (size_t)threads));
        for (auto& f : futs) f.get();
    }
    std::map<int, std::vector<ExactScalar>> by_power;
    for (size_t i = 0; i < e.configs.size(); ++i)
        by_power[e.configs[i].renormalized_volume()].push_back(std::move(weights[i]));
    std::vector<ExactScalar> coeffs(trunc - off + 1);
    for (auto& [n, xs] : by_power) coeffs[2 * n - off] = sum_homogeneous(std::move(xs));
    return QSeries(off, std::move(coeffs), trunc);
}

QSeries dt_vertex_series_reduced(const std::array<Partition, 3>& legs,
                                 const WeightFrame& frame, int cutoff, int threads) {
    QSeries num = dt_vertex_series(legs, frame, cutoff, threads);
    QSeries den = mcmahon_neg_pow(vertex_c3_term(frame), cutoff);
    return num * den.inverse();
}

ExactScalar vertex_c3_term(const WeightFrame& frame) {
    Poly s = frame[0] + frame[1] + frame[2];
    ExactScalar num = ExactScalar(frame[0] - s) * ExactScalar(frame[1] - s) *
                      ExactScalar(frame[2] - s);
    ExactScalar den = ExactScalar(frame[0]) * ExactScalar(frame[1]) * ExactScalar(frame[2]);
    return num / den;
}

ExactScalar two_leg_topvertex(const Partition& la, const Partition& mu) {
    Partition lat = la.transpose();
    ExactScalar out;
    int bound = std::min(la.size(), mu.size());
    for (int m = 0; m <= bound; ++m)
        for (auto& eta : Partition::all_of(m)) {
            SymFunc a = skew_schur(lat, eta);
            if (a.is_zero()) continue;
            SymFunc b = skew_schur(mu, eta);
            if (b.is_zero()) continue;
            out += specialize_qrho(a) * specialize_qrho(b);
        }
    return out;
}

} // namespace dtv
