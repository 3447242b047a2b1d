#include "dtv/boxconfig.hpp"

#include "dtv/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dtv {

namespace {
int cylinder_window_volume(const std::array<Partition, 3>& legs, int N) {
    // inclusion-exclusion over the three cylinders inside [0,N)^3
    long total = 0;
    long s = 0;
    for (auto& l : legs) s += l.size();
    total += (long)N * s;
    // pairwise overlaps are finite and N-independent once N exceeds the parts
    auto in1 = [&](int i, int j, int k) { return j < legs[0].part(k); };
    auto in2 = [&](int i, int j, int k) { return k < legs[1].part(i); };
    auto in3 = [&](int i, int j, int k) { return i < legs[2].part(j); };
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k) {
                int m = (in1(i, j, k) ? 1 : 0) + (in2(i, j, k) ? 1 : 0) + (in3(i, j, k) ? 1 : 0);
                if (m >= 2) total -= m - 1;
            }
    return (int)total;
}
} // namespace

LeggedBoxConfig::LeggedBoxConfig(std::array<Partition, 3> legs, std::vector<Box> boxes)
    : legs_(std::move(legs)), boxes_(std::move(boxes)) {
    std::sort(boxes_.begin(), boxes_.end());
    for (auto& b : boxes_)
        if (in_cylinder(b)) throw ValidationError("box lies inside a leg cylinder");
    int N = support_bound();
    renorm_vol_ = window_volume(N);
}

bool LeggedBoxConfig::in_cylinder(const Box& p) const {
    auto [i, j, k] = p;
    if (j < legs_[0].part(k)) return true;
    if (k < legs_[1].part(i)) return true;
    if (i < legs_[2].part(j)) return true;
    return false;
}

bool LeggedBoxConfig::member(const Box& p) const {
    if (p[0] < 0 || p[1] < 0 || p[2] < 0) return true; // treat boundary as filled
    if (in_cylinder(p)) return true;
    return std::binary_search(boxes_.begin(), boxes_.end(), p);
}

bool LeggedBoxConfig::valid() const {
    for (auto& b : boxes_)
        for (int a = 0; a < 3; ++a) {
            Box p = b;
            --p[a];
            if (!member(p)) return false;
        }
    return true;
}

int LeggedBoxConfig::support_bound() const {
    int n = 1;
    for (auto& l : legs_) {
        n = std::max(n, l.length() + 1);
        n = std::max(n, l.part(0) + 1);
    }
    for (auto& b : boxes_) n = std::max({n, b[0] + 2, b[1] + 2, b[2] + 2});
    return n;
}

std::vector<Box> LeggedBoxConfig::addable() const {
    int N = support_bound() + 1;
    std::vector<Box> out;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k) {
                Box p{i, j, k};
                if (member(p)) continue;
                bool ok = true;
                for (int a = 0; a < 3 && ok; ++a) {
                    Box pr = p;
                    --pr[a];
                    ok = member(pr);
                }
                if (ok) out.push_back(p);
            }
    return out;
}

int LeggedBoxConfig::window_volume(int N) const {
    int inside = 0;
    for (auto& b : boxes_)
        if (b[0] < N && b[1] < N && b[2] < N) ++inside;
    long s = 0;
    for (auto& l : legs_) s += l.size();
    return cylinder_window_volume(legs_, N) + inside - (int)(N * s);
}

std::string LeggedBoxConfig::str() const {
    std::ostringstream os;
    os << legs_[0].str() << legs_[1].str() << legs_[2].str() << "{";
    for (size_t i = 0; i < boxes_.size(); ++i) {
        if (i) os << ";";
        os << boxes_[i][0] << "," << boxes_[i][1] << "," << boxes_[i][2];
    }
    os << "}";
    return os.str();
}

LeggedEnumeration enumerate_legged(const std::array<Partition, 3>& legs, int max_renorm_volume) {
    LeggedEnumeration out;
    LeggedBoxConfig minimal(legs, {});
    out.minimal_volume = minimal.renormalized_volume();
    if (max_renorm_volume < out.minimal_volume)
        throw CutoffBelowMinimum("cutoff below the minimal renormalized volume");

    std::vector<LeggedBoxConfig> layer{minimal};
    out.configs.push_back(minimal);
    out.counts_per_volume[minimal.renormalized_volume()] = 1;
    int budget = max_renorm_volume - out.minimal_volume;
    for (int step = 0; step < budget; ++step) {
        std::set<std::vector<Box>> seen;
        std::vector<LeggedBoxConfig> next;
        for (auto& cfg : layer) {
            for (auto& b : cfg.addable()) {
                std::vector<Box> boxes = cfg.boxes();
                boxes.insert(std::upper_bound(boxes.begin(), boxes.end(), b), b);
                if (seen.insert(boxes).second)
                    next.emplace_back(legs, std::move(boxes));
            }
        }
        std::sort(next.begin(), next.end());
        out.counts_per_volume[out.minimal_volume + step + 1] = (long)next.size();
        for (auto& c : next) out.configs.push_back(c);
        layer = std::move(next);
        if (layer.empty()) break;
    }
    return out;
}

void visit_legged_chunks(const LeggedEnumeration& e, int chunks,
                         const std::function<void(int, const std::vector<LeggedBoxConfig>&)>& fn) {
    if (chunks < 1) chunks = 1;
    std::vector<std::vector<LeggedBoxConfig>> parts(chunks);
    for (size_t i = 0; i < e.configs.size(); ++i)
        parts[i % chunks].push_back(e.configs[i]);
    for (int c = 0; c < chunks; ++c) fn(c, parts[c]);
}

} // namespace dtv
