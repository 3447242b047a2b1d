#pragma once

#include "dtv/partition.hpp"

#include <array>
#include <functional>
#include <vector>

namespace dtv {

using Box = std::array<int, 3>;

// Finite 3D box configuration with prescribed asymptotic legs.  `boxes` holds
// the points outside the three leg cylinders; the cylinders follow the
// monomial-ideal convention with the cyclic axis assignment
//   leg1: (j,k) section,  leg2: (k,i) section,  leg3: (i,j) section.
class LeggedBoxConfig {
public:
    LeggedBoxConfig(std::array<Partition, 3> legs, std::vector<Box> boxes);

    const std::array<Partition, 3>& legs() const { return legs_; }
    const std::vector<Box>& boxes() const { return boxes_; } // sorted
    int renormalized_volume() const { return renorm_vol_; }

    bool in_cylinder(const Box& p) const;
    bool member(const Box& p) const;
    // the configuration is closed under coordinatewise decrease
    bool valid() const;
    int support_bound() const; // N beyond the finite support

    // boxes whose addition keeps the configuration valid
    std::vector<Box> addable() const;

    // |config in [0,N)^3| - N * sum |legs|
    int window_volume(int N) const;

    std::string str() const;
    bool operator==(const LeggedBoxConfig& o) const {
        return legs_ == o.legs_ && boxes_ == o.boxes_;
    }
    bool operator<(const LeggedBoxConfig& o) const {
        if (legs_ != o.legs_) return legs_ < o.legs_;
        return boxes_ < o.boxes_;
    }

private:
    std::array<Partition, 3> legs_;
    std::vector<Box> boxes_;
    int renorm_vol_ = 0;
};

struct LeggedEnumeration {
    std::vector<LeggedBoxConfig> configs;   // all with renorm volume <= cutoff
    std::map<int, long> counts_per_volume;  // test hook
    int minimal_volume = 0;
};

// Every configuration with the given legs and renormalized volume <= cutoff,
// exactly once, deterministic order (by volume, then canonical box order).
LeggedEnumeration enumerate_legged(const std::array<Partition, 3>& legs, int max_renorm_volume);

// Chunked visitation for parallel consumers: deterministic split by index.
void visit_legged_chunks(const LeggedEnumeration& e, int chunks,
                         const std::function<void(int, const std::vector<LeggedBoxConfig>&)>& fn);

} // namespace dtv
