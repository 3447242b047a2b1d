#pragma once

#include "dtv/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace dtv {

// Integer partition, parts weakly decreasing, all >= 1.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : parts_(parts) { validate(); }
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { validate(); }

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                 // |lambda|
    int length() const { return (int)parts_.size(); } // l(lambda)
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return i < (int)parts_.size() ? parts_[i] : 0; } // 0-based

    Partition transpose() const;
    // order of the centralizer of the cycle type: prod i^{m_i} m_i!
    Int centralizer_order() const;
    int multiplicity(int k) const;
    bool contains(const Partition& mu) const; // diagram containment

    Partition with_part(int k) const;    // add a part
    Partition without_part(int k) const; // remove one part k (must exist)

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    auto operator<=>(const Partition& o) const = default;

    std::string str() const; // canonical text form: [3,1,1]

    static std::vector<Partition> all_of(int n); // partitions of n, deterministic order
    // canonical basis order of grade n: reverse-lexicographic
    static std::vector<Partition> basis(int n);

private:
    std::vector<int> parts_;
    void validate() const;
};

// Cohomology-labelled partition.  Labels index a declared finite basis of the
// divisor's equivariant cohomology; the A_0 runs only ever use label 0.
struct LabelBasis {
    std::vector<std::string> names; // e.g. {"1"} or {"1","[L-1]"}
    std::vector<int> dual;          // involution on indices
};

class WeightedPartition {
public:
    WeightedPartition() = default;
    WeightedPartition(Partition shape, std::vector<int> labels);
    static WeightedPartition trivial(const Partition& shape);

    const Partition& shape() const { return shape_; }
    const std::vector<int>& labels() const { return labels_; }
    WeightedPartition dual(const LabelBasis& basis) const;

    bool operator==(const WeightedPartition& o) const = default;
    auto operator<=>(const WeightedPartition& o) const = default;
    std::string str() const;

private:
    Partition shape_;
    std::vector<int> labels_;
};

} // namespace dtv
