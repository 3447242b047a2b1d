#include "dtv/partition.hpp"

#include "dtv/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dtv {

void Partition::validate() const {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw ValidationError("partition parts must be >= 1");
        if (i && parts_[i] > parts_[i - 1])
            throw ValidationError("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::transpose() const {
    if (parts_.empty()) return {};
    std::vector<int> t(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++t[j];
    return Partition(std::move(t));
}

Int Partition::centralizer_order() const {
    Int z = 1;
    int run = 0;
    for (size_t i = 0; i < parts_.size(); ++i) {
        ++run;
        z *= parts_[i];
        if (i + 1 == parts_.size() || parts_[i + 1] != parts_[i]) {
            for (int k = 2; k <= run; ++k) z *= k;
            run = 0;
        }
    }
    return z;
}

int Partition::multiplicity(int k) const {
    return (int)std::count(parts_.begin(), parts_.end(), k);
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.parts_[i] > parts_[i]) return false;
    return true;
}

Partition Partition::with_part(int k) const {
    std::vector<int> p = parts_;
    p.insert(std::upper_bound(p.begin(), p.end(), k, std::greater<int>()), k);
    return Partition(std::move(p));
}

Partition Partition::without_part(int k) const {
    std::vector<int> p = parts_;
    auto it = std::find(p.begin(), p.end(), k);
    if (it == p.end()) throw ValidationError("no such part to remove");
    p.erase(it);
    return Partition(std::move(p));
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
    os << "]";
    return os.str();
}

std::vector<Partition> Partition::all_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    // lexicographically decreasing enumeration, largest part first
    std::function<void(int, int)> rec = [&](int rest, int maxp) {
        if (rest == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(rest, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Partition> Partition::basis(int n) {
    // reverse-lexicographic: (n) first, (1^n) last; all_of already emits this
    return all_of(n);
}

WeightedPartition::WeightedPartition(Partition shape, std::vector<int> labels)
    : shape_(std::move(shape)), labels_(std::move(labels)) {
    if ((int)labels_.size() != shape_.length())
        throw ValidationError("one label per part required");
}

WeightedPartition WeightedPartition::trivial(const Partition& shape) {
    return WeightedPartition(shape, std::vector<int>(shape.length(), 0));
}

WeightedPartition WeightedPartition::dual(const LabelBasis& basis) const {
    std::vector<int> d = labels_;
    for (auto& l : d) l = basis.dual.at(l);
    return WeightedPartition(shape_, std::move(d));
}

std::string WeightedPartition::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < shape_.length(); ++i) {
        if (i) os << ",";
        os << shape_.parts()[i];
        if (labels_[i] != 0) os << ":" << labels_[i];
    }
    os << "]";
    return os.str();
}

} // namespace dtv
