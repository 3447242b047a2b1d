#include "dtv/fock.hpp"

#include "dtv/errors.hpp"

#include <sstream>

namespace dtv {

FockVector FockVector::basis_vector(const Partition& mu) {
    return FockVector({{mu, ExactScalar(1L)}});
}

void FockVector::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

int FockVector::energy() const {
    int e = -1;
    for (auto& [mu, c] : terms_) {
        if (e < 0)
            e = mu.size();
        else if (e != mu.size())
            throw ValidationError("mixed-energy Fock vector");
    }
    return e;
}

FockVector FockVector::operator+(const FockVector& o) const {
    std::map<Partition, ExactScalar> t = terms_;
    for (auto& [mu, c] : o.terms_) t[mu] += c;
    return FockVector(std::move(t));
}

FockVector FockVector::scaled(const ExactScalar& c) const {
    std::map<Partition, ExactScalar> t;
    for (auto& [mu, x] : terms_) t[mu] = x * c;
    return FockVector(std::move(t));
}

FockVector alpha_apply(int k, const FockVector& v) {
    if (k == 0) throw ValidationError("alpha_0 undefined");
    std::map<Partition, ExactScalar> out;
    for (auto& [mu, c] : v.terms()) {
        if (k < 0) {
            out[mu.with_part(-k)] += c;
        } else {
            int m = mu.multiplicity(k);
            if (m == 0) continue;
            out[mu.without_part(k)] += c * ExactScalar((long)k * m);
        }
    }
    return FockVector(std::move(out));
}

ExactScalar pairing_c2(const Partition& la, const Partition& mu,
                       const ExactScalar& w1, const ExactScalar& w2) {
    if (la.size() != mu.size()) throw SizeMismatch("pairing requires equal sizes");
    if (la != mu) return ExactScalar();
    long l = la.length();
    Rat sign((la.size() - l) % 2 == 0 ? 1 : -1);
    ExactScalar z(Rat(la.centralizer_order(), 1));
    return ExactScalar(sign) / (z * (w1 * w2).pow((int)l));
}

ExactScalar pairing_c2(const Partition& la, const Partition& mu) {
    return pairing_c2(la, mu, ExactScalar::t1(), ExactScalar::t2());
}

GradedOperator::GradedOperator(int max_grade) : max_grade_(max_grade) {
    for (int d = 0; d <= max_grade; ++d) {
        size_t n = Partition::basis(d).size();
        blocks_.emplace(d, Matrix(n, n));
    }
}

GradedOperator GradedOperator::identity(int max_grade) {
    GradedOperator g(max_grade);
    for (int d = 0; d <= max_grade; ++d)
        g.blocks_.at(d) = Matrix::identity(Partition::basis(d).size());
    return g;
}

GradedOperator GradedOperator::operator*(const GradedOperator& o) const {
    GradedOperator r(std::min(max_grade_, o.max_grade_));
    for (int d = 0; d <= r.max_grade_; ++d) r.blocks_.at(d) = blocks_.at(d) * o.blocks_.at(d);
    return r;
}

GradedOperator GradedOperator::operator+(const GradedOperator& o) const {
    GradedOperator r(std::min(max_grade_, o.max_grade_));
    for (int d = 0; d <= r.max_grade_; ++d) r.blocks_.at(d) = blocks_.at(d) + o.blocks_.at(d);
    return r;
}

GradedOperator GradedOperator::operator-(const GradedOperator& o) const {
    GradedOperator r(std::min(max_grade_, o.max_grade_));
    for (int d = 0; d <= r.max_grade_; ++d) r.blocks_.at(d) = blocks_.at(d) - o.blocks_.at(d);
    return r;
}

GradedOperator GradedOperator::scaled(const ExactScalar& c) const {
    GradedOperator r(max_grade_);
    for (int d = 0; d <= max_grade_; ++d) r.blocks_.at(d) = blocks_.at(d).scaled(c);
    return r;
}

bool GradedOperator::operator==(const GradedOperator& o) const {
    if (max_grade_ != o.max_grade_) return false;
    for (int d = 0; d <= max_grade_; ++d)
        if (!(blocks_.at(d) == o.blocks_.at(d))) return false;
    return true;
}

FockVector GradedOperator::apply(const FockVector& v) const {
    if (v.is_zero()) return v;
    int d = v.energy();
    auto basis = Partition::basis(d);
    std::map<Partition, size_t> index;
    for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    const Matrix& B = blocks_.at(d);
    std::map<Partition, ExactScalar> out;
    for (auto& [mu, c] : v.terms()) {
        size_t j = index.at(mu);
        for (size_t i = 0; i < basis.size(); ++i) {
            if (B.at(i, j).is_zero()) continue;
            out[basis[i]] += c * B.at(i, j);
        }
    }
    return FockVector(std::move(out));
}

std::string GradedOperator::str() const {
    std::ostringstream os;
    for (int d = 0; d <= max_grade_; ++d) {
        os << "grade " << d << ":\n";
        const Matrix& B = blocks_.at(d);
        for (size_t i = 0; i < B.rows(); ++i) {
            for (size_t j = 0; j < B.cols(); ++j) os << "  [" << B.at(i, j).str() << "]";
            os << "\n";
        }
    }
    return os.str();
}

namespace {
ExactScalar a_factor(int k) {
    // ((-q)^k + 1)/((-q)^k - 1)
    ExactScalar mq = ExactScalar::q(k);
    if (k % 2) mq = -mq;
    return (mq + ExactScalar(1L)) / (mq - ExactScalar(1L));
}
} // namespace

GradedOperator m_operator(const ExactScalar& w1, const ExactScalar& w2, int max_grade) {
    GradedOperator M(max_grade);
    ExactScalar s = w1 + w2, p = w1 * w2;
    for (int d = 0; d <= max_grade; ++d) {
        auto basis = Partition::basis(d);
        std::map<Partition, size_t> index;
        for (size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
        Matrix& B = M.block(d);
        for (size_t j = 0; j < basis.size(); ++j) {
            const Partition& mu = basis[j];
            // diagonal: (w1+w2) sum_k (k/2) A_k * (k m_k)
            ExactScalar diag;
            for (int k = 1; k <= d; ++k) {
                int m = mu.multiplicity(k);
                if (m) diag += ExactScalar(Rat((long)k * k * m, 2)) * a_factor(k);
            }
            B.at(j, j) += s * diag;
            // creation pair: (1/2) w1 w2 a_{k+l} a_{-k} a_{-l}
            for (int k = 1; k <= d; ++k)
                for (int l = 1; k + l <= d; ++l) {
                    Partition added = mu.with_part(k).with_part(l);
                    int m = added.multiplicity(k + l);
                    if (m == 0) continue;
                    Partition target = added.without_part(k + l);
                    B.at(index.at(target), j) +=
                        p * ExactScalar(Rat((long)(k + l) * m, 2));
                }
            // annihilation pair: -(1/2) a_{-k-l} a_k a_l
            for (int l = 1; l <= d; ++l) {
                int ml = mu.multiplicity(l);
                if (ml == 0) continue;
                Partition dropl = mu.without_part(l);
                for (int k = 1; k <= d; ++k) {
                    int mk = dropl.multiplicity(k);
                    if (mk == 0) continue;
                    Partition target = dropl.without_part(k).with_part(k + l);
                    B.at(index.at(target), j) +=
                        ExactScalar(Rat(-(long)l * ml * k * mk, 2));
                }
            }
        }
    }
    return M;
}

std::map<int, SeriesMatrix> sigma1F_tube_operator(const ExactScalar& w1, const ExactScalar& w2,
                                                  int max_grade, int q_order,
                                                  bool phi_plain_derivative) {
    GradedOperator M = m_operator(w1, w2, max_grade);
    QSeries phi = phi_series(q_order, phi_plain_derivative).scaled(w1 + w2);
    std::map<int, SeriesMatrix> out;
    for (int d = 0; d <= max_grade; ++d) {
        const Matrix& B = M.block(d);
        SeriesMatrix S(B.rows(), std::vector<QSeries>(B.cols()));
        for (size_t i = 0; i < B.rows(); ++i)
            for (size_t j = 0; j < B.cols(); ++j) {
                S[i][j] = expand_qh(-B.at(i, j), 2 * q_order);
                if (i == j) S[i][j] = S[i][j] + phi;
            }
        out[d] = std::move(S);
    }
    return out;
}

std::vector<CoproductTerm> coproduct_one(int d, const LabelBasis& labels) {
    std::vector<CoproductTerm> out;
    for (auto& mu : Partition::basis(d)) {
        long l = mu.length();
        Rat sign((mu.size() - l) % 2 == 0 ? 1 : -1);
        ExactScalar coeff = ExactScalar(sign * Rat(mu.centralizer_order(), 1));
        // all label assignments over the declared basis
        std::vector<int> assign(l, 0);
        while (true) {
            WeightedPartition wp(mu, assign);
            out.push_back({wp, coeff, wp.dual(labels)});
            int i = 0;
            for (; i < (int)l; ++i) {
                if (++assign[i] < (int)labels.names.size()) break;
                assign[i] = 0;
            }
            if (i == (int)l) break;
        }
        if (l == 0) continue;
    }
    return out;
}

std::vector<CoproductTerm> coproduct_one(int d) {
    LabelBasis trivial{{"1"}, {0}};
    return coproduct_one(d, trivial);
}

std::pair<ExactScalar, long> gluing_factor_dt(const Partition& la, int axis,
                                              const std::array<Poly, 3>& frame) {
    long l = la.length();
    Rat sign((la.size() - l) % 2 == 0 ? 1 : -1);
    ExactScalar prod = ExactScalar(frame[0]) * ExactScalar(frame[1]) * ExactScalar(frame[2]) /
                       ExactScalar(frame[axis]);
    ExactScalar val = ExactScalar(sign * Rat(la.centralizer_order(), 1)) * prod.pow((int)l);
    return {val, -(long)la.size()};
}

std::pair<ExactScalar, long> gluing_factor_gw(const Partition& la, int axis,
                                              const std::array<Poly, 3>& frame) {
    long l = la.length();
    ExactScalar prod = ExactScalar(frame[0]) * ExactScalar(frame[1]) * ExactScalar(frame[2]) /
                       ExactScalar(frame[axis]);
    ExactScalar val = ExactScalar(Rat(la.centralizer_order(), 1)) * prod.pow((int)l);
    return {val, 2 * l};
}

} // namespace dtv
