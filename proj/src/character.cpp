#include "dtv/character.hpp"

#include "dtv/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace dtv {

KPoly KPoly::operator+(const KPoly& o) const {
    KPoly r = *this;
    for (auto& [e, c] : o.t_) {
        auto it = r.t_.find(e);
        if (it == r.t_.end())
            r.t_[e] = c;
        else {
            it->second += c;
            if (it->second == 0) r.t_.erase(it);
        }
    }
    return r;
}

KPoly KPoly::operator-() const {
    KPoly r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
}

KPoly KPoly::operator-(const KPoly& o) const { return *this + (-o); }

KPoly KPoly::operator*(const KPoly& o) const {
    KPoly r;
    for (auto& [e1, c1] : t_)
        for (auto& [e2, c2] : o.t_) {
            KExp e{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]};
            auto it = r.t_.find(e);
            if (it == r.t_.end())
                r.t_[e] = c1 * c2;
            else {
                it->second += c1 * c2;
                if (it->second == 0) r.t_.erase(it);
            }
        }
    return r;
}

KPoly KPoly::shifted(const KExp& e) const {
    KPoly r;
    for (auto& [e1, c] : t_) r.t_[{e1[0] + e[0], e1[1] + e[1], e1[2] + e[2]}] = c;
    return r;
}

KPoly KPoly::bar() const {
    KPoly r;
    for (auto& [e, c] : t_) r.t_[{-e[0], -e[1], -e[2]}] = c;
    return r;
}

std::optional<KPoly> KPoly::divide_one_minus(int v) const {
    if (is_zero()) return KPoly();
    std::map<KExp, std::map<int, long long>> grouped;
    for (auto& [e, c] : t_) {
        KExp key = e;
        int ev = key[v];
        key[v] = 0;
        grouped[key][ev] = c;
    }
    KPoly out;
    for (auto& [key, fiber] : grouped) {
        // f(x)/(1-x): prefix sums; finite exactly when f(1) = 0
        long long total = 0;
        for (auto& [j, c] : fiber) total += c;
        if (total != 0) return std::nullopt;
        long long run = 0;
        int lo = fiber.begin()->first, hi = fiber.rbegin()->first;
        for (int j = lo; j < hi; ++j) {
            auto it = fiber.find(j);
            if (it != fiber.end()) run += it->second;
            if (run != 0) {
                KExp e = key;
                e[v] = j;
                out.t_[e] = run;
            }
        }
    }
    return out;
}

void RatChar::normalize() {
    for (int v = 0; v < 3; ++v)
        while (den_[v] > 0) {
            auto q = num_.divide_one_minus(v);
            if (!q) break;
            num_ = std::move(*q);
            --den_[v];
        }
    if (num_.is_zero()) den_ = {0, 0, 0};
}

RatChar RatChar::operator+(const RatChar& o) const {
    KExp d{std::max(den_[0], o.den_[0]), std::max(den_[1], o.den_[1]),
           std::max(den_[2], o.den_[2])};
    auto lift = [&](const RatChar& x) {
        KPoly n = x.num_;
        KPoly one(1);
        for (int v = 0; v < 3; ++v) {
            KExp ev{0, 0, 0};
            ev[v] = 1;
            KPoly f = one - KPoly::mono(ev);
            for (int k = 0; k < d[v] - x.den_[v]; ++k) n = n * f;
        }
        return n;
    };
    return RatChar(lift(*this) + lift(o), d);
}

RatChar RatChar::operator-() const { return RatChar(-num_, den_); }
RatChar RatChar::operator-(const RatChar& o) const { return *this + (-o); }

RatChar RatChar::operator*(const RatChar& o) const {
    return RatChar(num_ * o.num_,
                   {den_[0] + o.den_[0], den_[1] + o.den_[1], den_[2] + o.den_[2]});
}

RatChar RatChar::bar() const {
    // bar(1/(1-k)^e) = (-k)^e/(1-k)^e
    KPoly n = num_.bar();
    for (int v = 0; v < 3; ++v) {
        if (den_[v] == 0) continue;
        KExp ev{0, 0, 0};
        ev[v] = den_[v];
        n = n.shifted(ev);
        if (den_[v] % 2) n = -n;
    }
    return RatChar(n, den_);
}

void EquivCharacter::add(const std::array<long, 3>& w, long long mult, long scale) {
    if (mult == 0) return;
    if (scale != den_scale_) {
        long l = std::lcm(scale, den_scale_);
        if (l != den_scale_) {
            long f = l / den_scale_;
            std::map<std::array<long, 3>, long long> nt;
            for (auto& [e, c] : terms_) nt[{e[0] * f, e[1] * f, e[2] * f}] = c;
            terms_ = std::move(nt);
            den_scale_ = l;
        }
        long g = den_scale_ / scale;
        std::array<long, 3> ww{w[0] * g, w[1] * g, w[2] * g};
        auto it = terms_.find(ww);
        if (it == terms_.end())
            terms_[ww] = mult;
        else {
            it->second += mult;
            if (it->second == 0) terms_.erase(it);
        }
        return;
    }
    auto it = terms_.find(w);
    if (it == terms_.end())
        terms_[w] = mult;
    else {
        it->second += mult;
        if (it->second == 0) terms_.erase(it);
    }
}

void EquivCharacter::reduce() {
    if (den_scale_ == 1) return;
    for (long d = den_scale_; d > 1; --d) {
        if (den_scale_ % d != 0) continue;
        bool ok = true;
        for (auto& [e, c] : terms_)
            if (e[0] % d || e[1] % d || e[2] % d) {
                ok = false;
                break;
            }
        if (ok) {
            std::map<std::array<long, 3>, long long> nt;
            for (auto& [e, c] : terms_) nt[{e[0] / d, e[1] / d, e[2] / d}] = c;
            terms_ = std::move(nt);
            den_scale_ /= d;
            break;
        }
    }
}

EquivCharacter EquivCharacter::operator+(const EquivCharacter& o) const {
    EquivCharacter r = *this;
    for (auto& [e, c] : o.terms_) r.add(e, c, o.den_scale_);
    return r;
}

EquivCharacter EquivCharacter::operator-() const {
    EquivCharacter r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

EquivCharacter EquivCharacter::bar() const {
    EquivCharacter r;
    r.den_scale_ = den_scale_;
    for (auto& [e, c] : terms_) r.terms_[{-e[0], -e[1], -e[2]}] = c;
    return r;
}

bool EquivCharacter::operator==(const EquivCharacter& o) const {
    EquivCharacter a = *this, b = o;
    a.reduce();
    b.reduce();
    return a.den_scale_ == b.den_scale_ && a.terms_ == b.terms_;
}

EquivCharacter EquivCharacter::from_ratchar(const RatChar& r) {
    if (!r.is_finite())
        throw NonFiniteCharacter("rational character carries residual denominators");
    EquivCharacter out;
    for (auto& [e, c] : r.num().terms()) out.add({-e[0], -e[1], -e[2]}, c);
    return out;
}

std::string EquivCharacter::str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (!first) os << ", ";
        os << "(" << e[0] << "," << e[1] << "," << e[2] << ")";
        if (den_scale_ != 1) os << "/" << den_scale_;
        os << ": " << c;
        first = false;
    }
    os << "}";
    return os.str();
}

WeightFrame standard_frame() {
    return {Poly::var(VT1), Poly::var(VT2), Poly::var(VT3)};
}

WeightFrame edge_far_frame(const WeightFrame& f, int a, int b) {
    return {f[0] - f[2].scaled(Rat(a)), f[1] - f[2].scaled(Rat(b)), -f[2]};
}

ExactScalar weight_product(const EquivCharacter& ch, const WeightFrame& frame) {
    ExactScalar r(1L);
    Rat inv_scale(1, ch.den_scale());
    for (auto& [e, mult] : ch.terms()) {
        Poly w = frame[0].scaled(Rat(e[0])) + frame[1].scaled(Rat(e[1])) +
                 frame[2].scaled(Rat(e[2]));
        if (w.is_zero())
            throw ZeroWeight(
                "zero weight in character; non-isolated fixed locus or convention error");
        w = w.scaled(inv_scale);
        r = r * ExactScalar(w).pow((int)mult);
    }
    return r;
}

EquivCharacter chi_character(const LeggedBoxConfig& c, int N) {
    if (N < c.support_bound())
        throw TruncationTooSmall("window does not contain the finite support");
    EquivCharacter out;
    for (long i = 0; i < N; ++i)
        for (long j = 0; j < N; ++j)
            for (long k = 0; k < N; ++k)
                if (c.member({(int)i, (int)j, (int)k})) out.add({-i, -j, -k}, 1);
    return out;
}

namespace {

RatChar cylinder_char(const Partition& leg, int axis) {
    if (leg.empty()) return RatChar();
    KPoly cs;
    int u = (axis + 1) % 3, v = (axis + 2) % 3;
    for (int c2 = 0; c2 < leg.length(); ++c2)
        for (int c1 = 0; c1 < leg.part(c2); ++c1) {
            KExp e{0, 0, 0};
            e[u] = c1;
            e[v] = c2;
            cs += KPoly::mono(e);
        }
    KExp den{0, 0, 0};
    den[axis] = 1;
    return RatChar(cs, den);
}

KPoly finite_overlaps(const LeggedBoxConfig& c) {
    KPoly out;
    int B = 1;
    for (int a = 0; a < 3; ++a) {
        B = std::max(B, c.legs()[a].length() + 1);
        B = std::max(B, c.legs()[a].part(0) + 1);
    }
    auto leg_member = [&](int axis, const Box& p) {
        int u = (axis + 1) % 3, v = (axis + 2) % 3;
        return p[u] < c.legs()[axis].part(p[v]);
    };
    for (int i = 0; i < B; ++i)
        for (int j = 0; j < B; ++j)
            for (int k = 0; k < B; ++k) {
                Box p{i, j, k};
                int m = 0;
                for (int a = 0; a < 3; ++a)
                    if (leg_member(a, p)) ++m;
                if (m >= 2) out += KPoly::mono({i, j, k}, -(m - 1));
            }
    for (auto& b : c.boxes()) out += KPoly::mono({b[0], b[1], b[2]});
    return out;
}

// V = -[Q - bar Q/k + Q bar Q (1-k1)(1-k2)(1-k3)/k],  k = k1 k2 k3
RatChar vertex_formula(const RatChar& Q) {
    RatChar Qb = Q.bar();
    KPoly kinv = KPoly::mono({-1, -1, -1});
    KPoly koszul;
    {
        KPoly one(1);
        KPoly f = one;
        for (int v = 0; v < 3; ++v) {
            KExp e{0, 0, 0};
            e[v] = 1;
            f = f * (one - KPoly::mono(e));
        }
        koszul = f * kinv;
    }
    RatChar tr = Q - Qb * RatChar(kinv) + Q * Qb * RatChar(koszul);
    return -tr;
}

} // namespace

RatChar chi_character_rational(const LeggedBoxConfig& c) {
    RatChar q(finite_overlaps(c));
    for (int a = 0; a < 3; ++a) q = q + cylinder_char(c.legs()[a], a);
    return q;
}

EquivCharacter vertex_virtual_character(const LeggedBoxConfig& c) {
    RatChar v = vertex_formula(chi_character_rational(c));
    for (int a = 0; a < 3; ++a) {
        if (c.legs()[a].empty()) continue;
        LeggedBoxConfig cyl({a == 0 ? c.legs()[0] : Partition{},
                             a == 1 ? c.legs()[1] : Partition{},
                             a == 2 ? c.legs()[2] : Partition{}},
                            {});
        v = v - vertex_formula(chi_character_rational(cyl));
    }
    return EquivCharacter::from_ratchar(v);
}

long edge_chi_dt(const Partition& la, int a, int b) {
    long chi = 0;
    for (int j = 0; j < la.length(); ++j)
        for (int i = 0; i < la.part(j); ++i) chi += 1 - (long)a * i - (long)b * j;
    return chi;
}

namespace {

// character of chi(P^1, O(m)) with a kappa-weight prefix, as k3 powers
KPoly chi_p1(int m, const KExp& weight) {
    KPoly out;
    if (m >= 0) {
        for (int k = 0; k <= m; ++k) {
            KExp e = weight;
            e[2] += k;
            out += KPoly::mono(e);
        }
    } else if (m <= -2) {
        for (int k = 1; k <= -m - 1; ++k) {
            KExp e = weight;
            e[2] -= k;
            out += KPoly::mono(e, -1);
        }
    }
    return out;
}

// -(chi(O,P) + chi(P,O) - chi(P,P)) of the pure (a,b)-edge ideal, globally,
// written in the chart-0 variables
RatChar edge_global_character(const Partition& la, int a, int b) {
    struct BoxDatum {
        int i, j, m;
    };
    std::vector<BoxDatum> boxes;
    for (int j = 0; j < la.length(); ++j)
        for (int i = 0; i < la.part(j); ++i) boxes.push_back({i, j, -a * i - b * j});

    KPoly chiOP, chiPO, chiPP;
    for (auto& bx : boxes) {
        chiOP += chi_p1(bx.m, {bx.i, bx.j, 0});
        // RHom(i_*L, O) = i_*(L^v otimes det N)[-2]
        chiPO += chi_p1(-bx.m + a + b, {-bx.i - 1, -bx.j - 1, 0});
    }
    for (auto& A : boxes)
        for (auto& B : boxes) {
            int dm = B.m - A.m;
            KExp w{B.i - A.i, B.j - A.j, 0};
            chiPP += chi_p1(dm, w);
            chiPP += -chi_p1(dm - a, {w[0] + 1, w[1], 0});
            chiPP += -chi_p1(dm - b, {w[0], w[1] + 1, 0});
            chiPP += chi_p1(dm - a - b, {w[0] + 1, w[1] + 1, 0});
        }
    return RatChar(-(chiOP + chiPO - chiPP));
}

// vertex term of the lambda cylinder along the edge, either chart, written in
// the global chart-0 monomials via k1' = k1 k3^{-a}, k2' = k2 k3^{-b},
// k3' = k3^{-1}
RatChar cylinder_vertex_in_chart(const Partition& la, int a, int b, bool infinity_chart) {
    LeggedBoxConfig cyl({Partition{}, Partition{}, la}, {});
    RatChar v = vertex_formula(chi_character_rational(cyl));
    if (!infinity_chart) return v;
    KExp d = v.den();
    if (d[0] != 0 || d[1] != 0)
        throw NonFiniteCharacter("unexpected transverse denominators in edge cylinder");
    auto subst = [&](const KPoly& p) {
        KPoly out;
        for (auto& [e, c] : p.terms()) {
            KExp ne{e[0], e[1], -e[2] - a * e[0] - b * e[1]};
            out += KPoly::mono(ne, c);
        }
        return out;
    };
    KPoly n = subst(v.num());
    // 1/(1-k3')^e = (-k3)^e/(1-k3)^e
    for (int k = 0; k < d[2]; ++k) n = -n.shifted({0, 0, 1});
    return RatChar(n, {0, 0, d[2]});
}

} // namespace

EquivCharacter edge_virtual_character_dt(const Partition& la, int a, int b) {
    if (la.empty()) return EquivCharacter();
    RatChar glob = edge_global_character(la, a, b);
    RatChar v0 = cylinder_vertex_in_chart(la, a, b, false);
    RatChar vi = cylinder_vertex_in_chart(la, a, b, true);
    return EquivCharacter::from_ratchar(glob - v0 - vi);
}

std::pair<ExactScalar, long> edge_weight_dt(const Partition& la, int a, int b,
                                            const WeightFrame& frame) {
    EquivCharacter ch = edge_virtual_character_dt(la, a, b);
    return {weight_product(ch, frame), edge_chi_dt(la, a, b)};
}

EquivCharacter edge_character_gw(const Partition& la, int a, int b) {
    EquivCharacter out;
    auto segment = [](int c) {
        // (y^c - 1)/(y - 1) as explicit powers
        std::vector<std::pair<int, int>> out;
        if (c > 0)
            for (int k = 0; k < c; ++k) out.push_back({k, 1});
        else if (c < 0)
            for (int k = c; k < 0; ++k) out.push_back({k, -1});
        return out;
    };
    for (int idx = 0; idx < la.length(); ++idx) {
        long m = la.parts()[idx];
        for (auto& [k, s] : segment(a * (int)m + 1)) out.add({m, 0, (long)k - a * m}, -s, m);
        for (auto& [k, s] : segment(b * (int)m + 1)) out.add({0, m, (long)k - b * m}, -s, m);
        for (long j = -m; j <= m; ++j)
            if (j != 0) out.add({0, 0, j}, -1, m);
    }
    return out;
}

std::pair<ExactScalar, long> edge_weight_gw(const Partition& la, int a, int b,
                                            const WeightFrame& frame) {
    if (la.empty()) return {ExactScalar(1L), 0};
    EquivCharacter ch = edge_character_gw(la, a, b);
    ExactScalar w = weight_product(ch, frame);
    ExactScalar endpoint(1L);
    for (int part : la.parts()) {
        Poly t3m = frame[2].scaled(Rat(1, part));
        endpoint = endpoint * ExactScalar(t3m) * ExactScalar(-t3m);
    }
    ExactScalar z(Rat(la.centralizer_order(), 1));
    return {w * endpoint / z, -2L * la.length()};
}

ExactScalar chern_restriction(const LeggedBoxConfig& c, int k) {
    if (k < 2) throw ValidationError("chern_restriction requires k >= 2");
    RatChar q = chi_character_rational(c);
    KPoly one(1);
    KPoly koszul = one;
    for (int v = 0; v < 3; ++v) {
        KExp e{0, 0, 0};
        e[v] = 1;
        koszul = koszul * (one - KPoly::mono(e));
    }
    RatChar f = RatChar(koszul) * q;
    if (!f.is_finite()) throw NonFiniteCharacter("resolution character not finite");
    Poly total;
    Rat factorial(1);
    for (int i = 2; i <= k; ++i) factorial *= i;
    for (auto& [e, cc] : f.num().terms()) {
        Poly lin = Poly::linear_form(Rat(-e[0]), Rat(-e[1]), Rat(-e[2]));
        total += lin.pow(k).scaled(Rat((long)cc) / factorial);
    }
    return ExactScalar(total);
}

} // namespace dtv
