#include "planarlim/multiseries.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace planarlim {

Partition::Partition(const std::vector<Part>& parts) {
    std::map<int, int> m;
    for (auto [j, k] : parts) {
        if (j < 1 || k < 0) throw std::invalid_argument("partition parts must be positive");
        if (k > 0) m[j] += k;
    }
    p_.assign(m.begin(), m.end());
}

Partition Partition::from_parts(const std::vector<int>& parts) {
    std::vector<Part> v;
    for (int j : parts) v.emplace_back(j, 1);
    return Partition(v);
}

int Partition::multiplicity(int j) const {
    for (auto [i, m] : p_)
        if (i == j) return m;
    return 0;
}

int Partition::weight() const {
    int w = 0;
    for (auto [j, m] : p_) w += j * m;
    return w;
}

int Partition::length() const {
    int n = 0;
    for (auto [j, m] : p_) n += m;
    return n;
}

Rat Partition::symmetry_factor() const {
    mpz_class f = 1;
    for (auto [j, m] : p_) {
        f *= factorial(m);
        mpz_class jm;
        mpz_ui_pow_ui(jm.get_mpz_t(), j, m);
        f *= jm;
    }
    return Rat(f);
}

Partition Partition::operator*(const Partition& o) const {
    std::vector<Part> v = p_;
    v.insert(v.end(), o.p_.begin(), o.p_.end());
    return Partition(v);
}

std::string Partition::str() const {
    if (p_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto [j, m] : p_) {
        if (!first) os << '*';
        first = false;
        os << "a_" << j;
        if (m > 1) os << '^' << m;
    }
    return os.str();
}

int half_degree(Grading g, int j) {
    switch (g) {
        case Grading::Weight: return 2 * j;
        case Grading::Edge: return j;
        case Grading::Face: return j - 2;
    }
    return 0;
}

int half_degree(Grading g, const Partition& p) {
    int d = 0;
    for (auto [j, m] : p.parts()) d += m * half_degree(g, j);
    return d;
}

MonomialBasis::MonomialBasis(std::vector<int> vars, Grading grading, int half_cap)
    : vars_(std::move(vars)), grading_(grading), half_cap_(half_cap) {
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
    for (int j : vars_)
        if (j < 1 || half_degree(grading_, j) <= 0)
            throw std::invalid_argument("every variable needs positive degree under the grading");

    std::vector<Partition::Part> cur;
    std::function<void(size_t, int)> grow = [&](size_t from, int budget) {
        monos_.emplace_back(cur);
        for (size_t i = from; i < vars_.size(); ++i) {
            int d = half_degree(grading_, vars_[i]);
            for (int m = 1; m * d <= budget; ++m) {
                cur.emplace_back(vars_[i], m);
                grow(i + 1, budget - m * d);
                cur.pop_back();
            }
        }
    };
    if (half_cap_ >= 0) grow(0, half_cap_);
    std::sort(monos_.begin(), monos_.end(), [&](const Partition& a, const Partition& b) {
        int da = half_degree(grading_, a), db = half_degree(grading_, b);
        return da != db ? da < db : a < b;
    });
    for (size_t i = 0; i < monos_.size(); ++i) {
        deg_.push_back(half_degree(grading_, monos_[i]));
        index_.emplace(monos_[i], static_cast<int>(i));
    }
    size_t n = monos_.size();
    table_.assign(n * n, -1);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            if (deg_[i] + deg_[j] > half_cap_) break;
            int k = index_of(monos_[i] * monos_[j]);
            table_[i * n + j] = table_[j * n + i] = k;
        }
}

std::shared_ptr<const MonomialBasis> MonomialBasis::by_weight(int weight_cap) {
    std::vector<int> vars;
    for (int j = 1; j <= weight_cap; ++j) vars.push_back(j);
    return std::make_shared<MonomialBasis>(vars, Grading::Weight, 2 * weight_cap);
}

std::shared_ptr<const MonomialBasis> MonomialBasis::even_by_weight(int weight_cap) {
    std::vector<int> vars;
    for (int j = 2; j <= weight_cap; j += 2) vars.push_back(j);
    return std::make_shared<MonomialBasis>(vars, Grading::Weight, 2 * weight_cap);
}

int MonomialBasis::index_of(const Partition& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
}

bool MonomialBasis::has_var(int j) const { return std::binary_search(vars_.begin(), vars_.end(), j); }

MultiSeries::MultiSeries(BasisPtr basis) : basis_(std::move(basis)) { c_.assign(basis_->size(), Rat(0)); }

MultiSeries MultiSeries::constant(BasisPtr basis, const Rat& c) {
    MultiSeries s(std::move(basis));
    if (!s.c_.empty()) s.c_[0] = c;
    return s;
}

MultiSeries MultiSeries::monomial(BasisPtr basis, const Partition& p, const Rat& c) {
    MultiSeries s(std::move(basis));
    for (auto [j, m] : p.parts())
        if (!s.basis_->has_var(j)) throw std::invalid_argument("variable a_" + std::to_string(j) + " not in basis");
    int k = s.basis_->index_of(p);
    if (k >= 0) s.c_[k] = c;
    return s;
}

MultiSeries MultiSeries::var(BasisPtr basis, int j) {
    return monomial(std::move(basis), Partition({{j, 1}}));
}

Rat MultiSeries::coefficient(const Partition& p) const {
    int k = basis_->index_of(p);
    if (k >= 0) return c_[k];
    if (half_degree(basis_->grading(), p) > basis_->half_cap())
        throw std::out_of_range("coefficient of " + p.str() + " lies beyond the truncation");
    return Rat(0);
}

Rat MultiSeries::constant_term() const { return c_.empty() ? Rat(0) : c_[0]; }

void MultiSeries::set_coefficient(const Partition& p, const Rat& c) {
    int k = basis_->index_of(p);
    if (k < 0) throw std::out_of_range("monomial " + p.str() + " is not in the basis");
    c_[k] = c;
}

std::vector<std::pair<Partition, Rat>> MultiSeries::terms() const {
    std::vector<std::pair<Partition, Rat>> out;
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) out.emplace_back(basis_->monomial(static_cast<int>(i)), c_[i]);
    return out;
}

bool MultiSeries::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r.is_zero(); });
}

namespace {

void require_same(const MultiSeries& a, const MultiSeries& b) {
    if (a.basis() != b.basis()) throw std::invalid_argument("multivariate series over different bases");
}

}  // namespace

MultiSeries MultiSeries::operator-() const {
    MultiSeries out = *this;
    for (Rat& r : out.c_) r = -r;
    return out;
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& o) {
    require_same(*this, o);
    for (size_t i = 0; i < c_.size(); ++i)
        if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
    return *this;
}

MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) {
    MultiSeries out = a;
    out += b;
    return out;
}

MultiSeries operator-(const MultiSeries& a, const MultiSeries& b) { return a + (-b); }

MultiSeries operator*(const Rat& s, const MultiSeries& a) {
    MultiSeries out = a;
    for (Rat& r : out.c_) r *= s;
    return out;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
    require_same(a, b);
    const MonomialBasis& B = *a.basis_;
    MultiSeries out(a.basis_);
    std::vector<int> nb;
    for (int j = 0; j < B.size(); ++j)
        if (!b.c_[j].is_zero()) nb.push_back(j);
    mpq_class tmp;
    for (int i = 0; i < B.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        int room = B.half_cap() - B.degree(i);
        for (int j : nb) {
            // Basis monomials are sorted by degree, so the first overflow ends the row.
            if (B.degree(j) > room) break;
            int k = B.product(i, j);
            if (k < 0) continue;
            mpq_mul(tmp.get_mpq_t(), a.c_[i].raw().get_mpq_t(), b.c_[j].raw().get_mpq_t());
            out.c_[k] += Rat(tmp);
        }
    }
    return out;
}

bool operator==(const MultiSeries& a, const MultiSeries& b) { return a.basis_ == b.basis_ && a.c_ == b.c_; }

MultiSeries MultiSeries::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power of a multivariate series");
    MultiSeries acc = constant(basis_, Rat(1));
    MultiSeries base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

MultiSeries MultiSeries::times_monomial(int k) const {
    MultiSeries out(basis_);
    for (int i = 0; i < basis_->size(); ++i) {
        if (c_[i].is_zero()) continue;
        int p = basis_->product(i, k);
        if (p >= 0) out.c_[p] = c_[i];
    }
    return out;
}

MultiSeries MultiSeries::substitute(int j, const Rat& value) const {
    MultiSeries out(basis_);
    for (int i = 0; i < basis_->size(); ++i) {
        if (c_[i].is_zero()) continue;
        const Partition& p = basis_->monomial(i);
        int m = p.multiplicity(j);
        if (m == 0) {
            out.c_[i] += c_[i];
            continue;
        }
        std::vector<Partition::Part> rest;
        for (auto part : p.parts())
            if (part.first != j) rest.push_back(part);
        int k = basis_->index_of(Partition(rest));
        out.c_[k] += c_[i] * planarlim::pow(value, m);
    }
    return out;
}

MultiSeries MultiSeries::log() const {
    if (!constant_term().is_one()) throw std::domain_error("log requires constant term 1");
    MultiSeries x = *this - constant(basis_, Rat(1));
    MultiSeries acc(basis_);
    MultiSeries power = x;
    int min_deg = basis_->half_cap() + 1;
    for (int i = 1; i < basis_->size(); ++i)
        if (!x.c_[i].is_zero()) { min_deg = basis_->degree(i); break; }
    for (int k = 1; !power.is_zero() && (k - 1) * min_deg <= basis_->half_cap(); ++k) {
        acc += Rat((k % 2) ? 1 : -1, k) * power;
        power = power * x;
    }
    return acc;
}

MultiSeries MultiSeries::restrict_to(BasisPtr target) const {
    if (target->grading() != basis_->grading()) throw std::invalid_argument("restriction across gradings");
    MultiSeries out(target);
    for (int i = 0; i < target->size(); ++i) {
        int k = basis_->index_of(target->monomial(i));
        if (k < 0) throw std::invalid_argument("target basis is not contained in the source basis");
        out.c_[i] = c_[k];
    }
    return out;
}

USeries grade_specialize(const MultiSeries& s, Grading grading, int t_half_cap, const std::map<int, Rat>& values) {
    if (grading == Grading::Weight) throw std::invalid_argument("specialize with the edge or face grading");
    const MonomialBasis& B = *s.basis();
    auto value_of = [&](int j) {
        auto it = values.find(j);
        return it == values.end() ? Rat(1) : it->second;
    };
    if (grading == Grading::Face) {
        for (int j : {1, 2})
            if (B.has_var(j) && !value_of(j).is_zero())
                throw std::invalid_argument("face grading needs a_1 = a_2 = 0 (set them explicitly)");
    }
    int reliable;
    if (B.grading() == grading) {
        reliable = B.half_cap();
    } else if (B.grading() == Grading::Weight) {
        // half-degree in the target grading versus weight: edge j vs 2j; face (j-2) vs 2j
        // with j >= 3, so a weight cap W bounds the face half-degree through W/3.
        reliable = grading == Grading::Edge ? B.half_cap() / 2 : B.half_cap() / 6;
    } else {
        throw std::invalid_argument("cannot specialize between the edge and face gradings");
    }
    if (t_half_cap > reliable)
        throw std::invalid_argument("requested t-order exceeds what the truncation determines");
    USeries out(t_half_cap, Rat(0));
    std::vector<Rat> coeffs(t_half_cap + 1, Rat(0));
    for (int i = 0; i < B.size(); ++i) {
        if (s.dense()[i].is_zero()) continue;
        const Partition& p = B.monomial(i);
        Rat c = s.dense()[i];
        bool dropped = false;
        for (auto [j, m] : p.parts()) {
            Rat v = value_of(j);
            if (v.is_zero()) { dropped = true; break; }
            c *= pow(v, m);
        }
        if (dropped) continue;
        int d = half_degree(grading, p);
        if (d < 0) throw std::invalid_argument("monomial with negative degree under the face grading");
        if (d <= t_half_cap) coeffs[d] += c;
    }
    return USeries(0, std::move(coeffs), t_half_cap, Rat(0));
}

}  // namespace planarlim
