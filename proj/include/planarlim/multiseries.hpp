#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "planarlim/rat.hpp"
#include "planarlim/series.hpp"

namespace planarlim {

/// A monomial prod_j a_j^{m_j}, stored as the sorted list of (j, m_j) with m_j >= 1.
class Partition {
public:
    using Part = std::pair<int, int>;

    Partition() = default;
    /// From (j, m_j) pairs in any order; zero multiplicities are dropped, repeats merged.
    explicit Partition(const std::vector<Part>& parts);
    /// From a list of parts, e.g. {4, 4, 2} for a_4^2 a_2.
    static Partition from_parts(const std::vector<int>& parts);

    const std::vector<Part>& parts() const { return p_; }
    bool empty() const { return p_.empty(); }
    int multiplicity(int j) const;
    /// sum of j * m_j.
    int weight() const;
    /// Number of factors, sum of m_j.
    int length() const;
    /// prod m_j! * j^{m_j}, the symmetry factor of the vertex configuration.
    Rat symmetry_factor() const;
    Partition operator*(const Partition& o) const;
    /// "a_1^2*a_4", or "1" for the empty monomial.
    std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.p_ == b.p_; }
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.p_ <=> b.p_; }

private:
    std::vector<Part> p_;
};

/// The gradings used to truncate and specialize multivariate series. Degrees of a_j:
/// weight j, edge j/2, face j/2 - 1. All are measured internally in half-units.
enum class Grading { Weight, Edge, Face };

/// Degree of a_j in half-units under the grading.
int half_degree(Grading g, int j);
/// Degree of a monomial in half-units.
int half_degree(Grading g, const Partition& p);

/// The finite set of monomials in a chosen family of variables a_j whose degree under a
/// grading is at most a cap, with a precomputed product table. Shared by all series built
/// on it; immutable after construction.
class MonomialBasis {
public:
    /// Variables a_j for j in `vars` (each must have positive degree under the grading);
    /// `half_cap` is the truncation bound in half-units.
    MonomialBasis(std::vector<int> vars, Grading grading, int half_cap);

    /// All variables a_1..a_cap, truncated at weight <= cap.
    static std::shared_ptr<const MonomialBasis> by_weight(int weight_cap);
    /// Even variables a_2, a_4, ... only, truncated at weight <= cap.
    static std::shared_ptr<const MonomialBasis> even_by_weight(int weight_cap);

    const std::vector<int>& vars() const { return vars_; }
    Grading grading() const { return grading_; }
    int half_cap() const { return half_cap_; }
    int size() const { return static_cast<int>(monos_.size()); }
    const Partition& monomial(int i) const { return monos_[i]; }
    int degree(int i) const { return deg_[i]; }
    /// Index of a monomial, or -1 when it is not in the basis.
    int index_of(const Partition& p) const;
    /// Index of the product of monomials i and j, or -1 when it is truncated away.
    int product(int i, int j) const { return table_[static_cast<size_t>(i) * monos_.size() + j]; }
    bool has_var(int j) const;

private:
    std::vector<int> vars_;
    Grading grading_;
    int half_cap_;
    std::vector<Partition> monos_;  // sorted by degree, then lexicographically
    std::vector<int> deg_;
    std::map<Partition, int> index_;
    std::vector<int> table_;
};

using BasisPtr = std::shared_ptr<const MonomialBasis>;

/// Truncated formal power series in the variables a_j, graded by a MonomialBasis.
///
/// Coefficients are exact rationals stored densely over the basis; all operations truncate at
/// the basis cap. Binary operations require the same basis object.
class MultiSeries {
public:
    MultiSeries() = default;
    explicit MultiSeries(BasisPtr basis);

    static MultiSeries constant(BasisPtr basis, const Rat& c);
    /// c times a single monomial (zero when the monomial is truncated away).
    static MultiSeries monomial(BasisPtr basis, const Partition& p, const Rat& c = Rat(1));
    /// The variable a_j.
    static MultiSeries var(BasisPtr basis, int j);

    const BasisPtr& basis() const { return basis_; }
    const std::vector<Rat>& dense() const { return c_; }
    Rat coefficient(const Partition& p) const;
    Rat constant_term() const;
    void set_coefficient(const Partition& p, const Rat& c);
    /// Nonzero terms in basis order (degree, then lexicographic).
    std::vector<std::pair<Partition, Rat>> terms() const;
    bool is_zero() const;

    MultiSeries operator-() const;
    friend MultiSeries operator+(const MultiSeries& a, const MultiSeries& b);
    friend MultiSeries operator-(const MultiSeries& a, const MultiSeries& b);
    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
    friend MultiSeries operator*(const Rat& s, const MultiSeries& a);
    friend bool operator==(const MultiSeries& a, const MultiSeries& b);
    MultiSeries& operator+=(const MultiSeries& o);

    MultiSeries pow(int e) const;
    /// Product with the single monomial of index k.
    MultiSeries times_monomial(int k) const;
    /// Substitutes a rational value for a_j; the result no longer involves a_j.
    MultiSeries substitute(int j, const Rat& value) const;
    /// log of a series with constant term 1.
    MultiSeries log() const;
    /// Re-expresses the series in a smaller basis with the same grading (terms outside it are
    /// dropped; every monomial of the target must exist in this basis).
    MultiSeries restrict_to(BasisPtr target) const;

private:
    BasisPtr basis_;
    std::vector<Rat> c_;
};

/// Specializes a_j -> values(j) * t^{deg(a_j)} for the edge or face grading, producing a
/// series in t known through t^{t_half_cap/2}. Variables missing from `values` are set to 1.
///
/// The result is exact only up to the degree the series' own truncation guarantees: for a
/// series truncated by the same grading that is its cap; for a weight-truncated series it is
/// weight_cap/2 (edge) and weight_cap/6 (face, no a_1 or a_2). Asking for more is an error,
/// as is face grading when a_1 or a_2 carries a nonzero value.
USeries grade_specialize(const MultiSeries& s, Grading grading, int t_half_cap,
                         const std::map<int, Rat>& values = {});

}  // namespace planarlim
