#pragma once

#include <map>
#include <vector>

#include "planarlim/multiseries.hpp"
#include "planarlim/rat.hpp"

namespace planarlim {

/// A Laurent polynomial in N: exponent -> coefficient, zero coefficients omitted.
using LaurentN = std::map<int, Rat>;

LaurentN laurent_mul(const LaurentN& a, const LaurentN& b);
void laurent_add_to(LaurentN& acc, const LaurentN& b, const Rat& scale = Rat(1));

/// Vertex valencies of a monomial: m_j vertices of valency j, in increasing order.
std::vector<int> valencies(const Partition& p);

/// The rotation permutation on half-edges 0..2E-1: one cyclic block per vertex, in order.
std::vector<int> rotation_for(const std::vector<int>& valencies);

/// Number of cycles of rotation o matching (first the matching, then the rotation).
/// Throws when the matching is not a fixed-point-free involution of the same size.
int faces_of_matching(const std::vector<int>& rotation, const std::vector<int>& matching);

/// Coefficient of a_lambda in the Gaussian matrix integral with weight exp(N sum a_n Tr M^n / n):
/// the sum over perfect matchings of N^(V - E + F), divided by prod m_j! j^(m_j).
LaurentN z_coefficient(const Partition& p);

/// Genus -> weighted connected count for each partition.
using MapCounts = std::map<Partition, std::map<int, Rat>>;

inline constexpr int kOracleDefaultCap = 8;
inline constexpr int kOracleExtendedCap = 10;

/// Connected counts c_{lambda, g} for every partition of weight <= weight_cap, read off from the
/// N^(2 - 2g) coefficients of the formal log of the partition function. Caps above 8 need
/// `extended`; anything above 10 is refused with "oracle cap exceeded".
MapCounts connected_coefficients(int weight_cap, bool extended = false);

}  // namespace planarlim
