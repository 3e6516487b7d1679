#include "planarlim/wick_oracle.hpp"

#include <numeric>
#include <stdexcept>

namespace planarlim {

LaurentN laurent_mul(const LaurentN& a, const LaurentN& b) {
    LaurentN out;
    for (auto& [ea, ca] : a)
        for (auto& [eb, cb] : b) out[ea + eb] += ca * cb;
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

void laurent_add_to(LaurentN& acc, const LaurentN& b, const Rat& scale) {
    for (auto& [e, c] : b) {
        Rat& slot = acc[e];
        slot += scale * c;
        if (slot.is_zero()) acc.erase(e);
    }
}

std::vector<int> valencies(const Partition& p) {
    std::vector<int> v;
    for (auto [j, m] : p.parts())
        for (int i = 0; i < m; ++i) v.push_back(j);
    return v;
}

std::vector<int> rotation_for(const std::vector<int>& vals) {
    std::vector<int> rot;
    int start = 0;
    for (int k : vals) {
        for (int i = 0; i < k; ++i) rot.push_back(start + (i + 1) % k);
        start += k;
    }
    return rot;
}

int faces_of_matching(const std::vector<int>& rotation, const std::vector<int>& matching) {
    const int n = static_cast<int>(rotation.size());
    if (static_cast<int>(matching.size()) != n) throw std::invalid_argument("matching and rotation sizes differ");
    for (int h = 0; h < n; ++h) {
        int m = matching[h];
        if (m < 0 || m >= n || m == h || matching[m] != h)
            throw std::invalid_argument("matching must be a fixed-point-free involution");
    }
    std::vector<char> seen(n, 0);
    int faces = 0;
    for (int h = 0; h < n; ++h) {
        if (seen[h]) continue;
        ++faces;
        for (int x = h; !seen[x]; x = rotation[matching[x]]) seen[x] = 1;
    }
    return faces;
}

namespace {

long double_factorial_odd(int n) {  // (n-1)!! for even n
    long r = 1;
    for (int k = n - 1; k > 1; k -= 2) r *= k;
    return r;
}

void enumerate(const std::vector<int>& rot, std::vector<int>& match, std::map<int, long>& faces, long& count) {
    const int n = static_cast<int>(rot.size());
    int first = 0;
    while (first < n && match[first] >= 0) ++first;
    if (first == n) {
        ++faces[faces_of_matching(rot, match)];
        ++count;
        return;
    }
    for (int other = first + 1; other < n; ++other) {
        if (match[other] >= 0) continue;
        match[first] = other;
        match[other] = first;
        enumerate(rot, match, faces, count);
        match[first] = match[other] = -1;
    }
}

}  // namespace

LaurentN z_coefficient(const Partition& p) {
    if (p.empty()) return {{0, Rat(1)}};
    std::vector<int> vals = valencies(p);
    int halfedges = std::accumulate(vals.begin(), vals.end(), 0);
    if (halfedges % 2 != 0) return {};
    std::vector<int> rot = rotation_for(vals);
    std::vector<int> match(halfedges, -1);
    std::map<int, long> faces;
    long count = 0;
    enumerate(rot, match, faces, count);
    if (count != double_factorial_odd(halfedges)) throw std::logic_error("matching enumeration miscounted");
    const int V = static_cast<int>(vals.size()), E = halfedges / 2;
    Rat sym = p.symmetry_factor();
    LaurentN out;
    for (auto [F, k] : faces) {
        int chi = V - E + F;
        if (chi % 2 != 0) throw std::logic_error("odd Euler characteristic");
        out[chi] += Rat(k) / sym;
    }
    return out;
}

MapCounts connected_coefficients(int weight_cap, bool extended) {
    int limit = extended ? kOracleExtendedCap : kOracleDefaultCap;
    if (weight_cap > kOracleExtendedCap || weight_cap > limit || weight_cap < 0)
        throw std::invalid_argument("oracle cap exceeded");
    auto B = MonomialBasis::by_weight(weight_cap);
    const int n = B->size();
    // X = Z - 1 over the basis, with Laurent coefficients.
    std::vector<LaurentN> X(n);
    for (int i = 1; i < n; ++i) X[i] = z_coefficient(B->monomial(i));

    auto mul = [&](const std::vector<LaurentN>& a, const std::vector<LaurentN>& b) {
        std::vector<LaurentN> out(n);
        for (int i = 0; i < n; ++i) {
            if (a[i].empty()) continue;
            for (int j = 0; j < n; ++j) {
                if (b[j].empty()) continue;
                int k = B->product(i, j);
                if (k >= 0) laurent_add_to(out[k], laurent_mul(a[i], b[j]));
            }
        }
        return out;
    };

    // log(1 + X) = sum_k (-1)^(k+1) X^k / k; X has no constant term so k <= weight_cap suffices.
    std::vector<LaurentN> logZ(n), power = X;
    for (int k = 1; k <= weight_cap; ++k) {
        Rat scale(k % 2 ? 1 : -1, k);
        for (int i = 0; i < n; ++i) laurent_add_to(logZ[i], power[i], scale);
        if (k < weight_cap) power = mul(power, X);
    }

    MapCounts out;
    for (int i = 1; i < n; ++i) {
        for (auto& [e, c] : logZ[i]) {
            if (e > 2 || (2 - e) % 2 != 0) throw std::logic_error("connected term with an impossible power of N");
            out[B->monomial(i)][(2 - e) / 2] = c;
        }
    }
    return out;
}

}  // namespace planarlim
