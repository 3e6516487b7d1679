#include "planarlim/identities.hpp"

#include <stdexcept>

namespace planarlim {

Rat binomial_identity_lhs(BinomialIdentity which, long l1, long l2) {
    Rat sum(0);
    long top = std::max(l1, l2) + 1;
    for (long p = 0; p <= top; ++p) {
        if (which == BinomialIdentity::First)
            sum += Rat(p) * Rat(binom(2 * l1, l1 - p) * binom(2 * l2, l2 - p));
        else
            sum += Rat(2 * p + 1) * Rat(binom(2 * l1 + 1, l1 - p) * binom(2 * l2 + 1, l2 - p));
    }
    return sum;
}

Rat binomial_identity_rhs(BinomialIdentity which, long l1, long l2) {
    Rat cc = Rat(binom(2 * l1, l1) * binom(2 * l2, l2));
    if (which == BinomialIdentity::First) {
        if (l1 + l2 == 0) return Rat(0);
        return Rat(l1 * l2, 2 * (l1 + l2)) * cc;
    }
    return Rat((2 * l1 + 1) * (2 * l2 + 1), l1 + l2 + 1) * cc;
}

bool check_binomial_identity(BinomialIdentity which, long l1, long l2) {
    if (l1 < 0 || l2 < 0) throw std::invalid_argument("identity indices must be nonnegative");
    return binomial_identity_lhs(which, l1, l2) == binomial_identity_rhs(which, l1, l2);
}

namespace {

struct Pole : std::exception {};

Rat checked_div(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw Pole();
    return a / b;
}

}  // namespace

Rat zb_f(BinomialIdentity which, long l1, long l2, long p) {
    Rat cc = Rat(binom(2 * l1, l1) * binom(2 * l2, l2));
    if (which == BinomialIdentity::First) {
        Rat num = Rat(2 * p * (l1 + l2)) * Rat(binom(2 * l1, l1 - p) * binom(2 * l2, l2 - p));
        return checked_div(num, Rat(l1 * l2) * cc);
    }
    Rat num = Rat((2 * p + 1) * (l1 + l2 + 1)) * Rat(binom(2 * l1 + 1, l1 - p) * binom(2 * l2 + 1, l2 - p));
    return checked_div(num, Rat((2 * l1 + 1) * (2 * l2 + 1)) * cc);
}

Rat zb_g(BinomialIdentity which, long l1, long l2, long p, CertificateForm form) {
    if (which == BinomialIdentity::First) {
        Rat num = Rat(-2 * p * (p - 1)) * Rat(binom(2 * l1 + 1, l1 + p) * binom(2 * l2 - 1, l2 - p));
        return checked_div(num, Rat(l1 * (2 * l1 + 1)) * Rat(binom(2 * l1, l1) * binom(2 * l2, l2)));
    }
    Rat num = Rat(-p * p * (l2 + 1) * (l2 + 1)) * Rat(binom(2 * l1 + 2, l1 - p + 1) * binom(2 * l2, l2 - p));
    Rat g = checked_div(num, Rat(binom(2 * l1 + 2, l1 + 1) * binom(2 * l2, l2)));
    if (form == CertificateForm::Corrected) g /= Rat((l1 + 1) * (l2 + 1)) * Rat((l1 + 1) * (l2 + 1));
    return g;
}

CertificateReport zb_certificate_report(BinomialIdentity which, const std::vector<std::tuple<long, long, long>>& grid,
                                        CertificateForm form) {
    CertificateReport rep;
    for (const auto& [l1, l2, p] : grid) {
        try {
            Rat lhs = zb_f(which, l1 + 1, l2, p) - zb_f(which, l1, l2, p);
            Rat rhs = zb_g(which, l1, l2, p + 1, form) - zb_g(which, l1, l2, p, form);
            ++rep.checked;
            if (lhs != rhs) {
                rep.ok = false;
                rep.failed.emplace_back(l1, l2, p);
            }
        } catch (const Pole&) {
            rep.skipped.emplace_back(l1, l2, p);
        }
    }
    return rep;
}

bool check_zb_certificate(BinomialIdentity which, const std::vector<std::tuple<long, long, long>>& grid,
                          CertificateForm form) {
    return zb_certificate_report(which, grid, form).ok;
}

}  // namespace planarlim
