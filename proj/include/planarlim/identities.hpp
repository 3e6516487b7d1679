#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "planarlim/rat.hpp"

namespace planarlim {

enum class BinomialIdentity { First, Second };

/// Direct sum over p of the left side of the chosen identity:
///   First:  sum_p p * C(2l1, l1-p) * C(2l2, l2-p)
///   Second: sum_p (2p+1) * C(2l1+1, l1-p) * C(2l2+1, l2-p)
Rat binomial_identity_lhs(BinomialIdentity which, long l1, long l2);
/// Closed form of the right side:
///   First:  l1*l2 / (2(l1+l2)) * C(2l1,l1) * C(2l2,l2)
///   Second: (2l1+1)(2l2+1)/(l1+l2+1) * C(2l1,l1) * C(2l2,l2)
Rat binomial_identity_rhs(BinomialIdentity which, long l1, long l2);
bool check_binomial_identity(BinomialIdentity which, long l1, long l2);

/// Which companion function g to use in the telescoping certificate.
enum class CertificateForm {
    Printed,    ///< g exactly as published
    Corrected,  ///< second identity: published g divided by ((l1+1)(l2+1))^2
};

/// Normalized summand f(l1, l2, p) whose sum over p equals 1.
Rat zb_f(BinomialIdentity which, long l1, long l2, long p);
/// Companion g(l1, l2, p) of the telescoping relation
///   f(l1+1, l2, p) - f(l1, l2, p) = g(l1, l2, p+1) - g(l1, l2, p).
Rat zb_g(BinomialIdentity which, long l1, long l2, long p, CertificateForm form = CertificateForm::Printed);

struct CertificateReport {
    bool ok = true;
    int checked = 0;
    std::vector<std::tuple<long, long, long>> skipped;  ///< grid points at poles
    std::vector<std::tuple<long, long, long>> failed;
};

/// Verifies the telescoping relation exactly at every grid point (l1, l2, p).
CertificateReport zb_certificate_report(BinomialIdentity which, const std::vector<std::tuple<long, long, long>>& grid,
                                        CertificateForm form = CertificateForm::Printed);
bool check_zb_certificate(BinomialIdentity which, const std::vector<std::tuple<long, long, long>>& grid,
                          CertificateForm form = CertificateForm::Printed);

}  // namespace planarlim
