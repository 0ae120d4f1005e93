#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hsi/minors.hpp"
#include "hsi/polyalg.hpp"

namespace hsi {

enum class Label {
    hurwitz_stable,
    quasi_stable,
    self_interlacing,
    almost_self_interlacing,
    quasi_self_interlacing,
    generalized_hurwitz,
    unclassified
};

enum class SiType { I, II };

std::string to_string(Label label);
std::string to_string(SiType t);

/// Determinant values and counts behind a verdict.
struct Certificates {
    std::vector<Q> delta;
    std::vector<Q> eta;
    std::string route;
    std::optional<int> scf_order;
    std::optional<int> v_order;
    std::string failed_gate;
    std::optional<Label> reflected_label;
};

struct ClassificationReport {
    Label label = Label::unclassified;
    std::optional<int> order_k;
    std::optional<int> degeneracy_m;
    std::optional<SiType> si_type;
    bool normalized = false;
    Certificates certificates;
};

struct RFunctionCertificate {
    int r = 0;
    Q s_minus2;
    std::vector<Q> D;
    std::vector<Q> Dhat;
    int negative_poles = 0;
    int positive_poles = 0;
    bool pole_at_zero = false;
};

/// Certificate iff s_{-2} <= 0 and D_j > 0 for j = 1..r. `reason` receives the failed condition.
std::optional<RFunctionCertificate> is_r_function(const RationalFunction& f, std::string* reason = nullptr);

struct PoleSignCount {
    int r_minus = 0;
    int r_plus = 0;
    bool zero_pole = false;
};

PoleSignCount pole_sign_count(const RationalFunction& f, const RFunctionCertificate& cert);

/// Negated copy when the leading coefficient is negative.
Polynomial normalized(const Polynomial& p);

bool hurwitz_minor_test(const Polynomial& p);
bool eta_test(const Polynomial& p);
/// H_n(p) nonsingular and every minor of order <= max_order nonnegative.
bool finite_hurwitz_tn_test(const Polynomial& p, int max_order);
bool lienard_chipart(const Polynomial& p, int variant);

/// Delta_1..Delta_{n-m} > 0, the rest zero, and the common factor of p0 and p1
/// has only real nonpositive zeros. Returns m.
std::optional<int> quasi_stable_degeneracy(const Polynomial& p);

/// Gate Delta_{n-1}, Delta_{n-3}, ... > 0 and the Frobenius order formula.
struct GeneralizedOrder {
    int k = 0;
    bool zero_root = false;
};
std::optional<GeneralizedOrder> generalized_hurwitz_order(const Polynomial& p);

/// Coefficient form of the order; both sequences are computed and must agree.
std::optional<int> generalized_lienard_chipart_order(const Polynomial& p);

/// Delta_{n-1}, Delta_{n-3}, ... > 0 and (-1)^{[(n+1)/2]-i} Delta_{n-2i} > 0.
bool self_interlacing_minor_test(const Polynomial& p);

/// (-1)^{n(n+1)/2} [p0(-z^2) - z p1(-z^2)]
Polynomial dual_transform(const Polynomial& p);

/// p_j(z) = p0^{(j)}(z^2) + z p1^{(j)}(z^2), j = 1..[n/2]-1
std::vector<Polynomial> derivative_family(const Polynomial& p);

/// Every r-th coefficient of p0 and p1 (leading ones kept).
Polynomial subsample_family(const Polynomial& p, int r);

/// (-1)^{j(j+1)/2} D_j(R) > 0, j = 1..n, with R = (-1)^n p(-z) / p(z).
bool new_stability_criterion(const Polynomial& p);

ClassificationReport classify(const Polynomial& p);

}  // namespace hsi
