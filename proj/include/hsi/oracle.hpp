#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hsi/classify.hpp"
#include "hsi/polyalg.hpp"

namespace hsi {

struct RootSet {
    std::vector<std::complex<double>> roots;
};

/// Aberth-Ehrlich iteration, companion-matrix eigenvalues as fallback.
/// Every root satisfies |p(z)| / sum |a_i| |z|^{n-i} < 1e-10, else DomainError "oracle-failure".
RootSet numeric_roots(const Polynomial& p);

struct RootVerdict {
    bool indeterminate = false;
    std::string reason;
    ClassificationReport report;
};

/// Classification straight from the root locations. Distances are measured
/// against tol * max(1, max |root|); anything within a factor 1e3 of that
/// scale of a boundary is indeterminate.
RootVerdict classify_by_roots(const RootSet& roots, double tol = 1e-8);

struct ComplexPair {
    Q re;
    Q im;  // > 0; the factor is (z - re)^2 + im^2
};

/// Prescribed root structure. Explicit roots are used as given; otherwise a
/// structure matching label/degree/k/m is drawn from the seed.
struct StructureSpec {
    Label label = Label::hurwitz_stable;
    int degree = 0;
    std::optional<int> order_k;
    std::optional<int> degeneracy_m;
    SiType si_type = SiType::I;
    /// Generalized family only: place mu_1 at the origin.
    bool zero_root = false;
    std::vector<Q> real_roots;
    std::vector<ComplexPair> complex_pairs;
};

/// Root data the polynomial is expanded from.
struct Instance {
    Polynomial p;
    std::vector<Q> real_roots;
    std::vector<ComplexPair> complex_pairs;
};

Instance generate_instance(const StructureSpec& spec, std::uint64_t seed);

/// Product of (z - r) and ((z - re)^2 + im^2) factors.
Polynomial expand_roots(const std::vector<Q>& real_roots, const std::vector<ComplexPair>& pairs);

struct HalfPlaneCounts {
    int rhp = 0;
    int lhp = 0;
    int axis = 0;
    bool simple = true;
    bool has_nonreal = false;
    bool interlacing = false;
};

struct StrangeReport {
    int degree = 0;
    Polynomial q;          // p0(-z^2) + z p1(z^2)
    Polynomial companion;  // p0(z^2) + z p1(-z^2)
    RootSet q_roots;
    RootSet companion_roots;
    HalfPlaneCounts q_counts;
    HalfPlaneCounts companion_counts;
    /// floor((n+1)/2) open right, floor(n/2) open left, none on the axis, all simple.
    bool q_counts_hold = false;
    bool companion_counts_hold = false;
};

/// Requires a Hurwitz stable p (DomainError "precondition" otherwise).
StrangeReport strange_experiment(const Polynomial& p);

/// F(u) = -alpha u + beta + sum gamma_j / (u - pole_j)
struct NumericPartialFraction {
    std::vector<double> poles;
    std::vector<double> residues;
    double alpha = 0;
    double beta = 0;
};

/// Needs simple real poles of the reduced function.
NumericPartialFraction numeric_partial_fractions(const RationalFunction& r);

}  // namespace hsi
