#include "hsi/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "hsi/errors.hpp"

namespace hsi {

namespace {

using cd = std::complex<double>;

constexpr double kResidualBound = 1e-10;
constexpr int kMaxIterations = 2000;
constexpr double kBandFactor = 1e3;

struct Horner {
    cd value;
    cd slope;
    double scale;  // sum |a_i| |z|^{n-i}
};

Horner horner(const std::vector<double>& a, cd z) {
    Horner h{0.0, 0.0, 0.0};
    double az = std::abs(z);
    for (double c : a) {
        h.slope = h.slope * z + h.value;
        h.value = h.value * z + c;
        h.scale = h.scale * az + std::abs(c);
    }
    return h;
}

double residual(const std::vector<double>& a, cd z) {
    Horner h = horner(a, z);
    return h.scale == 0 ? 0 : std::abs(h.value) / h.scale;
}

bool all_accurate(const std::vector<double>& a, const std::vector<cd>& z) {
    return std::all_of(z.begin(), z.end(), [&](cd r) { return residual(a, r) < kResidualBound; });
}

std::vector<cd> aberth(const std::vector<double>& a) {
    size_t n = a.size() - 1;
    double radius = 0;
    for (size_t i = 1; i <= n; ++i) radius = std::max(radius, std::pow(std::abs(a[i] / a[0]), 1.0 / static_cast<double>(i)));
    if (radius == 0) radius = 1;
    std::vector<cd> z(n);
    for (size_t k = 0; k < n; ++k)
        z[k] = std::polar(radius, 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(n) + 0.4);
    for (int it = 0; it < kMaxIterations; ++it) {
        double worst = 0;
        for (size_t k = 0; k < n; ++k) {
            Horner h = horner(a, z[k]);
            if (h.value == cd(0)) continue;
            cd ratio = h.value / h.slope;
            cd repulse = 0;
            for (size_t j = 0; j < n; ++j)
                if (j != k) repulse += 1.0 / (z[k] - z[j]);
            cd step = ratio / (1.0 - ratio * repulse);
            if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
            z[k] -= step;
            worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[k])));
        }
        if (worst < 1e-15) break;
    }
    return z;
}

std::vector<cd> companion_roots(const std::vector<double>& a) {
    size_t n = a.size() - 1;
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (size_t j = 0; j < n; ++j) c(0, static_cast<Eigen::Index>(j)) = -a[j + 1] / a[0];
    for (size_t i = 1; i < n; ++i) c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i - 1)) = 1;
    Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
    std::vector<cd> z;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) z.push_back(es.eigenvalues()(i));
    for (cd& r : z)
        for (int s = 0; s < 5; ++s) {
            Horner h = horner(a, r);
            if (h.slope == cd(0)) break;
            cd next = r - h.value / h.slope;
            if (residual(a, next) >= residual(a, r)) break;
            r = next;
        }
    return z;
}

/// Thrown internally when a root sits inside the indeterminate band.
struct Fuzzy {
    std::string why;
};

struct Located {
    cd z;
    int side;  // -1 open left, 0 axis, +1 open right
};

class RootGeometry {
   public:
    RootGeometry(const std::vector<cd>& roots, double tol) {
        double scale = 1;
        for (cd z : roots) scale = std::max(scale, std::abs(z));
        eps_ = tol * scale;
        for (cd z : roots) roots_.push_back({z, sign_of(z.real(), "root near the imaginary axis")});
    }

    int sign_of(double x, const char* what) const {
        if (std::abs(x) <= eps_) return 0;
        if (std::abs(x) < kBandFactor * eps_) throw Fuzzy{what};
        return x > 0 ? 1 : -1;
    }
    bool same(double x, double y, const char* what) const { return sign_of(x - y, what) == 0; }
    bool is_real(cd z) const { return sign_of(z.imag(), "root near the real axis") == 0; }

    const std::vector<Located>& roots() const { return roots_; }
    RootGeometry reflected() const {
        RootGeometry g = *this;
        for (Located& l : g.roots_) {
            l.z = -l.z;
            l.side = -l.side;
        }
        return g;
    }
    int degree() const { return static_cast<int>(roots_.size()); }
    /// Other roots measured on the same scale.
    RootGeometry subset(const std::vector<cd>& roots) const {
        RootGeometry g;
        g.eps_ = eps_;
        for (cd z : roots) g.roots_.push_back({z, g.sign_of(z.real(), "root near the imaginary axis")});
        return g;
    }

   private:
    RootGeometry() = default;
    double eps_ = 0;
    std::vector<Located> roots_;
};

struct RootOrder {
    int k = 0;
    bool zero_root = false;
};

/// Interval-parity pattern of a type I generalized Hurwitz polynomial.
std::optional<RootOrder> generalized_by_roots(const RootGeometry& g) {
    std::vector<double> mu;
    std::vector<double> negatives;
    bool zero = false;
    for (const Located& l : g.roots()) {
        bool real = g.is_real(l.z);
        if (l.side >= 0) {
            if (!real) return std::nullopt;
            if (l.side == 0) {
                if (zero) return std::nullopt;
                zero = true;
                mu.push_back(0);
            } else {
                mu.push_back(l.z.real());
            }
        } else if (real) {
            negatives.push_back(-l.z.real());
        }
    }
    std::sort(mu.begin(), mu.end());
    for (size_t i = 1; i < mu.size(); ++i)
        if (g.same(mu[i], mu[i - 1], "nearly coincident roots")) return std::nullopt;
    RootOrder out{static_cast<int>(mu.size()), zero};
    if (out.k == 0) return out;
    // counts[i]: negatives with magnitude in (mu_i, mu_{i+1}); counts[0] below mu_1, counts[k] above mu_k
    std::vector<int> counts(mu.size() + 1, 0);
    for (double x : negatives) {
        size_t slot = 0;
        for (double m : mu) {
            if (g.same(x, m, "root near the mirror of a right half-plane root")) return std::nullopt;
            if (x > m) ++slot;
        }
        ++counts[slot];
    }
    if (counts[0] % 2 != 0) return std::nullopt;
    for (size_t i = 1; i < mu.size(); ++i)
        if (counts[i] % 2 != 1) return std::nullopt;
    int want = g.degree() % 2 == 0 ? 1 : 0;
    if (counts[mu.size()] % 2 != want) return std::nullopt;
    return out;
}

/// Degeneracy index of a type I quasi-self-interlacing root set. Symmetric
/// pairs keep the type of the cofactor, each zero root swaps it.
std::optional<int> quasi_si_by_roots(const RootGeometry& g) {
    std::vector<double> real;
    for (const Located& l : g.roots()) {
        if (!g.is_real(l.z)) return std::nullopt;
        real.push_back(l.z.real());
    }
    int m = 0;
    int zeros = 0;
    std::vector<cd> rest;
    std::vector<bool> used(real.size(), false);
    for (size_t i = 0; i < real.size(); ++i) {
        if (used[i]) continue;
        if (g.sign_of(real[i], "root near zero") == 0) {
            used[i] = true;
            ++m;
            ++zeros;
            continue;
        }
        for (size_t j = i + 1; j < real.size(); ++j) {
            if (used[j] || (real[i] > 0) == (real[j] > 0)) continue;
            if (g.same(real[i], -real[j], "nearly symmetric roots")) {
                used[i] = used[j] = true;
                m += 2;
                break;
            }
        }
        if (!used[i]) rest.emplace_back(real[i], 0.0);
    }
    if (m == 0) return std::nullopt;
    if (rest.empty()) return m;
    if (zeros % 2 == 1)
        for (cd& z : rest) z = -z;
    auto gh = generalized_by_roots(g.subset(rest));
    int d = static_cast<int>(rest.size());
    if (!gh || gh->zero_root || gh->k != (d + 1) / 2) return std::nullopt;
    return m;
}

void fill_generalized(ClassificationReport& rep, const RootOrder& o, int n, SiType t) {
    rep.si_type = t;
    rep.order_k = o.k;
    if (o.k == (n + 1) / 2)
        rep.label = o.zero_root ? Label::almost_self_interlacing : Label::self_interlacing;
    else
        rep.label = Label::generalized_hurwitz;
}

ClassificationReport classify_geometry(const RootGeometry& g) {
    ClassificationReport rep;
    int n = g.degree();
    int left = 0;
    int axis = 0;
    for (const Located& l : g.roots()) {
        if (l.side < 0) ++left;
        if (l.side == 0) ++axis;
    }
    if (left == n) {
        rep.label = Label::hurwitz_stable;
        rep.order_k = 0;
        rep.degeneracy_m = 0;
        return rep;
    }
    if (left + axis == n) {
        rep.label = Label::quasi_stable;
        rep.degeneracy_m = axis;
        return rep;
    }
    if (auto o = generalized_by_roots(g); o && o->k >= 1) {
        fill_generalized(rep, *o, n, SiType::I);
        return rep;
    }
    if (auto m = quasi_si_by_roots(g)) {
        rep.label = Label::quasi_self_interlacing;
        rep.degeneracy_m = *m;
        rep.si_type = SiType::I;
        return rep;
    }
    RootGeometry r = g.reflected();
    if (auto o = generalized_by_roots(r); o && o->k >= 1) {
        fill_generalized(rep, *o, n, SiType::II);
        return rep;
    }
    if (auto m = quasi_si_by_roots(r)) {
        rep.label = Label::quasi_self_interlacing;
        rep.degeneracy_m = *m;
        rep.si_type = SiType::II;
        return rep;
    }
    rep.label = Label::unclassified;
    return rep;
}

Q grid_value(long j) {
    Q v(j, 8);
    v.canonicalize();
    return v;
}

class Sampler {
   public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    /// `count` distinct grid indices in 1..limit, ascending.
    std::vector<long> distinct(int count, int limit) {
        if (count > limit) throw DomainError("invalid-input", "not enough separated magnitudes for the requested degree");
        std::vector<long> all(static_cast<size_t>(limit));
        std::iota(all.begin(), all.end(), 1);
        std::shuffle(all.begin(), all.end(), rng_);
        all.resize(static_cast<size_t>(count));
        std::sort(all.begin(), all.end());
        return all;
    }

    std::vector<ComplexPair> left_pairs(int count, int limit) {
        std::set<std::pair<long, long>> seen;
        std::vector<ComplexPair> out;
        while (static_cast<int>(out.size()) < count) {
            long re = uniform(1, limit);
            long im = uniform(1, limit);
            if (!seen.insert({re, im}).second) continue;
            out.push_back({-grid_value(re), grid_value(im)});
        }
        return out;
    }

   private:
    std::mt19937_64 rng_;
};

int grid_limit(int n) { return std::max(24, 4 * n); }

void stable_part(Sampler& s, int n, std::vector<Q>& real, std::vector<ComplexPair>& pairs) {
    int limit = grid_limit(n);
    int c = s.uniform(0, n / 2);
    for (long j : s.distinct(n - 2 * c, limit)) real.push_back(-grid_value(j));
    for (const ComplexPair& cp : s.left_pairs(c, limit)) pairs.push_back(cp);
}

/// Type I generalized Hurwitz roots of order k.
void generalized_part(Sampler& s, int n, int k, bool zero, std::vector<Q>& real, std::vector<ComplexPair>& pairs) {
    // counts[0]: negatives below mu_1, counts[i]: between mu_i and mu_{i+1}, counts[k]: beyond mu_k
    std::vector<int> counts(static_cast<size_t>(k) + 1, 0);
    for (int i = 1; i < k; ++i) counts[static_cast<size_t>(i)] = 1;
    counts[static_cast<size_t>(k)] = n % 2 == 0 ? 1 : 0;
    int spare = n - (2 * k - 1) - counts[static_cast<size_t>(k)];
    int complex_count = 0;
    for (int unit = 0; unit < spare / 2; ++unit) {
        int choice = s.uniform(zero ? 0 : -1, k);
        if (choice < 0 || (zero && choice == 0))
            ++complex_count;
        else
            counts[static_cast<size_t>(choice)] += 2;
    }
    int nonzero_mu = zero ? k - 1 : k;
    int negatives = std::accumulate(counts.begin(), counts.end(), 0);
    std::vector<long> mags = s.distinct(nonzero_mu + negatives, grid_limit(n));
    size_t next = 0;
    auto take = [&]() { return grid_value(mags[next++]); };
    for (int c = 0; c < counts[0]; ++c) real.push_back(-take());
    if (zero) {
        real.push_back(Q(0));
        for (int c = 0; c < counts[1]; ++c) real.push_back(-take());
    }
    for (int i = zero ? 1 : 0; i < k; ++i) {
        real.push_back(take());
        for (int c = 0; c < counts[static_cast<size_t>(i + 1)]; ++c) real.push_back(-take());
    }
    for (const ComplexPair& cp : s.left_pairs(complex_count, grid_limit(n))) pairs.push_back(cp);
}

bool typed(Label l) { return l != Label::hurwitz_stable && l != Label::quasi_stable && l != Label::unclassified; }

bool same_report(const ClassificationReport& x, const ClassificationReport& y) {
    return x.label == y.label && x.order_k == y.order_k && x.degeneracy_m == y.degeneracy_m && x.si_type == y.si_type;
}

RootSet exact_root_set(const std::vector<Q>& real, const std::vector<ComplexPair>& pairs) {
    RootSet rs;
    for (const Q& r : real) rs.roots.emplace_back(to_double(r), 0.0);
    for (const ComplexPair& c : pairs) {
        rs.roots.emplace_back(to_double(c.re), to_double(c.im));
        rs.roots.emplace_back(to_double(c.re), -to_double(c.im));
    }
    return rs;
}

HalfPlaneCounts half_plane_counts(const RootSet& rs, double tol) {
    HalfPlaneCounts c;
    double scale = 1;
    for (cd z : rs.roots) scale = std::max(scale, std::abs(z));
    double eps = tol * scale;
    std::vector<double> lam;
    std::vector<double> mu;
    for (cd z : rs.roots) {
        if (std::abs(z.real()) <= eps)
            ++c.axis;
        else if (z.real() > 0)
            ++c.rhp, lam.push_back(std::abs(z));
        else
            ++c.lhp, mu.push_back(std::abs(z));
        if (std::abs(z.imag()) > eps) c.has_nonreal = true;
    }
    for (size_t i = 0; i < rs.roots.size(); ++i)
        for (size_t j = i + 1; j < rs.roots.size(); ++j)
            if (std::abs(rs.roots[i] - rs.roots[j]) <= eps) c.simple = false;
    auto distinct = [&](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        std::vector<double> out;
        for (double x : v)
            if (out.empty() || x - out.back() > eps) out.push_back(x);
        return out;
    };
    lam = distinct(lam);
    mu = distinct(mu);
    std::vector<std::pair<double, int>> merged;
    for (double x : lam) merged.emplace_back(x, 0);
    for (double x : mu) merged.emplace_back(x, 1);
    std::sort(merged.begin(), merged.end());
    c.interlacing = !merged.empty();
    for (size_t i = 0; i < merged.size(); ++i) {
        if (merged[i].second != static_cast<int>(i % 2)) c.interlacing = false;
        if (i > 0 && merged[i].first - merged[i - 1].first <= eps) c.interlacing = false;
    }
    return c;
}

/// f(-z^2) as a polynomial in z
Polynomial negated_square(const Polynomial& f) {
    Polynomial g = f.negate_argument();
    return g.in_square();
}

}  // namespace

RootSet numeric_roots(const Polynomial& p) {
    if (p.degree() < 1) throw DomainError("invalid-input", "root finding needs degree >= 1");
    RootSet out;
    std::vector<Q> c = p.coeffs();
    while (c.back() == 0) {
        c.pop_back();
        out.roots.emplace_back(0.0, 0.0);
    }
    if (c.size() == 1) return out;
    std::vector<double> a;
    for (const Q& x : c) a.push_back(to_double(x));
    std::vector<cd> z = aberth(a);
    if (!all_accurate(a, z)) z = companion_roots(a);
    if (!all_accurate(a, z)) throw DomainError("oracle-failure", "root finder did not converge");
    out.roots.insert(out.roots.end(), z.begin(), z.end());
    return out;
}

RootVerdict classify_by_roots(const RootSet& roots, double tol) {
    RootVerdict v;
    try {
        v.report = classify_geometry(RootGeometry(roots.roots, tol));
    } catch (const Fuzzy& f) {
        v.indeterminate = true;
        v.reason = f.why;
    }
    return v;
}

Polynomial expand_roots(const std::vector<Q>& real_roots, const std::vector<ComplexPair>& pairs) {
    Polynomial p{Q(1)};
    for (const Q& r : real_roots) p = p * Polynomial{Q(1), Q(-r)};
    for (const ComplexPair& c : pairs) {
        if (c.im <= 0) throw DomainError("invalid-input", "complex pair needs a positive imaginary part");
        p = p * Polynomial{Q(1), Q(-2 * c.re), Q(c.re * c.re + c.im * c.im)};
    }
    return p;
}

Instance generate_instance(const StructureSpec& spec, std::uint64_t seed) {
    Instance inst;
    ClassificationReport want;
    int n = spec.degree;
    bool explicit_roots = !spec.real_roots.empty() || !spec.complex_pairs.empty();
    if (explicit_roots) {
        inst.real_roots = spec.real_roots;
        inst.complex_pairs = spec.complex_pairs;
        int count = static_cast<int>(inst.real_roots.size() + 2 * inst.complex_pairs.size());
        if (n != 0 && n != count) throw DomainError("invalid-input", "root count differs from the degree");
        n = count;
    } else {
        if (n < 1) throw DomainError("invalid-input", "degree must be at least 1");
        Sampler s(seed);
        int kmax = (n + 1) / 2;
        want.label = spec.label;
        if (typed(spec.label)) want.si_type = spec.si_type;
        switch (spec.label) {
            case Label::hurwitz_stable:
                want.order_k = 0;
                want.degeneracy_m = 0;
                stable_part(s, n, inst.real_roots, inst.complex_pairs);
                break;
            case Label::quasi_stable: {
                int m = spec.degeneracy_m.value_or(1);
                want.degeneracy_m = m;
                if (m < 1 || m > n) throw DomainError("invalid-input", "degeneracy index must lie in 1..n");
                if (m % 2 == 1) inst.real_roots.push_back(Q(0));
                for (long j : s.distinct(m / 2, grid_limit(n))) inst.complex_pairs.push_back({Q(0), grid_value(j)});
                stable_part(s, n - m, inst.real_roots, inst.complex_pairs);
                break;
            }
            case Label::self_interlacing:
                if (n == 1 && spec.si_type == SiType::II)
                    throw DomainError("invalid-input", "a degree-1 type II self-interlacing polynomial is stable");
                want.order_k = kmax;
                generalized_part(s, n, kmax, false, inst.real_roots, inst.complex_pairs);
                break;
            case Label::almost_self_interlacing:
                if (kmax < 2 && spec.si_type == SiType::I)
                    throw DomainError("invalid-input", "type I almost self-interlacing needs degree >= 3");
                if (n < 2) throw DomainError("invalid-input", "almost self-interlacing needs degree >= 2");
                want.order_k = kmax;
                generalized_part(s, n, kmax, true, inst.real_roots, inst.complex_pairs);
                break;
            case Label::generalized_hurwitz: {
                int k = spec.order_k.value_or(1);
                if (k < 1 || k >= kmax)
                    throw DomainError("invalid-input", "generalized order must lie in 1..floor((n+1)/2)-1");
                if (spec.zero_root && k < 2)
                    throw DomainError("invalid-input", "a zero root at order 1 makes the polynomial quasi-stable");
                want.order_k = k;
                generalized_part(s, n, k, spec.zero_root, inst.real_roots, inst.complex_pairs);
                break;
            }
            case Label::quasi_self_interlacing: {
                int m = spec.degeneracy_m.value_or(2);
                if (m < 2 || m > n)
                    throw DomainError("invalid-input", "quasi self-interlacing generation needs 2 <= m <= n");
                if (m == n && spec.si_type == SiType::II)
                    throw DomainError("invalid-input", "with no cofactor the structure is reported as type I");
                want.degeneracy_m = m;
                int rest = n - m;
                int pairs = m / 2;
                std::vector<long> mags = s.distinct(pairs + rest, grid_limit(n));
                std::vector<long> pair_mags(mags.begin(), mags.end());
                std::shuffle(pair_mags.begin(), pair_mags.end(), std::mt19937_64(seed ^ 0x9e3779b97f4a7c15ULL));
                pair_mags.resize(static_cast<size_t>(pairs));
                std::sort(pair_mags.begin(), pair_mags.end());
                std::vector<long> si_mags;
                for (long j : mags)
                    if (!std::binary_search(pair_mags.begin(), pair_mags.end(), j)) si_mags.push_back(j);
                if (m % 2 == 1) inst.real_roots.push_back(Q(0));
                for (long j : pair_mags) {
                    inst.real_roots.push_back(grid_value(j));
                    inst.real_roots.push_back(-grid_value(j));
                }
                // a zero root swaps the self-interlacing type the cofactor needs
                bool positive_first = m % 2 == 0;
                for (size_t i = 0; i < si_mags.size(); ++i) {
                    bool positive = (i % 2 == 0) == positive_first;
                    inst.real_roots.push_back(positive ? grid_value(si_mags[i]) : Q(-grid_value(si_mags[i])));
                }
                break;
            }
            case Label::unclassified:
                throw DomainError("invalid-input", "cannot generate an unclassified structure");
        }
        if (spec.si_type == SiType::II && typed(spec.label)) {
            for (Q& r : inst.real_roots) r = -r;
            for (ComplexPair& c : inst.complex_pairs) c.re = -c.re;
        }
    }
    inst.p = expand_roots(inst.real_roots, inst.complex_pairs);
    RootVerdict v = classify_by_roots(exact_root_set(inst.real_roots, inst.complex_pairs), 1e-12);
    if (explicit_roots) {
        bool ok = !v.indeterminate && v.report.label == spec.label;
        if (ok && spec.order_k) ok = v.report.order_k == spec.order_k;
        if (ok && spec.degeneracy_m) ok = v.report.degeneracy_m == spec.degeneracy_m;
        if (ok && v.report.si_type) ok = v.report.si_type == spec.si_type;
        if (!ok) throw DomainError("invalid-input", "roots do not realize the requested structure");
    } else if (v.indeterminate || !same_report(v.report, want)) {
        throw std::logic_error("generated roots do not realize the requested structure");
    }
    return inst;
}

StrangeReport strange_experiment(const Polynomial& p) {
    if (!hurwitz_minor_test(p)) throw DomainError("precondition", "strange experiment needs a Hurwitz stable polynomial");
    StrangeReport r;
    r.degree = p.degree();
    EvenOddSplit s = even_odd_split(p);
    Polynomial z{Q(1), Q(0)};
    r.q = normalized(negated_square(s.p0) + z * s.p1.in_square());
    r.companion = normalized(s.p0.in_square() + z * negated_square(s.p1));
    r.q_roots = numeric_roots(r.q);
    r.companion_roots = numeric_roots(r.companion);
    r.q_counts = half_plane_counts(r.q_roots, 1e-8);
    r.companion_counts = half_plane_counts(r.companion_roots, 1e-8);
    int n = r.degree;
    auto hold = [&](const HalfPlaneCounts& c) {
        return c.rhp == (n + 1) / 2 && c.lhp == n / 2 && c.axis == 0 && c.simple;
    };
    r.q_counts_hold = hold(r.q_counts);
    r.companion_counts_hold = hold(r.companion_counts);
    return r;
}

NumericPartialFraction numeric_partial_fractions(const RationalFunction& f) {
    RationalFunction r = f.reduced();
    NumericPartialFraction out;
    int d = r.den.degree();
    LaurentSeries s = laurent_expand(r, 0);
    out.alpha = -to_double(s.s_minus2);
    out.beta = to_double(s.s_minus1);
    if (d < 1) return out;
    if (poly_gcd(r.den, r.den.derivative()).degree() > 0)
        throw DomainError("precondition", "partial fractions need simple poles");
    RootSet poles = numeric_roots(r.den);
    double scale = 1;
    for (cd z : poles.roots) scale = std::max(scale, std::abs(z));
    Polynomial dd = r.den.derivative();
    for (cd z : poles.roots) {
        if (std::abs(z.imag()) > 1e-8 * scale) throw DomainError("precondition", "partial fractions need real poles");
        double x = z.real();
        out.poles.push_back(x);
        out.residues.push_back(r.num(cd(x)).real() / dd(cd(x)).real());
    }
    return out;
}

}  // namespace hsi
