#ifndef NCCONN_PROBES_HPP
#define NCCONN_PROBES_HPP

#include <random>
#include <vector>

#include "ncconn/algebra.hpp"

namespace ncconn {

/// Deterministic pseudo-random algebra elements for the verification suites.
/// mt19937_64 is pinned by the standard, so a seed fixes the stream on every
/// platform.
class ProbeSource {
public:
    explicit ProbeSource(std::uint64_t seed, QMode mode) : rng_(seed), mode_(mode) {}

    long int_in(long lo, long hi) {
        return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    GaussianRational coefficient() {
        static const int nums[] = {1, -1, 2, -2, 3, -3, 1, 2};
        mpq_class re(nums[rng_() % 8], 1 + static_cast<long>(rng_() % 2));
        mpq_class im(0);
        if (rng_() % 2) im = mpq_class(nums[rng_() % 8], 1 + static_cast<long>(rng_() % 2));
        return GaussianRational(re, im);
    }

    Scalar scalar(long q_span = 1) {
        Scalar s;
        int terms = 1 + static_cast<int>(rng_() % 2);
        for (int t = 0; t < terms; ++t)
            s.add_term(mode_ == QMode::one ? 0 : int_in(-q_span, q_span), coefficient());
        if (mode_ == QMode::one) return Scalar(s.substitute_q(GaussianRational(1)));
        return s;
    }

    AlgebraElement element(long deg = 2, int max_terms = 3) {
        AlgebraElement a(mode_);
        int terms = 1 + static_cast<int>(rng_() % max_terms);
        for (int t = 0; t < terms; ++t) a.add_term({int_in(-deg, deg), int_in(-deg, deg)}, scalar());
        return a;
    }

    AlgebraElement nonzero_element(long deg = 2, int max_terms = 3) {
        for (;;) {
            AlgebraElement a = element(deg, max_terms);
            if (!a.is_zero()) return a;
        }
    }

    AlgebraElement monomial(long deg = 2) {
        return AlgebraElement::monomial(mode_, int_in(-deg, deg), int_in(-deg, deg));
    }

    /// Central element: a scalar at formal q, anything at q = 1.
    AlgebraElement central(long deg = 2) {
        if (mode_ == QMode::formal) return AlgebraElement::constant(mode_, scalar());
        return element(deg);
    }

    QMode mode() const { return mode_; }

private:
    std::mt19937_64 rng_;
    QMode mode_;
};

/// The fixed probe set {1, U, V, U^-1 V} plus \p extra seeded random elements.
/// Property defects are module maps, so basis coverage is exact; the probes
/// guard the Leibniz-extension code paths.
inline std::vector<AlgebraElement> probe_elements(QMode mode, std::uint64_t seed, int extra = 4) {
    std::vector<AlgebraElement> probes;
    probes.push_back(AlgebraElement::one(mode));
    probes.push_back(AlgebraElement::U(mode));
    probes.push_back(AlgebraElement::V(mode));
    probes.push_back(AlgebraElement::monomial(mode, -1, 1));
    ProbeSource src(seed, mode);
    for (int t = 0; t < extra; ++t) probes.push_back(src.element());
    return probes;
}

}  // namespace ncconn

#endif
