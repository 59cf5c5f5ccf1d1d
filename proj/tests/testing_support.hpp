#ifndef NCCONN_TESTING_SUPPORT_HPP
#define NCCONN_TESTING_SUPPORT_HPP

#include <random>
#include <vector>

#include "ncconn/algebra.hpp"
#include "ncconn/fraction.hpp"

namespace ncconn::testing {

/// Deterministic generator of bounded-degree algebra elements for property
/// tests. Same seed, same stream, on every platform (mt19937_64 is pinned by
/// the standard).
class Sampler {
public:
    explicit Sampler(std::uint64_t seed, QMode mode = QMode::formal) : rng_(seed), mode_(mode) {}

    long int_in(long lo, long hi) {
        return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    GaussianRational coefficient() {
        static const int nums[] = {1, -1, 2, -2, 3, 1, -1, 5};
        mpq_class re(nums[rng_() % 8], 1 + static_cast<long>(rng_() % 3));
        mpq_class im(0);
        if (rng_() % 2) im = mpq_class(nums[rng_() % 8], 1 + static_cast<long>(rng_() % 2));
        return GaussianRational(re, im);
    }

    Scalar scalar(long q_span = 1) {
        Scalar s;
        int terms = 1 + static_cast<int>(rng_() % 2);
        for (int t = 0; t < terms; ++t) {
            long k = (mode_ == QMode::one) ? 0 : int_in(-q_span, q_span);
            s.add_term(k, coefficient());
        }
        if (mode_ == QMode::one) return Scalar(s.substitute_q(GaussianRational(1)));
        return s;
    }

    AlgebraElement element(long deg = 2, int max_terms = 3) {
        AlgebraElement a(mode_);
        int terms = 1 + static_cast<int>(rng_() % max_terms);
        for (int t = 0; t < terms; ++t)
            a.add_term({int_in(-deg, deg), int_in(-deg, deg)}, scalar());
        return a;
    }

    AlgebraElement monomial(long deg = 2) {
        return AlgebraElement::monomial(mode_, int_in(-deg, deg), int_in(-deg, deg));
    }

    /// Central element: scalar at formal q, arbitrary at q = 1.
    AlgebraElement central(long deg = 2) {
        if (mode_ == QMode::formal) return AlgebraElement::constant(mode_, scalar());
        return element(deg);
    }

    QMode mode() const { return mode_; }

private:
    std::mt19937_64 rng_;
    QMode mode_;
};

}  // namespace ncconn::testing

#endif
