#ifndef NCCONN_TESTS_FIXTURES_HPP
#define NCCONN_TESTS_FIXTURES_HPP

#include "ncconn/parse.hpp"
#include "ncconn/spec_build.hpp"

namespace ncconn::testing {

inline CentralFraction cf(const std::string& expr, QMode mode) {
    return CentralFraction(parse_element(expr, mode));
}

/// Flat torus: H = identity, e_j^dag = -e_j, de_j = 0.
inline CalculusSpec make_flat_spec(QMode mode, std::uint64_t seed = 7) {
    FractionMatrix H = {{cf("1", mode), cf("0", mode)}, {cf("0", mode), cf("1", mode)}};
    return make_calculus_spec(mode, {-1, -1}, H, std::nullopt, {}, seed);
}

/// Conformal q = 1: H = diag(h, h) with h = 2 + U + U^-1.
inline CalculusSpec make_conformal_q1_spec(std::uint64_t seed = 7) {
    QMode m = QMode::one;
    auto h = cf("2 + U + U^-1", m);
    FractionMatrix H = {{h, cf("0", m)}, {cf("0", m), h}};
    return make_calculus_spec(m, {-1, -1}, H, std::nullopt, {}, seed);
}

/// Constant conformal factor at formal q: H = diag(2, 2).
inline CalculusSpec make_scalar_conformal_formal_spec(std::uint64_t seed = 7) {
    QMode m = QMode::formal;
    FractionMatrix H = {{cf("2", m), cf("0", m)}, {cf("0", m), cf("2", m)}};
    return make_calculus_spec(m, {-1, -1}, H, std::nullopt, {}, seed);
}

/// Different conformal factors on the two basis directions, q = 1.
inline CalculusSpec make_anisotropic_q1_spec(std::uint64_t seed = 7) {
    QMode m = QMode::one;
    FractionMatrix H = {{cf("2 + U + U^-1", m), cf("0", m)},
                        {cf("0", m), cf("2 + V + V^-1", m)}};
    return make_calculus_spec(m, {-1, -1}, H, std::nullopt, {}, seed);
}

/// Non-diagonal symmetric metric, q = 1.
inline CalculusSpec make_offdiag_q1_spec(std::uint64_t seed = 7) {
    QMode m = QMode::one;
    auto c = cf("U + U^-1", m);
    FractionMatrix H = {{cf("4", m), c}, {c, cf("4", m)}};
    return make_calculus_spec(m, {-1, -1}, H, std::nullopt, {}, seed);
}

}  // namespace ncconn::testing

#endif
