#ifndef NCCONN_SPEC_BUILD_HPP
#define NCCONN_SPEC_BUILD_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "ncconn/calculus.hpp"

namespace ncconn {

/// Load-time rejection with a precise location: which section and key of the
/// specification document is at fault, and why.
class SpecError : public std::runtime_error {
public:
    SpecError(std::string section, std::string key, std::string reason)
        : std::runtime_error("[" + section + "] " + key + ": " + reason),
          section_(std::move(section)),
          key_(std::move(key)),
          reason_(std::move(reason)) {}
    const std::string& section() const { return section_; }
    const std::string& key() const { return key_; }
    const std::string& reason() const { return reason_; }

private:
    std::string section_, key_, reason_;
};

namespace detail {

inline std::string metric_key(int i, int j) {
    return "H_" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

}  // namespace detail

/// Validate the hard structural invariants of a CalculusSpec and fill in the
/// inverse metric when it was not supplied. Inner-product axioms that can
/// fail with a witness live in check_centred_axioms instead.
inline void finalize_spec(CalculusSpec& spec, bool inverse_supplied) {
    const int r = spec.rank;
    if (r != AlgebraPresentation::rank_of_derivation_basis)
        throw SpecError("module", "rank",
                        "the derivation map d(a) = sum_j e_j d_j(a) needs rank equal to the "
                        "derivation basis (2)");
    if (static_cast<int>(spec.dagger_signs.size()) != r)
        throw SpecError("module", "dagger_signs", "need exactly rank entries");
    for (int s : spec.dagger_signs)
        if (s != 1 && s != -1) throw SpecError("module", "dagger_signs", "entries must be +1 or -1");

    if (static_cast<int>(spec.H.size()) != r)
        throw SpecError("metric", "H", "metric must be rank x rank");
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(spec.H[i].size()) != r)
            throw SpecError("metric", "H", "metric must be rank x rank");
        for (int j = 0; j < r; ++j) {
            const CentralFraction& e = spec.H[i][j];
            if (!e.is_central())
                throw SpecError("metric", detail::metric_key(i, j),
                                "metric entries must be central in the algebra");
        }
    }

    if (inverse_supplied) {
        if (static_cast<int>(spec.H_inverse.size()) != r)
            throw SpecError("metric", "Hinv", "inverse must be rank x rank");
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                if (!spec.H_inverse[i][j].is_central())
                    throw SpecError("metric", "Hinv", "inverse entries must be central");
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                CentralFraction lhs = CentralFraction::zero(spec.q_mode);
                CentralFraction rhs = CentralFraction::zero(spec.q_mode);
                for (int k = 0; k < r; ++k) {
                    lhs += spec.h(i, k) * spec.H_inverse[k][j];
                    rhs += spec.H_inverse[i][k] * spec.h(k, j);
                }
                CentralFraction expect =
                    i == j ? CentralFraction::one(spec.q_mode) : CentralFraction::zero(spec.q_mode);
                if (lhs != expect || rhs != expect)
                    throw SpecError("metric", "Hinv", "supplied inverse fails H Hinv = Hinv H = 1");
            }
    } else {
        // Adjugate over the (commutative) centre; entries are central, so
        // the determinant is central and the localization inverts it.
        CentralFraction det = spec.h(0, 0) * spec.h(1, 1) - spec.h(0, 1) * spec.h(1, 0);
        if (det.is_zero())
            throw SpecError("metric", "H",
                            "determinant vanishes over the centre: strong non-degeneracy fails");
        CentralFraction inv_det = det.inverse();
        spec.H_inverse = {{spec.h(1, 1) * inv_det, -spec.h(0, 1) * inv_det},
                          {-spec.h(1, 0) * inv_det, spec.h(0, 0) * inv_det}};
    }

    if (spec.basis_differentials.empty()) {
        spec.basis_differentials.assign(static_cast<std::size_t>(r), Tensor::zero(spec, 2));
    } else {
        if (static_cast<int>(spec.basis_differentials.size()) != r)
            throw SpecError("differential", "de", "need one de_j entry per basis form");
        for (int j = 0; j < r; ++j) {
            const Tensor& dej = spec.basis_differentials[static_cast<std::size_t>(j)];
            if (dej.degree() != 2 || dej.rank() != r || dej.mode() != spec.q_mode)
                throw SpecError("differential", "de_" + std::to_string(j + 1), "must be a two-tensor");
            if (one_minus_psi(dej) != dej)
                throw SpecError("differential", "de_" + std::to_string(j + 1),
                                "must lie in the image of (1 - Psi)");
            if (dag(spec, dej) != (spec.eps(j) > 0 ? dej : -dej))
                throw SpecError("differential", "de_" + std::to_string(j + 1),
                                "must satisfy (de_j)^dag = eps_j de_j");
        }
    }
}

/// Programmatic construction used by tests and fixtures.
inline CalculusSpec make_calculus_spec(QMode mode, std::vector<int> dagger_signs, FractionMatrix H,
                                       std::optional<FractionMatrix> H_inverse = std::nullopt,
                                       std::vector<Tensor> basis_differentials = {},
                                       std::uint64_t seed = 1, long bound = 3) {
    CalculusSpec spec;
    spec.q_mode = mode;
    spec.rank = static_cast<int>(dagger_signs.size());
    spec.dagger_signs = std::move(dagger_signs);
    spec.H = std::move(H);
    bool supplied = H_inverse.has_value();
    if (supplied) spec.H_inverse = std::move(*H_inverse);
    spec.basis_differentials = std::move(basis_differentials);
    spec.probe_seed = seed;
    spec.support_bound = bound;
    finalize_spec(spec, supplied);
    return spec;
}

}  // namespace ncconn

#endif
