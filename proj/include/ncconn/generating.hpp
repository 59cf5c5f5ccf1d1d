#ifndef NCCONN_GENERATING_HPP
#define NCCONN_GENERATING_HPP

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ncconn/calculus.hpp"
#include "ncconn/spec_build.hpp"

namespace ncconn {

/// A finite set of pairs {(x_i, x'_i)} of central one-forms with
///   w = sum_i x_i <x'_i, w> = sum_i x'_i <x_i, w>   for all one-forms w,
/// the algebraic stand-in for a Hilbert-module frame.
struct GeneratingPair {
    std::vector<std::pair<Form, Form>> pairs;

    std::size_t size() const { return pairs.size(); }
};

namespace detail {

inline bool form_is_central(const Form& f) {
    for (const auto& [j, c] : f.coeffs())
        if (!c.is_central()) return false;
    return true;
}

}  // namespace detail

/// The reconstruction identities on every basis form (hence on all forms, by
/// right-linearity of both sides).
inline bool generating_pair_reconstructs(const CalculusSpec& spec, const GeneratingPair& gp) {
    for (int k = 0; k < spec.rank; ++k) {
        Form ek = Tensor::basis_form(spec, k);
        Form lhs1 = Tensor::zero(spec, 1), lhs2 = Tensor::zero(spec, 1);
        for (const auto& [x, xp] : gp.pairs) {
            lhs1 += x * inner(spec, xp, ek);
            lhs2 += xp * inner(spec, x, ek);
        }
        if (lhs1 != ek || lhs2 != ek) return false;
    }
    return true;
}

/// The dagger-exchange identities actually used in the existence proofs:
/// replacing every (x_i, x'_i) by (x_i^dag, x'_i^dag) leaves the canonical
/// sums unchanged. Checked on every basis form.
inline bool generating_pair_dagger_compatible(const CalculusSpec& spec, const GeneratingPair& gp) {
    for (int k = 0; k < spec.rank; ++k) {
        Form ek = Tensor::basis_form(spec, k);
        Tensor a1 = Tensor::zero(spec, 2), a2 = Tensor::zero(spec, 2);
        Tensor b1 = Tensor::zero(spec, 2), b2 = Tensor::zero(spec, 2);
        for (const auto& [x, xp] : gp.pairs) {
            Form xd = dag(spec, x), xpd = dag(spec, xp);
            a1 += tensor_product(x, d0(spec, inner(spec, xp, ek)));
            a2 += tensor_product(xd, d0(spec, inner(spec, xpd, ek)));
            b1 += tensor_product(xp, d0(spec, inner(spec, x, ek)));
            b2 += tensor_product(xpd, d0(spec, inner(spec, xd, ek)));
        }
        if (a1 != a2 || b1 != b2) return false;
    }
    return true;
}

/// Builds the pair (e_i, sum_j e_j Hinv_{ji}) and verifies all invariants.
/// With the metric symmetric and Hermitian this reconstructs both ways.
inline GeneratingPair canonical_generating_pair(const CalculusSpec& spec) {
    GeneratingPair gp;
    for (int i = 0; i < spec.rank; ++i) {
        Form x = Tensor::basis_form(spec, i);
        Form xp = Tensor::zero(spec, 1);
        for (int j = 0; j < spec.rank; ++j) xp.add({j}, spec.hinv(j, i));
        gp.pairs.emplace_back(std::move(x), std::move(xp));
    }
    for (const auto& [x, xp] : gp.pairs)
        if (!detail::form_is_central(x) || !detail::form_is_central(xp))
            throw std::domain_error("generating pair entries must be central one-forms");
    if (!generating_pair_reconstructs(spec, gp))
        throw std::domain_error("generating pair fails the reconstruction identities");
    if (!generating_pair_dagger_compatible(spec, gp))
        throw std::domain_error("generating pair fails the dagger-exchange identities");
    return gp;
}

/// All product tuples (x_{j1} x..x x_{jk}, x'_{j1} x..x x'_{jk}); a generating
/// pair for T^k. Degree 0 yields the single pair (1, 1).
inline std::vector<std::pair<Tensor, Tensor>> product_generating_pair(const CalculusSpec& spec,
                                                                      const GeneratingPair& gp, int k) {
    std::vector<std::pair<Tensor, Tensor>> result;
    Tensor unit = Tensor::from_coefficient(spec, CentralFraction::one(spec.q_mode));
    result.emplace_back(unit, unit);
    for (int step = 0; step < k; ++step) {
        std::vector<std::pair<Tensor, Tensor>> next;
        next.reserve(result.size() * gp.size());
        for (const auto& [tx, txp] : result)
            for (const auto& [x, xp] : gp.pairs)
                next.emplace_back(tensor_product(tx, x), tensor_product(txp, xp));
        result = std::move(next);
    }
    return result;
}

/// alpha_right: a tensor of degree n + k acts as a right-module map
/// T^k -> T^n via  alpha(x (x) y)(z) = x <y^dag, z>.
inline Tensor alpha_right_apply(const CalculusSpec& spec, const Tensor& t, const Tensor& z) {
    int k = z.degree();
    int n = t.degree() - k;
    if (n < 0) throw std::invalid_argument("alpha_right: tensor degree too small");
    Tensor r(spec.q_mode, spec.rank, n);
    for (const auto& [j, c] : t.coeffs()) {
        Tensor::Index head(j.begin(), j.begin() + n);
        Tensor::Index tail(j.begin() + n, j.end());
        int sign = 1;
        for (int v : tail) sign *= spec.eps(v);
        for (const auto& [jz, cz] : z.coeffs()) {
            CentralFraction prod = CentralFraction::one(spec.q_mode);
            for (int p = 0; p < k; ++p) prod *= spec.h(tail[static_cast<std::size_t>(k - 1 - p)],
                                                      jz[static_cast<std::size_t>(p)]);
            CentralFraction val = c * prod * cz;
            if (sign < 0) val = -val;
            r.add(head, val);
        }
    }
    return r;
}

/// Inverse of alpha_right on right-module maps:
///   alpha^{-1}(T) = sum_J T(x_J) (x) (x'_J)^dag.
/// The dagger on the second factor undoes the dagger inside alpha, so both
/// compositions are the identity with no condition on the pair beyond
/// reconstruction:
///   alpha(alpha^{-1}(T))(z) = sum T(x_J) <x'_J, z> = T(z).
inline Tensor alpha_right_inverse(const CalculusSpec& spec, const GeneratingPair& gp,
                                  const std::function<Tensor(const Tensor&)>& T, int n, int k) {
    Tensor acc(spec.q_mode, spec.rank, n + k);
    for (const auto& [xj, xpj] : product_generating_pair(spec, gp, k))
        acc += tensor_product(T(xj), dag(spec, xpj));
    return acc;
}

/// Adjoint of a right-linear map T: T^k -> T^k with respect to the inner
/// product: T* y = sum_J x_J <T x'_J, y>, so that <T s, t> = <s, T* t>.
/// The right-linearity precondition is checked on basis tensors against the
/// fixed probe set.
inline std::function<Tensor(const Tensor&)> adjoint_hom(const CalculusSpec& spec,
                                                        const GeneratingPair& gp, int k,
                                                        const std::function<Tensor(const Tensor&)>& T) {
    auto pairs = product_generating_pair(spec, gp, k);
    for (const auto& probe : probe_elements(spec.q_mode, spec.probe_seed, 2)) {
        CentralFraction a{probe};
        for (const auto& [xj, xpj] : pairs) {
            if (T(xj * a) != T(xj) * a)
                throw std::domain_error("adjoint_hom: map is not right-linear");
        }
    }
    return [&spec, pairs, T](const Tensor& y) {
        Tensor acc(spec.q_mode, spec.rank, y.degree());
        for (const auto& [xj, xpj] : pairs) acc += xj * inner(spec, T(xpj), y);
        return acc;
    };
}

}  // namespace ncconn

#endif
