#ifndef NCCONN_CONNECTION_HPP
#define NCCONN_CONNECTION_HPP

#include <stdexcept>
#include <vector>

#include "ncconn/generating.hpp"

namespace ncconn {

inline CentralFraction rational_constant(QMode mode, long num, long den = 1) {
    return CentralFraction(
        AlgebraElement::constant(mode, Scalar(GaussianRational(mpq_class(num, den), mpq_class(0)))));
}

enum class Orientation { right, left };

/// Connection on one-forms, stored through its Christoffel data
/// Gamma_k = nabla(e_k) in T^2 and extended by the Leibniz rule:
///   right:  nabla(e_k a) = Gamma_k a + e_k x d0(a)
///   left:   nabla(a e_k) = a Gamma_k + d0(a) x e_k
struct Connection {
    Orientation orientation = Orientation::right;
    std::vector<Tensor> gamma;

    const Tensor& christoffel(int k) const { return gamma[static_cast<std::size_t>(k)]; }
};

/// Leibniz extension to arbitrary one-forms.
inline Tensor apply_connection(const CalculusSpec& spec, const Connection& c, const Form& omega) {
    Tensor r = Tensor::zero(spec, 2);
    for (const auto& [j, coeff] : omega.coeffs()) {
        const Tensor& gamma = c.christoffel(j[0]);
        Form basis = Tensor::basis_form(spec, j[0]);
        if (c.orientation == Orientation::right) {
            r += gamma * coeff;
            r += tensor_product(basis, d0(spec, coeff));
        } else {
            r += coeff * gamma;
            r += tensor_product(d0(spec, coeff), basis);
        }
    }
    return r;
}

/// Conjugate connection nabla <-> -dag o nabla o dag; flips orientation and
/// is an involution.
inline Connection conjugate(const CalculusSpec& spec, const Connection& c) {
    Connection out;
    out.orientation = c.orientation == Orientation::right ? Orientation::left : Orientation::right;
    out.gamma.reserve(c.gamma.size());
    for (int k = 0; k < spec.rank; ++k) {
        Tensor g = -dag(spec, c.christoffel(k));
        if (spec.eps(k) < 0) g = -g;
        out.gamma.push_back(std::move(g));
    }
    return out;
}

/// Pairings of a one-form against a two-tensor, valued in one-forms:
///   <w, eta x rho> = <w, eta> rho     and     <eta x rho, w> = rho^dag <eta, w>.
inline Form pair_form_tensor(const CalculusSpec& spec, const Form& w, const Tensor& t) {
    Form r = Tensor::zero(spec, 1);
    for (const auto& [j, c] : t.coeffs()) {
        CentralFraction s = inner(spec, w, Tensor::basis_form(spec, j[0]));
        r.add({j[1]}, s * c);
    }
    return r;
}
inline Form pair_tensor_form(const CalculusSpec& spec, const Tensor& t, const Form& w) {
    Form r = Tensor::zero(spec, 1);
    for (const auto& [j, c] : t.coeffs()) {
        CentralFraction s = inner(spec, Tensor::basis_form(spec, j[0]), w);
        CentralFraction v = c.star() * s;
        if (spec.eps(j[1]) < 0) v = -v;
        r.add({j[1]}, v);
    }
    return r;
}

/// Grassmann-type connection of a generating pair:
///   nabla(w) = 1/2 sum_i ( x_i x d<x'_i, w> + x'_i x d<x_i, w> ).
/// Hermitian and sigma-dag by construction; not torsion-free in general.
inline Connection grassmann_connection(const CalculusSpec& spec, const GeneratingPair& gp) {
    const CentralFraction half = rational_constant(spec.q_mode, 1, 2);
    Connection c;
    c.orientation = Orientation::right;
    for (int k = 0; k < spec.rank; ++k) {
        Form ek = Tensor::basis_form(spec, k);
        Tensor g = Tensor::zero(spec, 2);
        for (const auto& [x, xp] : gp.pairs) {
            g += tensor_product(x, d0(spec, inner(spec, xp, ek)));
            g += tensor_product(xp, d0(spec, inner(spec, x, ek)));
        }
        c.gamma.push_back(half * g);
    }
    return c;
}

/// The three-tensor W = 1/2 sum_i ( d(x_i) x x'_i^dag + d(x'_i) x x_i^dag ).
inline Tensor existence_w_tensor(const CalculusSpec& spec, const GeneratingPair& gp) {
    const CentralFraction half = rational_constant(spec.q_mode, 1, 2);
    Tensor w(spec.q_mode, spec.rank, 3);
    for (const auto& [x, xp] : gp.pairs) {
        w += tensor_product(d1(spec, x), dag(spec, xp));
        w += tensor_product(d1(spec, xp), dag(spec, x));
    }
    return half * w;
}

/// P = Psi x 1 and Q = 1 x Psi on three-tensors.
inline Tensor proj_P(const Tensor& t) { return psi_at(t, 0); }
inline Tensor proj_Q(const Tensor& t) { return psi_at(t, 1); }

/// (1 + 4PQ)W, the correction tensor of the existence theorem.
inline Tensor existence_correction_tensor(const CalculusSpec& spec, const Tensor& w) {
    const CentralFraction four = rational_constant(spec.q_mode, 4);
    return w + four * proj_P(proj_Q(w));
}

/// The unique Hermitian torsion-free sigma-dag-bimodule connection:
///   nabla^G(w) = grassmann(w) - alpha_right((1 + 4PQ)W)(w).
inline Connection levi_civita(const CalculusSpec& spec, const GeneratingPair& gp) {
    Connection c = grassmann_connection(spec, gp);
    Tensor corr = existence_correction_tensor(spec, existence_w_tensor(spec, gp));
    for (int k = 0; k < spec.rank; ++k) {
        c.gamma[static_cast<std::size_t>(k)] -=
            alpha_right_apply(spec, corr, Tensor::basis_form(spec, k));
    }
    return c;
}
inline Connection levi_civita(const CalculusSpec& spec) {
    return levi_civita(spec, canonical_generating_pair(spec));
}

/// Hermitian condition -<nabla x, y> + <x, nabla y> = d<x, y>, exact on
/// basis pairs (which generate; the defect is a sesquilinear module map)
/// and on probe multiples to exercise the Leibniz extension.
inline bool is_hermitian(const CalculusSpec& spec, const Connection& c) {
    if (c.orientation != Orientation::right)
        throw std::invalid_argument("is_hermitian expects a right connection");
    auto defect_zero = [&](const Form& x, const Form& y) {
        Form d = pair_form_tensor(spec, x, apply_connection(spec, c, y)) -
                 pair_tensor_form(spec, apply_connection(spec, c, x), y) -
                 d0(spec, inner(spec, x, y));
        return d.is_zero();
    };
    auto probes = probe_elements(spec.q_mode, spec.probe_seed);
    for (int i = 0; i < spec.rank; ++i)
        for (int j = 0; j < spec.rank; ++j) {
            Form ei = Tensor::basis_form(spec, i), ej = Tensor::basis_form(spec, j);
            if (!defect_zero(ei, ej)) return false;
            for (const auto& p : probes) {
                CentralFraction a{p};
                if (!defect_zero(ei * a, ej)) return false;
                if (!defect_zero(ei, ej * a)) return false;
            }
        }
    return true;
}

/// Torsion (1 - Psi) o nabla + d for right connections, (1 - Psi) o nabla - d
/// for left ones; a module map, so it vanishes iff it vanishes on the basis.
inline Tensor torsion(const CalculusSpec& spec, const Connection& c, const Form& omega) {
    Tensor t = one_minus_psi(apply_connection(spec, c, omega));
    if (c.orientation == Orientation::right) return t + d1(spec, omega);
    return t - d1(spec, omega);
}

inline bool is_torsion_free(const CalculusSpec& spec, const Connection& c) {
    for (int k = 0; k < spec.rank; ++k)
        if (!torsion(spec, c, Tensor::basis_form(spec, k)).is_zero()) return false;
    return true;
}

/// sigma-dag-bimodule condition sigma o nabla = -dag o nabla o dag on basis
/// forms times probes. The probe multiples matter: on the basis alone the
/// condition misses non-central Christoffel data.
inline bool is_bimodule_connection(const CalculusSpec& spec, const Connection& c) {
    if (c.orientation != Orientation::right)
        throw std::invalid_argument("is_bimodule_connection expects a right connection");
    Connection left = conjugate(spec, c);
    auto probes = probe_elements(spec.q_mode, spec.probe_seed);
    for (int k = 0; k < spec.rank; ++k) {
        for (const auto& p : probes) {
            Form w = Tensor::basis_form(spec, k) * CentralFraction(p);
            Tensor lhs = sigma_can(apply_connection(spec, c, w));
            Tensor rhs = apply_connection(spec, left, w);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

/// Curvature of a right connection:
///   R(w) = (1 x (1 - Psi)) o (nabla x 1 + 1 x d) o nabla(w), valued in
/// Omega^1 x Lambda^2.
inline Tensor curvature(const CalculusSpec& spec, const Connection& c, const Form& omega) {
    if (c.orientation != Orientation::right)
        throw std::invalid_argument("curvature expects a right connection; use curvature_left");
    Tensor nw = apply_connection(spec, c, omega);
    Tensor acc(spec.q_mode, spec.rank, 3);
    for (const auto& [j, coeff] : nw.coeffs()) {
        // split e_a x (e_b coeff)
        acc += tensor_product(c.christoffel(j[0]),
                              Tensor::basis_form(spec, j[1]) * coeff);
        Form second = Tensor::basis_form(spec, j[1]) * coeff;
        acc += tensor_product(Tensor::basis_form(spec, j[0]), d1(spec, second));
    }
    return acc - psi_at(acc, 1);
}

/// Left curvature via the dagger identity R^left(w) = (R^right(w^dag))^dag.
inline Tensor curvature_left(const CalculusSpec& spec, const Connection& right_conn, const Form& omega) {
    return dag(spec, curvature(spec, right_conn, dag(spec, omega)));
}

}  // namespace ncconn

#endif
