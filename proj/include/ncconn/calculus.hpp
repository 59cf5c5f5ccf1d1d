#ifndef NCCONN_CALCULUS_HPP
#define NCCONN_CALCULUS_HPP

#include <string>
#include <vector>

#include "ncconn/forms.hpp"
#include "ncconn/probes.hpp"

namespace ncconn {

/// Flip of two adjacent tensor slots, extended bilinearly from the central
/// basis. This realizes the canonical braiding (and its higher-degree
/// variants sigma x 1, 1 x sigma).
inline Tensor swap_adjacent(const Tensor& t, int pos) {
    if (pos < 0 || pos + 1 >= t.degree()) throw std::invalid_argument("swap_adjacent: bad position");
    Tensor r(t.mode(), t.rank(), t.degree());
    for (const auto& [j, c] : t.coeffs()) {
        Tensor::Index k = j;
        std::swap(k[pos], k[pos + 1]);
        r.add(k, c);
    }
    return r;
}

/// Canonical braiding on T^2.
inline Tensor sigma_can(const Tensor& s) {
    if (s.degree() != 2) throw std::invalid_argument("sigma_can acts on two-tensors");
    return swap_adjacent(s, 0);
}

/// Psi restricted to the slots (pos, pos+1): (1 + flip)/2.
inline Tensor psi_at(const Tensor& s, int pos) {
    static const CentralFraction half_formal(
        AlgebraElement::constant(QMode::formal, Scalar(GaussianRational(mpq_class(1, 2), mpq_class(0)))));
    static const CentralFraction half_one(
        AlgebraElement::constant(QMode::one, Scalar(GaussianRational(mpq_class(1, 2), mpq_class(0)))));
    const CentralFraction& half = s.mode() == QMode::formal ? half_formal : half_one;
    Tensor sum = s + swap_adjacent(s, pos);
    return half * sum;
}

/// Junk projection Psi = (1 + sigma)/2 on T^2.
inline Tensor junk_projection(const Tensor& s) {
    if (s.degree() != 2) throw std::invalid_argument("junk_projection acts on two-tensors");
    return psi_at(s, 0);
}

inline Tensor one_minus_psi(const Tensor& s) { return s - junk_projection(s); }

/// First differential d(a) = sum_j e_j d_j(a).
inline Form d0(const CalculusSpec& spec, const CentralFraction& a) {
    Form w(spec.q_mode, spec.rank, 1);
    for (int j = 0; j < spec.rank; ++j) w.add({j}, a.basic_derivation(j + 1));
    return w;
}
inline Form d0(const CalculusSpec& spec, const AlgebraElement& a) {
    return d0(spec, CentralFraction(a));
}

/// Exterior derivative Omega^1 -> T^2:
///   d(e_j a) = (de_j) a - (1 - Psi)(e_j x d0(a)).
inline Tensor d1(const CalculusSpec& spec, const Form& omega) {
    if (omega.degree() != 1) throw std::invalid_argument("d1 acts on one-forms");
    Tensor r = Tensor::zero(spec, 2);
    for (const auto& [j, c] : omega.coeffs()) {
        if (!spec.basis_differentials.empty()) {
            const Tensor& dej = spec.basis_differentials[static_cast<std::size_t>(j[0])];
            if (!dej.is_zero()) r += dej * c;
        }
        Form dc = d0(spec, c);
        if (!dc.is_zero()) r -= one_minus_psi(tensor_product(Tensor::basis_form(spec, j[0]), dc));
    }
    return r;
}

/// One verified axiom of the centred-calculus definition.
struct AxiomResult {
    std::string name;
    bool pass = true;
    std::string witness;  // set on failure
};

struct AxiomReport {
    std::vector<AxiomResult> results;
    bool all_pass() const {
        for (const auto& r : results)
            if (!r.pass) return false;
        return true;
    }
    void record(const std::string& name, bool pass, const std::string& witness = "") {
        results.push_back({name, pass, pass ? "" : witness});
    }
};

/// Executable form of the centred Hermitian calculus axioms: inner-product
/// laws and braiding invariance on the basis, Psi projection properties,
/// dagger-derivation law and junk containment on seeded samples.
inline AxiomReport check_centred_axioms(const CalculusSpec& spec) {
    AxiomReport report;
    const int r = spec.rank;

    // <w,e>* = <e,w> on the basis: H_ij* = H_ji.
    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < r && ok; ++i)
            for (int j = 0; j < r && ok; ++j)
                if (spec.h(i, j).star() != spec.h(j, i)) {
                    ok = false;
                    w = "H[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "]* != H[" +
                        std::to_string(j + 1) + "][" + std::to_string(i + 1) + "]";
                }
        report.record("inner-product hermitian (H_ij* = H_ji)", ok, w);
    }

    // g o sigma = g on basis two-tensors.
    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < r && ok; ++i)
            for (int j = 0; j < r && ok; ++j) {
                Tensor eij = tensor_product(Tensor::basis_form(spec, i), Tensor::basis_form(spec, j));
                if (quantum_metric_g(spec, sigma_can(eij)) != quantum_metric_g(spec, eij)) {
                    ok = false;
                    w = "g(sigma(e" + std::to_string(i + 1) + " x e" + std::to_string(j + 1) +
                        ")) != g(e" + std::to_string(i + 1) + " x e" + std::to_string(j + 1) + ")";
                }
            }
        report.record("braiding invariance (g o sigma = g)", ok, w);
    }

    // sigma^2 = 1 and Psi = Psi^2, Psi o dag = dag o Psi, <Psi s, t> = <s, Psi t>
    // on basis two-tensors.
    {
        bool invol = true, idem = true, dagc = true, selfadj = true;
        std::string w_invol, w_idem, w_dagc, w_selfadj;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                Tensor eij = tensor_product(Tensor::basis_form(spec, i), Tensor::basis_form(spec, j));
                std::string nm = "e" + std::to_string(i + 1) + " x e" + std::to_string(j + 1);
                if (sigma_can(sigma_can(eij)) != eij && invol) {
                    invol = false;
                    w_invol = nm;
                }
                Tensor p = junk_projection(eij);
                if (junk_projection(p) != p && idem) {
                    idem = false;
                    w_idem = nm;
                }
                if (junk_projection(dag(spec, eij)) != dag(spec, p) && dagc) {
                    dagc = false;
                    w_dagc = nm;
                }
                for (int k = 0; k < r && selfadj; ++k)
                    for (int l = 0; l < r && selfadj; ++l) {
                        Tensor ekl =
                            tensor_product(Tensor::basis_form(spec, k), Tensor::basis_form(spec, l));
                        if (inner(spec, p, ekl) != inner(spec, eij, junk_projection(ekl))) {
                            selfadj = false;
                            w_selfadj = nm;
                        }
                    }
            }
        report.record("sigma involution", invol, w_invol);
        report.record("Psi idempotent", idem, w_idem);
        report.record("Psi commutes with dagger", dagc, w_dagc);
        report.record("Psi self-adjoint", selfadj, w_selfadj);
    }

    // de_j lands in Im(1 - Psi) and (de_j)^dag = eps_j de_j.
    {
        bool ok = true;
        std::string w;
        for (int j = 0; j < r && ok; ++j) {
            if (spec.basis_differentials.empty()) break;
            const Tensor& dej = spec.basis_differentials[static_cast<std::size_t>(j)];
            if (one_minus_psi(dej) != dej) {
                ok = false;
                w = "de_" + std::to_string(j + 1) + " not in Im(1 - Psi)";
            } else if (dag(spec, dej) != (spec.eps(j) > 0 ? dej : -dej)) {
                ok = false;
                w = "de_" + std::to_string(j + 1) + " dagger sign mismatch";
            }
        }
        report.record("basis differentials compatible", ok, w);
    }

    // d is a dagger-derivation and d1 o d0 = 0 on seeded samples.
    {
        ProbeSource src(spec.probe_seed, spec.q_mode);
        bool leib = true, dagd = true, junk = true;
        std::string w_leib, w_dagd, w_junk;
        for (int t = 0; t < 8; ++t) {
            AlgebraElement a = src.element(), b = src.element();
            Form da = d0(spec, a), db = d0(spec, b);
            if (leib && d0(spec, a * b) != da * CentralFraction(b) + CentralFraction(a) * db) {
                leib = false;
                w_leib = "a = " + a.str() + ", b = " + b.str();
            }
            if (dagd && d0(spec, a.star()) != -dag(spec, da)) {
                dagd = false;
                w_dagd = "a = " + a.str();
            }
            if (junk && !d1(spec, da).is_zero()) {
                junk = false;
                w_junk = "d1(d0(a)) != 0 for a = " + a.str();
            }
        }
        report.record("d Leibniz", leib, w_leib);
        report.record("d dagger-derivation", dagd, w_dagd);
        report.record("junk containment (d1 o d0 = 0 sampled)", junk, w_junk);
    }

    // Strong non-degeneracy witness: H Hinv = Hinv H = 1.
    {
        bool ok = true;
        std::string w;
        for (int i = 0; i < r && ok; ++i)
            for (int j = 0; j < r && ok; ++j) {
                CentralFraction lhs = CentralFraction::zero(spec.q_mode);
                CentralFraction rhs = CentralFraction::zero(spec.q_mode);
                for (int k = 0; k < r; ++k) {
                    lhs += spec.h(i, k) * spec.hinv(k, j);
                    rhs += spec.hinv(i, k) * spec.h(k, j);
                }
                CentralFraction expect =
                    i == j ? CentralFraction::one(spec.q_mode) : CentralFraction::zero(spec.q_mode);
                if (lhs != expect || rhs != expect) {
                    ok = false;
                    w = "(H Hinv)[" + std::to_string(i + 1) + "][" + std::to_string(j + 1) + "] != id";
                }
            }
        report.record("strong non-degeneracy witness (H Hinv = 1)", ok, w);
    }

    return report;
}

}  // namespace ncconn

#endif
