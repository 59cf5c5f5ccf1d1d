#ifndef NCCONN_FORMS_HPP
#define NCCONN_FORMS_HPP

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ncconn/fraction.hpp"

namespace ncconn {

class Tensor;

/// Square matrix over the central-fraction coefficients; used for the metric
/// H and its inverse. All entries are central, so entries commute with each
/// other and with everything else.
using FractionMatrix = std::vector<std::vector<CentralFraction>>;

/// Presentation of a free centred Hermitian differential calculus over the
/// torus algebra: central basis e_1..e_r of one-forms with e_j^dag = eps_j e_j,
/// inner product H_ij = <e_i, e_j>, optional basis differentials de_j, and
/// d(a) = sum_j e_j d_j(a) over the two basic derivations.
struct CalculusSpec {
    QMode q_mode = QMode::formal;
    int rank = 2;
    std::vector<int> dagger_signs;  // eps_j in {+1, -1}
    FractionMatrix H;
    FractionMatrix H_inverse;
    std::vector<Tensor> basis_differentials;  // de_j in T^2, default zero
    std::uint64_t probe_seed = 1;
    long support_bound = 3;

    const CentralFraction& h(int i, int j) const { return H[i][j]; }
    const CentralFraction& hinv(int i, int j) const { return H_inverse[i][j]; }
    int eps(int j) const { return dagger_signs[static_cast<std::size_t>(j)]; }

    AlgebraElement zero() const { return AlgebraElement::zero(q_mode); }
    AlgebraElement one() const { return AlgebraElement::one(q_mode); }
};

/// Element of T^k = (Omega^1)^{tensor k} over the central basis:
///   sum over multi-indices J of e_{j_1} x ... x e_{j_k} * c_J
/// with right coefficients c_J. Degree 0 is a plain coefficient.
class Tensor {
public:
    using Index = std::vector<int>;
    using Coeffs = std::map<Index, CentralFraction>;

    Tensor() : mode_(QMode::formal), rank_(0), degree_(0) {}
    Tensor(QMode mode, int rank, int degree) : mode_(mode), rank_(rank), degree_(degree) {}

    static Tensor zero(const CalculusSpec& spec, int degree) {
        return Tensor(spec.q_mode, spec.rank, degree);
    }
    static Tensor basis_form(const CalculusSpec& spec, int j) {
        Tensor t(spec.q_mode, spec.rank, 1);
        t.set({j}, CentralFraction(AlgebraElement::one(spec.q_mode)));
        return t;
    }
    /// Degree-0 tensor wrapping an algebra (fraction) element.
    static Tensor from_coefficient(const CalculusSpec& spec, const CentralFraction& c) {
        Tensor t(spec.q_mode, spec.rank, 0);
        t.set({}, c);
        return t;
    }

    QMode mode() const { return mode_; }
    int rank() const { return rank_; }
    int degree() const { return degree_; }
    const Coeffs& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    const CentralFraction& coeff(const Index& j) const {
        static const CentralFraction zero_ = CentralFraction();
        auto it = coeffs_.find(j);
        return it == coeffs_.end() ? zero_ : it->second;
    }

    void set(const Index& j, const CentralFraction& c) {
        check_index(j);
        if (c.is_zero())
            coeffs_.erase(j);
        else
            coeffs_[j] = c;
    }
    void add(const Index& j, const CentralFraction& c) {
        check_index(j);
        auto it = coeffs_.find(j);
        if (it == coeffs_.end()) {
            if (!c.is_zero()) coeffs_.emplace(j, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    Tensor operator-() const {
        Tensor r(mode_, rank_, degree_);
        for (const auto& [j, c] : coeffs_) r.coeffs_[j] = -c;
        return r;
    }
    Tensor& operator+=(const Tensor& o) {
        check_compatible(o);
        for (const auto& [j, c] : o.coeffs_) add(j, c);
        return *this;
    }
    Tensor& operator-=(const Tensor& o) {
        check_compatible(o);
        for (const auto& [j, c] : o.coeffs_) add(j, -c);
        return *this;
    }
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }

    /// a * t: the basis is central, so left multiplication acts on coefficients
    /// from the left.
    friend Tensor operator*(const CentralFraction& a, const Tensor& t) {
        Tensor r(t.mode_, t.rank_, t.degree_);
        for (const auto& [j, c] : t.coeffs_) r.add(j, a * c);
        return r;
    }
    /// t * a.
    friend Tensor operator*(const Tensor& t, const CentralFraction& a) {
        Tensor r(t.mode_, t.rank_, t.degree_);
        for (const auto& [j, c] : t.coeffs_) r.add(j, c * a);
        return r;
    }

    friend bool operator==(const Tensor& a, const Tensor& b) {
        if (a.degree_ != b.degree_ || a.rank_ != b.rank_ || a.mode_ != b.mode_) return false;
        // Fraction equality is mathematical, so compare entrywise over the key union.
        for (const auto& [j, c] : a.coeffs_)
            if (!(b.coeff(j) == c)) return false;
        for (const auto& [j, c] : b.coeffs_)
            if (a.coeffs_.find(j) == a.coeffs_.end() && !c.is_zero()) return false;
        return true;
    }
    friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [j, c] : coeffs_) {
            if (!first) os << " + ";
            first = false;
            if (j.empty()) {
                os << c.str();
                continue;
            }
            for (std::size_t t = 0; t < j.size(); ++t) {
                if (t) os << "(x)";
                os << "e" << (j[t] + 1);
            }
            os << "*[" << c.str() << "]";
        }
        return os.str();
    }

private:
    void check_index(const Index& j) const {
        if (static_cast<int>(j.size()) != degree_) throw std::invalid_argument("tensor index degree mismatch");
        for (int v : j)
            if (v < 0 || v >= rank_) throw std::out_of_range("tensor index out of range");
    }
    void check_compatible(const Tensor& o) const {
        if (degree_ != o.degree_ || rank_ != o.rank_ || mode_ != o.mode_)
            throw std::invalid_argument("tensor shape mismatch");
    }

    QMode mode_;
    int rank_;
    int degree_;
    Coeffs coeffs_;
};

using Form = Tensor;  // degree-1 tensors

inline std::ostream& operator<<(std::ostream& os, const Tensor& t) { return os << t.str(); }

/// Balanced tensor product; coefficients slide past the central basis.
inline Tensor tensor_product(const Tensor& a, const Tensor& b) {
    if (a.mode() != b.mode() || a.rank() != b.rank())
        throw std::invalid_argument("tensor product shape mismatch");
    Tensor r(a.mode(), a.rank(), a.degree() + b.degree());
    for (const auto& [ja, ca] : a.coeffs())
        for (const auto& [jb, cb] : b.coeffs()) {
            Tensor::Index j = ja;
            j.insert(j.end(), jb.begin(), jb.end());
            r.add(j, ca * cb);
        }
    return r;
}

/// Right inner product on T^k: conjugate-linear in the first slot,
/// A-linear in the second, induced from H by nesting.
inline CentralFraction inner(const CalculusSpec& spec, const Tensor& s, const Tensor& t) {
    if (s.degree() != t.degree()) throw std::invalid_argument("inner: tensor degree mismatch");
    CentralFraction acc = CentralFraction::zero(spec.q_mode);
    for (const auto& [ji, ci] : s.coeffs())
        for (const auto& [jj, cj] : t.coeffs()) {
            CentralFraction prod = CentralFraction::one(spec.q_mode);
            for (std::size_t p = 0; p < ji.size(); ++p) prod *= spec.h(ji[p], jj[p]);
            acc += ci.star() * prod * cj;
        }
    return acc;
}

/// Antilinear involution reversing tensor factors;
/// (e_{j1} x..x e_{jk} c)^dag = eps_{j1}..eps_{jk} e_{jk} x..x e_{j1} c*.
inline Tensor dag(const CalculusSpec& spec, const Tensor& t) {
    Tensor r(t.mode(), t.rank(), t.degree());
    for (const auto& [j, c] : t.coeffs()) {
        Tensor::Index rev(j.rbegin(), j.rend());
        int sign = 1;
        for (int v : j) sign *= spec.eps(v);
        CentralFraction cc = c.star();
        if (sign < 0) cc = -cc;
        r.add(rev, cc);
    }
    return r;
}

/// Bilinear quantum metric g(w x e) = -<w^dag, e> on two-tensors.
inline CentralFraction quantum_metric_g(const CalculusSpec& spec, const Tensor& s) {
    if (s.degree() != 2) throw std::invalid_argument("quantum_metric_g needs a two-tensor");
    CentralFraction acc = CentralFraction::zero(spec.q_mode);
    for (const auto& [j, c] : s.coeffs()) {
        CentralFraction v = spec.h(j[0], j[1]) * c;
        if (spec.eps(j[0]) > 0) v = -v;
        acc += v;
    }
    return acc;
}

}  // namespace ncconn

#endif
