#ifndef NCCONN_ALGEBRA_HPP
#define NCCONN_ALGEBRA_HPP

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "ncconn/scalar.hpp"

namespace ncconn {

/// Which member of the torus family we are working in: the formal unit
/// parameter q, or its classical specialization q = 1 (commutative).
enum class QMode : std::uint8_t { formal, one };

inline const char* to_string(QMode m) { return m == QMode::formal ? "formal" : "1"; }

/// Presentation data for the *-algebra: two unitary generators U, V with
/// V*U = q*U*V, and the two basic Hermitian derivations
///   d1(U^m V^n) = i*m*U^m V^n,   d2(U^m V^n) = i*n*U^m V^n.
struct AlgebraPresentation {
    QMode q_mode = QMode::formal;
    static constexpr int rank_of_derivation_basis = 2;
};

/// Element of the quantum-torus *-algebra in normal form: a finitely
/// supported sum  sum c_{mn} U^m V^n  with c_{mn} in Q(i)[q, q^-1].
///
/// Monomials are kept in lexicographic (m, n) order, so equal elements have
/// identical term maps and printing is deterministic.
class AlgebraElement {
public:
    using Mono = std::pair<long, long>;  // (m, n) for U^m V^n
    using Terms = std::map<Mono, Scalar>;

    AlgebraElement() : mode_(QMode::formal) {}
    explicit AlgebraElement(QMode mode) : mode_(mode) {}
    AlgebraElement(QMode mode, long constant) : mode_(mode) {
        if (constant != 0) terms_[{0, 0}] = Scalar(constant);
    }

    static AlgebraElement zero(QMode mode) { return AlgebraElement(mode); }
    static AlgebraElement one(QMode mode) { return AlgebraElement(mode, 1); }
    static AlgebraElement monomial(QMode mode, long m, long n, Scalar c = Scalar(1)) {
        AlgebraElement a(mode);
        a.add_term({m, n}, std::move(c));
        return a;
    }
    static AlgebraElement U(QMode mode, long m = 1) { return monomial(mode, m, 0); }
    static AlgebraElement V(QMode mode, long n = 1) { return monomial(mode, 0, n); }
    static AlgebraElement constant(QMode mode, Scalar c) { return monomial(mode, 0, 0, std::move(c)); }

    QMode mode() const { return mode_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == Mono{0, 0} &&
               terms_.begin()->second == Scalar(1);
    }

    /// Scalar multiple of the unit?
    bool is_scalar() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{0, 0});
    }
    Scalar scalar_part() const {
        auto it = terms_.find({0, 0});
        return it == terms_.end() ? Scalar() : it->second;
    }

    void add_term(Mono mono, Scalar c) {
        if (mode_ == QMode::one && !c.is_constant()) c = Scalar(c.substitute_q(GaussianRational(1)));
        if (c.is_zero()) return;
        auto it = terms_.find(mono);
        if (it == terms_.end()) {
            terms_.emplace(mono, std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    AlgebraElement operator-() const {
        AlgebraElement r(mode_);
        for (const auto& [mn, c] : terms_) r.terms_[mn] = -c;
        return r;
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        check_mode(o);
        for (const auto& [mn, c] : o.terms_) add_term(mn, c);
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o) {
        check_mode(o);
        for (const auto& [mn, c] : o.terms_) add_term(mn, -c);
        return *this;
    }
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }

    /// Product in normal form. Reordering V^n U^m = q^{n m} U^m V^n gives the
    /// twist q^{n1*m2} on each pair of monomials; at q = 1 the twist is 1.
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
        a.check_mode(b);
        AlgebraElement r(a.mode_);
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Scalar c = ca * cb;
                long twist = ma.second * mb.first;  // n1 * m2
                if (twist != 0 && a.mode_ == QMode::formal) c = c * Scalar::q_power(twist);
                r.add_term({ma.first + mb.first, ma.second + mb.second}, std::move(c));
            }
        }
        return r;
    }
    AlgebraElement& operator*=(const AlgebraElement& o) { return *this = *this * o; }

    friend AlgebraElement operator*(const Scalar& s, const AlgebraElement& a) {
        AlgebraElement r(a.mode_);
        for (const auto& [mn, c] : a.terms_) r.add_term(mn, s * c);
        return r;
    }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.mode_ == b.mode_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }
    friend bool operator<(const AlgebraElement& a, const AlgebraElement& b) {
        // Deterministic order for use as map keys; not meaningful algebraically.
        return a.str() < b.str();
    }

    /// The *-involution: antilinear, antimultiplicative, (U^m V^n)* picks up
    /// q^{n m} from the reordering V^-n U^-m = q^{nm} U^-m V^-n.
    AlgebraElement star() const {
        AlgebraElement r(mode_);
        for (const auto& [mn, c] : terms_) {
            Scalar sc = c.conj();
            long twist = mn.second * mn.first;
            if (twist != 0 && mode_ == QMode::formal) sc = sc * Scalar::q_power(twist);
            r.add_term({-mn.first, -mn.second}, std::move(sc));
        }
        return r;
    }

    /// Basic derivation, j in {1, 2}: multiplies each monomial by i*m resp. i*n.
    AlgebraElement basic_derivation(int j) const {
        if (j != 1 && j != 2) throw std::out_of_range("basic_derivation: index must be 1 or 2");
        AlgebraElement r(mode_);
        for (const auto& [mn, c] : terms_) {
            long k = (j == 1) ? mn.first : mn.second;
            if (k == 0) continue;
            r.add_term(mn, Scalar(GaussianRational(mpq_class(0), mpq_class(k))) * c);
        }
        return r;
    }

    bool commutes_with(const AlgebraElement& o) const { return (*this * o) == (o * *this); }

    /// Central in the torus algebra: everything at q = 1, scalars at formal q.
    bool is_central() const {
        if (mode_ == QMode::one) return true;
        return is_scalar();
    }

    /// Canonical printing; one output term per (monomial, q-power) so the
    /// result stays inside the expression grammar. parse(print(a)) == a.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [mn, c] : terms_) {
            for (const auto& [k, g] : c.terms()) {
                std::string coeff = g.str();
                bool neg = coeff.size() > 0 && coeff[0] == '-';
                if (first) {
                    if (neg) {
                        os << "-";
                        coeff = coeff.substr(1);
                    }
                } else {
                    os << (neg ? " - " : " + ");
                    if (neg) coeff = coeff.substr(1);
                }
                first = false;
                bool have_mono = (k != 0) || mn.first != 0 || mn.second != 0;
                bool coeff_is_one = (coeff == "1");
                if (!coeff_is_one || !have_mono) os << coeff;
                bool need_star = !coeff_is_one || !have_mono;
                auto emit = [&](const char* sym, long e) {
                    if (e == 0) return;
                    if (need_star) os << "*";
                    os << sym;
                    if (e != 1) os << "^" << e;
                    need_star = true;
                };
                emit("q", k);
                emit("U", mn.first);
                emit("V", mn.second);
            }
        }
        return os.str();
    }

private:
    void check_mode(const AlgebraElement& o) const {
        if (mode_ != o.mode_) throw std::invalid_argument("mixing algebra elements of different q modes");
    }

    QMode mode_;
    Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const AlgebraElement& a) { return os << a.str(); }

/// d_j as a free function, matching the operation name used elsewhere.
inline AlgebraElement basic_derivation(int j, const AlgebraElement& a) { return a.basic_derivation(j); }

}  // namespace ncconn

#endif
