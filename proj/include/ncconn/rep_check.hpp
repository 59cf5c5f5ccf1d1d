#ifndef NCCONN_REP_CHECK_HPP
#define NCCONN_REP_CHECK_HPP

#include <array>
#include <stdexcept>

#include "ncconn/algebra.hpp"

namespace ncconn {

/// 4x4 matrix over Q(i); just enough linear algebra for the clock-and-shift
/// oracle at the root of unity q = i.
struct Mat4 {
    std::array<std::array<GaussianRational, 4>, 4> e{};

    static Mat4 zero() { return Mat4{}; }
    static Mat4 identity() {
        Mat4 m;
        for (int k = 0; k < 4; ++k) m.e[k][k] = GaussianRational(1);
        return m;
    }

    friend Mat4 operator*(const Mat4& a, const Mat4& b) {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                GaussianRational s;
                for (int k = 0; k < 4; ++k) s += a.e[i][k] * b.e[k][j];
                r.e[i][j] = s;
            }
        return r;
    }
    friend Mat4 operator+(const Mat4& a, const Mat4& b) {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.e[i][j] = a.e[i][j] + b.e[i][j];
        return r;
    }
    friend Mat4 operator*(const GaussianRational& c, const Mat4& a) {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.e[i][j] = c * a.e[i][j];
        return r;
    }
    friend bool operator==(const Mat4& a, const Mat4& b) { return a.e == b.e; }

    Mat4 dagger() const {
        Mat4 r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.e[i][j] = e[j][i].conj();
        return r;
    }
};

namespace detail {

/// pi(U) = clock diag(1, i, -1, -i): U e_k = i^k e_k.
inline Mat4 clock_matrix() {
    Mat4 m;
    GaussianRational w(1);
    const GaussianRational i = GaussianRational::i();
    for (int k = 0; k < 4; ++k) {
        m.e[k][k] = w;
        w *= i;
    }
    return m;
}

/// pi(V) = cyclic shift V e_k = e_{k-1 mod 4}, so that pi(V) pi(U) = i pi(U) pi(V).
inline Mat4 shift_matrix() {
    Mat4 m;
    for (int k = 0; k < 4; ++k) m.e[(k + 3) % 4][k] = GaussianRational(1);
    return m;
}

}  // namespace detail

/// Representation of a normal-form element at q = i on C^4.
inline Mat4 clock_shift_matrix(const AlgebraElement& a) {
    if (a.mode() != QMode::formal)
        throw std::invalid_argument("rep_check requires the formal-q presentation");
    static const Mat4 clock = detail::clock_matrix();
    static const Mat4 shift = detail::shift_matrix();
    const GaussianRational qi = GaussianRational::i();
    Mat4 acc = Mat4::zero();
    for (const auto& [mn, c] : a.terms()) {
        // U^m and V^n at the 4th root of unity: exponents reduce mod 4, with
        // negative powers via the unitary adjoint.
        auto pow4 = [](const Mat4& g, long e) {
            long r = ((e % 4) + 4) % 4;
            Mat4 m = Mat4::identity();
            for (long j = 0; j < r; ++j) m = m * g;
            return m;
        };
        Mat4 term = pow4(clock, mn.first) * pow4(shift, mn.second);
        acc = acc + c.substitute_q(qi) * term;
    }
    return acc;
}

/// Independent oracle for the algebra arithmetic: multiplicativity and
/// *-compatibility of the clock-and-shift representation at q = i.
inline bool rep_check(const AlgebraElement& a, const AlgebraElement& b) {
    Mat4 pa = clock_shift_matrix(a);
    Mat4 pb = clock_shift_matrix(b);
    if (!(clock_shift_matrix(a * b) == pa * pb)) return false;
    if (!(clock_shift_matrix(a.star()) == pa.dagger())) return false;
    return true;
}

}  // namespace ncconn

#endif
