#pragma once

#include <array>
#include <cmath>
#include <complex>

// Minimal fixed-size complex linear algebra: 2- and 4-component vectors,
// 2x2 and 4x4 matrices, and Minkowski four-vectors. Dimensions are tiny and
// known at compile time, so everything is a flat std::array with hand-written
// loops; no external linear-algebra dependency is warranted.

namespace compton {

using cplx = std::complex<double>;

inline constexpr cplx I{0.0, 1.0};

// ---------------------------------------------------------------- Vec2 ----

// Two-component (Pauli) spinor.
struct Vec2 {
    cplx u{}, d{};

    Vec2 operator+(const Vec2& o) const { return {u + o.u, d + o.d}; }
    Vec2 operator-(const Vec2& o) const { return {u - o.u, d - o.d}; }
    Vec2 operator*(cplx s) const { return {u * s, d * s}; }
    Vec2 operator/(cplx s) const { return {u / s, d / s}; }
};

inline Vec2 operator*(cplx s, const Vec2& v) { return v * s; }

// <a|b>: conjugate-linear in the first argument.
inline cplx dot(const Vec2& a, const Vec2& b) {
    return std::conj(a.u) * b.u + std::conj(a.d) * b.d;
}

inline double norm2(const Vec2& v) { return std::real(dot(v, v)); }
inline double norm(const Vec2& v) { return std::sqrt(norm2(v)); }

// ---------------------------------------------------------------- Mat2 ----

struct Mat2 {
    std::array<cplx, 4> e{};  // row-major

    cplx& operator()(int r, int c) { return e[2 * r + c]; }
    const cplx& operator()(int r, int c) const { return e[2 * r + c]; }

    Mat2 operator+(const Mat2& o) const {
        Mat2 m;
        for (int i = 0; i < 4; ++i) m.e[i] = e[i] + o.e[i];
        return m;
    }
    Mat2 operator-(const Mat2& o) const {
        Mat2 m;
        for (int i = 0; i < 4; ++i) m.e[i] = e[i] - o.e[i];
        return m;
    }
    Mat2 operator*(cplx s) const {
        Mat2 m;
        for (int i = 0; i < 4; ++i) m.e[i] = e[i] * s;
        return m;
    }
    Mat2 operator*(const Mat2& o) const {
        Mat2 m;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                m(r, c) = (*this)(r, 0) * o(0, c) + (*this)(r, 1) * o(1, c);
        return m;
    }
    Vec2 operator*(const Vec2& v) const {
        return {(*this)(0, 0) * v.u + (*this)(0, 1) * v.d,
                (*this)(1, 0) * v.u + (*this)(1, 1) * v.d};
    }
};

inline Mat2 operator*(cplx s, const Mat2& m) { return m * s; }

inline Mat2 mat2(cplx a, cplx b, cplx c, cplx d) { return Mat2{{a, b, c, d}}; }

inline Mat2 identity2() { return mat2(1, 0, 0, 1); }

inline Mat2 dagger(const Mat2& m) {
    return mat2(std::conj(m(0, 0)), std::conj(m(1, 0)), std::conj(m(0, 1)),
                std::conj(m(1, 1)));
}

inline cplx trace(const Mat2& m) { return m(0, 0) + m(1, 1); }

// Matrix with the given columns.
inline Mat2 columns2(const Vec2& c0, const Vec2& c1) {
    return mat2(c0.u, c1.u, c0.d, c1.d);
}

inline double frobenius_norm(const Mat2& m) {
    double s = 0;
    for (const auto& x : m.e) s += std::norm(x);
    return std::sqrt(s);
}

// ---------------------------------------------------------------- Vec4 ----

// Four complex components: used both for Dirac spinors and for joint
// photon (x) spin amplitude vectors.
struct Vec4 {
    std::array<cplx, 4> c{};

    cplx& operator[](int i) { return c[i]; }
    const cplx& operator[](int i) const { return c[i]; }

    Vec4 operator+(const Vec4& o) const {
        Vec4 v;
        for (int i = 0; i < 4; ++i) v.c[i] = c[i] + o.c[i];
        return v;
    }
    Vec4 operator-(const Vec4& o) const {
        Vec4 v;
        for (int i = 0; i < 4; ++i) v.c[i] = c[i] - o.c[i];
        return v;
    }
    Vec4 operator*(cplx s) const {
        Vec4 v;
        for (int i = 0; i < 4; ++i) v.c[i] = c[i] * s;
        return v;
    }
};

inline Vec4 operator*(cplx s, const Vec4& v) { return v * s; }

inline cplx dot(const Vec4& a, const Vec4& b) {
    cplx s = 0;
    for (int i = 0; i < 4; ++i) s += std::conj(a.c[i]) * b.c[i];
    return s;
}

inline double norm2(const Vec4& v) { return std::real(dot(v, v)); }
inline double norm(const Vec4& v) { return std::sqrt(norm2(v)); }

// ---------------------------------------------------------------- Mat4 ----

struct Mat4 {
    std::array<cplx, 16> e{};  // row-major

    cplx& operator()(int r, int c) { return e[4 * r + c]; }
    const cplx& operator()(int r, int c) const { return e[4 * r + c]; }

    Mat4 operator+(const Mat4& o) const {
        Mat4 m;
        for (int i = 0; i < 16; ++i) m.e[i] = e[i] + o.e[i];
        return m;
    }
    Mat4 operator-(const Mat4& o) const {
        Mat4 m;
        for (int i = 0; i < 16; ++i) m.e[i] = e[i] - o.e[i];
        return m;
    }
    Mat4 operator*(cplx s) const {
        Mat4 m;
        for (int i = 0; i < 16; ++i) m.e[i] = e[i] * s;
        return m;
    }
    Mat4 operator*(const Mat4& o) const {
        Mat4 m;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                cplx s = 0;
                for (int k = 0; k < 4; ++k) s += (*this)(r, k) * o(k, c);
                m(r, c) = s;
            }
        return m;
    }
    Vec4 operator*(const Vec4& v) const {
        Vec4 w;
        for (int r = 0; r < 4; ++r) {
            cplx s = 0;
            for (int k = 0; k < 4; ++k) s += (*this)(r, k) * v[k];
            w[r] = s;
        }
        return w;
    }
};

inline Mat4 operator*(cplx s, const Mat4& m) { return m * s; }

inline Mat4 identity4() {
    Mat4 m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1;
    return m;
}

inline Mat4 dagger(const Mat4& m) {
    Mat4 d;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) d(r, c) = std::conj(m(c, r));
    return d;
}

inline cplx trace(const Mat4& m) {
    return m(0, 0) + m(1, 1) + m(2, 2) + m(3, 3);
}

inline double frobenius_norm(const Mat4& m) {
    double s = 0;
    for (const auto& x : m.e) s += std::norm(x);
    return std::sqrt(s);
}

// -------------------------------------------------------- four-vectors ----

// Real contravariant four-vector, metric (+,-,-,-).
struct FourVector {
    double t{}, x{}, y{}, z{};

    FourVector operator+(const FourVector& o) const {
        return {t + o.t, x + o.x, y + o.y, z + o.z};
    }
    FourVector operator-(const FourVector& o) const {
        return {t - o.t, x - o.x, y - o.y, z - o.z};
    }
    FourVector operator*(double s) const { return {t * s, x * s, y * s, z * s}; }
};

inline FourVector operator*(double s, const FourVector& v) { return v * s; }

// Minkowski product a.b = a0 b0 - a.b (3-vector part).
inline double mdot(const FourVector& a, const FourVector& b) {
    return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z;
}

inline double minkowski_norm2(const FourVector& a) { return mdot(a, a); }

// Complex four-vector (polarizations). Time component kept for generality;
// physical photon polarizations here always have ct = 0.
struct CFourVector {
    cplx t{}, x{}, y{}, z{};

    CFourVector() = default;
    CFourVector(cplx t_, cplx x_, cplx y_, cplx z_) : t(t_), x(x_), y(y_), z(z_) {}
    CFourVector(const FourVector& v) : t(v.t), x(v.x), y(v.y), z(v.z) {}

    CFourVector operator+(const CFourVector& o) const {
        return {t + o.t, x + o.x, y + o.y, z + o.z};
    }
    CFourVector operator-(const CFourVector& o) const {
        return {t - o.t, x - o.x, y - o.y, z - o.z};
    }
    CFourVector operator*(cplx s) const { return {t * s, x * s, y * s, z * s}; }
};

inline CFourVector operator*(cplx s, const CFourVector& v) { return v * s; }

inline CFourVector conj(const CFourVector& v) {
    return {std::conj(v.t), std::conj(v.x), std::conj(v.y), std::conj(v.z)};
}

// Minkowski product without conjugation (covariant contraction a^mu b_mu).
inline cplx mdot(const CFourVector& a, const CFourVector& b) {
    return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z;
}

// ------------------------------------------------------- real 4x4 (boosts) -

struct Mat4Real {
    std::array<double, 16> e{};  // row-major

    double& operator()(int r, int c) { return e[4 * r + c]; }
    const double& operator()(int r, int c) const { return e[4 * r + c]; }

    Mat4Real operator*(const Mat4Real& o) const {
        Mat4Real m;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                double s = 0;
                for (int k = 0; k < 4; ++k) s += (*this)(r, k) * o(k, c);
                m(r, c) = s;
            }
        return m;
    }
    FourVector operator*(const FourVector& v) const {
        std::array<double, 4> in{v.t, v.x, v.y, v.z}, out{};
        for (int r = 0; r < 4; ++r)
            for (int k = 0; k < 4; ++k) out[r] += (*this)(r, k) * in[k];
        return {out[0], out[1], out[2], out[3]};
    }
};

inline Mat4Real identity4_real() {
    Mat4Real m;
    for (int i = 0; i < 4; ++i) m(i, i) = 1;
    return m;
}

} // namespace compton
