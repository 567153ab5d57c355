#pragma once

// Minkowski-space algebra with signature (+,-,-,-).
//
// Units: Gaussian with c = 1. Time is carried as ct, so proper time s, the
// shell radius sigma and every retardation delay share length units, and the
// q/c couplings of the Gaussian equations of motion reduce to q.
//
// Index position is part of the type: FourVector is contravariant (v^mu),
// CoVector is covariant (v_mu). Conversion happens only through lower() and
// raise(); nothing converts implicitly.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

namespace shellrr {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3& operator+=(const Vec3& o) noexcept { x += o.x; y += o.y; z += o.z; return *this; }
    constexpr Vec3& operator-=(const Vec3& o) noexcept { x -= o.x; y -= o.y; z -= o.z; return *this; }
    constexpr Vec3& operator*=(double k) noexcept { x *= k; y *= k; z *= k; return *this; }

    friend constexpr Vec3 operator+(Vec3 a, const Vec3& b) noexcept { return a += b; }
    friend constexpr Vec3 operator-(Vec3 a, const Vec3& b) noexcept { return a -= b; }
    friend constexpr Vec3 operator*(Vec3 a, double k) noexcept { return a *= k; }
    friend constexpr Vec3 operator*(double k, Vec3 a) noexcept { return a *= k; }
    friend constexpr Vec3 operator-(const Vec3& a) noexcept { return {-a.x, -a.y, -a.z}; }
    friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

constexpr double dot3(const Vec3& a, const Vec3& b) noexcept { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(const Vec3& a, const Vec3& b) noexcept {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm3(const Vec3& a) noexcept { return std::sqrt(dot3(a, a)); }

namespace detail {

/// Shared storage for the two index positions. Tag keeps them distinct types.
template <class Tag>
class Components4 {
public:
    constexpr Components4() noexcept = default;
    constexpr Components4(double c0, double c1, double c2, double c3) noexcept : c_{c0, c1, c2, c3} {}
    explicit constexpr Components4(const std::array<double, 4>& c) noexcept : c_(c) {}

    constexpr double operator[](std::size_t i) const noexcept { return c_[i]; }
    constexpr double& operator[](std::size_t i) noexcept { return c_[i]; }
    [[nodiscard]] constexpr const std::array<double, 4>& components() const noexcept { return c_; }

    [[nodiscard]] constexpr double t() const noexcept { return c_[0]; }
    [[nodiscard]] constexpr Vec3 spatial() const noexcept { return {c_[1], c_[2], c_[3]}; }

    constexpr Components4& operator+=(const Components4& o) noexcept {
        for (std::size_t i = 0; i < 4; ++i) c_[i] += o.c_[i];
        return *this;
    }
    constexpr Components4& operator-=(const Components4& o) noexcept {
        for (std::size_t i = 0; i < 4; ++i) c_[i] -= o.c_[i];
        return *this;
    }
    constexpr Components4& operator*=(double k) noexcept {
        for (auto& v : c_) v *= k;
        return *this;
    }
    constexpr Components4& operator/=(double k) noexcept {
        for (auto& v : c_) v /= k;
        return *this;
    }

    friend constexpr Components4 operator+(Components4 a, const Components4& b) noexcept { return a += b; }
    friend constexpr Components4 operator-(Components4 a, const Components4& b) noexcept { return a -= b; }
    friend constexpr Components4 operator*(Components4 a, double k) noexcept { return a *= k; }
    friend constexpr Components4 operator*(double k, Components4 a) noexcept { return a *= k; }
    friend constexpr Components4 operator/(Components4 a, double k) noexcept { return a /= k; }
    friend constexpr Components4 operator-(Components4 a) noexcept { return a *= -1.0; }
    friend constexpr bool operator==(const Components4&, const Components4&) = default;

    [[nodiscard]] bool finite() const noexcept {
        for (double v : c_) {
            if (!std::isfinite(v)) return false;
        }
        return true;
    }

    /// Component-wise Euclidean magnitude; for tolerances, not physics.
    [[nodiscard]] double euclidean_norm() const noexcept {
        return std::sqrt(c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3]);
    }

    [[nodiscard]] double max_abs() const noexcept {
        double m = 0.0;
        for (double v : c_) m = std::max(m, std::abs(v));
        return m;
    }

private:
    std::array<double, 4> c_{};
};

struct UpperTag {};
struct LowerTag {};

}  // namespace detail

/// Contravariant 4-vector (ct, x, y, z).
using FourVector = detail::Components4<detail::UpperTag>;
/// Covariant 4-vector, e.g. a potential A_mu or a force f_mu.
using CoVector = detail::Components4<detail::LowerTag>;

constexpr FourVector make_four_vector(double t, const Vec3& x) noexcept { return {t, x.x, x.y, x.z}; }

constexpr CoVector lower(const FourVector& v) noexcept { return {v[0], -v[1], -v[2], -v[3]}; }
constexpr FourVector raise(const CoVector& v) noexcept { return {v[0], -v[1], -v[2], -v[3]}; }

/// a^mu b_mu.
constexpr double contract(const CoVector& a, const FourVector& b) noexcept {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

/// Minkowski inner product a^0 b^0 - a.b.
constexpr double dot(const FourVector& a, const FourVector& b) noexcept {
    return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}
constexpr double dot(const CoVector& a, const CoVector& b) noexcept {
    return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
}

/// sqrt(|v.v|): the invariant magnitude used for force norms.
inline double minkowski_norm(const FourVector& v) noexcept { return std::sqrt(std::abs(dot(v, v))); }
inline double minkowski_norm(const CoVector& v) noexcept { return std::sqrt(std::abs(dot(v, v))); }

/// Unit timelike 4-velocity from a 3-velocity (|v| < 1).
FourVector four_velocity_from_3velocity(const Vec3& v);

/// Unit timelike 4-velocity from spatial components gamma*v.
FourVector four_velocity_from_spatial(const Vec3& gamma_v);

/// Covariant antisymmetric rank-2 tensor F_{mu nu}. Only the six independent
/// components are stored, so antisymmetry holds by representation.
class FaradayTensor {
public:
    constexpr FaradayTensor() noexcept = default;

    /// Build from lab-frame E and B: F_{0i} = E_i, F_{ij} = -eps_{ijk} B_k.
    static constexpr FaradayTensor from_fields(const Vec3& e, const Vec3& b) noexcept {
        FaradayTensor f;
        f.c_ = {e.x, e.y, e.z, -b.z, b.y, -b.x};
        return f;
    }

    /// Antisymmetric part of an arbitrary covariant 4x4 array, (M - M^T)/2.
    static FaradayTensor antisymmetrize(const std::array<std::array<double, 4>, 4>& m) noexcept;

    /// Wedge product (a ^ b)_{mu nu} = a_mu b_nu - a_nu b_mu.
    static FaradayTensor wedge(const CoVector& a, const CoVector& b) noexcept;

    [[nodiscard]] double operator()(std::size_t mu, std::size_t nu) const noexcept;

    [[nodiscard]] constexpr Vec3 electric() const noexcept { return {c_[0], c_[1], c_[2]}; }
    [[nodiscard]] constexpr Vec3 magnetic() const noexcept { return {-c_[5], c_[4], -c_[3]}; }

    /// F_{mu nu} v^nu.
    [[nodiscard]] CoVector contract(const FourVector& v) const noexcept;

    [[nodiscard]] std::array<std::array<double, 4>, 4> matrix() const noexcept;
    [[nodiscard]] const std::array<double, 6>& independent() const noexcept { return c_; }

    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] double max_abs() const noexcept;
    [[nodiscard]] bool finite() const noexcept;

    FaradayTensor& operator+=(const FaradayTensor& o) noexcept {
        for (std::size_t i = 0; i < 6; ++i) c_[i] += o.c_[i];
        return *this;
    }
    FaradayTensor& operator-=(const FaradayTensor& o) noexcept {
        for (std::size_t i = 0; i < 6; ++i) c_[i] -= o.c_[i];
        return *this;
    }
    FaradayTensor& operator*=(double k) noexcept {
        for (auto& v : c_) v *= k;
        return *this;
    }
    friend FaradayTensor operator+(FaradayTensor a, const FaradayTensor& b) noexcept { return a += b; }
    friend FaradayTensor operator-(FaradayTensor a, const FaradayTensor& b) noexcept { return a -= b; }
    friend FaradayTensor operator*(FaradayTensor a, double k) noexcept { return a *= k; }
    friend FaradayTensor operator*(double k, FaradayTensor a) noexcept { return a *= k; }
    friend bool operator==(const FaradayTensor&, const FaradayTensor&) = default;

private:
    // Order: F01 F02 F03 F12 F13 F23.
    std::array<double, 6> c_{};
};

/// Proper orthochronous pure boost, stored as the matrix Lambda^mu_nu acting
/// on contravariant vectors.
class LorentzBoost {
public:
    using Matrix = std::array<std::array<double, 4>, 4>;

    LorentzBoost() noexcept;

    /// The boost into the rest frame of `u`: apply(from_velocity(u), u) == (1,0,0,0).
    /// Throws NonTimelikeVelocity when |u.u - 1| > 1e-9 or u^0 < 1.
    static LorentzBoost from_velocity(const FourVector& u);

    [[nodiscard]] const Matrix& matrix() const noexcept { return m_; }
    [[nodiscard]] LorentzBoost inverse() const noexcept;
    [[nodiscard]] double determinant() const noexcept;

    [[nodiscard]] FourVector apply(const FourVector& v) const noexcept;
    /// Covariant vectors transform with the inverse transpose.
    [[nodiscard]] CoVector apply(const CoVector& v) const noexcept;
    [[nodiscard]] FaradayTensor apply(const FaradayTensor& f) const noexcept;

    [[nodiscard]] LorentzBoost compose(const LorentzBoost& first) const noexcept;

private:
    explicit LorentzBoost(const Matrix& m) noexcept : m_(m) {}
    Matrix m_;
};

/// Free-function spellings used throughout the engine.
inline LorentzBoost boost_from_velocity(const FourVector& u) { return LorentzBoost::from_velocity(u); }
inline FourVector apply(const LorentzBoost& b, const FourVector& v) noexcept { return b.apply(v); }

/// Determinant of a general 4x4 matrix (cofactor expansion).
double determinant4(const LorentzBoost::Matrix& m) noexcept;

}  // namespace shellrr
