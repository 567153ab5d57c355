#include "shellrr/minkowski.hpp"

#include <sstream>

#include "shellrr/errors.hpp"

namespace shellrr {

FourVector four_velocity_from_3velocity(const Vec3& v) {
    const double v2 = dot3(v, v);
    if (!(v2 < 1.0)) {
        throw Error(ErrorCode::NonTimelikeVelocity, "3-velocity magnitude must be below 1");
    }
    const double gamma = 1.0 / std::sqrt(1.0 - v2);
    return make_four_vector(gamma, gamma * v);
}

FourVector four_velocity_from_spatial(const Vec3& gamma_v) {
    if (!std::isfinite(gamma_v.x) || !std::isfinite(gamma_v.y) || !std::isfinite(gamma_v.z)) {
        throw Error(ErrorCode::NonFiniteInput, "non-finite spatial 4-velocity");
    }
    return make_four_vector(std::sqrt(1.0 + dot3(gamma_v, gamma_v)), gamma_v);
}

// ---------------------------------------------------------------------------
// FaradayTensor

namespace {

constexpr int kIndex[4][4] = {
    {-1, 0, 1, 2},
    {0, -1, 3, 4},
    {1, 3, -1, 5},
    {2, 4, 5, -1},
};

}  // namespace

double FaradayTensor::operator()(std::size_t mu, std::size_t nu) const noexcept {
    if (mu == nu) return 0.0;
    const double v = c_[static_cast<std::size_t>(kIndex[mu][nu])];
    return mu < nu ? v : -v;
}

FaradayTensor FaradayTensor::antisymmetrize(const std::array<std::array<double, 4>, 4>& m) noexcept {
    FaradayTensor f;
    f.c_ = {0.5 * (m[0][1] - m[1][0]), 0.5 * (m[0][2] - m[2][0]), 0.5 * (m[0][3] - m[3][0]),
            0.5 * (m[1][2] - m[2][1]), 0.5 * (m[1][3] - m[3][1]), 0.5 * (m[2][3] - m[3][2])};
    return f;
}

FaradayTensor FaradayTensor::wedge(const CoVector& a, const CoVector& b) noexcept {
    FaradayTensor f;
    f.c_ = {a[0] * b[1] - a[1] * b[0], a[0] * b[2] - a[2] * b[0], a[0] * b[3] - a[3] * b[0],
            a[1] * b[2] - a[2] * b[1], a[1] * b[3] - a[3] * b[1], a[2] * b[3] - a[3] * b[2]};
    return f;
}

CoVector FaradayTensor::contract(const FourVector& v) const noexcept {
    const auto& c = c_;
    return {c[0] * v[1] + c[1] * v[2] + c[2] * v[3],
            -c[0] * v[0] + c[3] * v[2] + c[4] * v[3],
            -c[1] * v[0] - c[3] * v[1] + c[5] * v[3],
            -c[2] * v[0] - c[4] * v[1] - c[5] * v[2]};
}

std::array<std::array<double, 4>, 4> FaradayTensor::matrix() const noexcept {
    std::array<std::array<double, 4>, 4> m{};
    for (std::size_t mu = 0; mu < 4; ++mu) {
        for (std::size_t nu = 0; nu < 4; ++nu) m[mu][nu] = (*this)(mu, nu);
    }
    return m;
}

bool FaradayTensor::is_zero() const noexcept {
    for (double v : c_) {
        if (v != 0.0) return false;
    }
    return true;
}

double FaradayTensor::max_abs() const noexcept {
    double m = 0.0;
    for (double v : c_) m = std::max(m, std::abs(v));
    return m;
}

bool FaradayTensor::finite() const noexcept {
    for (double v : c_) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// LorentzBoost

LorentzBoost::LorentzBoost() noexcept : m_{} {
    for (std::size_t i = 0; i < 4; ++i) m_[i][i] = 1.0;
}

LorentzBoost LorentzBoost::from_velocity(const FourVector& u) {
    if (!u.finite()) {
        throw Error(ErrorCode::NonFiniteInput, "boost velocity has non-finite components");
    }
    const double norm_residual = std::abs(dot(u, u) - 1.0);
    if (norm_residual > 1e-9 || u[0] < 1.0 - 1e-9) {
        std::ostringstream os;
        os << "u.u - 1 = " << dot(u, u) - 1.0 << ", u^0 = " << u[0];
        throw Error(ErrorCode::NonTimelikeVelocity, os.str());
    }
    const double gamma = u[0];
    const double g1 = gamma + 1.0;
    Matrix m{};
    m[0][0] = gamma;
    for (std::size_t i = 1; i < 4; ++i) {
        m[0][i] = -u[i];
        m[i][0] = -u[i];
        for (std::size_t j = 1; j < 4; ++j) {
            m[i][j] = (i == j ? 1.0 : 0.0) + u[i] * u[j] / g1;
        }
    }
    return LorentzBoost(m);
}

LorentzBoost LorentzBoost::inverse() const noexcept {
    // Lambda^{-1} = eta Lambda^T eta.
    Matrix inv{};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            const double sign = ((i == 0) == (j == 0)) ? 1.0 : -1.0;
            inv[i][j] = sign * m_[j][i];
        }
    }
    return LorentzBoost(inv);
}

double LorentzBoost::determinant() const noexcept { return determinant4(m_); }

FourVector LorentzBoost::apply(const FourVector& v) const noexcept {
    FourVector out;
    for (std::size_t i = 0; i < 4; ++i) {
        out[i] = m_[i][0] * v[0] + m_[i][1] * v[1] + m_[i][2] * v[2] + m_[i][3] * v[3];
    }
    return out;
}

CoVector LorentzBoost::apply(const CoVector& v) const noexcept {
    const Matrix& inv = inverse().m_;
    CoVector out;
    for (std::size_t mu = 0; mu < 4; ++mu) {
        out[mu] = inv[0][mu] * v[0] + inv[1][mu] * v[1] + inv[2][mu] * v[2] + inv[3][mu] * v[3];
    }
    return out;
}

FaradayTensor LorentzBoost::apply(const FaradayTensor& f) const noexcept {
    const Matrix& inv = inverse().m_;
    const auto fm = f.matrix();
    std::array<std::array<double, 4>, 4> out{};
    for (std::size_t mu = 0; mu < 4; ++mu) {
        for (std::size_t nu = 0; nu < 4; ++nu) {
            double acc = 0.0;
            for (std::size_t a = 0; a < 4; ++a) {
                for (std::size_t b = 0; b < 4; ++b) acc += inv[a][mu] * inv[b][nu] * fm[a][b];
            }
            out[mu][nu] = acc;
        }
    }
    return FaradayTensor::antisymmetrize(out);
}

LorentzBoost LorentzBoost::compose(const LorentzBoost& first) const noexcept {
    Matrix out{};
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < 4; ++k) acc += m_[i][k] * first.m_[k][j];
            out[i][j] = acc;
        }
    }
    return LorentzBoost(out);
}

double determinant4(const LorentzBoost::Matrix& m) noexcept {
    auto det3 = [&](std::size_t skip_col) {
        std::array<std::size_t, 3> cols{};
        std::size_t k = 0;
        for (std::size_t c = 0; c < 4; ++c) {
            if (c != skip_col) cols[k++] = c;
        }
        const auto& r1 = m[1];
        const auto& r2 = m[2];
        const auto& r3 = m[3];
        return r1[cols[0]] * (r2[cols[1]] * r3[cols[2]] - r2[cols[2]] * r3[cols[1]]) -
               r1[cols[1]] * (r2[cols[0]] * r3[cols[2]] - r2[cols[2]] * r3[cols[0]]) +
               r1[cols[2]] * (r2[cols[0]] * r3[cols[1]] - r2[cols[1]] * r3[cols[0]]);
    };
    double det = 0.0;
    for (std::size_t c = 0; c < 4; ++c) {
        const double sign = (c % 2 == 0) ? 1.0 : -1.0;
        det += sign * m[0][c] * det3(c);
    }
    return det;
}

}  // namespace shellrr
