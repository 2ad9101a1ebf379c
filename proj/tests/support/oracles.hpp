#pragma once

// Reference computations used only by the test suites. Every routine here is
// written from the defining formulas with plain std::exp / loops and does not
// call into the library's evolution, Wigner or flux code paths.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using Vector = std::vector<Complex>;
using Matrix = std::vector<Vector>;

inline constexpr double kPi = std::numbers::pi;
inline const Complex kI{0.0, 1.0};

/// Periodic lookup c_m, amplitudes stored m = -l..l.
inline Complex amp(const Vector& c, long m) {
    const long d = static_cast<long>(c.size());
    const long l = (d - 1) / 2;
    long p = (m + l) % d;
    if (p < 0) p += d;
    return c[static_cast<std::size_t>(p)];
}

inline Matrix identity(std::size_t n) {
    Matrix m(n, Vector(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1.0;
    return m;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    Matrix out(n, Vector(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
    return out;
}

/// exp(A) by scaling and squaring of a truncated Taylor series.
inline Matrix expm(Matrix a) {
    const std::size_t n = a.size();
    double norm = 0.0;
    for (const auto& row : a)
        for (const auto& x : row) norm = std::max(norm, std::abs(x));
    int squarings = 0;
    while (norm * n > 0.5) {
        norm /= 2.0;
        ++squarings;
    }
    const double scale = std::ldexp(1.0, -squarings);
    for (auto& row : a)
        for (auto& x : row) x *= scale;
    Matrix result = identity(n);
    Matrix term = identity(n);
    for (int k = 1; k <= 30; ++k) {
        term = multiply(term, a);
        for (auto& row : term)
            for (auto& x : row) x /= static_cast<double>(k);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) result[i][j] += term[i][j];
    }
    for (int s = 0; s < squarings; ++s) result = multiply(result, result);
    return result;
}

/// Dense U = exp(-i tau H) with H = diag((m - alpha)^2), m = -l..l.
inline Matrix evolution_matrix(int l, double tau, double alpha) {
    const std::size_t d = static_cast<std::size_t>(2 * l + 1);
    Matrix generator(d, Vector(d, 0.0));
    for (int m = -l; m <= l; ++m) {
        const double e = (m - alpha) * (m - alpha);
        generator[m + l][m + l] = -kI * tau * e;
    }
    return expm(generator);
}

/// Dense diagonal unitary built element-wise: diag(exp(-i tau (m - alpha)^2)).
inline Matrix diagonal_unitary(int l, double tau, double alpha) {
    const std::size_t d = static_cast<std::size_t>(2 * l + 1);
    Matrix u(d, Vector(d, 0.0));
    for (int m = -l; m <= l; ++m) u[m + l][m + l] = std::exp(-kI * tau * (m - alpha) * (m - alpha));
    return u;
}

inline Vector apply(const Matrix& u, const Vector& v) {
    Vector out(v.size(), 0.0);
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += u[i][j] * v[j];
    return out;
}

inline Complex dot(const Vector& a, const Vector& b) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

/// W(s, r) straight from the defining sum, complex-valued.
inline Complex wigner_point(const Vector& c, long s, long r) {
    const long d = static_cast<long>(c.size());
    const long l = (d - 1) / 2;
    Complex sum = 0.0;
    for (long k = -l; k <= l; ++k) {
        sum += std::conj(amp(c, k)) * amp(c, r - k) * std::exp(kI * kPi * double(s) * double(r - 2 * k) / double(d));
    }
    return sum / (2.0 * d);
}

/// Time-evolved Wigner function from the expanded sum with continuous tau:
/// each term carries exp(i tau (k-a)^2) exp(-i tau (r-k-a)^2) with r-k taken literally.
inline Complex evolved_wigner_point(const Vector& c, long s, long r, double tau, double alpha) {
    const long d = static_cast<long>(c.size());
    const long l = (d - 1) / 2;
    Complex sum = 0.0;
    for (long k = -l; k <= l; ++k) {
        const long rk = r - k;
        // amplitude c_{r-k}(t): the stored amplitude is at the periodic image m' of r-k,
        // and evolves with its own energy (m' - alpha)^2.
        long mp = (rk + l) % d;
        if (mp < 0) mp += d;
        mp -= l;
        const Complex ck_t = std::exp(-kI * tau * (k - alpha) * (k - alpha)) * amp(c, k);
        const Complex crk_t = std::exp(-kI * tau * (mp - alpha) * (mp - alpha)) * amp(c, rk);
        sum += std::conj(ck_t) * crk_t * std::exp(kI * kPi * double(s) * double(r - 2 * k) / double(d));
    }
    return sum / (2.0 * d);
}

/// <theta_n|psi> = D^{-1/2} sum_m exp(+i m theta_n) c_m.
inline Complex angle_amplitude(const Vector& c, long n) {
    const long d = static_cast<long>(c.size());
    const long l = (d - 1) / 2;
    Complex sum = 0.0;
    for (long m = -l; m <= l; ++m) sum += std::exp(kI * double(m) * 2.0 * kPi * double(n) / double(d)) * amp(c, m);
    return sum / std::sqrt(double(d));
}

/// Smallest n' >= 1 with 2 n' m / n integral, by search.
inline std::int64_t brute_minimal_dilation(std::int64_t m, std::int64_t n) {
    for (std::int64_t k = 1;; ++k) {
        if ((2 * k * m) % n == 0) return k;
    }
}

/// Least j >= 1 with (a - 2 j b) mod D == a for every lattice point, by iteration.
inline std::int64_t brute_map_period(int d) {
    std::vector<std::pair<long, long>> points;
    for (long a = 0; a < d; ++a)
        for (long b = 0; b < d; ++b) points.emplace_back(a, b);
    auto current = points;
    for (std::int64_t j = 1;; ++j) {
        for (auto& [a, b] : current) a = ((a - 2 * b) % d + d) % d;
        if (current == points) return j;
    }
}

inline Vector random_vector(int l, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Vector v(static_cast<std::size_t>(2 * l + 1));
    double n2 = 0.0;
    for (auto& x : v) {
        x = {g(rng), g(rng)};
        n2 += std::norm(x);
    }
    for (auto& x : v) x /= std::sqrt(n2);
    return v;
}

/// Best |<model|target>|^2 over phi for model = (a + e^{i phi} b) / norm,
/// scanned on a fine uniform grid.
inline double two_packet_fidelity(const Vector& a, const Vector& b, const Vector& target) {
    const Complex A = dot(a, target);
    const Complex B = dot(b, target);
    const Complex S = dot(a, b);
    double best = 0.0;
    constexpr int kSteps = 1 << 16;
    for (int i = 0; i < kSteps; ++i) {
        const double phi = 2.0 * kPi * i / kSteps;
        const Complex e = std::exp(kI * phi);
        const double norm2 = 2.0 + 2.0 * std::real(e * S);
        if (norm2 <= 1e-14) continue;
        best = std::max(best, std::norm(A + std::conj(e) * B) / norm2);
    }
    return best;
}

/// c_m e^{-i m theta}: the state rotated rigidly by theta.
inline Vector rotate(const Vector& c, double theta) {
    const long l = (static_cast<long>(c.size()) - 1) / 2;
    Vector out(c.size());
    for (long m = -l; m <= l; ++m) out[m + l] = std::exp(-kI * double(m) * theta) * c[m + l];
    return out;
}

/// exp(-i tau m^2) applied with continuous tau.
inline Vector evolve_free(const Vector& c, double tau) {
    const long l = (static_cast<long>(c.size()) - 1) / 2;
    Vector out(c.size());
    for (long m = -l; m <= l; ++m) out[m + l] = std::exp(-kI * tau * double(m * m)) * c[m + l];
    return out;
}

}  // namespace oracle
