#pragma once

#include <optional>

#include "apollonian/types.hpp"

namespace apollonian {

using Tensor3 = std::array<std::array<std::array<double, 2>, 2>, 2>;

/// Levi-Civita symbols of alpha, gamma[k][i][j] = Gamma^k_ij.
struct ChristoffelSymbols {
    Tensor3 gamma;

    double operator()(int k, int i, int j) const { return gamma[k][i][j]; }
};

/// Covariant derivatives of beta with respect to alpha and the tensors
/// built from them. For the Apollonian structure beta is closed, so s, s_mixed
/// and s_low vanish and e = r = b_cov.
struct BetaDerivatives {
    Mat2 b_cov;       // b_{i|j}
    Mat2 r;           // symmetric part
    Mat2 s;           // antisymmetric part
    Mat2 s_mixed;     // s^i_j = a^{ih} s_hj
    Vec2 s_low;       // s_j = b_i s^i_j
    Mat2 e;           // r_ij + b_i s_j + b_j s_i
    Tensor3 b_cov2;   // b_{i|j|k}
};

/// G = g_bar + p_scalar xi + q_vec.
struct SprayCoefficients {
    Vec2 g_spray;
    Vec2 g_bar;
    double p_scalar;
    Vec2 q_vec;
};

/// Switches of the curvature engine. The defaults describe the Apollonian
/// structure with the closed-form conventions used by ricci() and
/// flag_curvature().
struct RandersModel {
    // false drops the 1-form everywhere, leaving the Riemannian norm alpha.
    bool with_beta = true;
    // Gaussian curvature assigned to alpha in the closed Riemann route,
    // R-bar^i_k = K_alpha (delta^i_k alpha^2 - alpha alpha_k xi^i).
    // Note: the conformal metric |xi| / (1 - |x|^2) actually has curvature
    // kAlphaGaussianCurvature; the default reproduces the closed forms of
    // ricci() and flag_curvature(), and the numeric route disagrees with it.
    double alpha_curvature = -1.0;
    // Fault injection for validation runs: negates tau_k.
    bool flip_tau_sign = false;
};

/// Gaussian curvature of |xi| / (1 - |x|^2): -e^{-2u} Lap(u) with
/// u = -log(1 - |x|^2).
inline constexpr double kAlphaGaussianCurvature = -4.0;

enum class SCurvatureRoute { closed, general, spray };
enum class RiemannRoute { closed, numeric };

struct PhiPsiTau {
    double phi;       // b_{i|j} xi^i xi^j
    double psi;       // b_{i|j|k} xi^i xi^j xi^k
    Vec2 tau;         // (b_{i|j|k} - b_{i|k|j}) xi^i xi^j / F, from b_cov2
    Vec2 tau_closed;  // 4 [|xi|^2 x^k - <x, xi> xi^k] / (F (1 - |x|^2)^3)
};

struct CurvatureReport {
    double f_value;
    double s_curv;                 // closed route
    double s_general;
    std::optional<double> s_spray; // |x| <= 0.95 only
    Mat2 riemann;                  // closed route under the model
    std::optional<Mat2> riemann_numeric;  // |x| <= 0.9 only
    Mat2 riemann_bar;
    double ricci;                  // trace of the closed Riemann matrix
    double flag;                   // ricci / F^2
    std::optional<double> flag_numeric;
    double phi;
    double psi;
    Vec2 tau;
    double rho_log;                // log sqrt(1 - ||beta||_alpha^2)
    double rho_0;                  // rho_{x^i} xi^i
    double sigma_bh;
    double distortion;
};

/// Gamma^k_ij = 2 (delta_ki x^j + delta_kj x^i - delta_ij x^k) / (1 - |x|^2).
ChristoffelSymbols christoffel(const DiscPoint& x);

BetaDerivatives beta_derivatives(const DiscPoint& x);

/// Closed-form spray G^i = [2 xi^i <x,xi> - |xi|^2 x^i]/(1 - |x|^2) + P xi^i,
/// P = [(1 + |x|^2)|xi|^2 - 2<x,xi>^2] / (2 F (1 - |x|^2)^2).
SprayCoefficients spray_closed(const DiscPoint& x, TangentVector xi, const RandersModel& model = {});

/// G^i = 1/4 g^{il} ([F^2]_{x^k xi^l} xi^k - [F^2]_{x^l}) with every
/// derivative of F^2 taken by finite differences. g_bar and P are not
/// separated in this route; only g_spray is filled. |x| <= 0.95.
SprayCoefficients spray_numeric(const DiscPoint& x, TangentVector xi);

/// Busemann-Hausdorff density (1 - ||beta||^2)^{3/2} sqrt(det a), which is
/// (1 - |x|^2)^{-1/2} here.
double bh_density(const DiscPoint& x);

/// log(sqrt(det g) / sigma_BH).
double distortion(const DiscPoint& x, TangentVector xi);

/// closed: 3|xi| [(1 + |x|^2)|xi| + 2<x,xi>] / (2 F (1 - |x|^2)^2).
/// general: 3 [e_00 / (2F) - (s_0 + rho_0)].
/// spray: dG^m/dxi^m - xi^m d(log sigma_BH)/dx^m by finite differences,
/// |x| <= 0.95.
double s_curvature(const DiscPoint& x, TangentVector xi, SCurvatureRoute route = SCurvatureRoute::closed);

PhiPsiTau phi_psi_tau(const DiscPoint& x, TangentVector xi, const RandersModel& model = {});

/// closed: R-bar + [3 (phi/2F)^2 - psi/2F](delta - F_k xi^i / F) + tau_k xi^i.
/// numeric: finite differences of spray_closed in
///   R^i_k = 2 dG^i/dx^k - xi^j d2G^i/dx^j dxi^k + 2 G^j d2G^i/dxi^j dxi^k
///           - dG^i/dxi^j dG^j/dxi^k,
/// |x| <= 0.9. Returns m[i][k] = R^i_k.
Mat2 riemann_curvature(const DiscPoint& x, TangentVector xi, RiemannRoute route = RiemannRoute::closed,
                       const RandersModel& model = {});

/// Explicit quartic in (|xi|, <x,xi>) over 4 F^2 (1 - |x|^2)^4.
double ricci(const DiscPoint& x, TangentVector xi);

/// ricci / F^2.
double flag_curvature(const DiscPoint& x, TangentVector xi);

CurvatureReport curvature_report(const DiscPoint& x, TangentVector xi, const RandersModel& model = {});

}  // namespace apollonian
