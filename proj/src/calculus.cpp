#include "apollonian/calculus.hpp"

#include "apollonian/finsler.hpp"
#include "apollonian/numdiff.hpp"

namespace apollonian {

namespace {

constexpr int kDim = 2;

double delta(int i, int j) { return i == j ? 1.0 : 0.0; }

void require_radius(const DiscPoint& x, double cap, const char* what)
{
    if (!detail::within_radius(x.vec(), cap)) {
        throw DomainError(std::string(what) + ": numeric route is limited to |x| <= " + std::to_string(cap));
    }
}

SprayCoefficients spray_raw(Vec2 x, Vec2 xi, const RandersModel& model)
{
    const double gap = 1.0 - norm_sq(x);
    const double xi_sq = norm_sq(xi);
    const double x_xi = dot(x, xi);

    SprayCoefficients out{};
    for (int i = 0; i < kDim; ++i) {
        out.g_bar[i] = (2.0 * xi[i] * x_xi - xi_sq * x[i]) / gap;
    }
    if (model.with_beta) {
        const double f = detail::finsler_norm_raw(x, xi);
        out.p_scalar = ((1.0 + norm_sq(x)) * xi_sq - 2.0 * x_xi * x_xi) / (2.0 * f * gap * gap);
    }
    // beta is closed, so Q^i = alpha s^i_0 vanishes.
    out.q_vec = {0.0, 0.0};
    out.g_spray = out.g_bar + out.p_scalar * xi + out.q_vec;
    return out;
}

double bh_density_raw(Vec2 x)
{
    const double gap = 1.0 - norm_sq(x);
    const double beta_sq = gap * gap * norm_sq(x / gap);
    const double sqrt_det_a = 1.0 / (gap * gap);
    return std::pow(1.0 - beta_sq, 1.5) * sqrt_det_a;
}

numdiff::Point<4> pack(Vec2 x, Vec2 xi) { return {x.x, x.y, xi.x, xi.y}; }

}  // namespace

ChristoffelSymbols christoffel(const DiscPoint& x)
{
    const Vec2 p = x.vec();
    const double gap = x.gap();
    ChristoffelSymbols out{};
    for (int k = 0; k < kDim; ++k) {
        for (int i = 0; i < kDim; ++i) {
            for (int j = 0; j < kDim; ++j) {
                out.gamma[k][i][j] = 2.0 * (delta(k, i) * p[j] + delta(k, j) * p[i] - delta(i, j) * p[k]) / gap;
            }
        }
    }
    return out;
}

BetaDerivatives beta_derivatives(const DiscPoint& x)
{
    const Vec2 p = x.vec();
    const double gap = x.gap();
    const double r_sq = x.norm_sq();
    const Vec2 b = one_form(x);
    const ChristoffelSymbols gamma = christoffel(x);

    BetaDerivatives out{};
    // b_{i|j} = [(1 + |x|^2) delta_ij - 2 x^i x^j] / (1 - |x|^2)^2
    auto numerator = [&](int i, int j) { return (1.0 + r_sq) * delta(i, j) - 2.0 * p[i] * p[j]; };
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) {
            out.b_cov[i][j] = numerator(i, j) / (gap * gap);
        }
    }

    const double a_inverse = gap * gap;  // a^{ij} = (1 - |x|^2)^2 delta^{ij}
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) {
            out.r[i][j] = 0.5 * (out.b_cov[i][j] + out.b_cov[j][i]);
            out.s[i][j] = 0.5 * (out.b_cov[i][j] - out.b_cov[j][i]);
            out.s_mixed[i][j] = a_inverse * out.s[i][j];
        }
    }
    for (int j = 0; j < kDim; ++j) {
        out.s_low[j] = b[0] * out.s_mixed[0][j] + b[1] * out.s_mixed[1][j];
    }
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) {
            out.e[i][j] = out.r[i][j] + b[i] * out.s_low[j] + b[j] * out.s_low[i];
        }
    }

    // d/dx^k b_{i|j} = dN_ij/dx^k / gap^2 + 4 x^k N_ij / gap^3, with
    // dN_ij/dx^k = 2 x^k delta_ij - 2 delta_ik x^j - 2 x^i delta_jk.
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) {
            for (int k = 0; k < kDim; ++k) {
                const double d_num = 2.0 * p[k] * delta(i, j) - 2.0 * delta(i, k) * p[j] - 2.0 * p[i] * delta(j, k);
                double value = d_num / (gap * gap) + 4.0 * p[k] * numerator(i, j) / (gap * gap * gap);
                for (int m = 0; m < kDim; ++m) {
                    value -= out.b_cov[i][m] * gamma(m, j, k) + out.b_cov[j][m] * gamma(m, i, k);
                }
                out.b_cov2[i][j][k] = value;
            }
        }
    }
    return out;
}

SprayCoefficients spray_closed(const DiscPoint& x, TangentVector xi, const RandersModel& model)
{
    detail::require_nonzero(xi, "spray_closed");
    return spray_raw(x.vec(), xi, model);
}

SprayCoefficients spray_numeric(const DiscPoint& x, TangentVector xi)
{
    detail::require_nonzero(xi, "spray_numeric");
    require_radius(x, 0.95, "spray_numeric");

    auto f_sq = [](const numdiff::Point<4>& q) {
        const double f = detail::finsler_norm_raw({q[0], q[1]}, {q[2], q[3]});
        return f * f;
    };
    const numdiff::Point<4> p = pack(x.vec(), xi);
    const double hx = detail::base_step(x.vec());
    const double hv = detail::tangent_step(xi);

    Mat2 g{};
    for (int i = 0; i < kDim; ++i) {
        for (int j = 0; j < kDim; ++j) {
            g[i][j] = 0.5 * numdiff::second_partial<4>(f_sq, p, 2 + i, 2 + j, hv, hv);
        }
    }
    const double g_det = det(g);
    const Mat2 g_inv{{{g[1][1] / g_det, -g[0][1] / g_det}, {-g[1][0] / g_det, g[0][0] / g_det}}};

    Vec2 bracket{};
    for (int l = 0; l < kDim; ++l) {
        double value = -numdiff::partial<4>(f_sq, p, l, hx);
        for (int k = 0; k < kDim; ++k) {
            value += numdiff::second_partial<4>(f_sq, p, k, 2 + l, hx, hv) * xi[k];
        }
        bracket[l] = value;
    }

    SprayCoefficients out{};
    out.g_spray = 0.25 * apply(g_inv, bracket);
    return out;
}

double bh_density(const DiscPoint& x)
{
    return bh_density_raw(x.vec());
}

double distortion(const DiscPoint& x, TangentVector xi)
{
    const FundamentalTensor g = fundamental_tensor(x, xi, TensorMode::closed);
    return std::log(std::sqrt(g.determinant()) / bh_density(x));
}

double s_curvature(const DiscPoint& x, TangentVector xi, SCurvatureRoute route)
{
    detail::require_nonzero(xi, "s_curvature");
    const double f = finsler_norm(x, xi);
    const double gap = x.gap();

    switch (route) {
    case SCurvatureRoute::closed: {
        const double len = norm(xi);
        return 3.0 * len * ((1.0 + x.norm_sq()) * len + 2.0 * dot(x.vec(), xi)) / (2.0 * f * gap * gap);
    }
    case SCurvatureRoute::general: {
        const BetaDerivatives bd = beta_derivatives(x);
        double e00 = 0.0;
        for (int i = 0; i < kDim; ++i) {
            for (int j = 0; j < kDim; ++j) {
                e00 += bd.e[i][j] * xi[i] * xi[j];
            }
        }
        const double s0 = dot(bd.s_low, xi);
        // rho = 1/2 log(1 - |x|^2), rho_i = -x^i / (1 - |x|^2)
        const double rho0 = -dot(x.vec(), xi) / gap;
        return (kDim + 1) * (e00 / (2.0 * f) - (s0 + rho0));
    }
    case SCurvatureRoute::spray: {
        require_radius(x, 0.95, "s_curvature");
        const RandersModel model;
        const numdiff::Point<4> p = pack(x.vec(), xi);
        const double hx = detail::base_step(x.vec());
        const double hv = detail::tangent_step(xi);
        double divergence = 0.0;
        for (int m = 0; m < kDim; ++m) {
            auto component = [m, &model](const numdiff::Point<4>& q) {
                return spray_raw({q[0], q[1]}, {q[2], q[3]}, model).g_spray[m];
            };
            divergence += numdiff::partial<4>(component, p, 2 + m, hv);
        }
        auto log_sigma = [](const numdiff::Point<2>& q) { return std::log(bh_density_raw({q[0], q[1]})); };
        const numdiff::Point<2> base{x.x1(), x.x2()};
        double transport = 0.0;
        for (int m = 0; m < kDim; ++m) {
            transport += xi[m] * numdiff::partial<2>(log_sigma, base, m, hx);
        }
        return divergence - transport;
    }
    }
    throw std::invalid_argument("s_curvature: unknown route");
}

PhiPsiTau phi_psi_tau(const DiscPoint& x, TangentVector xi, const RandersModel& model)
{
    detail::require_nonzero(xi, "phi_psi_tau");
    PhiPsiTau out{};
    if (!model.with_beta) {
        return out;
    }
    const RandersSplit split = randers_split(x, xi);
    const double r_sq = x.norm_sq();
    const double a = split.alpha;
    const double b = split.beta;
    out.phi = (1.0 + r_sq) * a * a - 2.0 * b * b;
    out.psi = -2.0 * (1.0 + 3.0 * r_sq) * a * a * b + 8.0 * b * b * b;

    const BetaDerivatives bd = beta_derivatives(x);
    for (int k = 0; k < kDim; ++k) {
        double sum = 0.0;
        for (int i = 0; i < kDim; ++i) {
            for (int j = 0; j < kDim; ++j) {
                sum += (bd.b_cov2[i][j][k] - bd.b_cov2[i][k][j]) * xi[i] * xi[j];
            }
        }
        out.tau[k] = sum / split.f_value;
    }
    const double gap = x.gap();
    const double scale = 4.0 / (split.f_value * gap * gap * gap);
    out.tau_closed = scale * (norm_sq(xi) * x.vec() - dot(x.vec(), xi) * xi);
    if (model.flip_tau_sign) {
        out.tau = -out.tau;
    }
    return out;
}

Mat2 riemann_curvature(const DiscPoint& x, TangentVector xi, RiemannRoute route, const RandersModel& model)
{
    detail::require_nonzero(xi, "riemann_curvature");
    Mat2 out{};

    if (route == RiemannRoute::closed) {
        const RandersSplit split = randers_split(x, xi);
        const double alpha = split.alpha;
        const double f = model.with_beta ? split.f_value : alpha;
        const double gap = x.gap();
        const Vec2 b = model.with_beta ? one_form(x) : Vec2{};
        const Vec2 alpha_alpha_k = xi / (gap * gap);      // alpha * dalpha/dxi^k
        const Vec2 f_k = alpha_alpha_k / alpha + b;         // dF/dxi^k
        const PhiPsiTau ppt = phi_psi_tau(x, xi, model);
        const double shape = 3.0 * std::pow(ppt.phi / (2.0 * f), 2) - ppt.psi / (2.0 * f);
        for (int i = 0; i < kDim; ++i) {
            for (int k = 0; k < kDim; ++k) {
                const double r_bar = model.alpha_curvature * (delta(i, k) * alpha * alpha - alpha_alpha_k[k] * xi[i]);
                out[i][k] = r_bar + shape * (delta(i, k) - f_k[k] * xi[i] / f) + ppt.tau[k] * xi[i];
            }
        }
        return out;
    }

    require_radius(x, 0.9, "riemann_curvature");
    const numdiff::Point<4> p = pack(x.vec(), xi);
    const double hx = detail::base_step(x.vec());
    const double hv = detail::tangent_step(xi);
    const Vec2 g = spray_raw(x.vec(), xi, model).g_spray;

    std::array<numdiff::Point<4>, kDim> d1{};   // d1[i][a] = dG^i/dp_a
    std::array<std::array<std::array<double, 4>, 4>, kDim> d2{};  // d2[i][a][c]
    for (int i = 0; i < kDim; ++i) {
        auto component = [i, &model](const numdiff::Point<4>& q) {
            return spray_raw({q[0], q[1]}, {q[2], q[3]}, model).g_spray[i];
        };
        auto step = [&](std::size_t a) { return a < 2 ? hx : hv; };
        for (std::size_t a = 0; a < 4; ++a) {
            d1[i][a] = numdiff::partial<4>(component, p, a, step(a));
        }
        for (std::size_t a = 0; a < 2; ++a) {
            for (std::size_t c = 2; c < 4; ++c) {
                d2[i][a][c] = numdiff::second_partial<4>(component, p, a, c, step(a), step(c));
            }
        }
        for (std::size_t a = 2; a < 4; ++a) {
            for (std::size_t c = a; c < 4; ++c) {
                d2[i][a][c] = numdiff::second_partial<4>(component, p, a, c, step(a), step(c));
                d2[i][c][a] = d2[i][a][c];
            }
        }
    }
    for (int i = 0; i < kDim; ++i) {
        for (int k = 0; k < kDim; ++k) {
            double value = 2.0 * d1[i][k];
            for (int j = 0; j < kDim; ++j) {
                value -= xi[j] * d2[i][j][2 + k];
                value += 2.0 * g[j] * d2[i][2 + j][2 + k];
                value -= d1[i][2 + j] * d1[j][2 + k];
            }
            out[i][k] = value;
        }
    }
    return out;
}

double ricci(const DiscPoint& x, TangentVector xi)
{
    detail::require_nonzero(xi, "ricci");
    const double r_sq = x.norm_sq();
    const double len = norm(xi);
    const double c = dot(x.vec(), xi);
    const double gap = x.gap();
    const double f = finsler_norm(x, xi);
    const double numerator = (3.0 * (1.0 + r_sq) * (1.0 + r_sq) - 4.0) * std::pow(len, 4)
                             + (12.0 * r_sq - 4.0) * std::pow(len, 3) * c
                             - 12.0 * len * len * c * c
                             - 16.0 * len * c * c * c
                             - 4.0 * std::pow(c, 4);
    return numerator / (4.0 * f * f * std::pow(gap, 4));
}

double flag_curvature(const DiscPoint& x, TangentVector xi)
{
    const double f = finsler_norm(x, xi);
    return ricci(x, xi) / (f * f);
}

CurvatureReport curvature_report(const DiscPoint& x, TangentVector xi, const RandersModel& model)
{
    detail::require_nonzero(xi, "curvature_report");
    CurvatureReport out{};
    const RandersSplit split = randers_split(x, xi);
    out.f_value = model.with_beta ? split.f_value : split.alpha;
    const double f_sq = out.f_value * out.f_value;

    if (model.with_beta) {
        out.s_curv = s_curvature(x, xi, SCurvatureRoute::closed);
        out.s_general = s_curvature(x, xi, SCurvatureRoute::general);
        if (detail::within_radius(x.vec(), 0.95)) {
            out.s_spray = s_curvature(x, xi, SCurvatureRoute::spray);
        }
    }

    out.riemann = riemann_curvature(x, xi, RiemannRoute::closed, model);
    const double alpha = split.alpha;
    const double gap = x.gap();
    for (int i = 0; i < kDim; ++i) {
        for (int k = 0; k < kDim; ++k) {
            out.riemann_bar[i][k] = model.alpha_curvature * (delta(i, k) * alpha * alpha - xi[k] * xi[i] / (gap * gap));
        }
    }
    out.ricci = trace(out.riemann);
    out.flag = out.ricci / f_sq;
    if (detail::within_radius(x.vec(), 0.9)) {
        out.riemann_numeric = riemann_curvature(x, xi, RiemannRoute::numeric, model);
        out.flag_numeric = trace(*out.riemann_numeric) / f_sq;
    }

    const PhiPsiTau ppt = phi_psi_tau(x, xi, model);
    out.phi = ppt.phi;
    out.psi = ppt.psi;
    out.tau = ppt.tau;
    out.rho_log = model.with_beta ? 0.5 * std::log(1.0 - beta_norm_sq(x)) : 0.0;
    out.rho_0 = model.with_beta ? -dot(x.vec(), xi) / gap : 0.0;
    out.sigma_bh = bh_density(x);
    out.distortion = distortion(x, xi);
    return out;
}

}  // namespace apollonian
