#include "adistab/symbol.hpp"

#include "adistab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace adistab {

double ScaledEigenvalues::sum() const noexcept
{
    double s = 0.0;
    for (double v : z)
        s += v;
    return s;
}

double ScaledEigenvalues::p(double theta) const noexcept
{
    double prod = 1.0;
    for (double v : z)
        prod *= 1.0 - theta * v;
    return prod;
}

std::vector<double> mesh_ratios(double dt, std::span<const double> dx)
{
    std::vector<double> r;
    r.reserve(dx.size());
    for (double h : dx)
        r.push_back(dt / (h * h));
    return r;
}

namespace {

// z values from precomputed sin(phi_j) and 1 - cos(phi_j).
ScaledEigenvalues eigen_from_trig(const DiffusionMatrix& d, const MixedStencilParams& beta,
                                  std::span<const double> r_diag, std::span<const double> sn,
                                  std::span<const double> omc)
{
    const std::size_t k = d.dim();
    ScaledEigenvalues zs;
    zs.z.resize(k);
    for (std::size_t j = 0; j < k; ++j)
        zs.z[j] = -2.0 * r_diag[j] * d(j, j) * omc[j];
    double z0 = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            const double dij = d(i, j);
            if (dij == 0.0)
                continue;
            const double rij = std::sqrt(r_diag[i] * r_diag[j]);
            z0 += 2.0 * rij * dij * (-sn[i] * sn[j] + beta(i, j) * omc[i] * omc[j]);
        }
    }
    zs.z0 = z0;
    return zs;
}

} // namespace

ScaledEigenvalues scaled_eigenvalues(const DiffusionMatrix& d, const MixedStencilParams& beta,
                                     std::span<const double> r_diag, std::span<const double> phi)
{
    const std::size_t k = d.dim();
    if (r_diag.size() != k || phi.size() != k || beta.dim() != k)
        throw StructuralError("scaled_eigenvalues: inputs must all have dimension k");
    std::vector<double> sn(k), omc(k);
    for (std::size_t j = 0; j < k; ++j) {
        sn[j] = std::sin(phi[j]);
        omc[j] = 1.0 - std::cos(phi[j]);
    }
    return eigen_from_trig(d, beta, r_diag, sn, omc);
}

double amplification(SchemeKind kind, double theta, const ScaledEigenvalues& zs)
{
    const double p = zs.p(theta);
    if (p == 0.0)
        throw DomainError("amplification: p = 0 (some z_j > 0)");
    const double z0 = zs.z0;
    const double w = z0 + zs.sum();
    const double q = w / p;
    const double p2 = p * p;
    switch (kind) {
    case SchemeKind::Douglas:
        return 1.0 + q;
    case SchemeKind::CraigSneyd:
        return 1.0 + q + 0.5 * z0 * w / p2;
    case SchemeKind::ModifiedCraigSneyd:
        return 1.0 + q + theta * z0 * w / p2 + (0.5 - theta) * w * w / p2;
    case SchemeKind::HundsdorferVerwer:
        return 1.0 + 2.0 * q - w / p2 + 0.5 * w * w / p2;
    }
    return 1.0;
}

Lemma1Report lemma1_check(const ScaledEigenvalues& zs, double gamma)
{
    double zmax = std::abs(zs.z0);
    for (double v : zs.z)
        zmax = std::max(zmax, std::abs(v));
    const double tol = 1e-12 * (1.0 + zmax);

    Lemma1Report rep;
    std::ostringstream diag;
    for (std::size_t j = 0; j < zs.dim(); ++j) {
        if (zs.z[j] > tol) {
            rep.nonpositive = false;
            diag << "z_" << j + 1 << " = " << zs.z[j] << " > 0; ";
        }
    }
    const double w = zs.z0 + zs.sum();
    if (w > tol) {
        rep.sum_nonpositive = false;
        diag << "z_0 + z = " << w << " > 0; ";
    }
    double cross = 0.0;
    for (std::size_t i = 0; i < zs.dim(); ++i)
        for (std::size_t j = 0; j < zs.dim(); ++j)
            if (i != j)
                cross += std::sqrt(std::max(0.0, zs.z[i] * zs.z[j]));
    if (std::abs(zs.z0) > gamma * cross + tol) {
        rep.mixed_bounded = false;
        diag << "|z_0| = " << std::abs(zs.z0) << " exceeds gamma * sum sqrt(z_i z_j) = "
             << gamma * cross << "; ";
    }
    rep.diagnostic = diag.str();
    return rep;
}

std::pair<bool, bool> hv_conditions(double theta, const ScaledEigenvalues& zs)
{
    const double p = zs.p(theta);
    const double w = zs.z0 + zs.sum();
    const double first = 2.0 * p * p + (2.0 * p - 1.0) * w + 0.5 * w * w;
    const double second = 2.0 * p - 1.0 + 0.5 * w;
    const double tol = 1e-12 * (1.0 + p * p + w * w);
    return {first >= -tol, second >= -1e-12 * (1.0 + p + std::abs(w))};
}

SweepSampling SweepSampling::uniform(std::size_t k, std::size_t n_phi, double rmin, double rmax,
                                     std::size_t rcount, bool anisotropic)
{
    if (n_phi == 0 || rcount == 0)
        throw DomainError("sweep sampling must be non-empty");
    if (!(rmin > 0.0) || rmax < rmin)
        throw DomainError("mesh-ratio range must satisfy 0 < rmin <= rmax");

    SweepSampling s;
    std::vector<double> phis;
    for (std::size_t i = 0; i < n_phi; ++i)
        phis.push_back(2.0 * std::numbers::pi * static_cast<double>(i) /
                       static_cast<double>(n_phi));
    if (n_phi % 2 == 1)
        phis.push_back(std::numbers::pi);
    s.angles.assign(k, phis);

    const double lo = std::log10(rmin), hi = std::log10(rmax);
    for (std::size_t i = 0; i < rcount; ++i) {
        const double t = rcount == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(rcount - 1);
        const double r = std::pow(10.0, lo + t * (hi - lo));
        s.ratios.push_back({r, std::vector<double>(k, r)});
        if (anisotropic) {
            for (std::size_t j = 0; j < k; ++j) {
                std::vector<double> diag(k, r);
                diag[j] = 4.0 * r;
                s.ratios.push_back({r, std::move(diag)});
            }
        }
    }
    return s;
}

std::size_t SweepSampling::size() const noexcept
{
    std::size_t n = ratios.size();
    for (const auto& a : angles)
        n *= a.size();
    return n;
}

SweepResult stability_sweep(SchemeKind kind, double theta, const DiffusionMatrix& d,
                            const MixedStencilParams& beta, const SweepSampling& sampling,
                            const std::function<void(const SweepSample&)>& visit)
{
    const std::size_t k = d.dim();
    if (sampling.dim() != k)
        throw StructuralError("sweep sampling dimension differs from D");
    if (sampling.size() == 0)
        throw DomainError("sweep sampling is empty");

    std::vector<std::vector<double>> sn(k), omc(k);
    for (std::size_t j = 0; j < k; ++j) {
        for (double phi : sampling.angles[j]) {
            sn[j].push_back(std::sin(phi));
            omc[j].push_back(1.0 - std::cos(phi));
        }
    }

    SweepResult res;
    res.max_abs_m = -1.0;
    std::vector<std::size_t> idx(k, 0);
    std::vector<double> s(k), c(k);
    SweepSample sample;
    sample.phi.resize(k);
    std::size_t counter = 0;

    for (const auto& ratio : sampling.ratios) {
        std::fill(idx.begin(), idx.end(), 0);
        while (true) {
            for (std::size_t j = 0; j < k; ++j) {
                s[j] = sn[j][idx[j]];
                c[j] = omc[j][idx[j]];
            }
            const double m = std::abs(amplification(kind, theta,
                                                    eigen_from_trig(d, beta, ratio.r_diag, s, c)));
            if (m > res.max_abs_m) {
                res.max_abs_m = m;
                res.argmax_index = counter;
                res.witness_ratio = ratio;
                res.witness_phi.resize(k);
                for (std::size_t j = 0; j < k; ++j)
                    res.witness_phi[j] = sampling.angles[j][idx[j]];
            }
            if (visit) {
                sample.index = counter;
                sample.ratio = &ratio;
                for (std::size_t j = 0; j < k; ++j)
                    sample.phi[j] = sampling.angles[j][idx[j]];
                sample.abs_m = m;
                visit(sample);
            }
            ++counter;

            std::size_t j = 0;
            while (j < k && ++idx[j] == sampling.angles[j].size())
                idx[j++] = 0;
            if (j == k)
                break;
        }
    }
    res.samples = counter;
    res.stable = res.max_abs_m <= 1.0 + kStabilityTolerance;
    return res;
}

} // namespace adistab
