#pragma once

#include "adistab/adi.hpp"
#include "adistab/model.hpp"

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace adistab {

/// Fourier-symbol values z_0 (mixed part) and z_1..z_k of the split
/// operators, already scaled by dt.
struct ScaledEigenvalues
{
    double z0 = 0.0;
    std::vector<double> z;  // z_1..z_k

    std::size_t dim() const noexcept { return z.size(); }
    /// z_1 + ... + z_k
    double sum() const noexcept;
    /// (1 - theta z_1) ... (1 - theta z_k)
    double p(double theta) const noexcept;
};

/// Diagonal mesh ratios r_jj = dt / dx_j^2; off-diagonal r_ij = sqrt(r_ii r_jj).
std::vector<double> mesh_ratios(double dt, std::span<const double> dx);

/// z_0 = sum_{i!=j} r_ij d_ij [-sin phi_i sin phi_j + beta_ij (1-cos phi_i)(1-cos phi_j)]
/// z_j = -2 r_jj d_jj (1 - cos phi_j)
ScaledEigenvalues scaled_eigenvalues(const DiffusionMatrix& d, const MixedStencilParams& beta,
                                     std::span<const double> r_diag, std::span<const double> phi);

/// One-step amplification factor M(z_0, ..., z_k): R (Do), S~ (CS), S (MCS), T (HV).
double amplification(SchemeKind kind, double theta, const ScaledEigenvalues& zs);

struct Lemma1Report
{
    bool nonpositive = true;      // z_j <= 0, j >= 1
    bool sum_nonpositive = true;  // z_0 + z <= 0
    bool mixed_bounded = true;    // |z_0| <= gamma sum_{i!=j} sqrt(z_i z_j)
    std::string diagnostic;

    bool ok() const noexcept { return nonpositive && sum_nonpositive && mixed_bounded; }
    explicit operator bool() const noexcept { return ok(); }
};

/// Structural properties of the scaled eigenvalues, each checked with
/// tolerance 1e-12 (1 + max|z|). Realness holds by construction.
Lemma1Report lemma1_check(const ScaledEigenvalues& zs, double gamma);

/// The two HV stability conditions
///   2p^2 + (2p-1)(z_0+z) + (z_0+z)^2 / 2 >= 0   and   2p - 1 + (z_0+z)/2 >= 0.
std::pair<bool, bool> hv_conditions(double theta, const ScaledEigenvalues& zs);

struct MeshRatioSample
{
    double r = 0.0;              // base ratio dt / dx^2
    std::vector<double> r_diag;  // per-direction r_jj
};

struct SweepSampling
{
    std::vector<std::vector<double>> angles;  // candidate phi per direction
    std::vector<MeshRatioSample> ratios;

    /// n_phi uniform angles 2 pi i / n_phi per direction (pi appended when
    /// n_phi is odd) and rcount log-uniform ratios in [rmin, rmax]. With
    /// `anisotropic`, each r also contributes every variant that scales one
    /// direction by 4.
    static SweepSampling uniform(std::size_t k, std::size_t n_phi, double rmin = 1e-2,
                                 double rmax = 1e6, std::size_t rcount = 25,
                                 bool anisotropic = false);

    std::size_t dim() const noexcept { return angles.size(); }
    std::size_t size() const noexcept;
};

struct SweepSample
{
    std::size_t index = 0;  // position in sample order (ratio outer, angles first-fastest)
    const MeshRatioSample* ratio = nullptr;
    std::vector<double> phi;
    double abs_m = 0.0;
};

struct SweepResult
{
    double max_abs_m = 0.0;
    std::size_t argmax_index = 0;
    MeshRatioSample witness_ratio;
    std::vector<double> witness_phi;
    std::size_t samples = 0;
    bool stable = true;  // max_abs_m <= 1 + 1e-12
};

inline constexpr double kStabilityTolerance = 1e-12;

/// Sampled von Neumann check: max |M| over every (ratio, angle) sample.
/// Ties keep the earliest sample. `visit`, when set, sees every sample.
SweepResult stability_sweep(SchemeKind kind, double theta, const DiffusionMatrix& d,
                            const MixedStencilParams& beta, const SweepSampling& sampling,
                            const std::function<void(const SweepSample&)>& visit = {});

} // namespace adistab
