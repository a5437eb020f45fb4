#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "geofd/types.hpp"

namespace geofd::dgp {

// Configuration shared by all synthetic data generating processes. `params`
// holds DGP-specific knobs; each generator validates the keys it accepts.
struct DgpConfig {
    std::string name;
    int n = 100;
    double r = 0.1; // outlier ratio, capped at 0.1
    int m = 50;
    std::uint64_t seed = 0;
    std::map<std::string, double> params;
};

// Number of labeled outliers: round(r*n), half away from zero.
int outlier_count(const DgpConfig& cfg);

// Shape-induced structure: inliers b + 0.05t + cos(20*pi*t) with
// b ~ N(5, 3); outliers a + 0.05t + sin(pi*t^2) with a ~ N(5, 4); t in [0,1].
FunctionalDataset gen_taxonomy_shape(const DgpConfig& cfg);

// Beta-density manifold with vertical shifts: inliers Beta(th1, th2)
// densities with th1, th2 ~ U[1,2]; outliers additionally shifted by
// th3 ~ U[0, 0.5]; t in [0,1].
FunctionalDataset gen_beta_shift(const DgpConfig& cfg);

enum class PhaseCase { I, II, III };

// Amplitude/phase scenarios built from scaled shifted Gaussian bumps on
// [-4, 4]. Case I is a single manifold (labels all false, r ignored);
// Cases II/III add structurally shifted outliers.
FunctionalDataset gen_phase_case(PhaseCase c, const DgpConfig& cfg);

// Elastically warped random B-spline templates (variant 3: 15 basis
// functions, inlier warps Beta(a,b) ECDF with a,b ~ U[4,6], outliers
// a,b ~ U[3,4], noise sd 0.1; variant 4: 25 basis functions, inliers
// a,b ~ U[3,8], outliers 50:50 mixture ECDF with components from U[3,8]
// and U[0.1,3], noise sd 0.15).
FunctionalDataset gen_dgp_templates(int variant, const DgpConfig& cfg);

enum class SimModel { Shift, Isolated, Shape };

// Linear-trend processes 4t + e(t) with exp(-|s-t|) Gaussian noise.
// Shift: outliers 4t +/- 8; Isolated: spike of height +/-6 on a random
// subinterval of length 0.04; Shape: outliers 4t + 2 sin(4*pi*t + u).
// Accepts param "level_sd" adding N(0, level_sd) vertical shifts to every
// observation.
FunctionalDataset gen_sim_model(SimModel id, const DgpConfig& cfg);

// Mixture DGPs: inliers from the Shift model's inlier process; variant 1
// splits outliers 50:50 between shift and shape forms, variant 2 draws each
// outlier's kind uniformly from {shift, isolated, shape}. Kinds are recorded
// in meta["outlier_kinds"].
FunctionalDataset gen_dgp_mixture(int variant, const DgpConfig& cfg);

// Dispatch by cfg.name; see dgp_names() for the accepted identifiers.
FunctionalDataset generate(const DgpConfig& cfg);

const std::vector<std::string>& dgp_names();

} // namespace geofd::dgp
