#pragma once

#include <vector>

#include "nfbeam/special.hpp"

namespace nfbeam {

// Effective reciprocal separation between an observation range r and focal
// range r_f. The linear-array form carries a factor 1/2 relative to the
// radial (ring/planar) form; each closed form below uses its own convention.
double r_eff_linear(double r_m, double rf_m);  // |r - rf| / (2 r rf)
double r_eff_radial(double r_m, double rf_m);  // |r - rf| / (r rf)

// Dimensionless arguments of the closed forms.
double gamma_linear(int count, double spacing_m, double wavelength_m, double r_m, double rf_m,
                    double azimuth_rad = 0.0);
double gamma_planar(int count_axis, double spacing_m, double wavelength_m, double beta_axis,
                    double r_m, double rf_m);
double zeta_ring(double rayleigh_m, double r_m, double rf_m, double sin_elevation = 1.0);
double xi_rings(double rayleigh_m, double r_m, double rf_m);

// Focused-gain approximations, normalized to 1 at the focus.
double gain_ula_closed(double gamma);                  // (C^2 + S^2) / gamma^2
double gain_ura_closed(double gamma1, double gamma2);  // product of two linear ratios
double gain_uca_closed(double zeta);                   // |J0(zeta)|^2
double gain_ucca_closed(double xi);                    // |sin(xi/2) / (xi/2)|^2

// Finite concentric-ring sum: coherent combination of per-ring Bessel terms.
// Reduces to gain_uca_closed for rings == 1 and approaches gain_ucca_closed
// at boresight as the ring count grows. elevation_rad is measured from the
// ring-plane normal.
double gain_ucca_ringsum(int rings, int outer_count, double outer_radius_m, double wavelength_m,
                         double r_m, double rf_m, double elevation_rad = 0.0);

struct peak_location {
    double argument = 0.0;  // dimensionless abscissa of the first sidelobe peak
    double gain = 0.0;      // gain at the peak (mainlobe gain is 1)
};

// First-sidelobe peaks of the closed forms, found by bracketing the
// derivative sign change beyond the first null and bisecting.
peak_location psll_location_ula();
peak_location psll_location_uca();
peak_location psll_location_ucca();

struct eta_psll_point {
    double eta_hat = 0.0;
    double psll_db = 0.0;
};

// Peak sidelobe level of the planar product form as a function of the
// width-to-height argument ratio eta_hat = gamma2/gamma1, swept over gamma1.
std::vector<eta_psll_point> psll_vs_eta_sweep(const std::vector<double>& eta_grid);

}  // namespace nfbeam
