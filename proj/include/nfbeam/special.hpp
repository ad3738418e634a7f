#pragma once

namespace nfbeam {

struct fresnel_pair {
    double c = 0.0;
    double s = 0.0;
};

// Fresnel integrals C(x) = int_0^x cos(pi t^2 / 2) dt and
// S(x) = int_0^x sin(pi t^2 / 2) dt. Power series below |x| ~ 1.6, rational
// auxiliary-function asymptotics above; absolute error under 1e-14 for
// |x| <= 50.
fresnel_pair fresnel(double x);

// Bessel function of the first kind, order zero. Power series for |x| <= 8,
// amplitude-phase asymptotic form above; absolute error under 1e-10 for
// |x| <= 1000.
double bessel_j0(double x);

}  // namespace nfbeam
