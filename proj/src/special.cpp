#include "nfbeam/special.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>

namespace nfbeam {

namespace {

template <std::size_t N>
double polevl(double x, const std::array<double, N>& coeffs) {
    double result = coeffs[0];
    for (std::size_t i = 1; i < N; ++i) {
        result = result * x + coeffs[i];
    }
    return result;
}

// Same as polevl with an implicit leading coefficient of 1.
template <std::size_t N>
double p1evl(double x, const std::array<double, N>& coeffs) {
    double result = x + coeffs[0];
    for (std::size_t i = 1; i < N; ++i) {
        result = result * x + coeffs[i];
    }
    return result;
}

// Rational approximations for the Fresnel integrals (Cephes, double precision).
constexpr std::array<double, 6> kFresnelSN = {
    -2.99181919401019853726E3, 7.08840045257738576863E5,  -6.29741486205862506537E7,
    2.54890880573376359104E9,  -4.42979518059697779103E10, 3.18016297876567817986E11,
};
constexpr std::array<double, 6> kFresnelSD = {
    2.81376268889994315696E2, 4.55847810806532581675E4,  5.17343888770096400730E6,
    4.19320245898111231129E8, 2.24411795645340920940E10, 6.07366389490084639049E11,
};
constexpr std::array<double, 6> kFresnelCN = {
    -4.98843114573573548651E-8, 9.50428062829859605134E-6, -6.45191435683965050962E-4,
    1.88843319396703850064E-2,  -2.05525900955013891793E-1, 9.99999999999999998822E-1,
};
constexpr std::array<double, 7> kFresnelCD = {
    3.99982968972495980367E-12, 9.15439215774657478799E-10, 1.25001862479598821474E-7,
    1.22262789024179030997E-5,  8.68029542941784300606E-4,  4.12142090722199792936E-2,
    1.00000000000000000118E0,
};
constexpr std::array<double, 10> kFresnelFN = {
    4.21543555043677546506E-1,  1.43407919780758885261E-1,  1.15220955073585758835E-2,
    3.45017939782574027900E-4,  4.63613749287867322088E-6,  3.05568983790257605827E-8,
    1.02304514164907233465E-10, 1.72010743268161828879E-13, 1.34283276233062758925E-16,
    3.76329711269987889006E-20,
};
constexpr std::array<double, 10> kFresnelFD = {
    7.51586398353378947175E-1,  1.16888925859191382142E-1,  6.44051526508858611005E-3,
    1.55934409164153020873E-4,  1.84627567348930545870E-6,  1.12699224763999035261E-8,
    3.60140029589371370404E-11, 5.88754533621578410010E-14, 4.52001434074129701496E-17,
    1.25443237090011264384E-20,
};
constexpr std::array<double, 11> kFresnelGN = {
    5.04442073643383265887E-1,  1.97102833525523411709E-1,  1.87648584092575249293E-2,
    6.84079380915393090172E-4,  1.15138826111884280931E-5,  9.82852443688422223854E-8,
    4.45344415861750144738E-10, 1.08268041139020870318E-12, 1.37555460633261799868E-15,
    8.36354435630677421531E-19, 1.86958710162783235106E-22,
};
constexpr std::array<double, 11> kFresnelGD = {
    1.47495759925128324529E0,   3.37748989120019970451E-1,  2.53603741420338795122E-2,
    8.14679107184306179049E-4,  1.27545075667729118702E-5,  1.04314589657571990585E-7,
    4.60680728146520428211E-10, 1.10273215066240270757E-12, 1.38796531259578871258E-15,
    8.39158816283118707363E-19, 1.86958710162783236342E-22,
};

// Rational approximations for J0 on |x| > 8 (Cephes amplitude/phase form).
constexpr std::array<double, 7> kBesselPP = {
    7.96936729297347051624E-4, 8.28352392107440799803E-2, 1.23953371646414299388E0,
    5.44725003058768775090E0,  8.74716500199817011941E0,  5.30324038235394892183E0,
    9.99999999999999997821E-1,
};
constexpr std::array<double, 7> kBesselPQ = {
    9.24408810558863637013E-4, 8.56288474354474431428E-2, 1.25352743901058953537E0,
    5.47097740330417105182E0,  8.76190883237069594232E0,  5.30605288235394617618E0,
    1.00000000000000000218E0,
};
constexpr std::array<double, 8> kBesselQP = {
    -1.13663838898469149931E-2, -1.28252718670509318512E0,  -1.95539544257735972385E1,
    -9.32060152123768231369E1,  -1.77681167980488790968E2,  -1.47077505154951170175E2,
    -5.14105326766599330220E1,  -6.05014350600728481186E0,
};
constexpr std::array<double, 7> kBesselQQ = {
    6.43178256118178023184E1, 8.56430025976980587198E2, 3.88240183605401609683E3,
    7.24046774195652478189E3, 5.93072701187316984827E3, 2.06209331660327847417E3,
    2.42005740240291393179E2,
};

constexpr double kSqrtTwoOverPi = 0.79788456080286535588;
constexpr double kPiOverFour = 0.78539816339744830962;

// Alternating Taylor series sum_k (-x^2/4)^k / (k!)^2; accurate through x ~ 12.
double bessel_j0_series(double x) {
    double term = 1.0;
    double sum = 1.0;
    const double q = 0.25 * x * x;
    for (int k = 1; k <= 60; ++k) {
        term *= -q / (static_cast<double>(k) * static_cast<double>(k));
        sum += term;
        if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum))) {
            break;
        }
    }
    return sum;
}

}  // namespace

fresnel_pair fresnel(double x) {
    const double xa = std::abs(x);
    const double x2 = xa * xa;
    double c = 0.0;
    double s = 0.0;
    if (x2 < 2.5625) {
        const double t = x2 * x2;
        s = xa * x2 * polevl(t, kFresnelSN) / p1evl(t, kFresnelSD);
        c = xa * polevl(t, kFresnelCN) / polevl(t, kFresnelCD);
    } else if (xa > 36974.0) {
        c = 0.5;
        s = 0.5;
    } else {
        double t = std::numbers::pi * x2;
        const double u = 1.0 / (t * t);
        const double inv_t = 1.0 / t;
        const double f = 1.0 - u * polevl(u, kFresnelFN) / p1evl(u, kFresnelFD);
        const double g = inv_t * polevl(u, kFresnelGN) / p1evl(u, kFresnelGD);
        t = std::numbers::pi * 0.5 * x2;
        const double ct = std::cos(t);
        const double st = std::sin(t);
        t = std::numbers::pi * xa;
        c = 0.5 + (f * st - g * ct) / t;
        s = 0.5 - (f * ct + g * st) / t;
    }
    if (x < 0.0) {
        c = -c;
        s = -s;
    }
    return {c, s};
}

double bessel_j0(double x) {
    const double xa = std::abs(x);
    if (xa <= 8.0) {
        return bessel_j0_series(xa);
    }
    const double w = 5.0 / xa;
    const double z = 25.0 / (xa * xa);
    const double p = polevl(z, kBesselPP) / polevl(z, kBesselPQ);
    const double q = polevl(z, kBesselQP) / p1evl(z, kBesselQQ);
    const double xn = xa - kPiOverFour;
    const double amp = p * std::cos(xn) - w * q * std::sin(xn);
    return amp * kSqrtTwoOverPi / std::sqrt(xa);
}

}  // namespace nfbeam
