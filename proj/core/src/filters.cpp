#include "lcvwm/filters.hpp"

#include <cmath>

namespace lcvwm {
namespace {

FilterPair make_cdf97() {
    const double r2 = std::sqrt(2.0);
    // Lowpass taps with DC gain 1 (analysis) and 2 (synthesis), rescaled to sqrt(2).
    const std::vector<double> h{0.02674875741080976, -0.01686411844287495, -0.07822326652898785,
                                0.2668641184428723,  0.6029490182363579,  0.2668641184428723,
                                -0.07822326652898785, -0.01686411844287495, 0.02674875741080976};
    const std::vector<double> g{-0.09127176311424948, -0.05754352622849957, 0.5912717631142470,
                                1.115087052456994,    0.5912717631142470,   -0.05754352622849957,
                                -0.09127176311424948};
    FilterPair p;
    for (double t : h)
        p.analysis_lowpass.taps.push_back(t * r2);
    for (double t : g)
        p.synthesis_lowpass.taps.push_back(t / r2);

    // h1[n] = (-1)^n g0[n], g1[n] = (-1)^n h0[n] with n measured from the centre.
    const auto rg = p.synthesis_lowpass.radius();
    for (std::ptrdiff_t n = -rg; n <= rg; ++n)
        p.analysis_highpass.push_back(((n % 2 == 0) ? 1.0 : -1.0) * p.synthesis_lowpass[n]);
    const auto rh = p.analysis_lowpass.radius();
    for (std::ptrdiff_t n = -rh; n <= rh; ++n)
        p.synthesis_highpass.push_back(((n % 2 == 0) ? 1.0 : -1.0) * p.analysis_lowpass[n]);
    return p;
}

}  // namespace

const FilterPair& cdf97() {
    static const FilterPair pair = make_cdf97();
    return pair;
}

std::size_t reflect_index(std::ptrdiff_t i, std::size_t n) noexcept {
    if (n == 1)
        return 0;
    const auto period = static_cast<std::ptrdiff_t>(2 * (n - 1));
    i %= period;
    if (i < 0)
        i += period;
    if (i >= static_cast<std::ptrdiff_t>(n))
        i = period - i;
    return static_cast<std::size_t>(i);
}

}  // namespace lcvwm
