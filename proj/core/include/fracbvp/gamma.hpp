#ifndef FRACBVP_GAMMA_HPP
#define FRACBVP_GAMMA_HPP

namespace fracbvp {

/// Largest argument accepted by gamma_fn before the result leaves double range.
inline constexpr double kGammaOverflowLimit = 170.0;

/// Gamma function via a Lanczos rational approximation with reflection for
/// z < 0.5. Relative error below 1e-13 on (0, 170].
/// Throws PoleError at z in {0, -1, -2, ...} and OverflowError for z > 170.
double gamma_fn(double z);

/// 1/Gamma(z); returns exactly 0 at the poles of Gamma.
double reciprocal_gamma(double z);

} // namespace fracbvp

#endif
