#ifndef SIGNPRIOR_SPECFUN_CODY_CONSTANTS_HPP_
#define SIGNPRIOR_SPECFUN_CODY_CONSTANTS_HPP_

// Rational Chebyshev coefficients for the error function family, after
// W. J. Cody, "Rational Chebyshev approximation for the error function",
// Math. Comp. 23 (1969) 631-638 (the SPECFUN/CALERF coefficient set,
// double-precision selection).  Shared by the scalar reference kernels
// and the SIMD variants so both lanes evaluate the same approximants.

namespace signprior::specfun::cody {

// erf(x) = x * Ra(x^2) for |x| <= kThresh
inline constexpr double kA[5] = {
    3.1611237438705656, 113.864154151050156, 377.485237685302021,
    3209.37758913846947, 0.185777706184603153};
inline constexpr double kB[4] = {
    23.6012909523441209, 244.024637934444173, 1282.61652607737228,
    2844.23683343917062};

// erfcx(y) = Rb(y) for kThresh <= y <= 4
inline constexpr double kC[9] = {
    0.564188496988670089, 8.88314979438837594,  66.1191906371416295,
    298.635138197400131,  881.95222124176909,   1712.04761263407058,
    2051.07837782607147,  1230.33935479799725,  2.15311535474403846e-8};
inline constexpr double kD[8] = {
    15.7449261107098347, 117.693950891312499, 537.181101862009858,
    1621.38957456669019, 3290.79923573345963, 4362.61909014324716,
    3439.36767414372164, 1230.33935480374942};

// erfcx(y) = (1/sqrt(pi) - z*Rc(z))/y with z = 1/y^2 for y > 4
inline constexpr double kP[6] = {
    0.305326634961232344, 0.360344899949804439,  0.125781726111229246,
    0.0160837851487422766, 6.58749161529837803e-4, 0.0163153871373020978};
inline constexpr double kQ[5] = {
    2.56852019228982242, 1.87295284992346047,  0.527905102951428412,
    0.0605183413124413191, 0.00233520497626869185};

inline constexpr double kSqrPi = 0.56418958354775628695;  // 1/sqrt(pi)
inline constexpr double kThresh = 0.46875;
inline constexpr double kXSmall = 1.11e-16;  // below: erf(x) ~ 2x/sqrt(pi)
inline constexpr double kXBig = 26.543;      // erfc underflows beyond
inline constexpr double kXNeg = -26.628;     // erfcx overflows below
inline constexpr double kXHuge = 6.71e7;     // erfcx ~ 1/(x sqrt(pi)) beyond
inline constexpr double kXMax = 2.53e307;    // erfcx underflows beyond

}  // namespace signprior::specfun::cody

#endif  // SIGNPRIOR_SPECFUN_CODY_CONSTANTS_HPP_
