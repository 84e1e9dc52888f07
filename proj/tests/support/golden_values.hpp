// Generated by tests/oracle/gen_golden.py -- do not edit by hand.
// Reference values computed with mpmath (50+ digit working precision)
// by direct summation of the defining series / products.
#pragma once

namespace golden {

struct MLGold { double alpha, beta, z, value; };
struct DDPair { double x, hi, lo; };

inline constexpr double gamma_1p5        = 0.886226925452758;   // sqrt(pi)/2
inline constexpr double ln_factorial_100 = 363.73937555556347;  // ln Gamma(101)
inline constexpr double gamma_k_3_2      = 1.2533141373155003;   // 2^0.5 Gamma(1.5)
inline constexpr double gamma_2p2        = 1.1018024908797128;
inline constexpr double rl_mu1_nu0p5_t1  = 0.7522527780636751;  // Gamma(2)/Gamma(2.5)

inline constexpr MLGold ml_table[] = {
    {0.5, 1.0, -2.5, 0.2108063640611436},
    {0.5, 1.0, -10.0, 0.05614099274382259},
    {0.5, 2.0, -40.0, 0.027593291887377424},
    {0.75, 1.0, -2.0, 0.20207848341295445},
    {0.75, 2.0, -10.0, 0.10448519294440892},
    {0.75, 3.5, -1.0, 0.21194746295579053},
    {1.0, 1.0, -20.0, 2.061153622438558e-09},
    {1.0, 2.0, -30.0, 0.03333333333333022},
    {1.0, 3.5, -30.0, 0.02384260121277076},
    {1.0, 1.0, 5.0, 148.4131591025766},
    {1.3, 2.0, -12.0, 0.06537382823541425},
    {1.5, 1.0, -8.0, -0.20287153923872817},
    {1.5, 3.5, -28.0, 0.034948765070673474},
    {1.7, 2.2, 0.0, 0.9076036842152801},
    {2.0, 1.0, -100.0, -0.8390715290764524},
    {2.0, 2.0, -4.0, 0.45464871341284085},
    {2.0, 3.5, -25.0, 0.054081424433076},
    {0.9, 1.0, -16.0, 0.007369172571101862},
    {0.6, 2.0, -5.0, 0.19319690617611732},
    {1.1, 1.8, -7.3, 0.11313097692556773},
};

inline constexpr double ml_0p75_m2 = 0.20207848341295445;  // E_0.75(-2)

inline constexpr double J0_1  = 0.7651976865579666;
inline constexpr double J0_4  = -0.39714980986384735;
inline constexpr double Jhalf_2p5 = 0.3020049060623657;
inline constexpr double J2_3  = 0.4860912605858911;
inline constexpr double I0_1  = 1.2660658777520084;
inline constexpr double I1_2  = 1.590636854637329;
inline constexpr double j0_1  = 0.8414709848078965;              // sin(1)/1
inline constexpr double j1_1  = 0.3011686789397568;  // sin1 - cos1
inline constexpr double w_generic = 0.5834877072127798;  // w_(0.7,1.6,0.9)(2.2)
inline constexpr double phi_011_1 = 0.7651976865579666;  // equals J0(1)
inline constexpr double phi_generic = 3.367004016617068;  // phi_(0.5,2,-1)(2.5)
inline constexpr double kbessel_1111_1 = 0.7699866217445036;
inline constexpr double kbessel_generic = -0.07551758137644045;  // k=2 mu=1.5 g=2.5 lam=1.2 z=3
inline constexpr double kgb_sph_1 = 0.949498328972575;  // (2/sqrt(pi)) j0(1)
inline constexpr double kgb_generic = 2.414537275820609;  // b=1.5 c=0.8 g=2.2 lam=1.7 mu=0.6 k=2.5 z=1.8

inline constexpr double coeff_n3 = 0.49478912457546714;  // C_3 at b=1 c=1 g=2 lam=1 mu=0.5 k=2
inline constexpr double thm1_g1_t1 = 0.2686926990674201;
inline constexpr double thm1_nu05_t075 = 0.274531402135823;
inline constexpr double thm2_derived_g2_t1 = 0.24505690291491805;
inline constexpr double thm2_published_g2_t1 = 0.25850915803646246;
inline constexpr double thm3_derived_g3_t1 = 0.30359882211310824;
inline constexpr double thm3_published_g3_t1 = 0.3151460400320352;
inline constexpr double cor1_t1 = 0.23885452524942624;
inline constexpr double cor2_literal_t1 = 0.3156525151382085;
inline constexpr double cor2_prefactored_t1 = 0.27973975800236467;
inline constexpr double laplace_g1_p2 = 0.07038187266672274;
inline constexpr double laplace_g1_p4 = 0.023885999883734486;
inline constexpr double laplace_g1_p8 = 0.006864109587850978;

// lgamma reference points as (hi, lo) double-double pairs
inline constexpr DDPair lgamma_dd[] = {
    {0.7, 0.26086724653166654, -2.68125586257301e-17},
    {1.0, 0.0, 0.0},
    {3.2, 0.885404827154909, -3.3960528331729534e-17},
    {17.5, 32.08111489594735, -1.842181793007976e-15},
    {29.9, 70.91876482098719, -1.963941367961069e-15},
    {61.3, 189.8597124065054, -4.191554284206113e-15},
    {240.0, 1073.5323078956328, 6.262411155930171e-14},
    {1001.5, 5915.582431002701, 2.6256173121908855e-13},
};
inline constexpr DDPair dd_ln2      = {2.0, 0.6931471805599453, 2.3190468138462996e-17};
inline constexpr DDPair dd_ln2pi_h  = {0.0, 0.9189385332046728, -3.8782941580672414e-17};
inline constexpr DDPair dd_e        = {1.0, 2.718281828459045, 1.4456468917292502e-16};

}  // namespace golden
