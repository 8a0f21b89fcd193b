#pragma once

#include <complex>

// Reference Gamma values, tabulated independently (arbitrary-precision
// evaluation, 18 significant digits): { Re z, Im z, Re Gamma(z), Im Gamma(z) }.
inline constexpr double kGammaReference[][4] = {
    {1.0, 0.0, 1.0, 0.0},
    {2.0, 0.0, 1.0, 0.0},
    {3.0, 0.0, 2.0, 0.0},
    {4.0, 0.0, 6.0, 0.0},
    {5.0, 0.0, 24.0, 0.0},
    {6.0, 0.0, 120.0, 0.0},
    {7.0, 0.0, 720.0, 0.0},
    {8.0, 0.0, 5040.0, 0.0},
    {9.0, 0.0, 40320.0, 0.0},
    {10.0, 0.0, 362880.0, 0.0},
    {0.5, 0.0, 1.77245385090551603, 0.0},
    {1.5, 0.0, 0.886226925452758014, 0.0},
    {2.5, 0.0, 1.32934038817913702, 0.0},
    {3.5, 0.0, 3.32335097044784255, 0.0},
    {4.5, 0.0, 11.6317283965674489, 0.0},
    {5.5, 0.0, 52.3427777845535202, 0.0},
    {6.5, 0.0, 287.885277815044361, 0.0},
    {7.5, 0.0, 1871.25430579778835, 0.0},
    {8.5, 0.0, 14034.4072934834126, 0.0},
    {9.5, 0.0, 119292.461994609007, 0.0},
    {-0.5, 0.0, -3.54490770181103205, 0.0},
    {-1.5, 0.0, 2.3632718012073547, 0.0},
    {1.0, 1.0, 0.498015668118356043, -0.154949828301810685},
    {2.0, 3.0, -0.0823952726656118837, 0.0917742874352593146},
    {0.5, -0.5, 0.818163999541747394, 0.763313828713982617},
};

inline constexpr int kGammaReferenceCount = 25;
