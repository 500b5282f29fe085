// Frozen default-grid fit coefficients. Regenerate with
// gen_polyfit_reference > tests/polyfit_reference.hpp
#pragma once

inline constexpr double kFrozenHexInteriorDeg10[11] = {
    -0x1.7113309bba4e5p+0,
    0x1.ad572288a2923p+3,
    -0x1.a67d48642979bp+5,
    0x1.ca23e8b291844p+6,
    -0x1.2adfa9a9f9195p+7,
    0x1.e182e69adca93p+6,
    -0x1.d946241b311fcp+5,
    0x1.10f54a905d54dp+4,
    -0x1.13268240f5852p+2,
    0x1.49da21e551bd5p+1,
    -0x1.364dac21f59bcp-9,
};

inline constexpr double kFrozenHexAdjacentDeg20[21] = {
    0x1.c654e97692173p-9,
    -0x1.fb316f24b0ec4p-4,
    0x1.05554bf113d8ep+1,
    -0x1.49b3318df51b7p+4,
    0x1.1cbab89d686fcp+7,
    -0x1.64a6d483edfdcp+9,
    0x1.4ee2c92016f55p+11,
    -0x1.e0a05452dae01p+12,
    0x1.0a55c0bdd007bp+14,
    -0x1.c9a00802c48b6p+14,
    0x1.304481b57079ep+15,
    -0x1.3708217e06c03p+15,
    0x1.e2f7e6740a228p+14,
    -0x1.17a601bd7ca5ep+14,
    0x1.d6944664aa264p+12,
    -0x1.15353325da984p+11,
    0x1.b17a915acd392p+8,
    -0x1.9f0c23708cf39p+5,
    0x1.cf1c09ede20dbp+1,
    -0x1.698ad8d20bb3cp-4,
    0x1.faf2471c0f015p-12,
};
