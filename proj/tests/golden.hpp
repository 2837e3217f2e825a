#pragma once

// Reference values frozen from tests/oracles/oracles.py (scipy/mpmath Airy,
// numpy Gauss-Legendre, exact enumeration). Tolerances are the agreement
// between the oracle's two resolutions, rounded up, unless noted.
namespace golden {

// mpmath, 30 digits
inline constexpr double kAi0 = 0.35502805388781723926;
inline constexpr double kAip0 = -0.25881940379280679841;
inline constexpr double kAiryKernel00 = 0.066987483779663974144;  // Ai'(0)^2
inline constexpr double kAiryKernel_13_m07 = 0.023985178663025876687;
inline constexpr double kAiryKernel_m2_05 = 0.077757195225479118138;
inline constexpr double kHeat_1_0_0 = 0.30660997152787600138;
inline constexpr double kSemigroup_1_0_0 = 0.045446852823491519807;

// Nystrom at n = 60 and n = 120 on different truncations; pairs agree to 1e-14.
inline constexpr double kFgue0 = 0.969372828355262;
inline constexpr double kFgoe0 = 0.8319080662029512;
inline constexpr double kFgueM2 = 0.41322414250512085;
inline constexpr double kFgoeM2 = 0.27432019790921464;
inline constexpr double kTwTol = 1e-10;

// Trace route at n = 80 and n = 120; pairs agree to 1e-14.
inline constexpr double kJoint_0_0 = 0.24635522972558344;
inline constexpr double kJoint_05_05 = 0.06641634133298654;
inline constexpr double kJoint_1_m1 = 0.057088037425381426;
inline constexpr double kJointTol = 1e-10;

// f_end on m panels [-8, 25] x 12 nodes.
inline constexpr double kFend0 = 0.7830487837677819;
inline constexpr double kFend1 = 0.1064430858066218;
inline constexpr double kFend2 = 1.595339556359961e-05;
inline constexpr double kFendTol = 1e-10;

// P(T_1 = -1) = 1/2 + q / (2 (2 - q)) for N = 1 with leftmost ties; the
// enumeration truncates at tail mass 1e-12.
inline constexpr double kLppN1LeftHalf = 0.6666666666657572;
inline constexpr double kLppN1LeftPoint3 = 0.588235294115964;
inline constexpr double kLppN1Tol = 1e-11;

}  // namespace golden
