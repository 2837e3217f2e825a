#pragma once

namespace polymer {

// Ai or Ai' at a real point. For x > 0, log_scaled holds value * exp(zeta)
// with zeta = (2/3) x^{3/2}; for x <= 0 it equals value.
struct AiryValue {
    double value;
    double log_scaled;
};

AiryValue airy_ai(double x);
AiryValue airy_ai_prime(double x);

// Both functions at once, unscaled.
void airy_pair(double x, double& ai, double& aip);

// Scaled pair: ai_s = Ai(x) e^{zeta}, aip_s = Ai'(x) e^{zeta}, zeta = (2/3)x^{3/2}
// for x > 0 and zeta = 0 otherwise.
void airy_pair_scaled(double x, double& ai_s, double& aip_s, double& zeta);

// e^{c} Ai(x) without forming either factor separately.
double exp_times_ai(double c, double x);
// e^{c} Ai'(x)
double exp_times_aip(double c, double x);

inline double ai(double x) { return airy_ai(x).value; }
inline double aip(double x) { return airy_ai_prime(x).value; }

// |int Ai(a+u) Ai(b-u) du - 2^{-1/3} Ai(2^{-1/3}(a+b))|, integral by panel quadrature.
double airy_convolution_check(double a, double b);

}  // namespace polymer
