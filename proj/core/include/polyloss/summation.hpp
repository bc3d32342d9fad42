#pragma once

namespace polyloss {

// Kahan compensated accumulator. Polynomial sums in this library can run to
// hundreds of terms; compensation keeps the result independent of length at
// double precision.
struct KahanAccumulator {
  double sum = 0.0;
  double compensation = 0.0;

  void add(double value) {
    const double y = value - compensation;
    const double t = sum + y;
    compensation = (t - sum) - y;
    sum = t;
  }
};

// sum_{j=1}^{n_terms} coeff(j) * base^(first_power + j - 1), evaluated in
// ascending j with a running power and Kahan accumulation.
//
// Every finite polynomial sum in the library funnels through this routine so
// that sums that are algebraically identical are also bit-identical.
template <typename CoeffFn>
double weighted_power_sum(double base, int n_terms, int first_power,
                          CoeffFn&& coeff) {
  KahanAccumulator acc;
  double power = 1.0;
  for (int i = 0; i < first_power; ++i) power *= base;
  for (int j = 1; j <= n_terms; ++j) {
    acc.add(coeff(j) * power);
    power *= base;
  }
  return acc.sum;
}

}  // namespace polyloss
