#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

namespace polyloss {

// Smallest probability ever fed into a log. Raw model outputs of exactly 0
// would make cross-entropy style losses infinite; training code must stay
// finite, so probabilities are clamped to [kPtMin, 1] at the boundary.
inline constexpr double kPtMin = 1e-12;

// The model's prediction probability of the target ground-truth class.
// Construction clamps into [kPtMin, 1]; a non-finite raw value is rejected.
class ProbabilityPoint {
 public:
  explicit ProbabilityPoint(double raw);

  double value() const { return pt_; }

 private:
  double pt_;
};

// --- scalar loss values, all pure functions of pt -------------------------

// -log(pt)
double ce_loss(ProbabilityPoint pt);

// -(1-pt)^gamma * log(pt); gamma >= 0 required. gamma = 0 reduces to
// ce_loss exactly.
double focal_loss(ProbabilityPoint pt, double gamma);

// ce_loss(pt) + eps1 * (1-pt); eps1 >= -1 keeps the leading coefficient
// nonnegative.
double poly1_ce(ProbabilityPoint pt, double eps1);

// -log(pt) + sum_j eps[j] * (1-pt)^(j+1 ... ); eps[j-1] >= -1/j for each j.
// An empty eps is plain cross-entropy.
double poly_n_ce(ProbabilityPoint pt, std::span<const double> eps);

// focal_loss(pt, gamma) + eps1 * (1-pt)^(gamma+1)
double poly1_fl(ProbabilityPoint pt, double eps1, double gamma);

// focal_loss(pt, gamma) - (1-pt)^(gamma+1) + eps2 * (1-pt)^(gamma+2);
// eps2 >= -1/2 keeps the new leading coefficient 1/2 + eps2 nonnegative.
double poly1_star_fl(ProbabilityPoint pt, double eps2, double gamma);

// sum_{j=1}^{n} (1/j) (1-pt)^j, the first n polynomials of cross-entropy.
double drop_loss(ProbabilityPoint pt, int n);

// ce_loss(pt) - drop_loss(pt, n): cross-entropy with its first n
// polynomials removed.
double drop_front_loss(ProbabilityPoint pt, int n);

// (1-pt) + alpha * (1-pt)^2, alpha >= 0.
double drop_star_loss(ProbabilityPoint pt, double alpha);

// sum_{j=1}^{2n} e^{-(j-1)/n} (1-pt)^j, n >= 1. The j=1 coefficient is
// exactly 1.
double exp_loss(ProbabilityPoint pt, int n);

// sum_j coefficients[j-1] * (1-pt)^j over an explicit finite coefficient
// list; all coefficients must be >= 0.
double general_poly_loss(ProbabilityPoint pt, std::span<const double> coefficients);

// --- loss specifications ----------------------------------------------------

struct CrossEntropyParams {};
struct FocalParams {
  double gamma;
};
struct Poly1CeParams {
  double eps1;
};
struct PolyNCeParams {
  std::vector<double> eps;
};
struct Poly1FlParams {
  double eps1;
  double gamma;
};
struct Poly1StarFlParams {
  double eps2;
  double gamma;
};
struct DropParams {
  int n;
};
struct DropFrontParams {
  int n;
};
struct DropStarParams {
  double alpha;
};
struct ExpParams {
  int n;
};
struct GeneralPolyParams {
  std::vector<double> coefficients;
};

// A validated description of one loss family plus its parameters. The
// factories below are the only way to build one, and they reject parameters
// outside the documented bounds, so an invalid spec cannot exist.
class LossSpec {
 public:
  using Params =
      std::variant<CrossEntropyParams, FocalParams, Poly1CeParams,
                   PolyNCeParams, Poly1FlParams, Poly1StarFlParams, DropParams,
                   DropFrontParams, DropStarParams, ExpParams,
                   GeneralPolyParams>;

  static LossSpec cross_entropy();
  static LossSpec focal(double gamma);
  static LossSpec poly1_ce(double eps1);
  static LossSpec poly_n_ce(std::vector<double> eps);
  static LossSpec poly1_fl(double eps1, double gamma);
  static LossSpec poly1_star_fl(double eps2, double gamma);
  static LossSpec drop(int n);
  static LossSpec drop_front(int n);
  static LossSpec drop_star(double alpha);
  static LossSpec exp_decay(int n);
  static LossSpec general_poly(std::vector<double> coefficients);

  // Loss value at pt.
  double value(ProbabilityPoint pt) const;

  // Closed-form dL/dpt; <= 0 on (0,1] for every spec that satisfies the
  // construction-time coefficient bounds.
  double grad_pt(ProbabilityPoint pt) const;

  // Stable snake_case family name ("ce", "focal", "poly1_ce", ...).
  std::string name() const;

  // Family name plus parameter values, for logs and error messages.
  std::string describe() const;

  // True for focal-style specs with 0 < gamma < 1. Values are computed as
  // written, but (1-pt)^(gamma-1) grows without bound near pt = 1, so runs
  // carry a warning in their metadata.
  bool focal_gamma_below_one() const;

  const Params& params() const { return params_; }

  bool operator==(const LossSpec& other) const = default;

 private:
  explicit LossSpec(Params params) : params_(std::move(params)) {}

  Params params_;
};

// Closed-form dL/dpt for any spec; same as spec.grad_pt(pt).
double loss_grad_pt(const LossSpec& spec, ProbabilityPoint pt);

}  // namespace polyloss
