#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "zetaband/special.hpp"

namespace zetaband::extremal {

// Bandwidth pair (a, delta) with lambda = pi * a * delta.
struct ApproxParams {
  double a = 0.0;
  double delta = 0.0;
  double lambda = 0.0;

  // Throws DomainError unless a and delta are finite and positive.
  static ApproxParams make(double a, double delta);
  // delta chosen so that pi * a * delta == lambda.
  static ApproxParams from_lambda(double a, double lambda);
};

struct MinorantCoeffs {
  double A = 0.0;
  double B = 0.0;
};

enum class MajorantBranch { AboveLambda0, BelowLambda0 };

struct MajorantCoeffs {
  double C = 0.0;
  double D = 0.0;
  double E = 0.0;
  MajorantBranch branch = MajorantBranch::AboveLambda0;
};

const char* branch_name(MajorantBranch b);

// Target f_a(x) = (x^2 - a^2) / (x^2 + a^2)^2 and its x-derivative.
double eval_f(double a, double x);
double eval_f_prime(double a, double x);
Complex eval_f(double a, Complex z);

// Fourier transform (e^{-2 pi i x y} convention) of f_a.
double f_hat(double a, double y);

struct KernelHats {
  double p_hat;  // transform of 1 / (x^2 + a^2)
  double q_hat;  // transform of a^2 / (x^2 + a^2)^2
};
KernelHats poisson_kernel_hats(double a, double y);

MinorantCoeffs minorant_coeffs(const ApproxParams& p);

// Both branches are selected by lambda >= lambda0.
MajorantCoeffs majorant_coeffs(const ApproxParams& p, double lambda0);
MajorantCoeffs majorant_coeffs(const ApproxParams& p);

// The two closed-form branches evaluated regardless of lambda (used to check continuity).
MajorantCoeffs majorant_coeffs_above(double lambda);
MajorantCoeffs majorant_coeffs_below(double lambda);

// Entire functions; removable singularities at +-ia go through a Taylor jet.
Complex minorant_eval(const ApproxParams& p, Complex z);
Complex majorant_eval(const ApproxParams& p, Complex z);
double minorant_eval(const ApproxParams& p, double x);
double majorant_eval(const ApproxParams& p, double x);

double minorant_prime(const ApproxParams& p, double x);
double majorant_prime(const ApproxParams& p, double x);

double minorant_mass(const ApproxParams& p);
double majorant_mass(const ApproxParams& p);
double majorant_mass_above(const ApproxParams& p);
double majorant_mass_below(const ApproxParams& p);

// Transforms. Zero outside [-delta, delta] by construction.
double minorant_hat(const ApproxParams& p, double y);
double majorant_hat(const ApproxParams& p, double y);

// Translation-identity expressions evaluated at any y, without the support cut.
// Outside [-delta, delta] they vanish only through cancellation.
double minorant_hat_unclipped(const ApproxParams& p, double y);
double majorant_hat_unclipped(const ApproxParams& p, double y);

// Direct quadrature of the majorant against cos(2 pi x y); the cross-check route.
struct HatQuadrature {
  double value;
  double error;
};
HatQuadrature majorant_hat_quadrature(const ApproxParams& p, double y, double tol = 1e-10);

// B(u) = cos(pi u) - E pi u sin(pi u).
double structure_function(double E, double u);

enum class NodeKind { Lattice, HalfLattice, BFunctionZeros };

const char* node_kind_name(NodeKind k);

// Nodes in x-space, ascending, symmetric about 0.
struct NodeSet {
  std::vector<double> nodes;
  std::vector<double> weights;
  NodeKind kind = NodeKind::Lattice;
  double E = 0.0;
  double delta = 0.0;
  // Every excluded node xi = delta * node has |xi| >= first_excluded_index
  // (and for B-zeros |xi| lies in (k, k + 1/2) for an excluded index k).
  std::size_t first_excluded_index = 0;
};

// Littmann weight at the unscaled B-zero xi.
double littmann_weight(double E, double xi);

// Node set within |x| <= window. The E > 0 case verifies the bracket
// (k, k + 1/2) for every k and throws ConvergenceError if it fails.
NodeSet minorant_nodes(const ApproxParams& p, double window);
NodeSet majorant_nodes(const ApproxParams& p, const MajorantCoeffs& c, double window);
double default_node_window(const ApproxParams& p);

// Tail model of F along the excluded nodes: |F(x) - m / x^2| <= k4 / x^4.
struct NodeTail {
  double m = 0.0;
  double k4 = 0.0;
};

// Tail model for f_a (which the approximants equal at their nodes) beyond |x| >= x_min.
NodeTail f_node_tail(double a, double x_min);

struct NodeSum {
  double value = 0.0;       // truncated sum plus the m / x^2 tail estimate
  double tail_bound = 0.0;  // bound on |exact - value| from the tail model
  std::size_t nodes_used = 0;
  double window = 0.0;
};

// (1/delta) * sum over nodes of weight * F(node), plus certified tail.
// Throws ConvergenceError if tail_bound exceeds tol.
NodeSum weighted_node_sum(const std::function<double(double)>& F, const NodeTail& tail, const NodeSet& ns,
                          double tol = 1e-9);

// Doubles the window from default_node_window until tail_bound <= tol.
NodeSum majorant_node_sum(const ApproxParams& p, double tol = 1e-10);
NodeSum minorant_node_sum(const ApproxParams& p, double tol = 1e-10);

enum class Side { Minorant, Majorant };

struct GridSpec {
  double half_width = 20.0;  // grid covers [-half_width, half_width]
  std::size_t points = 100001;
};

// Worst one-sided violation (L - f_a or f_a - U) in units of the local scale
// 1 / (x^2 + a^2). Non-positive means the inequality held everywhere on the grid.
struct ViolationReport {
  double max_violation = 0.0;
  double argmax = 0.0;
  std::size_t points = 0;
};

ViolationReport verify_extremal(const ApproxParams& p, Side side, const GridSpec& grid);

}  // namespace zetaband::extremal
