#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace entropy_lab {

/// A scalar function on [0,1] for the approximation toolkit. The entropy
/// kernel -t ln t is tagged so the moduli computations can use its exact
/// closed forms; any other function goes through numeric grid search.
class RealFunction {
 public:
  static RealFunction entropy_kernel();
  static RealFunction of(std::function<double(double)> fn);

  double operator()(double t) const { return fn_(t); }
  bool is_entropy_kernel() const { return is_entropy_; }

 private:
  RealFunction(std::function<double(double)> fn, bool is_entropy)
      : fn_(std::move(fn)), is_entropy_(is_entropy) {}
  std::function<double(double)> fn_;
  bool is_entropy_ = false;
};

/// A positive linear functional given by finitely many point masses on
/// [0,1], normalized so F(e0) = 1. Weights must be non-negative and sum to 1
/// within 1e-12.
struct DiscreteFunctional {
  std::vector<double> nodes;
  std::vector<double> weights;

  DiscreteFunctional(std::vector<double> nodes, std::vector<double> weights);
};

/// F(f) = sum_k weights_k f(nodes_k).
double apply_functional(const DiscreteFunctional& f_op, const RealFunction& f);

/// Binomial weights at x with nodes j/n; applying it to f gives the
/// Bernstein polynomial B_n(f)(x), i.e. E f(X/n) with X ~ Binomial(n, x).
DiscreteFunctional bernstein_functional(int n, double x);

/// Nodes (k+a)/(n+Sa) with Binomial(n, p) weights: the per-symbol
/// expectation functional of the Dirichlet-smoothed plug-in estimator.
/// a = 0 recovers the Bernstein functional.
DiscreteFunctional dirichlet_functional(int n, int support_size, double a, double p);

/// B_F(x) = |F(e1) - x|, V_F = F((e1 - F(e1) e0)^2), and the two step sizes
/// h1 = sqrt(V_F + B_F^2)/phi(x), h2 = sqrt(V_F)/phi(x), phi(x) =
/// sqrt(x(1-x)). Requires 0 < x < 1.
struct FunctionalStats {
  double bias_b = 0.0;
  double var_v = 0.0;
  double h1 = 0.0;
  double h2 = 0.0;
  double x = 0.0;
};

FunctionalStats functional_stats(const DiscreteFunctional& f_op, double x);

/// Ordinary pointwise modulus sup{ |f(u)-f(x)| : u in [0,1], |u-x| <= h }.
/// Exact for the entropy kernel (it is unimodal with peak at 1/e); numeric
/// grid search at 1e-6 resolution plus one refinement otherwise.
double omega1_pointwise(const RealFunction& f, double h, double x);

/// First-order Ditzian-Totik modulus at step t:
///   sup{ |f(u)-f(v)| : u,v in [0,1], |u-v| <= t phi((u+v)/2) }.
/// Numeric (grid search, a lower approximation of the sup).
double omega1_dt(const RealFunction& f, double t);

/// Second-order Ditzian-Totik modulus at step h:
///   sup{ |f(u)-2f((u+v)/2)+f(v)| : u,v in [0,1], |u-v| <= 2h phi((u+v)/2) }.
/// For the entropy kernel this is exactly h^2 ln4/(1+h^2) for h <= 1
/// (rejected for h > 1); otherwise numeric grid search.
double omega2_dt(const RealFunction& f, double h);

/// The grid-search evaluation of omega2_dt regardless of kernel tag; a lower
/// approximation of the sup, used to cross-check the closed form.
double omega2_dt_search(const RealFunction& f, double h);

/// |F(f) - f(x)| <= B_F(x)/(2 h1 phi(x)) * omega1_dt(f, 2 h1)
///                  + (5/2) omega2_dt(f, h1),   valid for h1 <= 1/2.
/// Throws regime_error when h1 > 1/2 (as happens for the Dirichlet
/// functional near the endpoints).
double lemma1_bound(const DiscreteFunctional& f_op, const RealFunction& f, double x);

/// |F(f) - f(x)| <= omega1_pointwise(f, B_F(x); x) + (5/2) omega2_dt(f, h2),
/// valid for h2 <= 1/2.
double lemma3_bound(const DiscreteFunctional& f_op, const RealFunction& f, double x);

/// Bias bound 5nS ln2/(n+Sa)^2 + (2Sa/(n+Sa)) ln((n+Sa)/(2a)) for the
/// smoothed plug-in estimator; requires n >= max(Sa, 4).
double thm4_bias_bound(int n, int support_size, double a);

}  // namespace entropy_lab
