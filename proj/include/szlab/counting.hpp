#pragma once

#include <string>

#include "szlab/cutnorm.hpp"
#include "szlab/density.hpp"
#include "szlab/hypergraph.hpp"

namespace szlab {

// E_{x_1..x_k} prod_j g(x_{-j})
double clique_density(const WeightedHypergraph& g);

// The three averaged-out tensors on X_{-1} plus the capped g'.
struct MarginalTriple {
  Tensor g_prime;
  Tensor nu_prime;
  Tensor gtilde_prime;
  Tensor g_prime_capped;  // entrywise min(g', 1)
};

MarginalTriple marginals(const WeightedHypergraph& g, const WeightedHypergraph& nu,
                         const WeightedHypergraph& gtilde);

struct DenseGapResult {
  double gap = 0.0;
  double epsilon = 0.0;  // exact tuple cut norm of g - gtilde
  double bound = 0.0;    // k * epsilon
  bool satisfied = false;
};

// Dense counting lemma check: requires 0 <= g, gtilde <= 1.
DenseGapResult dense_counting_gap(const WeightedHypergraph& g, const WeightedHypergraph& gtilde,
                                  const CutNormBudget& cb = {});

// Diagnostics for the relative counting lemma: the final gap against the
// bound shape (implicit constant unknown, ratio only) plus the ladder of
// explicit-constant sub-inequalities, each evaluated numerically.
struct CountingDiagnostics {
  int m = 0;  // number of majorant slices not identically 1
  double gap = 0.0;
  double epsilon = 0.0;
  double delta = 0.0;
  double bound_shape = 0.0;  // delta^(1/2^(2^k+k-2)) + epsilon^(1/2^(2^k-1))
  double ratio = 0.0;        // gap / bound_shape

  double nu_prime_mean = 0.0;
  double nu_prime_sq_mean = 0.0;
  double var_nu_lhs = 0.0;              // (E|nu'-1|)^2
  double var_nu_mid = 0.0;              // E[(nu'-1)^2], must be <= 3 delta
  double cap_nu_worst = 0.0;            // max over entries of (g'-g'cap) - |nu'-1|
  double cap_small_lhs = 0.0;           // ||g'cap - gtilde'||_box
  double c_m_measured = 0.0;            // measured reduced-instance sup
  double nu_abs_term = 0.0;             // E[nu' |nu'-1|]
  double errorone_lhs = 0.0;            // |E[(g-gtilde) gtilde']|
  double errortwo_lhs = 0.0;            // (E[g (g'-gtilde')])^2
  double errortwo_rhs = 0.0;
  double errorfive_lhs = 0.0;           // E[(g'-gtilde')^2]
  double errorfive_rhs = 0.0;
  double summand_gaps[3] = {0, 0, 0};   // |E[g'g'cap]-E[gt'^2]| etc.
  double split_identity_residual = 0.0; // total - (errorone part + errortwo part)

  bool ladder_ok = false;
  std::string first_failure;
};

// delta must be the exhaustively measured LFC deviation of nu.
CountingDiagnostics relative_counting_gap(const WeightedHypergraph& g,
                                          const WeightedHypergraph& gtilde,
                                          const WeightedHypergraph& nu, double delta,
                                          const CutNormBudget& cb = {});

struct DenseModelVerifyResult {
  double distance = 0.0;
  bool satisfied = false;
  bool certified = false;  // distance came from an exact cut norm
  double mean_gap = 0.0;   // |mean f - mean ftilde| (<= distance, full-set witness)
};

DenseModelVerifyResult dense_model_verify(const DensityFunction& f, const DensityFunction& ftilde,
                                          int k, double epsilon_bound,
                                          const CutNormBudget& cb = {});

struct DenseModelResult {
  DensityFunction model;
  bool converged = false;
  int rounds = 0;
  double achieved = 0.0;  // cut-norm distance at stop
};

struct DenseModelOptions {
  int max_cells = 4096;
  CutNormBudget cut;
};

// Energy-increment constructor for a [0,1]-bounded model of f: refine the
// partition of Z_N along cut-norm certificates and take capped conditional
// averages until the cut distance drops below threshold.
DenseModelResult dense_model_greedy(const DensityFunction& f, int k, double threshold,
                                    int max_rounds, const DenseModelOptions& opts = {});

}  // namespace szlab
