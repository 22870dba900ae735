#pragma once

namespace wexsim {

// Post-exchange wealth of the two participants.
struct PairUpdate {
  double m_i_next;
  double m_j_next;
};

// Pure pairwise update kernels. All of them share the shape
//
//   m' = lambda*m + (1-lambda)*(uncommitted part) + (1+delta)*(returned part)
//
// where delta is the common profit/loss rate of the interaction. Kernels
// validate their inputs and throw std::invalid_argument on violations; they
// never touch global state, so identical inputs give bitwise-identical
// outputs.

// Both agents commit all wealth beyond savings.
PairUpdate step_jv_basic(double m_i, double m_j, double lambda, double delta);

// Each agent commits the responsibility-weighted share of its wealth and
// keeps ownership of its own committed stake. rf_j in (0,1] scales agent j's
// commitment (a free-riding j commits rf_j*rho_mj); rf_j = 1 is the
// cooperative case.
PairUpdate step_jv_responsibility(double m_i, double m_j, double rho_mi, double rho_mj,
                                  double lambda, double delta, double rf_j = 1.0);

// Both commitments are pooled, scaled by (1+delta), and split w_i : w_j.
// Weights may be any positive pair; normalization happens here. rf_j scales
// agent j's commitment only, never the split weights.
PairUpdate step_we_pooled(double m_i, double m_j, double rho_mi, double rho_mj,
                          double w_i, double w_j, double lambda, double delta,
                          double rf_j = 1.0);

}  // namespace wexsim
