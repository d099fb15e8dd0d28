#ifndef OGB_SPECIAL_HPP
#define OGB_SPECIAL_HPP

namespace ogb {

// Standard normal density and CDF. laplace_phi is Phi(x) - 1/2.
double normal_pdf(double z);
double normal_cdf(double z);
double laplace_phi(double z);

double log_beta(double p, double q);
double beta_function(double p, double q);

// Regularized incomplete beta I(x; p, q), continued-fraction evaluation,
// absolute error well below 1e-12 for p,q in the ranges used here.
double reg_inc_beta(double x, double p, double q);

// Arcsine special case I(x; 1/2, 1/2) = (2/pi) asin(sqrt(x)) and its inverse.
double arcsine_cdf(double x);
double arcsine_quantile(double u);

} // namespace ogb

#endif
