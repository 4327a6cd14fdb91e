#ifndef QBET_ENTROPY_HPP
#define QBET_ENTROPY_HPP

#include "qbet/order.hpp"
#include "qbet/pmf.hpp"

namespace qbet {

// Shannon entropy in bits, with 0 log 0 = 0.
double shannon_entropy(const Pmf& p);

// Renyi entropy H_alpha(X) in bits over the full extended order line.
// Orders 0, 1, +inf, -inf use their continuous extensions. Negative orders
// require full support and throw DivergentEntropy otherwise.
double renyi_entropy(const Pmf& p, const Order& alpha);

// Renyi probability p_alpha(X) = (sum_x p(x)^alpha)^(1/(alpha-1)), the
// exponentiated form 2^(-H_alpha(X)).
double renyi_probability(const Pmf& p, const Order& alpha);

// Arimoto-Renyi conditional entropy H_alpha(X|G) in bits. Negative orders
// require all joint entries on the product of the marginals' supports to be
// positive and throw DivergentEntropy otherwise.
double arimoto_cond_entropy(const JointPmf& j, const Order& alpha);

// Conditional Renyi probability p_alpha(X|G) = 2^(-H_alpha(X|G)).
double cond_renyi_probability(const JointPmf& j, const Order& alpha);

// Arimoto's alpha-mutual information sgn(alpha)[H_alpha(X) - H_alpha(X|G)].
double arimoto_mi(const JointPmf& j, const Order& alpha);

// log2 of sum_i 2^(e_i), evaluated with the usual max shift. Entries of
// -inf are ignored; any +inf dominates.
double log2_sum_exp2(const std::vector<double>& exponents);

}  // namespace qbet

#endif  // QBET_ENTROPY_HPP
