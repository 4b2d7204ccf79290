#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

// Exact counting formulas for lambda(n,k) = |set of n x n binary matrices
// with k ones in every row and column|. Closed or recursive forms exist
// only for k = 1, 2, 3; the four k = 2 routes are kept strictly separate
// so they can cross-validate each other.
namespace regmat {

using BigCount = boost::multiprecision::cpp_int;

BigCount factorial(int n);
BigCount binomial(long long n, long long k);

// lambda(n,1) = n!
BigCount lambda_n_1(int n);

// Partition sum over solutions of 2*x2 + 3*x3 + ... + n*xn = n:
//   sum (n!)^2 / prod_r x_r! (2r)^{x_r}
// Every summand divides exactly; a non-integral summand is a bug.
BigCount lambda_n_2_partition_sum(int n);

// Anand-Dumir-Gupta recursion, seeds lambda(1,2)=0, lambda(2,2)=1,
// lambda(3,2)=6.
BigCount lambda_n_2_anand(int n);

// Good-Crook recursion, seeds lambda(1,2)=0, lambda(2,2)=1.
BigCount lambda_n_2_good_crook(int n);

// Recursion through the auxiliary pi sequence (see PiTable).
BigCount lambda_n_2_pi(int n);

// Explicit alternating sum over the (n+2)(n+1)/2 solutions of
// alpha + beta + gamma = n, accumulated in exact rationals and asserted
// to reduce to a nonnegative integer.
BigCount lambda_n_3(int n);

// Mutual recursion for lambda(n,2) and the auxiliary sequence pi(n),
// seeds pi(1)=pi(2)=pi(3)=0, pi(4)=9, lambda(1,2)=0, lambda(2,2)=1:
//   lambda(m) = (m-1)(2m-3) lambda(m-1) + (m-1)^2 lambda(m-2) - pi(m)
//   pi(m)     = ((m-1)(m-2)/2)^2 [8(m-3)(m-4) lambda(m-3)
//                                 + (m-3)^2 lambda(m-4) - 4 pi(m-2)]
class PiTable {
public:
    const BigCount& pi(int n);
    const BigCount& lambda(int n);

private:
    void extend(int n);

    // index 0 unused; seeds preloaded
    std::vector<BigCount> lambda_{0, 0, 1};
    std::vector<BigCount> pi_{0, 0, 0, 0, 9};
};

}  // namespace regmat
