#pragma once

#include "harmonic/partitions.hpp"
#include "harmonic/rational.hpp"

namespace harmonic {

BigInt factorial(int m);
BigInt binomial(int m, int k);

/// Bell numbers via the Bell-triangle recurrence.
BigInt bell(int m);

/// F(m): ordered set partitions of [m]; F(0) = 1.
BigInt fubini(int m);

/// S(m,p): unordered partitions of [m] into exactly p parts; S(0,0) = 1.
BigInt stirling2(int m, int p);

/// Labeled trees on m vertices: m^(m-2), with the m=1 value read as 1.
BigInt treeCount(int m);

/// Labeled forests on m vertices (sum over partitions of per-block trees).
BigInt forestCount(int m);

/// mu(sigma, top) in the partition lattice: (-1)^(l-1) (l-1)! for l blocks.
BigInt mobiusToTop(const SetPartition& sigma);

/// t(pi) = prod over blocks of |B|^(|B|-2). The |B|=1 factor is the exact
/// rational 1^(-1); the product is asserted integral before returning.
BigInt treeWeight(const SetPartition& pi);

/// s(sigma) = sum of t(tau) over refinements tau <= sigma, computed as the
/// product over blocks of forestCount(|B|).
BigInt forestSum(const SetPartition& sigma);

/// Independent route for s(sigma): enumerate all of Pi_n, filter refinements,
/// sum treeWeight. Used to validate forestSum.
BigInt forestSumByRefinement(const SetPartition& sigma);

} // namespace harmonic
