#pragma once

#include <string>
#include <vector>

#include "harmonic/faces.hpp"
#include "harmonic/rational.hpp"
#include "harmonic/volume.hpp"

namespace harmonic {

/// Coefficients c_0..c_d of the unique degree-d polynomial through the
/// points (0, values[0]) .. (d, values[d]), solved exactly. Throws
/// InternalError if back-substitution fails to reproduce a sample.
std::vector<Rational> fitPolynomialExact(const std::vector<Rational>& values);

Rational evalPolynomial(const std::vector<Rational>& coeffs, long long t);

/// Lattice points of t * H_{n,n}, counted by scanning the projected
/// coordinate box against the scaled facet system.
long long dilatedLatticePointCount(int n, long long t, int threads = 1);

/// Volume by Ehrhart interpolation: count t*H_{n,n} for t = 0..2n-2, fit,
/// return the leading coefficient. For n <= 3 one extra dilate is counted
/// and checked against the fit.
Rational ehrhartVolume(int n, const Caps& caps, int threads = 1);

/// f-vector by binning enumerated harmonic triples by face dimension.
FVector fVectorBrute(int n, const Caps& caps);

/// Pairs of labeled forests on [n] whose union is connected.
BigInt forestPairsBrute(int n, const Caps& caps);

/// Normalized volume of the edge polytope of Gamma times (p+q-2)!: lattice
/// points of t*R_Gamma are generated as t-fold sums of its vertices, the
/// Ehrhart polynomial is fitted, and the leading coefficient is scaled.
/// Disconnected Gamma is a domain error (the dimension drops).
Rational edgePolytopeEhrhart(const BipartiteMultigraph& gamma, const Caps& caps);

/// Volume through the mixed-volume expansion: sum over forest pairs of
/// scaledMixedVolume / k!, k = 2n-2-|E(G)|-|E(G')|.
Rational expansionVolume(int n, const Caps& caps);

struct VerifyCheck {
  std::string check;
  int n = 0;
  std::string expected, actual;
  bool ok = false;
};

/// Cross-validates every formula applicable at this n against its oracle or
/// published value. slow unlocks the expensive extras (Ehrhart at n=4, the
/// n=4 expansion sum, forest pairs at n=5).
std::vector<VerifyCheck> runVerify(int n, const Caps& caps, bool slow,
                                   int threads = 1);

} // namespace harmonic
