#include "bellkit/marginals.hpp"

#include <algorithm>
#include <string>

#include "bellkit/errors.hpp"

namespace bellkit {

namespace {

void check_probability(double p, const char* name, double tol) {
  if (!(p >= -tol && p <= 1.0 + tol)) throw InconsistentMarginals(std::string(name) + " = " + std::to_string(p) + " is outside [0, 1]");
}

void check_pair(double pX, double pY, double pXY, const char* name, double tol) {
  if (pXY > std::min(pX, pY) + tol)
    throw InconsistentMarginals(std::string(name) + " = " + std::to_string(pXY) + " exceeds min of its singles");
  if (pXY < pX + pY - 1.0 - tol)
    throw InconsistentMarginals(std::string(name) + " = " + std::to_string(pXY) + " is below pX + pY - 1");
}

}  // namespace

void MarginalSet::validate(double tol) const {
  check_probability(pA, "pA", tol);
  check_probability(pB, "pB", tol);
  check_probability(pC, "pC", tol);
  check_probability(pD, "pD", tol);
  check_probability(pAB, "pAB", tol);
  check_probability(pAD, "pAD", tol);
  check_probability(pBC, "pBC", tol);
  check_probability(pCD, "pCD", tol);
  check_pair(pA, pB, pAB, "pAB", tol);
  check_pair(pA, pD, pAD, "pAD", tol);
  check_pair(pB, pC, pBC, "pBC", tol);
  check_pair(pC, pD, pCD, "pCD", tol);
}

double JointDistribution::marginal(unsigned mask) const {
  double s = 0.0;
  for (unsigned i = 0; i < 16; ++i)
    if ((i & mask) == mask) s += q[i];
  return s;
}

MarginalSet JointDistribution::measurable() const {
  MarginalSet m;
  m.pA = marginal(kA);
  m.pB = marginal(kB);
  m.pC = marginal(kC);
  m.pD = marginal(kD);
  m.pAB = marginal(kA | kB);
  m.pAD = marginal(kA | kD);
  m.pBC = marginal(kB | kC);
  m.pCD = marginal(kC | kD);
  return m;
}

double JointDistribution::total() const {
  double s = 0.0;
  for (const double x : q) s += x;
  return s;
}

}  // namespace bellkit
