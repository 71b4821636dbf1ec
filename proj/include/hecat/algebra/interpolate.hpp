#pragma once

#include <utility>
#include <vector>

#include "hecat/algebra/laurent.hpp"

namespace hecat {

struct Sample {
    mpz_class x;
    mpz_class y;
};

// Integer polynomial of degree <= degree_bound (in q) through the samples.
// The first degree_bound+1 distinct abscissae determine the fit; all other
// samples must agree with it.
LaurentPoly interpolate(const std::vector<Sample>& samples, int degree_bound);

}  // namespace hecat
