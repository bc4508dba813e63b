#ifndef EVERCRED_COMMITMENT_HPP
#define EVERCRED_COMMITMENT_HPP

#include "evercred/group.hpp"

namespace evercred {

// Pedersen commitment g^x h^r. Perfectly hiding (any value admits an opening
// for every x), computationally binding (finding two openings for distinct
// x breaks the discrete log between g and h).
struct Commitment {
    Element value;

    bool operator==(const Commitment& o) const { return value == o.value; }
    bool operator!=(const Commitment& o) const { return value != o.value; }
    bool operator<(const Commitment& o) const { return value < o.value; }
};

Commitment commit(const Scalar& x, const Scalar& r, const GroupParams& params);

bool verify_commitment(const Commitment& c, const Scalar& x, const Scalar& r,
                       const GroupParams& params);

// Test-profile realization of perfect hiding: with the trapdoor alpha
// (g^alpha = h), any commitment opens to any target value via
//
//   t* = t_orig + (x_orig - x_target) * alpha^-1   (mod q)
//
// Refuses on profiles without a trapdoor; throws std::invalid_argument when
// (x_orig, t_orig) is not an opening of c.
Scalar equivocate(const Commitment& c, const Scalar& x_orig, const Scalar& t_orig,
                  const Scalar& x_target, const GroupParams& params);

}  // namespace evercred

#endif
