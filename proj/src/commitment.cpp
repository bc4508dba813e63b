#include "evercred/commitment.hpp"

#include <stdexcept>

namespace evercred {

Commitment commit(const Scalar& x, const Scalar& r, const GroupParams& params) {
    Scalar xr = params.reduce(x.v);
    Scalar rr = params.reduce(r.v);
    return Commitment{params.mul(params.gpow(xr), params.hpow(rr))};
}

bool verify_commitment(const Commitment& c, const Scalar& x, const Scalar& r,
                       const GroupParams& params) {
    return commit(x, r, params) == c;
}

Scalar equivocate(const Commitment& c, const Scalar& x_orig, const Scalar& t_orig,
                  const Scalar& x_target, const GroupParams& params) {
    const Scalar& alpha = params.trapdoor();  // throws on production profiles
    if (!verify_commitment(c, x_orig, t_orig, params))
        throw std::invalid_argument("(x_orig, t_orig) does not open the commitment");
    Scalar diff = params.sc_sub(x_orig, x_target);
    return params.sc_add(t_orig, params.sc_mul(diff, params.sc_inv(alpha)));
}

}  // namespace evercred
