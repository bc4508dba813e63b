#ifndef EVERCRED_GROUP_HPP
#define EVERCRED_GROUP_HPP

#include <gmpxx.h>

#include <optional>
#include <string>

#include "evercred/bytes.hpp"

namespace evercred {

// Exponent in Z_q, always kept reduced to [0, q).
struct Scalar {
    mpz_class v;

    Scalar() : v(0) {}
    explicit Scalar(unsigned long x) : v(x) {}
    explicit Scalar(mpz_class x) : v(std::move(x)) {}

    bool operator==(const Scalar& o) const { return v == o.v; }
    bool operator!=(const Scalar& o) const { return v != o.v; }
    bool operator<(const Scalar& o) const { return v < o.v; }

    void wipe() { v = 0; }
};

// Element of the order-q subgroup of Z_p^*.
struct Element {
    mpz_class v;

    Element() : v(1) {}
    explicit Element(unsigned long x) : v(x) {}
    explicit Element(mpz_class x) : v(std::move(x)) {}

    bool operator==(const Element& o) const { return v == o.v; }
    bool operator!=(const Element& o) const { return v != o.v; }
    bool operator<(const Element& o) const { return v < o.v; }
};

// Multiplicative subgroup of prime order q inside Z_p^*, with two generators
// g and h. Two built-in profiles:
//
//   test-small:  p=23, q=11, g=2, h=3, with the trapdoor alpha=8 (g^8 = 3 mod 23)
//                so that hiding can be demonstrated by explicit equivocation and
//                every claim can be checked by exhaustive enumeration.
//
//   production:  the 2048-bit MODP group (p safe prime, q=(p-1)/2, g=2);
//                h is derived by hashing a fixed public seed into the subgroup,
//                so no party knows log_g(h). No trapdoor is carried.
class GroupParams {
  public:
    static GroupParams test_small();
    static GroupParams production();
    static GroupParams from_values(std::string name, mpz_class p, mpz_class q,
                                   mpz_class g, mpz_class h,
                                   std::optional<Scalar> trapdoor = std::nullopt);

    const std::string& name() const { return name_; }
    const mpz_class& p() const { return p_; }
    const mpz_class& q() const { return q_; }
    const Element& g() const { return g_; }
    const Element& h() const { return h_; }

    bool has_trapdoor() const { return trapdoor_.has_value(); }
    const Scalar& trapdoor() const;  // throws std::logic_error if absent

    size_t element_bytes() const { return elem_bytes_; }
    size_t scalar_bytes() const { return scalar_bytes_; }

    // group arithmetic
    Element mul(const Element& a, const Element& b) const;
    Element pow(const Element& base, const Scalar& e) const;
    Element gpow(const Scalar& e) const { return pow(g_, e); }
    Element hpow(const Scalar& e) const { return pow(h_, e); }
    Element inv(const Element& a) const;
    Element identity() const { return Element(1); }
    bool in_subgroup(const Element& a) const;

    // scalar arithmetic mod q
    Scalar reduce(const mpz_class& x) const;
    Scalar sc_add(const Scalar& a, const Scalar& b) const;
    Scalar sc_sub(const Scalar& a, const Scalar& b) const;
    Scalar sc_mul(const Scalar& a, const Scalar& b) const;
    Scalar sc_inv(const Scalar& a) const;  // throws std::invalid_argument on 0

    // Canonical fixed-width big-endian encodings. These byte strings are the
    // signing and hashing preimages; both sides of every check reproduce them
    // bit-exactly.
    Bytes encode(const Element& a) const;
    Bytes encode(const Scalar& s) const;
    Element decode_element(ByteView b) const;  // throws on wrong width or value >= p
    Scalar decode_scalar(ByteView b) const;    // throws on wrong width or value >= q

    std::string element_hex(const Element& a) const { return to_hex(encode(a)); }
    std::string scalar_hex(const Scalar& s) const { return to_hex(encode(s)); }

    bool same_group(const GroupParams& o) const {
        return p_ == o.p_ && q_ == o.q_ && g_ == o.g_ && h_ == o.h_;
    }

  private:
    GroupParams() = default;

    std::string name_;
    mpz_class p_, q_;
    Element g_, h_;
    std::optional<Scalar> trapdoor_;
    size_t elem_bytes_ = 0;
    size_t scalar_bytes_ = 0;
};

mpz_class mpz_from_bytes(ByteView b);
Bytes mpz_to_bytes(const mpz_class& x, size_t width);  // throws if x does not fit

}  // namespace evercred

#endif
