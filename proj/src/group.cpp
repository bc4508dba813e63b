#include "evercred/group.hpp"

#include <stdexcept>

#include "evercred/hash.hpp"

namespace evercred {

// RFC 3526 group 14 (2048-bit MODP). p is a safe prime; (p-1)/2 is prime and
// 2 generates the subgroup of quadratic residues.
static const char* kModp2048PHex =
    "FFFFFFFFFFFFFFFFC90FDAA22168C234C4C6628B80DC1CD129024E088A67CC74"
    "020BBEA63B139B22514A08798E3404DDEF9519B3CD3A431B302B0A6DF25F1437"
    "4FE1356D6D51C245E485B576625E7EC6F44C42E9A637ED6B0BFF5CB6F406B7ED"
    "EE386BFB5A899FA5AE9F24117C4B1FE649286651ECE45B3DC2007CB8A163BF05"
    "98DA48361C55D39A69163FA8FD24CF5F83655D23DCA3AD961C62F356208552BB"
    "9ED529077096966D670C354E4ABC9804F1746C08CA18217C32905E462E36CE3B"
    "E39E772C180E86039B2783A2EC07A28FB5C55DF06F4C52C9DE2BCBF695581718"
    "3995497CEA956AE515D2261898FA051015728E5A8AACAA68FFFFFFFFFFFFFFFF";

// Public seed for the production second generator. h = H2G(seed)^2 mod p,
// a nothing-up-my-sleeve derivation: nobody knows log_g(h).
static const char* kGeneratorHSeed = "evercred.generator-h.v1";

mpz_class mpz_from_bytes(ByteView b) {
    mpz_class x;
    if (!b.empty()) {
        mpz_import(x.get_mpz_t(), b.size(), 1 /*most significant first*/, 1, 1, 0, b.data());
    }
    return x;
}

Bytes mpz_to_bytes(const mpz_class& x, size_t width) {
    if (sgn(x) < 0) throw std::invalid_argument("negative value");
    size_t need = (mpz_sizeinbase(x.get_mpz_t(), 2) + 7) / 8;
    if (x == 0) need = 0;
    if (need > width) throw std::invalid_argument("value does not fit in encoding width");
    Bytes out(width, 0);
    if (need > 0) {
        size_t count = 0;
        mpz_export(out.data() + (width - need), &count, 1, 1, 1, 0, x.get_mpz_t());
    }
    return out;
}

static size_t byte_width(const mpz_class& x) {
    return (mpz_sizeinbase(x.get_mpz_t(), 2) + 7) / 8;
}

GroupParams GroupParams::from_values(std::string name, mpz_class p, mpz_class q,
                                     mpz_class g, mpz_class h,
                                     std::optional<Scalar> trapdoor) {
    GroupParams gp;
    gp.name_ = std::move(name);
    gp.p_ = std::move(p);
    gp.q_ = std::move(q);
    gp.g_ = Element(std::move(g));
    gp.h_ = Element(std::move(h));
    gp.elem_bytes_ = byte_width(gp.p_);
    gp.scalar_bytes_ = byte_width(gp.q_);
    if (gp.g_.v <= 1 || gp.h_.v <= 1 || gp.g_.v >= gp.p_ || gp.h_.v >= gp.p_)
        throw std::invalid_argument("generators must be nontrivial elements of Z_p^*");
    if (!gp.in_subgroup(gp.g_) || !gp.in_subgroup(gp.h_))
        throw std::invalid_argument("generators must lie in the order-q subgroup");
    if (trapdoor) {
        if (gp.pow(gp.g_, *trapdoor) != gp.h_)
            throw std::invalid_argument("trapdoor does not satisfy g^alpha = h");
        gp.trapdoor_ = std::move(trapdoor);
    }
    return gp;
}

GroupParams GroupParams::test_small() {
    return from_values("test-small", 23, 11, 2, 3, Scalar(8));
}

GroupParams GroupParams::production() {
    mpz_class p(kModp2048PHex, 16);
    mpz_class q = (p - 1) / 2;
    Element h = hash_to_group(kGeneratorHSeed, p, q);
    return from_values("production", p, q, 2, h.v);
}

const Scalar& GroupParams::trapdoor() const {
    if (!trapdoor_) throw std::logic_error("no trapdoor in this parameter profile");
    return *trapdoor_;
}

Element GroupParams::mul(const Element& a, const Element& b) const {
    Element r;
    r.v = a.v * b.v;
    mpz_mod(r.v.get_mpz_t(), r.v.get_mpz_t(), p_.get_mpz_t());
    return r;
}

Element GroupParams::pow(const Element& base, const Scalar& e) const {
    Element r;
    mpz_powm(r.v.get_mpz_t(), base.v.get_mpz_t(), e.v.get_mpz_t(), p_.get_mpz_t());
    return r;
}

Element GroupParams::inv(const Element& a) const {
    Element r;
    if (mpz_invert(r.v.get_mpz_t(), a.v.get_mpz_t(), p_.get_mpz_t()) == 0)
        throw std::invalid_argument("element not invertible mod p");
    return r;
}

bool GroupParams::in_subgroup(const Element& a) const {
    if (a.v <= 0 || a.v >= p_) return false;
    mpz_class r;
    mpz_powm(r.get_mpz_t(), a.v.get_mpz_t(), q_.get_mpz_t(), p_.get_mpz_t());
    return r == 1;
}

Scalar GroupParams::reduce(const mpz_class& x) const {
    Scalar s;
    mpz_mod(s.v.get_mpz_t(), x.get_mpz_t(), q_.get_mpz_t());
    return s;
}

Scalar GroupParams::sc_add(const Scalar& a, const Scalar& b) const { return reduce(a.v + b.v); }
Scalar GroupParams::sc_sub(const Scalar& a, const Scalar& b) const { return reduce(a.v - b.v); }
Scalar GroupParams::sc_mul(const Scalar& a, const Scalar& b) const { return reduce(a.v * b.v); }

Scalar GroupParams::sc_inv(const Scalar& a) const {
    Scalar r;
    if (a.v == 0 || mpz_invert(r.v.get_mpz_t(), a.v.get_mpz_t(), q_.get_mpz_t()) == 0)
        throw std::invalid_argument("scalar not invertible mod q");
    return r;
}

Bytes GroupParams::encode(const Element& a) const { return mpz_to_bytes(a.v, elem_bytes_); }
Bytes GroupParams::encode(const Scalar& s) const { return mpz_to_bytes(s.v, scalar_bytes_); }

Element GroupParams::decode_element(ByteView b) const {
    if (b.size() != elem_bytes_) throw std::invalid_argument("element encoding has wrong width");
    Element e(mpz_from_bytes(b));
    if (e.v <= 0 || e.v >= p_) throw std::invalid_argument("element encoding out of range");
    return e;
}

Scalar GroupParams::decode_scalar(ByteView b) const {
    if (b.size() != scalar_bytes_) throw std::invalid_argument("scalar encoding has wrong width");
    Scalar s(mpz_from_bytes(b));
    if (s.v >= q_) throw std::invalid_argument("scalar encoding out of range");
    return s;
}

}  // namespace evercred
