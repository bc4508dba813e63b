#ifndef EVERCRED_BALLOT_HPP
#define EVERCRED_BALLOT_HPP

#include <string>

#include "evercred/commitment.hpp"
#include "evercred/elgamal.hpp"
#include "evercred/schnorr.hpp"

namespace evercred {

// The unit stored in the digital ballot box: encrypted choice, anonymized
// voter reference, signature over both. Contains no voter identifier.
struct Ballot {
    Ciphertext choice_ct;
    Commitment reference;
    Signature sig;

    bool operator==(const Ballot& o) const {
        return choice_ct == o.choice_ct && reference == o.reference && sig == o.sig;
    }
};

// Server receipt: a signature by the long-term acknowledgement key over the
// canonical ballot encoding.
struct Acknowledgement {
    Signature sig;
};

// Preimage the voter signs: tag || c1 || c2 || rho.
Bytes ballot_sig_message(const Ciphertext& ct, const Commitment& reference,
                         const GroupParams& params);

// Full canonical encoding c1 || c2 || rho || sigma; receipt preimage and
// fingerprint input.
Bytes canonical_ballot_bytes(const Ballot& b, const GroupParams& params);
Bytes ack_message(const Ballot& b, const GroupParams& params);
Bytes ballot_fingerprint(const Ballot& b, const GroupParams& params);

bool verify_receipt(const Acknowledgement& ack, const Ballot& b, const Element& server_key,
                    const GroupParams& params);

// Data the first device hands to the second device, nominally via QR code.
// Wire form (bit-exact): v1:<t_hex>:<r_hex>:<fingerprint_hex>
struct AuditPayload {
    Scalar opening;         // t
    Scalar enc_randomness;  // r used for the choice ciphertext
    Bytes fingerprint;

    std::string serialize(const GroupParams& params) const;
    static AuditPayload parse(std::string_view line, const GroupParams& params);  // throws

    void wipe() {
        opening.wipe();
        enc_randomness.wipe();
        evercred::wipe(fingerprint);
    }
};

}  // namespace evercred

#endif
