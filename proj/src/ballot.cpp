#include "evercred/ballot.hpp"

#include <stdexcept>

#include "evercred/hash.hpp"

namespace evercred {

static constexpr std::string_view kBallotSigTag = "evercred.ballot-sig.v1";
static constexpr std::string_view kAckSigTag = "evercred.ack-sig.v1";

static Bytes tag_prefix(std::string_view tag) {
    Bytes out = to_bytes(tag);
    out.push_back(0);
    return out;
}

Bytes ballot_sig_message(const Ciphertext& ct, const Commitment& reference,
                         const GroupParams& params) {
    Bytes out = tag_prefix(kBallotSigTag);
    append(out, params.encode(ct.c1));
    append(out, params.encode(ct.c2));
    append(out, params.encode(reference.value));
    return out;
}

Bytes canonical_ballot_bytes(const Ballot& b, const GroupParams& params) {
    Bytes out = params.encode(b.choice_ct.c1);
    append(out, params.encode(b.choice_ct.c2));
    append(out, params.encode(b.reference.value));
    append(out, encode_signature(b.sig, params));
    return out;
}

Bytes ack_message(const Ballot& b, const GroupParams& params) {
    Bytes out = tag_prefix(kAckSigTag);
    append(out, canonical_ballot_bytes(b, params));
    return out;
}

Bytes ballot_fingerprint(const Ballot& b, const GroupParams& params) {
    return tagged_hash(hashtag::kFingerprint, canonical_ballot_bytes(b, params));
}

bool verify_receipt(const Acknowledgement& ack, const Ballot& b, const Element& server_key,
                    const GroupParams& params) {
    return schnorr_verify(server_key, ack_message(b, params), ack.sig, params);
}

std::string AuditPayload::serialize(const GroupParams& params) const {
    return "v1:" + params.scalar_hex(opening) + ":" + params.scalar_hex(enc_randomness) + ":" +
           to_hex(fingerprint);
}

AuditPayload AuditPayload::parse(std::string_view line, const GroupParams& params) {
    auto next = [&line]() {
        size_t pos = line.find(':');
        if (pos == std::string_view::npos) throw std::invalid_argument("audit payload truncated");
        std::string_view field = line.substr(0, pos);
        line.remove_prefix(pos + 1);
        return field;
    };
    if (next() != "v1") throw std::invalid_argument("unknown audit payload version");
    AuditPayload p;
    p.opening = params.decode_scalar(from_hex(next()));
    p.enc_randomness = params.decode_scalar(from_hex(next()));
    p.fingerprint = from_hex(line);
    if (p.fingerprint.size() != 32) throw std::invalid_argument("audit payload fingerprint length");
    return p;
}

}  // namespace evercred
