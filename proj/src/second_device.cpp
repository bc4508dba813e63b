#include "evercred/second_device.hpp"

#include <sstream>

#include "evercred/hash.hpp"

namespace evercred {

std::string AuditReport::to_text() const {
    std::ostringstream out;
    out << "fetched=" << (fetched ? "true" : "false") << "\n";
    if (!fetch_error.empty()) out << "fetch_error=" << fetch_error << "\n";
    out << "clash_check=" << (clash_check ? (*clash_check ? "true" : "false") : "skipped") << "\n";
    out << "plaintext_found=" << (plaintext_found ? "true" : "false") << "\n";
    out << "choice=" << (choice ? std::to_string(*choice) : std::string("none")) << "\n";
    out << "ack_valid=" << (ack_valid ? "true" : "false") << "\n";
    out << "fingerprint_match=" << (fingerprint_match ? "true" : "false") << "\n";
    out << "verdict=" << (pass ? "PASS" : "FAIL") << "\n";
    return out.str();
}

SecondDevice::SecondDevice(GroupParams params, Codebook codebook, Element election_pk,
                           Element server_ack_key, bool baseline)
    : params_(std::move(params)),
      codebook_(std::move(codebook)),
      election_pk_(election_pk),
      server_ack_key_(server_ack_key),
      baseline_(baseline) {}

AuditReport SecondDevice::audit(VotingServer& server, const std::string& vid,
                                const std::string& password,
                                const std::optional<std::string>& second_factor,
                                const std::string& payload_line) {
    AuditPayload payload = AuditPayload::parse(payload_line, params_);
    AuditReport report;

    auto session = server.authenticate(vid, password, second_factor);
    if (!session) {
        report.fetch_error = "authentication failed";
        payload.wipe();
        return report;
    }

    BallotBoxEntry entry;
    Acknowledgement ack;
    try {
        std::tie(entry, ack) = server.fetch_ballot_for_audit(*session);
    } catch (const std::out_of_range& e) {
        report.fetch_error = e.what();
        payload.wipe();
        return report;
    }
    report.fetched = true;

    // (1) clash check: does the fetched reference really bind to *me*?
    if (!baseline_)
        report.clash_check =
            verify_commitment(entry.ballot.reference, vid_scalar(vid, params_), payload.opening,
                              params_);

    // (2) plaintext determination by re-encryption over the codebook
    for (size_t i = 0; i < codebook_.size(); i++) {
        if (elgamal_encrypt(election_pk_, codebook_.at(i), payload.enc_randomness, params_) ==
            entry.ballot.choice_ct) {
            report.plaintext_found = true;
            report.choice = i;
            break;
        }
    }

    // (3) receipt
    report.ack_valid = verify_receipt(ack, entry.ballot, server_ack_key_, params_);

    // (4) payload fingerprint against the fetched ballot
    report.fingerprint_match = ballot_fingerprint(entry.ballot, params_) == payload.fingerprint;

    report.pass = (!report.clash_check || *report.clash_check) && report.plaintext_found &&
                  report.ack_valid && report.fingerprint_match;

    // Discard t and r; this device retains nothing.
    payload.wipe();
    return report;
}

std::string SecondDevice::state_dump() const {
    std::ostringstream out;
    out << "actor=second-device\nbaseline=" << baseline_ << "\n";
    out << "election_pk=" << params_.element_hex(election_pk_) << "\n";
    out << "server_ack_key=" << params_.element_hex(server_ack_key_) << "\n";
    return out.str();
}

}  // namespace evercred
