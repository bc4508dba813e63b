#include <doctest.h>

#include "evercred/hash.hpp"
#include "evercred/scenario.hpp"
#include "evercred/second_device.hpp"
#include "evercred/voter_client.hpp"

using namespace evercred;

namespace {

ScenarioConfig small_config(CredentialMode mode = CredentialMode::direct, bool twofa = false,
                            bool baseline = false) {
    ScenarioConfig c;
    c.voters = 3;
    c.mode = mode;
    c.second_factor = twofa;
    c.baseline = baseline;
    c.seed = 2024;
    return c;
}

}  // namespace

TEST_CASE("create_ballot builds a ballot that passes both server checks") {
    ElectionHarness h(small_config());
    h.setup(pick_test_vids(3, h.params));
    VoterClient client = h.make_client(0);
    client.load_credentials(*h.voters[0].package);

    auto [ballot, payload] = client.create_ballot(1);

    // the reference recomputes from (vid, t)
    Commitment recomputed =
        commit(vid_scalar(h.voters[0].vid, h.params), payload.opening, h.params);
    CHECK(recomputed == ballot.reference);

    // re-encrypting the committed choice with the payload randomness
    // reproduces the ciphertext bit-exactly
    Ciphertext again =
        elgamal_encrypt(h.election_key.pk, h.codebook.at(1), payload.enc_randomness, h.params);
    CHECK(again == ballot.choice_ct);
    CHECK(h.params.encode(again.c1) == h.params.encode(ballot.choice_ct.c1));

    // both server-side checks hold
    CHECK(verify_commitment(ballot.reference, vid_scalar(h.voters[0].vid, h.params),
                            payload.opening, h.params));
    bool sig_ok = false;
    for (const auto& rec : h.registry)
        if (rec.reference == ballot.reference)
            sig_ok = schnorr_verify(rec.verification_key,
                                    ballot_sig_message(ballot.choice_ct, ballot.reference,
                                                       h.params),
                                    ballot.sig, h.params);
    CHECK(sig_ok);

    CHECK(payload.fingerprint == ballot_fingerprint(ballot, h.params));
    CHECK_THROWS_AS(client.create_ballot(99), std::out_of_range);
}

TEST_CASE("cast happy path: verifying receipt, payload emitted, secrets wiped") {
    ElectionHarness h(small_config());
    h.setup(pick_test_vids(3, h.params));

    auto outcome = h.cast(0, 2);
    REQUIRE(outcome.status == VoterClient::CastOutcome::Status::accepted);
    CHECK(outcome.receipt_valid);
    CHECK(outcome.seq == 1);
    CHECK(outcome.audit_payload_line.rfind("v1:", 0) == 0);

    // payload parses back and matches the box entry fingerprint
    AuditPayload payload = AuditPayload::parse(outcome.audit_payload_line, h.params);
    auto box = h.server.ballot_box_snapshot();
    REQUIRE(box.size() == 1);
    CHECK(payload.fingerprint == ballot_fingerprint(box[0].ballot, h.params));
}

TEST_CASE("post-cast client state dump holds no secrets") {
    ElectionHarness h(small_config());
    h.setup(pick_test_vids(3, h.params));
    VoterClient client = h.make_client(0);
    client.load_credentials(*h.voters[0].package);

    std::string before = client.state_dump();
    CHECK(before.find("credentials.opening=") != std::string::npos);

    auto outcome =
        client.cast(h.server, h.voters[0].password, h.voters[0].second_factor, 0, h.registry);
    REQUIRE(outcome.status == VoterClient::CastOutcome::Status::accepted);

    CHECK_FALSE(client.has_secrets());
    std::string after = client.state_dump();
    CHECK(after.find("credentials=<none>") != std::string::npos);
    CHECK(after.find("credentials.opening=") == std::string::npos);
    CHECK(after.find("credentials.signing_key=") == std::string::npos);
}

TEST_CASE("authentication failures surface as auth_failed") {
    ElectionHarness h(small_config());
    h.setup(pick_test_vids(3, h.params));
    VoterClient client = h.make_client(0);
    client.load_credentials(*h.voters[0].package);
    auto outcome = client.cast(h.server, "wrong-password", std::nullopt, 0, h.registry);
    CHECK(outcome.status == VoterClient::CastOutcome::Status::auth_failed);
    CHECK(client.has_secrets());  // nothing was spent
}

TEST_CASE("client detects a registry that omits its credentials") {
    ElectionHarness h(small_config());
    h.setup(pick_test_vids(3, h.params));
    VoterClient client = h.make_client(0);
    client.load_credentials(*h.voters[0].package);

    std::vector<RegistryRecord> none;
    auto outcome = client.cast(h.server, h.voters[0].password, std::nullopt, 0, none);
    CHECK(outcome.status == VoterClient::CastOutcome::Status::registry_mismatch);
    CHECK(client.has_secrets());  // nothing was submitted or spent
    CHECK(h.server.ballot_box_snapshot().empty());
}

TEST_CASE("baseline client omits the opening; an augmented server rejects it") {
    ScenarioConfig cfg = small_config();
    ElectionHarness h(cfg);
    h.setup(pick_test_vids(3, h.params));
    // a client in baseline mode talking to the augmented server
    VoterClient baseline_client(h.voters[0].vid, h.params, h.codebook, h.election_key.pk,
                                h.server.ack_verification_key(), 555, /*baseline=*/true);
    baseline_client.load_credentials(*h.voters[0].package);
    auto outcome = baseline_client.cast(h.server, h.voters[0].password, std::nullopt, 0,
                                        h.registry);
    CHECK(outcome.status == VoterClient::CastOutcome::Status::rejected);
    CHECK(outcome.reject_reason == RejectReason::commitment_mismatch);
}

TEST_CASE("tampered acknowledgements are flagged as invalid receipts") {
    ElectionHarness h(small_config(), false, /*adversarial_server=*/true);
    h.setup(pick_test_vids(3, h.params));
    h.server.set_tamper_acks(true);
    auto outcome = h.cast(0, 0);
    REQUIRE(outcome.status == VoterClient::CastOutcome::Status::accepted);
    CHECK_FALSE(outcome.receipt_valid);
}

TEST_CASE("passcode cast end-to-end behaves like direct mode") {
    ElectionHarness h(small_config(CredentialMode::passcode));
    h.setup(pick_test_vids(3, h.params));
    auto outcome = h.cast(0, 1);
    REQUIRE(outcome.status == VoterClient::CastOutcome::Status::accepted);
    CHECK(outcome.receipt_valid);

    // the resulting box entry has the same schema and validates identically
    std::string box_export = h.server.export_ballot_box();
    BallotBoxParse parsed = parse_ballot_box(box_export, h.params);
    CHECK(parsed.line_errors.empty());
    REQUIRE(parsed.entries.size() == 1);
    VerificationReport report = verify_eligibility(h.registry_export, box_export);
    CHECK(report.clean());
}

TEST_CASE("wrong passcode fails at authentication, before any blob moves") {
    ElectionHarness h(small_config(CredentialMode::passcode));
    h.setup(pick_test_vids(3, h.params));
    VoterClient client = h.make_client(0);
    Passcode wrong = *h.voters[0].passcode;
    wrong[0] = wrong[0] == 'A' ? 'B' : 'A';
    auto outcome = client.passcode_cast(h.server, wrong, h.voters[0].second_factor, 0,
                                        h.registry);
    CHECK(outcome.status == VoterClient::CastOutcome::Status::auth_failed);
}

TEST_CASE("correct passcode but wrong second factor fails at authentication") {
    ElectionHarness h(small_config(CredentialMode::passcode, /*twofa=*/true));
    h.setup(pick_test_vids(3, h.params));
    VoterClient client = h.make_client(0);
    auto outcome = client.passcode_cast(h.server, *h.voters[0].passcode,
                                        std::string("bogus-token"), 0, h.registry);
    CHECK(outcome.status == VoterClient::CastOutcome::Status::auth_failed);

    auto good = client.passcode_cast(h.server, *h.voters[0].passcode,
                                     h.voters[0].second_factor, 0, h.registry);
    CHECK(good.status == VoterClient::CastOutcome::Status::accepted);
}

TEST_CASE("direct and passcode modes produce identical ballot-box schemas") {
    auto run_mode = [](CredentialMode mode) {
        ElectionHarness h(small_config(mode));
        h.setup(pick_test_vids(3, h.params));
        for (size_t i = 0; i < 3; i++) h.cast(i, i % 3);
        return h.server.export_ballot_box();
    };
    std::string direct_box = run_mode(CredentialMode::direct);
    std::string passcode_box = run_mode(CredentialMode::passcode);
    GroupParams params = GroupParams::test_small();
    BallotBoxParse a = parse_ballot_box(direct_box, params);
    BallotBoxParse b = parse_ballot_box(passcode_box, params);
    CHECK(a.line_errors.empty());
    CHECK(b.line_errors.empty());
    REQUIRE(a.entries.size() == b.entries.size());
    for (size_t i = 0; i < a.entries.size(); i++) CHECK(a.entries[i].seq == b.entries[i].seq);
}

TEST_CASE("honest audit passes and recovers the cast choice") {
    for (CredentialMode mode : {CredentialMode::direct, CredentialMode::passcode}) {
        ElectionHarness h(small_config(mode));
        h.setup(pick_test_vids(3, h.params));
        auto outcome = h.cast(1, 2);
        REQUIRE(outcome.status == VoterClient::CastOutcome::Status::accepted);
        AuditReport report = h.audit(1);
        CHECK(report.fetched);
        CHECK(report.clash_check == true);
        CHECK(report.plaintext_found);
        CHECK(report.choice == 2);
        CHECK(report.ack_valid);
        CHECK(report.fingerprint_match);
        CHECK(report.pass);
        CHECK(report.to_text().find("verdict=PASS") != std::string::npos);
    }
}

TEST_CASE("audit before casting reports the fetch failure") {
    ElectionHarness h(small_config());
    h.setup(pick_test_vids(3, h.params));
    AuditPayload dummy;
    dummy.opening = Scalar(1);
    dummy.enc_randomness = Scalar(1);
    dummy.fingerprint = Bytes(32, 0);
    AuditReport report = h.audit_with_payload(0, dummy.serialize(h.params));
    CHECK_FALSE(report.fetched);
    CHECK_FALSE(report.pass);
}

TEST_CASE("a substituted ballot fails both the fingerprint and the clash check") {
    ElectionHarness h(small_config(), false, /*adversarial_server=*/true);
    h.setup(pick_test_vids(3, h.params));
    REQUIRE(h.cast(0, 0).status == VoterClient::CastOutcome::Status::accepted);
    REQUIRE(h.cast(1, 1).status == VoterClient::CastOutcome::Status::accepted);

    // the server serves voter 1's audit with voter 0's entry
    h.server.set_audit_redirect(h.voters[1].vid, h.voters[0].vid);
    AuditReport report = h.audit(1);  // voter 1 presents their own payload
    CHECK(report.fetched);
    CHECK(report.clash_check == false);
    CHECK_FALSE(report.fingerprint_match);
    CHECK_FALSE(report.pass);
}

TEST_CASE("receipt verification rejects altered ballots and foreign keys") {
    ElectionHarness h(small_config());
    h.setup(pick_test_vids(3, h.params));
    REQUIRE(h.cast(0, 0).status == VoterClient::CastOutcome::Status::accepted);
    auto session = h.server.authenticate(h.voters[0].vid, h.voters[0].password, std::nullopt);
    auto [entry, ack] = h.server.fetch_ballot_for_audit(*session);

    CHECK(verify_receipt(ack, entry.ballot, h.server.ack_verification_key(), h.params));

    Ballot altered = entry.ballot;
    altered.choice_ct.c2 = h.params.mul(altered.choice_ct.c2, h.params.g());
    CHECK_FALSE(verify_receipt(ack, altered, h.server.ack_verification_key(), h.params));

    CHECK_FALSE(verify_receipt(ack, entry.ballot, h.params.gpow(Scalar(5)), h.params));
}

TEST_CASE("the second device retains nothing after an audit") {
    ElectionHarness h(small_config());
    h.setup(pick_test_vids(3, h.params));
    REQUIRE(h.cast(0, 0).status == VoterClient::CastOutcome::Status::accepted);

    SecondDevice device = h.make_device();
    std::string before = device.state_dump();
    AuditReport report = device.audit(h.server, h.voters[0].vid, h.voters[0].password,
                                      h.voters[0].second_factor, h.voters[0].payload_line);
    CHECK(report.pass);
    CHECK(device.state_dump() == before);  // stateless across audits

    AuditPayload payload = AuditPayload::parse(h.voters[0].payload_line, h.params);
    CHECK(device.state_dump().find(h.params.scalar_hex(payload.opening) + "\n") ==
          std::string::npos);
}

TEST_CASE("plaintext determination reports no-match for foreign randomness") {
    ElectionHarness h(small_config());
    h.setup(pick_test_vids(3, h.params));
    auto outcome = h.cast(0, 1);
    REQUIRE(outcome.status == VoterClient::CastOutcome::Status::accepted);

    // replace r in the payload: re-encryption can no longer hit the ciphertext
    AuditPayload payload = AuditPayload::parse(outcome.audit_payload_line, h.params);
    payload.enc_randomness = h.params.sc_add(payload.enc_randomness, Scalar(1));
    AuditReport report = h.audit_with_payload(0, payload.serialize(h.params));
    CHECK(report.fetched);
    CHECK_FALSE(report.plaintext_found);
    CHECK_FALSE(report.choice.has_value());
    CHECK_FALSE(report.pass);
    CHECK(report.to_text().find("choice=none") != std::string::npos);
}

TEST_CASE("clash soundness is exhaustive: no voter's opening vouches for another's reference") {
    ScenarioConfig cfg = small_config();
    cfg.voters = 10;
    ElectionHarness h(cfg);
    std::vector<std::string> vids = pick_test_vids(cfg.voters, h.params);
    h.setup(vids);
    for (size_t i = 0; i < cfg.voters; i++)
        REQUIRE(h.cast(i, i % 3).status == VoterClient::CastOutcome::Status::accepted);

    auto box = h.server.ballot_box_snapshot();
    REQUIRE(box.size() == cfg.voters);
    for (size_t i = 0; i < cfg.voters; i++) {
        Scalar t_i = AuditPayload::parse(h.voters[i].payload_line, h.params).opening;
        const Commitment& rho_i = box[h.voters[i].seq - 1].ballot.reference;
        for (size_t j = 0; j < cfg.voters; j++) {
            bool opens = verify_commitment(rho_i, vid_scalar(vids[j], h.params), t_i, h.params);
            CHECK(opens == (i == j));
        }
    }
}
