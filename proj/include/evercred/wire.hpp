#ifndef EVERCRED_WIRE_HPP
#define EVERCRED_WIRE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "evercred/ballot.hpp"
#include "evercred/commitment.hpp"
#include "evercred/group.hpp"

namespace evercred {

class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Published registry entry: verification key paired with the anonymized
// voter reference. Never carries an identifier.
struct RegistryRecord {
    Element verification_key;  // p_i
    Commitment reference;      // rho_i
};

enum class OrderPolicy { shuffled, sorted };

std::string order_policy_name(OrderPolicy p);
OrderPolicy order_policy_from_name(std::string_view name);  // throws ParseError

// Registry board file:
//   #evercred-registry v1
//   #group name=<profile> p=<hex> q=<hex> g=<hex> h=<hex>
//   #order <shuffled|sorted>
//   p_hex,rho_hex        (one line per record)
std::string serialize_registry(const std::vector<RegistryRecord>& records,
                               const GroupParams& params, OrderPolicy policy);

struct ParsedRegistry {
    GroupParams params;  // reconstructed from the header; never has a trapdoor
    OrderPolicy policy;
    std::vector<RegistryRecord> records;
};

ParsedRegistry parse_registry(const std::string& text);  // throws ParseError

struct BallotBoxEntry {
    uint64_t seq = 0;
    Ballot ballot;
    uint64_t accepted_tick = 0;  // logical clock, not exported
};

// Ballot box export: one `seq,c1_hex,c2_hex,rho_hex,sigma_hex` line per
// entry, in acceptance order.
std::string serialize_ballot_box(const std::vector<BallotBoxEntry>& entries,
                                 const GroupParams& params);

struct BallotBoxParse {
    std::vector<BallotBoxEntry> entries;
    std::vector<std::string> line_errors;  // per-line problems, 1-based positions
};

BallotBoxParse parse_ballot_box(const std::string& text, const GroupParams& params);

}  // namespace evercred

#endif
