#ifndef EVERCRED_CODEBOOK_HPP
#define EVERCRED_CODEBOOK_HPP

#include <optional>
#include <vector>

#include "evercred/group.hpp"

namespace evercred {

// Fixed public mapping from choice index to group element: entry i is g^(i+1).
// Entries are distinct subgroup elements, so deterministic re-encryption is
// injective over the codebook for a fixed r.
struct Codebook {
    std::vector<Element> entries;

    static Codebook standard(const GroupParams& params, size_t n_choices);

    size_t size() const { return entries.size(); }
    const Element& at(size_t choice) const;  // throws std::out_of_range
    std::optional<size_t> index_of(const Element& m) const;
};

}  // namespace evercred

#endif
