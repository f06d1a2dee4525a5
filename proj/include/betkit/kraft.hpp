#pragma once

#include <cstddef>
#include <map>
#include <optional>

#include "betkit/bitstring.hpp"
#include "betkit/rational.hpp"

namespace betkit {

// Description-length bookkeeping for a prefix-free requester: each accepted
// request reserves codeword mass 2^{-length} for its target, and the total
// reserved mass may never exceed the budget. Only the shortest request per
// target is kept; a request no shorter than the recorded one changes nothing.
class KraftLedger {
public:
    explicit KraftLedger(Rational budget);

    // Adds a request unless an equal-or-shorter one exists for the target.
    // Returns true when the ledger changed. Throws PreconditionViolated for
    // length < 1 and BudgetExceeded when accepting would push the weight past
    // the budget (callers treat that as a construction bug).
    bool request(const BitString& target, unsigned long length);

    // Shortest accepted description length for the target, or nullopt.
    std::optional<unsigned long> description_length(const BitString& target) const;

    const Rational& weight() const { return weight_; }
    const Rational& budget() const { return budget_; }
    const std::map<BitString, unsigned long>& requests() const { return requests_; }

private:
    Rational budget_;
    Rational weight_;
    std::map<BitString, unsigned long> requests_;
};

}  // namespace betkit
