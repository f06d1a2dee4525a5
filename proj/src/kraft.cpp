#include "betkit/kraft.hpp"

#include <string>
#include <utility>

#include "betkit/errors.hpp"

namespace betkit {

KraftLedger::KraftLedger(Rational budget) : budget_(std::move(budget)), weight_(0) {}

bool KraftLedger::request(const BitString& target, unsigned long length) {
    if (length < 1) {
        throw PreconditionViolated("ledger request length must be at least 1");
    }
    auto existing = requests_.find(target);
    if (existing != requests_.end() && existing->second <= length) {
        return false;
    }
    Rational next_weight = weight_ + pow2(-static_cast<long>(length));
    if (existing != requests_.end()) {
        next_weight -= pow2(-static_cast<long>(existing->second));
    }
    if (next_weight > budget_) {
        throw BudgetExceeded("request of length " + std::to_string(length) + " for \"" +
                             target.str() + "\" would raise the ledger weight to " +
                             format_rational(next_weight) + " over budget " +
                             format_rational(budget_));
    }
    weight_ = std::move(next_weight);
    if (existing != requests_.end()) {
        existing->second = length;
    } else {
        requests_.emplace(target, length);
    }
    return true;
}

std::optional<unsigned long> KraftLedger::description_length(const BitString& target) const {
    auto found = requests_.find(target);
    if (found == requests_.end()) {
        return std::nullopt;
    }
    return found->second;
}

}  // namespace betkit
