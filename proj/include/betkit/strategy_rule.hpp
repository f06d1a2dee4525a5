#pragma once

#include <functional>
#include <memory>
#include <string>

#include "betkit/martingale.hpp"
#include "betkit/trajectory.hpp"

namespace betkit {

// Streaming evaluator state for a betting rule: holds whatever summary of the
// prefix the rule needs (counts, capital, position) and yields the capital at
// the current node. clone() lets tree expansion branch the state.
class RuleState {
public:
    virtual ~RuleState() = default;
    virtual Rational value() const = 0;
    virtual void advance(int bit) = 0;
    virtual std::unique_ptr<RuleState> clone() const = 0;
};

// A betting rule given by a state factory. Rules evaluate lazily along paths
// of any length, which is what keeps deep-path evaluation cheap where a dense
// table would be astronomically large.
class StrategyRule {
public:
    StrategyRule(std::string description, std::function<std::unique_ptr<RuleState>()> start)
        : description_(std::move(description)), start_(std::move(start)) {}

    std::unique_ptr<RuleState> start() const { return start_(); }
    const std::string& description() const { return description_; }

private:
    std::string description_;
    std::function<std::unique_ptr<RuleState>()> start_;
};

// Capital along `path` under the rule.
CapitalTrajectory evaluate(const StrategyRule& rule, const BitString& path);

// Expands the rule into a dense table of the given depth.
MartingaleTable table_from_rule(const StrategyRule& rule, std::size_t depth);

// Wraps a dense table as a rule (evaluation beyond the depth throws).
StrategyRule rule_from_table(MartingaleTable table);

}  // namespace betkit
