#include "betkit/strategy_rule.hpp"

#include <utility>

#include "betkit/errors.hpp"

namespace betkit {

CapitalTrajectory evaluate(const StrategyRule& rule, const BitString& path) {
    CapitalTrajectory trajectory;
    trajectory.path = path;
    trajectory.capital.reserve(path.size() + 1);
    std::unique_ptr<RuleState> state = rule.start();
    trajectory.capital.push_back(state->value());
    for (std::size_t i = 0; i < path.size(); ++i) {
        state->advance(path.bit(i));
        trajectory.capital.push_back(state->value());
    }
    return trajectory;
}

namespace {

void expand_into(const RuleState& state, MartingaleTable& table, std::size_t level,
                 std::size_t offset) {
    table.at(level, offset) = state.value();
    if (level == table.depth()) {
        return;
    }
    std::unique_ptr<RuleState> left = state.clone();
    left->advance(0);
    expand_into(*left, table, level + 1, 2 * offset);
    std::unique_ptr<RuleState> right = state.clone();
    right->advance(1);
    expand_into(*right, table, level + 1, 2 * offset + 1);
}

class TableState final : public RuleState {
public:
    TableState(std::shared_ptr<const MartingaleTable> table, BitString node)
        : table_(std::move(table)), node_(std::move(node)) {}

    Rational value() const override { return table_->at(node_); }

    void advance(int bit) override {
        if (node_.size() >= table_->depth()) {
            throw DepthExceeded("table-backed rule evaluated beyond its depth");
        }
        node_.append(bit);
    }

    std::unique_ptr<RuleState> clone() const override {
        return std::make_unique<TableState>(table_, node_);
    }

private:
    std::shared_ptr<const MartingaleTable> table_;
    BitString node_;
};

}  // namespace

MartingaleTable table_from_rule(const StrategyRule& rule, std::size_t depth) {
    if (depth > 24) {
        throw EnumerationTooLarge("dense expansion limited to depth 24");
    }
    MartingaleTable table(depth);
    std::unique_ptr<RuleState> state = rule.start();
    expand_into(*state, table, 0, 0);
    return table;
}

StrategyRule rule_from_table(MartingaleTable table) {
    auto shared = std::make_shared<const MartingaleTable>(std::move(table));
    return StrategyRule("table[depth=" + std::to_string(shared->depth()) + "]",
                        [shared]() -> std::unique_ptr<RuleState> {
                            return std::make_unique<TableState>(shared, BitString());
                        });
}

}  // namespace betkit
