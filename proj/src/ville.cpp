#include "betkit/ville.hpp"

#include <memory>
#include <utility>
#include <vector>

#include "betkit/errors.hpp"

namespace betkit {

namespace {

void require_nonnegative(const Rational& initial, const char* where) {
    if (initial < 0) {
        throw PreconditionViolated(std::string(where) +
                                   " requires nonnegative initial capital, got " +
                                   format_rational(initial));
    }
}

class GapBackerState final : public RuleState {
public:
    explicit GapBackerState(Rational capital) : capital_(std::move(capital)) {}

    Rational value() const override { return capital_; }

    void advance(int bit) override {
        if (capital_ >= 1) {
            capital_ += (bit == 0) ? 1 : -1;
        }
    }

    std::unique_ptr<RuleState> clone() const override {
        return std::make_unique<GapBackerState>(*this);
    }

private:
    Rational capital_;
};

class LeadSniperState final : public RuleState {
public:
    LeadSniperState(long lead, unsigned long start, Rational capital)
        : LeadSniperState(lead, start, std::move(capital), Rational(1)) {}

    // A component scaled by `unit` bets `unit` while it can still afford one
    // full bet, so it behaves exactly like `unit` times the unit-stake sniper.
    LeadSniperState(long lead, unsigned long start, Rational capital, Rational unit)
        : lead_(lead), start_(start), capital_(std::move(capital)), unit_(std::move(unit)) {}

    Rational value() const override { return capital_; }

    void advance(int bit) override {
        if (position_ >= start_ && running_lead_ == lead_ && capital_ >= unit_) {
            capital_ += (bit == 1) ? unit_ : -unit_;
        }
        running_lead_ += (bit == 0) ? 1 : -1;
        ++position_;
    }

    std::unique_ptr<RuleState> clone() const override {
        return std::make_unique<LeadSniperState>(*this);
    }

private:
    long lead_;
    unsigned long start_;
    Rational capital_;
    Rational unit_;
    unsigned long position_ = 0;
    long running_lead_ = 0;
};

class SniperMixtureState final : public RuleState {
public:
    explicit SniperMixtureState(std::size_t terms) {
        for (std::size_t s = 1; s <= terms; ++s) {
            const SniperIndex pair = sniper_pair(s);
            components_.emplace_back(static_cast<long>(pair.lead), pair.start,
                                     pow2(-static_cast<long>(s)),
                                     pow2(-static_cast<long>(s)));
        }
    }

    Rational value() const override {
        Rational total = 0;
        for (const LeadSniperState& component : components_) {
            total += component.value();
        }
        return total;
    }

    void advance(int bit) override {
        for (LeadSniperState& component : components_) {
            component.advance(bit);
        }
    }

    std::unique_ptr<RuleState> clone() const override {
        return std::make_unique<SniperMixtureState>(*this);
    }

private:
    std::vector<LeadSniperState> components_;
};

}  // namespace

StrategyRule gap_backer_rule(const Rational& initial) {
    require_nonnegative(initial, "gap_backer_rule");
    return StrategyRule("gap-backer(initial=" + format_rational(initial) + ")",
                        [initial]() -> std::unique_ptr<RuleState> {
                            return std::make_unique<GapBackerState>(initial);
                        });
}

StrategyRule lead_sniper_rule(unsigned long lead, unsigned long start,
                              const Rational& initial) {
    require_nonnegative(initial, "lead_sniper_rule");
    return StrategyRule("lead-sniper(lead=" + std::to_string(lead) +
                            ",start=" + std::to_string(start) +
                            ",initial=" + format_rational(initial) + ")",
                        [lead, start, initial]() -> std::unique_ptr<RuleState> {
                            return std::make_unique<LeadSniperState>(static_cast<long>(lead),
                                                                     start, initial);
                        });
}

SniperIndex sniper_pair(std::size_t component) {
    if (component < 1) {
        throw PreconditionViolated("sniper_pair component index starts at 1");
    }
    // Anti-diagonal d holds the d+1 pairs (d,0), (d-1,1), ..., (0,d).
    std::size_t index = component - 1;
    std::size_t diagonal = 0;
    while (index >= diagonal + 1) {
        index -= diagonal + 1;
        ++diagonal;
    }
    SniperIndex pair;
    pair.start = static_cast<unsigned long>(index);
    pair.lead = static_cast<unsigned long>(diagonal - index);
    return pair;
}

StrategyRule sniper_mixture_rule(std::size_t terms) {
    if (terms < 1) {
        throw TruncationInvalid("sniper_mixture_rule requires terms >= 1");
    }
    return StrategyRule("sniper-mixture(terms=" + std::to_string(terms) + ")",
                        [terms]() -> std::unique_ptr<RuleState> {
                            return std::make_unique<SniperMixtureState>(terms);
                        });
}

}  // namespace betkit
