#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "betkit/bitstring.hpp"
#include "betkit/prediction.hpp"
#include "betkit/rational.hpp"

namespace betkit {

// A dense table of capital values on the full binary tree of the given depth:
// levels()[n] holds the 2^n values at string length n in level-offset order.
// Entries are plain rationals; validate_martingale checks the fairness and
// nonnegativity conditions that make the table a betting strategy's capital.
class MartingaleTable {
public:
    // All-zero table of the given depth (depth = longest string length).
    explicit MartingaleTable(std::size_t depth);

    // No-bet table holding `value` at every node.
    static MartingaleTable constant(std::size_t depth, const Rational& value);

    std::size_t depth() const { return levels_.size() - 1; }

    const Rational& at(const BitString& node) const;
    Rational& at(const BitString& node);
    const Rational& at(std::size_t level, std::size_t offset) const;
    Rational& at(std::size_t level, std::size_t offset);

    const Rational& root() const { return levels_[0][0]; }
    Rational& root() { return levels_[0][0]; }

    const std::vector<std::vector<Rational>>& levels() const { return levels_; }

    friend bool operator==(const MartingaleTable& a, const MartingaleTable& b) = default;

private:
    std::vector<std::vector<Rational>> levels_;
};

// Outcome of a structural check: ok() is true when no problems were found.
// Messages are capped; `suppressed` counts problems beyond the cap.
struct ValidationReport {
    std::vector<std::string> problems;
    std::size_t suppressed = 0;

    bool ok() const { return problems.empty() && suppressed == 0; }
};

// Checks the two table invariants: every value is nonnegative, and every
// internal node satisfies the fairness equation
// 2 * M(sigma) == M(sigma*0) + M(sigma*1), exactly.
ValidationReport validate_martingale(const MartingaleTable& table);

// Stake placed on outcome 1 after `node`: M(node*1) - M(node). The mirror
// identity M(node*0) - M(node) == -wager follows from fairness. `node` must
// be internal (length < depth).
Rational wager(const MartingaleTable& table, const BitString& node);

// Largest value on the chain of prefixes of `node`, the node itself included.
Rational running_max(const MartingaleTable& table, const BitString& node);

// True when no bet ever favors outcome 1: M(sigma*0) >= M(sigma*1) everywhere.
bool is_zero_sided(const MartingaleTable& table);

// True when no bet ever favors outcome 0: M(sigma*1) >= M(sigma*0) everywhere.
bool is_one_sided(const MartingaleTable& table);

// True when every strict bet follows f: capital rises toward f(sigma)'s side
// and falls away from it, at every internal sigma. No-bet nodes are free.
bool is_f_sided(const MartingaleTable& table, const PredictionFunction& f);

// f-sided and additionally betting strictly at every internal node.
bool is_strictly_f_sided(const MartingaleTable& table, const PredictionFunction& f);

// Checks that `zero_part` and `one_part` witness separability of `total`:
// both are valid martingale tables, the first is 0-sided, the second is
// 1-sided, and they sum to `total` at every node.
bool is_separable_witness(const MartingaleTable& total,
                          const MartingaleTable& zero_part,
                          const MartingaleTable& one_part);

// Sum of 2^{-|sigma|} * M(sigma) over a prefix-free set of nodes. Throws
// NotPrefixFree (naming an offending pair) when the set is not an antichain,
// DepthExceeded when a node is deeper than the table. The sum never exceeds
// M(root), with equality whenever the set covers the whole space.
Rational ville_sum(const MartingaleTable& table, std::vector<BitString> nodes);

// Weighted sum of tables with positive rational weights. All tables must
// share a depth; the result is again fair by linearity.
MartingaleTable mix(const std::vector<MartingaleTable>& tables,
                    const std::vector<Rational>& weights);

}  // namespace betkit
