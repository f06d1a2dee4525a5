#pragma once

#include <string>

#include <json.hpp>

#include "betkit/bitstring.hpp"
#include "betkit/construction.hpp"
#include "betkit/martingale.hpp"
#include "betkit/prediction.hpp"
#include "betkit/schedule.hpp"
#include "betkit/stage_sequence.hpp"
#include "betkit/stest.hpp"
#include "betkit/trajectory.hpp"

namespace betkit {

// JSON uses nlohmann's order-preserving flavor throughout so that emitted
// documents are byte-deterministic.
using Json = nlohmann::ordered_json;

// Table schema: {"depth": d, "values": {"": "1", "0": "3/2", ...}} with one
// entry per node (the empty key names the root) and rationals in lowest
// terms. Loading throws MissingEntry for absent nodes and ParseFailure for
// malformed documents; extra keys in "values" are rejected.
Json table_to_json(const MartingaleTable& table);
MartingaleTable table_from_json(const Json& document);

// Predictor schema: constants serialize as {"constant": 0}; dense tables as
// {"depth": d, "bits": {"": 0, "0": 1, ...}} covering every node of length
// strictly below d. Callable predictors have no serialized form.
Json prediction_to_json(const PredictionFunction& f);
PredictionFunction prediction_from_json(const Json& document);

// Trajectory schema: {"path": "0101", "capital": ["1", "3/2", ...]}.
Json trajectory_to_json(const CapitalTrajectory& trajectory);

// CSV with header "n,capital,log2_exponent"; the exponent column is a decimal
// with '.' separator, blank at n = 0, and "-inf" at zero capital.
std::string trajectory_to_csv(const CapitalTrajectory& trajectory);

// Separable opponent schema:
// {"zero_increments": [table, ...], "one_increments": [table, ...]}.
Json separable_opponent_to_json(const SeparableOpponent& opponent);
SeparableOpponent separable_opponent_from_json(const Json& document);

// Sided opponent schema: {"f": <predictor>, "increments": [table, ...]},
// where the increments are f-sided and stages are their prefix sums.
Json sided_opponent_to_json(const PredictionFunction& f,
                            const std::vector<MartingaleTable>& increments);

// Stage-sequence schema: {"stages": [table, ...]}, stages in revelation order.
Json stage_sequence_to_json(const StageSequence& sequence);
StageSequence stage_sequence_from_json(const Json& document);

// Layered-cover schema: {"s": "p/q", "levels": [["010", ...], ...]}.
Json stest_to_json(const STest& test);
STest stest_from_json(const Json& document);

// Schedule schema: {"rows": [{"n": 1, "q": "3/2", "eps": "1/64",
// "delta": "65/128", "s": "39747", "p": "..."}, ...]} with every parameter an
// exact literal.
Json schedule_to_json(const Schedule& sched);
Schedule schedule_from_json(const Json& document);

// Trace schema: {"budget": "p/q", "records": [...], "prefixes": [...],
// "certificates": [...]}. Each record covers one stage: its placement action
// ("define", "undefine", "idle", or "stuck"), the level and prefix acted on,
// the running ledger weight after the stage as "p/q", and a nested "request"
// object (level, target, length) when a description request fired that stage.
// "prefixes" lists the final prefix per level with null for undefined levels;
// certificates carry exact capital readings. Parsing replays the requests
// into a fresh ledger, so a parsed trace is bit-identical to the original.
Json trace_to_json(const ConstructionTrace& trace);
ConstructionTrace trace_from_json(const Json& document);

// One line of '0'/'1' characters, optional trailing newline.
BitString read_bits_file(const std::string& path);
void write_bits_file(const std::string& path, const BitString& bits);

// File helpers shared by the CLI and tests. Writers emit 2-space indentation
// and a trailing newline; readers throw ParseFailure on unreadable or
// malformed input.
Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& document);
std::string json_to_string(const Json& document);

}  // namespace betkit
