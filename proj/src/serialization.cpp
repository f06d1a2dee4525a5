#include "betkit/serialization.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "betkit/errors.hpp"
#include "betkit/trajectory.hpp"

namespace betkit {

namespace {

std::size_t read_depth(const Json& document, const char* what) {
    if (!document.is_object() || !document.contains("depth") ||
        !document["depth"].is_number_unsigned()) {
        throw ParseFailure(std::string(what) + " needs an unsigned \"depth\"");
    }
    std::size_t depth = document["depth"].get<std::size_t>();
    if (depth > 24) {
        throw DepthExceeded("dense documents limited to depth 24");
    }
    return depth;
}

}  // namespace

Json table_to_json(const MartingaleTable& table) {
    Json values = Json::object();
    for (std::size_t n = 0; n <= table.depth(); ++n) {
        for (std::size_t j = 0; j < (std::size_t{1} << n); ++j) {
            values[BitString::from_level_offset(n, j).str()] =
                format_rational(table.at(n, j));
        }
    }
    Json document;
    document["depth"] = table.depth();
    document["values"] = std::move(values);
    return document;
}

MartingaleTable table_from_json(const Json& document) {
    std::size_t depth = read_depth(document, "table document");
    if (!document.contains("values") || !document["values"].is_object()) {
        throw ParseFailure("table document needs a \"values\" object");
    }
    const Json& values = document["values"];
    std::size_t expected = (std::size_t{2} << depth) - 1;
    if (values.size() > expected) {
        throw ParseFailure("table document has entries beyond its depth");
    }
    MartingaleTable table(depth);
    for (std::size_t n = 0; n <= depth; ++n) {
        for (std::size_t j = 0; j < (std::size_t{1} << n); ++j) {
            std::string key = BitString::from_level_offset(n, j).str();
            auto it = values.find(key);
            if (it == values.end()) {
                throw MissingEntry("table document lacks node \"" + key + "\"");
            }
            if (!it->is_string()) {
                throw ParseFailure("table value at \"" + key + "\" must be a string");
            }
            table.at(n, j) = parse_rational(it->get<std::string>());
        }
    }
    return table;
}

Json prediction_to_json(const PredictionFunction& f) {
    if (f.is_constant()) {
        Json document;
        document["constant"] = f.constant_bit();
        return document;
    }
    if (!f.is_table()) {
        throw ParseFailure("callable predictors have no serialized form");
    }
    const auto& levels = f.table_levels();
    Json bits = Json::object();
    for (std::size_t n = 0; n < levels.size(); ++n) {
        for (std::size_t j = 0; j < levels[n].size(); ++j) {
            bits[BitString::from_level_offset(n, j).str()] = int(levels[n][j]);
        }
    }
    Json document;
    document["depth"] = levels.size();
    document["bits"] = std::move(bits);
    return document;
}

PredictionFunction prediction_from_json(const Json& document) {
    if (document.is_object() && document.contains("constant")) {
        int bit = document["constant"].get<int>();
        if (bit != 0 && bit != 1) {
            throw ParseFailure("constant predictor bit must be 0 or 1");
        }
        return PredictionFunction::constant(bit);
    }
    std::size_t depth = read_depth(document, "predictor document");
    if (!document.contains("bits") || !document["bits"].is_object()) {
        throw ParseFailure("predictor document needs a \"bits\" object");
    }
    const Json& bits = document["bits"];
    std::vector<std::vector<std::uint8_t>> levels(depth);
    for (std::size_t n = 0; n < depth; ++n) {
        levels[n].resize(std::size_t{1} << n);
        for (std::size_t j = 0; j < levels[n].size(); ++j) {
            std::string key = BitString::from_level_offset(n, j).str();
            auto it = bits.find(key);
            if (it == bits.end()) {
                throw MissingEntry("predictor document lacks node \"" + key + "\"");
            }
            int bit = it->get<int>();
            if (bit != 0 && bit != 1) {
                throw ParseFailure("predictor bit at \"" + key + "\" must be 0 or 1");
            }
            levels[n][j] = static_cast<std::uint8_t>(bit);
        }
    }
    return PredictionFunction::from_table(std::move(levels));
}

Json trajectory_to_json(const CapitalTrajectory& trajectory) {
    Json capital = Json::array();
    for (const Rational& value : trajectory.capital) {
        capital.push_back(format_rational(value));
    }
    Json document;
    document["path"] = trajectory.path.str();
    document["capital"] = std::move(capital);
    return document;
}

std::string trajectory_to_csv(const CapitalTrajectory& trajectory) {
    std::ostringstream out;
    out << "n,capital,log2_exponent\n";
    for (std::size_t n = 0; n < trajectory.capital.size(); ++n) {
        out << n << "," << format_rational(trajectory.capital[n]) << ",";
        if (n > 0) {
            if (trajectory.capital[n] == 0) {
                out << "-inf";
            } else {
                std::ostringstream cell;
                cell.imbue(std::locale::classic());
                cell.precision(12);
                cell << std::fixed
                     << log2_approx(trajectory.capital[n]) / static_cast<double>(n);
                out << cell.str();
            }
        }
        out << "\n";
    }
    return out.str();
}

namespace {

std::vector<MartingaleTable> tables_from_array(const Json& array, const char* what) {
    if (!array.is_array() || array.empty()) {
        throw ParseFailure(std::string(what) + " must be a nonempty array of tables");
    }
    std::vector<MartingaleTable> tables;
    tables.reserve(array.size());
    for (const Json& entry : array) {
        tables.push_back(table_from_json(entry));
    }
    return tables;
}

}  // namespace

Json separable_opponent_to_json(const SeparableOpponent& opponent) {
    Json zero = Json::array();
    for (const auto& table : opponent.zero_increments) zero.push_back(table_to_json(table));
    Json one = Json::array();
    for (const auto& table : opponent.one_increments) one.push_back(table_to_json(table));
    Json document;
    document["zero_increments"] = std::move(zero);
    document["one_increments"] = std::move(one);
    return document;
}

SeparableOpponent separable_opponent_from_json(const Json& document) {
    if (!document.is_object() || !document.contains("zero_increments") ||
        !document.contains("one_increments")) {
        throw ParseFailure("opponent document needs zero_increments and one_increments");
    }
    SeparableOpponent opponent;
    opponent.zero_increments = tables_from_array(document["zero_increments"], "zero_increments");
    opponent.one_increments = tables_from_array(document["one_increments"], "one_increments");
    return opponent;
}

Json sided_opponent_to_json(const PredictionFunction& f,
                            const std::vector<MartingaleTable>& increments) {
    Json tables = Json::array();
    for (const auto& table : increments) tables.push_back(table_to_json(table));
    Json document;
    document["f"] = prediction_to_json(f);
    document["increments"] = std::move(tables);
    return document;
}

Json stage_sequence_to_json(const StageSequence& sequence) {
    Json stages = Json::array();
    for (const auto& table : sequence.stages) stages.push_back(table_to_json(table));
    Json document;
    document["stages"] = std::move(stages);
    return document;
}

StageSequence stage_sequence_from_json(const Json& document) {
    if (!document.is_object() || !document.contains("stages")) {
        throw ParseFailure("stage document needs a \"stages\" array");
    }
    StageSequence sequence;
    sequence.stages = tables_from_array(document["stages"], "stages");
    return sequence;
}

Json stest_to_json(const STest& test) {
    Json levels = Json::array();
    for (const auto& level : test.levels) {
        Json entries = Json::array();
        for (const auto& sigma : level) entries.push_back(sigma.str());
        levels.push_back(std::move(entries));
    }
    Json document;
    document["s"] = format_rational(test.s);
    document["levels"] = std::move(levels);
    return document;
}

STest stest_from_json(const Json& document) {
    if (!document.is_object() || !document.contains("s") || !document["s"].is_string() ||
        !document.contains("levels") || !document["levels"].is_array()) {
        throw ParseFailure("test document needs \"s\" and a \"levels\" array");
    }
    STest test;
    test.s = parse_rational(document["s"].get<std::string>());
    for (const Json& level : document["levels"]) {
        if (!level.is_array()) {
            throw ParseFailure("each test level must be an array of bit strings");
        }
        std::vector<BitString> entries;
        entries.reserve(level.size());
        for (const Json& sigma : level) {
            if (!sigma.is_string()) {
                throw ParseFailure("test level entries must be bit strings");
            }
            entries.push_back(BitString::parse(sigma.get<std::string>()));
        }
        test.levels.push_back(std::move(entries));
    }
    return test;
}

Json schedule_to_json(const Schedule& sched) {
    Json rows = Json::array();
    for (const ScheduleRow& row : sched.rows) {
        Json record;
        record["n"] = row.n;
        record["q"] = format_rational(row.q);
        record["eps"] = format_rational(row.eps);
        record["delta"] = format_rational(row.delta);
        record["s"] = row.s.get_str();
        record["p"] = format_rational(row.p);
        rows.push_back(std::move(record));
    }
    Json document;
    document["rows"] = std::move(rows);
    return document;
}

namespace {

std::string string_field(const Json& record, const char* key, const char* what) {
    if (!record.contains(key) || !record[key].is_string()) {
        throw ParseFailure(std::string(what) + " needs a string \"" + key + "\"");
    }
    return record[key].get<std::string>();
}

unsigned long unsigned_field(const Json& record, const char* key, const char* what) {
    if (!record.contains(key) || !record[key].is_number_unsigned()) {
        throw ParseFailure(std::string(what) + " needs an unsigned \"" + key + "\"");
    }
    return record[key].get<unsigned long>();
}

}  // namespace

Schedule schedule_from_json(const Json& document) {
    if (!document.is_object() || !document.contains("rows") || !document["rows"].is_array()) {
        throw ParseFailure("schedule document needs a \"rows\" array");
    }
    Schedule sched;
    for (const Json& record : document["rows"]) {
        ScheduleRow row;
        row.n = unsigned_field(record, "n", "schedule row");
        row.q = parse_rational(string_field(record, "q", "schedule row"));
        row.eps = parse_rational(string_field(record, "eps", "schedule row"));
        row.delta = parse_rational(string_field(record, "delta", "schedule row"));
        std::string length = string_field(record, "s", "schedule row");
        if (length.empty() || length.find_first_not_of("0123456789") != std::string::npos) {
            throw ParseFailure("schedule row \"s\" must be a decimal integer");
        }
        row.s = Integer(length);
        row.p = parse_rational(string_field(record, "p", "schedule row"));
        sched.rows.push_back(std::move(row));
    }
    return sched;
}

namespace {

TraceAction placement_action_from_string(const std::string& name) {
    if (name == "define") return TraceAction::Define;
    if (name == "undefine") return TraceAction::Undefine;
    if (name == "idle") return TraceAction::Idle;
    if (name == "stuck") return TraceAction::Stuck;
    if (name == "request") {
        throw ParseFailure("request records nest under their stage's record");
    }
    throw ParseFailure("unknown trace action \"" + name + "\"");
}

}  // namespace

Json trace_to_json(const ConstructionTrace& trace) {
    KraftLedger replay(trace.ledger.budget());
    Json records = Json::array();
    std::size_t i = 0;
    while (i < trace.events.size()) {
        const TraceEvent& placement = trace.events[i];
        if (placement.action == TraceAction::Request) {
            throw PreconditionViolated("trace stage opens with a request record");
        }
        ++i;
        const TraceEvent* request = nullptr;
        if (i < trace.events.size() && trace.events[i].action == TraceAction::Request) {
            if (trace.events[i].stage != placement.stage) {
                throw PreconditionViolated("request record detached from its stage");
            }
            request = &trace.events[i];
            ++i;
        }
        if (request != nullptr) {
            if (!request->length.has_value()) {
                throw PreconditionViolated("request record lacks a length");
            }
            replay.request(request->node, *request->length);
        }
        Json record;
        record["stage"] = placement.stage;
        record["action"] = to_string(placement.action);
        record["n"] = placement.level;
        record["sigma"] = placement.node.str();
        record["weight"] = format_rational(replay.weight());
        if (request != nullptr) {
            Json nested;
            nested["n"] = request->level;
            nested["sigma"] = request->node.str();
            nested["length"] = *request->length;
            record["request"] = std::move(nested);
        }
        records.push_back(std::move(record));
    }
    if (!(replay.weight() == trace.ledger.weight())) {
        throw PreconditionViolated("trace events disagree with its ledger weight");
    }
    Json prefixes = Json::array();
    for (const auto& prefix : trace.prefixes) {
        if (prefix.has_value()) {
            prefixes.push_back(prefix->str());
        } else {
            prefixes.push_back(nullptr);
        }
    }
    Json certificates = Json::array();
    for (const CapitalCertificate& certificate : trace.certificates) {
        Json record;
        record["stage"] = certificate.stage;
        record["n"] = certificate.level;
        record["sigma"] = certificate.node.str();
        record["capital"] = format_rational(certificate.capital);
        record["threshold"] = format_rational(certificate.threshold);
        record["within"] = certificate.within;
        certificates.push_back(std::move(record));
    }
    Json document;
    document["budget"] = format_rational(trace.ledger.budget());
    document["records"] = std::move(records);
    document["prefixes"] = std::move(prefixes);
    document["certificates"] = std::move(certificates);
    return document;
}

ConstructionTrace trace_from_json(const Json& document) {
    if (!document.is_object() || !document.contains("records") ||
        !document["records"].is_array() || !document.contains("prefixes") ||
        !document["prefixes"].is_array() || !document.contains("certificates") ||
        !document["certificates"].is_array()) {
        throw ParseFailure("trace document needs records, prefixes, and certificates");
    }
    ConstructionTrace trace;
    trace.ledger = KraftLedger(parse_rational(string_field(document, "budget", "trace document")));
    KraftLedger replay(trace.ledger.budget());
    for (const Json& record : document["records"]) {
        TraceEvent placement;
        placement.stage = unsigned_field(record, "stage", "trace record");
        placement.action =
            placement_action_from_string(string_field(record, "action", "trace record"));
        placement.level = unsigned_field(record, "n", "trace record");
        placement.node = BitString::parse(string_field(record, "sigma", "trace record"));
        trace.events.push_back(placement);
        if (record.contains("request")) {
            const Json& nested = record["request"];
            TraceEvent request;
            request.stage = placement.stage;
            request.action = TraceAction::Request;
            request.level = unsigned_field(nested, "n", "request record");
            request.node = BitString::parse(string_field(nested, "sigma", "request record"));
            request.length = unsigned_field(nested, "length", "request record");
            replay.request(request.node, *request.length);
            trace.events.push_back(std::move(request));
        }
        Rational recorded = parse_rational(string_field(record, "weight", "trace record"));
        if (!(recorded == replay.weight())) {
            throw ParseFailure("trace record weight disagrees with ledger replay");
        }
    }
    trace.ledger = replay;
    for (const Json& entry : document["prefixes"]) {
        if (entry.is_null()) {
            trace.prefixes.push_back(std::nullopt);
        } else if (entry.is_string()) {
            trace.prefixes.push_back(BitString::parse(entry.get<std::string>()));
        } else {
            throw ParseFailure("trace prefixes must be bit strings or null");
        }
    }
    for (const Json& record : document["certificates"]) {
        CapitalCertificate certificate;
        certificate.stage = unsigned_field(record, "stage", "certificate record");
        certificate.level = unsigned_field(record, "n", "certificate record");
        certificate.node = BitString::parse(string_field(record, "sigma", "certificate record"));
        certificate.capital =
            parse_rational(string_field(record, "capital", "certificate record"));
        certificate.threshold =
            parse_rational(string_field(record, "threshold", "certificate record"));
        if (!record.contains("within") || !record["within"].is_boolean()) {
            throw ParseFailure("certificate record needs a boolean \"within\"");
        }
        certificate.within = record["within"].get<bool>();
        trace.certificates.push_back(std::move(certificate));
    }
    return trace;
}

BitString read_bits_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseFailure("cannot read bit file: " + path);
    }
    std::string line;
    std::getline(in, line);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return BitString::parse(line);
}

void write_bits_file(const std::string& path, const BitString& bits) {
    std::ofstream out(path);
    if (!out) {
        throw ParseFailure("cannot write bit file: " + path);
    }
    out << bits.str() << "\n";
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseFailure("cannot read file: " + path);
    }
    Json document = Json::parse(in, nullptr, false);
    if (document.is_discarded()) {
        throw ParseFailure("invalid JSON in file: " + path);
    }
    return document;
}

void write_json_file(const std::string& path, const Json& document) {
    std::ofstream out(path);
    if (!out) {
        throw ParseFailure("cannot write file: " + path);
    }
    out << json_to_string(document);
}

std::string json_to_string(const Json& document) {
    return document.dump(2) + "\n";
}

}  // namespace betkit
