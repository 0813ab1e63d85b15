#include "degseq/json_io.hpp"

#include <algorithm>

namespace degseq {

using nlohmann::json;

json to_json(const CheckReport& report) {
    json slack = json::array();
    for (const auto& [k, s] : report.slack) slack.push_back(json::array({k, s}));
    json j{
        {"criterion", report.criterion},
        {"verdict", report.verdict()},
        {"slack", std::move(slack)},
    };
    if (report.witness_index)
        j["witness_index"] = *report.witness_index;
    else
        j["witness_index"] = nullptr;
    return j;
}

CheckReport check_report_from_json(const json& j) {
    CheckReport report;
    report.criterion = j.at("criterion").get<std::string>();
    const auto verdict = j.at("verdict").get<std::string>();
    if (verdict != "accepted" && verdict != "rejected")
        fail(Errc::syntax_error, "verdict must be accepted or rejected");
    report.accepted = verdict == "accepted";
    if (!j.at("witness_index").is_null()) report.witness_index = j.at("witness_index").get<i64>();
    for (const auto& entry : j.at("slack"))
        report.slack.emplace_back(entry.at(0).get<i64>(), entry.at(1).get<i64>());
    return report;
}

json to_json(const ThresholdReport& report) {
    return json{
        {"predicate", predicate_name(report.predicate)},
        {"triple", json::array({report.triple.a, report.triple.b, report.triple.n})},
        {"holds", report.holds},
        {"threshold", report.threshold},
        {"lhs", report.lhs},
    };
}

ThresholdReport threshold_report_from_json(const json& j) {
    ThresholdReport report;
    const auto name = j.at("predicate").get<std::string>();
    if (name == "abk")
        report.predicate = Predicate::abk;
    else if (name == "abk-simple")
        report.predicate = Predicate::abk_simple;
    else if (name == "sharp-bipartite")
        report.predicate = Predicate::sharp_bipartite;
    else if (name == "sharp-graphic")
        report.predicate = Predicate::sharp_graphic;
    else
        fail(Errc::syntax_error, "unknown predicate " + name);
    const auto& t = j.at("triple");
    report.triple = Triple(t.at(0).get<i64>(), t.at(1).get<i64>(), t.at(2).get<i64>());
    report.holds = j.at("holds").get<bool>();
    report.threshold = j.at("threshold").get<i64>();
    report.lhs = j.at("lhs").get<i64>();
    return report;
}

json to_json(const BiadjacencyMatrix& m) {
    json bits = json::array();
    for (i64 r = 0; r < m.rows(); ++r) {
        std::string row;
        row.reserve(static_cast<std::size_t>(m.cols()));
        for (i64 c = 0; c < m.cols(); ++c) row += m.at(r, c) ? '1' : '0';
        bits.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"bits", std::move(bits)}};
}

BiadjacencyMatrix matrix_from_json(const json& j) {
    const i64 rows = j.at("rows").get<i64>();
    const i64 cols = j.at("cols").get<i64>();
    BiadjacencyMatrix m(rows, cols);
    const auto& bits = j.at("bits");
    if (static_cast<i64>(bits.size()) != rows)
        fail(Errc::syntax_error, "bits row count does not match rows");
    for (i64 r = 0; r < rows; ++r) {
        const auto row = bits.at(static_cast<std::size_t>(r)).get<std::string>();
        if (static_cast<i64>(row.size()) != cols)
            fail(Errc::syntax_error, "bits row length does not match cols");
        for (i64 c = 0; c < cols; ++c) {
            const char ch = row[static_cast<std::size_t>(c)];
            if (ch != '0' && ch != '1') fail(Errc::syntax_error, "bits must be '0' or '1'");
            if (ch == '1') m.set(r, c, true);
        }
    }
    return m;
}

json to_json(const LoopGraph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges) edges.push_back(json::array({u + 1, v + 1}));
    json loops = json::array();
    for (const i64 v : g.loops) loops.push_back(v + 1);
    return json{{"n", g.n}, {"edges", std::move(edges)}, {"loops", std::move(loops)}};
}

LoopGraph loop_graph_from_json(const json& j) {
    LoopGraph g;
    g.n = j.at("n").get<i64>();
    for (const auto& e : j.at("edges")) {
        const i64 u = e.at(0).get<i64>() - 1;
        const i64 v = e.at(1).get<i64>() - 1;
        if (u < 0 || v < 0 || u >= g.n || v >= g.n || u == v)
            fail(Errc::syntax_error, "edge endpoints out of range");
        g.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    for (const auto& l : j.at("loops")) {
        const i64 v = l.get<i64>() - 1;
        if (v < 0 || v >= g.n) fail(Errc::syntax_error, "loop vertex out of range");
        g.loops.push_back(v);
    }
    std::sort(g.edges.begin(), g.edges.end());
    std::sort(g.loops.begin(), g.loops.end());
    return g;
}

}  // namespace degseq
