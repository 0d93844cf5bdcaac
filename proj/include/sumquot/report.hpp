#pragma once

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumquot/pipeline.hpp"

namespace sumquot {

inline std::string condition_status_str(ConditionStatus s) {
    switch (s) {
    case ConditionStatus::Ok: return "ok";
    case ConditionStatus::Violated: return "violated";
    case ConditionStatus::NotEvaluable: return "not-evaluable";
    }
    return "not-evaluable";
}

// The machine-readable run record.  JSON is the canonical schema; CSV is a
// flat single-row projection of the same fields; text is for eyeballs.
// Fields that do not apply to a command are omitted.  All values are
// integers or fixed strings, so every format round-trips losslessly.
struct Report {
    std::string schema_version = "1";
    std::string command;
    std::string input_digest;
    std::size_t n = 0;
    std::size_t ratio_set_size = 0;
    std::optional<std::size_t> oracle_size;
    std::optional<std::size_t> born_count;
    std::optional<std::size_t> pipeline_count;
    std::optional<std::string> mode;
    std::optional<std::size_t> tau, S_size, M, N, cluster_count;
    std::vector<ConditionOutcome> conditions;
    std::int64_t timing_ms = 0;
    nlohmann::json extra; // command-specific payload, one object per command

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["schema_version"] = schema_version;
        j["command"] = command;
        j["input_digest"] = input_digest;
        j["n"] = n;
        j["ratio_set_size"] = ratio_set_size;
        if (oracle_size) j["oracle_size"] = *oracle_size;
        if (born_count) j["born_count"] = *born_count;
        if (pipeline_count) j["pipeline_count"] = *pipeline_count;
        if (mode) j["mode"] = *mode;
        if (tau) j["tau"] = *tau;
        if (S_size) j["S_size"] = *S_size;
        if (M) j["M"] = *M;
        if (N) j["N"] = *N;
        if (cluster_count) j["cluster_count"] = *cluster_count;
        if (!conditions.empty()) {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& c : conditions)
                arr.push_back({{"id", c.id}, {"status", condition_status_str(c.status)}});
            j["conditions"] = arr;
        }
        j["timing_ms"] = timing_ms;
        if (!extra.is_null())
            for (auto& [k, v] : extra.items()) j[k] = v;
        return j;
    }

    std::string to_json_string() const { return to_json().dump(2) + "\n"; }

    // Flat two-line CSV: header row and value row.  Nested payload keys are
    // joined with '.'; conditions become one column per id.
    std::string to_csv() const {
        std::vector<std::pair<std::string, std::string>> cols;
        auto add = [&](const std::string& k, const std::string& v) {
            cols.emplace_back(k, v);
        };
        add("schema_version", schema_version);
        add("command", command);
        add("input_digest", input_digest);
        add("n", std::to_string(n));
        add("ratio_set_size", std::to_string(ratio_set_size));
        if (oracle_size) add("oracle_size", std::to_string(*oracle_size));
        if (born_count) add("born_count", std::to_string(*born_count));
        if (pipeline_count) add("pipeline_count", std::to_string(*pipeline_count));
        if (mode) add("mode", *mode);
        if (tau) add("tau", std::to_string(*tau));
        if (S_size) add("S_size", std::to_string(*S_size));
        if (M) add("M", std::to_string(*M));
        if (N) add("N", std::to_string(*N));
        if (cluster_count) add("cluster_count", std::to_string(*cluster_count));
        for (const auto& c : conditions)
            add("condition_" + c.id, condition_status_str(c.status));
        add("timing_ms", std::to_string(timing_ms));
        if (!extra.is_null()) flatten_json("", extra, cols);

        std::string header, row;
        for (std::size_t i = 0; i < cols.size(); ++i) {
            if (i) { header += ','; row += ','; }
            header += cols[i].first;
            row += cols[i].second;
        }
        return header + "\n" + row + "\n";
    }

    std::string to_text() const {
        nlohmann::json j = to_json();
        std::string out;
        for (auto& [k, v] : j.items()) {
            out += k;
            out += ": ";
            out += v.is_string() ? v.get<std::string>() : v.dump();
            out += '\n';
        }
        return out;
    }

    std::string render(const std::string& format) const {
        if (format == "json") return to_json_string();
        if (format == "csv") return to_csv();
        if (format == "text") return to_text();
        throw input_error("unknown output format '" + format + "'");
    }

private:
    static void flatten_json(const std::string& prefix, const nlohmann::json& j,
                             std::vector<std::pair<std::string, std::string>>& cols) {
        for (auto& [k, v] : j.items()) {
            std::string key = prefix.empty() ? k : prefix + "." + k;
            if (v.is_object()) {
                flatten_json(key, v, cols);
            } else if (v.is_array()) {
                for (std::size_t i = 0; i < v.size(); ++i) {
                    if (v[i].is_object() || v[i].is_array())
                        flatten_json(key + "." + std::to_string(i), v[i], cols);
                    else
                        cols.emplace_back(key + "." + std::to_string(i),
                                          v[i].is_string() ? v[i].get<std::string>()
                                                           : v[i].dump());
                }
            } else {
                cols.emplace_back(key,
                                  v.is_string() ? v.get<std::string>() : v.dump());
            }
        }
    }
};

} // namespace sumquot
