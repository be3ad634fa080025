#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <string>
#include <vector>

#include "meanineq/errors.hpp"
#include "meanineq/version.hpp"

#include "json.hpp"

namespace meanineq {

struct RunConfig {
    std::string command;
    std::size_t samples = 100000;
    std::uint64_t seed = 0;
    double range_lo = 1e-6;
    double range_hi = 1e6;
    double tolerance = 1e-10;
    std::string format = "text";  // json | csv | text
    bool smooth = false;
    bool normalize = false;
    std::vector<std::string> inputs;
    std::string output_path;

    void validate() const {
        if (samples < 1) throw std::domain_error("config: samples must be >= 1");
        if (!(range_lo > 0) || !(range_lo < range_hi))
            throw std::domain_error("config: need 0 < range lo < hi");
        if (tolerance < 0) throw std::domain_error("config: tolerance must be >= 0");
        if (format != "json" && format != "csv" && format != "text")
            throw parse_error("config: format must be json, csv or text");
    }
};

struct CheckResult {
    std::string name;
    std::string verdict;  // pass | fail | error
    double max_violation = 0;
    std::string witness;
};

struct ReportDocument {
    std::string tool = "meanineq";
    std::string version = version_string;
    RunConfig config;
    std::vector<CheckResult> checks;
    std::string timestamp;
    double duration_ms = 0;

    bool all_pass() const {
        for (const auto& c : checks)
            if (c.verdict != "pass") return false;
        return true;
    }

    nlohmann::ordered_json to_json() const {
        nlohmann::ordered_json j;
        j["tool"] = tool;
        j["version"] = version;
        j["command"] = config.command;
        nlohmann::ordered_json cfg;
        cfg["samples"] = config.samples;
        cfg["seed"] = config.seed;
        cfg["range"] = {config.range_lo, config.range_hi};
        cfg["tolerance"] = config.tolerance;
        cfg["format"] = config.format;
        cfg["smooth"] = config.smooth;
        cfg["normalize"] = config.normalize;
        cfg["inputs"] = config.inputs;
        j["config"] = cfg;
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& c : checks) {
            nlohmann::ordered_json cj;
            cj["name"] = c.name;
            cj["verdict"] = c.verdict;
            cj["max_violation"] = c.max_violation;
            cj["witness"] = c.witness;
            arr.push_back(cj);
        }
        j["checks"] = arr;
        j["timestamp"] = timestamp;
        j["duration_ms"] = duration_ms;
        return j;
    }

    static ReportDocument from_json(const nlohmann::ordered_json& j) {
        ReportDocument d;
        d.tool = j.at("tool").get<std::string>();
        d.version = j.at("version").get<std::string>();
        d.config.command = j.at("command").get<std::string>();
        const auto& cfg = j.at("config");
        d.config.samples = cfg.at("samples").get<std::size_t>();
        d.config.seed = cfg.at("seed").get<std::uint64_t>();
        d.config.range_lo = cfg.at("range").at(0).get<double>();
        d.config.range_hi = cfg.at("range").at(1).get<double>();
        d.config.tolerance = cfg.at("tolerance").get<double>();
        d.config.format = cfg.at("format").get<std::string>();
        d.config.smooth = cfg.at("smooth").get<bool>();
        d.config.normalize = cfg.at("normalize").get<bool>();
        d.config.inputs = cfg.at("inputs").get<std::vector<std::string>>();
        for (const auto& cj : j.at("checks")) {
            CheckResult c;
            c.name = cj.at("name").get<std::string>();
            c.verdict = cj.at("verdict").get<std::string>();
            c.max_violation = cj.at("max_violation").get<double>();
            c.witness = cj.at("witness").get<std::string>();
            d.checks.push_back(std::move(c));
        }
        d.timestamp = j.at("timestamp").get<std::string>();
        d.duration_ms = j.at("duration_ms").get<double>();
        return d;
    }

    static std::string csv_field(const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += '"';
            out += c;
        }
        out += '"';
        return out;
    }

    std::string to_csv() const {
        std::string out = "name,verdict,max_violation,witness\n";
        for (const auto& c : checks) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.17g", c.max_violation);
            out += csv_field(c.name) + "," + c.verdict + "," + buf + "," +
                   csv_field(c.witness) + "\n";
        }
        return out;
    }

    std::string to_text() const {
        std::string out = tool;
        out += " " + version + " :: " + config.command + "\n";
        for (const auto& c : checks) {
            char buf[64];
            std::snprintf(buf, sizeof(buf), "%.6g", c.max_violation);
            out += "  [" + c.verdict + "] " + c.name + "  max_violation=" + buf;
            if (!c.witness.empty()) out += "  witness=" + c.witness;
            out += "\n";
        }
        out += all_pass() ? "result: pass\n" : "result: FAIL\n";
        return out;
    }

    std::string render(const std::string& format) const {
        if (format == "json") return to_json().dump(2) + "\n";
        if (format == "csv") return to_csv();
        return to_text();
    }
};

inline std::string iso_timestamp_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace meanineq
