#pragma once

#include <chrono>
#include <iostream>
#include <json.hpp>
#include <string>

namespace rfcli {

using Json = nlohmann::ordered_json;

// Run reports share a fixed field order: tool_version, command,
// parameters, status, witness, counts, elapsed_ms. Everything except
// elapsed_ms is byte-stable for identical inputs.
class RunReport {
public:
    RunReport(std::string command, Json parameters)
        : command_(std::move(command)),
          parameters_(std::move(parameters)),
          started_(std::chrono::steady_clock::now()) {}

    void set_status(std::string status) { status_ = std::move(status); }
    void set_witness(Json witness) { witness_ = std::move(witness); }
    void count(const std::string& key, Json value) { counts_[key] = std::move(value); }

    void emit(std::ostream& out) const;

private:
    std::string command_;
    Json parameters_;
    std::string status_ = "pass";
    Json witness_;  // null unless set
    Json counts_ = Json::object();
    std::chrono::steady_clock::time_point started_;
};

}  // namespace rfcli
