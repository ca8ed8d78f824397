#include "report.hpp"

#include "ramseyforge/version.hpp"

namespace rfcli {

void RunReport::emit(std::ostream& out) const {
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started_)
                             .count();
    Json report;
    report["tool_version"] = ramseyforge::kVersion;
    report["command"] = command_;
    report["parameters"] = parameters_;
    report["status"] = status_;
    report["witness"] = witness_;
    report["counts"] = counts_;
    report["elapsed_ms"] = elapsed;
    out << report.dump(2) << "\n";
}

}  // namespace rfcli
