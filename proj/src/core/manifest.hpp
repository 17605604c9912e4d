#pragma once

#include <string>
#include <vector>

#include "report.hpp"

namespace ipm {

inline constexpr const char* kToolVersion = "0.1.0";

// Run manifest for reproducibility: written with status "running" before
// the run and finalized (wall time, outputs, status) after it.
class RunManifest {
  public:
    RunManifest(std::string path, std::string command, ordered_json params);

    void add_input(const std::string& path);    // records an fnv1a-64 digest
    void add_output(const std::string& path);
    void begin();
    void finalize(const std::string& status);

    bool enabled() const { return !path_.empty(); }

  private:
    void write(const std::string& status, double wall_s) const;

    std::string path_;
    std::string command_;
    ordered_json params_;
    std::vector<std::pair<std::string, std::string>> inputs_;
    std::vector<std::string> outputs_;
    double t0_ = 0.0;
};

std::string fnv1a64_file(const std::string& path);

}  // namespace ipm
