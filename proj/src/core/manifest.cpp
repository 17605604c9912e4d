#include "manifest.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace ipm {

namespace {
double now_s() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
        .count();
}
}  // namespace

std::string fnv1a64_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Io, path + ": cannot open for digest");
    std::uint64_t h = 0xcbf29ce484222325ull;
    char buf[8192];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        const std::streamsize got = in.gcount();
        for (std::streamsize i = 0; i < got; ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 0x100000001b3ull;
        }
        if (!in) break;
    }
    std::ostringstream hex;
    hex << std::hex << h;
    return "fnv1a64:" + hex.str();
}

RunManifest::RunManifest(std::string path, std::string command, ordered_json params)
    : path_(std::move(path)), command_(std::move(command)), params_(std::move(params)) {}

void RunManifest::add_input(const std::string& path) {
    if (!enabled()) return;
    inputs_.emplace_back(path, fnv1a64_file(path));
}

void RunManifest::add_output(const std::string& path) {
    if (!enabled()) return;
    outputs_.push_back(path);
}

void RunManifest::begin() {
    if (!enabled()) return;
    t0_ = now_s();
    write("running", 0.0);
}

void RunManifest::finalize(const std::string& status) {
    if (!enabled()) return;
    write(status, now_s() - t0_);
}

void RunManifest::write(const std::string& status, double wall_s) const {
    ordered_json j;
    j["tool_version"] = kToolVersion;
    j["command"] = command_;
    j["status"] = status;
    j["wall_time_s"] = wall_s;
    j["params"] = params_;
    ordered_json inputs = ordered_json::array();
    for (const auto& [p, digest] : inputs_) {
        ordered_json ji;
        ji["path"] = p;
        ji["digest"] = digest;
        inputs.push_back(ji);
    }
    j["inputs"] = inputs;
    j["outputs"] = outputs_;
    std::ofstream out(path_, std::ios::trunc);
    if (!out) fail(ErrorKind::Io, path_ + ": cannot open manifest for writing");
    out << j.dump(2) << '\n';
}

}  // namespace ipm
