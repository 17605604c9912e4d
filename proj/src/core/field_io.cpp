#include "field_io.hpp"

#include <cstring>
#include <fstream>

namespace ipm {

namespace {

template <typename T>
void put(std::ofstream& out, T v) {
    char buf[sizeof(T)];
    std::memcpy(buf, &v, sizeof(T));
    out.write(buf, sizeof(T));
}

template <typename T>
T take(std::ifstream& in, const std::string& path) {
    char buf[sizeof(T)];
    in.read(buf, sizeof(T));
    if (!in) fail(ErrorKind::Io, path + ": truncated field file");
    T v;
    std::memcpy(&v, buf, sizeof(T));
    return v;
}

static_assert(sizeof(double) == 8);

}  // namespace

void write_field(const ScalarField& f, const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::Io, path + ": cannot open for writing");
    out.write("IPMF", 4);
    put<std::uint32_t>(out, kFieldFormatVersion);
    put<std::uint32_t>(out, f.grid.n);
    put<double>(out, f.grid.half_width);
    out.write(reinterpret_cast<const char*>(f.values.data()),
              static_cast<std::streamsize>(f.values.size() * sizeof(double)));
    if (!out) fail(ErrorKind::Io, path + ": write failed");
}

ScalarField read_field(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorKind::Io, path + ": cannot open");
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, "IPMF", 4) != 0)
        fail(ErrorKind::Parse, path + ": not an IPMF field file");
    const auto version = take<std::uint32_t>(in, path);
    if (version != kFieldFormatVersion)
        fail(ErrorKind::Parse, path + ": unsupported field file version " + std::to_string(version));
    const auto n = take<std::uint32_t>(in, path);
    const auto half_width = take<double>(in, path);
    ScalarField f{GridSpec(n, half_width)};
    in.read(reinterpret_cast<char*>(f.values.data()),
            static_cast<std::streamsize>(f.values.size() * sizeof(double)));
    if (!in) fail(ErrorKind::Io, path + ": truncated field file");
    char extra;
    if (in.read(&extra, 1)) fail(ErrorKind::Parse, path + ": trailing bytes after field data");
    if (!all_finite(f)) fail(ErrorKind::Parse, path + ": field contains non-finite values");
    return f;
}

}  // namespace ipm
