#include "trace_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace ipm {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void write_trace(const NormTrace& trace, const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) fail(ErrorKind::Io, path + ": cannot open for writing");
    out << kTraceHeader << '\n';
    for (const TraceRow& r : trace.rows) {
        out << format_double(r.t) << ',' << format_double(r.k) << ',' << format_double(r.M) << ','
            << format_double(r.H2) << ',' << format_double(r.H3) << ',' << format_double(r.C1)
            << ',' << format_double(r.S_inf) << ',' << format_double(r.S_sup) << '\n';
    }
    if (!out) fail(ErrorKind::Io, path + ": write failed");
}

namespace {

double parse_double(const std::string& tok, const std::string& path, std::size_t line) {
    double v = 0.0;
    const char* b = tok.data();
    const char* e = tok.data() + tok.size();
    auto res = std::from_chars(b, e, v);
    if (res.ec != std::errc{} || res.ptr != e)
        fail(ErrorKind::Parse, path + ":" + std::to_string(line) + ": malformed number '" + tok + "'");
    return v;
}

}  // namespace

NormTrace read_trace(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::Io, path + ": cannot open");
    std::string line;
    if (!std::getline(in, line) || line != kTraceHeader)
        fail(ErrorKind::Parse, path + ":1: expected header '" + std::string(kTraceHeader) + "'");
    NormTrace trace;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() && in.eof()) break;
        std::stringstream ss(line);
        std::string tok;
        std::vector<double> vals;
        while (std::getline(ss, tok, ',')) vals.push_back(parse_double(tok, path, lineno));
        if (vals.size() != 8)
            fail(ErrorKind::Parse,
                 path + ":" + std::to_string(lineno) + ": expected 8 columns, got " +
                     std::to_string(vals.size()));
        trace.rows.push_back(
            {vals[0], vals[1], vals[2], vals[3], vals[4], vals[5], vals[6], vals[7]});
    }
    return trace;
}

}  // namespace ipm
