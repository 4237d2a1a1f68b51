#include "dho/csv.hpp"

#include <cstdio>

namespace dho::csv {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

bool needs_quoting(const std::string& s) {
    return s.find_first_of(",\"\n\r") != std::string::npos;
}

std::string quoted(const std::string& s) {
    if (!needs_quoting(s)) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

void Writer::comment(const std::string& text) {
    os_ << "# " << text << "\n";
}

void Writer::header(const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) os_ << ',';
        os_ << quoted(names[i]);
    }
    os_ << "\n";
}

Writer& Writer::field(const std::string& s) {
    if (row_open_) os_ << ',';
    os_ << quoted(s);
    row_open_ = true;
    return *this;
}

Writer& Writer::field(double v) { return field(format_double(v)); }

Writer& Writer::field(int v) { return field(std::to_string(v)); }

Writer& Writer::field(std::complex<double> v) {
    field(v.real());
    return field(v.imag());
}

void Writer::end_row() {
    os_ << "\n";
    row_open_ = false;
}

} // namespace dho::csv
