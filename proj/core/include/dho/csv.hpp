#pragma once

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace dho::csv {

// 17-significant-digit scientific form; round-trips doubles exactly.
std::string format_double(double v);

std::uint64_t fnv1a(const std::string& text);

// RFC-4180-style writer ('\n' line ends, '.' decimal, quoting only when a
// field contains a comma/quote/newline).  Comment lines start with '#'.
class Writer {
public:
    explicit Writer(std::ostream& os) : os_(os) {}

    void comment(const std::string& text);
    void header(const std::vector<std::string>& names);

    Writer& field(const std::string& s);
    Writer& field(double v);
    Writer& field(int v);
    Writer& field(std::complex<double> v); // two fields: re, im
    void end_row();

private:
    std::ostream& os_;
    bool row_open_ = false;
};

} // namespace dho::csv
