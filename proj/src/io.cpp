#include "funcut/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace funcut::io {

FormatError::FormatError(std::size_t line, const std::string &what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void write_coefficients(std::ostream &os, Basis basis, std::span<const Complex> coeffs) {
    const bool trig = basis == Basis::Trigonometric;
    os << (trig ? "wavenumber,re,im\n" : "index,re,im\n");
    const long long offset = trig ? static_cast<long long>(coeffs.size() - 1) / 2 : 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        os << static_cast<long long>(k) - offset << ',' << format_double(coeffs[k].real()) << ','
           << format_double(coeffs[k].imag()) << '\n';
    }
}

namespace {

std::string trim(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
        s.pop_back();
    std::size_t start = 0;
    while (start < s.size() && (s[start] == ' ' || s[start] == '\t'))
        ++start;
    return s.substr(start);
}

template <class T>
T parse_field(const std::string &field, std::size_t line, const char *name) {
    T value{};
    const std::string f = trim(field);
    const char *first = f.data();
    // from_chars rejects a leading '+'.
    if (!f.empty() && f.front() == '+')
        ++first;
    const auto [end, ec] = std::from_chars(first, f.data() + f.size(), value);
    if (f.empty() || ec != std::errc{} || end != f.data() + f.size())
        throw FormatError(line, std::string("malformed ") + name + " '" + f + "'");
    return value;
}

} // namespace

CoefficientFile read_coefficients(std::istream &is) {
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(is, line))
        throw FormatError(1, "empty file");
    ++lineno;
    if (line.size() >= 3 && static_cast<unsigned char>(line[0]) == 0xEF && static_cast<unsigned char>(line[1]) == 0xBB &&
        static_cast<unsigned char>(line[2]) == 0xBF)
        line.erase(0, 3);
    line = trim(line);

    CoefficientFile file;
    if (line == "index,re,im")
        file.basis = Basis::Chebyshev;
    else if (line == "wavenumber,re,im")
        file.basis = Basis::Trigonometric;
    else
        throw FormatError(lineno, "expected header 'index,re,im' or 'wavenumber,re,im'");

    std::vector<long long> indices;
    std::vector<std::size_t> row_lines;
    while (std::getline(is, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty())
            continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ','))
            fields.push_back(field);
        if (fields.size() != 3)
            throw FormatError(lineno, "expected 3 fields");
        indices.push_back(parse_field<long long>(fields[0], lineno, "index"));
        row_lines.push_back(lineno);
        const double re = parse_field<double>(fields[1], lineno, "real part");
        const double im = parse_field<double>(fields[2], lineno, "imaginary part");
        file.coeffs.emplace_back(re, im);
    }
    if (file.coeffs.empty())
        throw FormatError(lineno, "no coefficients");

    const long long n = static_cast<long long>(file.coeffs.size());
    if (file.basis == Basis::Trigonometric && n % 2 == 0)
        throw FormatError(lineno, "trigonometric series needs an odd number of rows");
    const long long first = file.basis == Basis::Chebyshev ? 0 : -(n - 1) / 2;
    for (long long k = 0; k < n; ++k)
        if (indices[static_cast<std::size_t>(k)] != first + k)
            throw FormatError(row_lines[static_cast<std::size_t>(k)], "indices must be consecutive starting at " +
                                                                   std::to_string(first));
    return file;
}

} // namespace funcut::io
