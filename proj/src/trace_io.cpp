#include "fce/trace_io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fce {

namespace {

constexpr std::string_view kHeader = "generation,best_so_far_F,gen_best_F,elapsed_s,genome_size";

std::vector<std::string_view> split(std::string_view line, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        out.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

template <typename Int>
Int parse_int(std::string_view text) {
    Int value{};
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::runtime_error("malformed integer '" + std::string(text) + "' in trace CSV");
    }
    return value;
}

}  // namespace

std::string format_double(double x) {
    std::array<char, 64> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), ptr);
}

double parse_double(std::string_view text) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw std::runtime_error("malformed number '" + std::string(text) + "'");
    }
    return value;
}

std::string trace_to_csv(std::span<const GenerationRecord> records, bool include_elapsed) {
    std::string out(kHeader);
    out += '\n';
    for (const auto& r : records) {
        out += std::to_string(r.generation);
        out += ',';
        out += format_double(r.best_so_far);
        out += ',';
        out += format_double(r.gen_best);
        out += ',';
        if (include_elapsed) out += format_double(r.elapsed_s);
        out += ',';
        out += std::to_string(r.genome_size);
        out += '\n';
    }
    return out;
}

void write_trace_file(std::span<const GenerationRecord> records, const std::filesystem::path& path,
                      bool include_elapsed) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
    out << trace_to_csv(records, include_elapsed);
    if (!out) throw std::runtime_error(path.string() + ": write failed");
}

std::vector<GenerationRecord> trace_from_csv(std::string_view text) {
    std::vector<GenerationRecord> records;
    bool header_seen = false;
    for (std::string_view line : split(text, '\n')) {
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        if (!header_seen) {
            if (line != kHeader) throw std::runtime_error("trace CSV has an unexpected header");
            header_seen = true;
            continue;
        }
        const auto fields = split(line, ',');
        if (fields.size() != 5) {
            throw std::runtime_error("trace CSV row has " + std::to_string(fields.size()) +
                                     " fields, expected 5");
        }
        GenerationRecord r;
        r.generation = parse_int<int>(fields[0]);
        r.best_so_far = parse_double(fields[1]);
        r.gen_best = parse_double(fields[2]);
        r.elapsed_s = fields[3].empty() ? std::numeric_limits<double>::quiet_NaN()
                                        : parse_double(fields[3]);
        r.genome_size = parse_int<std::size_t>(fields[4]);
        records.push_back(r);
    }
    if (!header_seen) throw std::runtime_error("trace CSV is empty");
    return records;
}

std::vector<GenerationRecord> read_trace_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(path.string() + ": cannot open trace file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return trace_from_csv(buf.str());
}

}  // namespace fce
