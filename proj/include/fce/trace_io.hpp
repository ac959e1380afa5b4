#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fce/optimizers.hpp"

namespace fce {

/// Shortest decimal form that parses back to the same double ("-inf" for the
/// degenerate sentinel).
std::string format_double(double x);
double parse_double(std::string_view text);

/// CSV with header generation,best_so_far_F,gen_best_F,elapsed_s,genome_size.
/// With `include_elapsed` false the elapsed_s fields are left empty, which
/// keeps generation-capped traces byte-reproducible.
std::string trace_to_csv(std::span<const GenerationRecord> records, bool include_elapsed = true);
void write_trace_file(std::span<const GenerationRecord> records, const std::filesystem::path& path,
                      bool include_elapsed = true);

/// Inverse of trace_to_csv. Empty elapsed_s fields read back as NaN.
std::vector<GenerationRecord> trace_from_csv(std::string_view text);
std::vector<GenerationRecord> read_trace_file(const std::filesystem::path& path);

}  // namespace fce
