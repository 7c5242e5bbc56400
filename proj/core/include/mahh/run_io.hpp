#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>
#include <vector>

#include "mahh/harness.hpp"

namespace mahh {

enum class RunFormat { Csv, Jsonl };

RunFormat parse_run_format(std::string_view text);

// CSV header: algo,n,m,p,seed,trial,T,T1,N,censored
// Absent T1/N are empty CSV fields and JSON nulls; censored is 0/1 in CSV.
// p uses the shortest decimal that round-trips the double.
inline constexpr std::string_view kRunsCsvHeader = "algo,n,m,p,seed,trial,T,T1,N,censored";
inline constexpr std::string_view kPhasesCsvHeader = "trial,phase_index,length,ended_at_optimum";

void write_runs(std::ostream& out, std::span<const RunRecord> records, RunFormat format);
/// Throws std::runtime_error naming the path on I/O failure.
void write_runs(const std::filesystem::path& path, std::span<const RunRecord> records,
                RunFormat format);

/// One row per completed phase; phase_index starts at 1.
void write_phases(std::ostream& out, std::span<const TrialResult> results);
void write_phases(const std::filesystem::path& path, std::span<const TrialResult> results);

std::vector<RunRecord> read_runs(std::istream& in, RunFormat format);

std::vector<RunRecord> records_of(std::span<const TrialResult> results);

}  // namespace mahh
