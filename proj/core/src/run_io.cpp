#include "mahh/run_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace mahh {
namespace {

std::string format_p(double p) {
  char buffer[40];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, p);
  return std::string(buffer, result.ptr);
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  return fields;
}

template <typename T>
T parse_number(const std::string& text, std::string_view field) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::runtime_error("runs file: bad value '" + text + "' in field " + std::string(field));
  }
  return value;
}

std::optional<std::uint64_t> parse_optional(const std::string& text, std::string_view field) {
  if (text.empty()) return std::nullopt;
  return parse_number<std::uint64_t>(text, field);
}

nlohmann::ordered_json to_json(const RunRecord& r) {
  nlohmann::ordered_json j;
  j["algo"] = r.algo;
  j["n"] = r.n;
  j["m"] = r.m;
  j["p"] = r.p;
  j["seed"] = r.seed;
  j["trial"] = r.trial;
  j["T"] = r.T;
  j["T1"] = r.T1 ? nlohmann::ordered_json(*r.T1) : nlohmann::ordered_json(nullptr);
  j["N"] = r.N ? nlohmann::ordered_json(*r.N) : nlohmann::ordered_json(nullptr);
  j["censored"] = r.censored;
  return j;
}

std::optional<std::uint64_t> optional_from_json(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<std::uint64_t>();
}

}  // namespace

RunFormat parse_run_format(std::string_view text) {
  if (text == "csv") return RunFormat::Csv;
  if (text == "jsonl") return RunFormat::Jsonl;
  throw std::invalid_argument("unknown format '" + std::string(text) + "' (expected csv or jsonl)");
}

void write_runs(std::ostream& out, std::span<const RunRecord> records, RunFormat format) {
  if (format == RunFormat::Csv) {
    out << kRunsCsvHeader << '\n';
    for (const auto& r : records) {
      out << csv_field(r.algo) << ',' << r.n << ',' << r.m << ',' << format_p(r.p) << ','
          << r.seed << ',' << r.trial << ',' << r.T << ',';
      if (r.T1) out << *r.T1;
      out << ',';
      if (r.N) out << *r.N;
      out << ',' << (r.censored ? 1 : 0) << '\n';
    }
  } else {
    for (const auto& r : records) out << to_json(r).dump() << '\n';
  }
}

void write_runs(const std::filesystem::path& path, std::span<const RunRecord> records,
                RunFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  write_runs(out, records, format);
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

void write_phases(std::ostream& out, std::span<const TrialResult> results) {
  out << kPhasesCsvHeader << '\n';
  for (const auto& result : results) {
    const auto& lengths = result.phases.lengths;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      const bool at_optimum = result.phases.N && i + 1 == *result.phases.N;
      out << result.record.trial << ',' << i + 1 << ',' << lengths[i] << ','
          << (at_optimum ? 1 : 0) << '\n';
    }
  }
}

void write_phases(const std::filesystem::path& path, std::span<const TrialResult> results) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  write_phases(out, results);
  out.flush();
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

std::vector<RunRecord> read_runs(std::istream& in, RunFormat format) {
  std::vector<RunRecord> records;
  std::string line;
  if (format == RunFormat::Csv) {
    if (!std::getline(in, line) || line != kRunsCsvHeader) {
      throw std::runtime_error("runs CSV: missing or unexpected header");
    }
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto f = split_csv_line(line);
      if (f.size() != 10) throw std::runtime_error("runs CSV: expected 10 fields in '" + line + "'");
      RunRecord r;
      r.algo = f[0];
      r.n = parse_number<int>(f[1], "n");
      r.m = parse_number<int>(f[2], "m");
      r.p = parse_number<double>(f[3], "p");
      r.seed = parse_number<std::uint64_t>(f[4], "seed");
      r.trial = parse_number<std::uint64_t>(f[5], "trial");
      r.T = parse_number<std::uint64_t>(f[6], "T");
      r.T1 = parse_optional(f[7], "T1");
      r.N = parse_optional(f[8], "N");
      r.censored = parse_number<int>(f[9], "censored") != 0;
      records.push_back(std::move(r));
    }
  } else {
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const auto j = nlohmann::json::parse(line);
      RunRecord r;
      r.algo = j.at("algo").get<std::string>();
      r.n = j.at("n").get<int>();
      r.m = j.at("m").get<int>();
      r.p = j.at("p").get<double>();
      r.seed = j.at("seed").get<std::uint64_t>();
      r.trial = j.at("trial").get<std::uint64_t>();
      r.T = j.at("T").get<std::uint64_t>();
      r.T1 = optional_from_json(j, "T1");
      r.N = optional_from_json(j, "N");
      r.censored = j.at("censored").get<bool>();
      records.push_back(std::move(r));
    }
  }
  return records;
}

std::vector<RunRecord> records_of(std::span<const TrialResult> results) {
  std::vector<RunRecord> records;
  records.reserve(results.size());
  for (const auto& r : results) records.push_back(r.record);
  return records;
}

}  // namespace mahh
