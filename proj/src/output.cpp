// Copyright 2026 The bondauction Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bondauction/output.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace bondauction {
namespace {

using nlohmann::json;

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream ss(line);
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kParse, "bad number in CSV: '" + s + "'");
  }
  return v;
}

std::uint64_t parse_u64(const std::string& s) {
  std::uint64_t v = 0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size()) {
    throw Error(ErrorCode::kParse, "bad integer in CSV: '" + s + "'");
  }
  return v;
}

std::string flag_field(const std::vector<std::string>& flags) {
  std::string out;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (i) out += '|';
    for (char ch : flags[i]) out += (ch == ',' || ch == '\n' || ch == '|') ? ';' : ch;
  }
  return out;
}

void expect_header(std::istream& in, const char* header) {
  std::string line;
  if (!std::getline(in, line) || line != header) {
    throw Error(ErrorCode::kParse, std::string("expected CSV header '") + header + "'");
  }
}

template <class Writer>
std::string emit(const std::string& directory, const std::string& file, Writer&& write) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(directory, ec);
  const std::string path = (fs::path(directory) / file).string();
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  write(out);
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "write failed for '" + path + "'");
  return path;
}

}  // namespace

void write_campaign_csv(std::ostream& out, const CampaignResult& result) {
  out << kCampaignCsvHeader << '\n';
  for (const auto& r : result.replicates) {
    out << r.index << ',' << r.seed << ',' << format_double(r.aggregate_demand) << ','
        << format_double(r.stop_out) << ',' << (r.issued ? 1 : 0) << '\n';
  }
}

void write_campaign_jsonl(std::ostream& out, const CampaignResult& result) {
  for (const auto& r : result.replicates) {
    json j = {{"replicate", r.index},
              {"seed", r.seed},
              {"aggregate_demand", r.aggregate_demand},
              {"stop_out", r.stop_out},
              {"issued", r.issued},
              {"allocation_digest", r.allocation_digest},
              {"flagged_bidders", r.flagged_bidders}};
    if (!r.flag.empty()) j["flag"] = r.flag;
    out << j.dump() << '\n';
  }
}

std::string campaign_summary_json(const CampaignSummary& s) {
  json j = {{"replicates", s.replicates},       {"issued", s.issued},
            {"issuance_rate", s.issuance_rate}, {"mean_stop_out", s.mean_stop_out},
            {"min_stop_out", s.min_stop_out},   {"max_stop_out", s.max_stop_out},
            {"q05", s.q05},                     {"q25", s.q25},
            {"q50", s.q50},                     {"q75", s.q75},
            {"q95", s.q95}};
  return j.dump();
}

void write_sweep_csv(std::ostream& out, const SweepTable& table) {
  out << kSweepCsvHeader << '\n';
  for (const auto& r : table.rows) {
    out << format_double(r.axis_value) << ',' << format_double(r.bid) << ','
        << format_double(r.stop_out) << ',' << format_double(r.xi) << ',' << flag_field(r.flags)
        << '\n';
  }
}

void write_sweep_jsonl(std::ostream& out, const SweepTable& table) {
  for (const auto& r : table.rows) {
    json j = {{"axis", to_string(table.axis)}, {"axis_value", r.axis_value},
              {"bid", r.bid},                  {"stop_out", r.stop_out},
              {"xi", r.xi},                    {"lambda", r.lambda},
              {"flags", r.flags}};
    out << j.dump() << '\n';
  }
}

std::vector<ReplicateRecord> read_campaign_csv(std::istream& in) {
  expect_header(in, kCampaignCsvHeader);
  std::vector<ReplicateRecord> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 5) throw Error(ErrorCode::kParse, "campaign CSV row needs 5 fields: " + line);
    ReplicateRecord r;
    r.index = parse_u64(f[0]);
    r.seed = parse_u64(f[1]);
    r.aggregate_demand = parse_double(f[2]);
    r.stop_out = parse_double(f[3]);
    if (f[4] != "0" && f[4] != "1") throw Error(ErrorCode::kParse, "issued must be 0 or 1");
    r.issued = f[4] == "1";
    out.push_back(r);
  }
  return out;
}

std::vector<SweepRow> read_sweep_csv(std::istream& in) {
  expect_header(in, kSweepCsvHeader);
  std::vector<SweepRow> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 5) throw Error(ErrorCode::kParse, "sweep CSV row needs 5 fields: " + line);
    SweepRow r;
    r.axis_value = parse_double(f[0]);
    r.bid = parse_double(f[1]);
    r.stop_out = parse_double(f[2]);
    r.xi = parse_double(f[3]);
    if (!f[4].empty()) r.flags = split(f[4], '|');
    out.push_back(r);
  }
  return out;
}

std::string emit_campaign(const CampaignResult& result, OutputFormat format,
                          const std::string& directory, const std::string& stem) {
  if (format == OutputFormat::kCsv) {
    return emit(directory, stem + ".csv", [&](std::ostream& o) { write_campaign_csv(o, result); });
  }
  return emit(directory, stem + ".jsonl", [&](std::ostream& o) { write_campaign_jsonl(o, result); });
}

std::string emit_sweep(const SweepTable& table, OutputFormat format, const std::string& directory,
                       const std::string& stem) {
  if (format == OutputFormat::kCsv) {
    return emit(directory, stem + ".csv", [&](std::ostream& o) { write_sweep_csv(o, table); });
  }
  return emit(directory, stem + ".jsonl", [&](std::ostream& o) { write_sweep_jsonl(o, table); });
}

}  // namespace bondauction
