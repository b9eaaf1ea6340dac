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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bondauction/common.hpp"
#include "bondauction/experiments.hpp"

namespace bondauction {

inline constexpr const char* kCampaignCsvHeader = "replicate,seed,aggregate_demand,stop_out,issued";
inline constexpr const char* kSweepCsvHeader = "axis_value,bid,stop_out,xi,flags";

enum class OutputFormat { kCsv, kJsonLines };

void write_campaign_csv(std::ostream& out, const CampaignResult& result);
void write_campaign_jsonl(std::ostream& out, const CampaignResult& result);
void write_sweep_csv(std::ostream& out, const SweepTable& table);
void write_sweep_jsonl(std::ostream& out, const SweepTable& table);

/// Summary statistics as one JSON object.
std::string campaign_summary_json(const CampaignSummary& summary);

/// Reads a campaign CSV back. Only the columns in the file are filled.
std::vector<ReplicateRecord> read_campaign_csv(std::istream& in);
std::vector<SweepRow> read_sweep_csv(std::istream& in);

/// Writes `<directory>/<stem>.csv` or `.jsonl`. Throws Error(kIo) when the
/// file cannot be written. Returns the path.
std::string emit_campaign(const CampaignResult& result, OutputFormat format,
                          const std::string& directory, const std::string& stem = "campaign");
std::string emit_sweep(const SweepTable& table, OutputFormat format, const std::string& directory,
                       const std::string& stem = "sweep");

}  // namespace bondauction
