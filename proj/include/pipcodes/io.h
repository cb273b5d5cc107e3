// Copyright 2026 The pipcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PIPCODES_IO_H
#define PIPCODES_IO_H

#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "pipcodes/channels.h"
#include "pipcodes/clifford.h"
#include "pipcodes/code_finder.h"
#include "pipcodes/verify.h"

namespace pipcodes {

using json = nlohmann::ordered_json;
using AnyChannel = std::variant<GeneralChannel, PauliChannel, PIPChannel>;

/// Serializes with every floating point number written to 17 significant digits.
std::string dump_json(const json &value, int indent = 2);

/// Reads and validates a channel document. The "type" field selects
///   {"type":"pauli","n":2,"terms":[{"pauli":"ZZ","prob":0.5},...]}
///   {"type":"kraus","n":1,"ops":[[[re,im],...],...]}   (row-major entries)
///   {"type":"pip","n":2,"rep":"prob"|"eigen","classes":[{"w":[0,0,2],"value":0.5},...]}
/// Throws ParseError (syntax, schema, with line and column where known) or
/// ValidationError (with the defect magnitudes). Warnings such as stripped
/// Pauli phases are appended to `warnings` when given.
AnyChannel parse_channel(const std::string &text, std::vector<std::string> *warnings = nullptr);
AnyChannel load_channel(const std::string &path, std::vector<std::string> *warnings = nullptr);

json to_json(const GeneralChannel &ch);
json to_json(const PauliChannel &ch);
json to_json(const PIPChannel &ch);
json to_json(const AnyChannel &ch);
json to_json(const CliffordCircuit &circ);
json to_json(const CodeReport &report);
json to_json(const FidelityReport &report);
json to_json(const EstimationResult &result);
/// Labeled matrix: {"n":..,"classes":["(0,0,0)",...],"rows":[{"v":[..],"entries":[..]},...]}.
json to_json(const OmegaMatrix &omega);

/// Omega as CSV with a header row of column class labels and one labeled row per class v.
std::string omega_csv(const OmegaMatrix &omega);

CliffordCircuit circuit_from_json(const json &doc);
CodeReport code_report_from_json(const json &doc);
CodeReport load_code_report(const std::string &path);

/// Parses "wx,wy,wz".
WeightClass parse_weight_class(const std::string &text);

}  // namespace pipcodes

#endif
