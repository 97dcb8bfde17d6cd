// Copyright 2026 The QSS Toolkit Authors
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

#ifndef QSS_IO_HPP
#define QSS_IO_HPP

#include <string>

#include "qss/access.hpp"
#include "qss/codes.hpp"
#include "qss/hybrid.hpp"
#include "qss/oracle.hpp"
#include "qss/scheme.hpp"

namespace qss::io {

/// All files are JSON with a versioned top-level field "format": "qss/1"
/// and a "kind" naming the payload.  Loaders raise ParseError with a
/// description of what was malformed.

std::string structure_to_json(const AccessStructure& s);
AccessStructure structure_from_json(const std::string& text);

std::string code_to_json(const LinearCode& c);
LinearCode code_from_json(const std::string& text);

std::string scheme_to_json(const Scheme& s);
Scheme scheme_from_json(const std::string& text);

std::string hybrid_to_json(const HybridScheme& h);
HybridScheme hybrid_from_json(const std::string& text);

/// Amplitudes stored as (re, im) pairs at 17 significant digits.
std::string state_to_json(const StateVector& v);
StateVector state_from_json(const std::string& text);

std::string density_to_json(const DensityMatrix& rho);
DensityMatrix density_from_json(const std::string& text);

/// The optional stabilizer_table string is embedded verbatim (hybrid
/// reports carry their generator display).
std::string access_map_to_json(const AccessMap& map, const std::string& source,
                               const std::string& stabilizer_table = "");
/// Human-readable table, one row per subset, stable ordering.
std::string access_map_to_text(const AccessMap& map);

std::string audit_to_json(const SizeAudit& audit);
std::string audit_to_text(const SizeAudit& audit);

/// The hybrid stabilizer in display form, phases on the left column.
std::string hybrid_table_text(const HybridScheme& h);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

/// Dispatch helper: "scheme" or "hybrid" for descriptor files.
std::string kind_of(const std::string& text);

}  // namespace qss::io

#endif
