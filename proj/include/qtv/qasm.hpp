// Copyright 2026 The qtv Authors
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

#pragma once

#include <string>

#include "qtv/circuit.hpp"

namespace qtv {

/// Serializes a circuit as OpenQASM 2.0 restricted to qelib1 gates. Named
/// registers become qregs in layout order. Negative controls lower to
/// X-gate-X; MCX lowers to the standard Toffoli ladder using k-2 ancillas,
/// declared as an extra qreg when needed.
std::string export_qasm(const Circuit& circuit);

/// Gate and qubit totals of an OpenQASM 2.0 text, as seen by a re-importing
/// parser. Used to check round-trip parity of the exporter.
struct QasmCounts {
    size_t qubits = 0;
    size_t gates = 0;  // gate statements plus resets
};
QasmCounts parse_qasm_counts(const std::string& text);

}  // namespace qtv
