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

#include <optional>
#include <string>
#include <vector>

#include "qtv/circuit.hpp"

namespace qtv {

/// Two depth accounting schemes coexist. "paper" is a per-module cost-formula
/// evaluator: Toffoli-in-comparator weighted as three, reset gates counted,
/// simultaneous setter instances counted once; it reproduces the closed forms
/// below. "strict" is the plain DAG longest path: every gate costs one and
/// depends on the previous gates touching any of its qubits.
enum class DepthConvention { kPaper, kStrict };

/// Closed-form module depths under the paper convention. `n` is the number of
/// coordinate qubits per axis (patch is 2^n x 2^n, N = 4^n pixels) and `q`
/// the color register width.
namespace closed_form {
long long neqr(int n);                   // N(4(2n-1)+8)
long long swap_regs(int q);              // q
long long cycle_shift(int n);            // n(n-1)
long long setter();                      // 1
long long adder(int q);                  // 15q+1
long long subtractor(int q);             // 15q+3
long long pvalues(int q);                // 60q+8
long long comparator(int q);             // 8q
long long cswap(int q);                  // q
long long swapper(int q);                // 9q
long long sort3(int q);                  // 27q
long long median9(int q);                // 81q
long long neighborhood_prep(int n, int q);
long long qtv(int n, int q);
/// Closed form for a tag name, or nullopt when the paper gives none.
std::optional<long long> for_tag(const std::string& tag, int n, int q);
}  // namespace closed_form

struct DepthRow {
    std::string tag;
    int instances = 0;
    size_t gate_count = 0;        // total gates across instances
    size_t strict_depth = 0;      // longest path of a single instance (max over instances)
    std::optional<long long> paper_depth;  // closed form per instance
};

struct DepthReport {
    std::string convention;  // "paper" or "strict"
    int n = 0;
    int q = 0;
    size_t total_gates = 0;
    size_t total_strict_depth = 0;
    std::optional<long long> total_paper_depth;  // sum over top-level spans
    std::vector<DepthRow> rows;

    std::string to_json() const;
};

/// Longest dependency path of a gate subsequence, one unit per gate,
/// dependencies induced by shared qubits (controls and targets alike).
size_t strict_depth(std::span<const Gate> gates);

/// Builds the per-tag report for a circuit. The coordinate and color widths
/// are read from the layout ("x" and "c_f" registers when present, with a
/// fallback to the first register's width for standalone module circuits).
DepthReport depth_report(const Circuit& circuit, DepthConvention convention);

}  // namespace qtv
