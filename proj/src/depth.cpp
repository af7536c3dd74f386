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

#include "qtv/depth.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>

namespace qtv {
namespace closed_form {

long long neqr(int n) {
    const long long pixels = 1LL << (2 * n);
    return pixels * (4LL * (2 * n - 1) + 8);
}
long long swap_regs(int q) { return q; }
long long cycle_shift(int n) { return static_cast<long long>(n) * (n - 1); }
long long setter() { return 1; }
long long adder(int q) { return 15LL * q + 1; }
long long subtractor(int q) { return 15LL * q + 3; }
long long pvalues(int q) { return 60LL * q + 8; }
long long comparator(int q) { return 8LL * q; }
long long cswap(int q) { return q; }
long long swapper(int q) { return 9LL * q; }
long long sort3(int q) { return 27LL * q; }
long long median9(int q) { return 81LL * q; }

long long neighborhood_prep(int n, int q) {
    const long long pixels = 1LL << (2 * n);
    return 5 * (8 * pixels * n + 4 * pixels + q + static_cast<long long>(n) * (n - 1));
}

long long qtv(int n, int q) { return neighborhood_prep(n, q) + pvalues(q) + median9(q); }

std::optional<long long> for_tag(const std::string& tag, int n, int q) {
    if (tag == "NEQR") return neqr(n);
    if (tag == "SWAP") return swap_regs(q);
    if (tag == "CS") return cycle_shift(n);
    if (tag == "SET") return setter();
    if (tag == "ADD") return adder(q);
    if (tag == "SUB") return subtractor(q);
    if (tag == "PC") return pvalues(q);
    if (tag == "COMP") return comparator(q);
    if (tag == "CSWAP") return cswap(q);
    if (tag == "SWPR") return swapper(q);
    if (tag == "SORT") return sort3(q);
    if (tag == "MF") return median9(q);
    if (tag == "NP") return neighborhood_prep(n, q);
    if (tag == "QTV") return qtv(n, q);
    return std::nullopt;
}

}  // namespace closed_form

size_t strict_depth(std::span<const Gate> gates) {
    std::map<uint16_t, size_t> ready_at;  // qubit -> depth of its last gate
    size_t depth = 0;
    for (const Gate& g : gates) {
        size_t t = 0;
        for (auto c : g.control_span()) t = std::max(t, ready_at[c]);
        for (auto tq : g.target_span()) t = std::max(t, ready_at[tq]);
        ++t;
        for (auto c : g.control_span()) ready_at[c] = t;
        for (auto tq : g.target_span()) ready_at[tq] = t;
        depth = std::max(depth, t);
    }
    return depth;
}

namespace {

int infer_color_width(const RegisterLayout& layout) {
    if (layout.has("c_f")) return layout.range("c_f").size;
    if (!layout.registers().empty()) return layout.registers().front().second.size;
    return 0;
}

int infer_coord_width(const RegisterLayout& layout) {
    if (layout.has("x")) return layout.range("x").size;
    return 0;
}

}  // namespace

DepthReport depth_report(const Circuit& circuit, DepthConvention convention) {
    DepthReport report;
    report.convention = convention == DepthConvention::kPaper ? "paper" : "strict";
    report.n = infer_coord_width(circuit.layout());
    report.q = infer_color_width(circuit.layout());
    report.total_gates = circuit.size();
    report.total_strict_depth = strict_depth(circuit.gates());

    struct Agg {
        int instances = 0;
        size_t gates = 0;
        size_t strict = 0;
    };
    std::map<std::string, Agg> agg;
    for (const auto& span : circuit.spans()) {
        auto& a = agg[span.tag];
        ++a.instances;
        a.gates += span.end - span.begin;
        const std::span<const Gate> view(circuit.gates().data() + span.begin,
                                         span.end - span.begin);
        a.strict = std::max(a.strict, strict_depth(view));
    }
    for (const auto& [tag, a] : agg) {
        DepthRow row;
        row.tag = tag;
        row.instances = a.instances;
        row.gate_count = a.gates;
        row.strict_depth = a.strict;
        row.paper_depth = closed_form::for_tag(tag, report.n, report.q);
        report.rows.push_back(row);
    }

    long long paper_total = 0;
    bool have_paper_total = !circuit.spans().empty();
    for (const auto& tag : circuit.top_level_tags()) {
        if (auto v = closed_form::for_tag(tag, report.n, report.q)) {
            paper_total += *v;
        } else {
            have_paper_total = false;
        }
    }
    if (have_paper_total) report.total_paper_depth = paper_total;
    return report;
}

std::string DepthReport::to_json() const {
    nlohmann::json j;
    j["convention"] = convention;
    j["n"] = n;
    j["q"] = q;
    j["total_gates"] = total_gates;
    j["total_strict_depth"] = total_strict_depth;
    if (total_paper_depth) j["total_paper_depth"] = *total_paper_depth;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json r;
        r["tag"] = row.tag;
        r["instances"] = row.instances;
        r["gate_count"] = row.gate_count;
        r["strict_depth"] = row.strict_depth;
        if (row.paper_depth) r["paper_depth"] = *row.paper_depth;
        j["rows"].push_back(r);
    }
    return j.dump(2);
}

}  // namespace qtv
