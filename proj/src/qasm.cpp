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

#include "qtv/qasm.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace qtv {
namespace {

// Maps an absolute qubit index to "reg[offset]".
class QubitNamer {
  public:
    explicit QubitNamer(const RegisterLayout& layout) : layout_(layout) {}

    std::string operator()(uint16_t q) const {
        for (const auto& [name, range] : layout_.registers()) {
            if (q >= range.begin && q < range.begin + range.size) {
                return name + "[" + std::to_string(q - range.begin) + "]";
            }
        }
        throw CircuitError("qubit index outside every register");
    }

  private:
    const RegisterLayout& layout_;
};

void emit_ccx(std::ostream& os, const QubitNamer& name, const std::string& anc_reg,
              std::span<const uint16_t> ctrls, uint16_t target) {
    // Toffoli ladder: fold controls pairwise into ancillas, fire the target,
    // then unfold to return the ancillas to |0>.
    const auto anc = [&](size_t i) { return anc_reg + "[" + std::to_string(i) + "]"; };
    std::vector<std::string> fold;
    fold.push_back("ccx " + name(ctrls[0]) + "," + name(ctrls[1]) + "," + anc(0) + ";");
    for (size_t j = 2; j + 1 < ctrls.size(); ++j) {
        fold.push_back("ccx " + name(ctrls[j]) + "," + anc(j - 2) + "," + anc(j - 1) + ";");
    }
    for (const auto& l : fold) os << l << "\n";
    os << "ccx " << name(ctrls.back()) << "," << anc(ctrls.size() - 3) << "," << name(target)
       << ";\n";
    for (auto it = fold.rbegin(); it != fold.rend(); ++it) os << *it << "\n";
}

}  // namespace

std::string export_qasm(const Circuit& circuit) {
    const auto& layout = circuit.layout();
    QubitNamer name(layout);

    size_t max_mcx = 0;
    for (const auto& g : circuit.gates()) {
        if (g.kind == GateKind::kMcx) max_mcx = std::max<size_t>(max_mcx, g.n_controls);
    }

    std::ostringstream os;
    os << "OPENQASM 2.0;\n";
    os << "include \"qelib1.inc\";\n";
    for (const auto& [reg, range] : layout.registers()) {
        os << "qreg " << reg << "[" << range.size << "];\n";
    }
    const std::string anc_reg = "mcx_anc";
    const size_t anc_count = max_mcx >= 3 ? max_mcx - 2 : 0;
    if (anc_count > 0) {
        os << "qreg " << anc_reg << "[" << anc_count << "];\n";
    }

    for (const auto& g : circuit.gates()) {
        // Negative controls are stored as polarity flags; they surface here
        // as an X sandwich around the controlled gate.
        std::vector<uint16_t> negated;
        for (size_t i = 0; i < g.n_controls; ++i) {
            if ((g.neg_mask >> i) & 1) negated.push_back(g.controls[i]);
        }
        for (auto qb : negated) os << "x " << name(qb) << ";\n";
        switch (g.kind) {
            case GateKind::kX:
                os << "x " << name(g.targets[0]) << ";\n";
                break;
            case GateKind::kH:
                os << "h " << name(g.targets[0]) << ";\n";
                break;
            case GateKind::kReset:
                os << "reset " << name(g.targets[0]) << ";\n";
                break;
            case GateKind::kCnot:
                os << "cx " << name(g.controls[0]) << "," << name(g.targets[0]) << ";\n";
                break;
            case GateKind::kToffoli:
                os << "ccx " << name(g.controls[0]) << "," << name(g.controls[1]) << ","
                   << name(g.targets[0]) << ";\n";
                break;
            case GateKind::kMcx:
                emit_ccx(os, name, anc_reg, g.control_span(), anc_count, g.targets[0]);
                break;
            case GateKind::kSwap:
                os << "swap " << name(g.targets[0]) << "," << name(g.targets[1]) << ";\n";
                break;
            case GateKind::kCswap:
                os << "cswap " << name(g.controls[0]) << "," << name(g.targets[0]) << ","
                   << name(g.targets[1]) << ";\n";
                break;
        }
        for (auto qb : negated) os << "x " << name(qb) << ";\n";
    }
    return os.str();
}

QasmCounts parse_qasm_counts(const std::string& text) {
    QasmCounts counts;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        // Strip comments and surrounding whitespace.
        if (auto pos = line.find("//"); pos != std::string::npos) line.erase(pos);
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const auto e = line.find_last_not_of(" \t\r");
        line = line.substr(b, e - b + 1);
        if (line.empty()) continue;
        if (line.rfind("OPENQASM", 0) == 0 || line.rfind("include", 0) == 0 ||
            line.rfind("creg", 0) == 0) {
            continue;
        }
        if (line.rfind("qreg", 0) == 0) {
            const auto l = line.find('[');
            const auto r = line.find(']');
            if (l == std::string::npos || r == std::string::npos || r < l) {
                throw CircuitError("malformed qreg declaration: " + line);
            }
            counts.qubits += static_cast<size_t>(std::stoul(line.substr(l + 1, r - l - 1)));
            continue;
        }
        if (line.back() != ';') throw CircuitError("malformed QASM statement: " + line);
        counts.gates += 1;
    }
    return counts;
}

}  // namespace qtv
