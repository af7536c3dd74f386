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

#include "qtv/circuit.hpp"

#include <algorithm>

namespace qtv {

Gate Gate::x(uint16_t t) {
    Gate g;
    g.kind = GateKind::kX;
    g.targets[0] = t;
    return g;
}

Gate Gate::h(uint16_t t) {
    Gate g;
    g.kind = GateKind::kH;
    g.targets[0] = t;
    return g;
}

Gate Gate::reset(uint16_t t) {
    Gate g;
    g.kind = GateKind::kReset;
    g.targets[0] = t;
    return g;
}

Gate Gate::cnot(uint16_t c, uint16_t t, bool c_negated) {
    Gate g;
    g.kind = GateKind::kCnot;
    g.n_controls = 1;
    g.controls[0] = c;
    g.targets[0] = t;
    g.neg_mask = c_negated ? 1 : 0;
    return g;
}

Gate Gate::toffoli(uint16_t c0, uint16_t c1, uint16_t t, uint8_t neg_mask) {
    Gate g;
    g.kind = GateKind::kToffoli;
    g.n_controls = 2;
    g.controls[0] = c0;
    g.controls[1] = c1;
    g.targets[0] = t;
    g.neg_mask = neg_mask;
    return g;
}

Gate Gate::mcx(std::span<const uint16_t> cs, uint16_t t, uint8_t neg_mask) {
    if (cs.size() < 3) throw CircuitError("MCX requires at least 3 controls");
    if (cs.size() > kMaxControls) throw CircuitError("too many MCX controls");
    Gate g;
    g.kind = GateKind::kMcx;
    g.n_controls = static_cast<uint8_t>(cs.size());
    std::copy(cs.begin(), cs.end(), g.controls.begin());
    g.targets[0] = t;
    g.neg_mask = neg_mask;
    return g;
}

Gate Gate::controlled_x(std::span<const uint16_t> cs, uint16_t t, uint8_t neg_mask) {
    switch (cs.size()) {
        case 0:
            return x(t);
        case 1:
            return cnot(cs[0], t, neg_mask & 1);
        case 2:
            return toffoli(cs[0], cs[1], t, neg_mask);
        default:
            return mcx(cs, t, neg_mask);
    }
}

Gate Gate::swap_regs(uint16_t a, uint16_t b) {
    Gate g;
    g.kind = GateKind::kSwap;
    g.n_targets = 2;
    g.targets[0] = a;
    g.targets[1] = b;
    return g;
}

Gate Gate::cswap(uint16_t c, uint16_t a, uint16_t b, bool c_negated) {
    Gate g;
    g.kind = GateKind::kCswap;
    g.n_controls = 1;
    g.controls[0] = c;
    g.n_targets = 2;
    g.targets[0] = a;
    g.targets[1] = b;
    g.neg_mask = c_negated ? 1 : 0;
    return g;
}

void Gate::validate(size_t total_qubits) const {
    for (auto t : target_span()) {
        if (t >= total_qubits) throw CircuitError("gate target index out of range");
    }
    if (n_targets == 2 && targets[0] == targets[1]) {
        throw CircuitError("gate targets must be distinct");
    }
    for (auto c : control_span()) {
        if (c >= total_qubits) throw CircuitError("gate control index out of range");
        for (auto t : target_span()) {
            if (c == t) throw CircuitError("control and target overlap");
        }
    }
    for (size_t i = 0; i < n_controls; ++i) {
        for (size_t j = i + 1; j < n_controls; ++j) {
            if (controls[i] == controls[j]) throw CircuitError("duplicate control qubit");
        }
    }
}

uint16_t RegisterLayout::add(std::string name, uint16_t size) {
    if (size == 0) throw CircuitError("register size must be positive");
    if (has(name)) throw CircuitError("duplicate register name: " + name);
    const uint16_t begin = next_;
    if (static_cast<size_t>(begin) + size > BitState::kCapacity) {
        throw CircuitError("register layout exceeds simulator capacity");
    }
    regs_.emplace_back(std::move(name), QubitRange{begin, size});
    next_ = static_cast<uint16_t>(begin + size);
    return begin;
}

bool RegisterLayout::has(std::string_view name) const {
    return std::any_of(regs_.begin(), regs_.end(),
                       [&](const auto& r) { return r.first == name; });
}

QubitRange RegisterLayout::range(std::string_view name) const {
    for (const auto& [n, r] : regs_) {
        if (n == name) return r;
    }
    throw CircuitError("unknown register: " + std::string(name));
}

uint64_t read_register(const BitState& bits, QubitRange r) {
    uint64_t v = 0;
    for (int i = r.size - 1; i >= 0; --i) {
        v = (v << 1) | (bits.get(r[i]) ? 1u : 0u);
    }
    return v;
}

void write_register(BitState& bits, QubitRange r, uint64_t value) {
    for (int i = 0; i < r.size; ++i) {
        bits.set(r[i], (value >> i) & 1);
    }
}

void simulate_permutation(const Gate& gate, BitState& bits) {
    switch (gate.kind) {
        case GateKind::kH:
            throw CircuitError("H gate passed to the permutation evaluator");
        case GateKind::kReset:
            bits.set(gate.targets[0], false);
            return;
        case GateKind::kSwap: {
            const bool a = bits.get(gate.targets[0]);
            const bool b = bits.get(gate.targets[1]);
            bits.set(gate.targets[0], b);
            bits.set(gate.targets[1], a);
            return;
        }
        default:
            break;
    }
    // Controlled X family and CSWAP: fire iff every control matches its
    // polarity.
    for (size_t i = 0; i < gate.n_controls; ++i) {
        const bool want = ((gate.neg_mask >> i) & 1) == 0;
        if (bits.get(gate.controls[i]) != want) return;
    }
    if (gate.kind == GateKind::kCswap) {
        const bool a = bits.get(gate.targets[0]);
        const bool b = bits.get(gate.targets[1]);
        bits.set(gate.targets[0], b);
        bits.set(gate.targets[1], a);
    } else {
        bits.flip(gate.targets[0]);
    }
}

Circuit::Circuit(RegisterLayout layout) : layout_(std::move(layout)) {}

void Circuit::append(const Gate& gate) {
    gate.validate(layout_.total_qubits());
    gates_.push_back(gate);
}

void Circuit::compose(const Circuit& sub, std::string_view tag) {
    if (sub.layout().total_qubits() != layout_.total_qubits()) {
        throw CircuitError("compose requires matching qubit counts");
    }
    const size_t offset = gates_.size();
    gates_.insert(gates_.end(), sub.gates_.begin(), sub.gates_.end());
    for (const auto& s : sub.spans_) {
        spans_.push_back({s.tag, s.begin + offset, s.end + offset});
    }
    spans_.push_back({std::string(tag), offset, gates_.size()});
}

std::vector<std::string> Circuit::top_level_tags() const {
    std::vector<std::string> out;
    std::vector<const TagSpan*> top;
    for (const auto& s : spans_) {
        bool contained = false;
        for (const auto& other : spans_) {
            if (&other == &s) continue;
            const bool strictly_inside =
                other.begin <= s.begin && s.end <= other.end &&
                (other.begin != s.begin || other.end != s.end);
            if (strictly_inside) {
                contained = true;
                break;
            }
        }
        if (!contained) top.push_back(&s);
    }
    std::sort(top.begin(), top.end(),
              [](const TagSpan* a, const TagSpan* b) { return a->begin < b->begin; });
    for (const auto* s : top) out.push_back(s->tag);
    return out;
}

}  // namespace qtv
