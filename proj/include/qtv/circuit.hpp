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

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qtv {

struct CircuitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class GateKind : uint8_t { kX, kH, kCnot, kToffoli, kMcx, kSwap, kCswap, kReset };

/// One reversible gate over absolute qubit indices. Controls carry a polarity
/// flag: bit i of neg_mask set means control i fires on |0> (realized as
/// X-control-X when counting or exporting). Every kind except H permutes
/// basis states; H appears only in the initial coordinate layer of NEQR.
struct Gate {
    static constexpr int kMaxControls = 6;

    GateKind kind = GateKind::kX;
    uint8_t n_controls = 0;
    uint8_t n_targets = 1;
    uint8_t neg_mask = 0;
    std::array<uint16_t, kMaxControls> controls{};
    std::array<uint16_t, 2> targets{};

    static Gate x(uint16_t t);
    static Gate h(uint16_t t);
    static Gate reset(uint16_t t);
    static Gate cnot(uint16_t c, uint16_t t, bool c_negated = false);
    static Gate toffoli(uint16_t c0, uint16_t c1, uint16_t t, uint8_t neg_mask = 0);
    static Gate mcx(std::span<const uint16_t> cs, uint16_t t, uint8_t neg_mask = 0);
    /// Controlled-X with the kind chosen from the control count (X, CNOT,
    /// TOFFOLI or MCX).
    static Gate controlled_x(std::span<const uint16_t> cs, uint16_t t, uint8_t neg_mask = 0);
    static Gate swap_regs(uint16_t a, uint16_t b);
    static Gate cswap(uint16_t c, uint16_t a, uint16_t b, bool c_negated = false);

    std::span<const uint16_t> control_span() const { return {controls.data(), n_controls}; }
    std::span<const uint16_t> target_span() const { return {targets.data(), n_targets}; }
    void validate(size_t total_qubits) const;
};

/// A contiguous, named qubit range.
struct QubitRange {
    uint16_t begin = 0;
    uint16_t size = 0;
    uint16_t operator[](int bit) const { return static_cast<uint16_t>(begin + bit); }
};

/// Named register map. Registers are laid out contiguously in insertion
/// order; bit 0 of every register is its least significant qubit. QASM export
/// and measurement decoding both rely on this ordering.
class RegisterLayout {
  public:
    uint16_t add(std::string name, uint16_t size);
    bool has(std::string_view name) const;
    QubitRange range(std::string_view name) const;
    uint16_t total_qubits() const { return next_; }
    const std::vector<std::pair<std::string, QubitRange>>& registers() const { return regs_; }

  private:
    std::vector<std::pair<std::string, QubitRange>> regs_;
    uint16_t next_ = 0;
};

/// Classical assignment of every qubit; the per-branch simulation state.
/// Capacity is fixed at 256 bits, which covers the full QTV layout with room
/// to spare.
struct BitState {
    static constexpr size_t kCapacity = 256;
    std::array<uint64_t, 4> words{};

    bool get(uint16_t q) const { return (words[q >> 6] >> (q & 63)) & 1; }
    void set(uint16_t q, bool v) {
        const uint64_t m = 1ULL << (q & 63);
        if (v)
            words[q >> 6] |= m;
        else
            words[q >> 6] &= ~m;
    }
    void flip(uint16_t q) { words[q >> 6] ^= 1ULL << (q & 63); }
    bool operator==(const BitState&) const = default;
};

uint64_t read_register(const BitState& bits, QubitRange r);
void write_register(BitState& bits, QubitRange r, uint64_t value);

/// Applies one permutation gate (anything but H) to a basis-state assignment.
/// RESET forces its target to 0. Throws CircuitError on H.
void simulate_permutation(const Gate& gate, BitState& bits);

/// Module span annotation: gates [begin, end) carry the given tag. Spans may
/// nest (NP contains NEQR/SWAP/CS sub-spans and so on).
struct TagSpan {
    std::string tag;
    size_t begin = 0;
    size_t end = 0;
};

class Circuit {
  public:
    explicit Circuit(RegisterLayout layout);

    const RegisterLayout& layout() const { return layout_; }
    const std::vector<Gate>& gates() const { return gates_; }
    const std::vector<TagSpan>& spans() const { return spans_; }
    size_t size() const { return gates_.size(); }

    void append(const Gate& gate);

    /// Appends every gate of `sub` (which must share this layout's qubit
    /// count) and records them, along with sub's own spans, under `tag`.
    void compose(const Circuit& sub, std::string_view tag);

    /// RAII span recorder: gates appended while the guard lives are tagged.
    class SpanGuard {
      public:
        SpanGuard(Circuit& c, std::string tag) : circuit_(c), tag_(std::move(tag)), begin_(c.size()) {}
        ~SpanGuard() { circuit_.spans_.push_back({tag_, begin_, circuit_.size()}); }
        SpanGuard(const SpanGuard&) = delete;
        SpanGuard& operator=(const SpanGuard&) = delete;

      private:
        Circuit& circuit_;
        std::string tag_;
        size_t begin_;
    };
    SpanGuard open_span(std::string tag) { return SpanGuard(*this, std::move(tag)); }

    /// Top-level tags in gate order (spans not contained in any other span).
    std::vector<std::string> top_level_tags() const;

  private:
    RegisterLayout layout_;
    std::vector<Gate> gates_;
    std::vector<TagSpan> spans_;
};

}  // namespace qtv
