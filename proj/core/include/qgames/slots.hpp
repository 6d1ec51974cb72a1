// Copyright 2026 The qgames Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Tensor-factor bookkeeping for multi-slot Hilbert spaces and the
 * embedding of local operators into the full space.
 */
#pragma once

#include "qgames/linalg.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace qgames {

/**
 * Ordered list of tensor-factor dimensions. Slot 0 is the most significant
 * factor in the row-major Kronecker convention used by tensor_product.
 */
class SlotLayout {
  public:
    explicit SlotLayout(std::vector<std::size_t> slot_dims);
    /// n slots of equal dimension.
    static SlotLayout uniform(std::size_t slots, std::size_t dim);

    [[nodiscard]] std::size_t slot_count() const noexcept {
        return slot_dims_.size();
    }
    [[nodiscard]] std::size_t slot_dim(std::size_t slot) const {
        return slot_dims_.at(slot);
    }
    [[nodiscard]] std::span<const std::size_t> slot_dims() const noexcept {
        return slot_dims_;
    }
    [[nodiscard]] std::size_t total_dim() const noexcept { return total_dim_; }

    /// Per-slot digits of a basis index of the full space.
    [[nodiscard]] std::vector<std::size_t> digits(std::size_t index) const;
    [[nodiscard]] std::size_t index(std::span<const std::size_t> digits) const;

  private:
    std::vector<std::size_t> slot_dims_;
    std::vector<std::size_t> strides_;
    std::size_t total_dim_;
};

/**
 * Operator acting as `op` on the listed slots (in the listed order, first
 * slot most significant within op) and as the identity on all others.
 * Slots need not be adjacent or sorted. An empty slot list takes a 1x1 op
 * and yields that scalar times the identity.
 */
[[nodiscard]] ComplexMatrix embed_at_slots(const ComplexMatrix &op,
                                           std::span<const std::size_t> slots,
                                           const SlotLayout &layout);

[[nodiscard]] inline ComplexMatrix
embed_at_slots(const ComplexMatrix &op,
               std::initializer_list<std::size_t> slots,
               const SlotLayout &layout) {
    return embed_at_slots(op, std::span<const std::size_t>(slots.begin(),
                                                           slots.size()),
                          layout);
}

} // namespace qgames
