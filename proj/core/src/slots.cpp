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

#include "qgames/slots.hpp"

#include "qgames/error.hpp"

#include <string>

namespace qgames {

SlotLayout::SlotLayout(std::vector<std::size_t> slot_dims)
    : slot_dims_(std::move(slot_dims)), strides_(slot_dims_.size()),
      total_dim_(1) {
    for (std::size_t s = slot_dims_.size(); s-- > 0;) {
        if (slot_dims_[s] == 0) {
            throw Error(ErrorKind::DimensionMismatch,
                        "slot " + std::to_string(s) + " has dimension 0");
        }
        strides_[s] = total_dim_;
        total_dim_ *= slot_dims_[s];
    }
}

SlotLayout SlotLayout::uniform(std::size_t slots, std::size_t dim) {
    return SlotLayout(std::vector<std::size_t>(slots, dim));
}

std::vector<std::size_t> SlotLayout::digits(std::size_t index) const {
    std::vector<std::size_t> out(slot_dims_.size());
    for (std::size_t s = 0; s < slot_dims_.size(); ++s) {
        out[s] = (index / strides_[s]) % slot_dims_[s];
    }
    return out;
}

std::size_t SlotLayout::index(std::span<const std::size_t> digits) const {
    std::size_t idx = 0;
    for (std::size_t s = 0; s < slot_dims_.size(); ++s) {
        idx += digits[s] * strides_[s];
    }
    return idx;
}

ComplexMatrix embed_at_slots(const ComplexMatrix &op,
                             std::span<const std::size_t> slots,
                             const SlotLayout &layout) {
    std::vector<bool> seen(layout.slot_count(), false);
    std::size_t op_dim = 1;
    for (const auto s : slots) {
        if (s >= layout.slot_count()) {
            throw Error(ErrorKind::IndexOutOfRange,
                        "slot " + std::to_string(s) + " out of range for " +
                            std::to_string(layout.slot_count()) + " slots");
        }
        if (seen[s]) {
            throw Error(ErrorKind::IndexOutOfRange,
                        "slot " + std::to_string(s) + " listed twice");
        }
        seen[s] = true;
        op_dim *= layout.slot_dim(s);
    }
    if (op.dim() != op_dim) {
        throw Error(ErrorKind::DimensionMismatch,
                    "operator dimension " + std::to_string(op.dim()) +
                        " does not match slot dimension product " +
                        std::to_string(op_dim));
    }

    // Within op, the first listed slot is the most significant digit.
    std::vector<std::size_t> op_strides(slots.size());
    std::size_t stride = 1;
    for (std::size_t k = slots.size(); k-- > 0;) {
        op_strides[k] = stride;
        stride *= layout.slot_dim(slots[k]);
    }

    const std::size_t total = layout.total_dim();
    std::vector<Complex> out(total * total);
    std::vector<std::size_t> col_digits;
    for (std::size_t row = 0; row < total; ++row) {
        const auto row_digits = layout.digits(row);
        std::size_t row_sub = 0;
        for (std::size_t k = 0; k < slots.size(); ++k) {
            row_sub += row_digits[slots[k]] * op_strides[k];
        }
        col_digits = row_digits;
        for (std::size_t col_sub = 0; col_sub < op_dim; ++col_sub) {
            const Complex v = op(row_sub, col_sub);
            if (v == Complex(0.0)) {
                continue;
            }
            for (std::size_t k = 0; k < slots.size(); ++k) {
                col_digits[slots[k]] =
                    (col_sub / op_strides[k]) % layout.slot_dim(slots[k]);
            }
            out[row * total + layout.index(col_digits)] = v;
        }
    }
    return ComplexMatrix(total, std::move(out));
}

} // namespace qgames
