/*
   Copyright 2026 The ufspec Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef UFSPEC_MATRIX_HPP
#define UFSPEC_MATRIX_HPP

#include <vector>

#include "ufspec/base_ring.hpp"

namespace ufspec {

/// Dense matrix of ring elements sharing one parent.
class Matrix {
public:
    Matrix(BaseRingPtr parent, std::size_t rows, std::size_t cols);
    static Matrix from_rows(BaseRingPtr parent,
                            const std::vector<std::vector<RingElem>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const BaseRingPtr& parent() const { return parent_; }

    RingElem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const RingElem& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    BaseRingPtr parent_;
    std::size_t rows_, cols_;
    std::vector<RingElem> data_;
};

/// Exact determinant over a field by Gaussian elimination with row
/// pivoting. Throws ShapeMismatch for non-square input.
RingElem matrix_det(const Matrix& m);

}  // namespace ufspec

#endif
