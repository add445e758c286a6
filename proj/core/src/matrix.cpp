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

#include "ufspec/matrix.hpp"

#include "ufspec/errors.hpp"

namespace ufspec {

Matrix::Matrix(BaseRingPtr parent, std::size_t rows, std::size_t cols)
    : parent_(std::move(parent)), rows_(rows), cols_(cols) {
    data_.assign(rows_ * cols_, parent_->zero());
}

Matrix Matrix::from_rows(BaseRingPtr parent,
                         const std::vector<std::vector<RingElem>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    Matrix m(parent, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw ShapeMismatch("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) {
            if (!rows[i][j].parent() || !rows[i][j].parent()->same_as(*parent))
                throw ParentMismatch("matrix entry belongs to a different ring");
            m.at(i, j) = rows[i][j];
        }
    }
    return m;
}

RingElem matrix_det(const Matrix& m) {
    if (m.rows() != m.cols()) throw ShapeMismatch("determinant requires a square matrix");
    const auto& ring = m.parent();
    if (!ring->is_field()) throw InputError("matrix_det requires entries over a field");
    const std::size_t n = m.rows();
    if (n == 0) return ring->one();

    Matrix a = m;
    RingElem det = ring->one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return ring->zero();
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(pivot, j), a.at(col, j));
            det = -det;
        }
        det = det * a.at(col, col);
        RingElem inv = ring->inverse(a.at(col, col));
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a.at(row, col).is_zero()) continue;
            RingElem factor = a.at(row, col) * inv;
            for (std::size_t j = col; j < n; ++j)
                a.at(row, j) = a.at(row, j) - factor * a.at(col, j);
        }
    }
    return det;
}

}  // namespace ufspec
