#include "tcup/dense_linalg.hpp"

#include "tcup/errors.hpp"

namespace tcup {

int bareiss_rank(IntMat m)
{
    const int rows = (int)m.size();
    const int cols = rows ? (int)m[0].size() : 0;
    Int prev = 1;
    int rank = 0;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int i = row; i < rows; ++i)
            if (m[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(m[row], m[pivot]);
        for (int i = row + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j)
                m[i][j] = (m[i][j] * m[row][col] - m[i][col] * m[row][j]) / prev;
            m[i][col] = 0;
        }
        prev = m[row][col];
        ++row;
        ++rank;
    }
    return rank;
}

Int bareiss_det(IntMat m)
{
    const int n = (int)m.size();
    if (n == 0)
        return 1;
    for (const auto& r : m)
        if ((int)r.size() != n)
            throw ContractViolation("bareiss_det: matrix not square");
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m[k][k] == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0)
                return 0;
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

std::optional<std::vector<Rat>> rat_solve(RatMat a, std::vector<Rat> b)
{
    const int rows = (int)a.size();
    const int cols = rows ? (int)a[0].size() : 0;
    if ((int)b.size() != rows)
        throw ContractViolation("rat_solve: rhs size mismatch");

    std::vector<int> pivot_col_of_row;
    int row = 0;
    for (int col = 0; col < cols && row < rows; ++col) {
        int pivot = -1;
        for (int i = row; i < rows; ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(a[row], a[pivot]);
        std::swap(b[row], b[pivot]);
        Rat inv = Rat(1) / a[row][col];
        for (int j = col; j < cols; ++j)
            a[row][j] *= inv;
        b[row] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == row || a[i][col] == 0)
                continue;
            Rat f = a[i][col];
            for (int j = col; j < cols; ++j)
                a[i][j] -= f * a[row][j];
            b[i] -= f * b[row];
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (int i = row; i < rows; ++i)
        if (b[i] != 0)
            return std::nullopt;

    std::vector<Rat> x(cols, Rat(0));
    for (int i = 0; i < (int)pivot_col_of_row.size(); ++i)
        x[pivot_col_of_row[i]] = b[i];
    return x;
}

RatMat rat_inverse(RatMat a)
{
    const int n = (int)a.size();
    RatMat inv(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) {
        if ((int)a[i].size() != n)
            throw ContractViolation("rat_inverse: matrix not square");
        inv[i][i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            throw ContractViolation("rat_inverse: singular matrix");
        std::swap(a[col], a[pivot]);
        std::swap(inv[col], inv[pivot]);
        Rat f = Rat(1) / a[col][col];
        for (int j = 0; j < n; ++j) {
            a[col][j] *= f;
            inv[col][j] *= f;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0)
                continue;
            Rat g = a[i][col];
            for (int j = 0; j < n; ++j) {
                a[i][j] -= g * a[col][j];
                inv[i][j] -= g * inv[col][j];
            }
        }
    }
    return inv;
}

} // namespace tcup
