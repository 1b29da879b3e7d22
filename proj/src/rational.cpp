#include "pdcoh/rational.hpp"

#include "pdcoh/errors.hpp"

namespace pdcoh {

bool is_integer(const Rat& q) { return q.get_den() == 1; }

Rat parse_rat(const std::string& s) {
    auto bad = [&] { throw Error(ErrorKind::ParseError, "malformed rational: '" + s + "'"); };
    if (s.empty()) bad();
    std::string num = s, den = "1";
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
        if (num.empty() || den.empty() || den.find('/') != std::string::npos) bad();
    }
    auto check_digits = [&](const std::string& t) {
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) bad();
        for (; i < t.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(t[i]))) bad();
    };
    check_digits(num);
    check_digits(den);
    Int n(num), d(den);
    if (d == 0) bad();
    return make_rat(n, d);
}

std::string rat_string(const Rat& q) {
    if (is_integer(q)) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

QVec qvec_zero(std::size_t n) { return QVec(n, Rat(0)); }

static void check_same_size(const QVec& a, const QVec& b) {
    if (a.size() != b.size())
        throw Error(ErrorKind::DimensionMismatch, "vector dimensions differ");
}

QVec qvec_add(const QVec& a, const QVec& b) {
    check_same_size(a, b);
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVec qvec_sub(const QVec& a, const QVec& b) {
    check_same_size(a, b);
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVec qvec_scale(const Rat& c, const QVec& a) {
    QVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

Rat qvec_dot(const QVec& a, const QVec& b) {
    check_same_size(a, b);
    Rat r(0);
    for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
    return r;
}

bool qvec_is_zero(const QVec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

QMat qmat_identity(std::size_t n) {
    QMat m(n, qvec_zero(n));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

QVec qmat_apply(const QMat& m, const QVec& v) {
    QVec r(m.size(), Rat(0));
    for (std::size_t i = 0; i < m.size(); ++i) {
        check_same_size(m[i], v);
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    }
    return r;
}

QMat qmat_mul(const QMat& a, const QMat& b) {
    std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    QMat r(n, qvec_zero(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t)
            if (a[i][t] != 0)
                for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    return r;
}

QMat qmat_transpose(const QMat& m) {
    std::size_t n = m.size(), k = n ? m[0].size() : 0;
    QMat r(k, qvec_zero(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) r[j][i] = m[i][j];
    return r;
}

IMat imat_identity(std::size_t n) {
    IMat m(n, IVec(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IMat imat_mul(const IMat& a, const IMat& b) {
    std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
    IMat r(n, IVec(m, Int(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t)
            if (a[i][t] != 0)
                for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][t] * b[t][j];
    return r;
}

QVec imat_apply(const IMat& m, const QVec& v) {
    QVec r(m.size(), Rat(0));
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != v.size())
            throw Error(ErrorKind::DimensionMismatch, "matrix/vector dimensions differ");
        for (std::size_t j = 0; j < v.size(); ++j) r[i] += Rat(m[i][j]) * v[j];
    }
    return r;
}

bool imat_equal(const IMat& a, const IMat& b) { return a == b; }

// Row-reduce [columns | rhs]; unique solution expected when consistent.
QVec solve_in_span(const std::vector<QVec>& columns, const QVec& rhs, bool& ok) {
    ok = true;
    std::size_t m = columns.size();
    std::size_t n = rhs.size();
    QMat aug(n, qvec_zero(m + 1));
    for (std::size_t j = 0; j < m; ++j) {
        if (columns[j].size() != n)
            throw Error(ErrorKind::DimensionMismatch, "column dimension mismatch");
        for (std::size_t i = 0; i < n; ++i) aug[i][j] = columns[j][i];
    }
    for (std::size_t i = 0; i < n; ++i) aug[i][m] = rhs[i];

    std::vector<int> pivot_of_col(m, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < m && row < n; ++col) {
        std::size_t p = row;
        while (p < n && aug[p][col] == 0) ++p;
        if (p == n) continue;
        std::swap(aug[p], aug[row]);
        Rat inv = aug[row][col];
        for (std::size_t j = col; j <= m; ++j) aug[row][j] /= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == row || aug[r][col] == 0) continue;
            Rat f = aug[r][col];
            for (std::size_t j = col; j <= m; ++j) aug[r][j] -= f * aug[row][j];
        }
        pivot_of_col[col] = static_cast<int>(row);
        ++row;
    }
    for (std::size_t r = row; r < n; ++r) {
        if (aug[r][m] != 0) {
            ok = false;
            return {};
        }
    }
    QVec x(m, Rat(0));
    for (std::size_t col = 0; col < m; ++col)
        if (pivot_of_col[col] >= 0) x[col] = aug[pivot_of_col[col]][m];
    return x;
}

std::vector<QVec> nullspace(const std::vector<QVec>& rows, std::size_t n) {
    QMat a;
    for (const auto& r : rows) {
        if (r.size() != n)
            throw Error(ErrorKind::DimensionMismatch, "row dimension mismatch");
        a.push_back(r);
    }
    std::size_t m = a.size();
    std::vector<int> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t p = row;
        while (p < m && a[p][col] == 0) ++p;
        if (p == m) continue;
        std::swap(a[p], a[row]);
        Rat inv = a[row][col];
        for (std::size_t j = col; j < n; ++j) a[row][j] /= inv;
        for (std::size_t r = 0; r < m; ++r) {
            if (r == row || a[r][col] == 0) continue;
            Rat f = a[r][col];
            for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[row][j];
        }
        pivot_col.push_back(static_cast<int>(col));
        ++row;
    }
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<QVec> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        QVec v = qvec_zero(n);
        v[free] = 1;
        for (std::size_t k = 0; k < pivot_col.size(); ++k)
            v[pivot_col[k]] = -a[k][free];
        basis.push_back(v);
    }
    return basis;
}

}  // namespace pdcoh
