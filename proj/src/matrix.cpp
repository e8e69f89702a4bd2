#include "cobalt/matrix.hpp"

#include "cobalt/error.hpp"

#include <algorithm>
#include <utility>

namespace cobalt {

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows)
{
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != m.cols())
            throw Error(ErrorCode::InvalidArgument, "ragged matrix rows");
        for (std::size_t c = 0; c < m.cols(); ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

void IntMatrix::append_row(std::span<const Integer> values)
{
    if (rows_ == 0 && cols_ == 0)
        cols_ = values.size();
    if (values.size() != cols_)
        throw Error(ErrorCode::InvalidArgument, "row length mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool IntMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() != b.rows())
        throw Error(ErrorCode::InvalidArgument, "matrix product dimension mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

std::vector<Integer> row_times(std::span<const Integer> v, const IntMatrix& m)
{
    std::vector<Integer> out(m.cols());
    for (std::size_t k = 0; k < m.rows(); ++k) {
        if (v[k] == 0)
            continue;
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[j] += v[k] * m(k, j);
    }
    return out;
}

namespace {

class SmithWorker {
public:
    SmithWorker(const IntMatrix& m, bool track_left)
        : a_(m), rows_(m.rows()), cols_(m.cols()), track_left_(track_left), v_(IntMatrix::identity(cols_)),
          vinv_(IntMatrix::identity(cols_))
    {
        if (track_left_)
            u_ = IntMatrix::identity(rows_);
    }

    SmithForm run()
    {
        SmithForm out;
        std::size_t limit = std::min(rows_, cols_);
        for (std::size_t t = 0; t < limit; ++t) {
            if (!move_smallest_to(t, t, rows_, cols_))
                break;
            reduce_pivot(t);
            if (a_(t, t) < 0)
                negate_row(t);
            out.divisors.push_back(a_(t, t));
        }
        out.left = track_left_ ? std::move(u_) : IntMatrix();
        out.right = std::move(v_);
        out.right_inv = std::move(vinv_);
        return out;
    }

private:
    // Finds the nonzero entry of least magnitude in rows/cols >= t and swaps it to (t,t).
    bool move_smallest_to(std::size_t t, std::size_t t2, std::size_t row_end, std::size_t col_end)
    {
        std::size_t best_r = rows_;
        std::size_t best_c = cols_;
        Integer best;
        for (std::size_t r = t; r < row_end; ++r)
            for (std::size_t c = t2; c < col_end; ++c) {
                const Integer& v = a_(r, c);
                if (v == 0)
                    continue;
                if (best_r == rows_ || mpz_cmpabs(v.get_mpz_t(), best.get_mpz_t()) < 0) {
                    best = v;
                    best_r = r;
                    best_c = c;
                    if (abs(best) == 1)
                        goto found;
                }
            }
        if (best_r == rows_)
            return false;
    found:
        swap_rows(t, best_r);
        swap_cols(t2, best_c);
        return true;
    }

    void reduce_pivot(std::size_t t)
    {
        Integer q;
        while (true) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows_; ++i) {
                if (a_(i, t) == 0)
                    continue;
                mpz_tdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), a_(t, t).get_mpz_t());
                if (q != 0)
                    add_row_multiple(i, t, -q);
                if (a_(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < cols_; ++j) {
                if (a_(t, j) == 0)
                    continue;
                mpz_tdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), a_(t, t).get_mpz_t());
                if (q != 0)
                    add_col_multiple(j, t, -q);
                if (a_(t, j) != 0)
                    clean = false;
            }
            if (!clean) {
                move_smallest_in_cross(t);
                continue;
            }
            bool divisible = true;
            for (std::size_t i = t + 1; i < rows_ && divisible; ++i)
                for (std::size_t j = t + 1; j < cols_; ++j)
                    if (a_(i, j) != 0 && !mpz_divisible_p(a_(i, j).get_mpz_t(), a_(t, t).get_mpz_t())) {
                        add_row_multiple(t, i, 1);
                        divisible = false;
                        break;
                    }
            if (divisible)
                return;
        }
    }

    void move_smallest_in_cross(std::size_t t)
    {
        std::size_t br = t;
        std::size_t bc = t;
        Integer best = a_(t, t);
        for (std::size_t i = t + 1; i < rows_; ++i)
            if (a_(i, t) != 0 && mpz_cmpabs(a_(i, t).get_mpz_t(), best.get_mpz_t()) < 0) {
                best = a_(i, t);
                br = i;
                bc = t;
            }
        for (std::size_t j = t + 1; j < cols_; ++j)
            if (a_(t, j) != 0 && mpz_cmpabs(a_(t, j).get_mpz_t(), best.get_mpz_t()) < 0) {
                best = a_(t, j);
                br = t;
                bc = j;
            }
        swap_rows(t, br);
        swap_cols(t, bc);
    }

    void swap_rows(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap(a_(i, c), a_(j, c));
        if (track_left_)
            for (std::size_t c = 0; c < rows_; ++c)
                std::swap(u_(i, c), u_(j, c));
    }

    void swap_cols(std::size_t i, std::size_t j)
    {
        if (i == j)
            return;
        for (std::size_t r = 0; r < rows_; ++r)
            std::swap(a_(r, i), a_(r, j));
        for (std::size_t r = 0; r < cols_; ++r)
            std::swap(v_(r, i), v_(r, j));
        for (std::size_t c = 0; c < cols_; ++c)
            std::swap(vinv_(i, c), vinv_(j, c));
    }

    // row_dst += k * row_src
    void add_row_multiple(std::size_t dst, std::size_t src, const Integer& k)
    {
        for (std::size_t c = 0; c < cols_; ++c)
            if (a_(src, c) != 0)
                a_(dst, c) += k * a_(src, c);
        if (track_left_)
            for (std::size_t c = 0; c < rows_; ++c)
                if (u_(src, c) != 0)
                    u_(dst, c) += k * u_(src, c);
    }

    // col_dst += k * col_src; V follows, V^{-1} gets the inverse row operation.
    void add_col_multiple(std::size_t dst, std::size_t src, const Integer& k)
    {
        for (std::size_t r = 0; r < rows_; ++r)
            if (a_(r, src) != 0)
                a_(r, dst) += k * a_(r, src);
        for (std::size_t r = 0; r < cols_; ++r)
            if (v_(r, src) != 0)
                v_(r, dst) += k * v_(r, src);
        for (std::size_t c = 0; c < cols_; ++c)
            if (vinv_(dst, c) != 0)
                vinv_(src, c) -= k * vinv_(dst, c);
    }

    void negate_row(std::size_t t)
    {
        for (std::size_t c = 0; c < cols_; ++c)
            a_(t, c) = -a_(t, c);
        if (track_left_)
            for (std::size_t c = 0; c < rows_; ++c)
                u_(t, c) = -u_(t, c);
    }

    IntMatrix a_;
    std::size_t rows_;
    std::size_t cols_;
    bool track_left_;
    IntMatrix u_;
    IntMatrix v_;
    IntMatrix vinv_;
};

SmithForm smith_impl(const IntMatrix& m, bool track_left) { return SmithWorker(m, track_left).run(); }

} // namespace

SmithForm smith_normal_form(const IntMatrix& m) { return smith_impl(m, true); }

std::vector<std::vector<Integer>> integer_kernel(const IntMatrix& m)
{
    SmithForm s = smith_impl(m, false);
    std::vector<std::vector<Integer>> basis;
    for (std::size_t j = s.rank(); j < m.cols(); ++j) {
        std::vector<Integer> v(m.cols());
        for (std::size_t r = 0; r < m.cols(); ++r)
            v[r] = s.right(r, j);
        basis.push_back(std::move(v));
    }
    return basis;
}

Integer determinant(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        throw Error(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
    std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && a(swap_with, k) == 0)
                ++swap_with;
            if (swap_with == n)
                return 0;
            for (std::size_t c = 0; c < n; ++c)
                std::swap(a(k, c), a(swap_with, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), a(i, j).get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

IntMatrix unimodular_inverse(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        throw Error(ErrorCode::IllFormed, "inverse of a non-square matrix");
    Integer det = determinant(m);
    if (abs(det) != 1)
        throw Error(ErrorCode::IllFormed, "matrix is not unimodular (det = " + det.get_str() + ")");
    SmithForm s = smith_normal_form(m);
    // U M V = I  =>  M^{-1} = V U.
    return s.right * s.left;
}

LatticeQuotient::LatticeQuotient(const IntMatrix& relation_rows, std::size_t ambient, Scalars scalars)
    : ambient_(ambient), scalars_(std::move(scalars))
{
    if (relation_rows.rows() > 0 && relation_rows.cols() != ambient)
        throw Error(ErrorCode::InvalidArgument, "relation rows do not match the ambient rank");
    if (relation_rows.rows() == 0) {
        smith_.right = IntMatrix::identity(ambient);
        smith_.right_inv = IntMatrix::identity(ambient);
    } else {
        smith_ = smith_impl(relation_rows, false);
    }
    if (scalars_.base == Base::Q) {
        // Over a field every nonzero divisor is a unit.
        return;
    }
    for (std::size_t i = 0; i < smith_.rank(); ++i) {
        Integer part = scalars_.nonunit_part(smith_.divisors[i]);
        if (part > 1) {
            torsion_.push_back(part);
            torsion_cols_.push_back(i);
        }
    }
}

bool LatticeQuotient::contains(std::span<const Integer> w) const
{
    std::vector<Integer> z = row_times(w, smith_.right);
    std::size_t r = smith_.rank();
    for (std::size_t i = r; i < ambient_; ++i)
        if (z[i] != 0)
            return false;
    for (std::size_t k = 0; k < torsion_cols_.size(); ++k)
        if (!mpz_divisible_p(z[torsion_cols_[k]].get_mpz_t(), torsion_[k].get_mpz_t()))
            return false;
    return true;
}

std::vector<Integer> LatticeQuotient::free_coordinates(std::span<const Integer> w) const
{
    std::vector<Integer> z = row_times(w, smith_.right);
    return {z.begin() + static_cast<std::ptrdiff_t>(smith_.rank()), z.end()};
}

std::vector<Integer> LatticeQuotient::free_generator(std::size_t j) const
{
    auto r = smith_.right_inv.row(smith_.rank() + j);
    return {r.begin(), r.end()};
}

} // namespace cobalt
