#include "toric/exact_linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace toric {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0))
{
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows)
    {
        if (r.size() != cols_)
            throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long x : r)
            data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows, std::size_t cols)
{
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
    {
        if (rows[i].size() != cols)
            throw std::invalid_argument("IntMatrix::from_rows: row length mismatch");
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

IntVector IntMatrix::row(std::size_t i) const
{
    return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

std::vector<IntVector> IntMatrix::row_vectors() const
{
    std::vector<IntVector> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        out.push_back(row(i));
    return out;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const
{
    if (cols_ != other.rows_)
        throw std::invalid_argument("IntMatrix: dimension mismatch in product");
    IntMatrix p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
        {
            const Integer& a = at(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                p.at(i, j) += a * other.at(k, j);
        }
    return p;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap(at(a, j), at(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap(at(i, a), at(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor)
{
    if (factor == 0)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        at(dst, j) += factor * at(src, j);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor)
{
    if (factor == 0)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        at(i, dst) += factor * at(i, src);
}

void IntMatrix::negate_row(std::size_t i)
{
    for (std::size_t j = 0; j < cols_; ++j)
        at(i, j) = -at(i, j);
}

void IntMatrix::negate_col(std::size_t j)
{
    for (std::size_t i = 0; i < rows_; ++i)
        at(i, j) = -at(i, j);
}

IntMatrix IntMatrix::top_rows(std::size_t n) const
{
    IntMatrix out(std::min(n, rows_), cols_);
    for (std::size_t i = 0; i < out.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.at(i, j) = at(i, j);
    return out;
}

IntMatrix IntMatrix::drop_zero_rows() const
{
    std::vector<IntVector> kept;
    for (std::size_t i = 0; i < rows_; ++i)
    {
        IntVector r = row(i);
        if (!is_zero(r))
            kept.push_back(std::move(r));
    }
    return from_rows(kept, cols_);
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m)
{
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i)
    {
        if (i)
            os << ',';
        os << to_string(m.row(i));
    }
    return os << ']';
}

RatVector::RatVector(const IntVector& v) : coords_(v.begin(), v.end())
{
}

// ---------------------------------------------------------------------------
// Hermite and Smith forms

namespace {

/** Floor division for the reduction step above pivots. */
Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/**
 * Replace rows (r, i) by a unimodular combination so that the entry of row i
 * in column c vanishes and row r carries gcd(a_rc, a_ic).
 */
void combine_rows(IntMatrix& h, IntMatrix& u, std::size_t r, std::size_t i, std::size_t c)
{
    Integer a = h.at(r, c);
    Integer b = h.at(i, c);
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Integer ag = a / g;
    Integer bg = b / g;
    auto apply = [&](IntMatrix& m) {
        for (std::size_t j = 0; j < m.cols(); ++j)
        {
            Integer x = m.at(r, j);
            Integer y = m.at(i, j);
            m.at(r, j) = s * x + t * y;
            m.at(i, j) = -bg * x + ag * y;
        }
    };
    apply(h);
    apply(u);
}

}  // namespace

HermiteResult hermite_normal_form(const IntMatrix& m)
{
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    std::size_t pivot_row = 0;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;

    for (std::size_t c = 0; c < h.cols() && pivot_row < h.rows(); ++c)
    {
        std::size_t nz = pivot_row;
        while (nz < h.rows() && h.at(nz, c) == 0)
            ++nz;
        if (nz == h.rows())
            continue;
        h.swap_rows(pivot_row, nz);
        u.swap_rows(pivot_row, nz);
        for (std::size_t i = pivot_row + 1; i < h.rows(); ++i)
            if (h.at(i, c) != 0)
                combine_rows(h, u, pivot_row, i, c);
        if (h.at(pivot_row, c) < 0)
        {
            h.negate_row(pivot_row);
            u.negate_row(pivot_row);
        }
        const Integer p = h.at(pivot_row, c);
        for (std::size_t i = 0; i < pivot_row; ++i)
        {
            Integer q = floor_div(h.at(i, c), p);
            if (q != 0)
            {
                h.add_row_multiple(i, pivot_row, -q);
                u.add_row_multiple(i, pivot_row, -q);
            }
        }
        pivots.emplace_back(pivot_row, c);
        ++pivot_row;
    }
    return {std::move(h), std::move(u)};
}

SmithResult smith_normal_form(const IntMatrix& m)
{
    IntMatrix d = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix v = IntMatrix::identity(m.cols());
    const std::size_t k = std::min(m.rows(), m.cols());

    for (std::size_t t = 0; t < k; ++t)
    {
        for (;;)
        {
            // smallest nonzero entry of the trailing block becomes the pivot
            std::size_t bi = d.rows(), bj = d.cols();
            for (std::size_t i = t; i < d.rows(); ++i)
                for (std::size_t j = t; j < d.cols(); ++j)
                    if (d.at(i, j) != 0 &&
                        (bi == d.rows() || abs(d.at(i, j)) < abs(d.at(bi, bj))))
                    {
                        bi = i;
                        bj = j;
                    }
            if (bi == d.rows())
                break;
            d.swap_rows(t, bi);
            u.swap_rows(t, bi);
            d.swap_cols(t, bj);
            v.swap_cols(t, bj);

            bool clean = true;
            const Integer p = d.at(t, t);
            for (std::size_t i = t + 1; i < d.rows(); ++i)
            {
                Integer q = d.at(i, t) / p;  // truncating
                if (q != 0)
                {
                    d.add_row_multiple(i, t, -q);
                    u.add_row_multiple(i, t, -q);
                }
                if (d.at(i, t) != 0)
                    clean = false;
            }
            for (std::size_t j = t + 1; j < d.cols(); ++j)
            {
                Integer q = d.at(t, j) / p;
                if (q != 0)
                {
                    d.add_col_multiple(j, t, -q);
                    v.add_col_multiple(j, t, -q);
                }
                if (d.at(t, j) != 0)
                    clean = false;
            }
            if (!clean)
                continue;

            // divisibility of the remaining block by the pivot
            std::size_t bad = d.rows();
            for (std::size_t i = t + 1; i < d.rows() && bad == d.rows(); ++i)
                for (std::size_t j = t + 1; j < d.cols(); ++j)
                    if (d.at(i, j) % p != 0)
                    {
                        bad = i;
                        break;
                    }
            if (bad == d.rows())
                break;
            d.add_row_multiple(t, bad, Integer(1));
            u.add_row_multiple(t, bad, Integer(1));
        }
        if (d.at(t, t) < 0)
        {
            d.negate_row(t);
            u.negate_row(t);
        }
    }

    SmithResult out{std::move(d), std::move(u), std::move(v), {}};
    for (std::size_t t = 0; t < k; ++t)
        out.invariant_factors.push_back(out.d.at(t, t));
    return out;
}

IntMatrix kernel_basis(const IntMatrix& m)
{
    HermiteResult hr = hermite_normal_form(m);
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (is_zero(hr.h.row(i)))
            rows.push_back(hr.u.row(i));
    IntMatrix k = IntMatrix::from_rows(rows, m.rows());
    return hermite_normal_form(k).h.drop_zero_rows();
}

IntMatrix saturate_sublattice(const IntMatrix& gens, std::size_t ambient_rank)
{
    if (gens.cols() != ambient_rank && gens.rows() != 0)
        throw std::invalid_argument("saturate_sublattice: ambient rank mismatch");
    IntMatrix g = gens.rows() == 0 ? IntMatrix(0, ambient_rank) : gens;
    IntMatrix orth = kernel_basis(g.transpose());  // vectors orthogonal to every generator
    return kernel_basis(orth.transpose());
}

IntMatrix complete_to_unimodular(const IntMatrix& basis)
{
    const std::size_t n = basis.cols();
    const std::size_t l = basis.rows();
    SmithResult s = smith_normal_form(basis);
    for (const Integer& f : s.invariant_factors)
        if (f != 1)
            throw std::invalid_argument("complete_to_unimodular: basis is not saturated");
    // basis == u^-1 [I | 0] v^-1, so the trailing rows of v^-1 complete it
    auto vinv = rational_inverse(s.v);
    IntMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
        {
            if (i < l)
                out.at(i, j) = basis.at(i, j);
            else
            {
                const Rational& x = vinv[i][j];
                if (x.get_den() != 1)
                    throw std::logic_error("complete_to_unimodular: non-integral inverse");
                out.at(i, j) = x.get_num();
            }
        }
    return out;
}

// ---------------------------------------------------------------------------
// Rational elimination

namespace {

using RatMatrix = std::vector<std::vector<Rational>>;

RatMatrix to_rational(const IntMatrix& m)
{
    RatMatrix r(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r[i][j] = m.at(i, j);
    return r;
}

/**
 * Reduced row echelon form in place over the first `ncols` columns.
 * Returns the pivot columns.
 */
std::vector<std::size_t> rref(RatMatrix& a, std::size_t ncols)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < a.size(); ++c)
    {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0)
            ++p;
        if (p == a.size())
            continue;
        std::swap(a[r], a[p]);
        Rational inv = 1 / a[r][c];
        for (auto& x : a[r])
            x *= inv;
        for (std::size_t i = 0; i < a.size(); ++i)
        {
            if (i == r || a[i][c] == 0)
                continue;
            Rational f = a[i][c];
            for (std::size_t j = 0; j < a[i].size(); ++j)
                a[i][j] -= f * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t rank(const IntMatrix& m)
{
    RatMatrix a = to_rational(m);
    return rref(a, m.cols()).size();
}

Integer determinant(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    // Bareiss fraction-free elimination
    IntMatrix a = m;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k)
    {
        if (a.at(k, k) == 0)
        {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

std::optional<std::vector<Rational>> solve_rational(const IntMatrix& basis, const RatVector& v)
{
    const std::size_t k = basis.rows();
    const std::size_t n = basis.cols();
    if (v.size() != n && k != 0)
        throw std::invalid_argument("solve_rational: length mismatch");
    if (k == 0)
    {
        for (std::size_t j = 0; j < v.size(); ++j)
            if (v[j] != 0)
                return std::nullopt;
        return std::vector<Rational>{};
    }
    // transpose system: basis^T x^T = v^T
    RatMatrix a(n, std::vector<Rational>(k + 1));
    for (std::size_t j = 0; j < n; ++j)
    {
        for (std::size_t i = 0; i < k; ++i)
            a[j][i] = basis.at(i, j);
        a[j][k] = v[j];
    }
    std::vector<std::size_t> piv = rref(a, k);
    for (std::size_t r = piv.size(); r < n; ++r)
        if (a[r][k] != 0)
            return std::nullopt;
    std::vector<Rational> x(k);
    for (std::size_t r = 0; r < piv.size(); ++r)
        x[piv[r]] = a[r][k];
    return x;
}

std::optional<IntVector> lattice_coordinates(const IntMatrix& basis, const IntVector& v)
{
    HermiteResult hr = hermite_normal_form(basis);
    const std::size_t r = rank(hr.h);
    IntMatrix top = hr.h.top_rows(r);
    auto x = solve_rational(top, RatVector(v));
    if (!x)
        return std::nullopt;
    IntVector coeff_top(r);
    for (std::size_t i = 0; i < r; ++i)
    {
        if ((*x)[i].get_den() != 1)
            return std::nullopt;
        coeff_top[i] = (*x)[i].get_num();
    }
    // v = coeff_top * h_top = coeff_top * u_top * basis
    IntVector out(basis.rows(), Integer(0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < basis.rows(); ++j)
            out[j] += coeff_top[i] * hr.u.at(i, j);
    return out;
}

bool lattice_contains(const IntMatrix& basis, const IntVector& v)
{
    if (basis.rows() == 0)
        return is_zero(v);
    return lattice_coordinates(basis, v).has_value();
}

std::vector<std::vector<Rational>> rational_inverse(const IntMatrix& m)
{
    const std::size_t n = m.rows();
    if (m.cols() != n)
        throw std::invalid_argument("rational_inverse: matrix not square");
    RatMatrix a(n, std::vector<Rational>(2 * n));
    for (std::size_t i = 0; i < n; ++i)
    {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m.at(i, j);
        a[i][n + i] = 1;
    }
    if (rref(a, n).size() != n)
        throw std::invalid_argument("rational_inverse: singular matrix");
    RatMatrix inv(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inv[i][j] = a[i][n + j];
    return inv;
}

// ---------------------------------------------------------------------------
// vector helpers

Integer dot(std::span<const Integer> a, std::span<const Integer> b)
{
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Rational dot(const RatVector& a, std::span<const Integer> b)
{
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Integer content(std::span<const Integer> v)
{
    Integer g = 0;
    for (const Integer& x : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

IntVector primitive(IntVector v)
{
    Integer g = content(v);
    if (g > 1)
        for (Integer& x : v)
            x /= g;
    return v;
}

IntVector primitive(const std::vector<Rational>& v)
{
    Integer l = 1;
    for (const Rational& x : v)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVector out;
    out.reserve(v.size());
    for (const Rational& x : v)
    {
        Rational y = x * l;
        out.push_back(y.get_num());
    }
    return primitive(std::move(out));
}

bool is_zero(std::span<const Integer> v)
{
    return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

IntVector negated(IntVector v)
{
    for (Integer& x : v)
        x = -x;
    return v;
}

IntVector add(std::span<const Integer> a, std::span<const Integer> b)
{
    IntVector out(a.begin(), a.end());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += b[i];
    return out;
}

IntVector sub(std::span<const Integer> a, std::span<const Integer> b)
{
    IntVector out(a.begin(), a.end());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] -= b[i];
    return out;
}

IntVector scaled(std::span<const Integer> a, const Integer& k)
{
    IntVector out(a.begin(), a.end());
    for (Integer& x : out)
        x *= k;
    return out;
}

IntVector int_vector(std::initializer_list<long> values)
{
    IntVector out;
    out.reserve(values.size());
    for (long x : values)
        out.emplace_back(x);
    return out;
}

std::string to_string(std::span<const Integer> v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
    {
        if (i)
            os << ',';
        os << v[i].get_str();
    }
    os << ')';
    return os.str();
}

}  // namespace toric
