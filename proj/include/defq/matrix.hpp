#pragma once

#include "defq/rat.hpp"

#include <cassert>
#include <vector>

namespace defq {

// Dense exact matrix over Q(i).
struct Mat
{
	int rows = 0, cols = 0;
	std::vector<CScalar> a; // row-major

	Mat() = default;
	Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}

	static Mat identity(int n)
	{
		Mat m(n, n);
		for (int i = 0; i < n; ++i)
			m(i, i) = CScalar(1);
		return m;
	}

	CScalar &operator()(int i, int j) { return a[size_t(i) * cols + j]; }
	const CScalar &operator()(int i, int j) const
	{
		return a[size_t(i) * cols + j];
	}

	friend Mat operator+(const Mat &x, const Mat &y)
	{
		assert(x.rows == y.rows && x.cols == y.cols);
		Mat r = x;
		for (size_t k = 0; k < r.a.size(); ++k)
			r.a[k] += y.a[k];
		return r;
	}
	friend Mat operator-(const Mat &x, const Mat &y)
	{
		assert(x.rows == y.rows && x.cols == y.cols);
		Mat r = x;
		for (size_t k = 0; k < r.a.size(); ++k)
			r.a[k] -= y.a[k];
		return r;
	}
	friend Mat operator*(const Mat &x, const Mat &y)
	{
		assert(x.cols == y.rows);
		Mat r(x.rows, y.cols);
		for (int i = 0; i < x.rows; ++i)
			for (int k = 0; k < x.cols; ++k)
			{
				if (x(i, k).is_zero())
					continue;
				for (int j = 0; j < y.cols; ++j)
					r(i, j) += x(i, k) * y(k, j);
			}
		return r;
	}
	friend Mat operator*(const CScalar &s, const Mat &y)
	{
		Mat r = y;
		for (auto &v : r.a)
			v *= s;
		return r;
	}
	friend bool operator==(const Mat &x, const Mat &y)
	{
		return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
	}

	bool is_zero() const
	{
		for (auto &v : a)
			if (!v.is_zero())
				return false;
		return true;
	}

	Mat transpose() const
	{
		Mat r(cols, rows);
		for (int i = 0; i < rows; ++i)
			for (int j = 0; j < cols; ++j)
				r(j, i) = (*this)(i, j);
		return r;
	}

	Mat conj_transpose() const
	{
		Mat r(cols, rows);
		for (int i = 0; i < rows; ++i)
			for (int j = 0; j < cols; ++j)
				r(j, i) = (*this)(i, j).conj();
		return r;
	}

	Mat conj_entries() const
	{
		Mat r = *this;
		for (auto &v : r.a)
			v = v.conj();
		return r;
	}
};

// Gaussian elimination, returns (row echelon rank, optional inverse when
// square and regular). Destructive on a working copy.
inline int mat_rank(Mat m)
{
	int r = 0;
	for (int col = 0; col < m.cols && r < m.rows; ++col)
	{
		int piv = -1;
		for (int i = r; i < m.rows; ++i)
			if (!m(i, col).is_zero())
			{
				piv = i;
				break;
			}
		if (piv < 0)
			continue;
		for (int j = 0; j < m.cols; ++j)
			std::swap(m(r, j), m(piv, j));
		CScalar inv = m(r, col).inverse();
		for (int j = 0; j < m.cols; ++j)
			m(r, j) *= inv;
		for (int i = 0; i < m.rows; ++i)
			if (i != r && !m(i, col).is_zero())
			{
				CScalar f = m(i, col);
				for (int j = 0; j < m.cols; ++j)
					m(i, j) -= f * m(r, j);
			}
		++r;
	}
	return r;
}

struct SingularMatrix : std::runtime_error
{
	SingularMatrix() : std::runtime_error("matrix is singular") {}
};

inline Mat mat_inverse(const Mat &m)
{
	assert(m.rows == m.cols);
	int n = m.rows;
	Mat w(n, 2 * n);
	for (int i = 0; i < n; ++i)
	{
		for (int j = 0; j < n; ++j)
			w(i, j) = m(i, j);
		w(i, n + i) = CScalar(1);
	}
	for (int col = 0; col < n; ++col)
	{
		int piv = -1;
		for (int i = col; i < n; ++i)
			if (!w(i, col).is_zero())
			{
				piv = i;
				break;
			}
		if (piv < 0)
			throw SingularMatrix();
		for (int j = 0; j < 2 * n; ++j)
			std::swap(w(col, j), w(piv, j));
		CScalar inv = w(col, col).inverse();
		for (int j = 0; j < 2 * n; ++j)
			w(col, j) *= inv;
		for (int i = 0; i < n; ++i)
			if (i != col && !w(i, col).is_zero())
			{
				CScalar f = w(i, col);
				for (int j = 0; j < 2 * n; ++j)
					w(i, j) -= f * w(col, j);
			}
	}
	Mat r(n, n);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			r(i, j) = w(i, n + j);
	return r;
}

// basis of the right null space {v : m v = 0}, as columns
inline std::vector<std::vector<CScalar>> mat_kernel(Mat m)
{
	int n = m.cols;
	std::vector<int> pivot_col;
	int r = 0;
	for (int col = 0; col < n && r < m.rows; ++col)
	{
		int piv = -1;
		for (int i = r; i < m.rows; ++i)
			if (!m(i, col).is_zero())
			{
				piv = i;
				break;
			}
		if (piv < 0)
			continue;
		for (int j = 0; j < n; ++j)
			std::swap(m(r, j), m(piv, j));
		CScalar inv = m(r, col).inverse();
		for (int j = 0; j < n; ++j)
			m(r, j) *= inv;
		for (int i = 0; i < m.rows; ++i)
			if (i != r && !m(i, col).is_zero())
			{
				CScalar f = m(i, col);
				for (int j = 0; j < n; ++j)
					m(i, j) -= f * m(r, j);
			}
		pivot_col.push_back(col);
		++r;
	}
	std::vector<bool> is_pivot(n, false);
	for (int c : pivot_col)
		is_pivot[c] = true;
	std::vector<std::vector<CScalar>> basis;
	for (int free = 0; free < n; ++free)
	{
		if (is_pivot[free])
			continue;
		std::vector<CScalar> v(n);
		v[free] = CScalar(1);
		for (int i = 0; i < int(pivot_col.size()); ++i)
			v[pivot_col[i]] = -m(i, free);
		basis.push_back(std::move(v));
	}
	return basis;
}

// Exact positive-semidefiniteness for a Hermitian matrix over Q(i), by
// pivoted elimination with Schur complements. Hermitian diagonals are real.
inline bool mat_is_psd(Mat m)
{
	assert(m.rows == m.cols);
	assert(m == m.conj_transpose());
	int n = m.rows;
	std::vector<bool> done(n, false);
	for (int step = 0; step < n; ++step)
	{
		int piv = -1;
		for (int i = 0; i < n; ++i)
			if (!done[i] && !m(i, i).is_zero())
			{
				piv = i;
				break;
			}
		if (piv < 0)
		{
			// all remaining diagonals vanish: PSD iff remaining block is zero
			for (int i = 0; i < n; ++i)
				for (int j = 0; j < n; ++j)
					if (!done[i] && !done[j] && !m(i, j).is_zero())
						return false;
			return true;
		}
		if (m(piv, piv).re < 0)
			return false;
		CScalar d = m(piv, piv).inverse();
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j)
				if (!done[i] && !done[j] && i != piv && j != piv)
					m(i, j) -= m(i, piv) * d * m(piv, j);
		for (int i = 0; i < n; ++i)
		{
			m(i, piv) = CScalar();
			m(piv, i) = CScalar();
		}
		done[piv] = true;
	}
	return true;
}

} // namespace defq
