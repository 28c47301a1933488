#include "bvcheck/linalg.hpp"

#include <sstream>

namespace bvcheck {

int SuperDim::n_even() const {
  int n = 0;
  for (int p : parity) n += (p == 0);
  return n;
}

int SuperDim::n_odd() const { return size() - n_even(); }

SuperDim SuperDim::flipped() const {
  SuperDim d = *this;
  for (int& p : d.parity) p ^= 1;
  return d;
}

SuperDim SuperDim::even_odd(int ne, int no) {
  SuperDim d;
  d.parity.assign(ne, 0);
  d.parity.insert(d.parity.end(), no, 1);
  return d;
}

SuperMatrix::SuperMatrix(ConstUniversePtr u, SuperDim dst, SuperDim src,
                         int parity)
    : u_(std::move(u)), dst_(std::move(dst)), src_(std::move(src)),
      parity_(parity & 1) {
  e_.assign(static_cast<std::size_t>(rows()) * cols(), Poly(u_));
}

SuperMatrix SuperMatrix::identity(const ConstUniversePtr& u,
                                  const SuperDim& d) {
  SuperMatrix m(u, d, d, 0);
  for (int i = 0; i < d.size(); ++i) m.at(i, i) = Poly::constant(u, 1);
  return m;
}

Poly& SuperMatrix::at(int i, int j) {
  return e_[static_cast<std::size_t>(i) * cols() + j];
}

const Poly& SuperMatrix::at(int i, int j) const {
  return e_[static_cast<std::size_t>(i) * cols() + j];
}

bool SuperMatrix::is_zero() const {
  for (const Poly& p : e_)
    if (!p.is_zero()) return false;
  return true;
}

void SuperMatrix::check_entry_parities() const {
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) {
      const Poly& p = at(i, j);
      if (p.is_zero()) continue;
      int want = (parity_ + dst_.parity[i] + src_.parity[j]) & 1;
      if (p.parity() != want)
        fail("matrix entry (" + std::to_string(i) + "," + std::to_string(j) +
             ") has ring parity " + std::to_string(p.parity()) +
             ", expected " + std::to_string(want));
    }
}

SuperMatrix SuperMatrix::operator*(const SuperMatrix& o) const {
  if (src_ != o.dst_) fail("matrix composition dimension mismatch");
  SuperMatrix r(u_, dst_, o.src_, parity_ + o.parity_);
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < o.cols(); ++j) {
      Poly acc(u_);
      for (int k = 0; k < cols(); ++k) {
        if (at(i, k).is_zero() || o.at(k, j).is_zero()) continue;
        acc += at(i, k) * o.at(k, j);
      }
      r.at(i, j) = acc;
    }
  return r;
}

SuperMatrix SuperMatrix::operator+(const SuperMatrix& o) const {
  if (dst_ != o.dst_ || src_ != o.src_ || parity_ != o.parity_)
    fail("matrix addition shape mismatch");
  SuperMatrix r = *this;
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) r.at(i, j) += o.at(i, j);
  return r;
}

SuperMatrix SuperMatrix::operator-(const SuperMatrix& o) const {
  return *this + (-o);
}

SuperMatrix SuperMatrix::operator-() const {
  SuperMatrix r = *this;
  for (Poly& p : r.e_) p = -p;
  return r;
}

bool SuperMatrix::operator==(const SuperMatrix& o) const {
  if (dst_ != o.dst_ || src_ != o.src_) return false;
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j)
      if (!(at(i, j) == o.at(i, j))) return false;
  return true;
}

SuperMatrix SuperMatrix::supertranspose() const {
  SuperMatrix r(u_, src_, dst_, parity_);
  for (int a = 0; a < cols(); ++a)
    for (int b = 0; b < rows(); ++b) {
      int p = src_.parity[a], q = dst_.parity[b];
      int sign = (p * q + q) & 1;
      r.at(a, b) = sign ? -at(b, a) : at(b, a);
    }
  return r;
}

SuperMatrix SuperMatrix::pidual() const {
  SuperMatrix r(u_, src_.flipped(), dst_.flipped(), parity_);
  for (int a = 0; a < cols(); ++a)
    for (int b = 0; b < rows(); ++b) {
      int p = src_.parity[a], q = dst_.parity[b];
      int sign = (p * q + p) & 1;
      r.at(a, b) = sign ? -at(b, a) : at(b, a);
    }
  return r;
}

Poly SuperMatrix::det() const {
  if (rows() != cols()) fail("determinant of a non-square matrix");
  for (const Poly& p : e_)
    if (!p.is_zero() && p.parity() != 0)
      fail("determinant requires even (commuting) entries");
  int n = rows();
  if (n == 0) return Poly::constant(u_, 1);
  // Laplace expansion along the first column.
  struct Rec {
    const SuperMatrix& m;
    Poly run(std::vector<int>& rows, int col) {
      const ConstUniversePtr& u = m.universe();
      if (col == m.cols()) return Poly::constant(u, 1);
      Poly acc(u);
      for (std::size_t k = 0; k < rows.size(); ++k) {
        const Poly& pivot = m.at(rows[k], col);
        if (pivot.is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(rows.size() - 1);
        for (std::size_t l = 0; l < rows.size(); ++l)
          if (l != k) rest.push_back(rows[l]);
        Poly sub = run(rest, col + 1);
        Poly term = pivot * sub;
        if (k & 1) term = -term;
        acc += term;
      }
      return acc;
    }
  } rec{*this};
  std::vector<int> live(n);
  for (int i = 0; i < n; ++i) live[i] = i;
  return rec.run(live, 0);
}

SuperMatrix SuperMatrix::inverse() const {
  if (rows() != cols()) fail("inverse of a non-square matrix");
  int n = rows();
  Poly d = det();
  Poly dinv = d.try_inverse();
  SuperMatrix r(u_, src_, dst_, parity_);
  if (n == 0) return r;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> ri, ci;
      for (int k = 0; k < n; ++k) {
        if (k != j) ri.push_back(k);
        if (k != i) ci.push_back(k);
      }
      Poly cof = submatrix(ri, ci).det();
      if ((i + j) & 1) cof = -cof;
      r.at(i, j) = cof * dinv;
    }
  return r;
}

SuperMatrix SuperMatrix::submatrix(const std::vector<int>& rows_idx,
                                   const std::vector<int>& cols_idx) const {
  SuperDim d, s;
  for (int i : rows_idx) {
    d.parity.push_back(dst_.parity[i]);
    if (!dst_.ghost.empty()) d.ghost.push_back(dst_.ghost[i]);
  }
  for (int j : cols_idx) {
    s.parity.push_back(src_.parity[j]);
    if (!src_.ghost.empty()) s.ghost.push_back(src_.ghost[j]);
  }
  SuperMatrix r(u_, d, s, parity_);
  for (std::size_t i = 0; i < rows_idx.size(); ++i)
    for (std::size_t j = 0; j < cols_idx.size(); ++j)
      r.at(static_cast<int>(i), static_cast<int>(j)) =
          at(rows_idx[i], cols_idx[j]);
  return r;
}

Poly SuperMatrix::berezinian() const {
  if (rows() != cols() || dst_ != src_)
    fail("Berezinian requires an endomorphism");
  if (parity_ != 0) fail("Berezinian requires an even morphism");
  std::vector<int> ev, od;
  for (int i = 0; i < rows(); ++i) (dst_.parity[i] ? od : ev).push_back(i);
  SuperMatrix a00 = submatrix(ev, ev);
  SuperMatrix a01 = submatrix(ev, od);
  SuperMatrix a10 = submatrix(od, ev);
  SuperMatrix a11 = submatrix(od, od);

  Poly det11 = a11.det();
  if (det11.is_zero()) fail("Berezinian: block A11 is singular");
  Poly det00 = a00.det();
  if (det00.is_zero()) fail("Berezinian: block A00 is singular");

  SuperMatrix schur0 = a00 - a01 * a11.inverse() * a10;
  SuperMatrix schur1 = a11 - a10 * a00.inverse() * a01;
  Poly route_a = schur0.det() * det11.try_inverse();
  Poly route_b = det00 * schur1.det().try_inverse();
  if (!(route_a == route_b))
    fail("Berezinian route mismatch: " + route_a.str() + " vs " +
         route_b.str());
  return route_a;
}

std::string SuperMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows(); ++i) {
    os << "[ ";
    for (int j = 0; j < cols(); ++j) {
      os << at(i, j).str();
      if (j + 1 < cols()) os << " | ";
    }
    os << " ]\n";
  }
  return os.str();
}

Rational OddSymplecticForm::omega(int k, int l) const {
  // basis order: e_1..e_n (even), f_1..f_n (odd)
  if (k < n && l >= n && l - n == k) return Rational(-1);
  if (k >= n && l < n && k - n == l) return Rational(1);
  return Rational(0);
}

bool OddSymplecticForm::ghost_pairing_ok() const {
  for (int k = 0; k < 2 * n; ++k)
    for (int l = 0; l < 2 * n; ++l) {
      if (omega(k, l) == 0) continue;
      int gk = k < n ? -(lghost.empty() ? 0 : lghost[k])
                     : 1 + (lghost.empty() ? 0 : lghost[k - n]);
      int gl = l < n ? -(lghost.empty() ? 0 : lghost[l])
                     : 1 + (lghost.empty() ? 0 : lghost[l - n]);
      if (gk + gl != 1) return false;
    }
  return true;
}

std::array<SuperMatrix, 4> quadric_residuals(const SuperMatrix& a,
                                             const OddSymplecticForm& w) {
  const int n = w.n;
  if (a.src() != w.vdim() || a.dst() != w.vdim() || a.parity() != 0)
    fail("quadric residuals need an even endomorphism of L + L°");
  const ConstUniversePtr& u = a.universe();
  // gram(i,j) = omega(A v_i, A v_j)
  //           = sum_{k,l} (-1)^{|A(k,i)| p_l} omega(k,l) A(k,i) A(l,j)
  SuperMatrix gram(u, w.vdim(), w.vdim(), 0);
  for (int i = 0; i < 2 * n; ++i)
    for (int j = 0; j < 2 * n; ++j) {
      Poly acc(u);
      for (int k = 0; k < 2 * n; ++k) {
        const Poly& aki = a.at(k, i);
        if (aki.is_zero()) continue;
        int wa = aki.parity();
        for (int l = 0; l < 2 * n; ++l) {
          Rational om = w.omega(k, l);
          if (om == 0) continue;
          const Poly& alj = a.at(l, j);
          if (alj.is_zero()) continue;
          Poly term = aki * alj * om;
          int pl = l < n ? 0 : 1;
          if (wa && pl) term = -term;
          acc += term;
        }
      }
      gram.at(i, j) = acc;
    }
  std::vector<int> ev(n), od(n);
  for (int i = 0; i < n; ++i) {
    ev[i] = i;
    od[i] = n + i;
  }
  // values of omega itself on the two off-parity blocks
  SuperMatrix eye_oe(u, SuperDim::even_odd(0, n), SuperDim::even_odd(n, 0), 0);
  for (int i = 0; i < n; ++i) eye_oe.at(i, i) = Poly::constant(u, 1);
  SuperMatrix eye_eo(u, SuperDim::even_odd(n, 0), SuperDim::even_odd(0, n), 0);
  for (int i = 0; i < n; ++i) eye_eo.at(i, i) = Poly::constant(u, -1);

  return {
      gram.submatrix(od, ev) - eye_oe,  // S°P - Q°R - Id_L
      gram.submatrix(ev, ev),           // P°R - R°P
      gram.submatrix(od, od),           // Q°S - S°Q
      gram.submatrix(ev, od) - eye_eo,  // P°S - R°Q - Id_L°
  };
}

bool on_quadric(const SuperMatrix& a, const OddSymplecticForm& w) {
  for (const SuperMatrix& r : quadric_residuals(a, w))
    if (!r.is_zero()) return false;
  return true;
}

Poly ber_half(const SuperMatrix& a, const OddSymplecticForm& w) {
  auto res = quadric_residuals(a, w);
  static const char* names[4] = {"S°P-Q°R-Id", "P°R-R°P", "Q°S-S°Q",
                                 "P°S-R°Q-Id"};
  std::string bad;
  for (int i = 0; i < 4; ++i)
    if (!res[i].is_zero())
      bad += std::string(bad.empty() ? "" : ", ") + names[i];
  if (!bad.empty())
    fail("matrix is not on the quadric; nonzero residuals: " + bad);
  std::vector<int> ev;
  for (int i = 0; i < w.n; ++i) ev.push_back(i);
  return a.submatrix(ev, ev).det();  // Ber of the purely even L block
}

namespace {

Poly random_odd_entry(Rng& rng, const ConstUniversePtr& u,
                      const std::vector<GenId>& odd_pool) {
  GenId l = odd_pool[static_cast<std::size_t>(
      rng.uniform(0, static_cast<int>(odd_pool.size()) - 1))];
  return Poly::gen(u, l) * rng.rational(3, 2);
}

}  // namespace

SuperMatrix random_quadric(Rng& rng, const ConstUniversePtr& u,
                           const OddSymplecticForm& w,
                           const std::vector<GenId>& odd_pool, int factors) {
  const int n = w.n;
  SuperDim vd = w.vdim();
  SuperMatrix acc = SuperMatrix::identity(u, vd);
  for (int f = 0; f < factors; ++f) {
    SuperMatrix m = SuperMatrix::identity(u, vd);
    switch (rng.uniform(0, 2)) {
      case 0: {  // lower shear: R symmetric, odd entries
        for (int i = 0; i < n; ++i)
          for (int j = i; j < n; ++j) {
            Poly v = random_odd_entry(rng, u, odd_pool);
            m.at(n + i, j) = v;
            m.at(n + j, i) = v;
          }
        break;
      }
      case 1: {  // upper shear: Q antisymmetric, odd entries
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) {
            Poly v = random_odd_entry(rng, u, odd_pool);
            m.at(i, n + j) = v;
            m.at(j, n + i) = -v;
          }
        break;
      }
      default: {  // diagonal: P invertible, S = (P°)^{-1}
        SuperMatrix p(u, SuperDim::even_odd(n, 0), SuperDim::even_odd(n, 0),
                      0);
        for (int i = 0; i < n; ++i) {
          p.at(i, i) = Poly::constant(u, rng.nonzero_rational(3, 2));
          for (int j = i + 1; j < n; ++j)
            p.at(i, j) = Poly::constant(u, rng.rational(2, 2));
        }
        SuperMatrix pti = p.supertranspose().inverse();
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            m.at(i, j) = p.at(i, j);
            m.at(n + i, n + j) = pti.at(i, j);
          }
        break;
      }
    }
    acc = acc * m;
  }
  if (!on_quadric(acc, w))
    fail("random_quadric generator produced an off-quadric element");
  return acc;
}

SuperMatrix random_even_invertible(Rng& rng, const ConstUniversePtr& u,
                                   int ne, int no,
                                   const std::vector<GenId>& odd_pool) {
  SuperDim d = SuperDim::even_odd(ne, no);
  SuperMatrix m(u, d, d, 0);
  auto fill_block = [&](int off, int k) {
    SuperMatrix lo(u, SuperDim::even_odd(k, 0), SuperDim::even_odd(k, 0), 0);
    SuperMatrix up = lo;
    for (int i = 0; i < k; ++i) {
      lo.at(i, i) = Poly::constant(u, 1);
      up.at(i, i) = Poly::constant(u, rng.nonzero_rational(3, 2));
      for (int j = 0; j < i; ++j)
        lo.at(i, j) = Poly::constant(u, rng.rational(2, 2));
      for (int j = i + 1; j < k; ++j)
        up.at(i, j) = Poly::constant(u, rng.rational(2, 2));
    }
    SuperMatrix prod = lo * up;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) m.at(off + i, off + j) = prod.at(i, j);
  };
  fill_block(0, ne);
  fill_block(ne, no);
  for (int i = 0; i < ne; ++i)
    for (int j = 0; j < no; ++j) {
      m.at(i, ne + j) = random_odd_entry(rng, u, odd_pool);
      m.at(ne + j, i) = random_odd_entry(rng, u, odd_pool);
    }
  return m;
}

SuperMatrix random_scalar_morphism(Rng& rng, const ConstUniversePtr& u,
                                   const SuperDim& dst, const SuperDim& src,
                                   int parity) {
  SuperMatrix m(u, dst, src, parity);
  for (int i = 0; i < dst.size(); ++i)
    for (int j = 0; j < src.size(); ++j)
      if (((dst.parity[i] + src.parity[j]) & 1) == (parity & 1))
        m.at(i, j) = Poly::constant(u, rng.rational(3, 2));
  return m;
}

}  // namespace bvcheck
