//! Dense rational matrices.

use std::fmt;

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::Polynomial;
use super::rational::{self, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Rational>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(RatMatrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged matrix rows".into()));
        }
        // a list of empty rows is still the empty matrix
        let r = if c == 0 { 0 } else { r };
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| rational::int(x)).collect()).collect())
            .expect("rectangular literal")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn empty() -> Self {
        Self::zeros(0, 0)
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    pub fn diagonal(d: &[Rational]) -> Self {
        let n = d.len();
        let mut m = Self::zeros(n, n);
        for (i, x) in d.iter().enumerate() {
            m.entries[i * n + i] = x.clone();
        }
        m
    }

    /// Companion matrix of a monic polynomial; its characteristic polynomial is `p`.
    pub fn companion(p: &Polynomial) -> Result<Self> {
        let n = p.degree().ok_or_else(|| Error::Validation("companion of zero polynomial".into()))?;
        if !p.leading().unwrap().is_one() {
            return Err(Error::Validation("companion matrix needs a monic polynomial".into()));
        }
        let mut m = Self::zeros(n, n);
        for i in 1..n {
            m.entries[i * n + i - 1] = Rational::one();
        }
        for i in 0..n {
            m.entries[i * n + n - 1] = -p.coeff(i);
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows)
            .map(|i| self.entries[i * self.cols..(i + 1) * self.cols].to_vec())
            .collect()
    }

    fn require_square(&self, what: &str) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::Dimension(format!("{what} needs a square matrix, got {}x{}", self.rows, self.cols)))
        }
    }

    pub fn mul(&self, o: &RatMatrix) -> Result<RatMatrix> {
        if self.cols != o.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * o.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, o: &RatMatrix) -> Result<RatMatrix> {
        if (self.rows, self.cols) != (o.rows, o.cols) {
            return Err(Error::Dimension("matrix sum of different shapes".into()));
        }
        let entries = self.entries.iter().zip(&o.entries).map(|(a, b)| a + b).collect();
        Ok(RatMatrix { rows: self.rows, cols: self.cols, entries })
    }

    pub fn sub(&self, o: &RatMatrix) -> Result<RatMatrix> {
        self.add(&o.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> RatMatrix {
        RatMatrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(|x| x * c).collect() }
    }

    pub fn transpose(&self) -> RatMatrix {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn trace(&self) -> Result<Rational> {
        let n = self.require_square("trace")?;
        Ok((0..n).map(|i| self.get(i, i).clone()).sum())
    }

    /// Exact determinant by Gaussian elimination; the empty matrix has determinant 1.
    pub fn det(&self) -> Result<Rational> {
        let n = self.require_square("determinant")?;
        let mut a = self.clone();
        let mut det = Rational::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a.get(r, c).is_zero()) else {
                return Ok(Rational::zero());
            };
            if p != c {
                a.swap_rows(p, c);
                det = -det;
            }
            let piv = a.get(c, c).clone();
            det *= &piv;
            let inv = piv.recip();
            for r in c + 1..n {
                let f = a.get(r, c) * &inv;
                if !f.is_zero() {
                    a.row_axpy(r, c, &-f, c);
                }
            }
        }
        Ok(det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += f * row[src], from column `from` on.
    fn row_axpy(&mut self, dst: usize, src: usize, f: &Rational, from: usize) {
        for j in from..self.cols {
            let v = f * self.get(src, j);
            if !v.is_zero() {
                self.entries[dst * self.cols + j] += v;
            }
        }
    }

    /// col[dst] += f * col[src]
    fn col_axpy(&mut self, dst: usize, src: usize, f: &Rational) {
        for i in 0..self.rows {
            let v = f * self.get(i, src);
            if !v.is_zero() {
                self.entries[i * self.cols + dst] += v;
            }
        }
    }

    pub fn inverse(&self) -> Result<RatMatrix> {
        let n = self.require_square("inverse")?;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for c in 0..n {
            let p = (c..n)
                .find(|&r| !a.get(r, c).is_zero())
                .ok_or_else(|| Error::NotInvertible(format!("singular {n}x{n} matrix")))?;
            a.swap_rows(p, c);
            inv.swap_rows(p, c);
            let s = a.get(c, c).recip();
            for j in 0..n {
                let v = a.get(c, j) * &s;
                a.set(c, j, v);
                let w = inv.get(c, j) * &s;
                inv.set(c, j, w);
            }
            for r in 0..n {
                if r == c {
                    continue;
                }
                let f = -a.get(r, c).clone();
                if f.is_zero() {
                    continue;
                }
                a.row_axpy(r, c, &f, 0);
                inv.row_axpy(r, c, &f, 0);
            }
        }
        Ok(inv)
    }

    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut rank = 0;
        for c in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !a.get(r, c).is_zero()) else {
                continue;
            };
            a.swap_rows(p, rank);
            let inv = a.get(rank, c).recip();
            for r in rank + 1..self.rows {
                let f = a.get(r, c) * &inv;
                if !f.is_zero() {
                    a.row_axpy(r, rank, &-f, c);
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn pow(&self, k: u32) -> Result<RatMatrix> {
        let n = self.require_square("power")?;
        let mut acc = Self::identity(n);
        for _ in 0..k {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Similar upper Hessenberg matrix.
    fn hessenberg(&self) -> RatMatrix {
        let n = self.rows;
        let mut h = self.clone();
        for j in 0..n.saturating_sub(2) {
            let Some(p) = (j + 1..n).find(|&r| !h.get(r, j).is_zero()) else {
                continue;
            };
            if p != j + 1 {
                h.swap_rows(p, j + 1);
                h.swap_cols(p, j + 1);
            }
            let inv = h.get(j + 1, j).recip();
            for r in j + 2..n {
                let u = h.get(r, j) * &inv;
                if u.is_zero() {
                    continue;
                }
                h.row_axpy(r, j + 1, &-u.clone(), 0);
                h.col_axpy(j + 1, r, &u);
            }
        }
        h
    }

    /// `det(tI - M)`, monic of degree n; the empty matrix gives 1.
    pub fn char_poly(&self) -> Result<Polynomial> {
        let n = self.require_square("characteristic polynomial")?;
        let h = self.hessenberg();
        let mut polys: Vec<Polynomial> = vec![Polynomial::one()];
        for k in 1..=n {
            let lin = Polynomial::new(vec![-h.get(k - 1, k - 1).clone(), Rational::one()]);
            let mut pk = &lin * &polys[k - 1];
            let mut sub_prod = Rational::one();
            for i in (1..k).rev() {
                sub_prod *= h.get(i, i - 1);
                if sub_prod.is_zero() {
                    break;
                }
                let c = h.get(i - 1, k - 1) * &sub_prod;
                if !c.is_zero() {
                    pk = &pk - &polys[i - 1].scale(&c);
                }
            }
            polys.push(pk);
        }
        Ok(polys.pop().unwrap())
    }

    /// `det(I - tM)`, constant term 1.
    pub fn reversed_char_poly(&self) -> Result<Polynomial> {
        let cp = self.char_poly()?;
        Ok(cp.reversed(self.rows))
    }

    pub fn kronecker(&self, o: &RatMatrix) -> RatMatrix {
        let (r, c) = (self.rows * o.rows, self.cols * o.cols);
        let mut out = Self::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..o.rows {
                    for l in 0..o.cols {
                        out.entries[(i * o.rows + k) * c + j * o.cols + l] = a * o.get(k, l);
                    }
                }
            }
        }
        out
    }

    pub fn block_diag(&self, o: &RatMatrix) -> RatMatrix {
        let (r, c) = (self.rows + o.rows, self.cols + o.cols);
        let mut out = Self::zeros(r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[i * c + j] = self.get(i, j).clone();
            }
        }
        for i in 0..o.rows {
            for j in 0..o.cols {
                out.entries[(self.rows + i) * c + self.cols + j] = o.get(i, j).clone();
            }
        }
        out
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .row_vecs()
            .iter()
            .map(|r| r.iter().map(rational::format_rational).collect::<Vec<_>>().join(", "))
            .collect();
        write!(f, "[{}]", rows.iter().map(|r| format!("[{r}]")).collect::<Vec<_>>().join(", "))
    }
}

impl Serialize for RatMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self
            .row_vecs()
            .iter()
            .map(|r| r.iter().map(rational::format_rational).collect())
            .collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Row(#[serde(with = "rational::rational_vec_serde")] Vec<Rational>);
        let rows: Vec<Row> = Vec::deserialize(d)?;
        RatMatrix::from_rows(rows.into_iter().map(|r| r.0).collect()).map_err(D::Error::custom)
    }
}
