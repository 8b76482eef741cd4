//! Integer matrices: Hermite and Smith normal forms with unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Row-major integer matrix as a vector of rows.
pub type IntMatrix = Vec<Vec<BigInt>>;

/// serde adapters writing integers as JSON numbers when they fit in `i64`, else as strings.
pub mod int_serde {
    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Small(i64),
        Big(String),
    }

    fn repr(x: &BigInt) -> Repr {
        x.to_i64().map_or_else(|| Repr::Big(x.to_string()), Repr::Small)
    }

    fn parse<E: serde::de::Error>(r: Repr) -> Result<BigInt, E> {
        match r {
            Repr::Small(x) => Ok(BigInt::from(x)),
            Repr::Big(s) => s.trim().parse().map_err(|_| E::custom(format!("not an integer: {s}"))),
        }
    }

    pub mod scalar {
        use super::*;

        pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
            repr(x).serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
            parse(Repr::deserialize(d)?)
        }
    }

    pub mod vec {
        use super::*;

        pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
            v.iter().map(repr).collect::<Vec<_>>().serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
            Vec::<Repr>::deserialize(d)?.into_iter().map(parse).collect()
        }
    }

    pub mod matrix {
        use super::*;

        pub fn serialize<S: Serializer>(m: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
            m.iter().map(|r| r.iter().map(repr).collect::<Vec<_>>()).collect::<Vec<_>>().serialize(s)
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<BigInt>>, D::Error> {
            Vec::<Vec<Repr>>::deserialize(d)?
                .into_iter()
                .map(|r| r.into_iter().map(parse).collect())
                .collect()
        }
    }
}

pub fn to_big(rows: &[Vec<i64>]) -> IntMatrix {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

pub fn transpose(a: &IntMatrix, cols: usize) -> IntMatrix {
    (0..cols).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn mul(a: &IntMatrix, b: &IntMatrix, inner: usize, cols: usize) -> IntMatrix {
    a.iter()
        .map(|r| {
            (0..cols)
                .map(|j| (0..inner).fold(BigInt::zero(), |acc, k| acc + &r[k] * &b[k][j]))
                .collect()
        })
        .collect()
}

fn row_axpy(m: &mut IntMatrix, dst: usize, src: usize, c: &BigInt) {
    let s = m[src].clone();
    for (d, x) in m[dst].iter_mut().zip(s.iter()) {
        *d -= c * x;
    }
}

fn col_axpy(m: &mut IntMatrix, dst: usize, src: usize, c: &BigInt) {
    for r in m.iter_mut() {
        let x = r[src].clone();
        r[dst] -= c * x;
    }
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    for r in m.iter_mut() {
        r.swap(a, b);
    }
}

/// Row Hermite normal form `h = u a`, `u` unimodular. Pivots are positive and
/// entries above a pivot lie in `[0, pivot)`. Returns `(h, u, pivot_columns)`.
pub fn hermite(a: &IntMatrix, cols: usize) -> (IntMatrix, IntMatrix, Vec<usize>) {
    let m = a.len();
    let mut h = a.clone();
    let mut u = identity(m);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m {
            break;
        }
        loop {
            let best = (r..m).filter(|&i| !h[i][c].is_zero()).min_by_key(|&i| h[i][c].abs());
            let Some(b) = best else { break };
            h.swap(r, b);
            u.swap(r, b);
            let mut done = true;
            for i in r + 1..m {
                if !h[i][c].is_zero() {
                    let q = h[i][c].div_floor(&h[r][c]);
                    row_axpy(&mut h, i, r, &q);
                    row_axpy(&mut u, i, r, &q);
                    done &= h[i][c].is_zero();
                }
            }
            if done {
                break;
            }
        }
        if h[r][c].is_zero() {
            continue;
        }
        if h[r][c].is_negative() {
            for x in h[r].iter_mut().chain(u[r].iter_mut()) {
                *x = -&*x;
            }
        }
        for i in 0..r {
            let q = h[i][c].div_floor(&h[r][c]);
            if !q.is_zero() {
                row_axpy(&mut h, i, r, &q);
                row_axpy(&mut u, i, r, &q);
            }
        }
        pivots.push(c);
        r += 1;
    }
    (h, u, pivots)
}

/// Smith normal form `d = p a q` with `p`, `q` unimodular and `d_i | d_{i+1}`.
pub struct Smith {
    pub diagonal: Vec<BigInt>,
    pub p: IntMatrix,
    pub q: IntMatrix,
}

pub fn smith(a: &IntMatrix, cols: usize) -> Smith {
    let m = a.len();
    let mut d = a.clone();
    let mut p = identity(m);
    let mut q = identity(cols);
    let mut diagonal = Vec::new();
    for t in 0..m.min(cols) {
        'pivot: loop {
            let best = (t..m)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .filter(|&(i, j)| !d[i][j].is_zero())
                .min_by_key(|&(i, j)| d[i][j].abs());
            let Some((bi, bj)) = best else { break 'pivot };
            d.swap(t, bi);
            p.swap(t, bi);
            swap_cols(&mut d, t, bj);
            swap_cols(&mut q, t, bj);
            let mut clean = true;
            for i in t + 1..m {
                let c = d[i][t].div_floor(&d[t][t]);
                if !c.is_zero() {
                    row_axpy(&mut d, i, t, &c);
                    row_axpy(&mut p, i, t, &c);
                }
                clean &= d[i][t].is_zero();
            }
            for j in t + 1..cols {
                let c = d[t][j].div_floor(&d[t][t]);
                if !c.is_zero() {
                    col_axpy(&mut d, j, t, &c);
                    col_axpy(&mut q, j, t, &c);
                }
                clean &= d[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..m).find(|&i| (t + 1..cols).any(|j| !d[i][j].is_multiple_of(&d[t][t])));
            match bad {
                Some(i) => {
                    let minus_one = -BigInt::one();
                    row_axpy(&mut d, t, i, &minus_one);
                    row_axpy(&mut p, t, i, &minus_one);
                }
                None => break 'pivot,
            }
        }
        if d[t][t].is_zero() {
            break;
        }
        if d[t][t].is_negative() {
            for x in d[t].iter_mut().chain(p[t].iter_mut()) {
                *x = -&*x;
            }
        }
        diagonal.push(d[t][t].clone());
    }
    Smith { diagonal, p, q }
}

/// Basis of `{v : a v = 0}` in Hermite form, saturated by construction.
pub fn right_kernel(a: &IntMatrix, cols: usize) -> IntMatrix {
    let at = transpose(a, cols);
    let (h, u, _) = hermite(&at, a.len());
    let basis: IntMatrix = h
        .iter()
        .zip(u)
        .filter(|(row, _)| row.iter().all(Zero::is_zero))
        .map(|(_, v)| v)
        .collect();
    hermite_basis(&basis, cols)
}

/// Canonical Hermite basis of the lattice spanned by `rows`, zero rows dropped.
pub fn hermite_basis(rows: &IntMatrix, cols: usize) -> IntMatrix {
    let (h, _, _) = hermite(rows, cols);
    h.into_iter().filter(|r| r.iter().any(|x| !x.is_zero())).collect()
}

/// `L ⊗ Q ∩ Z^n` for the lattice spanned by `rows`.
pub fn saturate(rows: &IntMatrix, cols: usize) -> IntMatrix {
    if rows.is_empty() {
        return Vec::new();
    }
    // The saturation is the kernel of the kernel.
    let perp = right_kernel(rows, cols);
    if perp.is_empty() {
        return identity(cols);
    }
    right_kernel(&perp, cols)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(rows: &[&[i64]]) -> IntMatrix {
        to_big(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn hermite_form() {
        let a = big(&[&[2, 4], &[3, 5]]);
        let (h, u, piv) = hermite(&a, 2);
        assert_eq!(h, big(&[&[1, 1], &[0, 2]]));
        assert_eq!(mul(&u, &a, 2, 2), h);
        assert_eq!(piv, vec![0, 1]);
    }

    #[test]
    fn smith_form() {
        let a = big(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]);
        let s = smith(&a, 3);
        assert_eq!(s.diagonal, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        let d = mul(&mul(&s.p, &a, 3, 3), &s.q, 3, 3);
        for (i, row) in d.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                assert_eq!(x, &if i == j { s.diagonal[i].clone() } else { BigInt::zero() });
            }
        }
    }

    #[test]
    fn kernels_and_saturation() {
        assert_eq!(right_kernel(&big(&[&[1, 2], &[2, 4]]), 2), big(&[&[2, -1]]));
        assert!(right_kernel(&big(&[&[1, 2], &[0, 1]]), 2).is_empty());
        assert_eq!(saturate(&big(&[&[2, 4]]), 2), big(&[&[1, 2]]));
        assert_eq!(saturate(&big(&[&[2, 0], &[0, 3]]), 2), identity(2));
    }
}
