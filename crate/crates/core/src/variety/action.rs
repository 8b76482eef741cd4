//! Finite groups acting on varieties through matrices, and their characters.

use serde::{Deserialize, Serialize};

use super::count::{list_points, same_point, apply, CountConfig};
use super::multipoly::CompiledPoly;
use super::{Ambient, VarietySpec};
use crate::error::{Error, Result};
use crate::exact::rational::{self, Rational};
use crate::exact::{CycloElement, CyclotomicField, FqElement, FqField};

/// Integer matrices reduced mod `p`; projective ones are scaled so their first
/// nonzero entry is 1. Group structure comes from an explicit multiplication
/// table when given (allowing non-faithful actions), else from the matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupAction {
    elements: Vec<Vec<Vec<i64>>>,
    table: Vec<Vec<usize>>,
    #[serde(skip)]
    identity: usize,
    #[serde(skip)]
    orders: Vec<usize>,
}

#[derive(Deserialize)]
pub struct RawAction {
    pub elements: Vec<Vec<Vec<i64>>>,
    #[serde(default)]
    pub table: Option<Vec<Vec<usize>>>,
}

fn inv_mod(a: i64, p: i64) -> i64 {
    let (mut r, mut b, mut k) = (1i64, a.rem_euclid(p), p - 2);
    while k > 0 {
        if k & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        k >>= 1;
    }
    r
}

fn det_mod(m: &[Vec<i64>], p: i64) -> i64 {
    let n = m.len();
    let mut a: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect();
    let mut det = 1i64;
    for c in 0..n {
        let Some(piv) = (c..n).find(|&r| a[r][c] != 0) else {
            return 0;
        };
        if piv != c {
            a.swap(piv, c);
            det = (p - det) % p;
        }
        det = det * a[c][c] % p;
        let inv = inv_mod(a[c][c], p);
        for r in c + 1..n {
            let f = a[r][c] * inv % p;
            for k in c..n {
                a[r][k] = (a[r][k] - f * a[c][k]).rem_euclid(p);
            }
        }
    }
    det
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>], p: i64) -> Vec<Vec<i64>> {
    let n = a.len();
    (0..n)
        .map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum::<i64>().rem_euclid(p)).collect())
        .collect()
}

fn normalize(m: &[Vec<i64>], p: i64, projective: bool) -> Vec<Vec<i64>> {
    let m: Vec<Vec<i64>> = m.iter().map(|r| r.iter().map(|x| x.rem_euclid(p)).collect()).collect();
    if !projective {
        return m;
    }
    let lead = *m.iter().flatten().find(|&&x| x != 0).expect("invertible matrix is nonzero");
    let inv = inv_mod(lead, p);
    m.iter().map(|r| r.iter().map(|x| x * inv % p).collect()).collect()
}

impl GroupAction {
    /// Validates the group structure and checks that every element maps `X(F_q)` into itself.
    pub fn new(v: &VarietySpec, elements: Vec<Vec<Vec<i64>>>, table: Option<Vec<Vec<usize>>>, cfg: &CountConfig) -> Result<Self> {
        let p = v.p as i64;
        let projective = matches!(v.ambient, Ambient::Projective(_));
        let n = v.ambient.nvars();
        if elements.is_empty() {
            return Err(Error::Validation("a group has at least one element".into()));
        }
        for m in &elements {
            if m.len() != n || m.iter().any(|r| r.len() != n) {
                return Err(Error::Dimension(format!("group elements must be {n}x{n}")));
            }
            if det_mod(m, p) == 0 {
                return Err(Error::Validation("group element is not invertible mod p".into()));
            }
        }
        let elements: Vec<Vec<Vec<i64>>> = elements.iter().map(|m| normalize(m, p, projective)).collect();
        let g = elements.len();
        let product = |i: usize, j: usize| normalize(&mat_mul(&elements[i], &elements[j], p), p, projective);
        let table = match table {
            Some(t) => {
                if t.len() != g || t.iter().any(|r| r.len() != g || r.iter().any(|&x| x >= g)) {
                    return Err(Error::Validation("multiplication table has the wrong shape".into()));
                }
                for i in 0..g {
                    for j in 0..g {
                        if product(i, j) != elements[t[i][j]] {
                            return Err(Error::Validation(format!("table entry ({i},{j}) disagrees with the matrices")));
                        }
                    }
                }
                t
            }
            None => {
                for i in 0..g {
                    if elements[..i].contains(&elements[i]) {
                        return Err(Error::Validation(
                            "repeated group element; supply a multiplication table for non-faithful actions".into(),
                        ));
                    }
                }
                let mut t = vec![vec![0; g]; g];
                for i in 0..g {
                    for j in 0..g {
                        t[i][j] = elements
                            .iter()
                            .position(|m| *m == product(i, j))
                            .ok_or_else(|| Error::Validation("group elements are not closed under products".into()))?;
                    }
                }
                t
            }
        };
        let identity = (0..g)
            .find(|&e| (0..g).all(|i| table[e][i] == i && table[i][e] == i))
            .ok_or_else(|| Error::Validation("no identity element".into()))?;
        for a in 0..g {
            if !(0..g).any(|b| table[a][b] == identity) {
                return Err(Error::Validation(format!("element {a} has no inverse")));
            }
            for b in 0..g {
                for c in 0..g {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::Validation("multiplication is not associative".into()));
                    }
                }
            }
        }
        let orders = (0..g)
            .map(|i| {
                let (mut k, mut x) = (1, i);
                while x != identity {
                    x = table[x][i];
                    k += 1;
                }
                k
            })
            .collect();
        let action = GroupAction { elements, table, identity, orders };
        action.check_preserves(v, cfg)?;
        Ok(action)
    }

    pub fn from_raw(v: &VarietySpec, raw: RawAction, cfg: &CountConfig) -> Result<Self> {
        Self::new(v, raw.elements, raw.table, cfg)
    }

    /// The trivial group.
    pub fn trivial(v: &VarietySpec) -> Self {
        let n = v.ambient.nvars();
        let id: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        GroupAction { elements: vec![id], table: vec![vec![0]], identity: 0, orders: vec![1] }
    }

    fn check_preserves(&self, v: &VarietySpec, cfg: &CountConfig) -> Result<()> {
        let field = FqField::new(v.p, v.e)?;
        let eqs: Vec<CompiledPoly> = v.equations.iter().map(|e| e.compile(&field)).collect();
        let projective = matches!(v.ambient, Ambient::Projective(_));
        let mut img = vec![FqElement::ZERO; v.ambient.nvars()];
        for x in list_points(v, &field, cfg.budget)? {
            for g in 0..self.len() {
                apply(&field, &self.compile(g, &field), &x, &mut img);
                if !eqs.iter().all(|e| e.eval(&field, &img).is_zero()) {
                    return Err(Error::Validation(format!("group element {g} does not preserve the variety")));
                }
                debug_assert!(projective || img.len() == x.len());
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        (0..self.len()).find(|&b| self.table[a][b] == self.identity).unwrap()
    }

    pub fn order(&self, a: usize) -> usize {
        self.orders[a]
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for a in 0..self.len() {
            if seen[a] {
                continue;
            }
            let mut class: Vec<usize> = (0..self.len()).map(|h| self.mul(self.mul(h, a), self.inverse(h))).collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                seen[c] = true;
            }
            out.push(class);
        }
        out
    }

    pub fn centralizer(&self, a: usize) -> Vec<usize> {
        (0..self.len()).filter(|&h| self.mul(h, a) == self.mul(a, h)).collect()
    }

    pub(crate) fn compile(&self, g: usize, field: &FqField) -> Vec<Vec<FqElement>> {
        self.elements[g].iter().map(|r| r.iter().map(|&x| field.from_int(x)).collect()).collect()
    }

    /// Whether `g` fixes the given point (used by tests and diagnostics).
    pub fn fixes(&self, g: usize, field: &FqField, x: &[FqElement], projective: bool) -> bool {
        let mut img = vec![FqElement::ZERO; x.len()];
        apply(field, &self.compile(g, field), x, &mut img);
        same_point(field, &img, x, projective)
    }
}

/// A class function with values in `Q(zeta_m)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTable {
    pub m: u32,
    /// Partition of the group elements (by index) into classes.
    pub classes: Vec<Vec<usize>>,
    /// Value on each class, as coordinates in the power basis of `Q(zeta_m)`.
    pub values: Vec<CycloElement>,
}

impl CharacterTable {
    pub fn trivial(action: &GroupAction) -> Self {
        CharacterTable { m: 1, classes: vec![(0..action.len()).collect()], values: vec![CycloElement::rational(1)] }
    }

    /// Checks that the classes partition the group, the values are constant on
    /// conjugacy classes and the value at the identity is a positive integer.
    pub fn validate(&self, action: &GroupAction) -> Result<CyclotomicField> {
        let k = CyclotomicField::new(self.m)?;
        if self.classes.len() != self.values.len() {
            return Err(Error::Validation("one character value per class is required".into()));
        }
        let mut seen = vec![false; action.len()];
        for c in &self.classes {
            for &g in c {
                if g >= action.len() || seen[g] {
                    return Err(Error::Validation("character classes must partition the group".into()));
                }
                seen[g] = true;
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Validation("character classes must cover the group".into()));
        }
        for v in &self.values {
            if v.coords().len() > k.dimension() {
                return Err(Error::Dimension(format!("value has more than {} coordinates", k.dimension())));
            }
        }
        for class in action.conjugacy_classes() {
            let first = self.value(&k, class[0]);
            if class.iter().any(|&g| self.value(&k, g) != first) {
                return Err(Error::Validation("character is not a class function".into()));
            }
        }
        let deg = k.as_rational(&self.value(&k, action.identity()));
        match deg {
            Some(d) if rational::is_integer(&d) && d > Rational::from_integer(0.into()) => Ok(k),
            _ => Err(Error::Validation("character value at the identity must be a positive integer".into())),
        }
    }

    pub fn value(&self, k: &CyclotomicField, g: usize) -> CycloElement {
        let i = self.classes.iter().position(|c| c.contains(&g)).expect("validated partition");
        k.from_coords(self.values[i].coords().to_vec()).expect("validated dimension")
    }
}
