use serde::{Deserialize, Serialize};

use super::OracleError;

/// A finite quasi-order, stored as bit rows: bit `j` of row `i` means `i ≤ j`.
#[derive(Clone, PartialEq, Eq)]
pub struct FinitePoset {
    n: usize,
    rows: Vec<Vec<u64>>,
}

#[derive(Serialize, Deserialize)]
struct PosetJson {
    n: usize,
    leq: Vec<[usize; 2]>,
}

fn words(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

impl FinitePoset {
    /// Builds from an arbitrary relation and closes it reflexively and transitively.
    pub fn from_relation(n: usize, rel: impl Fn(usize, usize) -> bool) -> Self {
        let mut p = Self::from_fn_unchecked(n, |i, j| i == j || rel(i, j));
        p.close();
        p
    }

    /// Builds from a relation already known to be a quasi-order.
    pub(crate) fn from_fn_unchecked(n: usize, rel: impl Fn(usize, usize) -> bool) -> Self {
        let w = words(n);
        let mut rows = vec![vec![0u64; w]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            for j in 0..n {
                if rel(i, j) {
                    row[j / 64] |= 1 << (j % 64);
                }
            }
        }
        FinitePoset { n, rows }
    }

    pub fn from_pairs(n: usize, pairs: &[[usize; 2]]) -> Result<Self, OracleError> {
        if let Some(&[i, j]) = pairs.iter().find(|&&[i, j]| i >= n || j >= n) {
            return Err(OracleError::Json(format!(
                "pair [{i},{j}] out of range for n = {n}"
            )));
        }
        let mut p = Self::from_fn_unchecked(n, |i, j| i == j);
        for &[i, j] in pairs {
            p.rows[i][j / 64] |= 1 << (j % 64);
        }
        p.close();
        Ok(p)
    }

    fn close(&mut self) {
        for k in 0..self.n {
            let row_k = self.rows[k].clone();
            for i in 0..self.n {
                if self.leq(i, k) {
                    for (a, b) in self.rows[i].iter_mut().zip(&row_k) {
                        *a |= b;
                    }
                }
            }
        }
    }

    pub fn chain(n: usize) -> Self {
        Self::from_fn_unchecked(n, |i, j| i <= j)
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_fn_unchecked(n, |i, j| i == j)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.rows[i][j / 64] >> (j % 64) & 1 == 1
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) && !self.leq(j, i)
    }

    pub fn equiv(&self, i: usize, j: usize) -> bool {
        self.leq(i, j) && self.leq(j, i)
    }

    pub fn incomparable(&self, i: usize, j: usize) -> bool {
        !self.leq(i, j) && !self.leq(j, i)
    }

    pub fn is_quasi_order(&self) -> bool {
        (0..self.n).all(|i| self.leq(i, i))
            && (0..self.n).all(|i| {
                (0..self.n).all(|j| {
                    !self.leq(i, j) || (0..self.n).all(|k| !self.leq(j, k) || self.leq(i, k))
                })
            })
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| !self.equiv(i, j)))
    }

    /// Equivalence class index of each element, numbered by first occurrence.
    pub fn classes(&self) -> (Vec<usize>, usize) {
        let mut class = vec![usize::MAX; self.n];
        let mut count = 0;
        for i in 0..self.n {
            if class[i] == usize::MAX {
                for (j, c) in class.iter_mut().enumerate().skip(i) {
                    if self.equiv(i, j) {
                        *c = count;
                    }
                }
                count += 1;
            }
        }
        (class, count)
    }

    /// The partial order on `≡`-classes.
    pub fn quotient(&self) -> FinitePoset {
        let (class, count) = self.classes();
        let mut rep = vec![0; count];
        for (i, &c) in class.iter().enumerate().rev() {
            rep[c] = i;
        }
        Self::from_fn_unchecked(count, |a, b| self.leq(rep[a], rep[b]))
    }

    pub fn to_pairs(&self) -> Vec<[usize; 2]> {
        (0..self.n)
            .flat_map(|i| (0..self.n).map(move |j| [i, j]))
            .filter(|&[i, j]| i != j && self.leq(i, j))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&PosetJson {
            n: self.n,
            leq: self.to_pairs(),
        })
        .expect("posets serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, OracleError> {
        let parsed: PosetJson =
            serde_json::from_str(text).map_err(|e| OracleError::Json(e.to_string()))?;
        Self::from_pairs(parsed.n, &parsed.leq)
    }
}

impl std::fmt::Debug for FinitePoset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FinitePoset{}", self.to_json())
    }
}
