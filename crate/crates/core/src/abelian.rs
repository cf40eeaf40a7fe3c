//! Exact integer linear algebra: Smith normal form and abelianization.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::presentation::Presentation;

/// Dense integer matrix with arbitrary-precision entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        IntMatrix { rows: r, cols: c, entries: rows.iter().flatten().map(|&x| BigInt::from(x)).collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.cols + j] += v;
    }

    /// Appends `extra` zero columns.
    pub fn pad_columns(&self, extra: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows, self.cols + extra);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        m
    }

    /// Removes row `r` and column `c`.
    pub fn minor(&self, r: usize, c: usize) -> IntMatrix {
        let mut m = IntMatrix::zeros(self.rows - 1, self.cols - 1);
        for i in (0..self.rows).filter(|&i| i != r) {
            for j in (0..self.cols).filter(|&j| j != c) {
                let (ii, jj) = (i - usize::from(i > r), j - usize::from(j > c));
                m.set(ii, jj, self.get(i, j).clone());
            }
        }
        m
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| (0..n).map(|j| self.get(i, j).clone()).collect()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
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

    /// row[dst] -= q * row[src]
    fn row_sub(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = self.get(src, j) * q;
            self.entries[dst * self.cols + j] -= v;
        }
    }

    fn col_sub(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = self.get(i, src) * q;
            self.entries[i * self.cols + dst] -= v;
        }
    }
}

/// Invariant factors of `m` (all nonzero diagonal entries of the Smith
/// normal form, in divisibility order, units included) and its rank.
pub fn smith_normal_form(m: &IntMatrix) -> (Vec<BigInt>, usize) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows, a.cols);
    let mut diag = Vec::new();
    for k in 0..rows.min(cols) {
        // pivot: smallest nonzero absolute value in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                let v = a.get(i, j);
                if !v.is_zero() && best.is_none_or(|(bi, bj)| v.abs() < a.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap_rows(k, pi);
        a.swap_cols(k, pj);
        loop {
            let mut dirty = false;
            for i in k + 1..rows {
                if a.get(i, k).is_zero() {
                    continue;
                }
                let q = a.get(i, k).div_floor(a.get(k, k));
                a.row_sub(i, k, &q);
                if !a.get(i, k).is_zero() {
                    a.swap_rows(i, k);
                    dirty = true;
                }
            }
            for j in k + 1..cols {
                if a.get(k, j).is_zero() {
                    continue;
                }
                let q = a.get(k, j).div_floor(a.get(k, k));
                a.col_sub(j, k, &q);
                if !a.get(k, j).is_zero() {
                    a.swap_cols(j, k);
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }
        diag.push(a.get(k, k).abs());
    }
    // enforce the divisibility chain: (x, y) -> (gcd, lcm)
    let n = diag.len();
    for i in 0..n {
        for j in i + 1..n {
            let g = diag[i].gcd(&diag[j]);
            let l = diag[i].lcm(&diag[j]);
            diag[i] = g;
            diag[j] = l;
        }
    }
    (diag, n)
}

/// A finitely generated abelian group `Z^r + Z/d1 + ... + Z/dk` with
/// `2 <= d1 | d2 | ... | dk`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub divisors: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn free(rank: usize) -> Self {
        AbelianGroup { free_rank: rank, divisors: Vec::new() }
    }

    /// Builds a group from arbitrary cyclic factors (0 meaning `Z`), putting
    /// it into invariant-factor form.
    pub fn from_cyclic(factors: &[i64]) -> Self {
        let n = factors.len();
        let mut m = IntMatrix::zeros(n, n);
        for (i, &f) in factors.iter().enumerate() {
            m.set(i, i, BigInt::from(f));
        }
        Self::cokernel(&m)
    }

    /// Cokernel of the map whose relation rows are the rows of `m`.
    pub fn cokernel(m: &IntMatrix) -> Self {
        let (factors, rank) = smith_normal_form(m);
        AbelianGroup { free_rank: m.cols() - rank, divisors: factors.into_iter().filter(|d| !d.is_one()).collect() }
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> AbelianGroup {
        let divs: Vec<&BigInt> = self.divisors.iter().chain(&other.divisors).collect();
        let free = self.free_rank + other.free_rank;
        let mut m = IntMatrix::zeros(divs.len(), free + divs.len());
        for (i, d) in divs.into_iter().enumerate() {
            m.set(i, free + i, d.clone());
        }
        AbelianGroup::cokernel(&m)
    }

    pub fn torsion_divisors(&self) -> &[BigInt] {
        &self.divisors
    }

    /// Dimension of `A / 2A` over the field with two elements.
    pub fn mod2_rank(&self) -> usize {
        self.free_rank + self.divisors.iter().filter(|d| d.is_even()).count()
    }

    /// `(r, [d...])` with divisors as decimal strings, for structured output.
    pub fn to_pair(&self) -> (usize, Vec<String>) {
        (self.free_rank, self.divisors.iter().map(ToString::to_string).collect())
    }

    pub fn parse(text: &str) -> Option<AbelianGroup> {
        let mut factors = Vec::new();
        let t = text.trim();
        if t == "0" {
            return Some(AbelianGroup::free(0));
        }
        for part in t.split('+') {
            let p = part.trim();
            if p == "Z" {
                factors.push(0);
            } else if let Some(e) = p.strip_prefix("Z^") {
                factors.extend(std::iter::repeat_n(0, e.parse().ok()?));
            } else {
                let d = p.strip_prefix("Z/")?;
                factors.push(d.parse().ok()?);
            }
        }
        Some(AbelianGroup::from_cyclic(&factors))
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.divisors.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Exponent-sum relation matrix: one row per relator, one column per generator.
pub fn relation_matrix(p: &Presentation) -> IntMatrix {
    let mut m = IntMatrix::zeros(p.relators().len(), p.num_generators());
    for (i, r) in p.relators().iter().enumerate() {
        for l in r.letters() {
            m.add_to(i, l.gen, l.exp());
        }
    }
    m
}

pub fn abelianize(p: &Presentation) -> AbelianGroup {
    AbelianGroup::cokernel(&relation_matrix(p))
}

pub fn mod2_rank(a: &AbelianGroup) -> usize {
    a.mod2_rank()
}

pub fn torsion_divisors(a: &AbelianGroup) -> Vec<BigInt> {
    a.divisors.clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn snf_examples() {
        assert_eq!(smith_normal_form(&IntMatrix::from_rows(&[vec![1, 0], vec![0, 1]])), (ints(&[1, 1]), 2));
        assert_eq!(smith_normal_form(&IntMatrix::from_rows(&[vec![0]])), (vec![], 0));
        let trefoil = IntMatrix::from_rows(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
        assert_eq!(smith_normal_form(&trefoil), (ints(&[1, 3]), 2));
    }

    #[test]
    fn snf_divisibility_fixup() {
        let m = IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(smith_normal_form(&m).0, ints(&[1, 6]));
        let m = IntMatrix::from_rows(&[vec![4, 0], vec![0, 6]]);
        assert_eq!(smith_normal_form(&m).0, ints(&[2, 12]));
    }

    #[test]
    fn determinant_small() {
        let m = IntMatrix::from_rows(&[vec![2, -1], vec![-1, 2]]);
        assert_eq!(m.determinant(), BigInt::from(3));
        let m = IntMatrix::from_rows(&[vec![0, 1, 2], vec![1, 0, 3], vec![4, -3, 8]]);
        assert_eq!(m.determinant(), BigInt::from(-2));
        assert_eq!(IntMatrix::zeros(0, 0).determinant(), BigInt::one());
    }

    #[test]
    fn abelian_display_and_rank() {
        let a = AbelianGroup::from_cyclic(&[0, 3]);
        assert_eq!(a.to_string(), "Z + Z/3");
        assert_eq!(a.mod2_rank(), 1);
        assert_eq!(AbelianGroup::from_cyclic(&[0, 2]).mod2_rank(), 2);
        assert_eq!(AbelianGroup::free(2).mod2_rank(), 2);
        assert_eq!(AbelianGroup::free(2).to_string(), "Z^2");
        assert_eq!(AbelianGroup::free(0).to_string(), "0");
        assert_eq!(AbelianGroup::from_cyclic(&[0, 0, 2, 6]).to_string(), "Z^2 + Z/2 + Z/6");
        assert_eq!(AbelianGroup::from_cyclic(&[2, 3]).to_string(), "Z/6");
        assert_eq!(AbelianGroup::parse("Z^2 + Z/3 + Z/3").unwrap().to_string(), "Z^2 + Z/3 + Z/3");
        assert_eq!(AbelianGroup::parse("0").unwrap(), AbelianGroup::free(0));
    }

    #[test]
    fn abelianize_examples() {
        let p = Presentation::parse("gens: a b\n").unwrap();
        assert_eq!(abelianize(&p), AbelianGroup::free(2));
        let p = Presentation::parse("gens: a\nrel: a^3\n").unwrap();
        assert_eq!(torsion_divisors(&abelianize(&p)), ints(&[3]));
    }
}
