use super::{Presentation, Word};
use crate::error::{Error, Result};

/// Symmetric Coxeter matrix; `None` entries stand for infinity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterMatrix {
    entries: Vec<Vec<Option<u32>>>,
}

impl CoxeterMatrix {
    pub fn new(entries: Vec<Vec<Option<u32>>>) -> Result<Self> {
        let n = entries.len();
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidArg("coxeter matrix must be square".into()));
            }
            if row[i] != Some(1) {
                return Err(Error::InvalidArg(format!("diagonal entry {i} must be 1")));
            }
            for j in 0..n {
                if row[j] != entries[j][i] {
                    return Err(Error::InvalidArg(format!("entry ({i},{j}) not symmetric")));
                }
                if i != j && matches!(row[j], Some(m) if m < 2) {
                    return Err(Error::InvalidArg(format!("off-diagonal entry ({i},{j}) must exceed 1")));
                }
            }
        }
        Ok(CoxeterMatrix { entries })
    }

    /// Matrix from a graph: unlisted pairs get 2, listed edges their label.
    pub fn from_edges(n: usize, edges: &[(usize, usize, Option<u32>)]) -> Result<Self> {
        let mut entries = vec![vec![Some(2); n]; n];
        for (i, row) in entries.iter_mut().enumerate() {
            row[i] = Some(1);
        }
        for &(i, j, m) in edges {
            if i >= n || j >= n || i == j {
                return Err(Error::InvalidArg(format!("bad edge ({i},{j})")));
            }
            entries[i][j] = m;
            entries[j][i] = m;
        }
        Self::new(entries)
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> Option<u32> {
        self.entries[i][j]
    }
}

/// `<s1..sn; (si sj)^mij for i <= j, mij finite>`.
pub fn coxeter_presentation(m: &CoxeterMatrix) -> Presentation {
    let n = m.size();
    let names: Vec<String> = (1..=n).map(|i| format!("s{i}")).collect();
    let mut relators = Vec::new();
    for i in 0..n {
        for j in i..n {
            if let Some(e) = m.entry(i, j) {
                relators.push(Word::from_powers(&[(i, 1), (j, 1)]).pow(e as i32));
            }
        }
    }
    Presentation::new(names, relators).expect("generated names are valid")
}

/// Artin presentation of the braid group on `n` strings.
pub fn braid_presentation(n: usize) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::InvalidArg(format!("braid group needs n >= 2, got {n}")));
    }
    let names: Vec<String> = (1..n).map(|i| format!("b{i}")).collect();
    let mut relators = Vec::new();
    for i in 0..n - 1 {
        if i + 1 < n - 1 {
            let j = i + 1;
            relators.push(Word::from_powers(&[(i, 1), (j, 1), (i, 1), (j, -1), (i, -1), (j, -1)]));
        }
    }
    for i in 0..n - 1 {
        for j in i + 2..n - 1 {
            relators.push(Word::from_powers(&[(i, 1), (j, 1), (i, -1), (j, -1)]));
        }
    }
    Presentation::new(names, relators)
}

/// Presentation of the alternating group obtained from the core group of the
/// braid group by killing the last generator:
/// `<x1..x(n-1); (xi x(i+1)^-1)^3, (xi xj^-1)^2 (j > i+1), x(n-1)>`.
pub fn alternating_core_presentation(n: usize) -> Result<Presentation> {
    if n < 3 {
        return Err(Error::InvalidArg(format!("need n >= 3, got {n}")));
    }
    let k = n - 1;
    let names: Vec<String> = (1..=k).map(|i| format!("x{i}")).collect();
    let mut relators = Vec::new();
    for i in 0..k - 1 {
        relators.push(Word::from_powers(&[(i, 1), (i + 1, -1)]).pow(3));
    }
    for i in 0..k {
        for j in i + 2..k {
            relators.push(Word::from_powers(&[(i, 1), (j, -1)]).pow(2));
        }
    }
    relators.push(Word::gen(k - 1));
    Presentation::new(names, relators)
}
