use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{0..degree}` in image form.
pub type Permutation = Vec<u32>;

const MAX_ORDER: usize = 50_000;
const TABLE_LIMIT: usize = 2_000;

fn compose(a: &[u32], b: &[u32]) -> Permutation {
    // apply a, then b
    a.iter().map(|&x| b[x as usize]).collect()
}

fn invert(a: &[u32]) -> Permutation {
    let mut inv = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        inv[x as usize] = i as u32;
    }
    inv
}

/// A finite permutation group with its elements enumerated up front.
///
/// Elements are addressed by index; index 0 is the identity. Products use a
/// full multiplication table for small groups and a lookup otherwise.
#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    inverses: Vec<usize>,
    table: Option<Vec<u32>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.order())
    }
}

impl FiniteGroup {
    pub fn from_generators(name: &str, degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        for g in &generators {
            let mut seen = vec![false; degree];
            if g.len() != degree
                || !g.iter().all(|&x| (x as usize) < degree && !std::mem::replace(&mut seen[x as usize], true))
            {
                return Err(Error::InvalidArg(format!("{g:?} is not a permutation of degree {degree}")));
            }
        }
        let identity: Permutation = (0..degree as u32).collect();
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::from([(identity, 0)]);
        let mut i = 0;
        while i < elements.len() {
            for g in &generators {
                let p = compose(&elements[i], g);
                if !index.contains_key(&p) {
                    if elements.len() >= MAX_ORDER {
                        return Err(Error::InvalidArg(format!("group {name} has order above {MAX_ORDER}")));
                    }
                    index.insert(p.clone(), elements.len());
                    elements.push(p);
                }
            }
            i += 1;
        }
        let inverses = elements.iter().map(|e| index[&invert(e)]).collect();
        let mut grp =
            FiniteGroup { name: name.to_string(), degree, generators, elements, index, inverses, table: None };
        if grp.order() <= TABLE_LIMIT {
            let n = grp.order();
            let mut t = Vec::with_capacity(n * n);
            for a in 0..n {
                for b in 0..n {
                    t.push(grp.mul_slow(a, b) as u32);
                }
            }
            grp.table = Some(t);
        }
        Ok(grp)
    }

    /// Cyclic group of order `m` acting on `m` points.
    pub fn cyclic(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArg("cyclic group of order 0".into()));
        }
        let cycle = (0..m as u32).map(|i| (i + 1) % m as u32).collect();
        Self::from_generators(&format!("z{m}"), m, vec![cycle])
    }

    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArg("symmetric group on 0 points".into()));
        }
        let mut gens = Vec::new();
        if n > 1 {
            let mut t: Permutation = (0..n as u32).collect();
            t.swap(0, 1);
            gens.push(t);
            gens.push((0..n as u32).map(|i| (i + 1) % n as u32).collect());
        }
        Self::from_generators(&format!("s{n}"), n, gens)
    }

    /// Alternating group, generated by `(1 2 3)` and an even long cycle.
    pub fn alternating(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArg("alternating group on 0 points".into()));
        }
        let mut gens = Vec::new();
        if n >= 3 {
            let mut c3: Permutation = (0..n as u32).collect();
            c3[0] = 1;
            c3[1] = 2;
            c3[2] = 0;
            gens.push(c3);
            let mut long: Permutation = (0..n as u32).collect();
            if n % 2 == 1 {
                for i in 0..n {
                    long[i] = ((i + 1) % n) as u32;
                }
            } else {
                // (2 3 ... n)
                for i in 1..n {
                    long[i] = if i + 1 == n { 1 } else { (i + 1) as u32 };
                }
            }
            gens.push(long);
        }
        Self::from_generators(&format!("a{n}"), n, gens)
    }

    /// Parses `z<m>`, `s<n>` or `a<n>`.
    pub fn named(name: &str) -> Result<Self> {
        let bad = || Error::InvalidArg(format!("unknown target group {name:?}"));
        let (kind, num) = name.split_at(name.char_indices().nth(1).map_or(name.len(), |(i, _)| i));
        let n: usize = num.parse().map_err(|_| bad())?;
        match kind {
            "z" | "Z" => Self::cyclic(n),
            "s" | "S" => Self::symmetric(n),
            "a" | "A" => Self::alternating(n),
            _ => Err(bad()),
        }
    }

    /// One generator per line in 1-based cycle notation, e.g. `(1 2 3)(4 5)`.
    /// Blank lines and `#` comments are ignored; `()` is the identity.
    pub fn parse_cycles(name: &str, text: &str) -> Result<Self> {
        let mut cycle_lists: Vec<Vec<Vec<u32>>> = Vec::new();
        let mut degree = 0usize;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| Error::Parse(format!("line {}: {msg}", lineno + 1));
            let mut cycles = Vec::new();
            let mut rest = line;
            while !rest.is_empty() {
                let body = rest.strip_prefix('(').ok_or_else(|| err("expected '('"))?;
                let close = body.find(')').ok_or_else(|| err("missing ')'"))?;
                let mut pts = Vec::new();
                for tok in body[..close].split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
                    let p: u32 = tok.parse().map_err(|_| err("bad point"))?;
                    if p == 0 {
                        return Err(err("points are numbered from 1"));
                    }
                    degree = degree.max(p as usize);
                    pts.push(p - 1);
                }
                cycles.push(pts);
                rest = body[close + 1..].trim_start();
            }
            cycle_lists.push(cycles);
        }
        let mut gens = Vec::new();
        for cycles in cycle_lists {
            let mut perm: Permutation = (0..degree as u32).collect();
            let mut moved = vec![false; degree];
            for c in cycles {
                for (k, &p) in c.iter().enumerate() {
                    if std::mem::replace(&mut moved[p as usize], true) {
                        return Err(Error::Parse(format!("point {} repeated in a generator", p + 1)));
                    }
                    perm[p as usize] = c[(k + 1) % c.len()];
                }
            }
            gens.push(perm);
        }
        Self::from_generators(name, degree, gens)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    fn mul_slow(&self, a: usize, b: usize) -> usize {
        self.index[&compose(&self.elements[a], &self.elements[b])]
    }

    /// Product `a * b` (apply `a` first).
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.mul_slow(a, b),
        }
    }

    /// Order of the element with index `a`.
    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_orders() {
        assert_eq!(FiniteGroup::cyclic(5).unwrap().order(), 5);
        assert_eq!(FiniteGroup::symmetric(3).unwrap().order(), 6);
        assert_eq!(FiniteGroup::symmetric(4).unwrap().order(), 24);
        assert_eq!(FiniteGroup::symmetric(1).unwrap().order(), 1);
        assert_eq!(FiniteGroup::alternating(4).unwrap().order(), 12);
        assert_eq!(FiniteGroup::alternating(5).unwrap().order(), 60);
        assert_eq!(FiniteGroup::alternating(6).unwrap().order(), 360);
        assert_eq!(FiniteGroup::alternating(2).unwrap().order(), 1);
    }

    #[test]
    fn named_targets() {
        assert_eq!(FiniteGroup::named("z4").unwrap().order(), 4);
        assert_eq!(FiniteGroup::named("s3").unwrap().order(), 6);
        assert_eq!(FiniteGroup::named("a4").unwrap().order(), 12);
        assert!(FiniteGroup::named("q8").is_err());
        assert!(FiniteGroup::named("s").is_err());
    }

    #[test]
    fn cycle_notation() {
        let g = FiniteGroup::parse_cycles("d8", "(1 2 3 4)\n(1 3)\n").unwrap();
        assert_eq!(g.order(), 8);
        let k = FiniteGroup::parse_cycles("v4", "(1,2)(3,4)\n# comment\n(1 3)(2 4)\n").unwrap();
        assert_eq!(k.order(), 4);
        assert!(FiniteGroup::parse_cycles("x", "(1 1)\n").is_err());
        assert!(FiniteGroup::parse_cycles("x", "(0 1)\n").is_err());
        assert!(FiniteGroup::parse_cycles("x", "1 2\n").is_err());
    }

    #[test]
    fn multiplication_is_consistent() {
        let g = FiniteGroup::symmetric(4).unwrap();
        for a in 0..g.order() {
            assert_eq!(g.mul(a, g.inverse(a)), 0);
            for b in 0..g.order() {
                assert_eq!(g.mul(a, b), g.mul_slow(a, b));
            }
        }
        assert_eq!((0..g.order()).map(|a| g.element_order(a)).max(), Some(4));
    }
}
