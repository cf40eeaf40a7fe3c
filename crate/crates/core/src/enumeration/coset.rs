use crate::presentation::{Presentation, Word};

/// Default bound on the number of cosets defined during an enumeration.
pub const DEFAULT_MAX_COSETS: usize = 100_000;

const UNDEF: usize = usize::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CosetOutcome {
    Index(usize),
    Exceeded,
}

/// A complete coset table. Column `2g` is generator `g`, column `2g + 1` its
/// inverse; cosets are numbered in order of first definition, coset 0 being
/// the subgroup itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    rows: Vec<Vec<usize>>,
}

impl CosetTable {
    pub fn index(&self) -> usize {
        self.rows.len()
    }

    pub fn act(&self, coset: usize, column: usize) -> usize {
        self.rows[coset][column]
    }

    /// Coset reached from `coset` by reading `w`.
    pub fn trace(&self, coset: usize, w: &Word) -> usize {
        w.letters().iter().fold(coset, |c, l| self.rows[c][column(l.gen, l.inverse)])
    }

    /// HLT enumeration; `None` when more than `max_cosets` cosets get defined.
    pub fn enumerate(p: &Presentation, subgroup: &[Word], max_cosets: usize) -> Option<CosetTable> {
        let mut e = Enumerator::new(2 * p.num_generators(), max_cosets);
        let rels: Vec<Vec<usize>> = p.relators().iter().filter(|r| !r.is_empty()).map(columns).collect();
        for w in subgroup.iter().filter(|w| !w.is_empty()) {
            e.scan_and_fill(0, &columns(w))?;
        }
        let mut c = 0;
        while c < e.table.len() {
            if e.live(c) {
                for r in &rels {
                    e.scan_and_fill(c, r)?;
                    if !e.live(c) {
                        break;
                    }
                }
                if e.live(c) {
                    for x in 0..e.ncols {
                        if e.table[c][x] == UNDEF {
                            e.define(c, x)?;
                        }
                    }
                }
            }
            c += 1;
        }
        Some(e.compact())
    }
}

fn column(gen: usize, inverse: bool) -> usize {
    2 * gen + usize::from(inverse)
}

fn columns(w: &Word) -> Vec<usize> {
    w.letters().iter().map(|l| column(l.gen, l.inverse)).collect()
}

#[inline]
fn inv(x: usize) -> usize {
    x ^ 1
}

struct Enumerator {
    ncols: usize,
    max: usize,
    table: Vec<Vec<usize>>,
    parent: Vec<usize>,
    queue: Vec<usize>,
}

impl Enumerator {
    fn new(ncols: usize, max: usize) -> Self {
        Enumerator { ncols, max, table: vec![vec![UNDEF; ncols]], parent: vec![0], queue: Vec::new() }
    }

    fn live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, x: usize) -> Option<()> {
        if self.table.len() >= self.max {
            return None;
        }
        let n = self.table.len();
        self.table.push(vec![UNDEF; self.ncols]);
        self.parent.push(n);
        self.table[c][x] = n;
        self.table[n][inv(x)] = c;
        Some(())
    }

    fn scan_and_fill(&mut self, c: usize, w: &[usize]) -> Option<()> {
        if w.is_empty() {
            return Some(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0isize, w.len() as isize - 1);
        loop {
            while i <= j && self.table[f][w[i as usize]] != UNDEF {
                f = self.table[f][w[i as usize]];
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Some(());
            }
            while j >= i && self.table[b][inv(w[j as usize])] != UNDEF {
                b = self.table[b][inv(w[j as usize])];
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Some(());
            }
            if i == j {
                let x = w[i as usize];
                self.table[f][x] = b;
                self.table[b][inv(x)] = f;
                return Some(());
            }
            self.define(f, w[i as usize])?;
        }
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut x = c;
        while self.parent[x] != r {
            let next = self.parent[x];
            self.parent[x] = r;
            x = next;
        }
        r
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.parent[hi] = lo;
            self.queue.push(hi);
        }
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        self.queue.clear();
        self.merge(a, b);
        let mut qi = 0;
        while qi < self.queue.len() {
            let e = self.queue[qi];
            qi += 1;
            for x in 0..self.ncols {
                let f = self.table[e][x];
                if f == UNDEF {
                    continue;
                }
                if self.table[f][inv(x)] == e {
                    self.table[f][inv(x)] = UNDEF;
                }
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                if self.table[e1][x] != UNDEF {
                    let t = self.table[e1][x];
                    self.merge(f1, t);
                } else if self.table[f1][inv(x)] != UNDEF {
                    let t = self.table[f1][inv(x)];
                    self.merge(e1, t);
                } else {
                    self.table[e1][x] = f1;
                    self.table[f1][inv(x)] = e1;
                }
            }
        }
    }

    fn compact(mut self) -> CosetTable {
        let n = self.table.len();
        let mut new_index = vec![UNDEF; n];
        let mut k = 0;
        for c in 0..n {
            if self.live(c) {
                new_index[c] = k;
                k += 1;
            }
        }
        let mut rows = Vec::with_capacity(k);
        for c in 0..n {
            if self.live(c) {
                let row = (0..self.ncols).map(|x| new_index[self.rep(self.table[c][x])]).collect();
                rows.push(row);
            }
        }
        CosetTable { rows }
    }
}

/// Index of the subgroup generated by `subgroup` (the group order when it is
/// empty), or [`CosetOutcome::Exceeded`] if the enumeration does not close
/// within `max_cosets` defined cosets.
pub fn coset_enumerate(p: &Presentation, subgroup: &[Word], max_cosets: usize) -> CosetOutcome {
    match CosetTable::enumerate(p, subgroup, max_cosets) {
        Some(t) => CosetOutcome::Index(t.index()),
        None => CosetOutcome::Exceeded,
    }
}
