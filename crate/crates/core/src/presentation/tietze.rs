use std::collections::BTreeSet;

use super::{Letter, Presentation, Word};

/// Best-effort simplification by Tietze transformations.
///
/// Rounds apply, in order of preference: reduction and removal of trivial or
/// duplicate relators, elimination of a generator occurring exactly once in a
/// relator (shortest relator first, highest generator first), merging of
/// single-generator power relators by gcd, and replacing more than half of a
/// relator occurring inside another relator by the shorter complement. At most
/// `effort` rounds are run. The result presents an isomorphic group.
pub fn tietze_simplify(p: &Presentation, effort: usize) -> Presentation {
    let mut alive = vec![true; p.num_generators()];
    let mut rels: Vec<Word> = p.relators().to_vec();
    normalize(&mut rels);
    for _ in 0..effort {
        if eliminate_one(&mut rels, &mut alive) || merge_powers(&mut rels) || rewrite_one(&mut rels) {
            normalize(&mut rels);
            continue;
        }
        break;
    }
    compact(p, &alive, &rels)
}

fn normalize(rels: &mut Vec<Word>) {
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(rels.len());
    for r in rels.iter() {
        let r = r.cyclic_reduce();
        if !r.is_empty() && seen.insert(r.canonical_relator()) {
            out.push(r);
        }
    }
    *rels = out;
}

fn eliminate_one(rels: &mut Vec<Word>, alive: &mut [bool]) -> bool {
    let mut order: Vec<usize> = (0..rels.len()).collect();
    order.sort_by_key(|&i| (rels[i].len(), i));
    for i in order {
        let r = &rels[i];
        let mut gens: Vec<usize> = r.letters().iter().map(|l| l.gen).collect();
        gens.sort_unstable();
        gens.dedup();
        let Some(g) = gens.into_iter().rev().find(|&g| r.occurrences(g) == 1) else {
            continue;
        };
        let pos = r.letters().iter().position(|l| l.gen == g).unwrap();
        let rotated = r.rotate(pos);
        let rest = Word::new(rotated.letters()[1..].to_vec());
        // g^e rest = 1
        let image = if rotated.letters()[0].inverse { rest } else { rest.inverse() };
        let r_idx = i;
        let mut next = Vec::with_capacity(rels.len() - 1);
        for (j, q) in rels.iter().enumerate() {
            if j == r_idx {
                continue;
            }
            next.push(q.substitute(&|x| if x == g { image.clone() } else { Word::gen(x) }));
        }
        *rels = next;
        alive[g] = false;
        return true;
    }
    false
}

fn single_gen_power(r: &Word) -> Option<(usize, i64)> {
    let g = r.letters().first()?.gen;
    r.letters().iter().all(|l| l.gen == g).then(|| (g, r.exponent_sum(g)))
}

fn merge_powers(rels: &mut [Word]) -> bool {
    for i in 0..rels.len() {
        let Some((g, a)) = single_gen_power(&rels[i]) else { continue };
        for j in i + 1..rels.len() {
            let Some((h, b)) = single_gen_power(&rels[j]) else { continue };
            if g != h {
                continue;
            }
            let d = num_integer::gcd(a, b);
            if d == a.abs() && d == b.abs() {
                continue;
            }
            rels[i] = Word::from_powers(&[(g, d as i32)]);
            rels[j] = Word::identity();
            return true;
        }
    }
    false
}

fn cyclic_segment_matches(r: &[Letter], start: usize, piece: &[Letter]) -> bool {
    let n = r.len();
    piece.iter().enumerate().all(|(k, l)| r[(start + k) % n] == *l)
}

fn rewrite_one(rels: &mut [Word]) -> bool {
    for i in 0..rels.len() {
        for j in 0..rels.len() {
            if i == j || rels[j].is_empty() {
                continue;
            }
            let r = rels[i].letters().to_vec();
            let n = r.len();
            let q = &rels[j];
            let l = q.len();
            let inv = q.inverse();
            for t in (l / 2 + 1..=l.min(n)).rev() {
                for c in (0..l).flat_map(|k| [q.rotate(k), inv.rotate(k)]) {
                    let (prefix, suffix) = c.letters().split_at(t);
                    for start in 0..n {
                        if cyclic_segment_matches(&r, start, prefix) {
                            let rotated = Word::new(r.clone()).rotate(start);
                            let tail = Word::new(rotated.letters()[t..].to_vec());
                            let replaced = Word::new(suffix.to_vec()).inverse().concat(&tail).cyclic_reduce();
                            if replaced.len() < n {
                                rels[i] = replaced;
                                return true;
                            }
                        }
                    }
                }
            }
        }
    }
    false
}

fn compact(p: &Presentation, alive: &[bool], rels: &[Word]) -> Presentation {
    let mut index = vec![usize::MAX; alive.len()];
    let mut names = Vec::new();
    for (g, &keep) in alive.iter().enumerate() {
        if keep {
            index[g] = names.len();
            names.push(p.generators()[g].clone());
        }
    }
    let relators = rels.iter().map(|r| r.map_gens(|g| index[g])).collect();
    Presentation::new(names, relators).expect("compacted presentation is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(text: &str) -> Presentation {
        Presentation::parse(text).unwrap()
    }

    #[test]
    fn eliminates_single_occurrence() {
        let q = tietze_simplify(&pres("gens: a b\nrel: a b^-1\n"), 100);
        assert_eq!(q, pres("gens: a\n"));
    }

    #[test]
    fn drops_trivial_relator() {
        let p = pres("gens: a b\nrel: a b^-1 a b^-1 a b^-1\nrel: a a^-1\n");
        assert_eq!(tietze_simplify(&p, 100), pres("gens: a b\nrel: a b^-1 a b^-1 a b^-1\n"));
    }

    #[test]
    fn merges_powers_by_gcd() {
        let p = pres("gens: a\nrel: a^4\nrel: a^6\n");
        assert_eq!(tietze_simplify(&p, 100), pres("gens: a\nrel: a^2\n"));
    }

    #[test]
    fn rewrites_long_relator() {
        let p = pres("gens: a b\nrel: a b a b a b\nrel: b a b a b a b a b^-1\n");
        let q = tietze_simplify(&p, 100);
        assert!(q.relators().iter().map(Word::len).sum::<usize>() < 15, "{q}");
    }

    #[test]
    fn zero_effort_only_normalizes() {
        let p = pres("gens: a b\nrel: a b^-1\nrel: 1\n");
        assert_eq!(tietze_simplify(&p, 0), pres("gens: a b\nrel: a b^-1\n"));
    }
}
