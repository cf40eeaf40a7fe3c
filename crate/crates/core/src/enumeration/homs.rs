use super::FiniteGroup;
use crate::presentation::{Presentation, Word};

/// Targets of the standard fingerprint vector.
pub const FINGERPRINT_TARGETS: [&str; 5] = ["z2", "z3", "z4", "s3", "a4"];

/// Hom counts into the standard targets, in [`FINGERPRINT_TARGETS`] order.
pub type Fingerprint = Vec<u128>;

/// Number of generator assignments into `t` that satisfy every relator.
///
/// Backtracking over generators in a greedy order chosen so that relators
/// become fully assigned (and hence checkable) as early as possible.
/// Generators mentioned by no relator contribute a factor `|t|` each.
pub fn count_homomorphisms(p: &Presentation, t: &FiniteGroup) -> u128 {
    let rels: Vec<&Word> = p.relators().iter().filter(|r| !r.is_empty()).collect();
    let n = p.num_generators();
    let used: Vec<bool> = (0..n).map(|g| rels.iter().any(|r| r.mentions(g))).collect();
    let free = used.iter().filter(|&&u| !u).count();

    // greedy generator order
    let mut order: Vec<usize> = Vec::new();
    let mut placed = vec![false; n];
    while order.len() + free < n {
        let best = (0..n)
            .filter(|&g| used[g] && !placed[g])
            .max_by_key(|&g| {
                let completes = rels
                    .iter()
                    .filter(|r| r.mentions(g) && r.letters().iter().all(|l| l.gen == g || placed[l.gen]))
                    .count();
                let touches: usize = rels.iter().map(|r| r.occurrences(g)).sum();
                (completes, touches, std::cmp::Reverse(g))
            })
            .unwrap();
        placed[best] = true;
        order.push(best);
    }
    let mut position = vec![usize::MAX; n];
    for (i, &g) in order.iter().enumerate() {
        position[g] = i;
    }
    // relators checked once their last generator (in search order) is set
    let mut checks: Vec<Vec<&Word>> = vec![Vec::new(); order.len()];
    for r in &rels {
        let last = r.letters().iter().map(|l| position[l.gen]).max().unwrap();
        checks[last].push(r);
    }

    let mut images = vec![0usize; n];
    let base = search(t, &order, &checks, 0, &mut images);
    let mut total = base;
    for _ in 0..free {
        total *= t.order() as u128;
    }
    total
}

fn evaluate(t: &FiniteGroup, w: &Word, images: &[usize]) -> usize {
    w.letters().iter().fold(t.identity(), |acc, l| {
        let x = images[l.gen];
        t.mul(acc, if l.inverse { t.inverse(x) } else { x })
    })
}

fn search(t: &FiniteGroup, order: &[usize], checks: &[Vec<&Word>], depth: usize, images: &mut [usize]) -> u128 {
    if depth == order.len() {
        return 1;
    }
    let g = order[depth];
    let mut count = 0;
    for x in 0..t.order() {
        images[g] = x;
        if checks[depth].iter().all(|r| evaluate(t, r, images) == t.identity()) {
            count += search(t, order, checks, depth + 1, images);
        }
    }
    count
}

/// Hom counts into each of the standard fingerprint targets.
pub fn fingerprint(p: &Presentation) -> Fingerprint {
    FINGERPRINT_TARGETS
        .iter()
        .map(|name| count_homomorphisms(p, &FiniteGroup::named(name).expect("standard target")))
        .collect()
}
