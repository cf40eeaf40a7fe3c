use coregroups::abelian::{abelianize, smith_normal_form, AbelianGroup, IntMatrix};
use coregroups::presentation::Presentation;
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|j| {
                let minor: Vec<Vec<i64>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &v)| v).collect())
                    .collect();
                let sign = if j % 2 == 0 { 1 } else { -1 };
                sign * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors from determinantal divisors: d_k is the gcd of all
/// k-by-k minors and the k-th factor is d_k / d_(k-1).
fn factors_by_minors(m: &[Vec<i64>], cols: usize) -> Vec<i64> {
    let rows = m.len();
    let mut out = Vec::new();
    let mut prev = 1i64;
    for k in 1..=rows.min(cols) {
        let mut g = 0i64;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<i64>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c]).collect()).collect();
                g = g.gcd(&det(&sub));
            }
        }
        if g == 0 {
            break;
        }
        out.push(g / prev);
        prev = g;
    }
    out
}

fn snf_factors(m: &[Vec<i64>]) -> Vec<i64> {
    let (f, rank) = smith_normal_form(&IntMatrix::from_rows(m));
    assert_eq!(f.len(), rank);
    f.iter().map(|d| i64::try_from(d.clone()).unwrap()).collect()
}

#[test]
fn snf_matches_minor_gcds() {
    let cases: Vec<Vec<Vec<i64>>> = vec![
        vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]],
        vec![vec![6, 0], vec![0, 4]],
        vec![vec![1, 2, 3], vec![4, 5, 6], vec![7, 8, 9]],
        vec![vec![0, 0], vec![0, 0]],
        vec![vec![3, -1, -1, -1], vec![-1, 3, -1, -1], vec![-1, -1, 3, -1]],
        vec![vec![12], vec![18]],
    ];
    for m in cases {
        let cols = m[0].len();
        assert_eq!(snf_factors(&m), factors_by_minors(&m, cols), "{m:?}");
    }
}

#[test]
fn textbook_cokernel() {
    // the classic example with invariant factors 2, 6, 12
    let m = IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
    let a = AbelianGroup::cokernel(&m);
    assert_eq!(a.free_rank, 0);
    assert_eq!(a.divisors, vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
    assert_eq!(a.to_string(), "Z/2 + Z/6 + Z/12");
}

#[test]
fn group_text_round_trip() {
    for text in ["0", "Z", "Z^3", "Z/2", "Z + Z/3 + Z/3", "Z^2 + Z/2 + Z/6"] {
        assert_eq!(AbelianGroup::parse(text).unwrap().to_string(), text);
    }
    assert_eq!(AbelianGroup::from_cyclic(&[2, 3]).to_string(), "Z/6");
    assert_eq!(AbelianGroup::from_cyclic(&[4, 6, 0]).to_string(), "Z + Z/2 + Z/12");
}

#[test]
fn abelianized_presentations() {
    let p = Presentation::parse("gens: a b\nrel: a b a b^-1 a^-1 b^-1\nrel: a a b^-1 b^-1").unwrap();
    assert_eq!(abelianize(&p).to_string(), "Z");
    let q = Presentation::parse("gens: x y z\nrel: x^4 y^-6").unwrap();
    assert_eq!(abelianize(&q).to_string(), "Z^2 + Z/2");
}

fn elementary(n: usize, i: usize, j: usize, k: i64) -> Vec<Vec<i64>> {
    let mut e: Vec<Vec<i64>> = (0..n).map(|r| (0..n).map(|c| i64::from(r == c)).collect()).collect();
    if i != j {
        e[i][j] = k;
    }
    e
}

fn mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let inner = b.len();
    a.iter().map(|r| (0..b[0].len()).map(|c| (0..inner).map(|t| r[t] * b[t][c]).sum()).collect()).collect()
}

proptest! {
    #[test]
    fn invariant_under_unimodular_change(
        m in prop::collection::vec(prop::collection::vec(-6i64..=6, 3), 3),
        ops in prop::collection::vec((0usize..3, 0usize..3, -2i64..=2, any::<bool>()), 0..6),
    ) {
        let before = AbelianGroup::cokernel(&IntMatrix::from_rows(&m));
        let mut t = m.clone();
        for (i, j, k, left) in ops {
            let e = elementary(3, i, j, k);
            t = if left { mul(&e, &t) } else { mul(&t, &e) };
        }
        prop_assert_eq!(AbelianGroup::cokernel(&IntMatrix::from_rows(&t)), before);
    }

    #[test]
    fn snf_agrees_with_minors(m in prop::collection::vec(prop::collection::vec(-5i64..=5, 3), 2..4)) {
        prop_assert_eq!(snf_factors(&m), factors_by_minors(&m, 3));
    }
}
