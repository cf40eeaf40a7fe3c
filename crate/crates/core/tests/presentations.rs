use std::path::PathBuf;

use coregroups::abelian::abelianize;
use coregroups::enumeration::fingerprint;
use coregroups::groups::{arc_core, boundary_quotient, wirtinger};
use coregroups::presentation::{core_functor, free_product, split_free_factor, tietze_simplify, Presentation, Word};
use coregroups::verify::Corpus;
use coregroups::Error;

fn p(text: &str) -> Presentation {
    Presentation::parse(text).unwrap()
}

#[test]
fn text_round_trip() {
    let text = "gens: a b c\nrel: a b^-1 a b^-1\nrel: c^3\n";
    assert_eq!(p(text).to_string(), text);
    assert!(Presentation::parse("gens: a\nrel: b").is_err());
    assert!(Presentation::parse("gens: a a").is_err());
}

#[test]
fn reduction() {
    let g = p("gens: a b");
    let w = g.parse_word("a b b^-1 a^-1 b").unwrap();
    assert_eq!(g.word_to_string(&w.free_reduce()), "b");
    let c = g.parse_word("b a b^-1 a").unwrap().cyclic_reduce();
    assert_eq!(c.len(), 4);
    assert_eq!(g.parse_word("a b a^-1").unwrap().cyclic_reduce(), Word::gen(1));
}

#[test]
fn tilde_of_short_words() {
    let g = p("gens: a d");
    let (t, tp) = g.parse_word("a d").unwrap().tilde_pair().unwrap();
    assert_eq!(g.word_to_string(&t), "a d^-1");
    assert_eq!(g.word_to_string(&tp), "a^-1 d");
    assert_eq!(Word::identity().tilde_pair(), Err(Error::EmptyWord));
}

#[test]
fn core_functor_needs_even_relators() {
    assert!(matches!(core_functor(&p("gens: a b\nrel: a b a")), Err(Error::OddRelator(_))));
    // a free group's core is free of the same rank
    let f = core_functor(&p("gens: a b c")).unwrap();
    assert_eq!(abelianize(&f).to_string(), "Z^3");
}

#[test]
fn split_needs_alternating_relators() {
    let q = p("gens: a b\nrel: a b a^-1 b^-1");
    assert!(matches!(split_free_factor(&q, "a"), Err(Error::NotAlternating(_))));
    assert!(matches!(split_free_factor(&q, "z"), Err(Error::UnknownGenerator(_))));
}

fn corpus() -> Corpus {
    Corpus::load(&PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus")).unwrap()
}

#[test]
fn tietze_preserves_the_group() {
    for e in corpus().entries {
        let ac = arc_core(&e.diagram);
        let s = tietze_simplify(&ac, 1000);
        assert!(s.num_generators() <= ac.num_generators());
        assert_eq!(abelianize(&s), abelianize(&ac), "{}", e.name);
        assert_eq!(fingerprint(&s), fingerprint(&ac), "{}", e.name);
    }
}

#[test]
fn tietze_is_deterministic() {
    let q = p("gens: a b c\nrel: a b c^-1\nrel: c a c^-1 b^-1");
    assert_eq!(tietze_simplify(&q, 100), tietze_simplify(&q, 100));
}

#[test]
fn link_groups_abelianize_to_free() {
    for e in corpus().entries {
        let Ok(w) = wirtinger(&e.diagram.with_default_orientation()) else { continue };
        let mu = e.diagram.num_link_components();
        assert_eq!(abelianize(&w).to_string(), if mu == 1 { "Z".to_string() } else { format!("Z^{mu}") }, "{}", e.name);
    }
}

#[test]
fn free_products_add_up() {
    let a = p("gens: a\nrel: a^2");
    let b = p("gens: a\nrel: a^3");
    let ab = free_product(&a, &b);
    assert_eq!(ab.generators(), ["a", "a'"]);
    assert_eq!(abelianize(&ab).to_string(), "Z/6");
    // a has 4 choices with a^2 = 1 in S3, b has 3 with b^3 = 1
    assert_eq!(fingerprint(&ab)[3], 4 * 3);
}

#[test]
fn boundary_words_must_name_arcs() {
    let ac = p("gens: g1 g2\nrel: g1 g2^-1 g1 g2^-1");
    let bad = vec![vec![("g9".to_string(), 1)]];
    assert!(boundary_quotient(&ac, &bad).is_err());
    let ok = vec![vec![("g1".to_string(), 1), ("g2".to_string(), -1)]];
    assert_eq!(abelianize(&boundary_quotient(&ac, &ok).unwrap()).to_string(), "Z");
}
