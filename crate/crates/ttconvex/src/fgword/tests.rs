use super::*;
use crate::fixtures;
use proptest::prelude::*;

/// Independent oracle: naive letter-vector substitution and reduction,
/// sharing no code with the RLE implementation.
mod oracle {
    use crate::rle::Letter;

    pub fn reduce(letters: &[Letter]) -> Vec<Letter> {
        let mut out: Vec<Letter> = Vec::new();
        for &l in letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        out
    }

    pub fn apply(images: &[Vec<Letter>], w: &[Letter]) -> Vec<Letter> {
        let mut raw = Vec::new();
        for &l in w {
            let img = &images[l.sym() as usize];
            if l.is_positive() {
                raw.extend_from_slice(img);
            } else {
                raw.extend(img.iter().rev().map(|x| x.inverse()));
            }
        }
        reduce(&raw)
    }

    pub fn iterate(images: &[Vec<Letter>], w: &[Letter], k: u32) -> Vec<Letter> {
        let mut cur = reduce(w);
        for _ in 0..k {
            cur = apply(images, &cur);
        }
        cur
    }
}

fn letter_images(phi: &Automorphism) -> Vec<Vec<crate::rle::Letter>> {
    phi.images().iter().map(|w| w.letters().collect()).collect()
}

fn lim() -> ResourceLimits {
    ResourceLimits::default()
}

#[test]
fn reduce_examples() {
    let a = Alphabet::new(&["a", "b", "c"]).unwrap();
    assert_eq!(a.parse_word("a a' b").unwrap().display(&a), "b");
    assert_eq!(a.parse_word("").unwrap().len(), 0);
    assert_eq!(a.parse_word("b a a' b' c").unwrap().display(&a), "c");
    assert!(matches!(
        a.parse_word("a z").unwrap_err(),
        WordError::UnknownSymbol(s) if s == "z"
    ));
}

#[test]
fn cyclic_reduce_examples() {
    let a = Alphabet::new(&["a", "b", "c"]).unwrap();
    let (core, conj) = a.parse_word("a b a'").unwrap().cyclic_reduce();
    assert_eq!(core.display(&a), "b");
    assert_eq!(conj.display(&a), "a");

    let (core, conj) = a.parse_word("b").unwrap().cyclic_reduce();
    assert_eq!(core.display(&a), "b");
    assert!(conj.is_empty());

    let (core, conj) = a.parse_word("a b c b' a'").unwrap().cyclic_reduce();
    assert_eq!(core.display(&a), "c");
    assert_eq!(conj.display(&a), "a b");
}

#[test]
fn cyclic_words_are_rotation_invariant() {
    let a = Alphabet::new(&["a", "b"]).unwrap();
    let u = CyclicWord::of(&a.parse_word("a a b a b").unwrap());
    let v = CyclicWord::of(&a.parse_word("b a b a a").unwrap());
    assert_eq!(u, v);
    assert_eq!(u.len(), 5);
}

#[test]
fn apply_f6_examples() {
    let phi = fixtures::f6();
    let a = phi.alphabet().clone();
    let d = a.parse_word("d").unwrap();
    assert_eq!(phi.apply(&d, &lim()).unwrap().display(&a), "d c");
    // b a^m b' is fixed for every m
    for m in -5i64..=5 {
        if m == 0 {
            continue;
        }
        let w = a.parse_word(&format!("b a^{m} b'")).unwrap();
        assert_eq!(phi.apply(&w, &lim()).unwrap(), w, "m = {m}");
    }
    let id = Automorphism::identity(a.clone());
    let w = a.parse_word("x c' b a a").unwrap();
    assert_eq!(id.apply(&w, &lim()).unwrap(), w);
}

#[test]
fn iterate_matches_substitution_oracle() {
    let phi = fixtures::f6();
    let a = phi.alphabet().clone();
    let images = letter_images(&phi);
    let d = a.parse_word("d").unwrap();
    let got = phi.iterate(&d, 3, &lim()).unwrap();
    assert_eq!(got.display(&a), "d c^2 a^2 c a^4");
    assert_eq!(got.len(), 10);
    let expect = oracle::iterate(&images, &d.letters().collect::<Vec<_>>(), 3);
    assert_eq!(got.letters().collect::<Vec<_>>(), expect);

    // |phi^k(d)| = k^2 + 1
    for k in 0..=8u32 {
        let w = phi.iterate(&d, k as i64, &lim()).unwrap();
        assert_eq!(w.len(), (k as u64) * (k as u64) + 1, "k = {k}");
        let ol = oracle::iterate(&images, &d.letters().collect::<Vec<_>>(), k);
        assert_eq!(w.len() as usize, ol.len());
    }
}

#[test]
fn iterate_eglinear_commutator_is_inert() {
    let phi = fixtures::eglinear();
    let a = phi.alphabet().clone();
    let comm = a.parse_word("x y x' y'").unwrap();
    assert_eq!(phi.apply(&comm, &lim()).unwrap(), comm);
    let g = a.parse_word("a").unwrap();
    for k in 1..=5u32 {
        let w = phi.iterate(&g, k as i64, &lim()).unwrap();
        assert_eq!(w.len(), 1 + 4 * k as u64, "k = {k}");
    }
}

#[test]
fn orbit_lengths_smoothex() {
    let phi = fixtures::f6();
    let a = phi.alphabet().clone();
    let w = a.parse_word("b a").unwrap();
    assert_eq!(
        phi.orbit_lengths(&w, 4, OrbitMode::Word, &lim()).unwrap(),
        vec![2, 3, 4, 5, 6]
    );
    let w = a.parse_word("b a'^3").unwrap();
    assert_eq!(
        phi.orbit_lengths(&w, 3, OrbitMode::Word, &lim()).unwrap(),
        vec![4, 3, 2, 1]
    );
    let id = Automorphism::identity(a.clone());
    let w = a.parse_word("c b' a").unwrap();
    assert_eq!(
        id.orbit_lengths(&w, 6, OrbitMode::Word, &lim()).unwrap(),
        vec![3; 7]
    );
}

#[test]
fn negative_iteration_and_round_trip() {
    let phi = fixtures::f6();
    let a = phi.alphabet().clone();
    let w = a.parse_word("x c").unwrap();
    let back = phi.iterate(&w, -5, &lim()).unwrap();
    assert_eq!(phi.iterate(&back, 5, &lim()).unwrap(), w);

    let no_inv = Automorphism::new(a.clone(), phi.images().to_vec(), None).unwrap();
    assert!(matches!(
        no_inv.iterate(&w, -1, &lim()),
        Err(WordError::MissingInverse)
    ));
}

#[test]
fn stabilize_adds_fixed_generator() {
    let phi = fixtures::f6();
    let (psi, fresh) = phi.stabilize(None).unwrap();
    assert_eq!(psi.rank(), 7);
    // "a" is taken, so an automatic rename happens
    assert_eq!(psi.alphabet().name(fresh), "a0");
    let fixed = psi.alphabet().parse_word("a0").unwrap();
    assert_eq!(psi.apply(&fixed, &lim()).unwrap(), fixed);

    // ||psi^i(fresh . w)|| = |phi^i(w)| + 1
    let a = phi.alphabet().clone();
    for text in ["d", "b a'^3", "x c", ""] {
        let w = a.parse_word(text).unwrap();
        let aw = fixed.concat(&psi.alphabet().parse_word(text).unwrap());
        for i in 0..=4i64 {
            let word_len = phi.iterate(&w, i, &lim()).unwrap().len();
            let cyc_len = psi.iterate(&aw, i, &lim()).unwrap().cyclic_reduce().0.len();
            assert_eq!(cyc_len, word_len + 1, "w = {text:?}, i = {i}");
        }
    }
    // explicit fresh-name collision is an error
    assert!(phi.stabilize(Some("d")).is_err());

    // spec example: i = 3 on w = d gives 10 + 1
    let aw = fixed.concat(&psi.alphabet().parse_word("d").unwrap());
    assert_eq!(psi.iterate(&aw, 3, &lim()).unwrap().cyclic_reduce().0.len(), 11);
}

#[test]
fn resource_limits_are_enforced() {
    let phi = fixtures::f6();
    let a = phi.alphabet().clone();
    let y = a.parse_word("y").unwrap();
    let tiny = ResourceLimits::new(50, 64);
    let err = phi.iterate(&y, 20, &tiny).unwrap_err();
    assert!(matches!(err, WordError::ResourceLimit { .. }));
    let err = phi.iterate(&y, 100, &lim()).unwrap_err();
    assert!(matches!(err, WordError::IterationLimit(100, 64)));
}

#[test]
fn parse_round_trip_and_errors() {
    let phi = fixtures::f6();
    let text = write_automorphism(&phi);
    let again = parse_automorphism(&text).unwrap();
    assert_eq!(again.images(), phi.images());
    assert_eq!(again.alphabet(), phi.alphabet());

    let bad = "[automorphism]\ngenerators = a b\na -> a\nb -> q\n";
    assert!(parse_automorphism(bad).is_err());
    let bad = "[automorphism]\ngenerators = a b\na -> a\n";
    assert!(matches!(
        parse_automorphism(bad).unwrap_err(),
        WordError::Parse { .. }
    ));
    // a wrong inverse is rejected by composition checking
    let bad = "[automorphism]\ngenerators = a b\na -> a\nb -> b a\n[inverse]\na -> a\nb -> b\n";
    assert!(matches!(
        parse_automorphism(bad).unwrap_err(),
        WordError::BadInverse(_)
    ));
}

fn arb_word(rank: u32, max_len: usize) -> impl Strategy<Value = ReducedWord> {
    prop::collection::vec((0..rank, prop::bool::ANY), 0..max_len)
        .prop_map(|ls| ReducedWord::reduce(ls.into_iter().map(|(s, p)| crate::rle::Letter::new(s, p))))
}

proptest! {
    #[test]
    fn apply_is_a_homomorphism(u in arb_word(6, 12), v in arb_word(6, 12)) {
        let phi = fixtures::f6();
        let fu = phi.apply(&u, &lim()).unwrap();
        let fv = phi.apply(&v, &lim()).unwrap();
        let fuv = phi.apply(&u.concat(&v), &lim()).unwrap();
        prop_assert_eq!(fuv, fu.concat(&fv));
        let finv = phi.apply(&u.inverse(), &lim()).unwrap();
        prop_assert_eq!(finv, fu.inverse());
        // triangle control on lengths
        let (lu, lv) = (fu.len() as i64, fv.len() as i64);
        let luv = phi.apply(&u.concat(&v), &lim()).unwrap().len() as i64;
        prop_assert!((luv - lu - lv).abs() <= 2 * lu.min(lv));
    }

    #[test]
    fn apply_matches_oracle(w in arb_word(6, 16), k in 0u32..4) {
        let phi = fixtures::f6();
        let images = letter_images(&phi);
        let got = phi.iterate(&w, k as i64, &lim()).unwrap();
        let expect = oracle::iterate(&images, &w.letters().collect::<Vec<_>>(), k);
        prop_assert_eq!(got.letters().collect::<Vec<_>>(), expect);
    }

    #[test]
    fn inverse_round_trip(w in arb_word(6, 8), k in 0i64..=6) {
        let phi = fixtures::f6();
        let fwd = phi.iterate(&w, k, &lim()).unwrap();
        prop_assert_eq!(phi.iterate(&fwd, -k, &lim()).unwrap(), w);
    }

    #[test]
    fn cyclic_orbit_is_conjugation_invariant(w in arb_word(6, 8), c in arb_word(6, 5), n in 0u32..5) {
        let phi = fixtures::f6();
        let conj = c.concat(&w).concat(&c.inverse());
        let a = phi.orbit_lengths(&w, n, OrbitMode::Cyclic, &lim()).unwrap();
        let b = phi.orbit_lengths(&conj, n, OrbitMode::Cyclic, &lim()).unwrap();
        prop_assert_eq!(a, b);
    }
}
