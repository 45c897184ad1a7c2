//! Built-in example automorphisms used by the CLI and the test suite.

use crate::fgword::{parse_automorphism, Automorphism};

/// Rank-6 automorphism with linear, quadratic, and exponential strata:
/// `a -> a, b -> ba, c -> caa, d -> dc, x -> y, y -> xcy`.
pub fn f6() -> Automorphism {
    parse_automorphism(
        "[automorphism]\n\
         generators = a b c d x y\n\
         a -> a\n\
         b -> b a\n\
         c -> c a a\n\
         d -> d c\n\
         x -> y\n\
         y -> x c y\n\
         [inverse]\n\
         a -> a\n\
         b -> b a'\n\
         c -> c a'^2\n\
         d -> d a^2 c'\n\
         x -> y x' a^2 c'\n\
         y -> x\n",
    )
    .expect("f6 fixture parses")
}

/// Rank-4 linearly growing automorphism whose top edge maps across other
/// linear edges: `a -> a, b -> ba, c -> ca, d -> dcb'`. The image suffix
/// `cb'` is a fixed word, so `d` still grows linearly.
pub fn psi_f4() -> Automorphism {
    parse_automorphism(
        "[automorphism]\n\
         generators = a b c d\n\
         a -> a\n\
         b -> b a\n\
         c -> c a\n\
         d -> d c b'\n\
         [inverse]\n\
         a -> a\n\
         b -> b a'\n\
         c -> c a'\n\
         d -> d b c'\n",
    )
    .expect("psi_f4 fixture parses")
}

/// Rank-3 automorphism with an exponential stratum `{x, y}` and a linear
/// edge mapping across it: `a -> a x y x' y', x -> y', y -> yx`. The
/// commutator `x y x' y'` is fixed, so `a` grows linearly.
pub fn eglinear() -> Automorphism {
    parse_automorphism(
        "[automorphism]\n\
         generators = a x y\n\
         a -> a x y x' y'\n\
         x -> y'\n\
         y -> y x\n\
         [inverse]\n\
         a -> a y x y' x'\n\
         x -> x y\n\
         y -> x'\n",
    )
    .expect("eglinear fixture parses")
}

/// Looks up a fixture automorphism by CLI name.
pub fn by_name(name: &str) -> Option<Automorphism> {
    match name {
        "f6" => Some(f6()),
        "psi_f4" | "linearsubtlety" => Some(psi_f4()),
        "eglinear" => Some(eglinear()),
        _ => None,
    }
}

pub const FIXTURE_NAMES: &[&str] = &["f6", "psi_f4", "eglinear"];
