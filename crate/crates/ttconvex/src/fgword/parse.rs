//! Line-oriented text format for automorphisms.
//!
//! ```text
//! # free group automorphism
//! [automorphism]
//! generators = a b c
//! a -> a
//! b -> b a
//! c -> c a^2
//! [inverse]
//! a -> a
//! b -> b a'
//! c -> c a'^2
//! ```
//!
//! Tokens are whitespace separated; a trailing `'` denotes the inverse
//! generator and `^k` an exponent. `#` starts a comment.

use super::{parse_err, Alphabet, Automorphism, ReducedWord, WordError};

#[derive(PartialEq, Clone, Copy)]
enum Section {
    None,
    Automorphism,
    Inverse,
}

pub fn parse_automorphism(text: &str) -> Result<Automorphism, WordError> {
    let mut section = Section::None;
    let mut alphabet: Option<Alphabet> = None;
    let mut images: Vec<Option<ReducedWord>> = Vec::new();
    let mut inverse: Vec<Option<ReducedWord>> = Vec::new();
    let mut saw_inverse = false;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let at = |msg: String| parse_err(format!("line {lineno}"), msg);
        match line {
            "[automorphism]" => {
                section = Section::Automorphism;
                continue;
            }
            "[inverse]" => {
                if alphabet.is_none() {
                    return Err(at("[inverse] section before [automorphism]".into()));
                }
                section = Section::Inverse;
                saw_inverse = true;
                continue;
            }
            _ if line.starts_with('[') => {
                return Err(at(format!("unknown section `{line}`")));
            }
            _ => {}
        }
        match section {
            Section::None => {
                return Err(at("content before the [automorphism] section".into()));
            }
            Section::Automorphism => {
                if let Some(rest) = line.strip_prefix("generators") {
                    let rest = rest.trim_start();
                    let Some(list) = rest.strip_prefix('=') else {
                        return Err(at("expected `generators = ...`".into()));
                    };
                    if alphabet.is_some() {
                        return Err(at("duplicate `generators` line".into()));
                    }
                    let names: Vec<&str> = list.split_whitespace().collect();
                    let a = Alphabet::new(&names)
                        .map_err(|e| at(format!("bad generator list: {e}")))?;
                    images = vec![None; a.rank()];
                    inverse = vec![None; a.rank()];
                    alphabet = Some(a);
                } else {
                    let a = alphabet
                        .as_ref()
                        .ok_or_else(|| at("image line before `generators = ...`".into()))?;
                    let (sym, w) = parse_image_line(a, line, lineno)?;
                    if images[sym as usize].is_some() {
                        return Err(at(format!("duplicate image for `{}`", a.name(sym))));
                    }
                    images[sym as usize] = Some(w);
                }
            }
            Section::Inverse => {
                let a = alphabet.as_ref().unwrap();
                let (sym, w) = parse_image_line(a, line, lineno)?;
                if inverse[sym as usize].is_some() {
                    return Err(at(format!("duplicate inverse image for `{}`", a.name(sym))));
                }
                inverse[sym as usize] = Some(w);
            }
        }
    }

    let alphabet = alphabet
        .ok_or_else(|| parse_err("[automorphism]", "missing `generators = ...` line"))?;
    let mut imgs = Vec::with_capacity(alphabet.rank());
    for (i, im) in images.into_iter().enumerate() {
        imgs.push(im.ok_or_else(|| {
            parse_err(
                "[automorphism]",
                format!("missing image for generator `{}`", alphabet.name(i as u32)),
            )
        })?);
    }
    let inv = if saw_inverse {
        let mut out = Vec::with_capacity(alphabet.rank());
        for (i, im) in inverse.into_iter().enumerate() {
            out.push(im.ok_or_else(|| {
                parse_err(
                    "[inverse]",
                    format!(
                        "missing inverse image for generator `{}`",
                        alphabet.name(i as u32)
                    ),
                )
            })?);
        }
        Some(out)
    } else {
        None
    };
    Automorphism::new(alphabet, imgs, inv)
}

fn parse_image_line(
    alphabet: &Alphabet,
    line: &str,
    lineno: usize,
) -> Result<(u32, ReducedWord), WordError> {
    let Some((lhs, rhs)) = line.split_once("->") else {
        return Err(parse_err(
            format!("line {lineno}"),
            format!("expected `gen -> image`, got `{line}`"),
        ));
    };
    let name = lhs.trim();
    let sym = alphabet
        .lookup(name)
        .ok_or_else(|| WordError::UnknownSymbol(name.to_string()))?;
    let w = alphabet.parse_word(rhs).map_err(|e| {
        parse_err(format!("line {lineno}"), format!("bad image for `{name}`: {e}"))
    })?;
    Ok((sym, w))
}

pub fn write_automorphism(phi: &Automorphism) -> String {
    let a = phi.alphabet();
    let mut out = String::from("[automorphism]\n");
    out.push_str("generators =");
    for n in a.names() {
        out.push(' ');
        out.push_str(n);
    }
    out.push('\n');
    for sym in 0..a.rank() as u32 {
        out.push_str(&format!("{} -> {}\n", a.name(sym), phi.image(sym).display(a)));
    }
    if let Some(inv) = phi.inverse_images() {
        out.push_str("[inverse]\n");
        for sym in 0..a.rank() as u32 {
            out.push_str(&format!("{} -> {}\n", a.name(sym), inv[sym as usize].display(a)));
        }
    }
    out
}
