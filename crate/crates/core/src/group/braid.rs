use std::fmt;

use super::{Presentation, Word};
use crate::{Error, Result};

/// An Artin generator `s_i` or its inverse (0-based `index` means `s_{index+1}`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BraidLetter {
    pub index: usize,
    pub inverse: bool,
}

impl fmt::Display for BraidLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.index + 1)?;
        if self.inverse {
            write!(f, "^-1")?;
        }
        Ok(())
    }
}

/// Parses a braid word such as `s1 s2^-1 s1^2`.
pub fn parse_braid(s: &str) -> Result<Vec<BraidLetter>> {
    let mut out = Vec::new();
    for tok in s.split(|c: char| c.is_whitespace() || c == '*').filter(|t| !t.is_empty()) {
        let body = tok
            .strip_prefix('s')
            .or_else(|| tok.strip_prefix('σ'))
            .ok_or_else(|| Error::parse(1, format!("bad braid letter `{tok}`")))?;
        let (idx, exp) = match body.split_once('^') {
            Some((i, e)) => (i, e.parse::<i64>().map_err(|_| Error::parse(1, format!("bad exponent in `{tok}`")))?),
            None => (body, 1),
        };
        let index: usize = idx.parse().map_err(|_| Error::parse(1, format!("bad braid letter `{tok}`")))?;
        if index == 0 {
            return Err(Error::parse(1, "braid generators are numbered from s1"));
        }
        for _ in 0..exp.unsigned_abs() {
            out.push(BraidLetter { index: index - 1, inverse: exp < 0 });
        }
    }
    Ok(out)
}

/// Images of the free generators under the Artin action of `braid` on `F_n`.
///
/// Letters act left to right: `s_i` sends `x_i` to `x_i x_{i+1} x_i^-1` and
/// `x_{i+1}` to `x_i`.
pub fn artin_images(braid: &[BraidLetter], n: usize) -> Result<Vec<Word>> {
    let mut img: Vec<Word> = (0..n).map(Word::generator).collect();
    for l in braid {
        let i = l.index;
        if i + 1 >= n {
            return Err(Error::GeneratorOutOfRange { generator: i + 2, n });
        }
        let (a, b) = (img[i].clone(), img[i + 1].clone());
        if l.inverse {
            img[i] = b.clone();
            img[i + 1] = b.inverse().mul(&a).mul(&b);
        } else {
            img[i] = a.mul(&b).mul(&a.inverse());
            img[i + 1] = a;
        }
    }
    Ok(img)
}

/// Strand permutation induced by a braid: entry `i` is where strand `i` ends.
pub fn strand_permutation(braid: &[BraidLetter], n: usize) -> Vec<usize> {
    let mut pos: Vec<usize> = (0..n).collect();
    for l in braid {
        for p in pos.iter_mut() {
            if *p == l.index {
                *p = l.index + 1;
            } else if *p == l.index + 1 {
                *p = l.index;
            }
        }
    }
    pos
}

/// Presentation `<x_1..x_n | beta(x_i) x_i^-1, i < n>` of the group attached
/// to a pure braid; the last relator is redundant and dropped.
pub fn braid_closure_presentation(braid: &[BraidLetter], n: usize) -> Result<Presentation> {
    let perm = strand_permutation(braid, n);
    if perm.iter().enumerate().any(|(i, &p)| i != p) {
        return Err(Error::NotPure(perm.iter().map(|p| p + 1).collect()));
    }
    let img = artin_images(braid, n)?;
    let relators = img
        .iter()
        .take(n.saturating_sub(1))
        .enumerate()
        .map(|(i, w)| w.mul(&Word::generator(i).inverse()))
        .collect();
    Presentation::commutator_relators(n, relators)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{epsilon, parse_word};

    #[test]
    fn parse_letters() {
        let b = parse_braid("s1 s2^-1 s1^2").unwrap();
        assert_eq!(b.len(), 4);
        assert_eq!(b[1], BraidLetter { index: 1, inverse: true });
        assert!(parse_braid("s0").is_err());
        assert!(parse_braid("t1").is_err());
    }

    #[test]
    fn inverse_letter_undoes_action() {
        let b = parse_braid("s1 s2 s1^-1 s2^-1 s2 s1 s2^-1 s1^-1").unwrap();
        let img = artin_images(&b, 3).unwrap();
        for (i, w) in img.iter().enumerate() {
            assert_eq!(*w, Word::generator(i));
        }
    }

    #[test]
    fn full_twist_on_two_strands() {
        let b = parse_braid("s1^2").unwrap();
        let pres = braid_closure_presentation(&b, 2).unwrap();
        assert_eq!(pres.relators().len(), 1);
        let r = &pres.relators()[0];
        assert_eq!(*r, parse_word("[x1 x2, x1]").unwrap());
        assert_eq!(epsilon(r, &[0, 1]), -1);
    }

    #[test]
    fn non_pure_rejected() {
        let b = parse_braid("s1").unwrap();
        assert!(matches!(braid_closure_presentation(&b, 2), Err(Error::NotPure(_))));
        assert!(artin_images(&b, 1).is_err());
    }
}
