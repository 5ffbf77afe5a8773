use std::fmt;

use super::{expand, hall_basis, parse_word, Word};
use crate::{Error, Result};

/// A finite presentation `<x_1, ..., x_n | r_1, ..., r_m>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    n: usize,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(n: usize, relators: Vec<Word>) -> Result<Self> {
        for r in &relators {
            if r.rank_hint() > n {
                return Err(Error::GeneratorOutOfRange { generator: r.rank_hint(), n });
            }
        }
        Ok(Presentation { n, relators })
    }

    /// A presentation whose relators all lie in `[F, F]`.
    pub fn commutator_relators(n: usize, relators: Vec<Word>) -> Result<Self> {
        let pres = Self::new(n, relators)?;
        pres.check_commutator_relators()?;
        Ok(pres)
    }

    pub fn free(n: usize) -> Self {
        Presentation { n, relators: Vec::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn check_commutator_relators(&self) -> Result<()> {
        for (k, r) in self.relators.iter().enumerate() {
            if let Some(g) = (0..self.n).find(|&g| r.exponent_sum(g) != 0) {
                return Err(Error::NotCommutator { index: k + 1, generator: g + 1 });
            }
        }
        Ok(())
    }

    pub fn is_commutator_relators(&self) -> bool {
        self.check_commutator_relators().is_ok()
    }

    /// Parses `n <count>` followed by one relator word per line; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Self> {
        let mut n = None;
        let mut relators = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            if n.is_none() {
                let count = parse_header(line).ok_or_else(|| Error::parse(line_no, "expected `n <count>` header"))?;
                n = Some(count);
                continue;
            }
            let w = parse_word(line).map_err(|e| match e {
                Error::Parse { msg, .. } => Error::parse(line_no, msg),
                other => other,
            })?;
            relators.push(w);
        }
        let n = n.ok_or_else(|| Error::parse(1, "empty presentation"))?;
        Self::new(n, relators)
    }
}

pub(crate) fn parse_header(line: &str) -> Option<usize> {
    let mut it = line.split_whitespace();
    (it.next()? == "n").then_some(())?;
    let v = it.next()?.parse().ok()?;
    it.next().is_none().then_some(v)
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.n)?;
        for r in &self.relators {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

/// Presentation of `G/G_q`: the original relators followed by the expanded
/// basic commutators of length `q`.
///
/// Untruncated relators present the same quotient as their truncations mod
/// `F_q`, so no collection is needed.
pub fn nilpotent_presentation(g: &Presentation, q: usize) -> Presentation {
    assert!(q >= 2, "nilpotent quotient stage must be at least 2");
    let mut relators = g.relators.clone();
    relators.extend(hall_basis(g.n, q).iter().map(expand));
    Presentation { n: g.n, relators }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_group_stage_three() {
        let p = nilpotent_presentation(&Presentation::free(2), 3);
        assert_eq!(p.relators().len(), 2);
        assert_eq!(p.relators()[0], parse_word("[x1,[x1,x2]]").unwrap());
        assert_eq!(p.relators()[1], parse_word("[x2,[x1,x2]]").unwrap());
        let p4 = nilpotent_presentation(&Presentation::free(4), 3);
        assert_eq!(p4.relators().len(), 20);
    }

    #[test]
    fn keeps_original_relators() {
        let g = Presentation::commutator_relators(2, vec![parse_word("[x1,x2]").unwrap()]).unwrap();
        let p = nilpotent_presentation(&g, 3);
        assert_eq!(p.relators().len(), 3);
        assert_eq!(p.relators()[0], g.relators()[0]);
    }

    #[test]
    fn rejects_non_commutators() {
        let err = Presentation::commutator_relators(2, vec![parse_word("x1 x2").unwrap()]).unwrap_err();
        assert!(matches!(err, Error::NotCommutator { index: 1, generator: 1 }));
        assert!(Presentation::new(2, vec![parse_word("x3").unwrap()]).is_err());
    }

    #[test]
    fn parse_file() {
        let text = "# Hopf link\nn 2\n[x1 x2, x1]\n\n";
        let p = Presentation::parse(text).unwrap();
        assert_eq!(p.n(), 2);
        assert_eq!(p.relators().len(), 1);
        assert!(p.is_commutator_relators());
        let err = Presentation::parse("n 2\nx1 [x2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(Presentation::parse("x1\n").is_err());
    }
}
