//! Braid words and their text syntax: `s3`, `s3^-1`, or signed integers like `3`, `-3`.

use crate::error::Error;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    pub strands: usize,
    /// `(generator index in 1..strands, sign)`
    pub letters: Vec<(usize, i8)>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<(usize, i8)>) -> Result<BraidWord, Error> {
        if strands == 0 {
            return Err(Error::Usage("a braid needs at least one strand".into()));
        }
        for (pos, &(i, s)) in letters.iter().enumerate() {
            if i == 0 || i >= strands {
                return Err(Error::Parse { position: pos, message: format!("generator {i} needs 1 <= i < {strands}") });
            }
            if s != 1 && s != -1 {
                return Err(Error::Parse { position: pos, message: format!("sign {s} is not ±1") });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Exponent sum, which is the writhe of the closure.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&(_, s)| s as i64).sum()
    }

    pub fn mirror(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().map(|&(i, s)| (i, -s)).collect() }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|&(i, s)| (i, -s)).collect() }
    }

    /// Product `self · rhs` on the larger strand count.
    pub fn then(&self, rhs: &BraidWord) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        BraidWord { strands: self.strands.max(rhs.strands), letters }
    }

    /// Cyclic rotation by `k` letters.
    pub fn rotate(&self, k: usize) -> BraidWord {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// Markov stabilization: add a strand and the letter `σ_m^{±1}`.
    pub fn stabilize(&self, sign: i8) -> BraidWord {
        let mut letters = self.letters.clone();
        letters.push((self.strands, sign));
        BraidWord { strands: self.strands + 1, letters }
    }

    /// Shift every generator up by `k`, on `strands + k` strands.
    pub fn shifted(&self, k: usize) -> BraidWord {
        BraidWord { strands: self.strands + k, letters: self.letters.iter().map(|&(i, s)| (i + k, s)).collect() }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.letters.iter().map(|&(i, s)| if s > 0 { format!("s{i}") } else { format!("s{i}^-1") }).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Every word on `strands` strands with at most `max_len` letters, shortest first.
pub fn all_words(strands: usize, max_len: usize) -> Vec<BraidWord> {
    let gens: Vec<(usize, i8)> = (1..strands).flat_map(|i| [(i, 1i8), (i, -1i8)]).collect();
    let mut out = vec![BraidWord { strands, letters: Vec::new() }];
    let mut frontier = out.clone();
    for _ in 0..max_len {
        if gens.is_empty() {
            break;
        }
        frontier = frontier
            .iter()
            .flat_map(|w| {
                gens.iter().map(move |&g| {
                    let mut l = w.letters.clone();
                    l.push(g);
                    BraidWord { strands, letters: l }
                })
            })
            .collect();
        out.extend(frontier.iter().cloned());
    }
    out
}

fn parse_token(tok: &str, pos: usize) -> Result<(usize, i8), Error> {
    let err = |m: &str| Error::Parse { position: pos, message: format!("{m}: {tok:?}") };
    let (idx, sign) = if let Some(rest) = tok.strip_prefix('s').or_else(|| tok.strip_prefix('σ')) {
        match rest.split_once('^') {
            Some((i, "-1")) => (i, -1),
            Some((i, "1")) => (i, 1),
            Some(_) => return Err(err("only exponents 1 and -1 are allowed")),
            None => (rest, 1),
        }
    } else if let Some(rest) = tok.strip_prefix('-') {
        (rest, -1)
    } else {
        (tok.strip_prefix('+').unwrap_or(tok), 1)
    };
    let i: usize = idx.parse().map_err(|_| err("expected a generator index"))?;
    if i == 0 {
        return Err(err("generator index 0 does not exist"));
    }
    Ok((i, sign))
}

/// Parse a whitespace- or comma-separated word. The strand count defaults to the largest index
/// plus one (or one for the empty word).
pub fn parse_braid(text: &str, strands: Option<usize>) -> Result<BraidWord, Error> {
    let letters = text
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .enumerate()
        .map(|(pos, t)| parse_token(t, pos))
        .collect::<Result<Vec<_>, _>>()?;
    let needed = letters.iter().map(|&(i, _)| i + 1).max().unwrap_or(1);
    let m = strands.unwrap_or(needed);
    BraidWord::new(m, letters)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar() {
        let t = parse_braid("s1 s1 s1", None).unwrap();
        assert_eq!(t.strands, 2);
        assert_eq!(t.exponent_sum(), 3);
        let f = parse_braid("2 -1 2 -1", None).unwrap();
        assert_eq!(f.strands, 3);
        assert_eq!(f.letters, vec![(2, 1), (1, -1), (2, 1), (1, -1)]);
        assert_eq!(parse_braid("s2^-1", None).unwrap().letters, vec![(2, -1)]);
        assert!(matches!(parse_braid("s0", None), Err(Error::Parse { position: 0, .. })));
        assert!(matches!(parse_braid("s1 x", None), Err(Error::Parse { position: 1, .. })));
        assert!(parse_braid("s3", Some(3)).is_err());
        assert_eq!(parse_braid("", None).unwrap().strands, 1);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(all_words(1, 6).len(), 1);
        assert_eq!(all_words(2, 6).len(), 127);
        assert_eq!(all_words(3, 6).len(), 5461);
    }

    #[test]
    fn display_round_trip() {
        let w = parse_braid("1 -2 3", Some(5)).unwrap();
        assert_eq!(parse_braid(&w.to_string(), Some(5)).unwrap(), w);
    }
}
