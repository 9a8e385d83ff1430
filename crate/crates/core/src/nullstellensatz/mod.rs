//! Graph polynomials `∏ (X_i - X_j)` and exact coefficient extraction.
//!
//! A nonzero coefficient of `∏ X_i^{k_i}` with `k_i < |L_i|` for every
//! variable guarantees a choice of distinct colors across every factor, so
//! these coefficients certify list-colorability of small conflict graphs.
//!
//! Variables are 0-based in the API; the text format and the lemma tables
//! use 1-based indices like the usual written form.

mod lemmas;
mod poly;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

pub use lemmas::{lemma_polynomial, LemmaId, LemmaPolynomial};
pub use poly::{Monomial, SparsePoly, MAX_EXPONENT, MAX_VARIABLES};

use poly::exponent_of;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NullstellensatzError {
    #[error("variable {var} is out of range for {vars} variables")]
    VariableOutOfRange { var: usize, vars: usize },
    #[error("pair ({0}, {0}) would make the polynomial zero")]
    SelfPair(usize),
    #[error("pair ({i}, {j}) is listed twice")]
    DuplicatePair { i: usize, j: usize },
    #[error("{0} variables exceed the limit of 32")]
    TooManyVariables(usize),
    #[error("exponent {exponent} of variable {var} exceeds 15")]
    ExponentTooLarge { var: usize, exponent: u8 },
    #[error("expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("unknown lemma `{0}`")]
    UnknownLemma(String),
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
}

/// The factors of a graph polynomial; pair `(i, j)` stands for `X_i - X_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConflictPairs {
    vars: usize,
    pairs: Vec<(usize, usize)>,
}

impl ConflictPairs {
    /// Pairs are 0-based. Orientation is kept as given, since it fixes the
    /// sign of the product; the same unordered pair may not appear twice.
    pub fn new(vars: usize, pairs: Vec<(usize, usize)>) -> Result<Self, NullstellensatzError> {
        if vars > MAX_VARIABLES {
            return Err(NullstellensatzError::TooManyVariables(vars));
        }
        let mut seen = BTreeSet::new();
        for &(i, j) in &pairs {
            for var in [i, j] {
                if var >= vars {
                    return Err(NullstellensatzError::VariableOutOfRange { var, vars });
                }
            }
            if i == j {
                return Err(NullstellensatzError::SelfPair(i));
            }
            if !seen.insert((i.min(j), i.max(j))) {
                return Err(NullstellensatzError::DuplicatePair { i, j });
            }
        }
        Ok(ConflictPairs { vars, pairs })
    }

    pub fn from_one_based(vars: usize, pairs: &[(usize, usize)]) -> Result<Self, NullstellensatzError> {
        let shifted = pairs
            .iter()
            .map(|&(i, j)| match (i.checked_sub(1), j.checked_sub(1)) {
                (Some(a), Some(b)) => Ok((a, b)),
                _ => Err(NullstellensatzError::VariableOutOfRange { var: 0, vars }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(vars, shifted)
    }

    pub fn var_count(&self) -> usize {
        self.vars
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Same factors with pair `index` reversed.
    pub fn flipped(&self, index: usize) -> Self {
        let mut pairs = self.pairs.clone();
        let (i, j) = pairs[index];
        pairs[index] = (j, i);
        ConflictPairs { vars: self.vars, pairs }
    }

    /// Unordered pairs with the smaller index first.
    pub fn unordered(&self) -> BTreeSet<(usize, usize)> {
        self.pairs.iter().map(|&(i, j)| (i.min(j), i.max(j))).collect()
    }

    /// The full product with no pruning.
    pub fn expand(&self) -> SparsePoly {
        let mut p = SparsePoly::one(self.vars);
        for &(i, j) in &self.pairs {
            p.mul_difference(i, j, |_, _, _| true);
        }
        p
    }

    /// Text form: one `p i j` line per pair, 1-based.
    pub fn to_text(&self) -> String {
        self.pairs.iter().map(|&(i, j)| format!("p {} {}\n", i + 1, j + 1)).collect()
    }
}

impl fmt::Display for ConflictPairs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, &(i, j)) in self.pairs.iter().enumerate() {
            if n > 0 {
                write!(f, " ")?;
            }
            write!(f, "(X{} - X{})", i + 1, j + 1)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coefficient {
    #[serde(serialize_with = "serialize_bigint")]
    pub value: BigInt,
    /// Set when the answer is zero for a structural reason.
    pub note: Option<String>,
}

pub(crate) fn serialize_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match i64::try_from(v) {
        Ok(small) => s.serialize_i64(small),
        Err(_) => s.serialize_str(&v.to_string()),
    }
}

/// Exact coefficient of `target` in the product of `pairs`.
///
/// Factors are multiplied in the listed order. A partial term is dropped as
/// soon as some exponent passes the target, or when a variable still needs
/// more increments than the remaining factors mentioning it can supply.
pub fn coefficient(pairs: &ConflictPairs, target: &Monomial) -> Result<Coefficient, NullstellensatzError> {
    if target.var_count() != pairs.var_count() {
        return Err(NullstellensatzError::LengthMismatch { expected: pairs.var_count(), found: target.var_count() });
    }
    if target.degree() != pairs.len() {
        return Ok(Coefficient {
            value: BigInt::default(),
            note: Some(format!("degree mismatch: target has degree {} but there are {} factors", target.degree(), pairs.len())),
        });
    }
    let goal = target.exponents();
    // remaining[t][v]: factors after position t that mention variable v.
    let n = pairs.var_count();
    let mut remaining = vec![vec![0u8; n]; pairs.len() + 1];
    for t in (0..pairs.len()).rev() {
        remaining[t] = remaining[t + 1].clone();
        let (i, j) = pairs.pairs()[t];
        remaining[t][i] += 1;
        remaining[t][j] += 1;
    }
    let mut p = SparsePoly::one(n);
    for (t, &(i, j)) in pairs.pairs().iter().enumerate() {
        let ahead = &remaining[t + 1];
        p.mul_difference(i, j, |key, var, raised| {
            raised <= goal[var]
                && (0..n).all(|v| {
                    let have = if v == var { raised } else { exponent_of(key, v) };
                    goal[v] - have.min(goal[v]) <= ahead[v]
                })
        });
    }
    Ok(Coefficient { value: p.coefficient(target), note: None })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub monomial: Monomial,
    #[serde(serialize_with = "serialize_bigint")]
    pub coefficient: BigInt,
}

/// Finds a monomial with nonzero coefficient and `k_i < caps[i]` for all
/// `i`, or `None` when there is none. Returns the lexicographically
/// smallest exponent vector among the candidates.
pub fn cn_witness(pairs: &ConflictPairs, caps: &[u8]) -> Result<Option<Witness>, NullstellensatzError> {
    if caps.len() != pairs.var_count() {
        return Err(NullstellensatzError::LengthMismatch { expected: pairs.var_count(), found: caps.len() });
    }
    let room: usize = caps.iter().map(|&c| c.saturating_sub(1) as usize).sum();
    if room < pairs.len() {
        return Ok(None);
    }
    let mut p = SparsePoly::one(pairs.var_count());
    for &(i, j) in pairs.pairs() {
        p.mul_difference(i, j, |_, var, raised| raised < caps[var]);
        if p.is_empty() {
            return Ok(None);
        }
    }
    let best = p
        .raw_terms()
        .map(|(&key, c)| (Monomial::from_key(key, pairs.var_count()), c))
        .min_by(|a, b| a.0.cmp(&b.0));
    Ok(best.map(|(monomial, c)| Witness { monomial, coefficient: c.clone() }))
}

/// Contents of a pairs file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairsFile {
    pub pairs: ConflictPairs,
    pub target: Option<Monomial>,
    pub caps: Option<Vec<u8>>,
}

/// Parses `p i j` factor lines, an optional `t k1 k2 ...` target line and
/// an optional `caps c1 c2 ...` line. Indices are 1-based; `#` starts a
/// comment. The variable count is the target or caps length when given,
/// otherwise the largest index used.
pub fn parse_pairs(text: &str) -> Result<PairsFile, NullstellensatzError> {
    let mut raw = Vec::new();
    let mut target: Option<Vec<u8>> = None;
    let mut caps: Option<Vec<u8>> = None;
    for (n, line) in text.lines().enumerate() {
        let line_no = n + 1;
        let syntax = |message: String| NullstellensatzError::Syntax { line: line_no, message };
        let line = line.split('#').next().unwrap_or("").trim();
        let mut words = line.split_whitespace();
        let Some(tag) = words.next() else { continue };
        let numbers = words
            .map(|w| w.parse::<usize>().map_err(|_| syntax(format!("`{w}` is not a nonnegative integer"))))
            .collect::<Result<Vec<_>, _>>()?;
        let small = |v: &[usize]| -> Result<Vec<u8>, NullstellensatzError> {
            v.iter()
                .map(|&k| u8::try_from(k).map_err(|_| syntax(format!("{k} is too large"))))
                .collect()
        };
        match tag {
            "p" => match numbers[..] {
                [i, j] if i >= 1 && j >= 1 => raw.push((i, j)),
                [_, _] => return Err(syntax("indices are 1-based".into())),
                _ => return Err(syntax("expected `p i j`".into())),
            },
            "t" if target.is_none() => target = Some(small(&numbers)?),
            "caps" if caps.is_none() => caps = Some(small(&numbers)?),
            "t" | "caps" => return Err(syntax(format!("repeated `{tag}` line"))),
            other => return Err(syntax(format!("unknown line tag `{other}`"))),
        }
    }
    let largest = raw.iter().map(|&(i, j)| i.max(j)).max().unwrap_or(0);
    let vars = target.as_ref().or(caps.as_ref()).map_or(largest, Vec::len);
    if let (Some(t), Some(c)) = (&target, &caps) {
        if t.len() != c.len() {
            return Err(NullstellensatzError::LengthMismatch { expected: t.len(), found: c.len() });
        }
    }
    let pairs = ConflictPairs::from_one_based(vars, &raw)?;
    let target = target.map(Monomial::new).transpose()?;
    Ok(PairsFile { pairs, target, caps })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(k: &[u8]) -> Monomial {
        Monomial::new(k.to_vec()).unwrap()
    }

    fn coeff(pairs: &ConflictPairs, k: &[u8]) -> i64 {
        i64::try_from(coefficient(pairs, &mono(k)).unwrap().value).unwrap()
    }

    #[test]
    fn small_products() {
        let single = ConflictPairs::from_one_based(2, &[(1, 2)]).unwrap();
        assert_eq!(coeff(&single, &[1, 0]), 1);
        assert_eq!(coeff(&single, &[0, 1]), -1);
        let triangle = ConflictPairs::from_one_based(3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(coeff(&triangle, &[2, 1, 0]), 1);
        assert_eq!(coeff(&triangle, &[1, 1, 1]), 0);
        let mismatch = coefficient(&triangle, &mono(&[1, 0, 0])).unwrap();
        assert!(mismatch.note.unwrap().contains("degree mismatch"));
    }

    #[test]
    fn invalid_pairs() {
        assert_eq!(ConflictPairs::new(2, vec![(0, 0)]), Err(NullstellensatzError::SelfPair(0)));
        assert!(matches!(ConflictPairs::new(2, vec![(0, 2)]), Err(NullstellensatzError::VariableOutOfRange { .. })));
        assert!(matches!(
            ConflictPairs::new(2, vec![(0, 1), (1, 0)]),
            Err(NullstellensatzError::DuplicatePair { .. })
        ));
        assert!(ConflictPairs::from_one_based(2, &[(0, 1)]).is_err());
    }

    #[test]
    fn witnesses() {
        let single = ConflictPairs::from_one_based(2, &[(1, 2)]).unwrap();
        assert_eq!(cn_witness(&single, &[1, 1]).unwrap(), None);
        let w = cn_witness(&single, &[2, 2]).unwrap().unwrap();
        assert_eq!(w.monomial.exponents(), &[0, 1]);
        assert_eq!(w.coefficient, BigInt::from(-1));
        let triangle = ConflictPairs::from_one_based(3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(cn_witness(&triangle, &[2, 2, 2]).unwrap(), None);
        assert!(cn_witness(&triangle, &[3, 2, 2]).unwrap().is_some());
    }

    #[test]
    fn parse_text() {
        let file = parse_pairs("# triangle\np 1 2\np 1 3\np 2 3\nt 2 1 0\n").unwrap();
        assert_eq!(file.pairs.len(), 3);
        assert_eq!(coefficient(&file.pairs, &file.target.unwrap()).unwrap().value, BigInt::from(1));
        assert_eq!(parse_pairs(&file.pairs.to_text()).unwrap().pairs, file.pairs);
        assert!(matches!(parse_pairs("p 1\n"), Err(NullstellensatzError::Syntax { line: 1, .. })));
        assert!(matches!(parse_pairs("q 1 2\n"), Err(NullstellensatzError::Syntax { .. })));
        assert!(parse_pairs("p 1 3\nt 1 0\n").is_err());
    }
}
