//! The graph polynomials behind the reducible configurations, with their
//! target monomials, list-size caps and published coefficients.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{ConflictPairs, Monomial, NullstellensatzError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LemmaId {
    FourVertex,
    NineFace,
    TenFaceAdjacent,
    TenFaceDist3,
    TenFaceDist4,
}

impl LemmaId {
    pub const ALL: [LemmaId; 5] =
        [LemmaId::FourVertex, LemmaId::NineFace, LemmaId::TenFaceAdjacent, LemmaId::TenFaceDist3, LemmaId::TenFaceDist4];

    pub fn name(self) -> &'static str {
        match self {
            LemmaId::FourVertex => "four-vertex",
            LemmaId::NineFace => "nine-face",
            LemmaId::TenFaceAdjacent => "ten-face-adjacent",
            LemmaId::TenFaceDist3 => "ten-face-dist3",
            LemmaId::TenFaceDist4 => "ten-face-dist4",
        }
    }
}

impl fmt::Display for LemmaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LemmaId {
    type Err = NullstellensatzError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        LemmaId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| NullstellensatzError::UnknownLemma(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaPolynomial {
    pub id: LemmaId,
    pub pairs: ConflictPairs,
    pub target: Monomial,
    /// Lower bounds on list sizes; variables absent from every pair get 1.
    pub caps: Vec<u8>,
    /// The coefficient of `target` as published.
    pub published: i64,
}

const FOUR_VERTEX: [(usize, usize); 20] = [
    (1, 2), (1, 4), (1, 5), (1, 6), (1, 8),
    (2, 3), (2, 5), (2, 6), (2, 7), (3, 4),
    (3, 6), (3, 7), (3, 8), (4, 5), (4, 7),
    (4, 8), (5, 6), (5, 8), (6, 7), (7, 8),
];

const NINE_FACE: [(usize, usize); 15] = [
    (1, 2), (1, 3), (1, 6), (1, 7), (2, 3),
    (2, 4), (2, 7), (3, 4), (3, 5), (4, 5),
    (4, 6), (4, 7), (5, 6), (5, 7), (6, 7),
];

const TEN_FACE_ADJACENT: [(usize, usize); 18] = [
    (1, 2), (1, 3), (1, 9), (1, 10),
    (2, 3), (2, 5), (2, 9), (2, 10),
    (3, 5), (3, 6), (3, 10), (5, 6), (5, 7),
    (6, 7), (6, 9), (7, 9), (7, 10), (9, 10),
];

const TEN_FACE_APART: [(usize, usize); 18] = [
    (1, 2), (1, 3), (1, 4), (1, 8), (1, 10),
    (2, 3), (2, 4), (2, 10),
    (3, 4), (3, 6), (3, 10), (4, 6), (4, 7),
    (6, 7), (6, 8), (7, 8), (7, 10), (8, 10),
];

pub fn lemma_polynomial(id: LemmaId) -> LemmaPolynomial {
    let (vars, pairs, target, caps, published): (usize, &[(usize, usize)], Vec<u8>, Vec<u8>, i64) = match id {
        LemmaId::FourVertex => (8, &FOUR_VERTEX, vec![3, 3, 3, 3, 2, 2, 2, 2], vec![4; 8], 6),
        LemmaId::NineFace => (7, &NINE_FACE, vec![2, 2, 2, 2, 2, 3, 2], vec![3, 3, 3, 3, 4, 4, 3], -3),
        LemmaId::TenFaceAdjacent => (
            10,
            &TEN_FACE_ADJACENT,
            vec![4, 4, 2, 0, 2, 1, 2, 0, 0, 3],
            vec![5, 5, 3, 1, 3, 3, 3, 1, 3, 5],
            1,
        ),
        LemmaId::TenFaceDist3 => (
            10,
            &TEN_FACE_APART,
            vec![3, 2, 2, 3, 0, 2, 2, 1, 0, 3],
            vec![4, 3, 4, 4, 1, 3, 3, 3, 1, 4],
            -1,
        ),
        LemmaId::TenFaceDist4 => (
            10,
            &TEN_FACE_APART,
            vec![3, 2, 2, 3, 0, 2, 2, 1, 0, 3],
            vec![4, 3, 3, 4, 1, 3, 3, 3, 1, 4],
            -1,
        ),
    };
    LemmaPolynomial {
        id,
        pairs: ConflictPairs::from_one_based(vars, pairs).expect("tables are well formed"),
        target: Monomial::new(target).expect("tables are well formed"),
        caps,
        published,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tables_are_consistent() {
        for id in LemmaId::ALL {
            let lemma = lemma_polynomial(id);
            assert_eq!(id.name().parse::<LemmaId>().unwrap(), id);
            assert_eq!(lemma.target.degree(), lemma.pairs.len(), "{id}");
            for (k, c) in lemma.target.exponents().iter().zip(&lemma.caps) {
                assert!(k < c, "{id}: exponent {k} not below cap {c}");
            }
        }
        assert!("five-face".parse::<LemmaId>().is_err());
    }

    #[test]
    fn published_coefficients() {
        for id in LemmaId::ALL {
            let lemma = lemma_polynomial(id);
            let c = crate::nullstellensatz::coefficient(&lemma.pairs, &lemma.target).unwrap();
            assert_eq!(c.value, lemma.published.into(), "{id}");
        }
    }
}
