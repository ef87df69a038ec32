use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Monomial orders with variable precedence `x_1 > x_2 > ... > x_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    Grevlex,
    /// Compares the first `cut` variables by `head`; ties go to `tail` on the rest.
    /// With `cut` covering the variables to eliminate this is an elimination order.
    Block {
        cut: usize,
        head: Box<MonomialOrder>,
        tail: Box<MonomialOrder>,
    },
}

impl MonomialOrder {
    pub fn block(cut: usize, head: MonomialOrder, tail: MonomialOrder) -> Self {
        MonomialOrder::Block { cut, head: Box::new(head), tail: Box::new(tail) }
    }

    /// Compares two exponent slices of equal length.
    pub fn compare(&self, a: &[u32], b: &[u32]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Grevlex => {
                let da: u64 = a.iter().map(|&e| u64::from(e)).sum();
                let db: u64 = b.iter().map(|&e| u64::from(e)).sum();
                da.cmp(&db).then_with(|| {
                    for (x, y) in a.iter().zip(b).rev() {
                        if x != y {
                            return y.cmp(x);
                        }
                    }
                    Ordering::Equal
                })
            }
            MonomialOrder::Block { cut, head, tail } => {
                let cut = (*cut).min(a.len());
                head.compare(&a[..cut], &b[..cut])
                    .then_with(|| tail.compare(&a[cut..], &b[cut..]))
            }
        }
    }

    pub fn try_compare(&self, a: &[u32], b: &[u32]) -> Result<Ordering> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch { expected: a.len(), found: b.len() });
        }
        Ok(self.compare(a, b))
    }

    /// An integer key whose lexicographic order agrees with [`Self::compare`].
    pub fn sort_key(&self, a: &[u32]) -> Vec<i64> {
        let mut key = Vec::with_capacity(a.len() + 2);
        self.push_key(a, &mut key);
        key
    }

    fn push_key(&self, a: &[u32], key: &mut Vec<i64>) {
        match self {
            MonomialOrder::Lex => key.extend(a.iter().map(|&e| i64::from(e))),
            MonomialOrder::Grevlex => {
                key.push(a.iter().map(|&e| i64::from(e)).sum());
                key.extend(a.iter().rev().map(|&e| -i64::from(e)));
            }
            MonomialOrder::Block { cut, head, tail } => {
                let cut = (*cut).min(a.len());
                head.push_key(&a[..cut], key);
                tail.push_key(&a[cut..], key);
            }
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonomialOrder::Lex => f.write_str("lex"),
            MonomialOrder::Grevlex => f.write_str("grevlex"),
            MonomialOrder::Block { cut, head, tail } => write!(f, "block({cut},{head},{tail})"),
        }
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "lex" => Ok(MonomialOrder::Lex),
            "grevlex" | "revlex" => Ok(MonomialOrder::Grevlex),
            other => Err(Error::Parse(format!("unknown monomial order {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lex_examples() {
        let lex = MonomialOrder::Lex;
        assert_eq!(lex.compare(&[1, 0], &[0, 2]), Ordering::Greater);
        assert_eq!(lex.compare(&[1, 2], &[1, 2]), Ordering::Equal);
        let lead = [1, 0, 0, 1, 1, 0, 2, 0];
        let trail = [0, 1, 1, 0, 0, 1, 0, 2];
        assert_eq!(lex.compare(&lead, &trail), Ordering::Greater);
        assert!(lex.try_compare(&[1], &[1, 2]).is_err());
    }

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::Grevlex;
        assert_eq!(o.compare(&[1, 0], &[0, 2]), Ordering::Less);
        // x1*x3 < x2^2 in grevlex
        assert_eq!(o.compare(&[1, 0, 1], &[0, 2, 0]), Ordering::Less);
    }

    #[test]
    fn block_eliminates_head() {
        let o = MonomialOrder::block(1, MonomialOrder::Lex, MonomialOrder::Grevlex);
        assert_eq!(o.compare(&[1, 0, 0], &[0, 5, 5]), Ordering::Greater);
        assert_eq!(o.compare(&[0, 1, 1], &[0, 2, 0]), Ordering::Less);
    }

    fn orders() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::Lex),
            Just(MonomialOrder::Grevlex),
            (0usize..5).prop_map(|c| MonomialOrder::block(c, MonomialOrder::Lex, MonomialOrder::Grevlex)),
            (0usize..5).prop_map(|c| MonomialOrder::block(c, MonomialOrder::Grevlex, MonomialOrder::Lex)),
        ]
    }

    proptest! {
        #[test]
        fn key_agrees_with_compare(o in orders(), a in prop::collection::vec(0u32..4, 4), b in prop::collection::vec(0u32..4, 4)) {
            prop_assert_eq!(o.compare(&a, &b), o.sort_key(&a).cmp(&o.sort_key(&b)));
        }

        #[test]
        fn multiplicative(o in orders(), a in prop::collection::vec(0u32..4, 4), b in prop::collection::vec(0u32..4, 4), c in prop::collection::vec(0u32..4, 4)) {
            let ac: Vec<u32> = a.iter().zip(&c).map(|(x, y)| x + y).collect();
            let bc: Vec<u32> = b.iter().zip(&c).map(|(x, y)| x + y).collect();
            prop_assert_eq!(o.compare(&a, &b), o.compare(&ac, &bc));
            prop_assert_ne!(o.compare(&ac, &[0; 4]), Ordering::Less);
        }
    }
}
