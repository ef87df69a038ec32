//! Gröbner bases of ideals generated by binomials `x^u - x^v`.
//!
//! Coefficients never leave `{+1, -1}`: the S-pair of two such binomials and
//! every reduction step produce another difference of two monomials, so the
//! engine stores only exponent pairs.

mod buchberger;
mod exponent;
mod order;
mod text;

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

pub use buchberger::{auto_reduce, buchberger};
pub use exponent::ExponentVector;
pub use order::MonomialOrder;
pub use text::{max_variable_index, parse_binomial, parse_monomial};

/// `x^lead - x^trail`, oriented so that `x^lead > x^trail` under the order it
/// was built with.
///
/// Lead and trail may share variables: an S-pair of two binomials with
/// disjoint supports can have a common monomial factor, and dividing it out
/// would change the ideal. Elements of reduced bases of toric ideals are
/// always disjoint; see [`PureBinomial::is_disjoint`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PureBinomial {
    lead: ExponentVector,
    trail: ExponentVector,
}

impl PureBinomial {
    pub fn new(a: ExponentVector, b: ExponentVector, order: &MonomialOrder) -> Result<Self> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch { expected: a.len(), found: b.len() });
        }
        match order.compare(a.as_slice(), b.as_slice()) {
            Ordering::Greater => Ok(PureBinomial { lead: a, trail: b }),
            Ordering::Less => Ok(PureBinomial { lead: b, trail: a }),
            Ordering::Equal => Err(Error::InvalidParameter(format!("binomial {a} - {b} is zero"))),
        }
    }

    pub fn lead(&self) -> &ExponentVector {
        &self.lead
    }

    pub fn trail(&self) -> &ExponentVector {
        &self.trail
    }

    pub fn nvars(&self) -> usize {
        self.lead.len()
    }

    pub fn is_disjoint(&self) -> bool {
        self.lead.is_coprime(&self.trail)
    }

    /// Same binomial, oriented for another order.
    pub fn reorient(&self, order: &MonomialOrder) -> Self {
        PureBinomial::new(self.lead.clone(), self.trail.clone(), order)
            .expect("a binomial never has equal terms")
    }

    /// Both terms as exponent vectors, regardless of orientation.
    pub fn terms(&self) -> [&ExponentVector; 2] {
        [&self.lead, &self.trail]
    }

    /// Keeps only the variables in `range`; used to project elimination results.
    pub(crate) fn restrict(&self, range: std::ops::Range<usize>) -> Self {
        PureBinomial {
            lead: ExponentVector(self.lead.0[range.clone()].to_vec()),
            trail: ExponentVector(self.trail.0[range].to_vec()),
        }
    }
}

impl fmt::Display for PureBinomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.lead, self.trail)
    }
}

/// A list of binomials together with the order it is a basis for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinomialBasis {
    pub elements: Vec<PureBinomial>,
    pub order: MonomialOrder,
    pub reduced: bool,
    nvars: usize,
}

impl BinomialBasis {
    pub fn new(elements: Vec<PureBinomial>, order: MonomialOrder, nvars: usize, reduced: bool) -> Self {
        BinomialBasis { elements, order, reduced, nvars }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leads(&self) -> impl Iterator<Item = &ExponentVector> {
        self.elements.iter().map(PureBinomial::lead)
    }

    /// Ideal membership of a binomial, valid when the basis is a Gröbner basis.
    pub fn contains(&self, b: &PureBinomial) -> Result<bool> {
        Ok(normal_form(b, self)?.is_none())
    }

    /// Sorts elements by decreasing lead, then decreasing trail.
    pub(crate) fn canonicalize(&mut self) {
        let order = self.order.clone();
        self.elements.sort_by(|a, b| {
            order
                .compare(b.lead.as_slice(), a.lead.as_slice())
                .then_with(|| order.compare(b.trail.as_slice(), a.trail.as_slice()))
        });
        self.elements.dedup();
    }
}

impl fmt::Display for BinomialBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.elements {
            writeln!(f, "{b}")?;
        }
        Ok(())
    }
}

/// Reduces the pair of terms `(a, b)` of `x^a - x^b` modulo `basis` until no
/// term is divisible by a lead. Returns `None` when the binomial becomes zero.
pub(crate) fn reduce_terms(
    mut a: ExponentVector,
    mut b: ExponentVector,
    basis: &[PureBinomial],
    order: &MonomialOrder,
) -> Result<Option<PureBinomial>> {
    loop {
        if a == b {
            return Ok(None);
        }
        if order.compare(a.as_slice(), b.as_slice()) == Ordering::Less {
            std::mem::swap(&mut a, &mut b);
        }
        if let Some(g) = basis.iter().find(|g| g.lead.divides(&a)) {
            a = a.replace(&g.lead, &g.trail)?;
            continue;
        }
        if let Some(g) = basis.iter().find(|g| g.lead.divides(&b)) {
            b = b.replace(&g.lead, &g.trail)?;
            continue;
        }
        return Ok(Some(PureBinomial { lead: a, trail: b }));
    }
}

/// Full reduction of `b` modulo the elements of `basis`. Every step replaces
/// one term by a strictly smaller monomial, so this terminates.
pub fn normal_form(b: &PureBinomial, basis: &BinomialBasis) -> Result<Option<PureBinomial>> {
    if b.nvars() != basis.nvars {
        return Err(Error::LengthMismatch { expected: basis.nvars, found: b.nvars() });
    }
    reduce_terms(b.lead.clone(), b.trail.clone(), &basis.elements, &basis.order)
}
