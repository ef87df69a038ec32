//! Two-sided depth bounds for edge rings and the reports built from them.

pub mod verify;

use std::time::Instant;

use serde::Serialize;

use crate::binom::MonomialOrder;
use crate::error::{Error, Result};
use crate::graph::{encode_graph6, DegreeVector, Graph};
use crate::homology::{facet_homology, FieldChoice};
use crate::monomial::{top_betti, MonomialIdeal, DEFAULT_LATTICE_GUARD};
use crate::semigroup::{delta_complex, paper_degree, DEFAULT_EDGE_GUARD};
use crate::toric::toric_ideal;

#[derive(Debug, Clone)]
pub struct DepthOptions {
    pub order: MonomialOrder,
    pub field: FieldChoice,
    pub edge_guard: usize,
    pub lattice_guard: usize,
    pub timings: bool,
    /// Retry the lower bound under the other of lex and grevlex when the bounds do not meet.
    pub fallback: bool,
}

impl Default for DepthOptions {
    fn default() -> Self {
        DepthOptions {
            order: MonomialOrder::Lex,
            field: FieldChoice::Rationals,
            edge_guard: DEFAULT_EDGE_GUARD,
            lattice_guard: DEFAULT_LATTICE_GUARD,
            timings: false,
            fallback: true,
        }
    }
}

/// A nonvanishing `H̃_j(Δ_s)`, certifying `pd K[G] >= j + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub s: DegreeVector,
    pub j: isize,
    pub dim: usize,
}

/// How the lower bound was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LowerMethod {
    /// `r - pd(S/in(I_G))` from the full Betti table.
    InitialIdeal,
    /// `r - #variables used by in(I_G)`, when the lcm lattice exceeded its guard.
    SyzygyCeiling,
}

#[derive(Debug, Clone)]
pub struct LowerBound {
    pub depth: usize,
    pub pd_initial: Option<usize>,
    pub method: LowerMethod,
    pub initial: MonomialIdeal,
    /// Multidegrees where the top Betti number of `S/in(I_G)` lives.
    pub top_degrees: Vec<crate::binom::ExponentVector>,
}

#[derive(Debug, Clone)]
pub struct UpperBound {
    pub depth: usize,
    pub witnesses: Vec<Witness>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Timings {
    pub groebner: f64,
    pub betti: f64,
    pub delta: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DepthReport {
    pub graph: String,
    pub d: usize,
    pub r: usize,
    pub krull_dim: usize,
    pub depth_lower: usize,
    pub depth_upper: usize,
    pub exact: bool,
    pub order: String,
    pub field: String,
    pub pd_initial: Option<usize>,
    pub lower_method: LowerMethod,
    pub witnesses: Vec<Witness>,
    pub timings_ms: Option<Timings>,
}

impl DepthReport {
    /// The depth when both bounds agree.
    pub fn value(&self) -> Option<usize> {
        self.exact.then_some(self.depth_lower)
    }
}

fn millis(t: Instant) -> f64 {
    (t.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

/// `r - pd(S/in(I_G))`, with the initial ideal and its top Betti degrees.
pub fn depth_lower(g: &Graph, opts: &DepthOptions) -> Result<LowerBound> {
    lower_timed(g, opts).map(|(l, _, _)| l)
}

fn lower_timed(g: &Graph, opts: &DepthOptions) -> Result<(LowerBound, f64, f64)> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let t = Instant::now();
    let gb = toric_ideal(g, &opts.order)?;
    let t_gb = millis(t);
    let initial = MonomialIdeal::initial_ideal(&gb)?;
    let t = Instant::now();
    let lower = match top_betti(&initial, opts.field, opts.lattice_guard) {
        Ok((pd, top_degrees)) => LowerBound {
            depth: g.r() - pd,
            pd_initial: Some(pd),
            method: LowerMethod::InitialIdeal,
            top_degrees,
            initial,
        },
        Err(e) if e.is_guard() => LowerBound {
            depth: g.r() - initial.variables_used().len(),
            pd_initial: None,
            method: LowerMethod::SyzygyCeiling,
            top_degrees: Vec::new(),
            initial,
        },
        Err(e) => return Err(e),
    };
    Ok((lower, t_gb, millis(t)))
}

/// Minimum of `r - (j + 1)` over nonvanishing `H̃_j(Δ_s)`, capped by the Krull
/// dimension. Witnesses are listed for every nonvanishing group found.
pub fn depth_upper(g: &Graph, degrees: &[DegreeVector], opts: &DepthOptions) -> Result<UpperBound> {
    depth_upper_until(g, degrees, 0, opts)
}

/// [`depth_upper`], skipping the remaining degrees once the bound reaches `floor`.
pub fn depth_upper_until(g: &Graph, degrees: &[DegreeVector], floor: usize, opts: &DepthOptions) -> Result<UpperBound> {
    let mut depth = g.krull_dim()?;
    let mut witnesses = Vec::new();
    for s in degrees {
        if depth <= floor {
            break;
        }
        let delta = delta_complex(g, s, opts.edge_guard)?;
        for (j, dim) in facet_homology(&delta.facets(), opts.field).nonzero() {
            depth = depth.min(g.r().saturating_sub((j + 1) as usize));
            witnesses.push(Witness { s: s.clone(), j, dim });
        }
    }
    Ok(UpperBound { depth, witnesses })
}

/// `t`-degrees of the top Betti multidegrees of the initial ideal, preceded by
/// the known degree when `g` is a member of the family.
pub fn candidate_degrees(g: &Graph, lower: &LowerBound) -> Result<Vec<DegreeVector>> {
    let mut out = Vec::new();
    if let Some(k) = g.family_index() {
        out.push(paper_degree(k)?);
    }
    if lower.pd_initial.is_some_and(|pd| pd > 0) {
        for a in &lower.top_degrees {
            let s = g.t_degree(a)?;
            if !out.contains(&s) {
                out.push(s);
            }
        }
    }
    Ok(out)
}

pub fn depth_report(g: &Graph, opts: &DepthOptions) -> Result<DepthReport> {
    depth_report_labeled(g, &encode_graph6(g), opts)
}

pub fn depth_report_labeled(g: &Graph, label: &str, opts: &DepthOptions) -> Result<DepthReport> {
    let krull_dim = g.krull_dim()?;
    let (mut lower, mut t_gb, mut t_betti) = lower_timed(g, opts)?;
    let t = Instant::now();
    let degrees = candidate_degrees(g, &lower)?;
    let mut upper = depth_upper_until(g, &degrees, lower.depth, opts)?;
    let mut t_delta = millis(t);
    let mut order = opts.order.clone();
    if opts.fallback && lower.depth < upper.depth {
        let other = if opts.order == MonomialOrder::Grevlex { MonomialOrder::Lex } else { MonomialOrder::Grevlex };
        let alt = DepthOptions { order: other.clone(), ..opts.clone() };
        let (second, gb, betti) = lower_timed(g, &alt)?;
        (t_gb, t_betti) = (t_gb + gb, t_betti + betti);
        if second.depth > lower.depth {
            let t = Instant::now();
            let fresh: Vec<DegreeVector> =
                candidate_degrees(g, &second)?.into_iter().filter(|s| !degrees.contains(s)).collect();
            let more = depth_upper_until(g, &fresh, second.depth, opts)?;
            if more.depth < upper.depth {
                upper.depth = more.depth;
            }
            upper.witnesses.extend(more.witnesses);
            t_delta += millis(t);
            (lower, order) = (second, other);
        }
    }
    if lower.depth > upper.depth {
        return Err(Error::Precondition(format!(
            "lower bound {} exceeds upper bound {} on {label}",
            lower.depth, upper.depth
        )));
    }
    Ok(DepthReport {
        graph: label.to_string(),
        d: g.d(),
        r: g.r(),
        krull_dim,
        depth_lower: lower.depth,
        depth_upper: upper.depth,
        exact: lower.depth == upper.depth,
        order: order.to_string(),
        field: opts.field.to_string(),
        pd_initial: lower.pd_initial,
        lower_method: lower.method,
        witnesses: upper.witnesses,
        timings_ms: opts.timings.then_some(Timings { groebner: t_gb, betti: t_betti, delta: t_delta }),
    })
}

/// Largest family index accepted by [`verify_additivity`].
pub const ADDITIVITY_GUARD: usize = 4;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AdditivityCheck {
    pub f: usize,
    pub d: usize,
    pub construction: DepthReport,
    pub base: DepthReport,
    pub passed: bool,
}

/// Compares the construction for `(f, d)` with its base graph `G_{d-f+7}`:
/// the construction must be exact with depth `base + f - 7` and Krull dimension `d`.
pub fn verify_additivity(f: usize, d: usize, opts: &DepthOptions) -> Result<AdditivityCheck> {
    if f < 7 || d < f {
        return Err(Error::InvalidParameter(format!("need 7 <= f <= d, got f={f}, d={d}")));
    }
    if d - f + 1 > ADDITIVITY_GUARD {
        return Err(Error::GuardLimit(format!(
            "base family index {} exceeds {ADDITIVITY_GUARD}",
            d - f + 1
        )));
    }
    let construction = depth_report(&Graph::theorem_construction(f, d)?, opts)?;
    let base = depth_report(&Graph::family(d - f + 1)?, opts)?;
    let passed = construction.exact
        && base.exact
        && construction.krull_dim == d
        && construction.depth_lower == base.depth_lower + (f - 7);
    Ok(AdditivityCheck { f, d, construction, base, passed })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> DepthOptions {
        DepthOptions::default()
    }

    #[test]
    fn lower_bounds_on_small_family() {
        assert_eq!(depth_lower(&Graph::family(1).unwrap(), &opts()).unwrap().depth, 7);
        let l = depth_lower(&Graph::family(2).unwrap(), &opts()).unwrap();
        assert_eq!((l.depth, l.pd_initial), (7, Some(3)));
    }

    #[test]
    fn triangle_is_polynomial() {
        let g = Graph::new(3, [(1, 2), (1, 3), (2, 3)]).unwrap();
        let l = depth_lower(&g, &opts()).unwrap();
        assert!(candidate_degrees(&g, &l).unwrap().is_empty());
        let rep = depth_report(&g, &opts()).unwrap();
        assert_eq!((rep.depth_lower, rep.depth_upper, rep.krull_dim), (3, 3, 3));
        assert!(rep.exact && rep.witnesses.is_empty());
    }

    #[test]
    fn upper_bounds_from_known_degree() {
        let g = Graph::family(1).unwrap();
        let u = depth_upper(&g, &[paper_degree(1).unwrap()], &opts()).unwrap();
        assert_eq!(u.depth, 7);
        assert_eq!(u.witnesses, vec![Witness { s: paper_degree(1).unwrap(), j: 0, dim: 1 }]);
        let g = Graph::family(2).unwrap();
        let u = depth_upper(&g, &[paper_degree(2).unwrap()], &opts()).unwrap();
        assert_eq!(u.depth, 7);
        assert!(u.witnesses.iter().any(|w| w.j == 2));
        let odd = DegreeVector(vec![1, 0, 0, 0, 0, 0, 0, 0]);
        assert_eq!(depth_upper(&g, &[odd], &opts()).unwrap().depth, g.krull_dim().unwrap());
    }

    #[test]
    fn top_betti_degree_maps_to_known_degree() {
        let g = Graph::family(2).unwrap();
        let l = depth_lower(&g, &opts()).unwrap();
        let c = candidate_degrees(&g, &l).unwrap();
        assert_eq!(c[0], paper_degree(2).unwrap());
        let shifted = g.with_pendant(1).unwrap();
        let l = depth_lower(&shifted, &opts()).unwrap();
        let mut s = paper_degree(2).unwrap().0;
        s.push(0);
        assert!(candidate_degrees(&shifted, &l).unwrap().contains(&DegreeVector(s)));
    }

    #[test]
    fn family_reports_are_exact() {
        for k in 1..=3 {
            let rep = depth_report(&Graph::family(k).unwrap(), &opts()).unwrap();
            assert_eq!((rep.value(), rep.krull_dim), (Some(7), k + 6), "k={k}");
            assert!(rep.timings_ms.is_none());
        }
    }

    #[test]
    fn additivity() {
        for (f, d) in [(7, 8), (8, 8), (8, 9), (9, 10)] {
            let c = verify_additivity(f, d, &opts()).unwrap();
            assert!(c.passed, "({f},{d})");
            assert_eq!(c.construction.value(), Some(f));
        }
        assert!(verify_additivity(7, 11, &opts()).unwrap_err().is_guard());
        assert!(verify_additivity(6, 8, &opts()).is_err());
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::new(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)]).unwrap();
        assert_eq!(depth_lower(&g, &opts()).unwrap_err(), Error::Disconnected);
    }

    #[test]
    fn grevlex_closes_lex_gap() {
        let g = crate::graph::parse_graph6("FxCX_").unwrap();
        let plain = depth_report(&g, &DepthOptions { fallback: false, ..opts() }).unwrap();
        assert_eq!((plain.depth_lower, plain.depth_upper), (6, 7));
        let rep = depth_report(&g, &opts()).unwrap();
        assert_eq!((rep.depth_lower, rep.depth_upper, rep.order.as_str()), (7, 7, "grevlex"));
    }
}
