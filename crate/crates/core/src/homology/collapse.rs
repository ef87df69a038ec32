//! Reduced homology of complexes on at most 64 vertices, given by facets.
//! Faces are bitmasks; free pairs are collapsed before any rank is taken.

use std::collections::HashMap;

use super::{reduced_homology_dims, Face, FieldChoice, HomologyDims, SimplicialComplex, SparseRow};

/// Same result as [`reduced_homology_dims`] on the complex spanned by `facets`.
pub fn facet_homology(facets: &[Face], field: FieldChoice) -> HomologyDims {
    let mut labels: Vec<u32> = facets.iter().flatten().copied().collect();
    labels.sort_unstable();
    labels.dedup();
    if facets.is_empty() {
        return HomologyDims::default();
    }
    if labels.len() > 64 {
        let c = SimplicialComplex::from_facets(labels, facets);
        return reduced_homology_dims(&c, field);
    }
    let bit = |v: &u32| 1u64 << labels.binary_search(v).expect("label present");
    let masks: Vec<u64> = facets.iter().map(|f| f.iter().map(bit).fold(0, |a, b| a | b)).collect();
    let top = masks.iter().map(|m| m.count_ones()).max().unwrap_or(0) as usize;
    let mut live: HashMap<u64, u32> = HashMap::new();
    for &m in &masks {
        // every submask of m
        let mut s = m;
        loop {
            live.entry(s).or_insert(0);
            if s == 0 {
                break;
            }
            s = (s - 1) & m;
        }
    }
    let faces: Vec<u64> = live.keys().copied().collect();
    for &f in &faces {
        let mut rest = f;
        while rest != 0 {
            let b = rest & rest.wrapping_neg();
            rest ^= b;
            *live.get_mut(&(f ^ b)).expect("closed under subsets") += 1;
        }
    }
    collapse(&mut live);

    let mut levels: Vec<Vec<u64>> = vec![Vec::new(); top + 1];
    for &f in live.keys() {
        levels[f.count_ones() as usize].push(f);
    }
    if levels.iter().all(Vec::is_empty) {
        return HomologyDims(vec![0]);
    }
    for l in &mut levels {
        l.sort_unstable();
    }
    while levels.last().is_some_and(Vec::is_empty) {
        levels.pop();
    }
    // ranks[k] = rank of the boundary from faces of size k to size k - 1
    let mut ranks = vec![0usize; levels.len() + 1];
    for k in 1..levels.len() {
        let lower = &levels[k - 1];
        let rows: Vec<SparseRow> = levels[k]
            .iter()
            .map(|&f| {
                let mut row: SparseRow = Vec::with_capacity(k);
                let mut rest = f;
                let mut i = 0;
                while rest != 0 {
                    let b = rest & rest.wrapping_neg();
                    rest ^= b;
                    if let Ok(col) = lower.binary_search(&(f ^ b)) {
                        row.push((col, if i % 2 == 0 { 1 } else { -1 }));
                    }
                    i += 1;
                }
                row.sort_unstable();
                row
            })
            .collect();
        ranks[k] = field.rank(&rows);
    }
    HomologyDims((0..levels.len()).map(|k| levels[k].len() - ranks[k] - ranks[k + 1]).collect())
}

/// Removes free pairs `σ ⊂ τ` (τ the only coface of σ) until none is left.
/// `live` maps each face to its number of cofaces one size up.
fn collapse(live: &mut HashMap<u64, u32>) {
    let mut queue: Vec<u64> = live.iter().filter(|(_, &c)| c == 1).map(|(&f, _)| f).collect();
    while let Some(s) = queue.pop() {
        if live.get(&s) != Some(&1) {
            continue;
        }
        let t = (0..64)
            .map(|i| 1u64 << i)
            .filter(|b| s & b == 0)
            .map(|b| s | b)
            .find(|t| live.contains_key(t))
            .expect("free face has a coface");
        live.remove(&s);
        live.remove(&t);
        for (face, skip) in [(t, s), (s, u64::MAX)] {
            let mut rest = face;
            while rest != 0 {
                let b = rest & rest.wrapping_neg();
                rest ^= b;
                let sub = face ^ b;
                if sub == skip {
                    continue;
                }
                if let Some(c) = live.get_mut(&sub) {
                    *c -= 1;
                    if *c == 1 {
                        queue.push(sub);
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn nonzero(h: &HomologyDims) -> Vec<(isize, usize)> {
        h.nonzero().collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(nonzero(&facet_homology(&[vec![]], FieldChoice::Rationals)), vec![(-1, 1)]);
        assert!(nonzero(&facet_homology(&[vec![1, 2, 3]], FieldChoice::Rationals)).is_empty());
        let hollow = [vec![1, 2], vec![1, 3], vec![2, 3]];
        assert_eq!(nonzero(&facet_homology(&hollow, FieldChoice::Rationals)), vec![(1, 1)]);
        assert!(facet_homology(&[], FieldChoice::Rationals).0.is_empty());
    }

    #[test]
    fn projective_plane_depends_on_field() {
        let rp2: Vec<Face> = [
            [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 2, 6],
            [2, 3, 5], [2, 4, 5], [2, 4, 6], [3, 4, 6], [3, 5, 6],
        ]
        .iter()
        .map(|f| f.to_vec())
        .collect();
        assert!(nonzero(&facet_homology(&rp2, FieldChoice::Rationals)).is_empty());
        assert_eq!(nonzero(&facet_homology(&rp2, FieldChoice::Prime(2))), vec![(1, 1), (2, 1)]);
    }

    proptest! {
        #[test]
        fn agrees_with_plain_route(
            facets in prop::collection::vec(prop::collection::btree_set(1u32..=9, 0..=5), 1..10),
            p in prop::sample::select(vec![0u64, 2, 3]),
        ) {
            let facets: Vec<Face> = facets.into_iter().map(|s| s.into_iter().collect()).collect();
            let field = if p == 0 { FieldChoice::Rationals } else { FieldChoice::Prime(p) };
            let c = SimplicialComplex::from_facets(facets.iter().flatten().copied(), &facets);
            prop_assert_eq!(nonzero(&facet_homology(&facets, field)), nonzero(&reduced_homology_dims(&c, field)));
        }
    }
}
