//! Stanley-Reisner complexes, reduced simplicial homology, and graded Betti
//! numbers of `R/I` for square-free `I` via Hochster's formula
//! `β_{i,σ}(R/I) = dim H̃_{|σ|-i-1}(Δ|σ)`.

use serde::{Deserialize, Serialize};

use crate::decomp;
use crate::error::{Error, Result};
use crate::field::{matrix_rank, FieldChoice};
use crate::ideal::MonomialIdeal;
use crate::monomial::VarSet;

/// Variable counts above this are refused: the homology routines visit all
/// `2^n` subsets.
pub const MAX_HOMOLOGY_VARS: usize = 20;

/// A simplicial complex on vertices from `[n]`, stored by its facets.
///
/// Always contains the empty face; the complex `{∅}` has the single facet `∅`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimplicialComplex {
    pub n: usize,
    pub vertices: VarSet,
    pub facets: Vec<VarSet>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `faces`, keeping only maximal ones.
    pub fn from_faces(n: usize, faces: impl IntoIterator<Item = VarSet>) -> Result<Self> {
        if n > MAX_HOMOLOGY_VARS {
            return Err(Error::domain(format!("simplicial complexes limited to {MAX_HOMOLOGY_VARS} vertices")));
        }
        let mut all: Vec<VarSet> = faces.into_iter().collect();
        if all.iter().any(|f| !f.is_subset(VarSet::full(n))) {
            return Err(Error::domain("face uses a vertex outside [n]"));
        }
        all.sort();
        all.dedup();
        let mut facets: Vec<VarSet> = all
            .iter()
            .copied()
            .filter(|f| !all.iter().any(|g| g != f && f.is_subset(*g)))
            .collect();
        if facets.is_empty() {
            facets.push(VarSet::empty());
        }
        facets.sort();
        let vertices = facets.iter().fold(VarSet::empty(), |a, f| a.union(*f));
        Ok(SimplicialComplex { n, vertices, facets })
    }

    pub fn contains_face(&self, face: VarSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// Dimension `max |F| - 1`; `-1` for `{∅}`.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize).max().unwrap_or(0) - 1
    }

    /// Every face, grouped by cardinality (index `k` holds the faces with
    /// `k` vertices, i.e. dimension `k - 1`).
    pub fn faces_by_size(&self) -> Vec<Vec<VarSet>> {
        let is_face = |s: VarSet| self.contains_face(s);
        faces_within(self.vertices, &is_face)
    }

    /// The induced subcomplex on `sigma`.
    pub fn induced(&self, sigma: VarSet) -> SimplicialComplex {
        let faces = self.facets.iter().map(|f| f.intersection(sigma));
        SimplicialComplex::from_faces(self.n, faces).expect("subcomplex of a valid complex")
    }
}

fn faces_within(sigma: VarSet, is_face: &dyn Fn(VarSet) -> bool) -> Vec<Vec<VarSet>> {
    let mut by_size: Vec<Vec<VarSet>> = vec![Vec::new(); sigma.len() + 1];
    for tau in sigma.subsets() {
        if is_face(tau) {
            by_size[tau.len()].push(tau);
        }
    }
    while by_size.len() > 1 && by_size.last().is_some_and(Vec::is_empty) {
        by_size.pop();
    }
    for level in &mut by_size {
        level.sort_by_key(|s| s.bits());
    }
    by_size
}

/// Ranks of `H̃_k` for `k = -1..=dim`, returned at index `k + 1`.
fn homology_from_faces(by_size: &[Vec<VarSet>], field: FieldChoice) -> Result<Vec<usize>> {
    // boundary[k] : C_k -> C_{k-1} on faces with k+1 vertices (k >= 0).
    let top = by_size.len();
    let mut boundary_ranks = vec![0usize; top + 1];
    for size in 1..top {
        let cols = &by_size[size];
        let rows = &by_size[size - 1];
        if cols.is_empty() || rows.is_empty() {
            continue;
        }
        let mut entries = vec![0i64; rows.len() * cols.len()];
        for (c, face) in cols.iter().enumerate() {
            for (pos, v) in face.iter().enumerate() {
                let mut sub = *face;
                sub.remove(v);
                let r = rows
                    .binary_search_by_key(&sub.bits(), |s| s.bits())
                    .map_err(|_| Error::Internal(format!("face {sub} missing from complex")))?;
                entries[r * cols.len() + c] = if pos % 2 == 0 { 1 } else { -1 };
            }
        }
        boundary_ranks[size] = matrix_rank(rows.len(), cols.len(), &entries, field)?;
    }
    Ok((0..top)
        .map(|size| by_size[size].len() - boundary_ranks[size] - boundary_ranks[size + 1])
        .collect())
}

/// Reduced homology ranks of `complex`, index `k + 1` for `k = -1..=dim`.
pub fn reduced_homology_ranks(complex: &SimplicialComplex, field: FieldChoice) -> Result<Vec<usize>> {
    homology_from_faces(&complex.faces_by_size(), field.validate()?)
}

fn require_squarefree_proper(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::domain("Stanley-Reisner data needs a non-zero, non-unit ideal"));
    }
    if !ideal.is_squarefree() {
        return Err(Error::domain(format!("{ideal} is not square-free")));
    }
    if ideal.nvars() > MAX_HOMOLOGY_VARS {
        return Err(Error::domain(format!("homology limited to n <= {MAX_HOMOLOGY_VARS}")));
    }
    Ok(())
}

/// The Stanley-Reisner complex: faces are the subsets whose product is not in `I`.
pub fn stanley_reisner(ideal: &MonomialIdeal) -> Result<SimplicialComplex> {
    require_squarefree_proper(ideal)?;
    let n = ideal.nvars();
    let faces = VarSet::full(n).subsets().filter(|s| !ideal.contains_set(*s));
    SimplicialComplex::from_faces(n, faces)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiEntry {
    pub i: usize,
    pub sigma: VarSet,
    pub value: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub field: FieldChoice,
    pub pd: usize,
    pub depth: usize,
    pub height: usize,
    pub is_cm: bool,
    /// Nonzero `β_{i,σ}` of the minimal free resolution of `R/I` (`β_{0,∅} = 1`),
    /// ordered by `i` then `σ`.
    pub betti: Vec<BettiEntry>,
}

impl HomologyProfile {
    /// Total Betti numbers `β_i = Σ_σ β_{i,σ}`.
    pub fn betti_totals(&self) -> Vec<usize> {
        let mut totals = vec![0; self.pd + 1];
        for e in &self.betti {
            totals[e.i] += e.value;
        }
        totals
    }
}

/// Which multidegrees Hochster's formula is evaluated on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MultidegreeScan {
    /// Only unions of generator supports; other `σ` have no Betti numbers.
    LcmLattice,
    /// All `2^n` subsets.
    Exhaustive,
}

/// Projective dimension, depth and Cohen-Macaulayness of `R/I`.
pub fn pd_depth(ideal: &MonomialIdeal, field: FieldChoice) -> Result<HomologyProfile> {
    pd_depth_with(ideal, field, MultidegreeScan::LcmLattice)
}

pub fn pd_depth_with(
    ideal: &MonomialIdeal,
    field: FieldChoice,
    scan: MultidegreeScan,
) -> Result<HomologyProfile> {
    require_squarefree_proper(ideal)?;
    let field = field.validate()?;
    let n = ideal.nvars();
    let supports = ideal.gen_supports().expect("square-free");

    let sigmas: Vec<VarSet> = match scan {
        MultidegreeScan::Exhaustive => VarSet::full(n).subsets().collect(),
        MultidegreeScan::LcmLattice => {
            let mut lattice = vec![VarSet::empty()];
            for s in &supports {
                let mut grown = lattice.clone();
                for l in &lattice {
                    grown.push(l.union(*s));
                }
                grown.sort_by_key(|v| v.bits());
                grown.dedup();
                lattice = grown;
            }
            lattice
        }
    };

    let is_face = |s: VarSet| !supports.iter().any(|g| g.is_subset(s));
    let mut betti = Vec::new();
    for sigma in sigmas {
        let ranks = homology_from_faces(&faces_within(sigma, &is_face), field)?;
        for (idx, &rank) in ranks.iter().enumerate() {
            if rank == 0 {
                continue;
            }
            // idx = k + 1, i = |σ| - k - 1 = |σ| - idx
            let i = sigma.len().checked_sub(idx).ok_or_else(|| {
                Error::Internal(format!("homology in degree {} above |σ| = {}", idx as isize - 1, sigma.len()))
            })?;
            betti.push(BettiEntry { i, sigma, value: rank });
        }
    }
    betti.sort_by(|a, b| a.i.cmp(&b.i).then_with(|| a.sigma.cmp(&b.sigma)));

    let pd = betti.iter().map(|e| e.i).max().unwrap_or(0);
    let depth = n - pd;
    let height = decomp::height(ideal)?;
    Ok(HomologyProfile { field, pd, depth, height, is_cm: height == pd, betti })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::{generate_family, Family};

    fn sq(n: usize, sets: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::from_varsets(n, sets.iter().map(|s| VarSet::from_indices(s.iter().copied())))
            .unwrap()
    }

    fn set(v: &[usize]) -> VarSet {
        VarSet::from_indices(v.iter().copied())
    }

    fn complex(n: usize, facets: &[&[usize]]) -> SimplicialComplex {
        SimplicialComplex::from_faces(n, facets.iter().map(|f| set(f))).unwrap()
    }

    #[test]
    fn stanley_reisner_examples() {
        assert_eq!(stanley_reisner(&sq(2, &[&[1, 2]])).unwrap().facets, vec![set(&[1]), set(&[2])]);
        let n4 = sq(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
        assert_eq!(stanley_reisner(&n4).unwrap().facets, vec![set(&[1, 2]), set(&[3, 4])]);
        let sfv = generate_family(3, &Family::SquarefreeVeronese { d: 2 }).unwrap();
        let c = stanley_reisner(&sfv).unwrap();
        assert_eq!(c.facets, vec![set(&[1]), set(&[2]), set(&[3])]);
        assert_eq!(c.dim(), 0);
    }

    #[test]
    fn stanley_reisner_rejects_non_squarefree() {
        let i = MonomialIdeal::new(2, [crate::Monomial::new(vec![2, 0])]).unwrap();
        assert!(matches!(stanley_reisner(&i), Err(Error::Domain(_))));
        assert!(matches!(stanley_reisner(&MonomialIdeal::unit(2)), Err(Error::Domain(_))));
    }

    #[test]
    fn homology_of_basic_complexes() {
        let q = FieldChoice::Rationals;
        assert_eq!(reduced_homology_ranks(&complex(2, &[&[1], &[2]]), q).unwrap(), vec![0, 1]);
        let circle = complex(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(reduced_homology_ranks(&circle, q).unwrap(), vec![0, 0, 1]);
        let simplex = complex(3, &[&[1, 2, 3]]);
        assert_eq!(reduced_homology_ranks(&simplex, q).unwrap(), vec![0, 0, 0, 0]);
        let empty = SimplicialComplex::from_faces(3, []).unwrap();
        assert_eq!(empty.dim(), -1);
        assert_eq!(reduced_homology_ranks(&empty, q).unwrap(), vec![1]);
    }

    #[test]
    fn projective_plane_torsion_shows_field_dependence() {
        // 6-vertex triangulation of RP^2
        let rp2 = complex(
            6,
            &[
                &[1, 2, 3], &[1, 3, 4], &[1, 4, 5], &[1, 5, 6], &[1, 2, 6],
                &[2, 3, 5], &[3, 4, 6], &[2, 4, 5], &[3, 5, 6], &[2, 4, 6],
            ],
        );
        let over_q = reduced_homology_ranks(&rp2, FieldChoice::Rationals).unwrap();
        let over_2 = reduced_homology_ranks(&rp2, FieldChoice::Prime(2)).unwrap();
        assert_eq!(over_q, vec![0, 0, 0, 0]);
        assert_eq!(over_2, vec![0, 0, 1, 1]);
    }

    #[test]
    fn pd_examples() {
        let q = FieldChoice::Rationals;
        let n4 = sq(4, &[&[1, 3], &[1, 4], &[2, 3], &[2, 4]]);
        let h = pd_depth(&n4, q).unwrap();
        assert_eq!((h.pd, h.depth, h.height, h.is_cm), (3, 1, 2, false));
        assert_eq!(h.betti_totals(), vec![1, 4, 4, 1]);

        let sfv = generate_family(3, &Family::SquarefreeVeronese { d: 2 }).unwrap();
        let h = pd_depth(&sfv, q).unwrap();
        assert_eq!((h.pd, h.height, h.is_cm), (2, 2, true));

        let h = pd_depth(&sq(1, &[&[1]]), q).unwrap();
        assert_eq!((h.pd, h.depth), (1, 0));
        assert_eq!(h.betti, vec![
            BettiEntry { i: 0, sigma: VarSet::empty(), value: 1 },
            BettiEntry { i: 1, sigma: set(&[1]), value: 1 },
        ]);
    }

    #[test]
    fn lattice_scan_matches_exhaustive_scan() {
        let n5 = sq(5, &[&[1, 3], &[1, 4], &[1, 5], &[2, 3], &[2, 4], &[2, 5]]);
        let a = pd_depth_with(&n5, FieldChoice::Rationals, MultidegreeScan::LcmLattice).unwrap();
        let b = pd_depth_with(&n5, FieldChoice::Rationals, MultidegreeScan::Exhaustive).unwrap();
        assert_eq!(a, b);
    }
}
