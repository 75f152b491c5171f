//! Square-free monomial ideals and their Stanley–Reisner complexes.
//!
//! Supports are bit sets over at most 64 variables; variable `j` (0-based) is
//! bit `j`. Ideals keep a name table so restrictions stay readable.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{sign, MatrixComplex, QMatrix};
use crate::poly::default_names;

/// A subset of `{0..n}` stored as a bit set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VarSet(pub u64);

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|j| j + 1)).finish()
    }
}

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> VarSet {
        assert!(n <= 64, "at most 64 variables");
        if n == 64 {
            VarSet(u64::MAX)
        } else {
            VarSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(j: usize) -> VarSet {
        VarSet(1 << j)
    }

    pub fn from_indices(idx: impl IntoIterator<Item = usize>) -> VarSet {
        VarSet(idx.into_iter().fold(0, |acc, j| acc | (1u64 << j)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, j: usize) -> bool {
        self.0 >> j & 1 == 1
    }

    pub fn is_subset(self, o: VarSet) -> bool {
        self.0 & !o.0 == 0
    }

    pub fn union(self, o: VarSet) -> VarSet {
        VarSet(self.0 | o.0)
    }

    pub fn intersection(self, o: VarSet) -> VarSet {
        VarSet(self.0 & o.0)
    }

    pub fn minus(self, o: VarSet) -> VarSet {
        VarSet(self.0 & !o.0)
    }

    pub fn insert(self, j: usize) -> VarSet {
        VarSet(self.0 | 1 << j)
    }

    pub fn remove(self, j: usize) -> VarSet {
        VarSet(self.0 & !(1 << j))
    }

    pub fn complement(self, n: usize) -> VarSet {
        VarSet::full(n).minus(self)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..64).filter(move |j| bits >> j & 1 == 1)
    }

    /// Sorted 1-based indices, the external representation.
    pub fn to_one_based(self) -> Vec<usize> {
        self.iter().map(|j| j + 1).collect()
    }

    /// Every subset of `self`, in increasing numeric order.
    pub fn subsets(self) -> impl Iterator<Item = VarSet> {
        let full = self.0;
        let mut cur: Option<u64> = Some(0);
        core::iter::from_fn(move || {
            let s = cur?;
            cur = if s == full {
                None
            } else {
                Some(s.wrapping_sub(full) & full)
            };
            Some(VarSet(s))
        })
    }

    /// Compresses the bits of `self` that lie in `onto` into positions
    /// `0..onto.len()`, preserving their order.
    pub fn compress(self, onto: VarSet) -> VarSet {
        let mut out = 0u64;
        for (k, j) in onto.iter().enumerate() {
            if self.contains(j) {
                out |= 1 << k;
            }
        }
        VarSet(out)
    }
}

/// Keeps only the inclusion-minimal sets, sorted and deduplicated.
pub fn minimalize(mut sets: Vec<VarSet>) -> Vec<VarSet> {
    sets.sort_by_key(|s| (s.len(), s.0));
    sets.dedup();
    let mut out: Vec<VarSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !out.iter().any(|t| t.is_subset(s)) {
            out.push(s);
        }
    }
    out.sort();
    out
}

/// Keeps only the inclusion-maximal sets, sorted and deduplicated.
pub fn maximalize(mut sets: Vec<VarSet>) -> Vec<VarSet> {
    sets.sort_by_key(|s| (core::cmp::Reverse(s.len()), s.0));
    sets.dedup();
    let mut out: Vec<VarSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !out.iter().any(|t| s.is_subset(*t)) {
            out.push(s);
        }
    }
    out.sort();
    out
}

/// Minimal transversals (hitting sets) of a family of sets.
///
/// A family containing the empty set has none; the empty family has the
/// single transversal `{}`.
pub fn minimal_transversals(family: &[VarSet]) -> Vec<VarSet> {
    let mut cur = vec![VarSet::EMPTY];
    for &g in family {
        let mut next = Vec::new();
        for &t in &cur {
            if !t.intersection(g).is_empty() {
                next.push(t);
            } else {
                next.extend(g.iter().map(|v| t.insert(v)));
            }
        }
        cur = minimalize(next);
    }
    cur
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SrError {
    UnitIdeal,
    ZeroIdeal,
    VarCountMismatch { left: usize, right: usize },
    TooManyVariables(usize),
    IndexOutOfRange { index: usize, n: usize },
    FaceNotInComplex(VarSet),
}

impl fmt::Display for SrError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SrError::UnitIdeal => f.write_str("operation needs a proper ideal, got the unit ideal"),
            SrError::ZeroIdeal => {
                f.write_str("operation needs a nonzero ideal, got the zero ideal")
            }
            SrError::VarCountMismatch { left, right } => {
                write!(f, "ideals live in {left} and {right} variables")
            }
            SrError::TooManyVariables(n) => write!(f, "{n} variables exceeds the limit of 64"),
            SrError::IndexOutOfRange { index, n } => {
                write!(f, "variable index {index} out of range 1..={n}")
            }
            SrError::FaceNotInComplex(s) => write!(f, "{s:?} is not a face of the complex"),
        }
    }
}

/// A square-free monomial ideal, stored by the supports of its minimal
/// generators.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct SquareFreeIdeal {
    n: usize,
    gens: Vec<VarSet>,
    names: Vec<String>,
}

impl SquareFreeIdeal {
    /// Minimalizes the given supports. An empty support makes the unit ideal.
    pub fn new(n: usize, gens: impl IntoIterator<Item = VarSet>) -> Result<Self, SrError> {
        Self::with_names(n, gens, default_names(n))
    }

    pub fn with_names(
        n: usize,
        gens: impl IntoIterator<Item = VarSet>,
        names: Vec<String>,
    ) -> Result<Self, SrError> {
        if n > 64 {
            return Err(SrError::TooManyVariables(n));
        }
        assert_eq!(names.len(), n, "one name per variable");
        let full = VarSet::full(n);
        let gens: Vec<VarSet> = gens.into_iter().collect();
        if let Some(bad) = gens.iter().find(|g| !g.is_subset(full)) {
            let index = bad.minus(full).iter().next().unwrap_or(0) + 1;
            return Err(SrError::IndexOutOfRange { index, n });
        }
        Ok(SquareFreeIdeal {
            n,
            gens: minimalize(gens),
            names,
        })
    }

    /// Convenience constructor from 1-based index lists.
    pub fn from_one_based(n: usize, gens: &[&[usize]]) -> Result<Self, SrError> {
        let mut sets = Vec::new();
        for g in gens {
            for &j in g.iter() {
                if j == 0 || j > n {
                    return Err(SrError::IndexOutOfRange { index: j, n });
                }
            }
            sets.push(VarSet::from_indices(g.iter().map(|j| j - 1)));
        }
        Self::new(n, sets)
    }

    /// The graded maximal ideal `(x_1, .., x_n)`.
    pub fn maximal(n: usize) -> Self {
        Self::new(n, (0..n).map(VarSet::singleton)).expect("valid")
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn gens(&self) -> &[VarSet] {
        &self.gens
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(|g| g.is_empty())
    }

    fn proper_nonzero(&self) -> Result<(), SrError> {
        if self.is_unit() {
            Err(SrError::UnitIdeal)
        } else if self.is_zero() {
            Err(SrError::ZeroIdeal)
        } else {
            Ok(())
        }
    }

    /// Does the monomial `x^s` lie in the ideal?
    pub fn contains_monomial(&self, s: VarSet) -> bool {
        self.gens.iter().any(|g| g.is_subset(s))
    }

    /// Does the prime `P_sigma` contain the ideal?
    pub fn contained_in_prime(&self, sigma: VarSet) -> bool {
        self.gens.iter().all(|g| !g.intersection(sigma).is_empty())
    }

    /// Supports of the minimal primes: the minimal vertex covers of the
    /// generator hypergraph.
    pub fn minimal_primes(&self) -> Result<Vec<VarSet>, SrError> {
        self.proper_nonzero()?;
        Ok(minimal_transversals(&self.gens))
    }

    pub fn height(&self) -> Result<usize, SrError> {
        Ok(self
            .minimal_primes()?
            .iter()
            .map(|p| p.len())
            .min()
            .unwrap_or(0))
    }

    pub fn is_pure(&self) -> Result<bool, SrError> {
        let p = self.minimal_primes()?;
        Ok(p.iter().all(|q| q.len() == p[0].len()))
    }

    fn same_n(&self, o: &Self) -> Result<(), SrError> {
        if self.n == o.n {
            Ok(())
        } else {
            Err(SrError::VarCountMismatch {
                left: self.n,
                right: o.n,
            })
        }
    }

    pub fn intersect(&self, o: &Self) -> Result<Self, SrError> {
        self.same_n(o)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|a| o.gens.iter().map(move |b| a.union(*b)));
        Self::with_names(self.n, gens.collect::<Vec<_>>(), self.names.clone())
    }

    pub fn sum(&self, o: &Self) -> Result<Self, SrError> {
        self.same_n(o)?;
        Self::with_names(
            self.n,
            self.gens.iter().chain(&o.gens).copied().collect::<Vec<_>>(),
            self.names.clone(),
        )
    }

    /// Localization at `P_sigma` followed by dropping the inverted
    /// variables: each support `G` becomes `G ∩ sigma`. Returns `None` when
    /// `P_sigma` does not contain the ideal (the restriction is the unit
    /// ideal).
    pub fn restrict_localize(&self, sigma: VarSet) -> Option<Self> {
        let gens: Vec<VarSet> = self.gens.iter().map(|g| g.intersection(sigma)).collect();
        if gens.iter().any(|g| g.is_empty()) {
            return None;
        }
        let names = sigma.iter().map(|j| self.names[j].clone()).collect();
        let compressed = gens
            .into_iter()
            .map(|g| g.compress(sigma))
            .collect::<Vec<_>>();
        Some(Self::with_names(sigma.len(), compressed, names).expect("subset of variables"))
    }

    /// Alexander dual: generated by the supports of the minimal primes.
    pub fn alexander_dual(&self) -> Result<Self, SrError> {
        let primes = self.minimal_primes()?;
        Self::with_names(self.n, primes, self.names.clone())
    }

    /// Same ideal with variables renamed by `perm` (old index -> new index).
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let gens = self
            .gens
            .iter()
            .map(|g| VarSet::from_indices(g.iter().map(|j| perm[j])));
        Self::new(self.n, gens.collect::<Vec<_>>()).expect("permutation keeps range")
    }

    /// Renders as `(x1*x2, x1*x5, ...)`.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self
            .gens
            .iter()
            .map(|g| {
                if g.is_empty() {
                    String::from("1")
                } else {
                    g.iter()
                        .map(|j| self.names[j].clone())
                        .collect::<Vec<_>>()
                        .join("*")
                }
            })
            .collect();
        alloc::format!("({})", parts.join(", "))
    }
}

impl fmt::Display for SquareFreeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// A simplicial complex on vertices `0..n`, given by its facets.
///
/// The void complex has no facets; the complex `{∅}` has the single facet
/// `∅`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VarSet>,
}

impl SimplicialComplex {
    pub fn new(n: usize, facets: impl IntoIterator<Item = VarSet>) -> Result<Self, SrError> {
        if n > 64 {
            return Err(SrError::TooManyVariables(n));
        }
        let facets: Vec<VarSet> = facets.into_iter().collect();
        if let Some(bad) = facets.iter().find(|f| !f.is_subset(VarSet::full(n))) {
            let index = bad.minus(VarSet::full(n)).iter().next().unwrap_or(0) + 1;
            return Err(SrError::IndexOutOfRange { index, n });
        }
        Ok(SimplicialComplex {
            n,
            facets: maximalize(facets),
        })
    }

    pub fn from_one_based(n: usize, facets: &[&[usize]]) -> Result<Self, SrError> {
        let mut sets = Vec::new();
        for f in facets {
            for &j in f.iter() {
                if j == 0 || j > n {
                    return Err(SrError::IndexOutOfRange { index: j, n });
                }
            }
            sets.push(VarSet::from_indices(f.iter().map(|j| j - 1)));
        }
        Self::new(n, sets)
    }

    pub fn simplex(n: usize) -> Self {
        SimplicialComplex {
            n,
            facets: vec![VarSet::full(n)],
        }
    }

    pub fn nvertices(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VarSet] {
        &self.facets
    }

    pub fn contains(&self, face: VarSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    /// Dimension, or `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        self.facets.iter().map(|f| f.len() as isize - 1).max()
    }

    pub fn is_pure(&self) -> bool {
        self.facets.iter().all(|f| f.len() == self.facets[0].len())
    }

    /// All faces, grouped by size (index `k` holds the faces with `k` vertices).
    pub fn faces_by_size(&self) -> Vec<Vec<VarSet>> {
        let top = self.facets.iter().map(|f| f.len()).max().unwrap_or(0);
        let mut all: Vec<VarSet> = self.facets.iter().flat_map(|f| f.subsets()).collect();
        all.sort();
        all.dedup();
        let mut by = vec![Vec::new(); if self.facets.is_empty() { 0 } else { top + 1 }];
        for f in all {
            by[f.len()].push(f);
        }
        by
    }

    pub fn link(&self, face: VarSet) -> Result<SimplicialComplex, SrError> {
        if !self.contains(face) {
            return Err(SrError::FaceNotInComplex(face));
        }
        let facets = self
            .facets
            .iter()
            .filter(|f| face.is_subset(**f))
            .map(|f| f.minus(face));
        SimplicialComplex::new(self.n, facets.collect::<Vec<_>>())
    }

    /// Induced subcomplex on the vertex set `w`.
    pub fn restrict(&self, w: VarSet) -> SimplicialComplex {
        if self.facets.is_empty() {
            return self.clone();
        }
        SimplicialComplex {
            n: self.n,
            facets: maximalize(self.facets.iter().map(|f| f.intersection(w)).collect()),
        }
    }

    /// Augmented chain complex written as a cochain complex so that spot `k`
    /// holds the faces of dimension `top - k`, ending with the empty face.
    pub fn reduced_chain_complex(&self) -> (MatrixComplex, isize) {
        let by = self.faces_by_size();
        if by.is_empty() {
            return (MatrixComplex::new(vec![0], vec![]).expect("trivial"), -1);
        }
        let top = by.len() - 1;
        let dims: Vec<usize> = (0..=top).rev().map(|k| by[k].len()).collect();
        let mut diffs = Vec::new();
        for k in (1..=top).rev() {
            // boundary from faces of size k to faces of size k-1
            let (src, dst) = (&by[k], &by[k - 1]);
            let mut m = QMatrix::zeros(dst.len(), src.len());
            for (c, f) in src.iter().enumerate() {
                for (pos, v) in f.iter().enumerate() {
                    let g = f.remove(v);
                    let r = dst.binary_search(&g).expect("faces closed under subsets");
                    m.set(r, c, sign(pos % 2 == 1));
                }
            }
            diffs.push(m);
        }
        (
            MatrixComplex::new(dims, diffs).expect("boundary squares to zero"),
            top as isize - 1,
        )
    }

    /// Dimension of reduced homology `H̃_i(Δ; Q)`, for `i >= -1`.
    pub fn reduced_homology_dim(&self, i: isize) -> usize {
        let (c, top_dim) = self.reduced_chain_complex();
        if self.facets.is_empty() || i > top_dim || i < -1 {
            return 0;
        }
        let spot = (top_dim - i) as usize;
        c.homology_dims()[spot]
    }

    pub fn is_connected(&self) -> bool {
        self.reduced_homology_dim(0) == 0
    }

    /// Reisner's criterion over Q: every link (including the complex itself)
    /// has vanishing reduced homology below its dimension.
    pub fn is_cohen_macaulay(&self) -> bool {
        let by = self.faces_by_size();
        by.iter().flatten().all(|&face| {
            let lk = self.link(face).expect("face of the complex");
            let d = lk.dim().unwrap_or(-1);
            (-1..d).all(|i| lk.reduced_homology_dim(i) == 0)
        })
    }

    /// Serre's condition S2 combinatorially: pure, and the link of every face
    /// of dimension at most `dim - 2` is connected.
    pub fn is_s2(&self) -> bool {
        if !self.is_pure() {
            return false;
        }
        let Some(d) = self.dim() else { return true };
        self.faces_by_size()
            .iter()
            .flatten()
            .filter(|f| f.len() as isize - 1 <= d - 2)
            .all(|&f| self.link(f).expect("face").is_connected())
    }

    pub fn relabel(&self, perm: &[usize]) -> Self {
        let facets = self
            .facets
            .iter()
            .map(|f| VarSet::from_indices(f.iter().map(|j| perm[j])));
        SimplicialComplex::new(self.n, facets.collect::<Vec<_>>()).expect("permutation")
    }
}

/// Stanley–Reisner ideal: generated by the minimal non-faces.
pub fn ideal_from_complex(c: &SimplicialComplex) -> SquareFreeIdeal {
    let complements: Vec<VarSet> = c.facets.iter().map(|f| f.complement(c.n)).collect();
    SquareFreeIdeal::new(c.n, minimal_transversals(&complements)).expect("in range")
}

/// Stanley–Reisner complex: facets are the complements of minimal primes.
/// The unit ideal gives the void complex and the zero ideal the simplex.
pub fn complex_from_ideal(i: &SquareFreeIdeal) -> SimplicialComplex {
    let covers = minimal_transversals(&i.gens);
    SimplicialComplex::new(
        i.n,
        covers
            .into_iter()
            .map(|p| p.complement(i.n))
            .collect::<Vec<_>>(),
    )
    .expect("in range")
}
