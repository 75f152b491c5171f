//! Graded pieces of `H_I^i(R)` from degree strands of the Čech complex.
//!
//! For a degree `α`, the piece `[R_{u_S}]_α` of the localization at the lcm
//! `u_S` of a set `S` of generators is one-dimensional exactly when every
//! variable with `α_j < 0` divides `u_S`, and zero otherwise. So the degree-α
//! strand only depends on the negative pattern `neg(α)`, and all graded
//! questions reduce to the `2^n` patterns.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{induced_with, sign, MatrixComplex, QMatrix};
use crate::sr::{SquareFreeIdeal, SrError, VarSet};

/// Generator count above which strand enumeration is refused.
pub const MAX_GENERATORS: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CechError {
    Ideal(SrError),
    TooManyGenerators(usize),
    VariableNotInPattern { var: usize },
}

impl From<SrError> for CechError {
    fn from(e: SrError) -> Self {
        CechError::Ideal(e)
    }
}

impl fmt::Display for CechError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CechError::Ideal(e) => e.fmt(f),
            CechError::TooManyGenerators(r) => {
                write!(
                    f,
                    "{r} generators exceeds the strand limit of {MAX_GENERATORS}"
                )
            }
            CechError::VariableNotInPattern { var } => {
                write!(f, "variable {} is not in the negative pattern", var + 1)
            }
        }
    }
}

/// The degree strand of the Čech complex for one negative pattern.
#[derive(Clone, Debug)]
pub struct StrandComplex {
    pub pattern: VarSet,
    pub ngens: usize,
    /// `bases[i]`: admissible generator subsets of size `i`, as bit masks.
    pub bases: Vec<Vec<u32>>,
    pub complex: MatrixComplex,
}

impl StrandComplex {
    /// Inclusion of this strand's basis at spot `i` into another strand
    /// whose admissible sets contain ours.
    fn inclusion_into(&self, other: &StrandComplex, i: usize) -> QMatrix {
        let (src, dst) = (&self.bases[i], &other.bases[i]);
        let mut m = QMatrix::zeros(dst.len(), src.len());
        for (c, s) in src.iter().enumerate() {
            let r = dst.binary_search(s).expect("admissible sets are nested");
            m.set(r, c, sign(false));
        }
        m
    }

    fn inclusions_into(&self, other: &StrandComplex) -> Vec<QMatrix> {
        (0..self.bases.len())
            .map(|i| self.inclusion_into(other, i))
            .collect()
    }
}

fn check_ideal(ideal: &SquareFreeIdeal) -> Result<(), CechError> {
    if ideal.is_unit() {
        return Err(SrError::UnitIdeal.into());
    }
    if ideal.is_zero() {
        return Err(SrError::ZeroIdeal.into());
    }
    if ideal.gens().len() > MAX_GENERATORS {
        return Err(CechError::TooManyGenerators(ideal.gens().len()));
    }
    Ok(())
}

/// Strand built on an explicit generator list (which need not be minimal).
pub fn strand_on(gens: &[VarSet], pattern: VarSet) -> Result<StrandComplex, CechError> {
    let r = gens.len();
    if r > MAX_GENERATORS {
        return Err(CechError::TooManyGenerators(r));
    }
    let mut unions = vec![VarSet::EMPTY; 1 << r];
    let mut bases: Vec<Vec<u32>> = vec![Vec::new(); r + 1];
    for mask in 0u32..(1u32 << r) {
        if mask != 0 {
            let low = mask.trailing_zeros() as usize;
            unions[mask as usize] = unions[(mask & (mask - 1)) as usize].union(gens[low]);
        }
        if pattern.is_subset(unions[mask as usize]) {
            bases[mask.count_ones() as usize].push(mask);
        }
    }
    let dims: Vec<usize> = bases.iter().map(Vec::len).collect();
    let mut diffs = Vec::with_capacity(r);
    for i in 0..r {
        let (src, dst) = (&bases[i], &bases[i + 1]);
        let mut d = QMatrix::zeros(dst.len(), src.len());
        for (c, &s) in src.iter().enumerate() {
            for t in 0..r {
                if s >> t & 1 == 1 {
                    continue;
                }
                let row = dst
                    .binary_search(&(s | 1 << t))
                    .expect("supersets stay admissible");
                let before = (s & ((1u32 << t) - 1)).count_ones();
                d.set(row, c, sign(before % 2 == 1));
            }
        }
        diffs.push(d);
    }
    let complex = MatrixComplex::new(dims, diffs).expect("Čech differentials square to zero");
    Ok(StrandComplex {
        pattern,
        ngens: r,
        bases,
        complex,
    })
}

/// The strand of the Čech complex on the minimal generators of `ideal`.
pub fn strand(ideal: &SquareFreeIdeal, pattern: VarSet) -> Result<StrandComplex, CechError> {
    check_ideal(ideal)?;
    strand_on(ideal.gens(), pattern)
}

/// `dim [H_I^i(R)]_α` for any `α` with `neg(α) = pattern`.
pub fn lc_dim(ideal: &SquareFreeIdeal, i: usize, pattern: VarSet) -> Result<usize, CechError> {
    let s = strand(ideal, pattern)?;
    Ok(s.complex.homology_dims().get(i).copied().unwrap_or(0))
}

/// Nonzero strand dimensions by cohomological index and pattern.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LcProfile {
    pub dims: BTreeMap<usize, Vec<(VarSet, usize)>>,
}

impl LcProfile {
    pub fn nonvanishing(&self) -> Vec<usize> {
        self.dims.keys().copied().collect()
    }
}

/// Every nonzero `dim [H_I^i(R)]_α`, over all `2^n` patterns.
pub fn lc_profile(ideal: &SquareFreeIdeal) -> Result<LcProfile, CechError> {
    check_ideal(ideal)?;
    let mut profile = LcProfile::default();
    for pattern in VarSet::full(ideal.nvars()).subsets() {
        let s = strand_on(ideal.gens(), pattern)?;
        for (i, d) in s.complex.homology_dims().into_iter().enumerate() {
            if d > 0 {
                profile.dims.entry(i).or_default().push((pattern, d));
            }
        }
    }
    Ok(profile)
}

/// The set of `i` with `H_I^i(R) != 0`, ascending.
pub fn lc_nonvanishing(ideal: &SquareFreeIdeal) -> Result<Vec<usize>, CechError> {
    Ok(lc_profile(ideal)?.nonvanishing())
}

/// Matrix of `x_j : [H^i]_α -> [H^i]_{α+e_j}` where `neg(α) = pattern` and
/// `α_j = -1`, so the target pattern is `pattern \ {j}`.
pub fn mult_map(
    ideal: &SquareFreeIdeal,
    i: usize,
    pattern: VarSet,
    j: usize,
) -> Result<QMatrix, CechError> {
    if !pattern.contains(j) {
        return Err(CechError::VariableNotInPattern { var: j });
    }
    let src = strand(ideal, pattern)?;
    let dst = strand(ideal, pattern.remove(j))?;
    if i >= src.complex.len() {
        return Ok(QMatrix::zeros(0, 0));
    }
    let maps = src.inclusions_into(&dst);
    Ok(
        crate::arith::induced_map_on_homology(&src.complex, &dst.complex, &maps, i)
            .expect("inclusion of strands is a chain map"),
    )
}

/// `dim Soc [H_I^i(R)]`, which is `μ^0(m, H_I^i(R))` for the graded maximal
/// ideal `m`.
///
/// Only the all-negative pattern can carry socle: in any other degree some
/// `x_j` acts by an isomorphism of strands.
pub fn socle_dim_at_max(ideal: &SquareFreeIdeal, i: usize) -> Result<usize, CechError> {
    let n = ideal.nvars();
    let full = VarSet::full(n);
    let src = strand(ideal, full)?;
    if i >= src.complex.len() {
        return Ok(0);
    }
    let hs = src.complex.homology(i).expect("spot in range");
    if hs.dim == 0 {
        return Ok(0);
    }
    let mut stacked = QMatrix::zeros(0, hs.dim);
    for j in 0..n {
        let dst = strand(ideal, full.remove(j))?;
        let hd = dst.complex.homology(i).expect("spot in range");
        let m = induced_with(&hs, &hd, &src.inclusion_into(&dst, i)).expect("shapes agree");
        stacked = stacked.vstack(&m);
    }
    Ok(hs.dim - stacked.rank())
}

/// Is `P_sigma` an associated prime of `H_I^i(R)`?
pub fn ass_contains(ideal: &SquareFreeIdeal, i: usize, sigma: VarSet) -> Result<bool, CechError> {
    match ideal.restrict_localize(sigma) {
        None => Ok(false),
        Some(local) => Ok(socle_dim_at_max(&local, i)? > 0),
    }
}

/// Monomial primes in the support of each `H_I^i(R)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SupportProfile {
    pub nvars: usize,
    pub supports: BTreeMap<usize, Vec<VarSet>>,
}

impl SupportProfile {
    /// `dim Supp H_I^i(R)`, or `None` when the module vanishes.
    pub fn dim(&self, i: usize) -> Option<usize> {
        self.supports
            .get(&i)?
            .iter()
            .map(|s| self.nvars - s.len())
            .max()
    }
}

/// `P_sigma ∈ Supp H_I^i(R)` iff `H^i` of the restriction to `sigma` is
/// nonzero.
pub fn support_profile(ideal: &SquareFreeIdeal) -> Result<SupportProfile, CechError> {
    check_ideal(ideal)?;
    let mut out = SupportProfile {
        nvars: ideal.nvars(),
        supports: BTreeMap::new(),
    };
    for sigma in VarSet::full(ideal.nvars()).subsets() {
        let Some(local) = ideal.restrict_localize(sigma) else {
            continue;
        };
        for i in lc_nonvanishing(&local)? {
            out.supports.entry(i).or_default().push(sigma);
        }
    }
    Ok(out)
}
