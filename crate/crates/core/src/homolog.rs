//! Ext modules, homological invariants of `R/I`, and Bass numbers of local
//! cohomology at monomial primes.
//!
//! `μ^p(P_σ, H_I^i(R))` is computed on the restriction `I'` of `I` to the
//! variables in `σ` (the others set to one), in `R' = Q[x_j : j ∈ σ]`, as
//! `dim [Ext^{|σ|-p}(Ext^i(R'/I', R'), R')]_0`. Ext is taken against the ring
//! itself; the canonical twist would shift both Ext modules by opposite
//! amounts and cancels in degree zero.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cech::{self, CechError};
use crate::groebner::{
    buchberger, minimal_free_resolution, subquotient_presentation, FreeComplex, GroebnerError,
    PresentedModule,
};
use crate::poly::{FreeModule, ModuleOrder, Monomial, MultiDegree};
use crate::sr::{complex_from_ideal, minimal_transversals, SquareFreeIdeal, SrError, VarSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomologError {
    Ideal(SrError),
    Groebner(GroebnerError),
    Cech(CechError),
    /// Bass index above the number of variables of the localization.
    BassIndexOutOfRange {
        p: usize,
        max: usize,
    },
    /// The Čech socle and the double-Ext formula disagree on `μ^0`.
    OracleDisagreement {
        sigma: VarSet,
        i: usize,
        cech: usize,
        double_ext: usize,
    },
}

impl From<SrError> for HomologError {
    fn from(e: SrError) -> Self {
        HomologError::Ideal(e)
    }
}

impl From<GroebnerError> for HomologError {
    fn from(e: GroebnerError) -> Self {
        HomologError::Groebner(e)
    }
}

impl From<CechError> for HomologError {
    fn from(e: CechError) -> Self {
        HomologError::Cech(e)
    }
}

impl fmt::Display for HomologError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomologError::Ideal(e) => e.fmt(f),
            HomologError::Groebner(e) => e.fmt(f),
            HomologError::Cech(e) => e.fmt(f),
            HomologError::BassIndexOutOfRange { p, max } => {
                write!(f, "Bass index {p} exceeds the localized dimension {max}")
            }
            HomologError::OracleDisagreement {
                sigma,
                i,
                cech,
                double_ext,
            } => write!(
                f,
                "mu^0 at {:?} for H^{i}: Čech socle gives {cech}, double Ext gives {double_ext}",
                sigma.to_one_based()
            ),
        }
    }
}

fn proper_nonzero(ideal: &SquareFreeIdeal) -> Result<(), HomologError> {
    if ideal.is_unit() {
        Err(SrError::UnitIdeal.into())
    } else if ideal.is_zero() {
        Err(SrError::ZeroIdeal.into())
    } else {
        Ok(())
    }
}

fn length_cap(nvars: usize) -> usize {
    nvars + 1
}

/// `R/I` presented by the monomial generators of `I`.
pub fn quotient_ring(ideal: &SquareFreeIdeal) -> PresentedModule {
    let n = ideal.nvars();
    let mons: Vec<Monomial> = ideal
        .gens()
        .iter()
        .map(|g| Monomial((0..n).map(|j| u32::from(g.contains(j))).collect()))
        .collect();
    PresentedModule::monomial_quotient(n, &mons)
}

/// Minimal free resolution of `R/I`.
pub fn resolution(ideal: &SquareFreeIdeal) -> Result<FreeComplex, HomologError> {
    Ok(minimal_free_resolution(
        &quotient_ring(ideal),
        length_cap(ideal.nvars()),
    )?)
}

/// `Ext^k(M, R)` from a free resolution of `M`, as the cohomology of the dual
/// complex presented on kernel generators; minimally presented.
pub fn ext_from_resolution(res: &FreeComplex, k: usize) -> Result<PresentedModule, HomologError> {
    let nvars = res.modules[0].nvars;
    let Some(here) = res.modules.get(k) else {
        return Ok(PresentedModule::free(FreeModule::new(nvars, Vec::new())));
    };
    let ambient = here.dual();
    let kernel = match res.maps.get(k) {
        Some(f) => f.dual().kernel()?,
        None => (0..ambient.rank())
            .map(|t| crate::poly::FreeElement::basis(t, nvars))
            .collect(),
    };
    let image = match k.checked_sub(1) {
        Some(prev) => res.maps[prev].dual().columns,
        None => Vec::new(),
    };
    Ok(subquotient_presentation(&ambient, &kernel, &image)?.minimal_presentation())
}

/// `Ext^k(R/I, R)`.
pub fn ext_module(ideal: &SquareFreeIdeal, k: usize) -> Result<PresentedModule, HomologError> {
    proper_nonzero(ideal)?;
    ext_from_resolution(&resolution(ideal)?, k)
}

/// `Ext^k(M, R)` for a presented module.
pub fn ext_against_ring(m: &PresentedModule, k: usize) -> Result<PresentedModule, HomologError> {
    let res = minimal_free_resolution(m, length_cap(m.nvars()))?;
    ext_from_resolution(&res, k)
}

/// `dim [Ext^k(M, R)]_alpha` from a resolution of `M`, via the degree strand
/// of the dual complex.
pub fn ext_dim_at(res: &FreeComplex, k: usize, alpha: &MultiDegree) -> usize {
    res.dual_strand(alpha)
        .homology_dims()
        .get(k)
        .copied()
        .unwrap_or(0)
}

/// Projective dimension of `R/I`: the length of its minimal resolution.
pub fn pdim(ideal: &SquareFreeIdeal) -> Result<usize, HomologError> {
    proper_nonzero(ideal)?;
    Ok(resolution(ideal)?.length().expect("R/I is nonzero"))
}

/// `depth R/I = n - pdim R/I`.
pub fn depth_ri(ideal: &SquareFreeIdeal) -> Result<usize, HomologError> {
    Ok(ideal.nvars() - pdim(ideal)?)
}

/// `depth R/I` from the local cohomology of the Stanley–Reisner ring:
/// `H_m^i(R/I) != 0` iff some face `F` has `H~_{i-|F|-1}(lk F) != 0`.
pub fn depth_from_links(ideal: &SquareFreeIdeal) -> Result<usize, HomologError> {
    proper_nonzero(ideal)?;
    let delta = complex_from_ideal(ideal);
    let mut best = usize::MAX;
    for face in delta.faces_by_size().into_iter().flatten() {
        let lk = delta.link(face)?;
        let top = lk.dim().unwrap_or(-1);
        if let Some(j) = (-1..=top).find(|&j| lk.reduced_homology_dim(j) != 0) {
            best = best.min((j + face.len() as isize + 1) as usize);
        }
    }
    Ok(best)
}

/// Krull dimension of a presented module, or `None` for the zero module.
///
/// The initial module has the same Hilbert function; in each component its
/// lead monomials generate a monomial ideal whose quotient has dimension `n`
/// minus the smallest cover of their supports.
pub fn krull_dim(m: &PresentedModule) -> Result<Option<usize>, HomologError> {
    let n = m.nvars();
    let gb = buchberger(&m.module, &m.relations, ModuleOrder::Pot)?;
    let mut best: Option<usize> = None;
    for t in 0..m.module.rank() {
        let supports: Vec<VarSet> = gb
            .leads()
            .iter()
            .filter(|(c, _)| *c == t)
            .map(|(_, mon)| {
                VarSet::from_indices(
                    mon.0
                        .iter()
                        .enumerate()
                        .filter(|(_, &e)| e > 0)
                        .map(|(j, _)| j),
                )
            })
            .collect();
        if supports.iter().any(|s| s.is_empty()) {
            continue;
        }
        let cover = minimal_transversals(&supports)
            .iter()
            .map(|s| s.len())
            .min()
            .unwrap_or(0);
        best = best.max(Some(n - cover));
    }
    Ok(best)
}

/// Cohen–Macaulay test: `pdim R/I = height I`.
pub fn is_cm(ideal: &SquareFreeIdeal) -> Result<bool, HomologError> {
    Ok(pdim(ideal)? == ideal.height()?)
}

/// Reisner's criterion on the Stanley–Reisner complex.
pub fn is_cm_reisner(ideal: &SquareFreeIdeal) -> Result<bool, HomologError> {
    proper_nonzero(ideal)?;
    Ok(complex_from_ideal(ideal).is_cohen_macaulay())
}

/// Serre's S2 on the Stanley–Reisner complex: pure with connected links of
/// faces of codimension at least two.
pub fn is_s2(ideal: &SquareFreeIdeal) -> Result<bool, HomologError> {
    proper_nonzero(ideal)?;
    Ok(complex_from_ideal(ideal).is_s2())
}

/// S2 from Ext dimensions: `dim Ext^i(R/I, R) <= n - i - 2` for every
/// `i > height I`.
pub fn is_s2_by_ext(ideal: &SquareFreeIdeal) -> Result<bool, HomologError> {
    proper_nonzero(ideal)?;
    let n = ideal.nvars() as isize;
    let res = resolution(ideal)?;
    let d = ideal.height()?;
    for i in d + 1..res.modules.len() {
        if let Some(dim) = krull_dim(&ext_from_resolution(&res, i)?)? {
            if dim as isize > n - i as isize - 2 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Which path produced a Bass number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BassSource {
    DoubleExt,
    CechSocle,
}

impl BassSource {
    pub fn tag(self) -> &'static str {
        match self {
            BassSource::DoubleExt => "double-ext",
            BassSource::CechSocle => "cech-socle",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BassCell {
    pub sigma: VarSet,
    pub i: usize,
    pub p: usize,
    pub value: usize,
    pub source: BassSource,
}

/// Bass numbers `μ^p(P_σ, H_I^i(R))`, sorted by the index list of `σ`, then
/// `i`, then `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BassTable {
    pub ideal: SquareFreeIdeal,
    pub cells: Vec<BassCell>,
}

impl BassTable {
    pub fn get(&self, sigma: VarSet, i: usize, p: usize) -> Option<usize> {
        self.cells
            .iter()
            .find(|c| c.sigma == sigma && c.i == i && c.p == p)
            .map(|c| c.value)
    }
}

/// Resolution data for one localized ideal.
#[derive(Clone, Debug)]
struct Local {
    ring: FreeComplex,
    /// Resolution of `Ext^i(R/I, R)`, or `None` when that module vanishes.
    exts: BTreeMap<usize, Option<FreeComplex>>,
}

/// Memoizes resolutions across Bass number queries on related ideals.
#[derive(Clone, Debug, Default)]
pub struct BassEngine {
    cache: BTreeMap<(usize, Vec<VarSet>), Local>,
}

impl BassEngine {
    pub fn new() -> Self {
        Self::default()
    }

    fn local(&mut self, ideal: &SquareFreeIdeal) -> Result<&mut Local, HomologError> {
        let key = (ideal.nvars(), ideal.gens().to_vec());
        if !self.cache.contains_key(&key) {
            let ring = resolution(ideal)?;
            self.cache.insert(
                key.clone(),
                Local {
                    ring,
                    exts: BTreeMap::new(),
                },
            );
        }
        Ok(self.cache.get_mut(&key).expect("just inserted"))
    }

    /// Minimal resolution of `R/I`.
    pub fn ring_resolution(
        &mut self,
        ideal: &SquareFreeIdeal,
    ) -> Result<&FreeComplex, HomologError> {
        proper_nonzero(ideal)?;
        Ok(&self.local(ideal)?.ring)
    }

    fn ext_resolution(
        &mut self,
        ideal: &SquareFreeIdeal,
        i: usize,
    ) -> Result<Option<&FreeComplex>, HomologError> {
        let cap = length_cap(ideal.nvars());
        let local = self.local(ideal)?;
        if !local.exts.contains_key(&i) {
            let ext = ext_from_resolution(&local.ring, i)?;
            let res = if ext.module.rank() == 0 {
                None
            } else {
                Some(minimal_free_resolution(&ext, cap)?)
            };
            local.exts.insert(i, res);
        }
        Ok(local.exts[&i].as_ref())
    }

    /// `μ^p(m, H_I^i(R))` for the graded maximal ideal, by the double-Ext
    /// formula.
    pub fn bass_at_max(
        &mut self,
        ideal: &SquareFreeIdeal,
        i: usize,
        p: usize,
    ) -> Result<usize, HomologError> {
        proper_nonzero(ideal)?;
        let n = ideal.nvars();
        if p > n {
            return Err(HomologError::BassIndexOutOfRange { p, max: n });
        }
        let zero = MultiDegree::zero(n);
        Ok(self
            .ext_resolution(ideal, i)?
            .map_or(0, |res| ext_dim_at(res, n - p, &zero)))
    }

    /// `μ^p(P_σ, H_I^i(R))` by the double-Ext formula on the restriction.
    pub fn bass_number(
        &mut self,
        ideal: &SquareFreeIdeal,
        sigma: VarSet,
        i: usize,
        p: usize,
    ) -> Result<usize, HomologError> {
        proper_nonzero(ideal)?;
        if p > sigma.len() {
            return Err(HomologError::BassIndexOutOfRange {
                p,
                max: sigma.len(),
            });
        }
        match ideal.restrict_localize(sigma) {
            None => Ok(0),
            Some(local) => self.bass_at_max(&local, i, p),
        }
    }

    /// `μ^p(P_σ, H_I^i(R))` for `p = 0..=|σ|` from one dual strand.
    pub fn bass_row(
        &mut self,
        ideal: &SquareFreeIdeal,
        sigma: VarSet,
        i: usize,
    ) -> Result<Vec<usize>, HomologError> {
        proper_nonzero(ideal)?;
        let width = sigma.len() + 1;
        let Some(local) = ideal.restrict_localize(sigma) else {
            return Ok(vec![0; width]);
        };
        let n = local.nvars();
        let Some(res) = self.ext_resolution(&local, i)? else {
            return Ok(vec![0; width]);
        };
        let h = res.dual_strand(&MultiDegree::zero(n)).homology_dims();
        Ok((0..=n)
            .map(|p| h.get(n - p).copied().unwrap_or(0))
            .collect())
    }

    /// `μ^0(P_σ, H_I^i(R))` from both paths; an error if they differ.
    pub fn checked_mu0(
        &mut self,
        ideal: &SquareFreeIdeal,
        sigma: VarSet,
        i: usize,
    ) -> Result<usize, HomologError> {
        let double_ext = self.bass_number(ideal, sigma, i, 0)?;
        let cech = match ideal.restrict_localize(sigma) {
            None => 0,
            Some(local) => cech::socle_dim_at_max(&local, i)?,
        };
        if cech != double_ext {
            return Err(HomologError::OracleDisagreement {
                sigma,
                i,
                cech,
                double_ext,
            });
        }
        Ok(cech)
    }

    /// Fills a table. Cells with `p = 0` come from the Čech socle; with
    /// `check_oracles` they are also computed by double Ext and compared.
    pub fn bass_table(
        &mut self,
        ideal: &SquareFreeIdeal,
        sigmas: &[VarSet],
        is: &[usize],
        ps: &[usize],
        check_oracles: bool,
    ) -> Result<BassTable, HomologError> {
        proper_nonzero(ideal)?;
        let mut cells = Vec::new();
        for &sigma in sigmas {
            for &i in is {
                for &p in ps {
                    if p > sigma.len() {
                        continue;
                    }
                    let (value, source) = if p == 0 {
                        let v = if check_oracles {
                            self.checked_mu0(ideal, sigma, i)?
                        } else {
                            match ideal.restrict_localize(sigma) {
                                None => 0,
                                Some(local) => cech::socle_dim_at_max(&local, i)?,
                            }
                        };
                        (v, BassSource::CechSocle)
                    } else {
                        (self.bass_number(ideal, sigma, i, p)?, BassSource::DoubleExt)
                    };
                    cells.push(BassCell {
                        sigma,
                        i,
                        p,
                        value,
                        source,
                    });
                }
            }
        }
        cells.sort_by(|a, b| {
            (a.sigma.to_one_based(), a.i, a.p).cmp(&(b.sigma.to_one_based(), b.i, b.p))
        });
        cells.dedup_by(|a, b| a.sigma == b.sigma && a.i == b.i && a.p == b.p);
        Ok(BassTable {
            ideal: ideal.clone(),
            cells,
        })
    }
}

/// `μ^p(P_σ, H_I^i(R))`.
pub fn bass_number(
    ideal: &SquareFreeIdeal,
    sigma: VarSet,
    i: usize,
    p: usize,
) -> Result<usize, HomologError> {
    BassEngine::new().bass_number(ideal, sigma, i, p)
}

/// The same Bass number through presented modules: present
/// `Ext^{|σ|-p}(Ext^i(R'/I', R'), R')` and take its degree-zero dimension.
pub fn bass_number_presented(
    ideal: &SquareFreeIdeal,
    sigma: VarSet,
    i: usize,
    p: usize,
) -> Result<usize, HomologError> {
    proper_nonzero(ideal)?;
    if p > sigma.len() {
        return Err(HomologError::BassIndexOutOfRange {
            p,
            max: sigma.len(),
        });
    }
    let Some(local) = ideal.restrict_localize(sigma) else {
        return Ok(0);
    };
    let n = local.nvars();
    let inner = ext_module(&local, i)?;
    if inner.module.rank() == 0 {
        return Ok(0);
    }
    let outer = ext_against_ring(&inner, n - p)?;
    Ok(outer.graded_dim_at(&MultiDegree::zero(n)))
}

/// Monomial primes `P_σ` containing `I`, ordered by size then index list.
pub fn primes_containing(ideal: &SquareFreeIdeal) -> Vec<VarSet> {
    let mut out: Vec<VarSet> = VarSet::full(ideal.nvars())
        .subsets()
        .filter(|&s| ideal.contained_in_prime(s))
        .collect();
    out.sort_by_key(|s| (s.len(), s.to_one_based()));
    out
}

/// Associated monomial primes of `H_I^i(R)`, by the Čech socle.
pub fn ass_of_lc(ideal: &SquareFreeIdeal, i: usize) -> Result<Vec<VarSet>, HomologError> {
    proper_nonzero(ideal)?;
    let mut out = Vec::new();
    for sigma in primes_containing(ideal) {
        if cech::ass_contains(ideal, i, sigma)? {
            out.push(sigma);
        }
    }
    Ok(out)
}

/// Hypotheses of the structure theorems, computed for one ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisReport {
    pub n: usize,
    pub height: usize,
    pub pure: bool,
    pub codim_gap: usize,
    pub dim: usize,
    pub cm: bool,
    pub s2: bool,
    pub depth: usize,
    pub pdim: usize,
    pub minimal_primes: Vec<VarSet>,
}

/// Computes every field; `pdim + depth = n` is checked against the depth
/// read off the links.
pub fn hypothesis_report(ideal: &SquareFreeIdeal) -> Result<HypothesisReport, HomologError> {
    proper_nonzero(ideal)?;
    let n = ideal.nvars();
    let height = ideal.height()?;
    let pdim = pdim(ideal)?;
    let depth = depth_from_links(ideal)?;
    assert_eq!(
        pdim + depth,
        n,
        "Auslander–Buchsbaum fails for {}",
        ideal.render()
    );
    let dim = krull_dim(&quotient_ring(ideal))?.expect("R/I is nonzero");
    Ok(HypothesisReport {
        n,
        height,
        pure: ideal.is_pure()?,
        codim_gap: n - height,
        dim,
        cm: pdim == height,
        s2: is_s2(ideal)?,
        depth,
        pdim,
        minimal_primes: ideal.minimal_primes()?,
    })
}

/// Smallest `i` with `Ext^i(R/I, R) != 0`.
pub fn grade(ideal: &SquareFreeIdeal) -> Result<usize, HomologError> {
    proper_nonzero(ideal)?;
    let res = resolution(ideal)?;
    for i in 0..res.modules.len() {
        if ext_from_resolution(&res, i)?.module.rank() > 0 {
            return Ok(i);
        }
    }
    unreachable!("Ext^pdim(R/I, R) is nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(n: usize, gens: &[&[usize]]) -> SquareFreeIdeal {
        SquareFreeIdeal::from_one_based(n, gens).unwrap()
    }

    fn vs(idx: &[usize]) -> VarSet {
        VarSet::from_indices(idx.iter().map(|j| j - 1))
    }

    fn alexandra() -> SquareFreeIdeal {
        ideal(
            6,
            &[
                &[1, 2],
                &[1, 5],
                &[2, 4, 5],
                &[3, 4, 5],
                &[1, 6],
                &[2, 3, 6],
                &[3, 4, 6],
                &[2, 5, 6],
            ],
        )
    }

    fn two_planes(n: usize) -> SquareFreeIdeal {
        ideal(n, &[&[1], &[2]])
            .intersect(&ideal(n, &[&[3], &[4]]))
            .unwrap()
    }

    #[test]
    fn ext_zero_and_top() {
        let i = ideal(2, &[&[1]]);
        assert_eq!(ext_module(&i, 0).unwrap().module.rank(), 0);
        let m = SquareFreeIdeal::maximal(3);
        let e = ext_module(&m, 3).unwrap();
        assert_eq!(e.module.rank(), 1);
        assert_eq!(e.graded_dim_at(&MultiDegree(vec![-1, -1, -1])), 1);
        assert_eq!(e.graded_dim_at(&MultiDegree(vec![0, -1, -1])), 0);
    }

    #[test]
    fn alexandra_invariants() {
        let a = alexandra();
        assert_eq!(pdim(&a).unwrap(), 4);
        assert_eq!(depth_ri(&a).unwrap(), 2);
        assert_eq!(depth_from_links(&a).unwrap(), 2);
        assert_eq!(krull_dim(&quotient_ring(&a)).unwrap(), Some(3));
        assert!(is_s2(&a).unwrap());
        assert!(is_s2_by_ext(&a).unwrap());
        assert!(!is_cm(&a).unwrap());
        assert!(!is_cm_reisner(&a).unwrap());
        assert!(ext_module(&a, 3).unwrap().module.rank() > 0);
        assert_eq!(grade(&a).unwrap(), 3);
    }

    #[test]
    fn alexandra_headline_bass_number() {
        let a = alexandra();
        let full = VarSet::full(6);
        assert_eq!(bass_number(&a, full, 3, 2).unwrap(), 1);
        assert_eq!(bass_number_presented(&a, full, 3, 2).unwrap(), 1);
    }

    #[test]
    fn maximal_ideal_is_injective() {
        for n in 1..=3 {
            let m = SquareFreeIdeal::maximal(n);
            let full = VarSet::full(n);
            assert_eq!(bass_number(&m, full, n, 0).unwrap(), 1);
            for p in 1..=n {
                assert_eq!(bass_number(&m, full, n, p).unwrap(), 0);
            }
            assert!(is_cm(&m).unwrap());
            assert_eq!(pdim(&m).unwrap(), n);
            assert_eq!(depth_ri(&m).unwrap(), 0);
            assert_eq!(ass_of_lc(&m, n).unwrap(), vec![full]);
        }
    }

    #[test]
    fn two_planes_in_five_variables() {
        let i = two_planes(5);
        let sigma = vs(&[1, 2, 3, 4]);
        let mut e = BassEngine::new();
        assert_eq!(e.bass_number(&i, sigma, 2, 2).unwrap(), 2);
        assert_eq!(e.bass_number(&i, sigma, 3, 0).unwrap(), 1);
        assert_eq!(e.checked_mu0(&i, sigma, 3).unwrap(), 1);
        assert_eq!(e.bass_row(&i, sigma, 2).unwrap()[..3], [0, 0, 2]);
        assert_eq!(bass_number_presented(&i, sigma, 2, 2).unwrap(), 2);
    }

    #[test]
    fn bass_index_range() {
        assert_eq!(
            bass_number(&two_planes(5), vs(&[1, 3]), 2, 3).unwrap_err(),
            HomologError::BassIndexOutOfRange { p: 3, max: 2 }
        );
        // P_σ not containing I
        assert_eq!(bass_number(&two_planes(5), vs(&[1, 5]), 2, 0).unwrap(), 0);
    }

    #[test]
    fn mayer_vietoris_h4_has_no_associated_primes() {
        let i = ideal(6, &[&[1], &[2], &[3]])
            .intersect(&ideal(6, &[&[4], &[5], &[6]]))
            .unwrap();
        assert!(ass_of_lc(&i, 4).unwrap().is_empty());
        let r = hypothesis_report(&i).unwrap();
        assert_eq!((r.n, r.height, r.pure, r.codim_gap), (6, 3, true, 3));
    }

    #[test]
    fn reports() {
        let r = hypothesis_report(&alexandra()).unwrap();
        assert_eq!(
            (
                r.n,
                r.height,
                r.pure,
                r.codim_gap,
                r.cm,
                r.s2,
                r.depth,
                r.pdim,
                r.dim
            ),
            (6, 3, true, 3, false, true, 2, 4, 3)
        );
        assert_eq!(r.minimal_primes.len(), 6);
        let r = hypothesis_report(&ideal(3, &[&[1]])).unwrap();
        assert_eq!((r.height, r.pure, r.cm), (1, true, true));
    }

    #[test]
    fn hollow_triangle_is_cm() {
        let i = ideal(3, &[&[1, 2, 3]]);
        assert!(is_cm(&i).unwrap());
        assert!(is_cm_reisner(&i).unwrap());
    }

    #[test]
    fn table_layout() {
        let i = two_planes(4);
        let mut e = BassEngine::new();
        let sigmas = primes_containing(&i);
        let t = e.bass_table(&i, &sigmas, &[2, 3], &[0, 1], true).unwrap();
        assert_eq!(t.get(vs(&[1, 2]), 2, 0), Some(1));
        assert_eq!(t.get(VarSet::full(4), 3, 0), Some(1));
        assert_eq!(t.get(vs(&[1, 2, 3]), 2, 1), Some(1));
        let keys: Vec<_> = t
            .cells
            .iter()
            .map(|c| (c.sigma.to_one_based(), c.i, c.p))
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn krull_dims() {
        assert_eq!(
            krull_dim(&PresentedModule::free(FreeModule::new(2, vec![]))).unwrap(),
            None
        );
        assert_eq!(
            krull_dim(&quotient_ring(&ideal(3, &[&[1, 2]]))).unwrap(),
            Some(2)
        );
    }
}
