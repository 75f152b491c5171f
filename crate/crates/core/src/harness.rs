//! Mechanical checks of the structure theorems for Bass numbers of
//! `H_I^d(R)` on single ideals, and the exhaustive corpus of small pure
//! complexes they are run on.
//!
//! Every check states its hypotheses. A check whose hypotheses fail is
//! skipped with the reason; a failing check carries the cells that broke it.
//! All `μ^0` values go through both the Čech socle and the double-Ext path.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cech::{lc_nonvanishing, support_profile, SupportProfile};
use crate::homolog::{
    hypothesis_report, primes_containing, BassEngine, HomologError, HypothesisReport,
};
use crate::sr::{ideal_from_complex, SimplicialComplex, SquareFreeIdeal, VarSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped => "skipped",
        }
    }
}

/// The relation a witnessed value was required to satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    Eq(i64),
    Ne(i64),
    Le(i64),
}

impl Expectation {
    pub fn holds(self, got: i64) -> bool {
        match self {
            Expectation::Eq(v) => got == v,
            Expectation::Ne(v) => got != v,
            Expectation::Le(v) => got <= v,
        }
    }

    pub fn op(self) -> &'static str {
        match self {
            Expectation::Eq(_) => "eq",
            Expectation::Ne(_) => "ne",
            Expectation::Le(_) => "le",
        }
    }

    pub fn value(self) -> i64 {
        match self {
            Expectation::Eq(v) | Expectation::Ne(v) | Expectation::Le(v) => v,
        }
    }
}

/// Which quantity a witness reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quantity {
    /// `μ^p(P_σ, H_I^i(R))`.
    Bass,
    /// `dim Supp H_I^i(R)`, `-1` for the zero module.
    SupportDim,
    /// Largest `p` with `μ^p(P_τ, H_I^i(R)) != 0` over monomial primes, `-1`
    /// for the zero module.
    GradedInjectiveDim,
    /// `idim_R H_I^i(R)`, `-1` for the zero module.
    InjectiveDim,
    /// Truth value (0 or 1) of the numbered statement `p`.
    Statement,
}

impl Quantity {
    pub fn as_str(self) -> &'static str {
        match self {
            Quantity::Bass => "mu",
            Quantity::SupportDim => "dim-supp",
            Quantity::GradedInjectiveDim => "graded-idim",
            Quantity::InjectiveDim => "idim",
            Quantity::Statement => "statement",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub quantity: Quantity,
    pub sigma: VarSet,
    pub i: usize,
    pub p: usize,
    pub expected: Expectation,
    pub got: i64,
}

impl Witness {
    pub fn holds(&self) -> bool {
        self.expected.holds(self.got)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub hypotheses_satisfied: bool,
    pub verdict: Verdict,
    /// Failing cells, plus the defining values of single-cell checks.
    pub witnesses: Vec<Witness>,
    pub cells_checked: usize,
    pub skip_reason: Option<String>,
    pub assumptions: Vec<String>,
}

impl Check {
    fn skipped(name: &str, reason: &str) -> Check {
        Check {
            name: name.to_string(),
            hypotheses_satisfied: false,
            verdict: Verdict::Skipped,
            witnesses: Vec::new(),
            cells_checked: 0,
            skip_reason: Some(reason.to_string()),
            assumptions: Vec::new(),
        }
    }
}

/// Collects cells of one check.
struct Cells {
    name: &'static str,
    witnesses: Vec<Witness>,
    checked: usize,
    assumptions: Vec<String>,
}

impl Cells {
    fn new(name: &'static str) -> Self {
        Cells {
            name,
            witnesses: Vec::new(),
            checked: 0,
            assumptions: Vec::new(),
        }
    }

    /// Records a cell; kept as a witness when it fails or when `keep`.
    fn cell(&mut self, w: Witness, keep: bool) {
        self.checked += 1;
        if keep || !w.holds() {
            self.witnesses.push(w);
        }
    }

    fn finish(self) -> Check {
        let failed = self.witnesses.iter().any(|w| !w.holds());
        Check {
            name: self.name.to_string(),
            hypotheses_satisfied: true,
            verdict: if failed { Verdict::Fail } else { Verdict::Pass },
            witnesses: self.witnesses,
            cells_checked: self.checked,
            skip_reason: None,
            assumptions: self.assumptions,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremReport {
    pub ideal: SquareFreeIdeal,
    pub hypotheses: HypothesisReport,
    pub lc_nonvanishing: Vec<usize>,
    pub checks: Vec<Check>,
}

/// Verdict counts.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl Tally {
    pub fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Pass => self.pass += 1,
            Verdict::Fail => self.fail += 1,
            Verdict::Skipped => self.skipped += 1,
        }
    }

    pub fn merge(&mut self, o: Tally) {
        self.pass += o.pass;
        self.fail += o.fail;
        self.skipped += o.skipped;
    }
}

impl fmt::Display for Tally {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} passed, {} failed, {} skipped",
            self.pass, self.fail, self.skipped
        )
    }
}

impl TheoremReport {
    pub fn tally(&self) -> Tally {
        let mut t = Tally::default();
        self.checks.iter().for_each(|c| t.add(c.verdict));
        t
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.verdict != Verdict::Fail)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub const MAIN_PART_1: &str = "main-theorem/part-1";
pub const MAIN_PART_2: &str = "main-theorem/part-2";
pub const MAIN_PART_3: &str = "main-theorem/part-3";
pub const LEMMA_ITEM_3: &str = "lemma/item-3";
pub const LEMMA_ITEM_5: &str = "lemma/item-5";
pub const LEMMA_ITEM_6: &str = "lemma/item-6";
pub const SUPPORT_BOUND: &str = "bounds/support-dimension";
pub const IDIM_BOUND: &str = "bounds/injective-dimension";
pub const EQUIVALENCES: &str = "codim-3/equivalences";
pub const S2_MU2: &str = "s2-not-cm/mu2-at-maximal";
pub const S2_CLAIM_2: &str = "s2-not-cm/claim-2";
pub const S2_CLAIM_3: &str = "s2-not-cm/claim-3";
pub const DUALITY: &str = "duality/two-module";

/// Per-ideal verification state: cached Bass numbers and the hypothesis
/// bundle.
pub struct Verifier {
    ideal: SquareFreeIdeal,
    engine: BassEngine,
    pub hypotheses: HypothesisReport,
    pub nonvanishing: Vec<usize>,
    primes: Vec<VarSet>,
    rows: BTreeMap<(VarSet, usize), Vec<usize>>,
    mu0: BTreeMap<(VarSet, usize), usize>,
    support: Option<SupportProfile>,
}

fn bit(b: bool) -> i64 {
    i64::from(b)
}

impl Verifier {
    pub fn new(ideal: &SquareFreeIdeal) -> Result<Self, HomologError> {
        let hypotheses = hypothesis_report(ideal)?;
        let nonvanishing = lc_nonvanishing(ideal)?;
        Ok(Verifier {
            ideal: ideal.clone(),
            engine: BassEngine::new(),
            hypotheses,
            nonvanishing,
            primes: primes_containing(ideal),
            rows: BTreeMap::new(),
            mu0: BTreeMap::new(),
            support: None,
        })
    }

    pub fn ideal(&self) -> &SquareFreeIdeal {
        &self.ideal
    }

    fn n(&self) -> usize {
        self.hypotheses.n
    }

    fn d(&self) -> usize {
        self.hypotheses.height
    }

    fn full(&self) -> VarSet {
        VarSet::full(self.n())
    }

    /// `μ^p(P_σ, H_I^i(R))`, zero when `p > |σ|`. `μ^0` is taken only after
    /// the two paths agree.
    pub fn mu(&mut self, sigma: VarSet, i: usize, p: usize) -> Result<usize, HomologError> {
        if p > sigma.len() {
            return Ok(0);
        }
        if p == 0 {
            if let Some(&v) = self.mu0.get(&(sigma, i)) {
                return Ok(v);
            }
            let v = self.engine.checked_mu0(&self.ideal, sigma, i)?;
            self.mu0.insert((sigma, i), v);
            return Ok(v);
        }
        Ok(self.row(sigma, i)?[p])
    }

    fn row(&mut self, sigma: VarSet, i: usize) -> Result<&Vec<usize>, HomologError> {
        if !self.rows.contains_key(&(sigma, i)) {
            let r = self.engine.bass_row(&self.ideal, sigma, i)?;
            self.rows.insert((sigma, i), r);
        }
        Ok(&self.rows[&(sigma, i)])
    }

    fn lc_vanishes(&self, i: usize) -> bool {
        !self.nonvanishing.contains(&i)
    }

    /// Monomial primes in `Ass H_I^i(R)`.
    fn ass(&mut self, i: usize) -> Result<Vec<VarSet>, HomologError> {
        let primes = self.primes.clone();
        let mut out = Vec::new();
        for s in primes {
            if self.mu(s, i, 0)? > 0 {
                out.push(s);
            }
        }
        Ok(out)
    }

    /// Largest `p` with a nonzero `μ^p(P_σ, H_I^i)` over monomial primes.
    fn graded_idim(&mut self, i: usize) -> Result<Option<usize>, HomologError> {
        let primes = self.primes.clone();
        let mut best = None;
        for s in primes {
            let top = self.row(s, i)?.iter().rposition(|&v| v != 0);
            best = best.max(top);
        }
        Ok(best)
    }

    /// `idim_R H_I^i(R)`. A prime `q` whose largest monomial subprime is
    /// `P_σ` has `μ^{p+ht(q/P_σ)}(q, -) = μ^p(P_σ, -)` on `Z^n`-graded
    /// modules, and `ht(q/P_σ)` reaches `n - |σ|`.
    fn idim(&mut self, i: usize) -> Result<Option<usize>, HomologError> {
        let primes = self.primes.clone();
        let n = self.n();
        let mut best = None;
        for s in primes {
            let top = self.row(s, i)?.iter().rposition(|&v| v != 0);
            best = best.max(top.map(|p| p + n - s.len()));
        }
        Ok(best)
    }

    fn support(&mut self) -> Result<&SupportProfile, HomologError> {
        if self.support.is_none() {
            self.support = Some(support_profile(&self.ideal)?);
        }
        Ok(self.support.as_ref().expect("filled"))
    }

    fn gate_pure(&self, name: &str) -> Option<Check> {
        (!self.hypotheses.pure)
            .then(|| Check::skipped(name, "minimal primes have different heights"))
    }

    fn bass_witness(
        &self,
        sigma: VarSet,
        i: usize,
        p: usize,
        expected: Expectation,
        got: usize,
    ) -> Witness {
        Witness {
            quantity: Quantity::Bass,
            sigma,
            i,
            p,
            expected,
            got: got as i64,
        }
    }

    /// Parts 1 to 3 of the structure theorem for `μ^0, μ^1, μ^2` of
    /// `H_I^d(R)`.
    pub fn main_theorem(&mut self) -> Result<Vec<Check>, HomologError> {
        if self.gate_pure("").is_some() {
            return Ok([MAIN_PART_1, MAIN_PART_2, MAIN_PART_3]
                .iter()
                .map(|n| self.gate_pure(n).expect("not pure"))
                .collect());
        }
        let (n, d) = (self.n(), self.d());
        let primes = self.primes.clone();

        let mut part1 = Cells::new(MAIN_PART_1);
        for &s in &primes {
            let h = s.len();
            for p in 0..=1 {
                let got = self.mu(s, d, p)?;
                let w = self.bass_witness(s, d, p, Expectation::Eq(bit(h == d + p)), got);
                part1.cell(w, false);
            }
        }

        let mut part2 = Cells::new(MAIN_PART_2);
        let mut part3 = Cells::new(MAIN_PART_3);
        for &s in primes.iter().filter(|s| s.len() == d + 2) {
            let top = self.mu(s, d + 1, 0)?;
            let mu2 = self.mu(s, d, 2)?;
            if top == 0 {
                part2.cell(self.bass_witness(s, d, 2, Expectation::Eq(1), mu2), false);
            } else if n - d >= 3 {
                part3.cell(
                    self.bass_witness(s, d, 2, Expectation::Eq(top as i64 + 1), mu2),
                    true,
                );
            }
        }
        let part3 = if n - d >= 3 {
            part3.finish()
        } else {
            Check::skipped(MAIN_PART_3, "n - d < 3")
        };
        Ok(vec![part1.finish(), part2.finish(), part3])
    }

    /// Items 3, 5 and 6 of the lemma on the first Bass numbers, swept over
    /// all monomial primes by localization.
    pub fn lemma_items(&mut self) -> Result<Vec<Check>, HomologError> {
        if self.gate_pure("").is_some() {
            return Ok([LEMMA_ITEM_3, LEMMA_ITEM_5, LEMMA_ITEM_6]
                .iter()
                .map(|n| self.gate_pure(n).expect("not pure"))
                .collect());
        }
        let (n, d) = (self.n(), self.d());
        let primes = self.primes.clone();
        let full = self.full();

        // item 3: μ^0(H^{d+1}) <= μ^2(H^d) everywhere; with codimension at
        // least three, m ∉ Ass H^{d+1} iff μ^2(m, H^d) = 0, and the two
        // height conditions on associated primes are equivalent
        let mut item3 = Cells::new(LEMMA_ITEM_3);
        for &s in &primes {
            let top = self.mu(s, d + 1, 0)?;
            let mu2 = self.mu(s, d, 2)?;
            item3.cell(
                Witness {
                    quantity: Quantity::Bass,
                    sigma: s,
                    i: d + 1,
                    p: 0,
                    expected: Expectation::Le(mu2 as i64),
                    got: top as i64,
                },
                false,
            );
            if s.len() >= d + 3 {
                item3.cell(
                    Witness {
                        quantity: Quantity::Statement,
                        sigma: s,
                        i: d,
                        p: 2,
                        expected: Expectation::Eq(bit(top == 0)),
                        got: bit(mu2 == 0),
                    },
                    false,
                );
            }
        }
        if n >= d + 3 {
            let ass_top = self.ass(d + 1)?;
            let low = ass_top.iter().all(|s| s.len() == d + 2);
            let mut e2_pattern = true;
            for &s in &primes {
                if (self.mu(s, d, 2)? != 0) != (s.len() == d + 2) {
                    e2_pattern = false;
                }
            }
            item3.cell(
                Witness {
                    quantity: Quantity::Statement,
                    sigma: full,
                    i: d + 1,
                    p: 3,
                    expected: Expectation::Eq(bit(low)),
                    got: bit(e2_pattern),
                },
                true,
            );
        }

        // item 5 needs m ∉ Ass Γ_I(D^{d+2}), so n - d >= 3; with n - d = 2 it
        // contradicts part 2 of the main theorem, e.g. I = (x1) in 3 variables
        let item5 = if n >= d + 3 {
            let mut c = Cells::new(LEMMA_ITEM_5);
            for &s in primes.iter().filter(|s| s.len() >= d + 3) {
                let top = self.mu(s, d + 1, 0)?;
                let mu2 = self.mu(s, d, 2)?;
                c.cell(
                    self.bass_witness(s, d, 2, Expectation::Eq(top as i64), mu2),
                    s == full,
                );
            }
            c.finish()
        } else {
            Check::skipped(LEMMA_ITEM_5, "n - d < 3")
        };

        let item6 = if self.lc_vanishes(d + 1) {
            let mut c = Cells::new(LEMMA_ITEM_6);
            for &s in &primes {
                let mu2 = self.mu(s, d, 2)?;
                let expected = if s.len() == d + 2 {
                    Expectation::Ne(0)
                } else {
                    Expectation::Eq(0)
                };
                c.cell(self.bass_witness(s, d, 2, expected, mu2), false);
            }
            c.finish()
        } else {
            Check::skipped(LEMMA_ITEM_6, "H^{d+1} is nonzero")
        };
        Ok(vec![item3.finish(), item5, item6])
    }

    /// `dim Supp H^{d+i} <= n - (d+i+1)` for `i > 0`, and graded
    /// `idim H^{d+1} <= dim Supp H^{d+1} <= n - d - 2`.
    pub fn support_and_idim_bounds(&mut self) -> Result<Vec<Check>, HomologError> {
        let (n, d) = (self.n(), self.d());
        if let Some(c) = self.gate_pure(SUPPORT_BOUND) {
            return Ok(vec![c, self.gate_pure(IDIM_BOUND).expect("not pure")]);
        }
        if d >= n {
            return Ok(vec![
                Check::skipped(SUPPORT_BOUND, "d = n"),
                Check::skipped(IDIM_BOUND, "d = n"),
            ]);
        }
        let full = self.full();
        let support = self.support()?.clone();
        let dim_of = |i: usize| support.dim(i).map_or(-1, |x| x as i64);

        let mut sup = Cells::new(SUPPORT_BOUND);
        for i in 1..=(n - d) {
            let bound = n as i64 - (d + i + 1) as i64;
            sup.cell(
                Witness {
                    quantity: Quantity::SupportDim,
                    sigma: full,
                    i: d + i,
                    p: 0,
                    expected: Expectation::Le(bound),
                    got: dim_of(d + i),
                },
                false,
            );
        }

        let mut idim = Cells::new(IDIM_BOUND);
        let graded = self.graded_idim(d + 1)?.map_or(-1, |x| x as i64);
        let true_idim = self.idim(d + 1)?.map_or(-1, |x| x as i64);
        let supp = dim_of(d + 1);
        let bound = n as i64 - d as i64 - 2;
        for (quantity, got) in [
            (Quantity::GradedInjectiveDim, graded),
            (Quantity::InjectiveDim, true_idim),
        ] {
            let w = |expected| Witness {
                quantity,
                sigma: full,
                i: d + 1,
                p: 0,
                expected,
                got,
            };
            idim.cell(w(Expectation::Le(supp)), true);
            idim.cell(w(Expectation::Le(bound)), false);
        }
        Ok(vec![sup.finish(), idim.finish()])
    }

    /// The four equivalent conditions in codimension three, each evaluated
    /// on its own.
    pub fn equivalences_codim3(&mut self) -> Result<Check, HomologError> {
        if let Some(c) = self.gate_pure(EQUIVALENCES) {
            return Ok(c);
        }
        let (n, d) = (self.n(), self.d());
        if n - d != 3 {
            return Ok(Check::skipped(EQUIVALENCES, "n - d != 3"));
        }
        if self.lc_vanishes(d + 1) {
            return Ok(Check::skipped(EQUIVALENCES, "H^{d+1} = 0"));
        }
        let full = self.full();
        let primes = self.primes.clone();

        let s1 = self.mu(full, d + 1, 0)? == 0;
        let s2 = self.mu(full, d, 2)? == 0;
        let mut s3 = true;
        for &s in &primes {
            if (self.mu(s, d, 2)? != 0) != (s.len() == d + 2) {
                s3 = false;
            }
        }
        let ass = self.ass(d + 1)?;
        let same_height = ass.windows(2).all(|w| w[0].len() == w[1].len());
        let s4 = self.idim(d + 1)? == Some(1) && same_height;

        let mut c = Cells::new(EQUIVALENCES);
        c.assumptions.push("H^{d+1} is I-cofinite".to_string());
        for (k, s) in [(1, s1), (2, s2), (3, s3), (4, s4)] {
            c.cell(
                Witness {
                    quantity: Quantity::Statement,
                    sigma: full,
                    i: d + 1,
                    p: k,
                    expected: Expectation::Eq(bit(s1)),
                    got: bit(s),
                },
                true,
            );
        }
        Ok(c.finish())
    }

    /// S2 but not Cohen–Macaulay in codimension three forces
    /// `μ^2(m, H^d) != 0`; also the two auxiliary claims on `μ^{n-d}`.
    pub fn s2_not_cm(&mut self) -> Result<Vec<Check>, HomologError> {
        let names = [S2_MU2, S2_CLAIM_2, S2_CLAIM_3];
        let h = &self.hypotheses;
        let reason = if !h.pure {
            Some("minimal primes have different heights")
        } else if !h.s2 {
            Some("R/I is not S2")
        } else if h.codim_gap != 3 {
            Some("n - d != 3")
        } else if h.cm {
            Some("R/I is Cohen-Macaulay")
        } else {
            None
        };
        if let Some(r) = reason {
            return Ok(names.iter().map(|n| Check::skipped(n, r)).collect());
        }
        let (n, d) = (self.n(), self.d());
        let full = self.full();
        let primes = self.primes.clone();

        let mut mu2 = Cells::new(S2_MU2);
        let v = self.mu(full, d, 2)?;
        mu2.cell(self.bass_witness(full, d, 2, Expectation::Ne(0), v), true);

        let mut claim2 = Cells::new(S2_CLAIM_2);
        for &s in primes.iter().filter(|s| s.len() < n) {
            let v = self.mu(s, d, n - d)?;
            claim2.cell(self.bass_witness(s, d, n - d, Expectation::Eq(0), v), false);
        }

        let mut claim3 = Cells::new(S2_CLAIM_3);
        let v = self.mu(full, d, n - d)?;
        claim3.cell(
            self.bass_witness(full, d, n - d, Expectation::Ne(0), v),
            true,
        );
        Ok(vec![mu2.finish(), claim2.finish(), claim3.finish()])
    }

    /// With only `H^d` and `H^{d+1}` nonzero, at the maximal ideal:
    /// `μ^{i-2}(m, H^{d+1}) = μ^i(m, H^d)` for `i < n-d` and `i > n-d+1`.
    pub fn two_module_duality(&mut self) -> Result<Check, HomologError> {
        let (n, d) = (self.n(), self.d());
        if self.nonvanishing.iter().any(|&i| i != d && i != d + 1) {
            return Ok(Check::skipped(
                DUALITY,
                "some H^i with i not in {d, d+1} is nonzero",
            ));
        }
        let full = self.full();
        let mut c = Cells::new(DUALITY);
        for i in (0..=n).filter(|&i| i < n - d || i > n - d + 1) {
            let lhs = match i.checked_sub(2) {
                Some(j) => self.mu(full, d + 1, j)?,
                None => 0,
            };
            let rhs = self.mu(full, d, i)?;
            c.cell(
                self.bass_witness(full, d, i, Expectation::Eq(lhs as i64), rhs),
                false,
            );
        }
        Ok(c.finish())
    }

    /// Every check, in a fixed order.
    pub fn all(&mut self) -> Result<TheoremReport, HomologError> {
        let mut checks = self.main_theorem()?;
        checks.extend(self.lemma_items()?);
        checks.extend(self.support_and_idim_bounds()?);
        checks.push(self.equivalences_codim3()?);
        checks.extend(self.s2_not_cm()?);
        checks.push(self.two_module_duality()?);
        Ok(self.report(checks))
    }

    pub fn report(&self, checks: Vec<Check>) -> TheoremReport {
        TheoremReport {
            ideal: self.ideal.clone(),
            hypotheses: self.hypotheses.clone(),
            lc_nonvanishing: self.nonvanishing.clone(),
            checks,
        }
    }
}

fn run(
    ideal: &SquareFreeIdeal,
    f: impl FnOnce(&mut Verifier) -> Result<Vec<Check>, HomologError>,
) -> Result<TheoremReport, HomologError> {
    let mut v = Verifier::new(ideal)?;
    let checks = f(&mut v)?;
    Ok(v.report(checks))
}

pub fn verify_main_theorem(ideal: &SquareFreeIdeal) -> Result<TheoremReport, HomologError> {
    run(ideal, Verifier::main_theorem)
}

pub fn verify_lemma_items(ideal: &SquareFreeIdeal) -> Result<TheoremReport, HomologError> {
    run(ideal, Verifier::lemma_items)
}

pub fn verify_support_and_idim_bounds(
    ideal: &SquareFreeIdeal,
) -> Result<TheoremReport, HomologError> {
    run(ideal, Verifier::support_and_idim_bounds)
}

pub fn verify_equivalences_ndminus3(
    ideal: &SquareFreeIdeal,
) -> Result<TheoremReport, HomologError> {
    run(ideal, |v| Ok(vec![v.equivalences_codim3()?]))
}

pub fn verify_s2_noncm(ideal: &SquareFreeIdeal) -> Result<TheoremReport, HomologError> {
    run(ideal, Verifier::s2_not_cm)
}

pub fn verify_two_module_duality(ideal: &SquareFreeIdeal) -> Result<TheoremReport, HomologError> {
    run(ideal, |v| Ok(vec![v.two_module_duality()?]))
}

pub fn verify_all(ideal: &SquareFreeIdeal) -> Result<TheoremReport, HomologError> {
    Verifier::new(ideal)?.all()
}

/// Largest vertex count the corpus enumerator accepts.
pub const MAX_CORPUS_VERTICES: usize = 7;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CorpusError {
    TooManyVertices(usize),
}

impl fmt::Display for CorpusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusError::TooManyVertices(n) => {
                write!(
                    f,
                    "corpus enumeration is limited to {MAX_CORPUS_VERTICES} vertices, got {n}"
                )
            }
        }
    }
}

/// Which complexes on `n` vertices to enumerate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusSpec {
    pub n: usize,
    /// Only pure complexes (all facets of one size).
    pub pure_only: bool,
    /// Inclusive bounds on the height of the ideal.
    pub height: Option<(usize, usize)>,
    /// Inclusive bounds on `n - height`.
    pub codim: Option<(usize, usize)>,
    pub s2: Option<bool>,
    pub cm: Option<bool>,
    /// Keep one representative per orbit under relabeling the vertices.
    pub dedup: bool,
}

impl CorpusSpec {
    /// Pure complexes on `n` vertices, up to relabeling.
    pub fn pure(n: usize) -> Self {
        CorpusSpec {
            n,
            pure_only: true,
            height: None,
            codim: None,
            s2: None,
            cm: None,
            dedup: true,
        }
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn rec(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == p.len() {
            out.push(p.clone());
            return;
        }
        for j in k..p.len() {
            p.swap(k, j);
            rec(k + 1, p, out);
            p.swap(k, j);
        }
    }
    rec(0, &mut p, &mut out);
    out
}

/// Relabels facet bit masks under every vertex permutation and keeps the
/// least sorted facet list.
struct Canonicalizer {
    /// `tables[π][mask]`: image of `mask` under `π`.
    tables: Vec<Vec<u8>>,
}

impl Canonicalizer {
    fn new(n: usize) -> Self {
        let tables = permutations(n)
            .into_iter()
            .map(|perm| {
                (0..1usize << n)
                    .map(|mask| {
                        (0..n)
                            .filter(|&j| mask >> j & 1 == 1)
                            .fold(0u8, |acc, j| acc | 1 << perm[j])
                    })
                    .collect()
            })
            .collect();
        Canonicalizer { tables }
    }

    fn canonical(&self, facets: &[u8]) -> Vec<u8> {
        let mut best: Option<Vec<u8>> = None;
        let mut buf = Vec::with_capacity(facets.len());
        for t in &self.tables {
            buf.clear();
            buf.extend(facets.iter().map(|&f| t[f as usize]));
            buf.sort_unstable();
            if best.as_ref().is_none_or(|b| buf < *b) {
                best = Some(buf.clone());
            }
        }
        best.unwrap_or_default()
    }
}

/// All antichains of subsets of `[n]` drawn from `pool`, as sorted masks.
fn antichains(pool: &[u8]) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut chosen: Vec<u8> = Vec::new();
    fn rec(pool: &[u8], start: usize, chosen: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if !chosen.is_empty() {
            let mut c = chosen.clone();
            c.sort_unstable();
            out.push(c);
        }
        for k in start..pool.len() {
            let f = pool[k];
            if chosen.iter().all(|&g| f & g != f && f & g != g) {
                chosen.push(f);
                rec(pool, k + 1, chosen, out);
                chosen.pop();
            }
        }
    }
    rec(pool, 0, &mut chosen, &mut out);
    out
}

/// Stanley–Reisner ideals of the complexes described by `spec`, in a fixed
/// order: by facet size, then by sorted facet masks. The full simplex (the
/// zero ideal) is left out.
pub fn corpus(spec: &CorpusSpec) -> Result<Vec<SquareFreeIdeal>, CorpusError> {
    let n = spec.n;
    if n > MAX_CORPUS_VERTICES {
        return Err(CorpusError::TooManyVertices(n));
    }
    let full = ((1u16 << n) - 1) as u8;
    let families: Vec<Vec<u8>> = if spec.pure_only {
        (0..=n)
            .flat_map(|k| {
                let pool: Vec<u8> = (0..=full)
                    .filter(|m| m.count_ones() as usize == k)
                    .collect();
                antichains(&pool)
            })
            .collect()
    } else {
        let pool: Vec<u8> = (0..=full).collect();
        antichains(&pool)
    };

    let canon = spec.dedup.then(|| Canonicalizer::new(n));
    let mut seen: BTreeSet<(usize, Vec<u8>)> = BTreeSet::new();
    for fam in families {
        if fam == [full] {
            continue;
        }
        let key = match &canon {
            Some(c) => c.canonical(&fam),
            None => fam,
        };
        let size = key.iter().map(|f| f.count_ones()).max().unwrap_or(0) as usize;
        seen.insert((size, key));
    }

    let mut out = Vec::new();
    for (_, fam) in seen {
        let facets = fam.iter().map(|&f| VarSet(u64::from(f)));
        let delta = SimplicialComplex::new(n, facets.collect::<Vec<_>>()).expect("masks in range");
        let ideal = ideal_from_complex(&delta);
        if keep(spec, &ideal, &delta) {
            out.push(ideal);
        }
    }
    Ok(out)
}

fn keep(spec: &CorpusSpec, ideal: &SquareFreeIdeal, delta: &SimplicialComplex) -> bool {
    let Ok(h) = ideal.height() else { return false };
    let within = |b: Option<(usize, usize)>, v: usize| b.is_none_or(|(lo, hi)| lo <= v && v <= hi);
    within(spec.height, h)
        && within(spec.codim, spec.n - h)
        && spec.s2.is_none_or(|s| s == delta.is_s2())
        && spec.cm.is_none_or(|c| c == delta.is_cohen_macaulay())
}
