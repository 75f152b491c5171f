//! Multivariate polynomials over Q with the fine `Z^n` grading, and elements
//! of graded free modules.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::arith::Rat;

/// Exponent vector of a monomial in `n` variables.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, j: usize) -> Self {
        let mut e = vec![0; n];
        e[j] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        self.divides(other)
            .then(|| Monomial(other.0.iter().zip(&self.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn degree(&self) -> MultiDegree {
        MultiDegree(self.0.iter().map(|&e| i64::from(e)).collect())
    }

    /// The monomial of degree `d`, if `d` has no negative entries.
    pub fn from_degree(d: &MultiDegree) -> Option<Monomial> {
        d.0.iter()
            .map(|&x| u32::try_from(x).ok())
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

/// Graded reverse lexicographic comparison.
pub fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.total_degree().cmp(&b.total_degree()) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.0.iter().zip(&b.0).rev() {
        if x != y {
            // smaller exponent in the last differing variable wins
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

/// A `Z^n` degree; entries may be negative.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MultiDegree(pub Vec<i64>);

impl MultiDegree {
    pub fn zero(n: usize) -> Self {
        MultiDegree(vec![0; n])
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn add(&self, o: &MultiDegree) -> MultiDegree {
        MultiDegree(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &MultiDegree) -> MultiDegree {
        MultiDegree(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> MultiDegree {
        MultiDegree(self.0.iter().map(|a| -a).collect())
    }

    /// Componentwise `self <= o`.
    pub fn le(&self, o: &MultiDegree) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    pub fn join(&self, o: &MultiDegree) -> MultiDegree {
        MultiDegree(self.0.iter().zip(&o.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }
}

/// Polynomial with terms sorted strictly decreasing in grevlex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    nvars: usize,
    terms: Vec<(Rat, Monomial)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarCountMismatch {
    pub left: usize,
    pub right: usize,
}

impl fmt::Display for VarCountMismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "polynomials in {} and {} variables",
            self.left, self.right
        )
    }
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        Self::term(c, Monomial::one(nvars))
    }

    pub fn term(c: Rat, m: Monomial) -> Self {
        let nvars = m.nvars();
        if c.is_zero() {
            Poly::zero(nvars)
        } else {
            Poly {
                nvars,
                terms: vec![(c, m)],
            }
        }
    }

    pub fn var(nvars: usize, j: usize) -> Self {
        Self::term(Rat::one(), Monomial::var(nvars, j))
    }

    /// Builds a polynomial from arbitrary terms, combining duplicates.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Rat, Monomial)>) -> Self {
        let mut ts: Vec<(Rat, Monomial)> = terms.into_iter().collect();
        ts.sort_by(|a, b| grevlex(&b.1, &a.1));
        let mut out: Vec<(Rat, Monomial)> = Vec::with_capacity(ts.len());
        for (c, m) in ts {
            assert_eq!(m.nvars(), nvars);
            match out.last_mut() {
                Some(last) if last.1 == m => last.0 += c,
                _ => out.push((c, m)),
            }
        }
        out.retain(|(c, _)| !c.is_zero());
        Poly { nvars, terms: out }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Rat, Monomial)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(Rat, Monomial)> {
        self.terms.first()
    }

    fn check(&self, o: &Poly) -> Result<(), VarCountMismatch> {
        if self.nvars == o.nvars {
            Ok(())
        } else {
            Err(VarCountMismatch {
                left: self.nvars,
                right: o.nvars,
            })
        }
    }

    pub fn add(&self, o: &Poly) -> Result<Poly, VarCountMismatch> {
        self.check(o)?;
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < o.terms.len() {
            let (a, b) = (&self.terms[i], &o.terms[j]);
            match grevlex(&a.1, &b.1) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a.0 + &b.0;
                    if !c.is_zero() {
                        out.push((c, a.1.clone()));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&o.terms[j..]);
        Ok(Poly {
            nvars: self.nvars,
            terms: out,
        })
    }

    pub fn neg(&self) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(c, m)| (-c.clone(), m.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, o: &Poly) -> Result<Poly, VarCountMismatch> {
        self.add(&o.neg())
    }

    /// Multiplication by `c * m`; order is preserved by multiplicativity.
    pub fn mul_term(&self, c: &Rat, m: &Monomial) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(d, n)| (d * c, n.mul(m))).collect(),
        }
    }

    pub fn mul(&self, o: &Poly) -> Result<Poly, VarCountMismatch> {
        self.check(o)?;
        let mut acc = Poly::zero(self.nvars);
        for (c, m) in &o.terms {
            acc = acc.add(&self.mul_term(c, m))?;
        }
        Ok(acc)
    }

    /// Renders with the given variable names, e.g. `x1*x2 - 2*x3^2`.
    pub fn render(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (k, (c, m)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mon = render_monomial(m, names);
            if mon.is_empty() {
                out.push_str(&format!("{a}"));
            } else if a.is_one() {
                out.push_str(&mon);
            } else {
                out.push_str(&format!("{a}*{mon}"));
            }
        }
        out
    }
}

/// Default variable names `x1..xn`.
pub fn default_names(n: usize) -> Vec<String> {
    (1..=n).map(|j| format!("x{j}")).collect()
}

pub fn render_monomial(m: &Monomial, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (j, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(names[j].clone()),
            _ => parts.push(format!("{}^{e}", names[j])),
        }
    }
    parts.join("*")
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&default_names(self.nvars)))
    }
}

/// One term `coef * mon * e_comp` of a free-module element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModTerm {
    pub comp: usize,
    pub mon: Monomial,
    pub coef: Rat,
}

/// Position-over-term comparison of `(comp, mon)` pairs: lower component
/// index is larger, then grevlex.
pub fn pot(a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
    b.0.cmp(&a.0).then_with(|| grevlex(a.1, b.1))
}

/// Element of a free module. Terms are stored in canonical position-over-term
/// order regardless of the order used by a particular computation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FreeElement {
    terms: Vec<ModTerm>,
}

impl FreeElement {
    pub fn zero() -> Self {
        FreeElement { terms: Vec::new() }
    }

    pub fn basis(comp: usize, nvars: usize) -> Self {
        Self::term(comp, Monomial::one(nvars), Rat::one())
    }

    pub fn term(comp: usize, mon: Monomial, coef: Rat) -> Self {
        if coef.is_zero() {
            Self::zero()
        } else {
            FreeElement {
                terms: vec![ModTerm { comp, mon, coef }],
            }
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ModTerm>) -> Self {
        let mut ts: Vec<ModTerm> = terms.into_iter().collect();
        ts.sort_by(|a, b| pot((b.comp, &b.mon), (a.comp, &a.mon)));
        let mut out: Vec<ModTerm> = Vec::with_capacity(ts.len());
        for t in ts {
            match out.last_mut() {
                Some(last) if last.comp == t.comp && last.mon == t.mon => last.coef += t.coef,
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coef.is_zero());
        FreeElement { terms: out }
    }

    /// Builds `sum_t p_t e_t` from one polynomial per component.
    pub fn from_components(components: &[Poly]) -> Self {
        Self::from_terms(components.iter().enumerate().flat_map(|(t, p)| {
            p.terms().iter().map(move |(c, m)| ModTerm {
                comp: t,
                mon: m.clone(),
                coef: c.clone(),
            })
        }))
    }

    pub fn terms(&self) -> &[ModTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The polynomial in component `t`.
    pub fn component(&self, t: usize, nvars: usize) -> Poly {
        Poly::from_terms(
            nvars,
            self.terms
                .iter()
                .filter(|x| x.comp == t)
                .map(|x| (x.coef.clone(), x.mon.clone())),
        )
    }

    /// All component polynomials, for a module of the given rank.
    pub fn components(&self, rank: usize, nvars: usize) -> Vec<Poly> {
        (0..rank).map(|t| self.component(t, nvars)).collect()
    }

    /// Coefficient of the unique term in component `t` (homogeneous case).
    pub fn coefficient_at(&self, t: usize) -> Option<&Rat> {
        self.terms.iter().find(|x| x.comp == t).map(|x| &x.coef)
    }

    pub fn add(&self, o: &FreeElement) -> FreeElement {
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < o.terms.len() {
            let (a, b) = (&self.terms[i], &o.terms[j]);
            match pot((a.comp, &a.mon), (b.comp, &b.mon)) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &a.coef + &b.coef;
                    if !c.is_zero() {
                        out.push(ModTerm {
                            comp: a.comp,
                            mon: a.mon.clone(),
                            coef: c,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&o.terms[j..]);
        FreeElement { terms: out }
    }

    pub fn neg(&self) -> FreeElement {
        FreeElement {
            terms: self
                .terms
                .iter()
                .map(|t| ModTerm {
                    comp: t.comp,
                    mon: t.mon.clone(),
                    coef: -t.coef.clone(),
                })
                .collect(),
        }
    }

    pub fn sub(&self, o: &FreeElement) -> FreeElement {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &Rat) -> FreeElement {
        self.mul_term(c, None)
    }

    /// Multiplication by `c * m` (or by `c` alone).
    pub fn mul_term(&self, c: &Rat, m: Option<&Monomial>) -> FreeElement {
        if c.is_zero() {
            return FreeElement::zero();
        }
        FreeElement {
            terms: self
                .terms
                .iter()
                .map(|t| ModTerm {
                    comp: t.comp,
                    mon: m.map_or_else(|| t.mon.clone(), |m| t.mon.mul(m)),
                    coef: &t.coef * c,
                })
                .collect(),
        }
    }

    /// Multiplication by a polynomial.
    pub fn mul_poly(&self, p: &Poly) -> FreeElement {
        p.terms().iter().fold(FreeElement::zero(), |acc, (c, m)| {
            acc.add(&self.mul_term(c, Some(m)))
        })
    }

    /// Relabels components through `f`; terms mapped to `None` are dropped.
    pub fn map_components(&self, f: impl Fn(usize) -> Option<usize>) -> FreeElement {
        FreeElement::from_terms(self.terms.iter().filter_map(|t| {
            f(t.comp).map(|c| ModTerm {
                comp: c,
                mon: t.mon.clone(),
                coef: t.coef.clone(),
            })
        }))
    }

    /// Largest term under `order`.
    pub fn lead(&self, order: &ModuleOrder) -> Option<&ModTerm> {
        match order {
            ModuleOrder::Pot => self.terms.first(),
            _ => self.terms.iter().reduce(|a, b| {
                if order.cmp((a.comp, &a.mon), (b.comp, &b.mon)).is_ge() {
                    a
                } else {
                    b
                }
            }),
        }
    }
}

/// Result of asking for the multidegree of an element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Homogeneity {
    Zero,
    Degree(MultiDegree),
    Inhomogeneous,
}

/// A graded free module `sum_t R(-shift_t)`: basis element `e_t` has degree
/// `shift_t`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FreeModule {
    pub nvars: usize,
    pub shifts: Vec<MultiDegree>,
}

impl FreeModule {
    pub fn new(nvars: usize, shifts: Vec<MultiDegree>) -> Self {
        assert!(shifts.iter().all(|s| s.nvars() == nvars));
        FreeModule { nvars, shifts }
    }

    /// Free module of rank `r` generated in degree zero.
    pub fn standard(nvars: usize, r: usize) -> Self {
        FreeModule {
            nvars,
            shifts: vec![MultiDegree::zero(nvars); r],
        }
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn multidegree(&self, e: &FreeElement) -> Homogeneity {
        let mut deg: Option<MultiDegree> = None;
        for t in e.terms() {
            let d = t.mon.degree().add(&self.shifts[t.comp]);
            match &deg {
                None => deg = Some(d),
                Some(prev) if *prev == d => {}
                Some(_) => return Homogeneity::Inhomogeneous,
            }
        }
        deg.map_or(Homogeneity::Zero, Homogeneity::Degree)
    }

    /// Dual module `Hom(F, R)`: shifts negate.
    pub fn dual(&self) -> FreeModule {
        FreeModule {
            nvars: self.nvars,
            shifts: self.shifts.iter().map(MultiDegree::neg).collect(),
        }
    }

    /// Components present in degree `alpha`, i.e. with `shift_t <= alpha`.
    pub fn components_at(&self, alpha: &MultiDegree) -> Vec<usize> {
        (0..self.rank())
            .filter(|&t| self.shifts[t].le(alpha))
            .collect()
    }

    /// Direct sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &FreeModule) -> FreeModule {
        let mut shifts = self.shifts.clone();
        shifts.extend(other.shifts.iter().cloned());
        FreeModule {
            nvars: self.nvars,
            shifts,
        }
    }
}

/// Orders on terms of a free module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleOrder {
    /// Position over term with grevlex; `e_0` is the largest position.
    Pot,
    /// Term over position: grevlex on the degree `mon * shift`, then position.
    Top { shifts: Vec<MultiDegree> },
    /// Order induced by a map `e_t -> g_t`: compare `m * lead(g_t)` in the
    /// previous order, breaking ties by position.
    Schreyer {
        leads: Vec<(usize, Monomial)>,
        base: Box<ModuleOrder>,
    },
}

impl ModuleOrder {
    pub fn cmp(&self, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
        match self {
            ModuleOrder::Pot => pot(a, b),
            ModuleOrder::Top { shifts } => {
                let da = a.1.degree().add(&shifts[a.0]);
                let db = b.1.degree().add(&shifts[b.0]);
                da.total()
                    .cmp(&db.total())
                    .then_with(|| grevlex(a.1, b.1))
                    .then_with(|| b.0.cmp(&a.0))
            }
            ModuleOrder::Schreyer { leads, base } => {
                let (ca, ma) = &leads[a.0];
                let (cb, mb) = &leads[b.0];
                base.cmp((*ca, &a.1.mul(ma)), (*cb, &b.1.mul(mb)))
                    .then_with(|| b.0.cmp(&a.0))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;
    use alloc::string::ToString;

    fn m(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn difference_of_squares() {
        let x = Poly::var(2, 0);
        let y = Poly::var(2, 1);
        let p = x.add(&y).unwrap().mul(&x.sub(&y).unwrap()).unwrap();
        let expect = x.mul(&x).unwrap().sub(&y.mul(&y).unwrap()).unwrap();
        assert_eq!(p, expect);
        assert_eq!(p.to_string(), "x1^2 - x2^2");
    }

    #[test]
    fn zero_and_square() {
        let x = Poly::var(2, 0);
        assert!(x.mul(&Poly::zero(2)).unwrap().is_zero());
        assert_eq!(x.mul(&x).unwrap(), Poly::term(rat(1), m(&[2, 0])));
        assert!(x.add(&Poly::var(3, 0)).is_err());
    }

    #[test]
    fn grevlex_table() {
        let order = [
            m(&[2, 0]),
            m(&[1, 1]),
            m(&[0, 2]),
            m(&[1, 0]),
            m(&[0, 1]),
            m(&[0, 0]),
        ];
        for w in order.windows(2) {
            assert_eq!(
                grevlex(&w[0], &w[1]),
                Ordering::Greater,
                "{:?} > {:?}",
                w[0],
                w[1]
            );
        }
        // x*(xy) vs x*(y^2)
        let x = m(&[1, 0]);
        assert_eq!(
            grevlex(&x.mul(&m(&[1, 1])), &x.mul(&m(&[0, 2]))),
            Ordering::Greater
        );
    }

    #[test]
    fn pot_prefers_first_component() {
        let big = m(&[5, 5]);
        let one = m(&[0, 0]);
        assert_eq!(
            ModuleOrder::Pot.cmp((0, &one), (1, &big)),
            Ordering::Greater
        );
    }

    #[test]
    fn multidegree_cases() {
        let f = FreeModule::standard(2, 1);
        let xe = FreeElement::term(0, m(&[1, 0]), rat(1));
        assert_eq!(
            f.multidegree(&xe),
            Homogeneity::Degree(MultiDegree(vec![1, 0]))
        );
        let xy = FreeElement::from_components(&[Poly::var(2, 0).add(&Poly::var(2, 1)).unwrap()]);
        assert_eq!(f.multidegree(&xy), Homogeneity::Inhomogeneous);
        let g = FreeModule::new(2, vec![MultiDegree(vec![0, 1])]);
        assert_eq!(
            g.multidegree(&xe),
            Homogeneity::Degree(MultiDegree(vec![1, 1]))
        );
        assert_eq!(f.multidegree(&FreeElement::zero()), Homogeneity::Zero);
    }

    #[test]
    fn render_with_coefficients() {
        let p = Poly::from_terms(
            3,
            [
                (rat(1), m(&[1, 1, 0])),
                (rat(-2), m(&[0, 0, 2])),
                (rat(3), m(&[0, 0, 0])),
            ],
        );
        assert_eq!(p.to_string(), "x1*x2 - 2*x3^2 + 3");
    }
}
