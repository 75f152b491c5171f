//! Acceptance criteria, one line each. Values are exact integers; the only
//! tolerances are wall-clock budgets.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use lcbass_core::arith::{kernel_basis, rat, rref, QMatrix};
use lcbass_core::cech::{
    ass_contains, lc_dim, lc_nonvanishing, socle_dim_at_max, strand, strand_on,
};
use lcbass_core::harness::{
    corpus, CorpusSpec, Verdict, Verifier, IDIM_BOUND, MAIN_PART_1, SUPPORT_BOUND,
};
use lcbass_core::homolog::{
    bass_number, bass_number_presented, depth_from_links, ext_module, hypothesis_report, pdim,
    BassEngine,
};
use lcbass_core::sr::{complex_from_ideal, ideal_from_complex, SquareFreeIdeal, VarSet};
use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

const MINUTE: Duration = Duration::from_secs(60);

struct Outcome {
    pass: bool,
    detail: String,
    elapsed: Duration,
    budget: Option<Duration>,
}

fn ideal(n: usize, gens: &[&[usize]]) -> SquareFreeIdeal {
    SquareFreeIdeal::from_one_based(n, gens).unwrap()
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

fn full_corpus() -> Vec<SquareFreeIdeal> {
    (1..=5)
        .flat_map(|n| corpus(&CorpusSpec::pure(n)).unwrap())
        .collect()
}

fn fixture_alexandra() -> (bool, String) {
    let i = alexandra();
    let h = hypothesis_report(&i).unwrap();
    let m = VarSet::full(6);
    let strand_route = bass_number(&i, m, 3, 2).unwrap();
    let presented = bass_number_presented(&i, m, 3, 2).unwrap();
    let pass = h.dim == 3 && h.depth == 2 && h.s2 && !h.cm && strand_route == 1 && presented == 1;
    let detail = format!(
        "dim={} depth={} S2={} CM={} mu2(m,H3): dual strand={} presented Ext4(Ext3)_0={}",
        h.dim, h.depth, h.s2, h.cm, strand_route, presented
    );
    (pass, detail)
}

fn fixture_mayer_vietoris() -> (bool, String) {
    let i = ideal(6, &[&[1], &[2], &[3]])
        .intersect(&ideal(6, &[&[4], &[5], &[6]]))
        .unwrap();
    let nonzero_strands = VarSet::full(6)
        .subsets()
        .filter(|&p| lc_dim(&i, 4, p).unwrap() != 0)
        .count();
    let in_ass = ass_contains(&i, 4, VarSet::full(6)).unwrap();
    let socle = socle_dim_at_max(&i, 4).unwrap();
    let pass = nonzero_strands == 0 && !in_ass && socle == 0;
    (
        pass,
        format!("nonzero H4 strands={nonzero_strands} of 64, m in Ass H4={in_ass}, socle={socle}"),
    )
}

fn part_three_instance() -> (bool, String) {
    let i = ideal(5, &[&[1], &[2]])
        .intersect(&ideal(5, &[&[3], &[4]]))
        .unwrap();
    let sigma = VarSet::from_indices([0, 1, 2, 3]);
    let local = i.restrict_localize(sigma).unwrap();
    let mu0_cech = socle_dim_at_max(&local, 3).unwrap();
    let mut e = BassEngine::new();
    let mu0_ext = e.bass_number(&i, sigma, 3, 0).unwrap();
    let mu2_ext = e.bass_number(&i, sigma, 2, 2).unwrap();
    let mu2_presented = bass_number_presented(&i, sigma, 2, 2).unwrap();
    let pass = mu0_cech == 1
        && mu0_ext == 1
        && mu2_ext == 2
        && mu2_presented == 2
        && mu0_cech + 1 == mu2_ext;
    let detail = format!(
        "mu0(s,H3): cech={mu0_cech} double-ext={mu0_ext}; mu2(s,H2): dual strand={mu2_ext} presented={mu2_presented}"
    );
    (pass, detail)
}

/// Part 1 of the structure theorem over the corpus, plus zeros at primes
/// not containing I.
fn corpus_part_one(ideals: &[SquareFreeIdeal]) -> (bool, String) {
    let results: Vec<(usize, usize, usize)> = ideals
        .par_iter()
        .filter(|i| i.is_pure().unwrap())
        .map(|i| {
            let mut v = Verifier::new(i).unwrap();
            let checks = v.main_theorem().unwrap();
            let part1 = checks.iter().find(|c| c.name == MAIN_PART_1).unwrap();
            let d = v.hypotheses.height;
            let mut off = 0;
            for s in VarSet::full(i.nvars())
                .subsets()
                .filter(|&s| !i.contained_in_prime(s))
            {
                for p in 0..=1 {
                    off += usize::from(v.mu(s, d, p).unwrap() != 0);
                }
            }
            (part1.cells_checked, part1.witnesses.len(), off)
        })
        .collect();
    let cells: usize = results.iter().map(|r| r.0).sum();
    let fails: usize = results.iter().map(|r| r.1 + r.2).sum();
    (
        fails == 0,
        format!("{} ideals, {cells} cells, {fails} failures", results.len()),
    )
}

fn oracle_agreement(ideals: &[SquareFreeIdeal]) -> (bool, String) {
    let results: Vec<(usize, usize, usize)> = ideals
        .par_iter()
        .map(|i| {
            let n = i.nvars();
            let d = i.height().unwrap();
            let mut e = BassEngine::new();
            let mut compared = 0;
            let mut disagree = 0;
            for k in d..=n {
                let cech = socle_dim_at_max(i, k).unwrap();
                let ext = e.bass_number(i, VarSet::full(n), k, 0).unwrap();
                compared += 1;
                disagree += usize::from(cech != ext);
            }
            let nv = lc_nonvanishing(i).unwrap();
            let first_ext = (0..=n).find(|&k| !ext_module(i, k).unwrap().is_zero());
            let extremes_ok = nv.first() == Some(&d)
                && first_ext == Some(d)
                && nv.last() == Some(&pdim(i).unwrap());
            (compared, disagree, usize::from(!extremes_ok))
        })
        .collect();
    let compared: usize = results.iter().map(|r| r.0).sum();
    let disagree: usize = results.iter().map(|r| r.1).sum();
    let extremes: usize = results.iter().map(|r| r.2).sum();
    let pass = disagree == 0 && extremes == 0;
    (pass, format!("{compared} socle comparisons, {disagree} disagreements, {extremes} height/pdim mismatches"))
}

fn random_matrix(rng: &mut StdRng) -> QMatrix {
    let (r, c) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
    let rows = (0..r)
        .map(|_| (0..c).map(|_| rat(rng.gen_range(-3..=3))).collect())
        .collect();
    QMatrix::from_rows(rows)
}

fn property_suites(ideals: &[SquareFreeIdeal]) -> (bool, String) {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut notes = Vec::new();

    let rank_fail = (0..1000)
        .filter(|_| {
            let m = random_matrix(&mut rng);
            let ker = kernel_basis(&m);
            let in_kernel = ker.iter().all(|v| m.mul_vec(v).iter().all(Zero::is_zero));
            !(in_kernel && m.rank() + ker.len() == m.cols() && rref(&m).1.len() == m.rank())
        })
        .count();
    notes.push(format!("rank-nullity 1000 matrices: {rank_fail} failures"));

    let (strands, dd_fail): (usize, usize) = ideals
        .par_iter()
        .map(|i| {
            let mut count = 0;
            let mut bad = 0;
            for p in VarSet::full(i.nvars()).subsets() {
                let s = strand(i, p).unwrap();
                for w in s.complex.differentials().windows(2) {
                    count += 1;
                    bad += usize::from(!w[1].mul(&w[0]).unwrap().is_zero());
                }
            }
            (count, bad)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    notes.push(format!(
        "D.D=0 on {strands} strand compositions: {dd_fail} failures"
    ));

    let ab_fail = ideals
        .par_iter()
        .filter(|i| pdim(i).unwrap() + depth_from_links(i).unwrap() != i.nvars())
        .count();
    notes.push(format!(
        "Auslander-Buchsbaum on {} ideals: {ab_fail} failures",
        ideals.len()
    ));

    let trip_fail = ideals
        .iter()
        .filter(|i| {
            let sr = ideal_from_complex(&complex_from_ideal(i));
            let dual = i.alexander_dual().unwrap().alexander_dual().unwrap();
            sr.gens() != i.gens() || dual.gens() != i.gens()
        })
        .count();
    notes.push(format!(
        "SR and Alexander round trips: {trip_fail} failures"
    ));

    let mut fat_fail = 0;
    for _ in 0..50 {
        let i = &ideals[rng.gen_range(0..ideals.len())];
        let gens = i.gens();
        let mut fat = gens.to_vec();
        for _ in 0..rng.gen_range(1..=4) {
            let g = gens[rng.gen_range(0..gens.len())];
            fat.push(g.union(VarSet(rng.gen_range(0..1u64 << i.nvars()))));
        }
        let pattern = VarSet(rng.gen_range(0..1u64 << i.nvars()));
        let lean = strand(i, pattern).unwrap();
        let fattened = strand_on(&fat, pattern).unwrap();
        let mut a = lean.complex.homology_dims();
        let mut b = fattened.complex.homology_dims();
        let len = a.len().max(b.len());
        a.resize(len, 0);
        b.resize(len, 0);
        fat_fail += usize::from(a != b);
    }
    notes.push(format!(
        "lc_dim on 50 fattened generating sets: {fat_fail} failures"
    ));

    let pass = rank_fail + dd_fail + ab_fail + trip_fail + fat_fail == 0;
    (pass, notes.join("; "))
}

fn bound_checks(ideals: &[SquareFreeIdeal]) -> (bool, String) {
    let results: Vec<(bool, usize, usize)> = ideals
        .par_iter()
        .filter(|i| i.is_pure().unwrap() && i.height().unwrap() < i.nvars())
        .map(|i| {
            let mut v = Verifier::new(i).unwrap();
            let checks = v.support_and_idim_bounds().unwrap();
            let applied = checks.iter().all(|c| c.verdict != Verdict::Skipped);
            let fails = checks.iter().filter(|c| c.verdict == Verdict::Fail).count();
            let cells = checks
                .iter()
                .filter(|c| c.name == SUPPORT_BOUND || c.name == IDIM_BOUND)
                .map(|c| c.cells_checked)
                .sum();
            (applied, fails, cells)
        })
        .collect();
    let fails: usize = results.iter().map(|r| r.1).sum();
    let cells: usize = results.iter().map(|r| r.2).sum();
    let all_applied = results.iter().all(|r| r.0);
    (
        fails == 0 && all_applied,
        format!(
            "{} ideals, {cells} cells, {fails} violations",
            results.len()
        ),
    )
}

fn timed(budget: Option<Duration>, f: impl FnOnce() -> (bool, String)) -> Outcome {
    let t = Instant::now();
    let (pass, detail) = f();
    let elapsed = t.elapsed();
    let pass = pass && budget.is_none_or(|b| elapsed <= b);
    Outcome {
        pass,
        detail,
        elapsed,
        budget,
    }
}

fn main() -> ExitCode {
    let ideals = full_corpus();
    let criteria: Vec<(&str, Outcome)> = vec![
        (
            "alexandra fixture",
            timed(Some(10 * MINUTE), fixture_alexandra),
        ),
        (
            "mayer-vietoris fixture",
            timed(Some(Duration::from_secs(10)), fixture_mayer_vietoris),
        ),
        (
            "part 1 over corpus n<=5",
            timed(Some(30 * MINUTE), || corpus_part_one(&ideals)),
        ),
        ("part 3 instance", timed(None, part_three_instance)),
        (
            "oracle agreement over corpus",
            timed(None, || oracle_agreement(&ideals)),
        ),
        ("property suites", timed(None, || property_suites(&ideals))),
        (
            "support and idim bounds over corpus",
            timed(None, || bound_checks(&ideals)),
        ),
    ];
    let mut all = true;
    for (k, (name, o)) in criteria.iter().enumerate() {
        all &= o.pass;
        let budget = o
            .budget
            .map(|b| format!(" budget {}s", b.as_secs()))
            .unwrap_or_default();
        println!(
            "criterion {} {:<36} {}  [{:.2}s{}] {}",
            k + 1,
            name,
            if o.pass { "PASS" } else { "FAIL" },
            o.elapsed.as_secs_f64(),
            budget,
            o.detail
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
