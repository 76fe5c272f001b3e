//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use alcove_lab::adm_perm::{self, is_permissible_alcove, is_permissible_def};
use alcove_lab::bruhat;
use alcove_lab::iwahori_weyl::{
    basic_inequalities_hold, from_extended_alcove, mu_vectors, nu_vectors, to_extended_alcove,
};
use alcove_lab::json;
use alcove_lab::oracle::{self, HullOracle};
use alcove_lab::root_data::{Family, GroupCtx};
use alcove_lab::signed_weyl::SignedPerm;
use alcove_lab::{Error, Guards, IWElement, Rat};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ctx(s: &str) -> GroupCtx {
    s.parse().unwrap()
}

fn fail<T>(msg: impl Into<String>) -> Result<T, String> {
    Err(msg.into())
}

fn e(err: Error) -> String {
    err.to_string()
}

fn box_elements(g: &GroupCtx, bound: i64) -> Vec<IWElement> {
    let n = g.rank();
    let linear = g.linear_parts().unwrap();
    let mut ts: Vec<Vec<i64>> = vec![vec![]];
    for _ in 0..n {
        ts = ts
            .into_iter()
            .flat_map(|t| {
                (-bound..=bound).map(move |x| {
                    let mut t = t.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    ts.iter()
        .flat_map(|t| linear.iter().map(move |s| IWElement::new(t.clone(), s.clone()).unwrap()))
        .collect()
}

fn standard_mu_equality() -> Outcome {
    let start = Instant::now();
    let g = Guards::default();
    let mut sizes = Vec::new();
    for fam in [Family::D, Family::B] {
        for n in 2..=4 {
            let c = GroupCtx::new(fam, n).map_err(e)?;
            let mu = c.standard_mu();
            let adm = adm_perm::admissible_set(&c, &mu, &g).map_err(e)?;
            let perm = adm_perm::permissible_set(&c, &mu).map_err(e)?;
            if adm != perm {
                return fail(format!(
                    "{c}: |Adm| = {}, |Perm| = {}, |Perm \\ Adm| = {}",
                    adm.len(),
                    perm.len(),
                    perm.difference(&adm).count()
                ));
            }
            sizes.push(format!("{c}:{}", adm.len()));
        }
    }
    let t = start.elapsed();
    if t > Duration::from_secs(60) {
        return fail(format!("runtime {t:?} exceeds 60 s"));
    }
    Ok(format!("Adm = Perm for {} in {t:.2?}", sizes.join(" ")))
}

fn adm_in_perm_scan() -> Outcome {
    let g = Guards::default();
    let (mut checked, mut skipped) = (0, 0);
    for fam in [Family::A, Family::B, Family::C, Family::D] {
        for n in 1..=3 {
            let c = match GroupCtx::new(fam, n) {
                Ok(c) => c,
                Err(Error::UnsupportedRank { .. }) => continue,
                Err(err) => return fail(e(err)),
            };
            for mu in oracle::dominant_scan(&c, 2) {
                match adm_perm::compare(&c, &mu, &g) {
                    Ok(cmp) => {
                        if !cmp.adm_subset() {
                            return fail(format!("{c} μ = {mu:?}: {} violations", cmp.violations.len()));
                        }
                        checked += 1;
                    }
                    Err(Error::GuardExceeded { .. }) => skipped += 1,
                    Err(err) => return fail(e(err)),
                }
            }
        }
    }
    Ok(format!("{checked} (ctx, μ) pairs, 0 violations, {skipped} over the length guard"))
}

fn alcove_characterization() -> Outcome {
    let mut count = 0;
    for c in ["D:2", "D:3", "B:2", "B:3"] {
        let g = ctx(c);
        let mu = g.standard_mu();
        let t_mu = IWElement::translation_by(mu.clone());
        for w in box_elements(&g, 2) {
            if !bruhat::same_wa_coset(&g, &w, &t_mu).map_err(e)? {
                continue;
            }
            count += 1;
            let def = is_permissible_def(&g, &mu, &w).map_err(e)?;
            let alc = is_permissible_alcove(&g, &w).map_err(e)?;
            if def != alc {
                return fail(format!("{c} {w}: definition {def}, alcove test {alc}"));
            }
        }
    }
    Ok(format!("{count} coset elements with translation in [-2,2]^n, 0 disagreements"))
}

fn lifting() -> Outcome {
    let mut count = 0;
    for c in ["D:2", "D:3"] {
        let g = ctx(c);
        let mu = g.standard_mu();
        let top = bruhat::length(&g, &IWElement::translation_by(mu.clone())).map_err(e)?;
        for w in adm_perm::permissible_set(&g, &mu).map_err(e)? {
            let t = IWElement::translation_by(w.translation().to_vec());
            if !bruhat::leq(&g, &w, &t).map_err(e)? {
                return fail(format!("{c} {w} is not below its translation part"));
            }
            if w.is_translation() {
                continue;
            }
            count += 1;
            let root = adm_perm::lift_reflection(&g, &w).map_err(e)?;
            let sw = root.reflection().multiply(&w).map_err(e)?;
            if !is_permissible_def(&g, &mu, &sw).map_err(e)? {
                return fail(format!("{c} {w} {root}: s·w not permissible"));
            }
            let up = bruhat::leq(&g, &w, &sw).map_err(e)?
                && bruhat::length(&g, &sw).map_err(e)? > bruhat::length(&g, &w).map_err(e)?;
            if !up {
                return fail(format!("{c} {w} {root}: no Bruhat increase"));
            }
            if sw.translation() != w.translation() {
                return fail(format!("{c} {w} {root}: translation part changed"));
            }
            let chain = adm_perm::lift_chain(&g, &w).map_err(e)?;
            if chain.len() > top || chain.last().map(|s| &s.after) != Some(&t) {
                return fail(format!("{c} {w}: chain of {} steps does not end at {t}", chain.len()));
            }
        }
    }
    Ok(format!("{count} non-translation permissible elements lifted and verified"))
}

fn inheritance() -> Outcome {
    let start = Instant::now();
    let r = adm_perm::check_bruhat_inheritance(2, 4, &Guards::default()).map_err(e)?;
    let t = start.elapsed();
    if !r.violations.is_empty() {
        let (x, y) = &r.violations[0];
        return fail(format!("{} violations, first ({x}, {y})", r.violations.len()));
    }
    if t > Duration::from_secs(120) {
        return fail(format!("runtime {t:?} exceeds 120 s"));
    }
    Ok(format!("{} pairs over {} elements, 0 violations in {t:.2?}", r.pairs, r.elements))
}

/// A random element of length at most `len` in the coset of `omega`,
/// together with the word used to build it.
fn random_word(g: &GroupCtx, rng: &mut ChaCha8Rng, len: usize, omega: &IWElement) -> (IWElement, Vec<usize>) {
    let k = rng.gen_range(0..=len);
    let word: Vec<usize> = (0..k).map(|_| rng.gen_range(0..g.walls().len())).collect();
    let mut w = omega.clone();
    for &s in word.iter().rev() {
        w = g.walls()[s].reflection.multiply(&w).unwrap();
    }
    (w, word)
}

fn oracle_equivalence() -> Outcome {
    let g = Guards::default();
    let mut report = Vec::new();

    // Bruhat order against the subword criterion.
    let d2 = ctx("D:2");
    let mut ball = Vec::new();
    for rep in [IWElement::identity(2), IWElement::translation_by(vec![1, 0])] {
        ball.extend(bruhat::ball(&d2, 5, &rep, &g).map_err(e)?);
    }
    let mut pairs = 0;
    for x in &ball {
        for y in &ball {
            pairs += 1;
            if bruhat::leq(&d2, x, y).map_err(e)? != oracle::leq_subword(&d2, x, y, &g).map_err(e)? {
                return fail(format!("D:2 leq disagrees on ({x}, {y})"));
            }
        }
    }
    report.push(format!("leq D:2 {pairs} pairs"));

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut trues = 0;
    for c in ["D:3", "B:3"] {
        let gc = ctx(c);
        let omegas = [IWElement::identity(3), bruhat::omega_part(&gc, &IWElement::translation_by(vec![1, 0, 0])).map_err(e)?];
        for _ in 0..2000 {
            let omega = omegas.choose(&mut rng).unwrap();
            let (y, word) = random_word(&gc, &mut rng, g.subword_max_len, omega);
            // half the time, x is a subword product of y's word
            let x = if rng.gen_bool(0.5) {
                let mut x = omega.clone();
                for &s in word.iter().rev() {
                    if rng.gen_bool(0.5) {
                        x = gc.walls()[s].reflection.multiply(&x).unwrap();
                    }
                }
                x
            } else {
                let other = omegas.choose(&mut rng).unwrap().clone();
                random_word(&gc, &mut rng, g.subword_max_len, &other).0
            };
            let fast = bruhat::leq(&gc, &x, &y).map_err(e)?;
            if fast != oracle::leq_subword(&gc, &x, &y, &g).map_err(e)? {
                return fail(format!("{c} leq disagrees on ({x}, {y})"));
            }
            trues += usize::from(fast);
        }
    }
    report.push(format!("leq D:3/B:3 2×2000 random pairs ({trues} related)"));

    // Hull membership against facet enumeration.
    let mut points = 0;
    for (c, mus) in [
        ("A:2", vec![vec![1, 0], vec![2, 1]]),
        ("A:3", vec![vec![1, 0, 0], vec![2, 1, 0]]),
        ("B:2", vec![vec![1, 0], vec![2, 1]]),
        ("B:3", vec![vec![1, 0, 0], vec![1, 1, 0], vec![2, 1, 1]]),
        ("C:2", vec![vec![1, 1], vec![2, 0]]),
        ("C:3", vec![vec![1, 1, 0]]),
        ("D:2", vec![vec![1, 0], vec![1, 1]]),
        ("D:3", vec![vec![1, 0, 0], vec![1, 1, 1], vec![2, 1, 0]]),
    ] {
        let gc = ctx(c);
        for mu in mus {
            let hull = HullOracle::new(&gc, &mu, &g).map_err(e)?;
            let bound = mu.iter().map(|x| x.abs()).max().unwrap();
            for x in oracle::rational_grid(gc.rank(), 4, bound) {
                points += 1;
                if gc.in_convex_hull(&mu, &x).map_err(e)? != hull.contains(&x) {
                    return fail(format!("{c} μ = {mu:?}: hull disagrees at {x:?}"));
                }
            }
        }
    }
    report.push(format!("hull {points} grid points"));

    // Adm against ball + subword filter.
    let mut sets = 0;
    for (c, mus) in [
        ("B:2", vec![vec![1, 0], vec![1, 1], vec![2, 0], vec![2, 1]]),
        ("D:2", vec![vec![1, 0], vec![1, 1], vec![2, 0], vec![2, 1], vec![2, 2]]),
    ] {
        let gc = ctx(c);
        for mu in mus {
            let fast = adm_perm::admissible_set(&gc, &mu, &g).map_err(e)?;
            let slow = oracle::admissible_bruteforce(&gc, &mu, &g).map_err(e)?;
            if fast != slow {
                return fail(format!("{c} μ = {mu:?}: |Adm| {} vs oracle {}", fast.len(), slow.len()));
            }
            sets += 1;
        }
    }
    report.push(format!("Adm {sets} sets"));
    Ok(format!("100% agreement: {}", report.join(", ")))
}

/// `σ` even iff `μ_0 − μ_n` lies in the embedded coroot lattice.
fn parity_holds(g: &GroupCtx, w: &IWElement) -> bool {
    let n = g.rank();
    let mus = mu_vectors(g, w).unwrap();
    let d: Vec<i64> = mus[0].iter().zip(&mus[n]).map(|(a, b)| a - b).collect();
    let m = 2 * n;
    let embedded = (0..m).all(|i| d[i] == -d[m - 1 - i]);
    let even_sum = d[..n].iter().sum::<i64>() % 2 == 0;
    (embedded && even_sum) == w.linear().is_even_in_s2n()
}

/// `½(e_i − e_j + e_{j*} − e_{i*})` for some `i, j`, in doubled coordinates.
fn nu_shape_holds(nu: &[Rat]) -> bool {
    let m = nu.len();
    let doubled: Vec<i64> = nu
        .iter()
        .map(|x| {
            let y = x * Rat::from_integer(2);
            if y.is_integer() { *y.numer() } else { i64::MAX }
        })
        .collect();
    for i in 0..m {
        for j in 0..m {
            let mut v = vec![0i64; m];
            v[i] += 1;
            v[j] -= 1;
            v[m - 1 - j] += 1;
            v[m - 1 - i] -= 1;
            if v == doubled {
                return true;
            }
        }
    }
    false
}

fn invariant_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0xa1c0);
    let mut sampled = 0;
    for fam in [Family::B, Family::D] {
        for n in 2..=4 {
            let g = GroupCtx::new(fam, n).map_err(e)?;
            let linear = g.linear_parts().map_err(e)?;
            for _ in 0..1000 {
                let t: Vec<i64> = (0..n).map(|_| rng.gen_range(-5..=5)).collect();
                let s: SignedPerm = linear.choose(&mut rng).unwrap().clone();
                let w = IWElement::new(t, s).map_err(e)?;
                if !basic_inequalities_hold(&g, &w).map_err(e)? {
                    return fail(format!("{g} {w}: basic inequalities fail"));
                }
                if !parity_holds(&g, &w) {
                    return fail(format!("{g} {w}: parity fails"));
                }
                let alc = to_extended_alcove(&g, &w).map_err(e)?;
                if from_extended_alcove(&g, &alc).map_err(e)? != w {
                    return fail(format!("{g} {w}: extended alcove round trip fails"));
                }
                sampled += 1;
            }
        }
    }
    let mut perm_count = 0;
    for c in ["D:2", "D:3", "B:2", "B:3"] {
        let g = ctx(c);
        for w in adm_perm::permissible_set(&g, &g.standard_mu()).map_err(e)? {
            let nus = nu_vectors(&g, &w).map_err(e)?;
            if let Some(nu) = nus.iter().find(|nu| !nu_shape_holds(nu)) {
                return fail(format!("{c} {w}: ν = {nu:?} has the wrong shape"));
            }
            perm_count += 1;
        }
    }
    Ok(format!("{sampled} random elements, {perm_count} permissible elements checked for ν_k shape"))
}

fn gap_existence() -> Outcome {
    let g = Guards::default().raised_to(18);
    let b3 = ctx("B:3");
    let scan = oracle::dominant_scan(&b3, 2);
    let reports = adm_perm::search_gap(&b3, &scan, &g).map_err(e)?;
    let Some(first) = reports.first() else {
        return fail(format!("no gap among {} dominant μ", scan.len()));
    };
    let witness = &first.witnesses[0];
    let text = json::element_to_string(&b3, witness);
    let (pctx, parsed) = json::parse_element(&text).map_err(e)?;
    if pctx != b3 || &parsed != witness {
        return fail(format!("witness {text} does not round-trip"));
    }
    let top = bruhat::length(&b3, &IWElement::translation_by(first.mu.clone())).map_err(e)?;
    let og = Guards::default().raised_to(top);
    for mu in b3.weyl_orbit(&first.mu).map_err(e)? {
        if oracle::leq_subword(&b3, &parsed, &IWElement::translation_by(mu.clone()), &og).map_err(e)? {
            return fail(format!("witness {text} lies below t_{mu:?}"));
        }
    }
    let hull = HullOracle::new(&b3, &first.mu, &og).map_err(e)?;
    let t_mu = IWElement::translation_by(first.mu.clone());
    let permissible = bruhat::same_wa_coset(&b3, &parsed, &t_mu).map_err(e)?
        && adm_perm::vertex_displacements(&b3, &parsed).iter().all(|d| hull.contains(d));
    if !permissible {
        return fail(format!("witness {text} is not permissible by the hull oracle"));
    }
    let gaps: BTreeSet<String> = reports.iter().map(|r| format!("{:?}", r.mu)).collect();
    Ok(format!(
        "gaps at μ ∈ {{{}}}; witness {text} for μ = {:?} re-verified",
        gaps.into_iter().collect::<Vec<_>>().join(", "),
        first.mu
    ))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 Adm = Perm for (1,0,…,0)", standard_mu_equality),
        ("2 Adm ⊆ Perm scan", adm_in_perm_scan),
        ("3 alcove characterization", alcove_characterization),
        ("4 reflection lifting", lifting),
        ("5 Bruhat inheritance", inheritance),
        ("6 oracle equivalence", oracle_equivalence),
        ("7 invariant suites", invariant_suites),
        ("8 gap existence", gap_existence),
    ];
    let mut failed = 0;
    for (name, f) in criteria {
        let start = Instant::now();
        match f() {
            Ok(msg) => println!("PASS  {name}: {msg} [{:.2?}]", start.elapsed()),
            Err(msg) => {
                failed += 1;
                println!("FAIL  {name}: {msg} [{:.2?}]", start.elapsed());
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
