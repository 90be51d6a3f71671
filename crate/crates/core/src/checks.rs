//! Randomized property suites with shrinking, as run by `ptabkit check`.

use std::fmt;

use rand::Rng;

use crate::crystal::{crystal_ptab, eps_phi, to_extreme, to_extreme_by, Direction, Extreme};
use crate::duality::{bw_in, dual_ptab_in, from_matrix, perf, rot, satisfies_word_condition, to_matrix, violations};
use crate::error::Error;
use crate::grid::Ptableau;
use crate::involution::{evacuate, lusztig, mirrored_reverse, LusztigMethod};
use crate::rsk::{classic_rsk, column_insert, ptab_rsk, ptab_rsk_stages, rsk_inverse, SsytPair};
use crate::sample::{random_instance, Instance, SampleBounds};
use crate::word::{crystal_biword, dual_biword, standardize_in, Biword};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Rsk,
    Duality,
    Lusztig,
    Crystal,
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "all" => Ok(Suite::All),
            "rsk" => Ok(Suite::Rsk),
            "duality" => Ok(Suite::Duality),
            "lusztig" => Ok(Suite::Lusztig),
            "crystal" => Ok(Suite::Crystal),
            _ => Err(Error::MalformedInput(format!("unknown suite {s:?}"))),
        }
    }
}

type Check = fn(&Instance) -> Result<(), String>;

/// Named properties of one suite.
pub fn properties(suite: Suite) -> Vec<(&'static str, Check)> {
    let rsk: Vec<(&'static str, Check)> = vec![
        ("rsk_inverse_roundtrip", rsk_roundtrip),
        ("tmax_equals_classic_q", tmax_is_classic_q),
        ("tmax_equals_greedy_highest", tmax_is_greedy_highest),
        ("pt_equals_dual_of_classic_p", pt_is_dual_of_p),
        ("classic_rsk_of_dual_swaps", classic_dual_swap),
        ("resolution_dual_to_column_insertion", stepwise_dual_insertion),
    ];
    let duality: Vec<(&'static str, Check)> = vec![
        ("perf_bw_roundtrips", perf_bw_roundtrip),
        ("dual_is_involution", dual_involution),
        ("dual_moves_each_cell", dual_cellwise),
        ("rot_is_involution", rot_involution),
        ("matrix_roundtrip_and_transpose", matrix_laws),
        ("distinguished_four_way_agreement", four_way),
    ];
    let lusztig: Vec<(&'static str, Check)> = vec![
        ("lusztig_methods_agree", lusztig_agree),
        ("lusztig_is_involution", lusztig_involution),
        ("lusztig_reverses_weight", lusztig_weight),
        ("lusztig_matches_path_oracle", lusztig_path_oracle),
        ("evacuation_reaches_lowest", evac_is_lowest),
    ];
    let crystal: Vec<(&'static str, Check)> = vec![
        ("perf_intertwines_operators", intertwining),
        ("operators_are_partial_inverses", partial_inverses),
        ("eps_phi_count_applications", eps_phi_counting),
        ("rot_swaps_raise_and_lower", rot_law),
        ("highest_weight_extends", hw_extension),
        ("extreme_independent_of_order", extreme_order),
    ];
    match suite {
        Suite::Rsk => rsk,
        Suite::Duality => duality,
        Suite::Lusztig => lusztig,
        Suite::Crystal => crystal,
        Suite::All => [rsk, duality, lusztig, crystal].concat(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckFailure {
    pub property: &'static str,
    pub instance: Instance,
    pub detail: String,
}

impl fmt::Display for CheckFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "property {} failed: {}", self.property, self.detail)?;
        writeln!(f, "biword (m={}, n={}): {}", self.instance.m(), self.instance.n(), self.instance.biword)?;
        write!(f, "ptableau:\n{}", self.instance.ptableau)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub instances: usize,
    pub checks: usize,
    pub failure: Option<CheckFailure>,
}

#[allow(clippy::result_large_err)]
pub fn check_instance(inst: &Instance, suite: Suite) -> Result<usize, CheckFailure> {
    let props = properties(suite);
    for (name, check) in &props {
        if let Err(detail) = check(inst) {
            return Err(CheckFailure { property: name, instance: inst.clone(), detail });
        }
    }
    Ok(props.len())
}

/// Runs `count` random instances, stopping at the first failure and shrinking it.
pub fn run_checks<R: Rng + ?Sized>(rng: &mut R, count: usize, suite: Suite) -> CheckReport {
    let mut checks = 0;
    for done in 0..count {
        let inst = random_instance(rng, SampleBounds::default());
        match check_instance(&inst, suite) {
            Ok(c) => checks += c,
            Err(failure) => {
                return CheckReport { instances: done + 1, checks, failure: Some(minimize(failure)) };
            }
        }
    }
    CheckReport { instances: count, checks, failure: None }
}

/// Drops biword columns and shrinks alphabets while the same property keeps failing.
pub fn minimize(failure: CheckFailure) -> CheckFailure {
    let check = properties(Suite::All).into_iter().find(|(n, _)| *n == failure.property).map(|(_, c)| c).unwrap();
    let mut best = failure;
    'shrink: loop {
        let b = &best.instance.biword;
        let pairs: Vec<(usize, usize)> = b.pairs().collect();
        let mut candidates: Vec<Biword> = (0..pairs.len())
            .map(|skip| {
                let rest: Vec<(usize, usize)> =
                    pairs.iter().enumerate().filter(|(k, _)| *k != skip).map(|(_, p)| *p).collect();
                standardize_in(&rest, b.m(), b.n()).unwrap()
            })
            .collect();
        if b.m() > 1 && b.top().iter().all(|&t| t < b.m()) {
            candidates.push(b.with_alphabets(b.m() - 1, b.n()).unwrap());
        }
        if b.n() > 1 && b.bottom().iter().all(|&w| w < b.n()) {
            candidates.push(b.with_alphabets(b.m(), b.n() - 1).unwrap());
        }
        for cand in candidates {
            let inst = Instance::from_biword(cand);
            if let Err(detail) = check(&inst) {
                best = CheckFailure { property: best.property, instance: inst, detail };
                continue 'shrink;
            }
        }
        return best;
    }
}

fn expect_eq<T: PartialEq + fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn err(e: Error) -> String {
    e.to_string()
}

/// Both sides with trailing blank rows removed, so tableaux of different row counts compare.
fn trimmed(t: &Ptableau) -> Vec<Vec<usize>> {
    let mut rows = t.row_contents().to_vec();
    while rows.last().is_some_and(Vec::is_empty) {
        rows.pop();
    }
    rows
}

fn rsk_roundtrip(inst: &Instance) -> Result<(), String> {
    let t = &inst.ptableau;
    expect_eq("rsk_inverse(ptab_rsk(T))", rsk_inverse(&ptab_rsk(t)).map_err(err)?, t.clone())
}

fn tmax_is_classic_q(inst: &Instance) -> Result<(), String> {
    let pair = ptab_rsk(&inst.ptableau);
    expect_eq("Tmax vs Q", trimmed(&pair.tmax), trimmed(&classic_rsk(&inst.biword).q))
}

fn tmax_is_greedy_highest(inst: &Instance) -> Result<(), String> {
    let pair = ptab_rsk(&inst.ptableau);
    expect_eq("Tmax vs greedy raising", pair.tmax, to_extreme(&inst.ptableau, Extreme::Highest).0)
}

fn pt_is_dual_of_p(inst: &Instance) -> Result<(), String> {
    let pair = ptab_rsk(&inst.ptableau);
    let p = classic_rsk(&inst.biword).p;
    expect_eq("PT vs dual(P)", pair.pt, dual_ptab_in(&p, inst.n()).map_err(err)?)
}

fn classic_dual_swap(inst: &Instance) -> Result<(), String> {
    let SsytPair { p, q } = classic_rsk(&inst.biword);
    let dual = classic_rsk(&dual_biword(&inst.biword));
    expect_eq("RSK of dual", (trimmed(&dual.p), trimmed(&dual.q)), (trimmed(&q), trimmed(&p)))
}

fn stepwise_dual_insertion(inst: &Instance) -> Result<(), String> {
    let mut p: Vec<Vec<usize>> = Vec::new();
    for stage in ptab_rsk_stages(&inst.ptableau) {
        column_insert(&mut p, stage.row);
        let dual = dual_ptab_in(&stage.pt, inst.n()).map_err(err)?;
        let mut want = p.clone();
        want.resize(inst.n().max(want.len()), Vec::new());
        let want = Ptableau::from_row_contents(want).map_err(err)?;
        expect_eq("dual of PT after insertion", trimmed(&dual), trimmed(&want))?;
    }
    Ok(())
}

fn perf_bw_roundtrip(inst: &Instance) -> Result<(), String> {
    let t = &inst.ptableau;
    let b = bw_in(t, inst.m()).map_err(err)?;
    expect_eq("bw(perf(b))", b.clone(), inst.biword.clone())?;
    expect_eq("perf(bw(T))", perf(&b), t.clone())
}

fn dual_involution(inst: &Instance) -> Result<(), String> {
    let t = &inst.ptableau;
    let d = dual_ptab_in(t, inst.m()).map_err(err)?;
    expect_eq("dual(dual(T))", dual_ptab_in(&d, inst.n()).map_err(err)?, t.clone())?;
    expect_eq("columns of dual", d.n_cols(), t.n_cols())
}

fn dual_cellwise(inst: &Instance) -> Result<(), String> {
    let t = &inst.ptableau;
    let mut rows = vec![Vec::new(); inst.m()];
    for cell in t.cells() {
        rows[cell.content - 1].push(cell.row);
    }
    let want = Ptableau::from_row_contents(rows).map_err(err)?;
    expect_eq("dual cell by cell", dual_ptab_in(t, inst.m()).map_err(err)?, want)
}

fn rot_involution(inst: &Instance) -> Result<(), String> {
    let t = &inst.ptableau;
    expect_eq("rot(rot(T))", rot(&rot(t, inst.m()).map_err(err)?, inst.m()).map_err(err)?, t.clone())
}

fn matrix_laws(inst: &Instance) -> Result<(), String> {
    let b = &inst.biword;
    let mat = to_matrix(b, b.m(), b.n()).map_err(err)?;
    expect_eq("from_matrix(to_matrix(b))", from_matrix(&mat), b.clone())?;
    expect_eq("matrix of dual", to_matrix(&dual_biword(b), b.n(), b.m()).map_err(err)?, mat.transpose())
}

fn four_way(inst: &Instance) -> Result<(), String> {
    let t = &inst.ptableau;
    let word = satisfies_word_condition(t);
    let clean = violations(t).is_empty();
    let dual_hw = crate::crystal::is_highest_weight(&dual_ptab_in(t, inst.m()).map_err(err)?);
    let hw = to_extreme(t, Extreme::Highest).0;
    let t_mu = hw.row_contents().iter().enumerate().all(|(r, vals)| vals.iter().all(|&v| v == r + 1));
    expect_eq("word condition / no violations / dual highest / reaches T_mu", [word, clean, dual_hw, t_mu], [word; 4])
}

fn lusztig_agree(inst: &Instance) -> Result<(), String> {
    lusztig(&inst.ptableau, LusztigMethod::Both).map(|_| ()).map_err(err)
}

fn lusztig_involution(inst: &Instance) -> Result<(), String> {
    let once = lusztig(&inst.ptableau, LusztigMethod::Uninsert).map_err(err)?;
    expect_eq("lusztig twice", lusztig(&once, LusztigMethod::Uninsert).map_err(err)?, inst.ptableau.clone())
}

fn lusztig_weight(inst: &Instance) -> Result<(), String> {
    let once = lusztig(&inst.ptableau, LusztigMethod::EStar).map_err(err)?;
    expect_eq("weight of lusztig(T)", once.weight(), inst.ptableau.weight().reversed())
}

fn lusztig_path_oracle(inst: &Instance) -> Result<(), String> {
    let t = &inst.ptableau;
    let (top, path) = to_extreme(t, Extreme::Highest);
    let tmin = evacuate(&top).map_err(err)?;
    let want = mirrored_reverse(&path, t.n_rows()).apply(&tmin).map_err(err)?;
    expect_eq("lusztig vs mirrored greedy path", lusztig(t, LusztigMethod::Uninsert).map_err(err)?, want)
}

fn evac_is_lowest(inst: &Instance) -> Result<(), String> {
    let pair = ptab_rsk(&inst.ptableau);
    expect_eq("Evac(Tmax)", evacuate(&pair.tmax).map_err(err)?, to_extreme(&inst.ptableau, Extreme::Lowest).0)
}

fn intertwining(inst: &Instance) -> Result<(), String> {
    for i in 1..inst.n() {
        for dir in [Direction::Raise, Direction::Lower] {
            let via_word = crystal_biword(&inst.biword, i, dir).map_err(err)?.map(|b| perf(&b));
            let direct = crystal_ptab(&inst.ptableau, i, dir).map_err(err)?;
            expect_eq(&format!("{dir:?} {i}"), direct, via_word)?;
        }
    }
    Ok(())
}

fn partial_inverses(inst: &Instance) -> Result<(), String> {
    let t = &inst.ptableau;
    for i in 1..inst.n() {
        for dir in [Direction::Raise, Direction::Lower] {
            if let Some(u) = crystal_ptab(t, i, dir).map_err(err)? {
                let back = crystal_ptab(&u, i, dir.reverse()).map_err(err)?;
                expect_eq(&format!("{dir:?} {i} then back"), back, Some(t.clone()))?;
                let mut w = t.weight().0;
                match dir {
                    Direction::Raise => (w[i - 1], w[i]) = (w[i - 1] + 1, w[i] - 1),
                    Direction::Lower => (w[i - 1], w[i]) = (w[i - 1] - 1, w[i] + 1),
                }
                expect_eq("weight change", u.weight().0, w)?;
            }
        }
    }
    Ok(())
}

fn eps_phi_counting(inst: &Instance) -> Result<(), String> {
    for i in 1..inst.n() {
        let (eps, phi) = eps_phi(&inst.ptableau, i).map_err(err)?;
        for (dir, want) in [(Direction::Raise, eps), (Direction::Lower, phi)] {
            let mut count = 0;
            let mut cur = inst.ptableau.clone();
            while let Some(next) = crystal_ptab(&cur, i, dir).map_err(err)? {
                cur = next;
                count += 1;
            }
            expect_eq(&format!("applications of {dir:?} {i}"), count, want)?;
        }
    }
    Ok(())
}

fn rot_law(inst: &Instance) -> Result<(), String> {
    let (t, m, n) = (&inst.ptableau, inst.m(), inst.n());
    let rt = rot(t, m).map_err(err)?;
    for i in 1..n {
        let lhs = crystal_ptab(&rt, i, Direction::Raise).map_err(err)?;
        let rhs = crystal_ptab(t, n - i, Direction::Lower).map_err(err)?.map(|u| rot(&u, m)).transpose().map_err(err)?;
        expect_eq(&format!("e{i} rot vs rot f{}", n - i), lhs, rhs)?;
    }
    Ok(())
}

fn hw_extension(inst: &Instance) -> Result<(), String> {
    let t = &inst.ptableau;
    let hw = to_extreme(t, Extreme::Highest).0;
    let c = inst.m();
    for r in 1..=inst.n() {
        let Ok(ext) = t.extend(c, r) else { continue };
        let hw_ext = to_extreme(&ext, Extreme::Highest).0;
        let ok = (1..=inst.n()).any(|r2| {
            let mut rows = hw.row_contents().to_vec();
            rows[r2 - 1].push(c);
            Ptableau::from_row_contents(rows).is_ok_and(|cand| cand == hw_ext)
        });
        if !ok {
            return Err(format!("highest weight of T ⊗ [{c}]_{r} is {hw_ext:?}, not an extension of {hw:?}"));
        }
    }
    Ok(())
}

fn extreme_order(inst: &Instance) -> Result<(), String> {
    let t = &inst.ptableau;
    for target in [Extreme::Highest, Extreme::Lowest] {
        expect_eq(&format!("{target:?}"), to_extreme_by(t, target, true).0, to_extreme(t, target).0)?;
    }
    Ok(())
}
